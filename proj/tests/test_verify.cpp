#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>

#include <json.hpp>

#include "catalog.hpp"
#include "specfile.hpp"
#include "verify.hpp"

using namespace qrr;

TEST_CASE("catalog shape") {
  const auto& entries = catalog();
  CHECK(entries.size() >= 34);
  std::set<std::string> names;
  for (const auto& e : entries) {
    CHECK(names.insert(e.name).second);  // unique
    CHECK(e.check);
  }
  CHECK(names.count("rr-1") == 1);
  CHECK(names.count("a22-l5-a0") == 1);
  CHECK(names.count("conj-f3-L5") == 1);
  CHECK(find_entry("rr-1") != nullptr);
  CHECK(find_entry("definitely-not-here") == nullptr);
}

TEST_CASE("verify_entry") {
  CHECK(verify_entry("rr-1", 40).verified);
  CHECK(verify_entry("a22-l5-a0", 0).verified);
  CHECK_THROWS_AS(verify_entry("definitely-not-here", 10), usage_error);
}

TEST_CASE("a corrupted linear coefficient is detected early") {
  for (const auto& e : catalog()) {
    if (e.status != StatusClaim::theorem) continue;
    for (size_t i = 0; i < e.mutations.size(); ++i) {
      INFO(e.name << " coefficient " << i);
      CHECK(e.mutations[i](25));
    }
  }
}

TEST_CASE("verify_all") {
  SUBCASE("order 0 is trivially verified everywhere") {
    for (const auto& r : verify_all(0, "all"))
      CHECK(r.verified);
  }
  SUBCASE("reports are sorted by name and deterministic") {
    auto a = verify_all(30, "all", 4);
    auto b = verify_all(30, "all", 1);
    REQUIRE(a.size() == b.size());
    for (size_t i = 0; i < a.size(); ++i) {
      CHECK(a[i].name == b[i].name);
      CHECK(a[i].verified == b[i].verified);
      if (i) CHECK(a[i - 1].name < a[i].name);
    }
  }
  SUBCASE("filters") {
    CHECK(verify_all(10, "slater-*").size() == 6);
    CHECK(verify_all(10, "rr-1,rr-2").size() == 2);
    size_t thms = verify_all(10, "theorems").size();
    size_t conjs = verify_all(10, "conjectures").size();
    CHECK(conjs == 7);
    CHECK(thms + conjs == catalog().size());
    CHECK(verify_all(10, "no-such-*").empty());
  }
  SUBCASE("monotonicity spot check") {
    for (int n : {5, 15, 45}) CHECK(verify_entry("a22-l5-a1", n).verified);
  }
}

TEST_CASE("finite summation lemmas") {
  for (int part = 1; part <= 3; ++part) {
    INFO("part " << part);
    CHECK(check_lemma2(part, 10, 40).verified);
  }
  CHECK_THROWS_AS(check_lemma2(0, 5, 20), usage_error);
  CHECK_THROWS_AS(check_lemma2(4, 5, 20), usage_error);
}

TEST_CASE("telescoping certificate") {
  VerifyReport r = check_wz(8, 40);
  INFO(r.detail);
  CHECK(r.verified);
}

TEST_CASE("q-difference equation, both parameters") {
  for (int a : {1, 2}) {
    VerifyReport r = check_qdiff_capparelli(a, 6, 30);
    INFO(r.detail);
    CHECK(r.verified);
  }
}

TEST_CASE("JSON report document") {
  auto reports = verify_all(20, "rr-*");
  auto doc = nlohmann::json::parse(reports_to_json(20, reports));
  CHECK(doc["order"] == 20);
  REQUIRE(doc["entries"].size() == 2);
  const auto& e = doc["entries"][0];
  CHECK(e["name"] == "rr-1");
  CHECK(e["status_claim"] == "theorem");
  CHECK(e["outcome"] == "verified");
  CHECK(e["first_mismatch"].is_null());
  CHECK(e["elapsed_ms"].is_number());
  CHECK(e["term_count"].is_number());

  /* mismatch serialization, coefficients as decimal strings */
  VerifyReport bad;
  bad.name = "synthetic";
  bad.order = 20;
  bad.verified = false;
  bad.mismatch = Mismatch{0, 7, Int("123456789012345678901234567890"), Int(4)};
  auto doc2 = nlohmann::json::parse(reports_to_json(20, {bad}));
  const auto& m = doc2["entries"][0]["first_mismatch"];
  CHECK(doc2["entries"][0]["outcome"] == "mismatch");
  CHECK(m["exponent"] == 7);
  CHECK(m["lhs"] == "123456789012345678901234567890");
  CHECK(m["rhs"] == "4");
}

TEST_CASE("check documents from disk") {
  auto write = [](const char* path, const char* text) {
    std::ofstream out(path);
    out << text;
  };
  const char* good = "/tmp/qrr_check_good.json";
  write(good,
        R"({"name":"rr check","sum":{"s":1,"diag":[2],"cross":[],
            "linear":[1],"sign":[0],"denom_step":[1]},
            "product":{"factors":[{"kind":"bracket","a":1,"m":5,
            "count":"inf","power":-1}]}})");
  VerifyReport r = check_spec_file(good, 60);
  CHECK(r.verified);
  CHECK(r.name == "rr check");

  const char* bad = "/tmp/qrr_check_bad.json";
  write(bad,
        R"({"single":{"alpha":1,"beta":1,"offset":0},
            "product":{"factors":[{"kind":"bracket","a":1,"m":5,
            "power":-1}]}})");
  VerifyReport rb = check_spec_file(bad, 20);
  CHECK(!rb.verified);
  REQUIRE(rb.mismatch.has_value());
  CHECK(rb.mismatch->q_exp <= 3);

  const char* corrupt = "/tmp/qrr_check_corrupt.json";
  write(corrupt, "this is not json");
  CHECK_THROWS_AS(check_spec_file(corrupt, 20), usage_error);
  CHECK_THROWS_AS(check_spec_file("/tmp/qrr_no_such_file.json", 20),
                  usage_error);

  const char* badspec = "/tmp/qrr_check_badspec.json";
  write(badspec,
        R"({"sum":{"s":1,"diag":[0],"cross":[],"linear":[1],"sign":[0],
            "denom_step":[1]},"product":{"factors":[]}})");
  CHECK_THROWS_AS(check_spec_file(badspec, 20), usage_error);

  std::remove(good);
  std::remove(bad);
  std::remove(corrupt);
  std::remove(badspec);
}

TEST_CASE("filter matching") {
  const CatalogEntry* rr = find_entry("rr-1");
  REQUIRE(rr);
  CHECK(matches_filter(*rr, "all"));
  CHECK(matches_filter(*rr, "rr-*"));
  CHECK(matches_filter(*rr, "theorems"));
  CHECK(!matches_filter(*rr, "conjectures"));
  CHECK(matches_filter(*rr, "ag-*,rr-1"));
  CHECK(!matches_filter(*rr, "ag-*,slater-*"));
  CHECK(matches_filter(*rr, "*"));
}
