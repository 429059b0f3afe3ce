#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstring>
#include <string>

#include "qrr.h"

namespace {

std::string take(char* s) {
  std::string out = s ? s : "";
  qrr_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("catalog listing and metadata") {
  char* names = nullptr;
  REQUIRE(qrr_catalog_names(&names) == QRR_OK);
  std::string all = take(names);
  CHECK(all.find("rr-1\n") != std::string::npos);
  CHECK(all.find("conj-f1-L3\n") != std::string::npos);

  qrr_claim claim;
  REQUIRE(qrr_entry_claim("rr-1", &claim) == QRR_OK);
  CHECK(claim == QRR_CLAIM_THEOREM);
  REQUIRE(qrr_entry_claim("conj-f1-L3", &claim) == QRR_OK);
  CHECK(claim == QRR_CLAIM_CONJECTURE);

  char* ref = nullptr;
  REQUIRE(qrr_entry_reference("rr-1", &ref) == QRR_OK);
  CHECK(!take(ref).empty());
}

TEST_CASE("errors set a message and a usage status") {
  qrr_claim claim;
  CHECK(qrr_entry_claim("definitely-not-here", &claim) == QRR_ERR_USAGE);
  CHECK(std::strlen(qrr_last_error()) > 0);
  CHECK(qrr_entry_claim(nullptr, &claim) == QRR_ERR_USAGE);
  /* near-match listing for a typo */
  CHECK(qrr_entry_claim("rr-", &claim) == QRR_ERR_USAGE);
  CHECK(std::string(qrr_last_error()).find("rr-1") != std::string::npos);
}

TEST_CASE("single-entry verification") {
  qrr_report* rep = nullptr;
  REQUIRE(qrr_verify("rr-1", 40, &rep) == QRR_OK);
  CHECK(qrr_report_verified(rep) == 1);
  CHECK(qrr_report_claim(rep) == QRR_CLAIM_THEOREM);
  CHECK(qrr_report_term_count(rep) > 0);
  CHECK(qrr_report_elapsed_ms(rep) >= 0);
  CHECK(qrr_report_mismatch_exponent(rep) == -1);
  char* text = nullptr;
  REQUIRE(qrr_report_text(rep, &text) == QRR_OK);
  CHECK(take(text).find("verified") != std::string::npos);
  qrr_report_free(rep);

  CHECK(qrr_verify("definitely-not-here", 40, &rep) == QRR_ERR_USAGE);
}

TEST_CASE("bulk verification with text and JSON output") {
  char* text = nullptr;
  char* json = nullptr;
  int thm = -1, conj = -1;
  REQUIRE(qrr_verify_all(20, "rr-*", 2, &text, &json, &thm, &conj) == QRR_OK);
  std::string t = take(text), j = take(json);
  CHECK(t.find("rr-1 order=20 verified") != std::string::npos);
  CHECK(t.find("rr-2 order=20 verified") != std::string::npos);
  CHECK(j.find("\"order\": 20") != std::string::npos);
  CHECK(thm == 0);
  CHECK(conj == 0);
  /* all outputs optional */
  REQUIRE(qrr_verify_all(5, "rr-1", 1, nullptr, nullptr, nullptr, nullptr) ==
          QRR_OK);
}

TEST_CASE("structured checks") {
  qrr_report* rep = nullptr;
  REQUIRE(qrr_check_lemma(1, 5, 20, &rep) == QRR_OK);
  CHECK(qrr_report_verified(rep) == 1);
  qrr_report_free(rep);

  REQUIRE(qrr_check_wz(5, 25, &rep) == QRR_OK);
  CHECK(qrr_report_verified(rep) == 1);
  qrr_report_free(rep);

  REQUIRE(qrr_check_qdiff(2, 4, 20, &rep) == QRR_OK);
  CHECK(qrr_report_verified(rep) == 1);
  qrr_report_free(rep);

  CHECK(qrr_check_qdiff(3, 4, 20, &rep) == QRR_ERR_USAGE);
  CHECK(qrr_check_spec_file("/tmp/qrr_capi_no_such.json", 10, &rep) ==
        QRR_ERR_USAGE);
}

TEST_CASE("series and partition counts") {
  char* s = nullptr;
  REQUIRE(qrr_series("rr-1", 4, &s) == QRR_OK);
  CHECK(take(s) == "1 1 1 1 2");

  long long c = 0;
  REQUIRE(qrr_partition_count("cap-c,1", 6, &c) == QRR_OK);
  CHECK(c == 2);
  CHECK(qrr_partition_count("nonsense", 6, &c) == QRR_ERR_USAGE);
}
