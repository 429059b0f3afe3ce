#include "specfile.hpp"

#include <chrono>
#include <fstream>

#include <json.hpp>

namespace qrr {

namespace {

using nlohmann::json;

MultisumSpec multisum_from_json(const json& j) {
  MultisumSpec sp;
  try {
    sp.s = j.at("s").get<int>();
    sp.diag = j.at("diag").get<std::vector<int>>();
    sp.linear = j.at("linear").get<std::vector<long>>();
    sp.sign = j.at("sign").get<std::vector<int>>();
    sp.denom_step = j.at("denom_step").get<std::vector<int>>();
    if (j.contains("x_weight"))
      sp.x_weight = j.at("x_weight").get<std::vector<int>>();
    const json& cr = j.at("cross");
    if (!cr.empty() && cr.front().is_array()) {
      sp.cross = cr.get<std::vector<std::vector<int>>>();
    } else {
      /* Flat upper triangle in (j,k) lexicographic order. */
      std::vector<int> flat = cr.get<std::vector<int>>();
      sp.cross.assign(sp.s, std::vector<int>(sp.s, 0));
      size_t t = 0;
      for (int a = 0; a < sp.s; ++a)
        for (int b = a + 1; b < sp.s; ++b) {
          if (t >= flat.size())
            throw usage_error("cross: too few upper-triangle entries");
          sp.cross[a][b] = sp.cross[b][a] = flat[t++];
        }
      if (t != flat.size())
        throw usage_error("cross: too many upper-triangle entries");
    }
    if (j.contains("tail")) {
      TailFactor t;
      const json& jt = j.at("tail");
      t.x_exp = jt.value("x_exp", 0);
      t.c0 = jt.at("c0").get<int>();
      t.c = jt.at("c").get<std::vector<int>>();
      sp.tail = t;
    }
  } catch (const json::exception& ex) {
    throw usage_error(std::string("sum spec: ") + ex.what());
  }
  sp.validate();
  return sp;
}

ProductSpec product_from_json(const json& j) {
  ProductSpec p;
  try {
    for (const json& jf : j.at("factors")) {
      ProductFactor f;
      std::string kind = jf.at("kind").get<std::string>();
      if (kind == "bracket")
        f.kind = ProductFactor::Kind::bracket;
      else if (kind == "pochhammer")
        f.kind = ProductFactor::Kind::pochhammer;
      else
        throw usage_error("product factor kind must be bracket or pochhammer");
      f.sign = jf.value("sign", +1);
      f.a = jf.at("a").get<int>();
      f.m = jf.at("m").get<int>();
      f.power = jf.value("power", +1);
      if (jf.contains("count") && jf.at("count").is_number())
        f.count = jf.at("count").get<int>();
      else
        f.count = kInf;
      if (f.sign != 1 && f.sign != -1)
        throw usage_error("product factor sign must be +-1");
      if (f.power != 1 && f.power != -1)
        throw usage_error("product factor power must be +-1");
      p.factors.push_back(f);
    }
  } catch (const json::exception& ex) {
    throw usage_error(std::string("product spec: ") + ex.what());
  }
  return p;
}

}  // namespace

MultisumSpec parse_multisum_json(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw usage_error("sum spec: invalid JSON");
  return multisum_from_json(j);
}

ProductSpec parse_product_json(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw usage_error("product spec: invalid JSON");
  return product_from_json(j);
}

VerifyReport check_spec_file(const std::string& path, int order) {
  std::ifstream in(path);
  if (!in) throw usage_error("cannot read spec file '" + path + "'");
  json doc = json::parse(in, nullptr, false);
  if (doc.is_discarded())
    throw usage_error("spec file '" + path + "': invalid JSON");

  VerifyReport r;
  r.name = doc.value("name", path);
  r.order = order;
  r.status = StatusClaim::theorem;

  auto t0 = std::chrono::steady_clock::now();
  EvalStats stats;
  QSeries lhs(order);
  if (doc.contains("sum")) {
    lhs = eval(multisum_from_json(doc.at("sum")), order, &stats);
  } else if (doc.contains("single")) {
    const json& js = doc.at("single");
    SingleSum s{js.at("alpha").get<int>(), js.at("beta").get<int>(),
                js.value("offset", 0)};
    lhs = eval_single(s, order, &stats);
  } else {
    throw usage_error("spec file needs a 'sum' or 'single' document");
  }
  if (!doc.contains("product"))
    throw usage_error("spec file needs a 'product' document");
  QSeries rhs = eval_product(product_from_json(doc.at("product")), order);

  r.term_count = stats.terms;
  if (auto n = lhs.first_mismatch(rhs))
    r.mismatch = Mismatch{0, *n, lhs[*n], rhs[*n]};
  r.verified = !r.mismatch.has_value();
  r.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - t0)
                     .count();
  return r;
}

}  // namespace qrr
