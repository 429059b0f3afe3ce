#include "verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <thread>

#include <json.hpp>

#include "partitions.hpp"

namespace qrr {

namespace {

long now_ms() {
  using namespace std::chrono;
  return duration_cast<milliseconds>(steady_clock::now().time_since_epoch())
      .count();
}

VerifyReport run_check(std::string name, StatusClaim status, int order,
                       const std::function<CheckResult(int)>& check) {
  VerifyReport r;
  r.name = std::move(name);
  r.order = order;
  r.status = status;
  long t0 = now_ms();
  CheckResult c = check(order);
  r.elapsed_ms = now_ms() - t0;
  r.mismatch = c.mismatch;
  r.verified = !c.mismatch.has_value();
  r.term_count = c.term_count;
  r.detail = c.detail;
  return r;
}

bool glob_match(const std::string& pat, const std::string& text) {
  /* '*' wildcard only; classic two-pointer scan. */
  size_t p = 0, t = 0, star = std::string::npos, mark = 0;
  while (t < text.size()) {
    if (p < pat.size() && (pat[p] == text[t])) {
      ++p, ++t;
    } else if (p < pat.size() && pat[p] == '*') {
      star = p++;
      mark = t;
    } else if (star != std::string::npos) {
      p = star + 1;
      t = ++mark;
    } else {
      return false;
    }
  }
  while (p < pat.size() && pat[p] == '*') ++p;
  return p == pat.size();
}

}  // namespace

bool matches_filter(const CatalogEntry& e, const std::string& filter) {
  if (filter.empty() || filter == "all") return true;
  if (filter == "theorems") return e.status == StatusClaim::theorem;
  if (filter == "conjectures") return e.status == StatusClaim::conjecture;
  /* Comma-separated list of globs. */
  size_t start = 0;
  while (start <= filter.size()) {
    size_t comma = filter.find(',', start);
    if (comma == std::string::npos) comma = filter.size();
    if (glob_match(filter.substr(start, comma - start), e.name)) return true;
    start = comma + 1;
  }
  return false;
}

VerifyReport verify_entry(const std::string& name, int order) {
  const CatalogEntry* e = find_entry(name);
  if (!e) throw usage_error("unknown catalog entry '" + name + "'");
  return run_check(e->name, e->status, order, e->check);
}

std::vector<VerifyReport> verify_all(int order, const std::string& filter,
                                     int parallelism) {
  std::vector<const CatalogEntry*> selected;
  for (const CatalogEntry& e : catalog())
    if (matches_filter(e, filter)) selected.push_back(&e);

  std::vector<VerifyReport> reports(selected.size());
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (;;) {
      size_t i = next.fetch_add(1);
      if (i >= selected.size()) return;
      reports[i] = run_check(selected[i]->name, selected[i]->status, order,
                             selected[i]->check);
    }
  };
  int nthreads = std::max(1, std::min<int>(parallelism, (int)selected.size()));
  if (nthreads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  std::sort(reports.begin(), reports.end(),
            [](const VerifyReport& a, const VerifyReport& b) {
              return a.name < b.name;
            });
  return reports;
}

namespace {

/* Shared Pochhammer caches for the lemma and WZ checks. */
struct PochCache {
  std::vector<QSeries> poch1, inv1, inv2;
  PochCache(int n_max, int order) {
    for (int n = 0; n <= n_max; ++n) {
      poch1.push_back(pochhammer({+1, 1}, 1, n, order));
      inv1.push_back(poch1.back().inverted());
      inv2.push_back(pochhammer({+1, 2}, 2, n, order).inverted());
    }
  }
};

CheckResult lemma_part(int part, int m_max, int order) {
  CheckResult r;
  PochCache c(m_max, order);

  /* Part 2's closed form is pinned by its generating function: the RHS
   * for each M is the x^M coefficient of (xq;q^2)_inf / (x;q^2)_inf. */
  std::optional<BivariateSeries> part2_rhs;
  if (part == 2)
    part2_rhs = bi_pochhammer_x(+1, 1, 2, kInf, +1, m_max, order) *
                bi_pochhammer_x(+1, 0, 2, kInf, -1, m_max, order);

  for (int M = 0; M <= m_max; ++M) {
    QSeries lhs(order);
    QSeries rhs(order);
    switch (part) {
      case 1:
        for (int j = 0; j <= M; ++j) {
          lhs.add_shifted(c.inv2[M - j] * c.inv2[j], j);
          ++r.term_count;
        }
        rhs = c.inv1[M];
        break;
      case 2:
        for (int j = 0; j <= M; ++j) {
          long e = 2L * j * (j - 1) / 2 + j;
          if (e > order) continue;
          lhs.add_shifted(c.inv2[M - j] * c.inv2[j], (int)e, j % 2 ? -1 : +1);
          ++r.term_count;
        }
        rhs = part2_rhs->row(M);
        break;
      case 3:
        for (int k = 0; 2 * k <= M; ++k)
          for (int j = 0; j + 2 * k <= M; ++j) {
            int i = M - j - 2 * k;
            long e = (long)i * j + j + k;
            if (e > order) continue;
            lhs.add_shifted(c.inv1[i] * c.inv1[j] * c.inv2[k], (int)e,
                            j % 2 ? -1 : +1);
            ++r.term_count;
          }
        rhs = pochhammer({-1, 1}, 1, M / 2, order) * c.inv1[M / 2];
        break;
      default:
        throw usage_error("check_lemma2: part must be 1, 2 or 3");
    }
    if (auto n = lhs.first_mismatch(rhs)) {
      r.mismatch = Mismatch{0, *n, lhs[*n], rhs[*n]};
      r.detail = "M=" + std::to_string(M);
      return r;
    }
  }
  return r;
}

}  // namespace

VerifyReport check_lemma2(int part, int m_max, int order) {
  return run_check("lemma2-part" + std::to_string(part), StatusClaim::theorem,
                   order, [part, m_max](int ord) {
                     return lemma_part(part, m_max, ord);
                   });
}

namespace {

CheckResult wz_check(int m_max, int order) {
  CheckResult r;
  PochCache c(2 * (m_max + 1) + 2, order);
  const QSeries zero(order);

  auto f = [&](int M, int j) -> QSeries {
    if (j < 0 || j > M) return zero;
    long e = 3L * j * (j - 1) / 2 + (long)(M - j) * j + 2L * j;
    if (e > order) return zero;
    ++r.term_count;
    QSeries t = c.poch1[M] * c.poch1[M] * c.inv1[M - j] * c.inv1[j] *
                c.inv1[2 * M];
    QSeries out(order);
    out.add_shifted(t, (int)e, j % 2 ? -1 : +1);
    return out;
  };
  auto g = [&](int M, int j) -> QSeries {
    if (j < 1 || j > M + 1) return zero;
    long e = 3L * j * (j - 1) / 2 + (long)(M - j) * j + 2L * j;
    if (e > order) return zero;
    ++r.term_count;
    /* Numerator polynomial 1 - q^{M+1-j} - q^{2M+2-j}; for j = M+1 the
     * first subtrahend is the constant 1. */
    QSeries num = QSeries::one(order);
    if (M + 1 - j <= order) num.at(M + 1 - j) -= 1;
    if (2 * M + 2 - j <= order) num.at(2 * M + 2 - j) -= 1;
    QSeries unit1 = QSeries::one(order);  // 1 + q^{M+1}
    if (M + 1 <= order) unit1.at(M + 1) += 1;
    QSeries unit2 = QSeries::one(order);  // 1 - q^{2M+1}
    if (2 * M + 1 <= order) unit2.at(2 * M + 1) -= 1;
    QSeries t = num * c.poch1[M] * c.poch1[M] * unit1.inverted() *
                unit2.inverted() * c.inv1[M - j + 1] * c.inv1[j - 1] *
                c.inv1[2 * M];
    QSeries out(order);
    out.add_shifted(t, (int)e, j % 2 ? -1 : +1);
    return out;
  };

  auto fail = [&](const QSeries& a, const QSeries& b, std::string what) {
    auto n = a.first_mismatch(b);
    r.mismatch = Mismatch{0, *n, a[*n], b[*n]};
    r.detail = std::move(what);
  };

  for (int M = 0; M <= m_max; ++M) {
    /* (i) telescoping */
    for (int j = 0; j <= M + 2; ++j) {
      QSeries lhs = f(M + 1, j) - f(M, j);
      QSeries rhs = g(M, j + 1) - g(M, j);
      if (lhs != rhs) {
        fail(lhs, rhs,
             "telescoping M=" + std::to_string(M) + " j=" + std::to_string(j));
        return r;
      }
    }
    /* (ii) support of g */
    for (int j = 0; j <= M + 3; ++j) {
      if (!g(M, j).is_zero() && !(1 <= j && j <= M + 1)) {
        r.mismatch = Mismatch{0, 0, 1, 0};
        r.detail = "support M=" + std::to_string(M) + " j=" + std::to_string(j);
        return r;
      }
    }
    /* (iii) row sums of f */
    QSeries s(order);
    for (int j = 0; j <= M; ++j) s += f(M, j);
    if (auto n = s.first_mismatch(QSeries::one(order))) {
      r.mismatch = Mismatch{0, *n, s[*n], (*n == 0) ? Int(1) : Int(0)};
      r.detail = "row sum M=" + std::to_string(M);
      return r;
    }
    /* (iv) the summation lemma itself, term by term without the f
     * normalization */
    QSeries lhs(order);
    for (int j = 0; j <= M; ++j) {
      int i = M - j;
      long e = 3L * j * (j - 1) / 2 + (long)i * j + 2L * j;
      if (e > order) continue;
      lhs.add_shifted(c.inv1[i] * c.inv1[j], (int)e, j % 2 ? -1 : +1);
      ++r.term_count;
    }
    QSeries rhs = c.poch1[2 * M] * c.inv1[M] * c.inv1[M];
    if (auto n = lhs.first_mismatch(rhs)) {
      r.mismatch = Mismatch{0, *n, lhs[*n], rhs[*n]};
      r.detail = "lemma part 4, M=" + std::to_string(M);
      return r;
    }
  }
  return r;
}

}  // namespace

VerifyReport check_wz(int m_max, int order) {
  return run_check("wz-certificate", StatusClaim::theorem, order,
                   [m_max](int ord) { return wz_check(m_max, ord); });
}

namespace {

/* x^d * q^e as a bivariate polynomial. */
BivariateSeries bi_monomial(const Int& coeff, int d, int e, int x_degree,
                            int order) {
  BivariateSeries r(x_degree, order);
  if (d <= x_degree && e <= order) r.row(d).at(e) = coeff;
  return r;
}

CheckResult qdiff_check(int a, int x_degree, int order) {
  CheckResult r;
  MultisumSpec double_spec = cap_double_spec(a);
  MultisumSpec triple_spec = cap_triple_spec(a);

  BivariateSeries by_count = capparelli_gf_bivariate(a, x_degree, order);
  EvalStats s2, s3;
  BivariateSeries by_double = eval_bivariate(double_spec, x_degree, order, &s2);
  BivariateSeries by_triple = eval_bivariate(triple_spec, x_degree, order, &s3);
  r.term_count = s2.terms + s3.terms;

  auto fail = [&](const BivariateSeries& x, const BivariateSeries& y,
                  std::string what) {
    auto mn = x.first_mismatch(y);
    r.mismatch = Mismatch{mn->first, mn->second, x.row(mn->first)[mn->second],
                          y.row(mn->first)[mn->second]};
    r.detail = std::move(what);
  };
  if (by_count != by_double) {
    fail(by_count, by_double, "enumeration vs double sum");
    return r;
  }
  if (by_count != by_triple) {
    fail(by_count, by_triple, "enumeration vs triple sum");
    return r;
  }

  const BivariateSeries& F = by_count;
  auto mono = [&](const Int& cf, int d, int e) {
    return bi_monomial(cf, d, e, x_degree, order);
  };
  BivariateSeries rhs =
      (BivariateSeries::one(x_degree, order) + mono(1, 1, 3)) *
          F.substituted(3) +
      (mono(1, 1, 3 - a) + mono(1, 1, 3 + a) + mono(1, 2, 6)) *
          F.substituted(6) +
      (mono(1, 2, 9) + mono(-1, 3, 15)) * F.substituted(9);
  if (F != rhs) fail(F, rhs, "q-difference equation");
  return r;
}

}  // namespace

VerifyReport check_qdiff_capparelli(int a, int x_degree, int order) {
  return run_check("qdiff-capparelli-a" + std::to_string(a),
                   StatusClaim::theorem, order, [a, x_degree](int ord) {
                     return qdiff_check(a, x_degree, ord);
                   });
}

std::string reports_to_json(int order, const std::vector<VerifyReport>& rs) {
  nlohmann::json doc;
  doc["order"] = order;
  doc["entries"] = nlohmann::json::array();
  for (const VerifyReport& r : rs) {
    nlohmann::json e;
    e["name"] = r.name;
    e["status_claim"] =
        r.status == StatusClaim::theorem ? "theorem" : "conjecture";
    e["outcome"] = r.verified ? "verified" : "mismatch";
    if (r.mismatch) {
      nlohmann::json m;
      m["exponent"] = r.mismatch->q_exp;
      m["lhs"] = r.mismatch->lhs.get_str();
      m["rhs"] = r.mismatch->rhs.get_str();
      e["first_mismatch"] = m;
    } else {
      e["first_mismatch"] = nullptr;
    }
    e["elapsed_ms"] = r.elapsed_ms;
    e["term_count"] = r.term_count;
    doc["entries"].push_back(e);
  }
  return doc.dump(2);
}

std::string report_to_text(const VerifyReport& r) {
  std::string line = r.name + " order=" + std::to_string(r.order) + " " +
                     (r.verified ? "verified" : "MISMATCH");
  if (r.mismatch) {
    line += " at q^" + std::to_string(r.mismatch->q_exp);
    if (r.mismatch->x_exp) line += " (x^" + std::to_string(r.mismatch->x_exp) + ")";
    line += " lhs=" + r.mismatch->lhs.get_str() +
            " rhs=" + r.mismatch->rhs.get_str();
  }
  if (!r.detail.empty()) line += " [" + r.detail + "]";
  if (r.status == StatusClaim::conjecture) line += " (conjecture)";
  return line;
}

}  // namespace qrr
