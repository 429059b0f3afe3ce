#include "catalog.hpp"

#include <map>

#include "partitions.hpp"

namespace qrr {

namespace {

std::vector<std::vector<int>> cross_matrix(int s, std::vector<int> upper) {
  std::vector<std::vector<int>> m(s, std::vector<int>(s, 0));
  size_t t = 0;
  for (int j = 0; j < s; ++j)
    for (int k = j + 1; k < s; ++k) {
      m[j][k] = upper.at(t);
      m[k][j] = upper.at(t);
      ++t;
    }
  if (t != upper.size()) throw usage_error("cross_matrix: wrong entry count");
  return m;
}

MultisumSpec ms(std::vector<int> diag, std::vector<int> cross_upper,
                std::vector<long> linear, std::vector<int> sign,
                std::vector<int> steps, std::vector<int> x_weight = {},
                std::optional<TailFactor> tail = std::nullopt) {
  MultisumSpec sp;
  sp.s = (int)diag.size();
  sp.diag = std::move(diag);
  sp.cross = cross_matrix(sp.s, std::move(cross_upper));
  sp.linear = std::move(linear);
  sp.sign = std::move(sign);
  sp.denom_step = std::move(steps);
  sp.x_weight = std::move(x_weight);
  sp.tail = std::move(tail);
  sp.validate();
  return sp;
}

}  // namespace

MultisumSpec level5_spec(int a) {
  return ms({1, 8, 2}, {2, 2, 4}, {1, 5 + 2L * a, 1 + 2L * a}, {0, 0, 1},
            {1, 2, 2});
}

MultisumSpec level7_triple_spec(int a) {
  return ms({1, 8, 10}, {2, 2, 8}, {1, 4 + 4L * a, 5 + 4L * a}, {0, 0, 0},
            {1, 2, 2});
}

MultisumSpec level7_quad_theorem_spec(int a) {
  std::vector<long> linear = (a == 0) ? std::vector<long>{1, 3, 1, 6}
                                      : std::vector<long>{1, 2, 4, 8};
  return ms({1, 2, 2, 8}, {1, 1, 2, 4, 4, 4}, linear, {0, 0, 1, 0},
            {1, 2, 2, 4});
}

MultisumSpec level7_quad_proof_spec(int a) {
  /* Sign (-1)^{k + (1-a)(j+k)}: parity j for a = 0, parity k for a = 1. */
  std::vector<int> sign = (a == 0) ? std::vector<int>{0, 1, 0, 0}
                                   : std::vector<int>{0, 0, 1, 0};
  return ms({1, 2, 2, 8}, {1, 1, 2, 4, 4, 4},
            {1, 1 + 1L * a, 3 + 1L * a, 6 + 2L * a}, sign, {1, 2, 2, 4});
}

MultisumSpec tt_l4_spec(int variant) {
  std::vector<long> linear;
  switch (variant) {
    case 234: linear = {1, 1}; break;
    case 146: linear = {1, 3}; break;
    case 256: linear = {2, 3}; break;
    default: throw usage_error("tt_l4_spec: variant must be 234, 146 or 256");
  }
  return ms({1, 2}, {2}, linear, {0, 1}, {1, 2});
}

MultisumSpec f1_spec(int a, int b, int c) {
  return ms({4, 2, 4}, {2, 4, 4}, {a, b, c}, {0, 0, 1}, {1, 2, 4});
}

MultisumSpec f2_spec(int a, int b, int c) {
  return ms({1, 2, 16}, {2, 4, 4}, {a, b, c}, {0, 1, 0}, {1, 2, 4});
}

MultisumSpec f3_spec(int a, int b, int c, int d) {
  return ms({2, 4, 2, 16}, {2, 2, 4, 4, 8, 4}, {a, b, c, d}, {0, 0, 1, 0},
            {1, 2, 2, 4});
}

MultisumSpec cap_double_spec(int a) {
  if (a == 1) return ms({4, 12}, {6}, {2, 6}, {0, 0}, {1, 3}, {1, 2});
  if (a == 2)
    return ms({4, 12}, {6}, {3, 9}, {0, 0}, {1, 3}, {1, 2},
              TailFactor{1, 1, {2, 3}});
  throw usage_error("cap_double_spec: a must be 1 or 2");
}

MultisumSpec cap_alt_double_spec() {
  return ms({4, 12}, {6}, {3, 6}, {0, 0}, {1, 3}, {1, 2},
            TailFactor{1, 1, {3, 6}});
}

MultisumSpec cap_triple_spec(int a) {
  if (a != 1 && a != 2) throw usage_error("cap_triple_spec: a must be 1 or 2");
  return ms({5, 5, 12}, {3, 6, 6}, {3L - a, 2L + a, 6}, {0, 0, 0}, {2, 2, 3},
            {1, 1, 2});
}

MultisumSpec at_x1(MultisumSpec spec) {
  spec.x_weight.clear();
  if (spec.tail) spec.tail->x_exp = 0;
  return spec;
}

namespace {

using SeriesFn = std::function<QSeries(int)>;
using BiFn = std::function<BivariateSeries(int, int)>;

SeriesFn sum_fn(MultisumSpec spec) {
  return [spec = std::move(spec)](int order) { return eval(spec, order); };
}

SeriesFn product_fn(ProductSpec p) {
  return [p = std::move(p)](int order) { return eval_product(p, order); };
}

SeriesFn single_fn(SingleSum s) {
  return [s](int order) { return eval_single(s, order); };
}

CheckResult compare_uni(const SeriesFn& lhs, const SeriesFn& rhs, int order,
                        long terms = 0) {
  CheckResult r;
  r.term_count = terms;
  QSeries a = lhs(order), b = rhs(order);
  if (auto n = a.first_mismatch(b)) r.mismatch = Mismatch{0, *n, a[*n], b[*n]};
  return r;
}

CheckResult compare_bi(const BivariateSeries& a, const BivariateSeries& b,
                       long terms = 0) {
  CheckResult r;
  r.term_count = terms;
  if (auto mn = a.first_mismatch(b))
    r.mismatch = Mismatch{mn->first, mn->second, a.row(mn->first)[mn->second],
                          b.row(mn->first)[mn->second]};
  return r;
}

/* Ad-hoc x-degree for bivariate catalog entries; the dedicated q-difference
 * command exposes the degree as a knob, the catalog uses a fixed one. */
constexpr int kBiDegree = 10;

struct Builder {
  std::vector<CatalogEntry> entries;

  void uni(std::string name, StatusClaim st, std::string ref, SeriesFn lhs,
           SeriesFn rhs) {
    CatalogEntry e;
    e.name = std::move(name);
    e.status = st;
    e.reference = std::move(ref);
    e.lhs_series = lhs;
    e.check = [lhs, rhs](int order) { return compare_uni(lhs, rhs, order); };
    entries.push_back(std::move(e));
  }

  /* Entry whose LHS is a multisum; registers mutation hooks for every
   * linear coefficient. */
  void sum_entry(std::string name, StatusClaim st, std::string ref,
                 MultisumSpec spec, SeriesFn rhs) {
    SeriesFn lhs = sum_fn(spec);
    CatalogEntry e;
    e.name = std::move(name);
    e.status = st;
    e.reference = std::move(ref);
    e.lhs_series = lhs;
    e.check = [spec, rhs](int order) {
      EvalStats st2;
      CheckResult r;
      QSeries a = eval(spec, order, &st2);
      QSeries b = rhs(order);
      r.term_count = st2.terms;
      if (auto n = a.first_mismatch(b))
        r.mismatch = Mismatch{0, *n, a[*n], b[*n]};
      return r;
    };
    for (int l = 0; l < spec.s; ++l) {
      MultisumSpec mut = spec;
      mut.linear[l] += 1;
      e.mutations.push_back([mut, rhs](int order) {
        return eval(mut, order).first_mismatch(rhs(order)).has_value();
      });
    }
    entries.push_back(std::move(e));
  }

  void single_entry(std::string name, StatusClaim st, std::string ref,
                    SingleSum s, SeriesFn rhs) {
    CatalogEntry e;
    e.name = std::move(name);
    e.status = st;
    e.reference = std::move(ref);
    e.lhs_series = single_fn(s);
    e.check = [s, rhs](int order) {
      EvalStats st2;
      CheckResult r;
      QSeries a = eval_single(s, order, &st2);
      QSeries b = rhs(order);
      r.term_count = st2.terms;
      if (auto n = a.first_mismatch(b))
        r.mismatch = Mismatch{0, *n, a[*n], b[*n]};
      return r;
    };
    SingleSum mut = s;
    mut.beta += 1;
    e.mutations.push_back([mut, rhs](int order) {
      return eval_single(mut, order).first_mismatch(rhs(order)).has_value();
    });
    entries.push_back(std::move(e));
  }

  /* Bivariate entry comparing a multisum against another bivariate
   * builder (a second spec or the partition enumeration). */
  void bi_entry(std::string name, StatusClaim st, std::string ref,
                MultisumSpec spec, BiFn rhs) {
    CatalogEntry e;
    e.name = std::move(name);
    e.status = st;
    e.reference = std::move(ref);
    e.check = [spec, rhs](int order) {
      EvalStats st2;
      BivariateSeries a = eval_bivariate(spec, kBiDegree, order, &st2);
      return compare_bi(a, rhs(kBiDegree, order), st2.terms);
    };
    for (int l = 0; l < spec.s; ++l) {
      MultisumSpec mut = spec;
      mut.linear[l] += 1;
      e.mutations.push_back([mut, rhs](int order) {
        constexpr int d = 6;
        return eval_bivariate(mut, d, order)
            .first_mismatch(rhs(d, order))
            .has_value();
      });
    }
    entries.push_back(std::move(e));
  }

  void family(std::string name, StatusClaim st, std::string ref,
              std::function<CheckResult(int)> check) {
    CatalogEntry e;
    e.name = std::move(name);
    e.status = st;
    e.reference = std::move(ref);
    e.check = std::move(check);
    entries.push_back(std::move(e));
  }
};

ProductSpec rr_product(int r1, int r2, int m) {
  ProductSpec p;
  p.factors.push_back(poch_factor(+1, r1, m, -1));
  p.factors.push_back(poch_factor(+1, r2, m, -1));
  return p;
}

ProductSpec ag_product(int k, int i) {
  int m = 2 * k + 1;
  ProductSpec p;
  p.factors.push_back(poch_factor(+1, i, m, +1));
  p.factors.push_back(poch_factor(+1, m - i, m, +1));
  p.factors.push_back(poch_factor(+1, m, m, +1));
  p.factors.push_back(poch_factor(+1, 1, 1, -1));  // 1/(q;q)_inf
  return p;
}

/* (-q^{r_1},...,-q^{r_k}; q^m)_inf. */
ProductSpec neg_poch_product(const std::vector<int>& residues, int m) {
  ProductSpec p;
  for (int r : residues) p.factors.push_back(poch_factor(-1, r, m, +1));
  return p;
}

/* sum over i + 2j = M of q^{binom(i,2)} / ((q;q)_i (q^2;q^2)_j), the
 * halving summation used to fold a single index into a pair. */
CheckResult check_aux_halving(int order) {
  CheckResult r;
  std::vector<QSeries> inv1, inv2;
  constexpr int kMMax = 20;
  for (int n = 0; n <= kMMax; ++n) {
    inv1.push_back(pochhammer({+1, 1}, 1, n, order).inverted());
    inv2.push_back(pochhammer({+1, 2}, 2, n, order).inverted());
  }
  for (int M = 0; M <= kMMax; ++M) {
    QSeries lhs(order);
    for (int j = 0; 2 * j <= M; ++j) {
      int i = M - 2 * j;
      lhs.add_shifted(inv1[i] * inv2[j], (int)((long)i * (i - 1) / 2));
      ++r.term_count;
    }
    if (auto n = lhs.first_mismatch(inv1[M])) {
      r.mismatch = Mismatch{0, *n, lhs[*n], inv1[M][*n]};
      r.detail = "M=" + std::to_string(M);
      return r;
    }
  }
  return r;
}

std::vector<CatalogEntry> build_catalog() {
  Builder b;
  const auto thm = StatusClaim::theorem;
  const auto conj = StatusClaim::conjecture;

  /* Rogers-Ramanujan. */
  b.sum_entry("rr-1", thm, "Eq. (1.1), first identity",
              ms({2}, {}, {1}, {0}, {1}), product_fn(rr_product(1, 4, 5)));
  b.sum_entry("rr-2", thm, "Eq. (1.1), second identity",
              ms({2}, {}, {2}, {0}, {1}), product_fn(rr_product(2, 3, 5)));

  /* Andrews-Gordon, k <= 5. */
  for (int k = 2; k <= 5; ++k)
    for (int i = 1; i <= k; ++i)
      b.sum_entry("ag-" + std::to_string(k) + "-" + std::to_string(i), thm,
                  "Andrews-Gordon identity, modulus " + std::to_string(2 * k + 1),
                  andrews_gordon_spec(k, i), product_fn(ag_product(k, i)));

  /* A_2^(2) level 5 triple sums. */
  b.sum_entry("a22-l5-a0", thm, "level 5, weight 5L0", level5_spec(0),
              product_fn(char_A22(5, "5L0")));
  b.sum_entry("a22-l5-a1", thm, "level 5, weight L0+2L1", level5_spec(1),
              product_fn(char_A22(5, "L0+2L1")));

  /* A_2^(2) level 7 triple and quadruple sums. */
  b.sum_entry("a22-l7-triple-a0", thm, "level 7, weight 5L0+L1",
              level7_triple_spec(0), product_fn(char_A22(7, "5L0+L1")));
  b.sum_entry("a22-l7-triple-a1", thm, "level 7, weight L0+3L1",
              level7_triple_spec(1), product_fn(char_A22(7, "L0+3L1")));
  b.sum_entry("a22-l7-quad-a0", thm, "level 7, weight 7L0",
              level7_quad_theorem_spec(0), product_fn(char_A22(7, "7L0")));
  b.sum_entry("a22-l7-quad-a1", thm, "level 7, weight 3L0+2L1",
              level7_quad_theorem_spec(1), product_fn(char_A22(7, "3L0+2L1")));

  /* The level 5 weight missing from the triple-sum theorem. */
  b.uni("remark-l5-missing", thm, "level 5, weight 3L0+L1 as odd parts",
        product_fn(char_A22(5, "3L0+L1")),
        product_fn(ProductSpec{{poch_factor(+1, 1, 2, -1)}}));

  /* Slater-type single sums. */
  b.single_entry("slater-39", thm, "Slater (39), weight 5L0",
                 SingleSum{2, 0, 0}, product_fn(char_A22(5, "5L0")));
  b.single_entry("slater-38", thm, "Slater (38), weight L0+2L1",
                 SingleSum{2, 2, 1}, product_fn(char_A22(5, "L0+2L1")));
  b.single_entry("slater-99", thm, "Slater (99), weight 7L0",
                 SingleSum{1, 1, 0}, product_fn(char_A22(7, "7L0")));
  b.single_entry("slater-94", thm, "Slater (94), weight 3L0+2L1",
                 SingleSum{1, 1, 1}, product_fn(char_A22(7, "3L0+2L1")));
  b.single_entry("slater-79", thm, "Slater (79), weight 5L0+L1",
                 SingleSum{1, 0, 0}, product_fn(char_A22(7, "5L0+L1")));
  b.single_entry("slater-96", thm, "Slater (96), weight L0+3L1",
                 SingleSum{1, 2, 1}, product_fn(char_A22(7, "L0+3L1")));

  /* Level 4 double sums. */
  b.sum_entry("tt-l4-234", thm, "level 4, weight 4L0", tt_l4_spec(234),
              product_fn(char_A22(4, "4L0")));
  b.sum_entry("tt-l4-146", thm, "level 4, weight 2L0+L1", tt_l4_spec(146),
              product_fn(char_A22(4, "2L0+L1")));
  b.sum_entry("tt-l4-256", thm, "level 4, weight 2L1", tt_l4_spec(256),
              product_fn(char_A22(4, "2L1")));

  /* Recursive-structure reductions: deleting one summation variable. */
  b.sum_entry("reduction-l5-j0-a0", thm,
              "j = 0 part of the level 5 triple sum, weight 5L0",
              level5_spec(0).without_variable(1), sum_fn(tt_l4_spec(234)));
  b.sum_entry("reduction-l5-j0-a1", thm,
              "j = 0 part of the level 5 triple sum, weight L0+2L1",
              level5_spec(1).without_variable(1), sum_fn(tt_l4_spec(146)));
  b.sum_entry("reduction-f2-k0-L3", thm, "k = 0 part of F2(1,1,8)",
              f2_spec(1, 1, 8).without_variable(2), sum_fn(tt_l4_spec(234)));
  b.sum_entry("reduction-f2-k0-L0L1", thm, "k = 0 part of F2(1,3,12)",
              f2_spec(1, 3, 12).without_variable(2), sum_fn(tt_l4_spec(146)));

  /* Conjectural A_13^(2) level 2 series. */
  b.sum_entry("conj-f1-L3", conj, "F1(2,2,2) vs level 2 character i=3",
              f1_spec(2, 2, 2), product_fn(char_A13_level2(3)));
  b.sum_entry("conj-f1-L5", conj, "F1(4,2,6) vs level 2 character i=5",
              f1_spec(4, 2, 6), product_fn(char_A13_level2(5)));
  b.sum_entry("conj-f1-L7", conj, "F1(6,4,6) vs level 2 character i=7",
              f1_spec(6, 4, 6), product_fn(char_A13_level2(7)));
  b.sum_entry("conj-f2-L0L1", conj, "F2(1,3,12) vs level 2 character i=1",
              f2_spec(1, 3, 12), product_fn(char_A13_level2(1)));
  b.sum_entry("conj-f2-L3", conj, "F2(1,1,8) vs level 2 character i=3",
              f2_spec(1, 1, 8), product_fn(char_A13_level2(3)));
  b.sum_entry("conj-f2-L7", conj, "F2(3,3,16) vs level 2 character i=7",
              f2_spec(3, 3, 16), product_fn(char_A13_level2(7)));
  b.sum_entry("conj-f3-L5", conj, "F3(1,5,1,12) vs level 2 character i=5",
              f3_spec(1, 5, 1, 12), product_fn(char_A13_level2(5)));

  /* F2(a,b,c) = F3(a,2a+1,b,c): proved, independent of the conjectures. */
  int f23_cases[][3] = {{1, 3, 12}, {1, 1, 8}, {3, 3, 16}};
  for (int t = 0; t < 3; ++t) {
    int a = f23_cases[t][0], bb = f23_cases[t][1], c = f23_cases[t][2];
    b.sum_entry("remark-f2-eq-f3-" + std::to_string(t + 1), thm,
                "F2(a,b,c) = F3(a,2a+1,b,c)", f2_spec(a, bb, c),
                sum_fn(f3_spec(a, 2 * a + 1, bb, c)));
  }

  b.family("remark-aux-halving", thm, "index halving summation, M <= 20",
           check_aux_halving);

  /* Capparelli / level 3. */
  b.sum_entry("cap-kur-1", thm, "double sum at x = 1, weight 3L0",
              at_x1(cap_double_spec(1)),
              product_fn(neg_poch_product({2, 3, 4, 6}, 6)));
  b.sum_entry("cap-kur-2", thm, "double sum at x = 1, weight L0+L1",
              at_x1(cap_double_spec(2)),
              product_fn(neg_poch_product({1, 3, 5, 6}, 6)));
  for (int a = 1; a <= 2; ++a)
    b.bi_entry("cap-triple-a" + std::to_string(a), thm,
               "triple sum vs partition enumeration", cap_triple_spec(a),
               [a](int d, int n) { return capparelli_gf_bivariate(a, d, n); });
  {
    MultisumSpec alt = cap_alt_double_spec();
    b.bi_entry("cap-alt-double", thm, "alternative double sum for a = 2",
               cap_double_spec(2),
               [alt](int d, int n) { return eval_bivariate(alt, d, n); });
  }
  b.uni("prod-equiv-l3-1", thm, "level 3 products, weight 3L0",
        product_fn(neg_poch_product({2, 3, 4, 6}, 6)),
        product_fn(char_A22(3, "3L0")));
  b.uni("prod-equiv-l3-2", thm, "level 3 products, weight L0+L1",
        product_fn(neg_poch_product({1, 3, 5, 6}, 6)),
        product_fn(char_A22(3, "L0+L1")));

  return std::move(b.entries);
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = build_catalog();
  return entries;
}

const CatalogEntry* find_entry(const std::string& name) {
  for (const CatalogEntry& e : catalog())
    if (e.name == name) return &e;
  return nullptr;
}

std::vector<std::string> catalog_names() {
  std::vector<std::string> names;
  for (const CatalogEntry& e : catalog()) names.push_back(e.name);
  return names;
}

std::vector<std::pair<std::string, MultisumSpec>> catalog_multisum_specs() {
  std::vector<std::pair<std::string, MultisumSpec>> out;
  auto add = [&](const std::string& n, MultisumSpec s) {
    out.emplace_back(n, std::move(s));
  };
  add("rr-1", ms({2}, {}, {1}, {0}, {1}));
  add("rr-2", ms({2}, {}, {2}, {0}, {1}));
  for (int k = 2; k <= 5; ++k)
    for (int i = 1; i <= k; ++i)
      add("ag-" + std::to_string(k) + "-" + std::to_string(i),
          andrews_gordon_spec(k, i));
  add("a22-l5-a0", level5_spec(0));
  add("a22-l5-a1", level5_spec(1));
  add("a22-l7-triple-a0", level7_triple_spec(0));
  add("a22-l7-triple-a1", level7_triple_spec(1));
  add("a22-l7-quad-a0", level7_quad_theorem_spec(0));
  add("a22-l7-quad-a1", level7_quad_theorem_spec(1));
  add("a22-l7-quad-proof-a0", level7_quad_proof_spec(0));
  add("a22-l7-quad-proof-a1", level7_quad_proof_spec(1));
  add("tt-l4-234", tt_l4_spec(234));
  add("tt-l4-146", tt_l4_spec(146));
  add("tt-l4-256", tt_l4_spec(256));
  add("conj-f1-L3", f1_spec(2, 2, 2));
  add("conj-f1-L5", f1_spec(4, 2, 6));
  add("conj-f1-L7", f1_spec(6, 4, 6));
  add("conj-f2-L0L1", f2_spec(1, 3, 12));
  add("conj-f2-L3", f2_spec(1, 1, 8));
  add("conj-f2-L7", f2_spec(3, 3, 16));
  add("conj-f3-L5", f3_spec(1, 5, 1, 12));
  add("cap-double-1", cap_double_spec(1));
  add("cap-double-2", cap_double_spec(2));
  add("cap-alt-double", cap_alt_double_spec());
  add("cap-triple-1", cap_triple_spec(1));
  add("cap-triple-2", cap_triple_spec(2));
  return out;
}

}  // namespace qrr
