#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "catalog.hpp"
#include "multisum.hpp"
#include "partitions.hpp"
#include "products.hpp"

using namespace qrr;

TEST_CASE("the empty partition satisfies every predicate") {
  CHECK(count(0, AgC{2, 2}) == 1);
  CHECK(count(0, AgD{3, 1}) == 1);
  CHECK(count(0, CapC{1}) == 1);
  CHECK(count(0, CapD{2}) == 1);
  CHECK(count(0, ResidueSet{5, {1, 4}}) == 1);
}

TEST_CASE("hand-checked counts") {
  /* of 6 with gaps >= 2, mod-3 pair rule, no part 1: (6) and (4,2) */
  CHECK(count(6, CapC{1}) == 2);
  /* distinct, no part = +-1 mod 6: (6) and (4,2) */
  CHECK(count(6, CapD{1}) == 2);
  /* parts not congruent to 0, +-2 mod 5: (4) and (1,1,1,1) */
  CHECK(count(4, AgD{2, 2}) == 2);
}

TEST_CASE("generating functions") {
  QSeries rr = gf(AgD{2, 2}, 4);
  CHECK(rr.to_string() == "1 1 1 1 2");
  CHECK(rr == bracket(1, 5, kInf, 4).inverted());

  CHECK(gf(ResidueSet{2, {1}}, 6).to_string() == "1 1 1 2 2 3 4");

  ProductSpec neg;
  for (int r : {2, 3, 4, 6}) neg.factors.push_back(poch_factor(-1, r, 6));
  CHECK(gf(CapD{1}, 60) == eval_product(neg, 60));
}

TEST_CASE("difference-condition side matches the multisum engine") {
  const int N = 25;
  for (int k = 2; k <= 4; ++k)
    for (int i = 1; i <= k; ++i) {
      INFO("k=" << k << " i=" << i);
      CHECK(gf(AgC{k, i}, N) == eval(andrews_gordon_spec(k, i), N));
    }
}

TEST_CASE("equinumerosity at small sizes") {
  for (int k = 2; k <= 4; ++k)
    for (int i = 1; i <= k; ++i)
      for (int n = 0; n <= 25; ++n) {
        INFO("k=" << k << " i=" << i << " n=" << n);
        CHECK(count(n, AgC{k, i}) == count(n, AgD{k, i}));
      }
  for (int a = 1; a <= 2; ++a)
    for (int n = 0; n <= 30; ++n) {
      INFO("a=" << a << " n=" << n);
      CHECK(count(n, CapC{a}) == count(n, CapD{a}));
    }
}

TEST_CASE("bivariate gap-condition generating function") {
  BivariateSeries f = capparelli_gf_bivariate(1, 6, 30);
  CHECK(f.row(0) == QSeries::one(30));
  /* one-part rows: every n >= 2 except n = a is admissible */
  for (int n = 1; n <= 30; ++n) CHECK(f.row(1)[n] == (n >= 2 ? 1 : 0));
  /* row sums reproduce the univariate count */
  QSeries diag = f.at_x1();
  for (int n = 0; n <= 12; ++n) CHECK(diag[n] == Int((long)count(n, CapC{1})));
  /* matches the double-sum evaluation */
  CHECK(f == eval_bivariate(cap_double_spec(1), 6, 30));
  CHECK(capparelli_gf_bivariate(2, 6, 30) ==
        eval_bivariate(cap_triple_spec(2), 6, 30));
}

TEST_CASE("predicate parsing") {
  CHECK(count(6, parse_predicate("cap-c 1")) == 2);
  CHECK(count(6, parse_predicate("cap-c,1")) == 2);
  CHECK(count(4, parse_predicate("ag-d 2 2")) == 2);
  CHECK(gf(parse_predicate("residues 2 1"), 6).to_string() == "1 1 1 2 2 3 4");
  /* distinct odd parts of 8: 7+1, 5+3 */
  CHECK(count(8, parse_predicate("residues 2 1 --distinct")) == 2);
  CHECK(count(8, parse_predicate("residues 4 1,3 --distinct")) ==
        count(8, parse_predicate("residues 2 1 --distinct")));

  CHECK_THROWS_AS(parse_predicate(""), usage_error);
  CHECK_THROWS_AS(parse_predicate("nope 1"), usage_error);
  CHECK_THROWS_AS(parse_predicate("ag-c 2"), usage_error);
  CHECK_THROWS_AS(parse_predicate("cap-c x"), usage_error);
  CHECK_THROWS_AS(parse_predicate("residues 0 1"), usage_error);
}
