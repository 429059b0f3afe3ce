#ifndef QRR_MULTISUM_HPP
#define QRR_MULTISUM_HPP

#include <optional>
#include <vector>

#include "qseries.hpp"

namespace qrr {

/* The affine factor (1 + x^{x_exp} q^{c0 + sum c[l]*i_l}) attached to a
 * multisum term. */
struct TailFactor {
  int x_exp = 0;
  int c0 = 1;
  std::vector<int> c;  // one entry per summation variable, >= 0
};

/* Quadratic-form data for a sum
 *
 *   sum_{i_1..i_s >= 0} (-1)^{sum sign[l]*i_l}
 *     q^{sum diag[l]*binom(i_l,2) + sum_{j<k} cross[j][k]*i_j*i_k
 *        + sum linear[l]*i_l}
 *     / prod_l (q^{step[l]}; q^{step[l]})_{i_l}
 *
 * optionally weighted by x^{sum x_weight[l]*i_l} and a tail factor. */
struct MultisumSpec {
  int s = 0;
  std::vector<int> diag;                 // d_l >= 1
  std::vector<std::vector<int>> cross;   // s x s symmetric, zero diagonal
  std::vector<long> linear;              // B_l
  std::vector<int> sign;                 // L_l in {0,1}
  std::vector<int> denom_step;           // C_l >= 1
  std::vector<int> x_weight;             // empty or s entries >= 0
  std::optional<TailFactor> tail;

  /* Throws usage_error on malformed data or violated termination
   * invariants (diag entries < 1, negative cross entries, ...). */
  void validate() const;

  bool has_x() const { return !x_weight.empty(); }

  /* The spec obtained by pinning variable `idx` to zero and deleting it
   * (the "j = 0 part" of a sum). */
  MultisumSpec without_variable(int idx) const;
};

struct EvalStats {
  long terms = 0;  // lattice points accumulated
};

/* Exact evaluation as a truncated q-series.  Rejects specs carrying an
 * x weight or a tail with positive x exponent. */
QSeries eval(const MultisumSpec& spec, int order, EvalStats* stats = nullptr);

/* Evaluation with the x monomial; lattice points of x weight beyond
 * x_degree are skipped. */
BivariateSeries eval_bivariate(const MultisumSpec& spec, int x_degree,
                               int order, EvalStats* stats = nullptr);

/* The (k-1)-variable Andrews-Gordon sum for 1 <= i <= k, expanded in the
 * n-variables: diag 2a, cross 2*min(a,b), linear a + max(0, a-i+1). */
MultisumSpec andrews_gordon_spec(int k, int i);

/* Slater-type single sum  sum_{n>=0} q^{alpha n^2 + beta n} / (q;q)_{2n+a}
 * with a in {0,1}; the shifted Pochhammer length does not fit the normal
 * form above, so it gets its own evaluator. */
struct SingleSum {
  int alpha;
  int beta;
  int offset;  // 0 or 1
};

QSeries eval_single(const SingleSum& spec, int order,
                    EvalStats* stats = nullptr);

}  // namespace qrr

#endif
