#ifndef QRR_TESTS_COMMON_HPP
#define QRR_TESTS_COMMON_HPP

/* Shared oracles: a deliberately naive boxed lattice enumeration (the
 * reference the pruned evaluator is checked against) and builders for
 * the classical summation identities used as series-core properties. */

#include <cmath>
#include <random>
#include <vector>

#include "catalog.hpp"
#include "multisum.hpp"
#include "qseries.hpp"

namespace qrr_tests {

using qrr::BivariateSeries;
using qrr::Int;
using qrr::kInf;
using qrr::Monomial;
using qrr::MultisumSpec;
using qrr::QSeries;

/* Evaluates a multisum over the full box i_l <= 3 + ceil(sqrt(2N/d_l)),
 * recomputing every denominator from scratch.  x weights are dropped
 * (x = 1) so any catalog spec can be fed in. */
inline QSeries boxed_eval(const MultisumSpec& raw, int order) {
  MultisumSpec spec = qrr::at_x1(raw);
  std::vector<int> hi(spec.s);
  for (int l = 0; l < spec.s; ++l)
    hi[l] = 3 + (int)std::ceil(std::sqrt(2.0 * order / spec.diag[l]));

  QSeries total(order);
  std::vector<int> idx(spec.s, 0);
  auto leaf = [&] {
    long e = 0;
    int parity = 0;
    for (int l = 0; l < spec.s; ++l) {
      long i = idx[l];
      e += spec.diag[l] * (i * (i - 1) / 2) + spec.linear[l] * i;
      parity += spec.sign[l] * idx[l];
      for (int k = l + 1; k < spec.s; ++k) e += (long)spec.cross[l][k] * i * idx[k];
    }
    if (e > order) return;
    QSeries term = QSeries::one(order);
    for (int l = 0; l < spec.s; ++l)
      term *= qrr::pochhammer(Monomial{+1, spec.denom_step[l]},
                              spec.denom_step[l], idx[l], order)
                  .inverted();
    if (spec.tail) {
      long te = spec.tail->c0;
      for (int l = 0; l < spec.s; ++l) te += (long)spec.tail->c[l] * idx[l];
      QSeries tail = QSeries::one(order);
      if (te <= order) tail.at((int)te) += 1;
      term *= tail;
    }
    total.add_shifted(term, (int)e, parity % 2 == 0 ? +1 : -1);
  };
  auto rec = [&](auto&& self, int depth) -> void {
    if (depth == spec.s) {
      leaf();
      return;
    }
    for (idx[depth] = 0; idx[depth] <= hi[depth]; ++idx[depth])
      self(self, depth + 1);
  };
  rec(rec, 0);
  return total;
}

/* sum_n x^n / (q;q)_n as a bivariate series. */
inline BivariateSeries euler_sum_a(int x_degree, int order) {
  BivariateSeries s(x_degree, order);
  QSeries denom = QSeries::one(order);
  for (int n = 0; n <= x_degree; ++n) {
    if (n > 0) denom.div_one_minus_qm(n);
    s.row(n) = denom;
  }
  return s;
}

/* sum_n q^{binom(n,2)} x^n / (q;q)_n. */
inline BivariateSeries euler_sum_b(int x_degree, int order) {
  BivariateSeries s(x_degree, order);
  QSeries denom = QSeries::one(order);
  for (int n = 0; n <= x_degree; ++n) {
    if (n > 0) denom.div_one_minus_qm(n);
    int e = n * (n - 1) / 2;
    if (e <= order) s.row(n) = denom.shifted(e);
  }
  return s;
}

/* sum_n (a;q)_n x^n / (q;q)_n for a = sign * q^t. */
inline BivariateSeries q_binomial_sum(int sign, int t, int x_degree,
                                      int order) {
  BivariateSeries s(x_degree, order);
  QSeries denom = QSeries::one(order);
  for (int n = 0; n <= x_degree; ++n) {
    if (n > 0) denom.div_one_minus_qm(n);
    s.row(n) = qrr::pochhammer(Monomial{sign, t}, 1, n, order) * denom;
  }
  return s;
}

/* sum_{k in Z} (-1)^k q^{k(3k-1)/2} truncated at the order. */
inline QSeries pentagonal_series(int order) {
  QSeries s(order);
  for (long k = -(long)order; k <= (long)order; ++k) {
    long e = k * (3 * k - 1) / 2;
    if (e >= 0 && e <= order) s.at((int)e) += (k % 2 == 0) ? 1 : -1;
  }
  return s;
}

inline QSeries random_series(std::mt19937& rng, int order) {
  std::uniform_int_distribution<int> coeff(-3, 3);
  QSeries s(order);
  for (int n = 0; n <= order; ++n) s.at(n) = coeff(rng);
  return s;
}

}  // namespace qrr_tests

#endif
