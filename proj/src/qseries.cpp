#include "qseries.hpp"

#include <sstream>

namespace qrr {

QSeries operator*(const QSeries& a, const QSeries& b) {
  a.check_order(b);
  QSeries r(a.order_);
  for (int i = 0; i <= a.order_; ++i) {
    if (a.c_[i] == 0) continue;
    for (int j = 0; i + j <= a.order_; ++j) {
      if (b.c_[j] == 0) continue;
      r.c_[i + j] += a.c_[i] * b.c_[j];
    }
  }
  return r;
}

QSeries QSeries::inverted() const {
  const Int& a0 = c_[0];
  if (a0 != 1 && a0 != -1)
    throw inversion_error("inverted: constant term is not a unit");

  /* If (sum a_n q^n)(sum b_n q^n) = 1 then
   * b_n = -a_0^{-1} sum_{k=1}^{n} a_k b_{n-k}, with b_0 = a_0^{-1}
   * (a_0 = +-1, so a_0^{-1} = a_0). */
  QSeries b(order_);
  b.c_[0] = a0;
  for (int n = 1; n <= order_; ++n) {
    Int acc = 0;
    for (int k = 1; k <= n; ++k) {
      if (c_[k] == 0) continue;
      acc += c_[k] * b.c_[n - k];
    }
    b.c_[n] = (a0 == 1) ? -acc : acc;
  }
  return b;
}

std::string QSeries::to_string() const {
  std::ostringstream out;
  for (int n = 0; n <= order_; ++n) {
    if (n) out << ' ';
    out << c_[n].get_str();
  }
  return out.str();
}

QSeries pochhammer(Monomial x, int step, int count, int order) {
  if (step < 1) throw usage_error("pochhammer: step must be >= 1");
  if (x.exponent < 0) throw usage_error("pochhammer: negative exponent");
  if (count == kInf && x.exponent < 1)
    throw divergence_error("pochhammer: infinite product needs exponent >= 1");
  if (count < 0 && count != kInf)
    throw usage_error("pochhammer: negative count");

  QSeries r = QSeries::one(order);
  for (int i = 0; count == kInf || i < count; ++i) {
    int e = x.exponent + step * i;
    /* Later factors are congruent to 1 modulo q^{order+1}. */
    if (e > order) break;
    r.mul_one_minus_qm(e, x.sign);
  }
  return r;
}

QSeries bracket(int a, int m, int count, int order) {
  if (m < 1 || a < 1 || (count == kInf && a >= m))
    throw divergence_error("bracket: need m >= 1 and 1 <= a" +
                           std::string(count == kInf ? " < m" : ""));
  return pochhammer({+1, a}, m, count, order) *
         pochhammer({+1, m - a}, m, count, order);
}

BivariateSeries operator*(const BivariateSeries& a, const BivariateSeries& b) {
  a.check_dims(b);
  BivariateSeries r(a.x_degree_, a.order_);
  for (int i = 0; i <= a.x_degree_; ++i)
    for (int j = 0; i + j <= a.x_degree_; ++j)
      r.rows_[i + j] += a.rows_[i] * b.rows_[j];
  return r;
}

BivariateSeries bi_pochhammer_x(int sign, int e, int step, int count,
                                int power, int x_degree, int order) {
  if (step < 1) throw usage_error("bi_pochhammer_x: step must be >= 1");
  if (power != 1 && power != -1)
    throw usage_error("bi_pochhammer_x: power must be +-1");

  BivariateSeries r = BivariateSeries::one(x_degree, order);
  for (int i = 0; count == kInf || i < count; ++i) {
    int qp = e + step * i;
    if (qp > order) break;  // factor is 1 within the q truncation
    if (power == 1) {
      /* Multiply by 1 - sign*x*q^qp: row m gains -sign*q^qp*(old row m-1). */
      for (int m = x_degree; m >= 1; --m)
        r.row(m).add_shifted(r.row(m - 1), qp, -sign);
    } else {
      /* Multiply by 1/(1 - sign*x*q^qp) via the ascending recurrence
       * new[m] = old[m] + sign*q^qp*new[m-1]. */
      for (int m = 1; m <= x_degree; ++m)
        r.row(m).add_shifted(r.row(m - 1), qp, sign);
    }
  }
  return r;
}

}  // namespace qrr
