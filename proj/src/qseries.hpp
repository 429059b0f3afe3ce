#ifndef QRR_QSERIES_HPP
#define QRR_QSERIES_HPP

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qrr {

using Int = mpz_class;

/* Count sentinel for infinite Pochhammer products. */
inline constexpr int kInf = -1;

struct usage_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct inversion_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct divergence_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/* The argument of a Pochhammer symbol: +q^a or -q^a. */
struct Monomial {
  int sign;      // +1 or -1
  int exponent;  // >= 0
};

/* A power series in q with integer coefficients, truncated at a fixed
 * order N (inclusive). All arithmetic is exact; mixing orders is an
 * error rather than an implicit re-truncation. */
class QSeries {
 public:
  explicit QSeries(int order) : order_(order), c_(order + 1) {
    if (order < 0) throw usage_error("QSeries: negative order");
  }

  static QSeries constant(const Int& value, int order) {
    QSeries s(order);
    s.c_[0] = value;
    return s;
  }
  static QSeries one(int order) { return constant(1, order); }

  /* The monomial c * q^e, or zero if e exceeds the order. */
  static QSeries monomial(const Int& c, int e, int order) {
    QSeries s(order);
    if (e <= order) s.c_[e] = c;
    return s;
  }

  int order() const { return order_; }
  const Int& operator[](int n) const { return c_[n]; }
  Int& at(int n) { return c_[n]; }
  const std::vector<Int>& coeffs() const { return c_; }

  bool is_zero() const {
    for (const Int& x : c_)
      if (x != 0) return false;
    return true;
  }

  friend QSeries operator+(const QSeries& a, const QSeries& b) {
    a.check_order(b);
    QSeries r = a;
    for (int n = 0; n <= a.order_; ++n) r.c_[n] += b.c_[n];
    return r;
  }
  friend QSeries operator-(const QSeries& a, const QSeries& b) {
    a.check_order(b);
    QSeries r = a;
    for (int n = 0; n <= a.order_; ++n) r.c_[n] -= b.c_[n];
    return r;
  }
  friend QSeries operator-(const QSeries& a) {
    QSeries r = a;
    for (Int& x : r.c_) x = -x;
    return r;
  }
  QSeries& operator+=(const QSeries& b) {
    check_order(b);
    for (int n = 0; n <= order_; ++n) c_[n] += b.c_[n];
    return *this;
  }
  QSeries& operator-=(const QSeries& b) {
    check_order(b);
    for (int n = 0; n <= order_; ++n) c_[n] -= b.c_[n];
    return *this;
  }

  /* Cauchy product truncated at the shared order. */
  friend QSeries operator*(const QSeries& a, const QSeries& b);
  QSeries& operator*=(const QSeries& b) { return *this = *this * b; }

  friend bool operator==(const QSeries& a, const QSeries& b) {
    return a.order_ == b.order_ && a.c_ == b.c_;
  }

  /* Multiplicative inverse; requires constant term +1 or -1. */
  QSeries inverted() const;

  /* this * q^e, coefficients beyond the order dropped. */
  QSeries shifted(int e) const {
    QSeries r(order_);
    for (int n = 0; e + n <= order_; ++n) r.c_[e + n] = c_[n];
    return r;
  }

  /* this += sign * q^e * t.  The workhorse of multisum accumulation. */
  void add_shifted(const QSeries& t, int e, int sign = +1) {
    check_order(t);
    if (sign >= 0)
      for (int n = 0; e + n <= order_; ++n) c_[e + n] += t.c_[n];
    else
      for (int n = 0; e + n <= order_; ++n) c_[e + n] -= t.c_[n];
  }

  /* In-place multiplication by (1 - s*q^m), linear time. */
  void mul_one_minus_qm(int m, int s = +1) {
    if (m <= 0) throw usage_error("mul_one_minus_qm: exponent must be positive");
    if (s >= 0)
      for (int n = order_; n >= m; --n) c_[n] -= c_[n - m];
    else
      for (int n = order_; n >= m; --n) c_[n] += c_[n - m];
  }

  /* In-place multiplication by 1/(1 - s*q^m), linear time. */
  void div_one_minus_qm(int m, int s = +1) {
    if (m <= 0) throw usage_error("div_one_minus_qm: exponent must be positive");
    if (s >= 0)
      for (int n = m; n <= order_; ++n) c_[n] += c_[n - m];
    else
      for (int n = m; n <= order_; ++n) c_[n] -= c_[n - m];
  }

  /* Smallest n with a_n != b_n, or none. */
  std::optional<int> first_mismatch(const QSeries& b) const {
    check_order(b);
    for (int n = 0; n <= order_; ++n)
      if (c_[n] != b.c_[n]) return n;
    return std::nullopt;
  }

  /* Space-separated decimal coefficients, constant term first. */
  std::string to_string() const;

 private:
  void check_order(const QSeries& b) const {
    if (order_ != b.order_)
      throw usage_error("QSeries: mixed truncation orders");
  }

  int order_;
  std::vector<Int> c_;
};

/* (x; q^step)_count truncated at the given order; count may be kInf,
 * in which case x.exponent >= 1 is required for convergence. */
QSeries pochhammer(Monomial x, int step, int count, int order);

/* [q^a; q^m]_count = (q^a; q^m)_count (q^{m-a}; q^m)_count. */
QSeries bracket(int a, int m, int count, int order);

/* A polynomial in x of bounded degree whose coefficients are q-series
 * sharing one truncation order. */
class BivariateSeries {
 public:
  BivariateSeries(int x_degree, int order)
      : x_degree_(x_degree), order_(order),
        rows_(x_degree + 1, QSeries(order)) {
    if (x_degree < 0) throw usage_error("BivariateSeries: negative x degree");
  }

  static BivariateSeries one(int x_degree, int order) {
    BivariateSeries s(x_degree, order);
    s.rows_[0] = QSeries::one(order);
    return s;
  }

  int x_degree() const { return x_degree_; }
  int order() const { return order_; }
  const QSeries& row(int m) const { return rows_[m]; }
  QSeries& row(int m) { return rows_[m]; }

  friend BivariateSeries operator+(const BivariateSeries& a,
                                   const BivariateSeries& b) {
    a.check_dims(b);
    BivariateSeries r = a;
    for (int m = 0; m <= a.x_degree_; ++m) r.rows_[m] += b.rows_[m];
    return r;
  }
  friend BivariateSeries operator-(const BivariateSeries& a,
                                   const BivariateSeries& b) {
    a.check_dims(b);
    BivariateSeries r = a;
    for (int m = 0; m <= a.x_degree_; ++m) r.rows_[m] -= b.rows_[m];
    return r;
  }

  /* Product truncated in both variables. */
  friend BivariateSeries operator*(const BivariateSeries& a,
                                   const BivariateSeries& b);

  friend bool operator==(const BivariateSeries& a, const BivariateSeries& b) {
    return a.x_degree_ == b.x_degree_ && a.rows_ == b.rows_;
  }

  /* x -> x*q^t: the x^m row is shifted by q^{t*m}. */
  BivariateSeries substituted(int t) const {
    if (t < 0) throw usage_error("substituted: negative shift");
    BivariateSeries r(x_degree_, order_);
    for (int m = 0; m <= x_degree_; ++m) r.rows_[m] = rows_[m].shifted(t * m);
    return r;
  }

  /* Evaluation at x = 1 (sum of rows). */
  QSeries at_x1() const {
    QSeries r(order_);
    for (const QSeries& s : rows_) r += s;
    return r;
  }

  /* First mismatching (x exponent, q exponent) scanning x then q. */
  std::optional<std::pair<int, int>> first_mismatch(
      const BivariateSeries& b) const {
    check_dims(b);
    for (int m = 0; m <= x_degree_; ++m)
      if (auto n = rows_[m].first_mismatch(b.rows_[m])) return std::pair{m, *n};
    return std::nullopt;
  }

 private:
  void check_dims(const BivariateSeries& b) const {
    if (x_degree_ != b.x_degree_ || order_ != b.order_)
      throw usage_error("BivariateSeries: dimension mismatch");
  }

  int x_degree_;
  int order_;
  std::vector<QSeries> rows_;
};

/* prod_{i=0}^{count-1} (1 - sign * x * q^{e + step*i}), truncated in both
 * variables; power -1 gives the inverse product.  Each factor is linear
 * in x, which covers every bivariate product in this project. */
BivariateSeries bi_pochhammer_x(int sign, int e, int step, int count,
                                int power, int x_degree, int order);

}  // namespace qrr

#endif
