#include "multisum.hpp"

#include <algorithm>

namespace qrr {

void MultisumSpec::validate() const {
  auto want = [&](size_t n, const char* what) {
    if (n != (size_t)s) throw usage_error(std::string("MultisumSpec: ") + what);
  };
  if (s < 1) throw usage_error("MultisumSpec: need at least one variable");
  want(diag.size(), "diag size mismatch");
  want(cross.size(), "cross size mismatch");
  want(linear.size(), "linear size mismatch");
  want(sign.size(), "sign size mismatch");
  want(denom_step.size(), "denom_step size mismatch");
  if (!x_weight.empty()) want(x_weight.size(), "x_weight size mismatch");
  for (int l = 0; l < s; ++l) {
    if (diag[l] < 1) throw usage_error("MultisumSpec: diag entries must be >= 1");
    if (denom_step[l] < 1)
      throw usage_error("MultisumSpec: denom_step entries must be >= 1");
    if (sign[l] != 0 && sign[l] != 1)
      throw usage_error("MultisumSpec: sign entries must be 0 or 1");
    if (!x_weight.empty() && x_weight[l] < 0)
      throw usage_error("MultisumSpec: x_weight entries must be >= 0");
    want(cross[l].size(), "cross row size mismatch");
    if (cross[l][l] != 0)
      throw usage_error("MultisumSpec: cross diagonal must be zero");
    for (int m = 0; m < s; ++m) {
      if (cross[l][m] < 0)
        throw usage_error("MultisumSpec: cross entries must be >= 0");
      if (cross[l][m] != cross[m][l])
        throw usage_error("MultisumSpec: cross table must be symmetric");
    }
  }
  if (tail) {
    if (tail->x_exp < 0 || tail->c0 < 1)
      throw usage_error("MultisumSpec: tail needs x_exp >= 0 and c0 >= 1");
    want(tail->c.size(), "tail coefficient size mismatch");
    for (int v : tail->c)
      if (v < 0) throw usage_error("MultisumSpec: tail coefficients must be >= 0");
  }
}

MultisumSpec MultisumSpec::without_variable(int idx) const {
  if (idx < 0 || idx >= s) throw usage_error("without_variable: bad index");
  MultisumSpec r;
  r.s = s - 1;
  for (int l = 0; l < s; ++l) {
    if (l == idx) continue;
    r.diag.push_back(diag[l]);
    r.linear.push_back(linear[l]);
    r.sign.push_back(sign[l]);
    r.denom_step.push_back(denom_step[l]);
    if (!x_weight.empty()) r.x_weight.push_back(x_weight[l]);
    std::vector<int> row;
    for (int m = 0; m < s; ++m)
      if (m != idx) row.push_back(cross[l][m]);
    r.cross.push_back(std::move(row));
  }
  if (tail) {
    TailFactor t;
    t.x_exp = tail->x_exp;
    t.c0 = tail->c0;
    for (int l = 0; l < s; ++l)
      if (l != idx) t.c.push_back(tail->c[l]);
    r.tail = t;
  }
  r.validate();
  return r;
}

namespace {

inline long binom2(long n) { return n * (n - 1) / 2; }

/* min over t >= 0 of d*binom(t,2) + B*t; finite since d >= 1. */
long variable_floor(int d, long B) {
  long best = 0, val = 0;
  for (long t = 1;; ++t) {
    val += (long)d * (t - 1) + B;  // increment from t-1 to t
    if (val < best)
      best = val;
    else if ((long)d * t + B > 0)
      break;  // increments are positive from here on
  }
  return best;
}

struct Evaluator {
  const MultisumSpec& spec;
  int order;
  int x_degree;          // -1 for univariate
  BivariateSeries* bi;   // one of these two receives the result
  QSeries* uni;
  EvalStats* stats;
  std::vector<long> floor_tail;  // sum of variable floors for depths > l
  std::vector<int> idx;

  Evaluator(const MultisumSpec& sp, int ord, int xd, BivariateSeries* b,
            QSeries* u, EvalStats* st)
      : spec(sp), order(ord), x_degree(xd), bi(b), uni(u), stats(st) {
    floor_tail.assign(sp.s + 1, 0);
    for (int l = sp.s - 1; l >= 0; --l)
      floor_tail[l] = floor_tail[l + 1] +
                      variable_floor(sp.diag[l], sp.linear[l]);
    idx.assign(sp.s, 0);
  }

  void leaf(long expo, int xw, int parity, const QSeries& denom) {
    if (stats) ++stats->terms;
    int sgn = (parity & 1) ? -1 : +1;
    auto put = [&](int xpow, long e) {
      if (e > order) return;
      if (uni)
        uni->add_shifted(denom, (int)e, sgn);
      else if (xpow <= x_degree)
        bi->row(xpow).add_shifted(denom, (int)e, sgn);
    };
    put(xw, expo);
    if (spec.tail) {
      long te = expo + spec.tail->c0;
      for (int l = 0; l < spec.s; ++l) te += (long)spec.tail->c[l] * idx[l];
      put(xw + spec.tail->x_exp, te);
    }
  }

  void recurse(int depth, long expo, int xw, int parity, const QSeries& denom) {
    if (depth == spec.s) {
      leaf(expo, xw, parity, denom);
      return;
    }
    /* Effective linear coefficient at this prefix. */
    long L = spec.linear[depth];
    for (int b = 0; b < depth; ++b) L += (long)spec.cross[b][depth] * idx[b];
    const int d = spec.diag[depth];
    const int step = spec.denom_step[depth];
    const int w = spec.has_x() ? spec.x_weight[depth] : 0;
    const int par = spec.sign[depth];

    QSeries den = denom;
    long e = expo;
    int x = xw;
    for (int i = 0;; ++i) {
      if (i > 0) {
        e += (long)d * (i - 1) + L;
        den.div_one_minus_qm(step * i);
        x += w;
      }
      idx[depth] = i;
      long bound = e + floor_tail[depth + 1];
      bool in_range = bound <= order && (x_degree < 0 || x <= x_degree);
      if (in_range) {
        recurse(depth + 1, e, x, parity + par * i, den);
      } else {
        /* Once the exponent increments are positive (d >= 1 guarantees
         * they eventually are) and the bound is exceeded, no larger i
         * can contribute; x overflow with positive weight is likewise
         * monotone. */
        bool expo_dead = bound > order && (long)d * i + L > 0;
        bool x_dead = x_degree >= 0 && x > x_degree && w > 0;
        if (expo_dead || x_dead) break;
        if (x_degree >= 0 && x > x_degree && w == 0) break;
      }
      idx[depth] = 0;
    }
  }
};

}  // namespace

QSeries eval(const MultisumSpec& spec, int order, EvalStats* stats) {
  spec.validate();
  if (spec.has_x() || (spec.tail && spec.tail->x_exp > 0))
    throw usage_error("eval: spec carries x data; use eval_bivariate");
  QSeries result(order);
  Evaluator ev(spec, order, -1, nullptr, &result, stats);
  ev.recurse(0, 0, 0, 0, QSeries::one(order));
  return result;
}

BivariateSeries eval_bivariate(const MultisumSpec& spec, int x_degree,
                               int order, EvalStats* stats) {
  spec.validate();
  if (!spec.has_x())
    throw usage_error("eval_bivariate: spec has no x_weight");
  BivariateSeries result(x_degree, order);
  Evaluator ev(spec, order, x_degree, &result, nullptr, stats);
  ev.recurse(0, 0, 0, 0, QSeries::one(order));
  return result;
}

MultisumSpec andrews_gordon_spec(int k, int i) {
  if (k < 2) throw usage_error("andrews_gordon_spec: need k >= 2");
  if (i < 1 || i > k) throw usage_error("andrews_gordon_spec: need 1 <= i <= k");
  int s = k - 1;
  MultisumSpec sp;
  sp.s = s;
  sp.cross.assign(s, std::vector<int>(s, 0));
  for (int a = 1; a <= s; ++a) {
    sp.diag.push_back(2 * a);
    sp.linear.push_back(a + std::max(0, a - i + 1));
    sp.sign.push_back(0);
    sp.denom_step.push_back(1);
    for (int b = 1; b <= s; ++b)
      if (a != b) sp.cross[a - 1][b - 1] = 2 * std::min(a, b);
  }
  sp.validate();
  return sp;
}

QSeries eval_single(const SingleSum& spec, int order, EvalStats* stats) {
  if (spec.alpha < 1 || spec.beta < 0 || spec.offset < 0 || spec.offset > 1)
    throw usage_error("eval_single: bad single-sum data");
  QSeries result(order);
  QSeries den = QSeries::one(order);
  for (int m = 1; m <= spec.offset; ++m) den.div_one_minus_qm(m);
  for (long n = 0;; ++n) {
    long e = spec.alpha * n * n + spec.beta * n;
    if (e > order) break;
    if (n > 0) {
      den.div_one_minus_qm((int)(2 * n + spec.offset - 1));
      den.div_one_minus_qm((int)(2 * n + spec.offset));
    }
    result.add_shifted(den, (int)e);
    if (stats) ++stats->terms;
  }
  return result;
}

}  // namespace qrr
