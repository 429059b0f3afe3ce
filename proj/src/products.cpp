#include "products.hpp"

namespace qrr {

QSeries eval_product(const ProductSpec& p, int order) {
  QSeries r = QSeries::one(order);
  for (const ProductFactor& f : p.factors) {
    QSeries s = (f.kind == ProductFactor::Kind::bracket)
                    ? bracket(f.a, f.m, f.count, order)
                    : pochhammer({f.sign, f.a}, f.m, f.count, order);
    r *= (f.power == -1) ? s.inverted() : s;
  }
  return r;
}

ProductFactor poch_factor(int sign, int a, int m, int power, int count) {
  ProductFactor f;
  f.kind = ProductFactor::Kind::pochhammer;
  f.sign = sign;
  f.a = a;
  f.m = m;
  f.power = power;
  f.count = count;
  return f;
}

ProductFactor bracket_factor(int a, int m, int power, int count) {
  ProductFactor f;
  f.kind = ProductFactor::Kind::bracket;
  f.a = a;
  f.m = m;
  f.power = power;
  f.count = count;
  return f;
}

ProductSpec inverse_bracket_product(const std::vector<int>& residues, int m) {
  ProductSpec p;
  for (int r : residues) p.factors.push_back(bracket_factor(r, m, -1));
  return p;
}

ProductSpec char_A22(int level, const std::string& tag) {
  auto unknown = [&]() -> ProductSpec {
    throw usage_error("char_A22: unknown (level, weight) pair: level " +
                      std::to_string(level) + ", " + tag);
  };
  switch (level) {
    case 3:
      /* Displayed both as negative Pochhammer products and as bracket
       * quotients; the bracket quotient is the catalog form, the other
       * appears as a product-equivalence entry. */
      if (tag == "3L0") return inverse_bracket_product({2, 3}, 12);
      if (tag == "L0+L1") {
        ProductSpec p;
        p.factors.push_back(bracket_factor(2, 12, +1));
        p.factors.push_back(bracket_factor(1, 12, -1));
        p.factors.push_back(bracket_factor(3, 12, -1));
        p.factors.push_back(bracket_factor(5, 12, -1));
        return p;
      }
      return unknown();
    case 4:
      if (tag == "4L0") return inverse_bracket_product({2, 3, 4}, 14);
      if (tag == "2L0+L1") return inverse_bracket_product({1, 4, 6}, 14);
      if (tag == "2L1") return inverse_bracket_product({2, 5, 6}, 14);
      return unknown();
    case 5:
      if (tag == "5L0") return inverse_bracket_product({2, 3, 4, 5}, 16);
      if (tag == "L0+2L1") return inverse_bracket_product({1, 4, 6, 7}, 16);
      if (tag == "3L0+L1") return inverse_bracket_product({1, 3, 5, 7}, 16);
      return unknown();
    case 7:
      if (tag == "5L0+L1")
        return inverse_bracket_product({1, 3, 4, 5, 7, 9}, 20);
      if (tag == "L0+3L1")
        return inverse_bracket_product({1, 3, 5, 7, 8, 9}, 20);
      if (tag == "7L0") return inverse_bracket_product({2, 3, 4, 5, 6, 7}, 20);
      if (tag == "3L0+2L1")
        return inverse_bracket_product({1, 2, 5, 6, 8, 9}, 20);
      return unknown();
    default:
      return unknown();
  }
}

ProductSpec char_A13_level2(int i) {
  if (i < 1 || i > 7)
    throw usage_error("char_A13_level2: need 1 <= i <= 7 (i = 0 degenerates)");
  ProductSpec p;
  p.factors.push_back(poch_factor(+1, 16, 16, +1));
  p.factors.push_back(poch_factor(+1, 2, 2, -1));
  p.factors.push_back(bracket_factor((2 * i) % 16, 16, +1));
  p.factors.push_back(bracket_factor(i, 16, -1));
  return p;
}

}  // namespace qrr
