#ifndef QRR_PRODUCTS_HPP
#define QRR_PRODUCTS_HPP

#include <string>
#include <vector>

#include "qseries.hpp"

namespace qrr {

/* One Pochhammer or bracket factor of an infinite-product side. */
struct ProductFactor {
  enum class Kind { pochhammer, bracket };
  Kind kind = Kind::pochhammer;
  int sign = +1;    // sign of the monomial argument (pochhammer only)
  int a = 1;        // residue exponent
  int m = 1;        // modulus / step
  int count = kInf; // kInf or a finite length
  int power = +1;   // -1 means the factor is inverted
};

struct ProductSpec {
  std::vector<ProductFactor> factors;
};

QSeries eval_product(const ProductSpec& p, int order);

/* Convenience constructors. */
ProductFactor poch_factor(int sign, int a, int m, int power = +1,
                          int count = kInf);
ProductFactor bracket_factor(int a, int m, int power = +1, int count = kInf);

/* 1/[q^{r_1},...,q^{r_k}; q^m]_inf. */
ProductSpec inverse_bracket_product(const std::vector<int>& residues, int m);

/* Principal characters of A_2^(2) at levels 3, 4, 5, 7, keyed by an
 * ASCII weight tag ("5L0", "L0+2L1", ...). Unknown pairs are rejected. */
ProductSpec char_A22(int level, const std::string& weight_tag);

/* Level-2 principal characters of A_13^(2), 1 <= i <= 7:
 * (q^16;q^16)_inf / (q^2;q^2)_inf * [q^{2i};q^16]_inf / [q^i;q^16]_inf.
 * i = 0 degenerates formally and is rejected. */
ProductSpec char_A13_level2(int i);

}  // namespace qrr

#endif
