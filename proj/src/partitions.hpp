#ifndef QRR_PARTITIONS_HPP
#define QRR_PARTITIONS_HPP

#include <set>
#include <string>
#include <variant>

#include "qseries.hpp"

namespace qrr {

/* Difference condition lambda_j - lambda_{j+k-1} >= 2 with fewer than i
 * parts equal to 1. */
struct AgC {
  int k, i;
};
/* No part congruent to 0 or +-i modulo 2k+1. */
struct AgD {
  int k, i;
};
/* Gaps >= 2; gap <= 3 forces lambda_j + lambda_{j+1} = 0 mod 3; no part
 * equal to a. */
struct CapC {
  int a;
};
/* Distinct parts, none congruent to +-a modulo 6. */
struct CapD {
  int a;
};
/* All parts congruent to some allowed residue modulo m. */
struct ResidueSet {
  int m;
  std::set<int> residues;
  bool distinct = false;
};

using PartitionPredicate = std::variant<AgC, AgD, CapC, CapD, ResidueSet>;

/* Parse the CLI syntax: "ag-c k i", "ag-d k i", "cap-c a", "cap-d a",
 * "residues m s1,s2,... [--distinct]" (comma-separated forms such as
 * "cap-c,1" are accepted too). */
PartitionPredicate parse_predicate(const std::string& text);

long long count(int n, const PartitionPredicate& p);

/* sum_n count(n, p) q^n up to the order. */
QSeries gf(const PartitionPredicate& p, int order);

/* Coefficient of x^m q^n counts CapC(a)-partitions of n with exactly m
 * parts. */
BivariateSeries capparelli_gf_bivariate(int a, int x_degree, int order);

}  // namespace qrr

#endif
