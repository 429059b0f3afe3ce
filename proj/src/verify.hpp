#ifndef QRR_VERIFY_HPP
#define QRR_VERIFY_HPP

#include <string>
#include <vector>

#include "catalog.hpp"

namespace qrr {

struct VerifyReport {
  std::string name;
  int order = 0;
  StatusClaim status = StatusClaim::theorem;
  bool verified = false;
  std::optional<Mismatch> mismatch;
  long elapsed_ms = 0;
  long term_count = 0;
  std::string detail;
};

VerifyReport verify_entry(const std::string& name, int order);

/* Runs the catalog (filter: "all", "theorems", "conjectures", or a name
 * glob with '*' wildcards) on up to `parallelism` workers; reports are
 * ordered by name regardless of execution order. */
std::vector<VerifyReport> verify_all(int order, const std::string& filter,
                                     int parallelism = 1);

/* Finite summation lemmas: parts 1..3, each an identity per M <= m_max. */
VerifyReport check_lemma2(int part, int m_max, int order);

/* The telescoping certificate behind the fourth summation lemma:
 * (i) f_{M+1,j} - f_{M,j} = g_{M,j+1} - g_{M,j},
 * (ii) g_{M,j} != 0 implies 1 <= j <= M+1,
 * (iii) sum_j f_{M,j} = 1,
 * (iv) the lemma itself, via an independent per-term route. */
VerifyReport check_wz(int m_max, int order);

/* Builds the constrained-partition generating function three ways
 * (enumeration, double sum, triple sum), asserts pairwise equality, then
 * checks the q-difference equation
 * F(x) = (1+xq^3)F(xq^3) + x(q^{3-a}+q^{3+a}+xq^6)F(xq^6)
 *        + x^2 q^9 (1-xq^6) F(xq^9). */
VerifyReport check_qdiff_capparelli(int a, int x_degree, int order);

bool matches_filter(const CatalogEntry& e, const std::string& filter);

std::string reports_to_json(int order, const std::vector<VerifyReport>& rs);
std::string report_to_text(const VerifyReport& r);

}  // namespace qrr

#endif
