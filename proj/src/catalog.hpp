#ifndef QRR_CATALOG_HPP
#define QRR_CATALOG_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "multisum.hpp"
#include "products.hpp"
#include "qseries.hpp"

namespace qrr {

enum class StatusClaim { theorem, conjecture };

struct Mismatch {
  int x_exp = 0;  // 0 for univariate comparisons
  int q_exp = 0;
  Int lhs;
  Int rhs;
};

struct CheckResult {
  std::optional<Mismatch> mismatch;
  long term_count = 0;
  std::string detail;  // e.g. which family member failed
};

/* A named (LHS, RHS) pair.  `check` evaluates both sides at the given
 * q order and reports the first mismatch. */
struct CatalogEntry {
  std::string name;
  StatusClaim status = StatusClaim::theorem;
  std::string reference;
  std::function<CheckResult(int order)> check;
  /* LHS as a plain q-series, when the entry has one (used by the
   * `series` command); null for bivariate and family entries. */
  std::function<QSeries(int order)> lhs_series;
  /* One closure per mutable linear coefficient of the LHS sum; each
   * re-runs the check with that coefficient bumped by +1 and returns
   * true when a mismatch is (correctly) detected. */
  std::vector<std::function<bool(int order)>> mutations;
};

const std::vector<CatalogEntry>& catalog();
const CatalogEntry* find_entry(const std::string& name);
std::vector<std::string> catalog_names();

/* Multisum data shared between the catalog and the test suites. */
MultisumSpec level5_spec(int a);             // a in {0,1}
MultisumSpec level7_triple_spec(int a);      // a in {0,1}
MultisumSpec level7_quad_theorem_spec(int a);
MultisumSpec level7_quad_proof_spec(int a);
MultisumSpec tt_l4_spec(int variant);        // 234, 146, 256
MultisumSpec f1_spec(int a, int b, int c);
MultisumSpec f2_spec(int a, int b, int c);
MultisumSpec f3_spec(int a, int b, int c, int d);
MultisumSpec cap_double_spec(int a);         // a in {1,2}
MultisumSpec cap_alt_double_spec();          // alternative form for a = 2
MultisumSpec cap_triple_spec(int a);         // a in {1,2}

/* x = 1 specialization: drops the x weight and flattens the tail. */
MultisumSpec at_x1(MultisumSpec spec);

/* All multisum specs referenced by catalog entries, for sweep-style
 * tests (pruning soundness, mutation sensitivity). */
std::vector<std::pair<std::string, MultisumSpec>> catalog_multisum_specs();

}  // namespace qrr

#endif
