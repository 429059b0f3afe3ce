#ifndef QRR_SPECFILE_HPP
#define QRR_SPECFILE_HPP

#include <string>

#include "multisum.hpp"
#include "products.hpp"
#include "verify.hpp"

namespace qrr {

/* JSON schemas mirroring the spec structs field for field.
 *
 * Sum document:
 *   { "s": 3, "diag": [1,8,2], "cross": [[0,2,2],[2,0,4],[2,4,0]],
 *     "linear": [1,5,1], "sign": [0,0,1], "denom_step": [1,2,2],
 *     "x_weight": [..], "tail": {"x_exp":1,"c0":1,"c":[2,3]} }
 * `cross` may also be given as the flat upper triangle [2,2,4].
 *
 * Product document:
 *   { "factors": [ {"kind":"bracket","a":2,"m":16,"count":"inf","power":-1},
 *                  {"kind":"pochhammer","sign":-1,"a":2,"m":6} ] }
 *
 * A check document pairs the two (sum may be replaced by "single" with
 * fields alpha/beta/offset):
 *   { "name": "...", "sum": {...}, "product": {...} } */
MultisumSpec parse_multisum_json(const std::string& text);
ProductSpec parse_product_json(const std::string& text);

/* Parses the check document at `path` and compares sum vs product. */
VerifyReport check_spec_file(const std::string& path, int order);

}  // namespace qrr

#endif
