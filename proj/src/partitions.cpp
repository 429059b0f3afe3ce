#include "partitions.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <sstream>

namespace qrr {

namespace {

/* DFS over partitions in weakly decreasing part order.  Every predicate
 * here is prefix-closed, so each node of the search tree is itself an
 * admissible partition and gets emitted.  `admit` checks whether part v
 * may be appended to the current stack. */
template <class Admit, class Emit>
void dfs(int budget, int total, std::vector<int>& parts, int max_len,
         const Admit& admit, const Emit& emit) {
  emit(total, (int)parts.size());
  if ((int)parts.size() >= max_len) return;
  int hi = parts.empty() ? budget : std::min(budget, parts.back());
  for (int v = hi; v >= 1; --v) {
    if (!admit(parts, v)) continue;
    parts.push_back(v);
    dfs(budget - v, total + v, parts, max_len, admit, emit);
    parts.pop_back();
  }
}

int trailing_ones(const std::vector<int>& parts) {
  int c = 0;
  for (auto it = parts.rbegin(); it != parts.rend() && *it == 1; ++it) ++c;
  return c;
}

template <class Emit>
void enumerate(const PartitionPredicate& p, int budget, int max_len,
               const Emit& emit) {
  std::vector<int> parts;
  std::visit(
      [&](const auto& pred) {
        using T = std::decay_t<decltype(pred)>;
        if constexpr (std::is_same_v<T, AgC>) {
          auto admit = [&pred](const std::vector<int>& ps, int v) {
            int len = (int)ps.size();
            if (len >= pred.k - 1 && ps[len - (pred.k - 1)] - v < 2)
              return false;
            if (v == 1 && trailing_ones(ps) + 1 >= pred.i) return false;
            return true;
          };
          dfs(budget, 0, parts, max_len, admit, emit);
        } else if constexpr (std::is_same_v<T, AgD>) {
          int mod = 2 * pred.k + 1;
          auto admit = [&pred, mod](const std::vector<int>&, int v) {
            int r = v % mod;
            return r != 0 && r != pred.i % mod && r != (mod - pred.i) % mod;
          };
          dfs(budget, 0, parts, max_len, admit, emit);
        } else if constexpr (std::is_same_v<T, CapC>) {
          auto admit = [&pred](const std::vector<int>& ps, int v) {
            if (v == pred.a) return false;
            if (!ps.empty()) {
              int gap = ps.back() - v;
              if (gap < 2) return false;
              if (gap <= 3 && (ps.back() + v) % 3 != 0) return false;
            }
            return true;
          };
          dfs(budget, 0, parts, max_len, admit, emit);
        } else if constexpr (std::is_same_v<T, CapD>) {
          auto admit = [&pred](const std::vector<int>& ps, int v) {
            int r = v % 6;
            if (r == pred.a % 6 || r == (6 - pred.a) % 6) return false;
            return ps.empty() || v < ps.back();
          };
          dfs(budget, 0, parts, max_len, admit, emit);
        } else {
          static_assert(std::is_same_v<T, ResidueSet>);
          auto admit = [&pred](const std::vector<int>& ps, int v) {
            if (!pred.residues.count(v % pred.m)) return false;
            return !pred.distinct || ps.empty() || v < ps.back();
          };
          dfs(budget, 0, parts, max_len, admit, emit);
        }
      },
      p);
}

}  // namespace

QSeries gf(const PartitionPredicate& p, int order) {
  QSeries r(order);
  enumerate(p, order, std::numeric_limits<int>::max(),
            [&](int total, int) { r.at(total) += 1; });
  return r;
}

long long count(int n, const PartitionPredicate& p) {
  if (n < 0) throw usage_error("count: negative n");
  long long c = 0;
  enumerate(p, n, std::numeric_limits<int>::max(), [&](int total, int) {
    if (total == n) ++c;
  });
  return c;
}

BivariateSeries capparelli_gf_bivariate(int a, int x_degree, int order) {
  if (a != 1 && a != 2) throw usage_error("capparelli_gf_bivariate: a in {1,2}");
  BivariateSeries r(x_degree, order);
  enumerate(CapC{a}, order, x_degree,
            [&](int total, int len) { r.row(len).at(total) += 1; });
  return r;
}

PartitionPredicate parse_predicate(const std::string& text) {
  std::string norm = text;
  std::replace(norm.begin(), norm.end(), ',', ' ');
  std::istringstream in(norm);
  std::string kind;
  in >> kind;
  auto next_int = [&](const char* what) {
    int v;
    if (!(in >> v))
      throw usage_error("predicate '" + text + "': missing " + what);
    return v;
  };
  if (kind == "ag-c") {
    int k = next_int("k"), i = next_int("i");
    if (k < 2 || i < 1 || i > k) throw usage_error("ag-c: need k >= 2, 1 <= i <= k");
    return AgC{k, i};
  }
  if (kind == "ag-d") {
    int k = next_int("k"), i = next_int("i");
    if (k < 2 || i < 1 || i > k) throw usage_error("ag-d: need k >= 2, 1 <= i <= k");
    return AgD{k, i};
  }
  if (kind == "cap-c") {
    int a = next_int("a");
    if (a != 1 && a != 2) throw usage_error("cap-c: a must be 1 or 2");
    return CapC{a};
  }
  if (kind == "cap-d") {
    int a = next_int("a");
    if (a != 1 && a != 2) throw usage_error("cap-d: a must be 1 or 2");
    return CapD{a};
  }
  if (kind == "residues") {
    ResidueSet rs;
    rs.m = next_int("modulus");
    if (rs.m < 1) throw usage_error("residues: modulus must be >= 1");
    std::string tok;
    bool any = false;
    while (in >> tok) {
      if (tok == "--distinct") {
        rs.distinct = true;
        continue;
      }
      rs.residues.insert(((std::stoi(tok) % rs.m) + rs.m) % rs.m);
      any = true;
    }
    if (!any) throw usage_error("residues: no residues given");
    return rs;
  }
  throw usage_error("unknown predicate kind '" + kind + "'");
}

}  // namespace qrr
