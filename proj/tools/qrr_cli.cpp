/* Command-line front end.  All computation goes through the shared
 * library's C interface; this file only does argument handling and I/O.
 *
 * Exit codes: 0 = everything requested verified (conjecture mismatches
 * only warn), 1 = a theorem-level mismatch, 2 = usage error. */

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "qrr.h"

namespace {

/* Takes ownership of a library-allocated string. */
std::string take(char* s) {
  std::string out = s ? s : "";
  qrr_string_free(s);
  return out;
}

int usage_fail() {
  std::fprintf(stderr, "error: %s\n", qrr_last_error());
  return 2;
}

int report_exit(qrr_report* rep) {
  char* text = nullptr;
  if (qrr_report_text(rep, &text) != QRR_OK) {
    qrr_report_free(rep);
    return usage_fail();
  }
  std::printf("%s\n", take(text).c_str());
  bool ok = qrr_report_verified(rep) != 0;
  bool theorem = qrr_report_claim(rep) == QRR_CLAIM_THEOREM;
  qrr_report_free(rep);
  if (ok) return 0;
  return theorem ? 1 : 0;
}

int default_order() {
  if (const char* env = std::getenv("QRR_ORDER")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end && *end == '\0' && v >= 0) return (int)v;
    std::fprintf(stderr, "warning: ignoring malformed QRR_ORDER '%s'\n", env);
  }
  return 200;
}

int run_list() {
  char* names = nullptr;
  if (qrr_catalog_names(&names) != QRR_OK) return usage_fail();
  std::string all = take(names);
  size_t start = 0;
  while (start < all.size()) {
    size_t nl = all.find('\n', start);
    if (nl == std::string::npos) nl = all.size();
    std::string name = all.substr(start, nl - start);
    start = nl + 1;
    if (name.empty()) continue;
    qrr_claim claim;
    char* ref = nullptr;
    if (qrr_entry_claim(name.c_str(), &claim) != QRR_OK ||
        qrr_entry_reference(name.c_str(), &ref) != QRR_OK)
      return usage_fail();
    std::printf("%-24s %-11s %s\n", name.c_str(),
                claim == QRR_CLAIM_THEOREM ? "theorem" : "conjecture",
                take(ref).c_str());
  }
  return 0;
}

int run_verify(bool all, const std::vector<std::string>& names, int order,
               const std::string& json_path, int jobs) {
  std::string filter;
  if (all || names.empty()) {
    filter = "all";
  } else {
    for (const std::string& n : names) {
      /* Resolve plain names up front so typos list near matches. */
      if (n.find('*') == std::string::npos && n != "theorems" &&
          n != "conjectures") {
        qrr_claim claim;
        if (qrr_entry_claim(n.c_str(), &claim) != QRR_OK) return usage_fail();
      }
      filter += (filter.empty() ? "" : ",") + n;
    }
  }

  char* text = nullptr;
  char* json = nullptr;
  int thm = 0, conj = 0;
  qrr_status st =
      qrr_verify_all(order, filter.c_str(), jobs, &text,
                     json_path.empty() ? nullptr : &json, &thm, &conj);
  if (st != QRR_OK) return usage_fail();
  std::fputs(take(text).c_str(), stdout);
  if (!json_path.empty()) {
    std::ofstream out(json_path);
    if (!out) {
      qrr_string_free(json);
      std::fprintf(stderr, "error: cannot write '%s'\n", json_path.c_str());
      return 2;
    }
    out << take(json) << "\n";
  }
  if (conj > 0)
    std::fprintf(stderr, "warning: %d conjecture mismatch%s\n", conj,
                 conj == 1 ? "" : "es");
  return thm > 0 ? 1 : 0;
}

int run_series(const std::string& name, int order) {
  char* s = nullptr;
  if (qrr_series(name.c_str(), order, &s) != QRR_OK) return usage_fail();
  std::printf("%s\n", take(s).c_str());
  return 0;
}

int run_partitions(const std::string& pred, int max_n,
                   const std::string& compare) {
  int rc = 0;
  for (int n = 0; n <= max_n; ++n) {
    long long a = 0;
    if (qrr_partition_count(pred.c_str(), n, &a) != QRR_OK)
      return usage_fail();
    if (compare.empty()) {
      std::printf("%d\t%lld\n", n, a);
      continue;
    }
    long long b = 0;
    if (qrr_partition_count(compare.c_str(), n, &b) != QRR_OK)
      return usage_fail();
    std::printf("%d\t%lld\t%lld\t%s\n", n, a, b, a == b ? "ok" : "MISMATCH");
    if (a != b) rc = 1;
  }
  return rc;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of q-series identities"};
  app.require_subcommand(1);
  int order = default_order();
  int jobs = std::max(1u, std::thread::hardware_concurrency());

  auto* c_list = app.add_subcommand("list", "List catalog entries");

  auto* c_verify =
      app.add_subcommand("verify", "Verify catalog entries against products");
  bool all = false;
  std::vector<std::string> names;
  std::string json_path;
  c_verify->add_flag("--all", all, "Verify the whole catalog");
  c_verify->add_option("names", names,
                       "Entry names, globs, 'theorems' or 'conjectures'");
  c_verify->add_option("--order", order, "Truncation order");
  c_verify->add_option("--json", json_path, "Write the JSON report here");
  c_verify->add_option("--jobs", jobs, "Worker threads");

  auto* c_series =
      app.add_subcommand("series", "Print sum-side coefficients of an entry");
  std::string series_name;
  c_series->add_option("name", series_name, "Catalog entry")->required();
  c_series->add_option("--order", order, "Truncation order");

  auto* c_part =
      app.add_subcommand("partitions", "Count partitions under a predicate");
  std::string predicate, compare;
  int max_n = 0;
  c_part->add_option("--predicate", predicate,
                     "e.g. 'ag-c 2 2', 'cap-c,1', 'residues 2 1 --distinct'")
      ->required();
  c_part->add_option("--max-n", max_n, "Largest n to count")->required();
  c_part->add_option("--compare", compare,
                     "Second predicate; flag any count disagreement");

  auto* c_wz = app.add_subcommand("wz", "Check the telescoping certificate");
  int max_m = 20;
  c_wz->add_option("--max-m", max_m, "Largest M");
  c_wz->add_option("--order", order, "Truncation order");

  auto* c_qdiff = app.add_subcommand(
      "qdiff", "Check the Capparelli q-difference equation");
  int qa = 1, x_degree = 12;
  c_qdiff->add_option("--a", qa, "Parameter a")
      ->required()
      ->check(CLI::IsMember({1, 2}));
  c_qdiff->add_option("--x-degree", x_degree, "Truncation degree in x");
  c_qdiff->add_option("--order", order, "Truncation order");

  auto* c_spec =
      app.add_subcommand("check-spec", "Verify a sum/product check file");
  std::string spec_path;
  c_spec->add_option("file", spec_path, "JSON check document")->required();
  c_spec->add_option("--order", order, "Truncation order");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (c_list->parsed()) return run_list();
  if (c_verify->parsed())
    return run_verify(all, names, order, json_path, jobs);
  if (c_series->parsed()) return run_series(series_name, order);
  if (c_part->parsed()) return run_partitions(predicate, max_n, compare);
  if (c_wz->parsed()) {
    qrr_report* rep = nullptr;
    if (qrr_check_wz(max_m, order, &rep) != QRR_OK) return usage_fail();
    return report_exit(rep);
  }
  if (c_qdiff->parsed()) {
    qrr_report* rep = nullptr;
    if (qrr_check_qdiff(qa, x_degree, order, &rep) != QRR_OK)
      return usage_fail();
    return report_exit(rep);
  }
  if (c_spec->parsed()) {
    qrr_report* rep = nullptr;
    if (qrr_check_spec_file(spec_path.c_str(), order, &rep) != QRR_OK)
      return usage_fail();
    return report_exit(rep);
  }
  return 2;
}
