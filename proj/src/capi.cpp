#include "qrr.h"

#include <cstring>
#include <sstream>
#include <string>

#include "catalog.hpp"
#include "partitions.hpp"
#include "specfile.hpp"
#include "verify.hpp"

struct qrr_report {
  qrr::VerifyReport r;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <class Fn>
qrr_status guarded(Fn&& fn) {
  try {
    fn();
    return QRR_OK;
  } catch (const qrr::usage_error& e) {
    g_last_error = e.what();
    return QRR_ERR_USAGE;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return QRR_ERR_INTERNAL;
  }
}

const qrr::CatalogEntry& entry_or_throw(const char* name) {
  if (!name) throw qrr::usage_error("null entry name");
  const qrr::CatalogEntry* e = qrr::find_entry(name);
  if (e) return *e;
  /* List near matches to help the caller. */
  std::string msg = "unknown catalog entry '" + std::string(name) + "'";
  std::string near;
  for (const auto& c : qrr::catalog())
    if (c.name.find(name) != std::string::npos ||
        std::string(name).find(c.name.substr(0, 4)) != std::string::npos)
      near += (near.empty() ? "" : ", ") + c.name;
  if (!near.empty()) msg += "; did you mean: " + near;
  throw qrr::usage_error(msg);
}

}  // namespace

extern "C" {

const char* qrr_last_error(void) { return g_last_error.c_str(); }

qrr_status qrr_catalog_names(char** out) {
  return guarded([&] {
    std::string all;
    for (const auto& n : qrr::catalog_names()) all += n + "\n";
    *out = dup_string(all);
  });
}

qrr_status qrr_entry_claim(const char* name, qrr_claim* out) {
  return guarded([&] {
    *out = entry_or_throw(name).status == qrr::StatusClaim::theorem
               ? QRR_CLAIM_THEOREM
               : QRR_CLAIM_CONJECTURE;
  });
}

qrr_status qrr_entry_reference(const char* name, char** out) {
  return guarded([&] { *out = dup_string(entry_or_throw(name).reference); });
}

qrr_status qrr_verify(const char* name, int order, qrr_report** out) {
  return guarded([&] {
    entry_or_throw(name);
    *out = new qrr_report{qrr::verify_entry(name, order)};
  });
}

qrr_status qrr_verify_all(int order, const char* filter, int parallelism,
                          char** text_out, char** json_out,
                          int* theorem_mismatches, int* conjecture_mismatches) {
  return guarded([&] {
    auto reports = qrr::verify_all(order, filter ? filter : "all", parallelism);
    int thm = 0, conj = 0;
    std::string text;
    for (const auto& r : reports) {
      text += qrr::report_to_text(r) + "\n";
      if (!r.verified)
        (r.status == qrr::StatusClaim::theorem ? thm : conj) += 1;
    }
    if (text_out) *text_out = dup_string(text);
    if (json_out) *json_out = dup_string(qrr::reports_to_json(order, reports));
    if (theorem_mismatches) *theorem_mismatches = thm;
    if (conjecture_mismatches) *conjecture_mismatches = conj;
  });
}

qrr_status qrr_check_lemma(int part, int m_max, int order, qrr_report** out) {
  return guarded(
      [&] { *out = new qrr_report{qrr::check_lemma2(part, m_max, order)}; });
}

qrr_status qrr_check_wz(int m_max, int order, qrr_report** out) {
  return guarded([&] { *out = new qrr_report{qrr::check_wz(m_max, order)}; });
}

qrr_status qrr_check_qdiff(int a, int x_degree, int order, qrr_report** out) {
  return guarded([&] {
    if (a != 1 && a != 2) throw qrr::usage_error("qdiff: a must be 1 or 2");
    *out = new qrr_report{qrr::check_qdiff_capparelli(a, x_degree, order)};
  });
}

qrr_status qrr_check_spec_file(const char* path, int order, qrr_report** out) {
  return guarded([&] {
    if (!path) throw qrr::usage_error("null path");
    *out = new qrr_report{qrr::check_spec_file(path, order)};
  });
}

int qrr_report_verified(const qrr_report* r) { return r->r.verified ? 1 : 0; }

qrr_claim qrr_report_claim(const qrr_report* r) {
  return r->r.status == qrr::StatusClaim::theorem ? QRR_CLAIM_THEOREM
                                                  : QRR_CLAIM_CONJECTURE;
}

long qrr_report_elapsed_ms(const qrr_report* r) { return r->r.elapsed_ms; }

long qrr_report_term_count(const qrr_report* r) { return r->r.term_count; }

int qrr_report_mismatch_exponent(const qrr_report* r) {
  return r->r.mismatch ? r->r.mismatch->q_exp : -1;
}

qrr_status qrr_report_text(const qrr_report* r, char** out) {
  return guarded([&] { *out = dup_string(qrr::report_to_text(r->r)); });
}

void qrr_report_free(qrr_report* r) { delete r; }

qrr_status qrr_series(const char* name, int order, char** out) {
  return guarded([&] {
    const qrr::CatalogEntry& e = entry_or_throw(name);
    if (!e.lhs_series)
      throw qrr::usage_error("entry '" + std::string(name) +
                             "' has no univariate sum side");
    *out = dup_string(e.lhs_series(order).to_string());
  });
}

qrr_status qrr_partition_count(const char* predicate, int n, long long* out) {
  return guarded([&] {
    if (!predicate) throw qrr::usage_error("null predicate");
    *out = qrr::count(n, qrr::parse_predicate(predicate));
  });
}

void qrr_string_free(char* s) { delete[] s; }

}  // extern "C"
