#pragma once

// Rendering of audit reports and evaluation results: human-readable
// table, JSON (nlohmann, insertion-ordered) and CSV.  All floating-point
// text goes through %.17g so every value round-trips exactly.

#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "glasser/verify.hpp"

namespace glasser {

using ordered_json = nlohmann::ordered_json;

inline std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

inline ordered_json to_json(const AuditEntry& e) {
  ordered_json j;
  j["rep"] = e.rep.rep_id;
  j["status"] = to_string(e.rep.status);
  if (e.rep.status == RepStatus::kOk) {
    j["value"] = e.rep.value;
    j["error_estimate"] = e.rep.error_estimate;
  }
  if (!e.rep.detail.empty()) j["detail"] = e.rep.detail;
  if (!e.applicability.empty()) j["applicability"] = e.applicability;
  j["conjectural"] = e.conjectural;
  j["suspect"] = e.suspect;
  return j;
}

inline ordered_json to_json(const IdentityReport& r) {
  ordered_json j;
  j["a"] = r.a;
  j["b"] = r.b;
  j["tolerance"] = r.tolerance;
  j["reference_value"] = r.reference_value;
  j["entries"] = ordered_json::array();
  for (const auto& e : r.entries) j["entries"].push_back(to_json(e));
  j["pairwise"] = ordered_json::array();
  for (const auto& p : r.pairwise) {
    ordered_json pj;
    pj["rep_i"] = p.rep_i;
    pj["rep_j"] = p.rep_j;
    pj["delta"] = p.delta;
    pj["verdict"] = to_string(p.verdict);
    pj["flagged"] = p.flagged;
    j["pairwise"].push_back(pj);
  }
  return j;
}

inline constexpr const char* kPairCsvHeader = "a,b,rep_i,rep_j,delta,verdict";

inline void append_pair_csv(std::ostringstream& out, const IdentityReport& r) {
  for (const auto& p : r.pairwise) {
    out << format_double(r.a) << ',' << format_double(r.b) << ',' << p.rep_i
        << ',' << p.rep_j << ',' << format_double(p.delta) << ','
        << to_string(p.verdict) << '\n';
  }
}

inline std::string report_to_csv(const IdentityReport& r) {
  std::ostringstream out;
  out << kPairCsvHeader << '\n';
  append_pair_csv(out, r);
  return out.str();
}

inline std::string reports_to_csv(const std::vector<IdentityReport>& rs) {
  std::ostringstream out;
  out << kPairCsvHeader << '\n';
  for (const auto& r : rs) append_pair_csv(out, r);
  return out.str();
}

inline std::string report_to_table(const IdentityReport& r) {
  std::ostringstream out;
  out << "f(a,b) audit at a=" << format_double(r.a)
      << " b=" << format_double(r.b)
      << " tolerance=" << format_double(r.tolerance) << '\n';
  for (const auto& e : r.entries) {
    out << "  " << e.rep.rep_id << ": ";
    if (e.rep.status == RepStatus::kOk) {
      out << format_double(e.rep.value)
          << " (err est " << format_double(e.rep.error_estimate) << ")";
    } else {
      out << to_string(e.rep.status);
      if (!e.rep.detail.empty()) out << " [" << e.rep.detail << "]";
    }
    if (e.conjectural) out << " [conjectural]";
    if (e.suspect) out << " [suspect]";
    out << '\n';
  }
  for (const auto& p : r.pairwise) {
    out << "  " << p.rep_i << " vs " << p.rep_j << ": |delta|="
        << format_double(p.delta) << " -> " << to_string(p.verdict);
    if (p.flagged) out << " (excluded from pass/fail)";
    out << '\n';
  }
  return out.str();
}

inline ordered_json to_json(const GrCheckResult& r) {
  ordered_json j;
  j["arias_confirmed"] = r.arias_confirmed;
  j["gr_refuted"] = r.gr_refuted;
  j["gap"] = r.gap;
  j["direct_value"] = r.direct_value;
  j["arias_value"] = r.arias;
  j["gr_claimed_value"] = r.gr_claimed;
  j["arias_delta"] = r.arias_delta;
  return j;
}

}  // namespace glasser
