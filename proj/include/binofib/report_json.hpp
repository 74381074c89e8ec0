/// @file report_json.hpp
/// @brief JSON-lines serialization of verification reports.
///
/// One object per record, keys in this order:
///   {"id": "C18", "params": {"n": 2, "s": 1}, "lhs": "11", "rhs": "11", "match": true}
/// Skipped records carry "skipped": "<reason>" instead of lhs/rhs/match.
/// Out-of-contract records add "out_of_contract": true. Sequence values are
/// decimal strings. A final {"summary": {...}} object carries the totals.
#ifndef BINOFIB_REPORT_JSON_HPP
#define BINOFIB_REPORT_JSON_HPP

#include <binofib/closed_forms.hpp>
#include <binofib/verify.hpp>

#include <json.hpp>

#include <string>

namespace binofib {

using Json = nlohmann::ordered_json;

inline Json params_to_json(IdentityId id, const IdentityParams& q) {
  const unsigned slots = descriptor(id).slots;
  Json out = Json::object();
  auto put_rational = [&](const char* key, const ExactRational& v) {
    if (v.is_integer() && v.num().fits_slong_p()) {
      out[key] = v.num().get_si();
    } else {
      out[key] = v.to_string();
    }
  };
  if ((slots & kSlotN) != 0U) out["n"] = q.n;
  if ((slots & kSlotJ) != 0U) out["j"] = q.j;
  if ((slots & kSlotR) != 0U) out["r"] = q.r;
  if ((slots & kSlotS) != 0U) out["s"] = q.s;
  if ((slots & kSlotP) != 0U) out["p"] = q.p;
  if ((slots & kSlotM) != 0U) out["m"] = q.m;
  if ((slots & kSlotX) != 0U) put_rational("x", q.x);
  if ((slots & kSlotZ) != 0U) put_rational("z", q.z);
  return out;
}

inline Json record_to_json(const VerificationRecord& rec) {
  Json out;
  out["id"] = std::string(identity_name(rec.id));
  out["params"] = params_to_json(rec.id, rec.params);
  if (rec.skipped()) {
    out["skipped"] = *rec.skipped_reason;
    return out;
  }
  out["lhs"] = rec.lhs.to_string();
  out["rhs"] = rec.rhs.to_string();
  out["match"] = rec.match;
  if (rec.out_of_contract) {
    out["out_of_contract"] = true;
  }
  return out;
}

inline Json summary_to_json(const Report& report) {
  std::size_t matched = 0;
  std::size_t skipped = 0;
  std::size_t out_of_contract = 0;
  Json per_id = Json::object();
  for (const auto& [pos, t] : report.totals) {
    matched += t.matched;
    skipped += t.skipped;
    out_of_contract += t.out_of_contract;
    per_id[std::string(identity_name(static_cast<IdentityId>(pos)))] = {
        {"checked", t.checked}, {"matched", t.matched}, {"skipped", t.skipped},
        {"out_of_contract", t.out_of_contract}};
  }
  Json summary;
  summary["records"] = report.records.size();
  summary["checked"] = report.checked();
  summary["matched"] = matched;
  summary["skipped"] = skipped;
  summary["out_of_contract"] = out_of_contract;
  summary["failures"] = report.failures.size();
  summary["verdict"] = report.passed() ? "PASS" : "FAIL";
  summary["per_id"] = std::move(per_id);
  return Json{{"summary", std::move(summary)}};
}

/// Newline-terminated JSON lines: every record, then the summary.
inline std::string to_json_lines(const Report& report) {
  std::string out;
  for (const auto& rec : report.records) {
    out += record_to_json(rec).dump();
    out += '\n';
  }
  out += summary_to_json(report).dump();
  out += '\n';
  return out;
}

}  // namespace binofib

#endif  // BINOFIB_REPORT_JSON_HPP
