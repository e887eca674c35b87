#ifndef PGCOVER_REPORT_HPP
#define PGCOVER_REPORT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "pgcover/search.hpp"

namespace pgcover {

using Json = nlohmann::ordered_json;

/// FNV-1a 64-bit digest of the raw input bytes, hex-encoded.
inline std::string input_digest(const std::string& bytes) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

inline Json json_point(const ProjectivePoint& pt) {
  Json arr = Json::array();
  for (std::size_t i = 0; i < pt.size(); ++i) arr.push_back(pt[i]);
  return arr;
}

inline Json json_point_set(const PointSet& b) {
  Json arr = Json::array();
  for (const ProjectivePoint& pt : b.points()) arr.push_back(json_point(pt));
  return arr;
}

inline Json json_cover_report(const CoverReport& rep) {
  Json j;
  j["covers"] = rep.covers;
  j["irredundant"] = rep.irredundant;
  j["maximal"] = rep.maximal;
  j["core_free"] = rep.core_free;
  j["method"] = rep.method;
  if (rep.witness_uncovered) j["witness_uncovered"] = *rep.witness_uncovered;
  Json priv = Json::array();
  for (const auto& w : rep.witness_private) priv.push_back(w ? Json(*w) : Json(nullptr));
  j["witness_private"] = priv;
  return j;
}

inline Json json_minimality(const PointSet& b, const MinimalityReport& mr) {
  Json j;
  j["size"] = b.size();
  j["space"] = {{"p", b.space().mod.value()}, {"m", b.space().m}};
  j["points"] = json_point_set(b);
  j["is_blocking"] = mr.is_blocking;
  j["is_minimal"] = mr.is_minimal();
  j["span_dimension"] = span_dimension(b);
  Json tangents = Json::array();
  for (const auto& w : mr.tangent_witness) tangents.push_back(w ? json_point(*w) : Json(nullptr));
  j["tangent_witnesses"] = tangents;
  j["redundant_points"] = mr.redundant_points;
  return j;
}

inline Json json_lemma_audit(const LemmaAudit& audit) {
  Json arr = Json::array();
  for (const AuditCheck& c : audit.checks)
    arr.push_back({{"name", c.name}, {"pass", c.pass}, {"witness", c.witness}});
  return {{"all_pass", audit.all_pass()}, {"checks", arr}};
}

inline Json json_search_outcome(const SearchOutcome& oc, bool include_timing) {
  Json j;
  switch (oc.status) {
    case SearchStatus::Found: j["status"] = "Found"; break;
    case SearchStatus::ExhaustedNone: j["status"] = "ExhaustedNone"; break;
    case SearchStatus::BudgetExceeded: j["status"] = "BudgetExceeded"; break;
  }
  j["nodes_explored"] = oc.nodes_explored;
  if (!oc.exhausted_reason.empty()) j["exhausted_reason"] = oc.exhausted_reason;
  j["witness_count"] = oc.witnesses.size();
  Json wits = Json::array();
  for (std::size_t i = 0; i < oc.witnesses.size(); ++i)
    wits.push_back({{"key", oc.witness_keys[i]}, {"points", json_point_set(oc.witnesses[i])}});
  j["witnesses"] = wits;
  j["weak_dedup"] = oc.weak_dedup;
  if (include_timing) j["elapsed_ms"] = oc.elapsed_ms;
  return j;
}

inline Json json_table(const std::vector<TableRow>& rows) {
  Json arr = Json::array();
  for (const TableRow& row : rows) {
    Json pairs = Json::array();
    for (const auto& [m, p] : row.pairs) pairs.push_back({{"m", m}, {"p", p}});
    Json cells = Json::array();
    for (const TableCell& c : row.cells) {
      std::string st = c.status == SearchStatus::Found
                           ? "Found"
                           : c.status == SearchStatus::ExhaustedNone ? "ExhaustedNone"
                                                                     : "BudgetExceeded";
      cells.push_back(
          {{"p", c.p}, {"m", c.m}, {"method", c.method}, {"status", st}, {"nodes", c.nodes}});
    }
    arr.push_back({{"n", row.n}, {"pairs", pairs}, {"cells", cells}});
  }
  return arr;
}

/// Single structured document per CLI run.
inline Json run_report(const std::string& command, const std::string& digest, Json result,
                       std::int64_t elapsed_ms, bool include_timing) {
  Json j;
  j["schema_version"] = 1;
  j["command"] = command;
  j["input_digest"] = digest;
  j["result"] = std::move(result);
  if (include_timing) j["timing_ms"] = elapsed_ms;
  return j;
}

}  // namespace pgcover

#endif
