#include "noet/reports.hpp"

namespace noet {

using nlohmann::json;

json point_json(const std::map<std::string, Rational>& pt) {
  json out = json::object();
  for (const auto& [v, c] : pt) out[v] = c.to_string();
  return out;
}

namespace {

std::string status_text(SubcoverReport::Status s) {
  switch (s) {
    case SubcoverReport::Status::Ok:
      return "ok";
    case SubcoverReport::Status::NotCoveredWithin:
      return "not_covered_within";
    case SubcoverReport::Status::UnsupportedInstance:
      return "unsupported_instance";
  }
  return "unknown";
}

}  // namespace

json subcover_json(const SubcoverReport& rep, json verification) {
  json trace = json::array();
  for (const auto& step : rep.trace) {
    json s;
    s["region"] = step.region;
    if (step.candidate_is_goal)
      s["candidate_index"] = nullptr;
    else
      s["candidate_index"] = step.candidate_index ? json(*step.candidate_index) : json(nullptr);
    s["candidate_is_goal"] = step.candidate_is_goal;
    s["degree_before"] = step.degree_before;
    s["degree_after"] = step.degree_after;
    trace.push_back(std::move(s));
  }
  json out;
  out["status"] = status_text(rep.status);
  out["indices"] = rep.indices;
  out["trace"] = std::move(trace);
  out["verification"] = std::move(verification);
  if (!rep.detail.empty()) out["detail"] = rep.detail;
  if (rep.uncovered_example) out["uncovered_example"] = point_json(*rep.uncovered_example);
  out["dimension"] = rep.dimension;
  out["scan_limit"] = rep.scan_limit;
  return out;
}

json sample_json(const SampleReport& rep, const std::vector<std::string>& vars) {
  json out;
  out["mode"] = rep.exhaustive ? "exhaustive" : "sampled";
  out["p"] = rep.p;
  out["seed"] = rep.seed;
  out["requested_samples"] = rep.requested_samples;
  out["checked"] = rep.checked;
  out["uncovered_count"] = rep.uncovered_count;
  json unc = json::array();
  for (const auto& pt : rep.uncovered) {
    json point = json::object();
    for (size_t i = 0; i < pt.size() && i < vars.size(); ++i)
      point[vars[i]] = pt[i];
    unc.push_back(std::move(point));
  }
  out["uncovered"] = std::move(unc);
  return out;
}

json exact_1d_json(bool verified, const std::string& why) {
  json out;
  out["mode"] = "exact";
  out["complement_empty"] = verified;
  if (!verified) out["reason"] = why;
  return out;
}

json witness_json(const WitnessReport& rep) {
  json out;
  out["check"] = rep.check;
  out["status"] = rep.status;
  out["indices"] = rep.indices;
  json w = json::object();
  for (const auto& [v, c] : rep.witness) w[v] = c.to_string();
  out["witness"] = std::move(w);
  json prs = json::array();
  for (const auto& pr : rep.premise_results) {
    json p;
    p["index"] = pr.index;
    p["holds"] = pr.holds;
    p["note"] = pr.note;
    prs.push_back(std::move(p));
  }
  out["premise_results"] = std::move(prs);
  out["notes"] = rep.notes;
  if (rep.subcover) out["subcover"] = subcover_json(*rep.subcover, json(nullptr));
  if (!rep.premise_qe.empty()) {
    json qes = json::array();
    for (const auto& e : rep.premise_qe) {
      json q;
      q["index"] = e.index;
      q["eliminated_to"] = e.eliminated_to;
      q["clause_count"] = e.clause_count;
      qes.push_back(std::move(q));
    }
    out["premise_qe"] = std::move(qes);
  }
  return out;
}

json net_basis_json(const NetBasisResult& res, const AffineSpace& space) {
  json out;
  out["kept_indices"] = res.kept;
  out["scanned"] = res.scanned;
  out["exhausted_family"] = res.exhausted_family;
  out["solution_count"] = res.solution.count();
  json pts = json::array();
  for (uint64_t idx : res.solution.indices()) {
    if (pts.size() >= 200) break;
    json point = json::object();
    auto coords = space.decode(idx);
    for (size_t i = 0; i < coords.size(); ++i) point[space.vars()[i]] = coords[i];
    pts.push_back(std::move(point));
  }
  out["solution_points"] = std::move(pts);
  return out;
}

}  // namespace noet
