#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "aap/matcher.hpp"
#include "aap/profile_document.hpp"

namespace aap {

using Json = nlohmann::ordered_json;

namespace detail {

inline Json names_json(const NameSet& names) {
  Json a = Json::array();
  for (const auto& n : names) a.push_back(n.str());
  return a;
}

inline Json derived_json(const DerivedName& d) {
  return {{"name", d.name.str()},
          {"kind", to_string(d.kind)},
          {"weak", d.weak},
          {"via_reference", d.via_reference},
          {"axioms", d.provenance}};
}

}  // namespace detail

inline Json task_json(const TaskType& t) {
  Json sig = Json::array();
  for (const auto& e : t.signature.entries) sig.push_back({{"name", e.name.str()}, {"kind", to_string(e.kind)}});
  return {{"id", t.id.str()},
          {"signature", sig},
          {"min_regime", to_string(t.requirement.min_regime)},
          {"closed_predicates_needed", detail::names_json(t.requirement.closed_predicates_needed)},
          {"min_consistency", to_string(t.requirement.min_consistency)}};
}

inline Json trust_json(const TrustScopeProfile& r) {
  Json closures = Json::array();
  for (const auto& c : r.closures) {
    Json j{{"predicate", c.predicate.str()}, {"semantics", to_string(c.semantics)}, {"source", c.source}};
    if (c.target_class) j["target_class"] = c.target_class->str();
    closures.push_back(std::move(j));
  }
  Json j{{"regime", to_string(r.regime)},
         {"consistency", to_string(r.consistency.status)},
         {"closures", closures},
         {"open_predicates", detail::names_json(r.open_predicates)}};
  if (r.consistency.certificate_source) j["certified_by"] = r.consistency.certificate_source->str();
  return j;
}

/// One verdict. With `explain`, derived names used for coverage carry their
/// provenance chains, taken from `closure`.
inline Json verdict_json(const FeasibilityVerdict& v, const SignatureClosure* explain = nullptr) {
  Json g{{"score", to_string(v.coverage.score)},
         {"covered", detail::names_json(v.coverage.covered)},
         {"gap", detail::names_json(v.coverage.gap)},
         {"kind_mismatch", detail::names_json(v.coverage.kind_mismatch)},
         {"weak", detail::names_json(v.coverage.weak)},
         {"via_reference", detail::names_json(v.coverage.via_reference)},
         {"lower_bound", v.coverage.lower_bound}};
  if (explain) {
    Json prov = Json::array();
    for (const auto& n : v.coverage.covered)
      for (auto k : {NameKind::Concept, NameKind::Role})
        if (const auto* d = explain->find(n, k)) prov.push_back(detail::derived_json(*d));
    g["provenance"] = prov;
  }
  Json r = trust_json(v.trust);
  r["satisfied"] = v.trust_satisfied;

  Json detail{{"gap", detail::names_json(v.detail.gap)},
              {"kind_mismatch", detail::names_json(v.detail.kind_mismatch)},
              {"shortfall", nullptr},
              {"regime_conflict", nullptr},
              {"conformance_below_floor", v.detail.conformance_below_floor},
              {"secondary", Json::array()},
              {"warnings", v.detail.warnings}};
  if (v.detail.shortfall)
    detail["shortfall"] = {{"kind", to_string(v.detail.shortfall->kind)},
                           {"missing", detail::names_json(v.detail.shortfall->missing)}};
  if (v.detail.conflict)
    detail["regime_conflict"] = {{"declared", to_string(v.detail.conflict->declared)},
                                 {"maximum_fragment", to_string(v.detail.conflict->maximum)}};
  for (auto d : v.detail.secondary) detail["secondary"].push_back(to_string(d));

  return {{"kg_id", v.kg_id.str()},
          {"task_id", v.task_id.str()},
          {"feasible", v.feasible},
          {"failure_dimension", v.failure ? Json(to_string(*v.failure)) : Json(nullptr)},
          {"remedy", to_string(v.remedy)},
          {"dimensions",
           {{"E", {{"fragment", to_string(v.fragment)}, {"conformance_ratio", to_string(v.conformance_ratio)}}},
            {"D", {{"value", to_string(v.discoverability)}, {"band", to_string(v.discoverability_band)}}},
            {"G", g},
            {"R", r}}},
          {"detail", detail}};
}

inline Json plan_json(const CompositionPlan& p) {
  Json kgs = Json::array();
  for (const auto& k : p.kg_ids) kgs.push_back(k.str());
  Json closure = Json::array();
  for (const auto& e : p.union_closure) closure.push_back({{"name", e.name.str()}, {"kind", to_string(e.kind)}});
  Json candidates = Json::object();
  for (const auto& [name, ids] : p.candidate_mediators) {
    Json a = Json::array();
    for (const auto& id : ids) a.push_back(id.str());
    candidates[name.str()] = a;
  }
  return {{"kg_ids", kgs},
          {"verdict", to_string(p.verdict)},
          {"union_closure", closure},
          {"module_names", detail::names_json(p.module_names)},
          {"initial_gap", detail::names_json(p.initial_gap)},
          {"residual_gap", detail::names_json(p.residual_gap)},
          {"candidate_mediators", candidates},
          {"predicted_alignment_failure", p.predicted_alignment_failure},
          {"warnings", p.warnings}};
}

struct ReportOptions {
  MatchOptions match;
  bool explain = false;
};

/// Top-level report: {tool_version, task, discoverability_bands,
/// conformance_floor, verdicts[], plan?, warnings}.
inline Json report_json(const TaskType& task, const std::vector<FeasibilityVerdict>& verdicts,
                        const std::vector<AapProfile>& profiles, const std::optional<CompositionPlan>& plan,
                        const std::vector<std::string>& warnings, const ReportOptions& opt = {}) {
  Json j;
  j["tool_version"] = std::string(kToolVersion);
  j["task"] = task_json(task);
  j["discoverability_bands"] = {{"low", "[0, " + to_string(kMedThreshold) + ")"},
                                {"med", "[" + to_string(kMedThreshold) + ", " + to_string(kHighThreshold) + ")"},
                                {"high", "[" + to_string(kHighThreshold) + ", 1]"}};
  j["conformance_floor"] = to_string(opt.match.conformance_floor);
  j["verdicts"] = Json::array();
  for (const auto& v : verdicts) {
    const SignatureClosure* closure = nullptr;
    if (opt.explain)
      for (const auto& p : profiles)
        if (p.kg_id == v.kg_id) closure = &p.closure;
    j["verdicts"].push_back(verdict_json(v, closure));
  }
  if (plan) j["plan"] = plan_json(*plan);
  j["warnings"] = warnings;
  return j;
}

}  // namespace aap
