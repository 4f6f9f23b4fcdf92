#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "aap/module.hpp"
#include "aap/profile.hpp"

namespace aap {

enum class FailureDimension { GFailure, RFailure, EFailure };
enum class Remedy { None, VocabularyMediation, KgReselection, ContentOrSchemaRepair };

inline const char* to_string(FailureDimension d) {
  switch (d) {
    case FailureDimension::GFailure: return "GFailure";
    case FailureDimension::RFailure: return "RFailure";
    case FailureDimension::EFailure: return "EFailure";
  }
  return "GFailure";
}

inline const char* to_string(Remedy r) {
  switch (r) {
    case Remedy::None: return "None";
    case Remedy::VocabularyMediation: return "VocabularyMediation";
    case Remedy::KgReselection: return "KgReselection";
    case Remedy::ContentOrSchemaRepair: return "ContentOrSchemaRepair";
  }
  return "None";
}

inline Remedy remedy_for(FailureDimension d) {
  switch (d) {
    case FailureDimension::GFailure: return Remedy::VocabularyMediation;
    case FailureDimension::RFailure: return Remedy::KgReselection;
    case FailureDimension::EFailure: return Remedy::ContentOrSchemaRepair;
  }
  return Remedy::None;
}

struct MatchOptions {
  Rational conformance_floor{9, 10};
};

struct VerdictDetail {
  NameSet gap;
  NameSet kind_mismatch;
  std::optional<Shortfall> shortfall;
  std::optional<RegimeConflict> conflict;
  bool conformance_below_floor = false;
  std::vector<FailureDimension> secondary;  // further failing dimensions
  std::vector<std::string> warnings;
};

struct FeasibilityVerdict {
  Iri kg_id;
  Iri task_id;
  bool feasible = false;
  std::optional<FailureDimension> failure;
  Remedy remedy = Remedy::None;
  VerdictDetail detail;

  // dimension values the verdict was computed from
  DlFragment fragment = DlFragment::RdfOnly;
  Rational conformance_ratio{1};
  Rational discoverability{0};
  Band discoverability_band = Band::Low;
  CoverageResult coverage;
  TrustScopeProfile trust;
  bool trust_satisfied = false;
};

/// G = 1 ∧ R ⪰ R_min decides feasibility. A failure is attributed to one
/// dimension by the precedence E, G, R; an expressivity issue on a feasible
/// verdict is only reported as a warning.
inline FeasibilityVerdict feasible(const AapProfile& profile, const TaskType& task, const MatchOptions& opt = {}) {
  FeasibilityVerdict v;
  v.kg_id = profile.kg_id;
  v.task_id = task.id;
  v.fragment = profile.expressivity.fragment;
  v.conformance_ratio = profile.expressivity.conformance_ratio;
  v.discoverability = profile.discoverability.value;
  v.discoverability_band = profile.discoverability.band;
  v.trust = profile.trust;

  if (auto it = profile.per_task_coverage.find(task.id); it != profile.per_task_coverage.end()) {
    v.coverage = it->second;
  } else {
    v.coverage = coverage(task.signature, profile.closure);
    v.coverage.lower_bound = profile.route.route == GroundingRoute::Unsupported;
  }
  const auto sat = satisfies(profile.trust, task.requirement);
  v.trust_satisfied = sat.holds;

  const bool g_fail = v.coverage.score != Rational(1);
  const bool r_fail = !sat.holds;
  v.detail.conflict = profile.trust.conflict;
  v.detail.conformance_below_floor = profile.expressivity.conformance_ratio < opt.conformance_floor;
  const bool e_issue = v.detail.conflict.has_value() || v.detail.conformance_below_floor;
  if (g_fail) {
    v.detail.gap = v.coverage.gap;
    v.detail.kind_mismatch = v.coverage.kind_mismatch;
  }
  if (r_fail) v.detail.shortfall = sat.shortfall;

  v.feasible = !g_fail && !r_fail;
  if (v.feasible) {
    if (v.detail.conflict) v.detail.warnings.push_back(v.detail.conflict->message());
    if (v.detail.conformance_below_floor)
      v.detail.warnings.push_back("conformance ratio " + to_string(v.conformance_ratio) + " is below the floor " +
                                  to_string(opt.conformance_floor));
    return v;
  }
  std::vector<FailureDimension> failing;
  if (e_issue) failing.push_back(FailureDimension::EFailure);
  if (g_fail) failing.push_back(FailureDimension::GFailure);
  if (r_fail) failing.push_back(FailureDimension::RFailure);
  v.failure = failing.front();
  v.remedy = remedy_for(*v.failure);
  v.detail.secondary.assign(failing.begin() + 1, failing.end());
  if (v.coverage.lower_bound) v.detail.warnings.push_back("coverage is a lower bound: " + profile.route.diagnostic);
  return v;
}

namespace detail {

inline int rank_group(const FeasibilityVerdict& v) {
  if (v.feasible) return 0;
  switch (*v.failure) {
    case FailureDimension::GFailure: return 1;
    case FailureDimension::RFailure: return 2;
    case FailureDimension::EFailure: return 3;
  }
  return 3;
}

}  // namespace detail

/// Total order used for ranking: feasible first, then G, R, E failures;
/// within a group by descending D, descending conformance, ascending KG id.
inline bool rank_before(const FeasibilityVerdict& a, const FeasibilityVerdict& b) {
  const int ga = detail::rank_group(a), gb = detail::rank_group(b);
  if (ga != gb) return ga < gb;
  if (a.discoverability != b.discoverability) return a.discoverability > b.discoverability;
  if (a.conformance_ratio != b.conformance_ratio) return a.conformance_ratio > b.conformance_ratio;
  return a.kg_id < b.kg_id;
}

inline std::vector<FeasibilityVerdict> rank(const std::vector<AapProfile>& profiles, const TaskType& task,
                                            const MatchOptions& opt = {}) {
  std::vector<FeasibilityVerdict> out;
  out.reserve(profiles.size());
  for (const auto& p : profiles) out.push_back(feasible(p, task, opt));
  std::sort(out.begin(), out.end(), rank_before);
  return out;
}

/// A declared, never invoked, signature bridge.
struct MediatorDescriptor {
  Iri id;
  NameSet input_signature;
  NameSet output_signature;
  std::string preservation_claim;
};

inline bool mediator_module_filter(const MediatorDescriptor& m, const NameSet& module_names) {
  return std::any_of(m.input_signature.begin(), m.input_signature.end(),
                     [&](const Iri& n) { return module_names.count(n) != 0; });
}

/// True iff the mediator consumes some name of the task-scoped ⊥-module.
inline bool mediator_module_filter(const MediatorDescriptor& m, const Graph& schema, const TaskSignature& task) {
  return mediator_module_filter(m, module_signature(schema, task));
}

enum class CompositionVerdict { Closed, OpenGap };

inline const char* to_string(CompositionVerdict v) { return v == CompositionVerdict::Closed ? "Closed" : "OpenGap"; }

struct CompositionPlan {
  std::vector<Iri> kg_ids;
  std::set<SignatureEntry> union_closure;
  NameSet module_names;
  NameSet initial_gap;
  NameSet residual_gap;
  std::map<Iri, std::vector<Iri>> candidate_mediators;  // gap name -> mediator ids
  CompositionVerdict verdict = CompositionVerdict::Closed;
  bool predicted_alignment_failure = false;
  std::vector<std::string> warnings;
};

namespace detail {

// One KG closes a predicate another declares open, or both close it under
// different semantics.
inline std::vector<std::string> incoherent_closures(const std::vector<const AapProfile*>& profiles) {
  std::vector<std::string> out;
  std::map<Iri, std::set<std::pair<std::string, Iri>>> closed;  // predicate -> (semantics, kg)
  for (const auto* p : profiles)
    for (const auto& c : p->trust.closures) closed[c.predicate].insert({to_string(c.semantics), p->kg_id});
  for (const auto* p : profiles)
    for (const auto& open : p->trust.open_predicates) {
      for (const auto* key : {&open, &all_predicates()}) {
        auto it = closed.find(*key);
        if (it == closed.end()) continue;
        for (const auto& [sem, kg] : it->second)
          if (kg != p->kg_id)
            out.push_back("IncoherentClosure: <" + open.str() + "> is closed (" + sem + ") in <" + kg.str() +
                          "> but declared open in <" + p->kg_id.str() + ">");
      }
    }
  for (const auto& [pred, entries] : closed) {
    std::set<std::string> semantics;
    std::set<Iri> kgs;
    for (const auto& [sem, kg] : entries) {
      semantics.insert(sem);
      kgs.insert(kg);
    }
    if (semantics.size() > 1 && kgs.size() > 1)
      out.push_back("IncoherentClosure: <" + pred.str() + "> is closed under different semantics across KGs");
  }
  return out;
}

}  // namespace detail

/// Union of the KGs' closures against the task; each remaining gap name is
/// matched with mediators that produce it from names the union already has
/// and that touch the task-scoped module. `module_schema`, when given,
/// replaces the stored per-task modules.
inline CompositionPlan compose(const std::vector<const AapProfile*>& profiles, const TaskType& task,
                               const std::vector<MediatorDescriptor>& mediators,
                               const Graph* module_schema = nullptr) {
  CompositionPlan plan;
  NameSet union_names;
  for (const auto* p : profiles) {
    plan.kg_ids.push_back(p->kg_id);
    for (const auto& e : p->closure.entries()) {
      plan.union_closure.insert(e);
      union_names.insert(e.name);
    }
    if (!module_schema)
      if (auto it = p->per_task_module.find(task.id); it != p->per_task_module.end())
        plan.module_names.insert(it->second.begin(), it->second.end());
  }
  if (module_schema) plan.module_names = module_signature(*module_schema, task.signature);

  for (const auto& e : task.signature.entries)
    if (!plan.union_closure.count(e)) plan.initial_gap.insert(e.name);

  std::vector<const MediatorDescriptor*> usable;
  for (const auto& m : mediators) {
    const bool inputs_available = std::includes(union_names.begin(), union_names.end(), m.input_signature.begin(),
                                                m.input_signature.end());
    if (inputs_available && mediator_module_filter(m, plan.module_names)) usable.push_back(&m);
  }
  for (const auto& name : plan.initial_gap) {
    std::vector<Iri> ids;
    for (const auto* m : usable)
      if (m->output_signature.count(name)) ids.push_back(m->id);
    if (ids.empty()) {
      plan.residual_gap.insert(name);
    } else {
      plan.candidate_mediators[name] = std::move(ids);
    }
  }
  plan.verdict = plan.residual_gap.empty() ? CompositionVerdict::Closed : CompositionVerdict::OpenGap;
  plan.predicted_alignment_failure =
      !plan.initial_gap.empty() && std::none_of(mediators.begin(), mediators.end(), [&](const MediatorDescriptor& m) {
        return mediator_module_filter(m, plan.module_names);
      });
  plan.warnings = detail::incoherent_closures(profiles);
  return plan;
}

inline CompositionPlan compose(const std::vector<AapProfile>& profiles, const TaskType& task,
                               const std::vector<MediatorDescriptor>& mediators,
                               const Graph* module_schema = nullptr) {
  std::vector<const AapProfile*> ptrs;
  for (const auto& p : profiles) ptrs.push_back(&p);
  return compose(ptrs, task, mediators, module_schema);
}

}  // namespace aap
