#pragma once

#include <map>
#include <string>
#include <vector>

#include "aap/discoverability.hpp"
#include "aap/expressivity.hpp"
#include "aap/grounding.hpp"
#include "aap/module.hpp"
#include "aap/task_catalogue.hpp"
#include "aap/trust_scope.hpp"

namespace aap {

/// The four dimensions of one KG against a task catalogue, plus what
/// composition needs later (R⁺ and the task-scoped module signatures).
struct AapProfile {
  Iri kg_id;
  ExpressivityProfile expressivity;
  TrustScopeProfile trust;
  std::map<Iri, CoverageResult> per_task_coverage;
  DiscoverabilityScore discoverability;

  SignatureClosure closure;
  RouteDecision route;
  std::map<Iri, NameSet> per_task_module;  // signature of the ⊥-module for the task names
  std::vector<std::string> warnings;
};

/// Names (concepts and roles) of the ⊥-locality module for a task.
inline NameSet module_signature(const Graph& schema, const TaskSignature& task) {
  const auto split = split_signature(extract_module(schema, task.names()));
  NameSet out = split.concepts;
  out.insert(split.roles.begin(), split.roles.end());
  return out;
}

/// Runs expressivity, grounding (per task), trust scope and discoverability.
inline AapProfile compute_profile(const KgDescriptor& kg, const TaskCatalogue& catalogue,
                                  const Graph* reference = nullptr) {
  if (catalogue.tasks.empty()) throw EmptyCatalogue();
  AapProfile p;
  p.kg_id = kg.id;
  p.expressivity = compute_expressivity(kg);
  p.closure = signature_closure(kg.schema, reference);
  p.route = grounding_route(kg.schema, reference);
  p.trust = extract_trust_scope(kg, p.expressivity);
  for (const auto& task : catalogue.tasks) {
    auto cov = coverage(task.signature, p.closure);
    cov.lower_bound = p.route.route == GroundingRoute::Unsupported;
    p.per_task_coverage[task.id] = std::move(cov);
    p.per_task_module[task.id] = module_signature(kg.schema, task.signature);
  }
  p.discoverability = discoverability(kg.metadata, catalogue);

  if (p.route.route == GroundingRoute::Unsupported)
    p.warnings.push_back("PartialProfile: grounding route unsupported; " + p.route.diagnostic);
  for (const auto& c : p.closure.cycles) p.warnings.push_back("CycleWarning: " + c.message());
  if (p.trust.conflict) p.warnings.push_back("RegimeExceedsExpressivity: " + p.trust.conflict->message());
  for (const auto& d : p.expressivity.diagnostics) p.warnings.push_back("Expressivity: " + d);
  return p;
}

}  // namespace aap
