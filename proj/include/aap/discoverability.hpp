#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>

#include "aap/rational.hpp"
#include "aap/rdf.hpp"
#include "aap/rdfs.hpp"
#include "aap/task_catalogue.hpp"
#include "aap/trust_scope.hpp"
#include "aap/vocab.hpp"

namespace aap {

enum class Decidability { DecidableFit, DecidableUnfit, Undecidable };

inline const char* to_string(Decidability d) {
  switch (d) {
    case Decidability::DecidableFit: return "DecidableFit";
    case Decidability::DecidableUnfit: return "DecidableUnfit";
    case Decidability::Undecidable: return "Undecidable";
  }
  return "Undecidable";
}

enum class Band { Low, Med, High };

inline const char* to_string(Band b) {
  switch (b) {
    case Band::Low: return "low";
    case Band::Med: return "med";
    case Band::High: return "high";
  }
  return "low";
}

inline std::optional<Band> parse_band(std::string_view s) {
  for (auto b : {Band::Low, Band::Med, Band::High})
    if (s == to_string(b)) return b;
  return std::nullopt;
}

/// low = [0, 1/3), med = [1/3, 2/3), high = [2/3, 1].
inline const Rational kMedThreshold{1, 3};
inline const Rational kHighThreshold{2, 3};

inline Band band_of(const Rational& v) {
  if (v >= kHighThreshold) return Band::High;
  if (v >= kMedThreshold) return Band::Med;
  return Band::Low;
}

struct DiscoverabilityScore {
  Rational value{0};
  std::set<Iri> decidable;
  std::map<Iri, Decidability> per_task;
  Band band = Band::Low;
};

namespace detail {

/// Three-valued outcome of one condition: nullopt = not decidable.
using Tri = std::optional<bool>;

inline std::optional<bool> boolean_value(const Term& t) {
  const auto* l = as_literal(t);
  if (!l || l->datatype != vocab::xsd("boolean")) return std::nullopt;
  if (l->lexical == "true" || l->lexical == "1") return true;
  if (l->lexical == "false" || l->lexical == "0") return false;
  return std::nullopt;
}

inline std::vector<Term> assessments_for(const Graph& m, const Iri& task) {
  std::vector<Term> out;
  for (const auto& t : m.with_predicate(vocab::aap("taskAssessment")))
    if (m.has(t.object, vocab::aap("task"), Term{task})) out.push_back(t.object);
  return out;
}

inline Tri grounding_condition(const Graph& m, const TaskType& task) {
  const auto assessments = assessments_for(m, task.id);
  Tri verdict;
  for (const auto& a : assessments) {
    if (auto score = m.object(a, vocab::aap("groundingScore")))
      if (const auto* l = as_literal(*score)) {
        try {
          const bool full = parse_rational(l->lexical) == Rational(1);
          verdict = verdict.value_or(true) && full;
        } catch (const Error&) {
        }
      }
    NameSet covered, gap;
    for (const auto& o : m.objects(a, vocab::aap("coveredName")))
      if (const auto* i = as_iri(o)) covered.insert(*i);
    for (const auto& o : m.objects(a, vocab::aap("gapName")))
      if (const auto* i = as_iri(o)) gap.insert(*i);
    bool all_known = true, all_covered = true;
    for (const auto& e : task.signature.entries) {
      if (gap.count(e.name)) all_covered = false;
      else if (!covered.count(e.name)) all_known = false;
    }
    if (!all_covered) verdict = false;
    else if (all_known) verdict = verdict.value_or(true);
  }
  if (verdict) return verdict;

  // A listing decides a name only positively; absence from it is silence,
  // explicit gap assertions are the negative case.
  std::set<SignatureEntry> listed;
  auto list = [&](const Iri& pred, NameKind kind) {
    for (const auto& t : m.with_predicate(pred))
      if (const auto* i = as_iri(t.object)) listed.insert({*i, kind});
  };
  list(vocab::void_("class"), NameKind::Concept);
  list(vocab::void_("property"), NameKind::Role);
  list(vocab::aap("residentConcept"), NameKind::Concept);
  list(vocab::aap("residentRole"), NameKind::Role);
  for (const auto& t : m.with_predicate(vocab::aap("derivedName"))) {
    auto name = m.object(t.object, vocab::aap("name"));
    auto kind = m.object(t.object, vocab::aap("kind"));
    const auto* n = name ? as_iri(*name) : nullptr;
    const auto* k = kind ? as_literal(*kind) : nullptr;
    if (n && k) listed.insert({*n, k->lexical == "role" ? NameKind::Role : NameKind::Concept});
  }
  for (const auto& e : task.signature.entries)
    if (!listed.count(e)) return std::nullopt;
  return true;
}

// Negative evidence is sticky so that more metadata never undoes a decision:
// a declared false wins over a declared true, an explicit open-predicate
// statement wins over a closure, and a missing consistency certificate is
// silence rather than a failure.
inline Tri trust_condition(const Graph& m, const TaskType& task) {
  Tri declared;
  for (const auto& a : assessments_for(m, task.id))
    for (const auto& o : m.objects(a, vocab::aap("trustSatisfied")))
      if (auto b = boolean_value(o)) declared = declared.value_or(true) && *b;
  if (declared == false) return false;

  Tri computed;
  if (auto regime = declared_regime(m)) {
    const auto closed = closed_predicates(TrustScopeProfile{{}, *regime, declared_closures(m), {}, {}});
    const auto open = declared_open_predicates(m);
    bool unknown = false;
    if (regime_leq(task.requirement.min_regime, *regime) != Order::True) computed = false;
    for (const auto& pred : task.requirement.closed_predicates_needed) {
      if (open.count(pred)) {
        computed = false;
      } else if (!closes(closed, pred)) {
        unknown = true;
      }
    }
    if (!computed && !unknown && declared_consistency(m).status >= task.requirement.min_consistency) computed = true;
  }
  if (computed == false) return false;
  if (declared || computed) return true;
  return std::nullopt;
}

inline Decidability fitness_on_materialized(const Graph& m, const TaskType& task) {
  const auto g = grounding_condition(m, task);
  const auto r = trust_condition(m, task);
  if ((g && !*g) || (r && !*r)) return Decidability::DecidableUnfit;
  if (g && r) return Decidability::DecidableFit;
  return Decidability::Undecidable;
}

}  // namespace detail

/// Whether fitness for `task` follows from the metadata graph alone (after
/// RDFS materialisation). Never looks at schema or data.
inline Decidability metadata_fitness_decidable(const Graph& metadata, const TaskType& task) {
  return detail::fitness_on_materialized(rdfs_materialize(metadata), task);
}

inline DiscoverabilityScore discoverability(const Graph& metadata, const TaskCatalogue& catalogue) {
  if (catalogue.tasks.empty()) throw EmptyCatalogue();
  DiscoverabilityScore s;
  const Graph m = rdfs_materialize(metadata);
  for (const auto& task : catalogue.tasks) {
    const auto d = detail::fitness_on_materialized(m, task);
    s.per_task[task.id] = d;
    if (d != Decidability::Undecidable) s.decidable.insert(task.id);
  }
  s.value = Rational(static_cast<std::int64_t>(s.decidable.size()), static_cast<std::int64_t>(s.per_task.size()));
  s.band = band_of(s.value);
  return s;
}

}  // namespace aap
