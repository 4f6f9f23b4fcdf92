#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "aap/expressivity.hpp"
#include "aap/fragment.hpp"
#include "aap/rdf.hpp"
#include "aap/rdfs.hpp"
#include "aap/signature.hpp"
#include "aap/vocab.hpp"

namespace aap {

enum class ConsistencyStatus { Uncertified, TboxConsistent, JointlyConsistent };

inline const char* to_string(ConsistencyStatus s) {
  switch (s) {
    case ConsistencyStatus::Uncertified: return "Uncertified";
    case ConsistencyStatus::TboxConsistent: return "TboxConsistent";
    case ConsistencyStatus::JointlyConsistent: return "JointlyConsistent";
  }
  return "Uncertified";
}

inline std::optional<ConsistencyStatus> parse_consistency(std::string_view s) {
  for (auto c : {ConsistencyStatus::Uncertified, ConsistencyStatus::TboxConsistent, ConsistencyStatus::JointlyConsistent})
    if (s == to_string(c)) return c;
  return std::nullopt;
}

struct Consistency {
  ConsistencyStatus status = ConsistencyStatus::Uncertified;
  std::optional<Iri> certificate_source;

  friend bool operator==(const Consistency&, const Consistency&) = default;
};

enum class EntailmentRegime { Simple, Rdfs, OwlEl, OwlQl, OwlRl, OwlDl };

inline constexpr std::array<EntailmentRegime, 6> kAllRegimes = {EntailmentRegime::Simple, EntailmentRegime::Rdfs,
                                                                 EntailmentRegime::OwlEl,  EntailmentRegime::OwlQl,
                                                                 EntailmentRegime::OwlRl,  EntailmentRegime::OwlDl};

inline const char* to_string(EntailmentRegime r) {
  switch (r) {
    case EntailmentRegime::Simple: return "Simple";
    case EntailmentRegime::Rdfs: return "Rdfs";
    case EntailmentRegime::OwlEl: return "OwlEl";
    case EntailmentRegime::OwlQl: return "OwlQl";
    case EntailmentRegime::OwlRl: return "OwlRl";
    case EntailmentRegime::OwlDl: return "OwlDl";
  }
  return "Simple";
}

inline std::optional<EntailmentRegime> parse_regime(std::string_view s) {
  for (auto r : kAllRegimes)
    if (s == to_string(r)) return r;
  return std::nullopt;
}

/// Simple sits where RdfOnly sits on the fragment order.
inline DlFragment as_fragment(EntailmentRegime r) {
  switch (r) {
    case EntailmentRegime::Simple: return DlFragment::RdfOnly;
    case EntailmentRegime::Rdfs: return DlFragment::Rdfs;
    case EntailmentRegime::OwlEl: return DlFragment::OwlEl;
    case EntailmentRegime::OwlQl: return DlFragment::OwlQl;
    case EntailmentRegime::OwlRl: return DlFragment::OwlRl;
    case EntailmentRegime::OwlDl: return DlFragment::OwlDl;
  }
  return DlFragment::RdfOnly;
}

inline Order regime_leq(EntailmentRegime a, EntailmentRegime b) { return fragment_leq(as_fragment(a), as_fragment(b)); }

inline EntailmentRegime regime_meet(EntailmentRegime a, EntailmentRegime b) {
  if (regime_leq(a, b) == Order::True) return a;
  if (regime_leq(b, a) == Order::True) return b;
  return EntailmentRegime::Rdfs;
}

enum class ClosureSemantics { GlobalCwa, PredicateLcwa, ShaclClosedShape };

inline const char* to_string(ClosureSemantics s) {
  switch (s) {
    case ClosureSemantics::GlobalCwa: return "GlobalCwa";
    case ClosureSemantics::PredicateLcwa: return "PredicateLcwa";
    case ClosureSemantics::ShaclClosedShape: return "ShaclClosedShape";
  }
  return "PredicateLcwa";
}

inline std::optional<ClosureSemantics> parse_closure_semantics(std::string_view s) {
  for (auto c : {ClosureSemantics::GlobalCwa, ClosureSemantics::PredicateLcwa, ClosureSemantics::ShaclClosedShape})
    if (s == to_string(c)) return c;
  return std::nullopt;
}

/// Wildcard predicate carried by a global closed-world declaration.
inline const Iri& all_predicates() {
  static const Iri marker = vocab::aap("AllPredicates");
  return marker;
}

struct ClosureDeclaration {
  Iri predicate;
  ClosureSemantics semantics = ClosureSemantics::PredicateLcwa;
  std::string source;
  std::optional<Iri> target_class;  // shapes only

  friend bool operator==(const ClosureDeclaration&, const ClosureDeclaration&) = default;
  friend auto operator<=>(const ClosureDeclaration&, const ClosureDeclaration&) = default;
};

struct RegimeConflict {
  EntailmentRegime declared = EntailmentRegime::Simple;
  DlFragment maximum = DlFragment::RdfOnly;

  std::string message() const {
    return std::string("declared regime ") + to_string(declared) + " exceeds schema fragment " + to_string(maximum);
  }
  friend bool operator==(const RegimeConflict&, const RegimeConflict&) = default;
};

/// Dimension R.
struct TrustScopeProfile {
  Consistency consistency;
  EntailmentRegime regime = EntailmentRegime::Simple;
  std::set<ClosureDeclaration> closures;
  NameSet open_predicates;                // declared as deliberately not closed
  std::optional<RegimeConflict> conflict;  // set when the declared regime was clamped

  friend bool operator==(const TrustScopeProfile&, const TrustScopeProfile&) = default;
};

struct EpistemicRequirement {
  EntailmentRegime min_regime = EntailmentRegime::Simple;
  NameSet closed_predicates_needed;
  ConsistencyStatus min_consistency = ConsistencyStatus::Uncertified;
};

enum class ShortfallKind { Regime, Closure, Consistency };

inline const char* to_string(ShortfallKind k) {
  switch (k) {
    case ShortfallKind::Regime: return "RegimeShortfall";
    case ShortfallKind::Closure: return "ClosureShortfall";
    case ShortfallKind::Consistency: return "ConsistencyShortfall";
  }
  return "RegimeShortfall";
}

struct Shortfall {
  ShortfallKind kind = ShortfallKind::Regime;
  NameSet missing;  // ClosureShortfall only
};

struct Satisfaction {
  bool holds = true;
  std::optional<Shortfall> shortfall;
};

namespace detail {

inline std::optional<EntailmentRegime> regime_from_profile_iri(const Iri& p) {
  const std::string s = p.str();
  if (!p.starts_with(vocab::kOwlProfile)) return std::nullopt;
  const auto local = s.substr(vocab::kOwlProfile.size());
  if (local == "EL") return EntailmentRegime::OwlEl;
  if (local == "QL") return EntailmentRegime::OwlQl;
  if (local == "RL") return EntailmentRegime::OwlRl;
  if (local == "DL") return EntailmentRegime::OwlDl;
  return std::nullopt;
}

// One entailment declaration (sd:entailmentRegime or aap:regime) read from
// `holder`; OWL Direct semantics narrows to the declared profile if any.
inline std::optional<EntailmentRegime> read_regime(const Graph& m, const Term& holder, const Iri& value) {
  const auto ent = [](std::string_view local) { return vocab::term(vocab::kEntailment, local); };
  if (value.starts_with(vocab::kAap)) return parse_regime(value.local_name());
  if (value == ent("Simple") || value == ent("RDF") || value == ent("D")) return EntailmentRegime::Simple;
  if (value == ent("RDFS")) return EntailmentRegime::Rdfs;
  if (value == ent("OWL-Direct") || value == ent("OWL-RDF-Based")) {
    std::optional<EntailmentRegime> profile;
    for (const auto& pred : {vocab::sd("defaultSupportedEntailmentProfile"), vocab::sd("supportedEntailmentProfile")})
      for (const auto& o : m.objects(holder, pred))
        if (const auto* i = as_iri(o))
          if (auto r = regime_from_profile_iri(*i)) profile = profile ? regime_meet(*profile, *r) : *r;
    if (profile) return profile;
    return value == ent("OWL-Direct") ? std::optional{EntailmentRegime::OwlDl} : std::nullopt;
  }
  return std::nullopt;
}

inline bool is_true_literal(const Term& t) {
  const auto* l = as_literal(t);
  return l && (l->lexical == "true" || l->lexical == "1") && l->datatype == vocab::xsd("boolean");
}

inline std::string source_label(const Term& node, const std::string& fallback) {
  if (const auto* i = as_iri(node)) return "<" + i->str() + ">";
  return fallback;
}

}  // namespace detail

/// Regimes declared in a metadata graph. Several declarations combine by
/// meet; none means nothing was declared.
inline std::optional<EntailmentRegime> declared_regime(const Graph& metadata) {
  std::optional<EntailmentRegime> out;
  for (const auto& pred :
       {vocab::sd("defaultEntailmentRegime"), vocab::sd("entailmentRegime"), vocab::aap("regime")}) {
    for (const auto& t : metadata.with_predicate(pred)) {
      const auto* v = as_iri(t.object);
      if (!v) continue;
      if (auto r = detail::read_regime(metadata, t.subject, *v)) out = out ? regime_meet(*out, *r) : *r;
    }
  }
  return out;
}

inline Consistency declared_consistency(const Graph& metadata) {
  Consistency c;
  for (const auto& pred : {vocab::aap("consistencyStatus"), vocab::aap("consistency")}) {
    for (const auto& t : metadata.with_predicate(pred)) {
      const auto* v = as_iri(t.object);
      if (!v || !v->starts_with(vocab::kAap)) continue;
      auto s = parse_consistency(v->local_name());
      if (!s || *s < c.status) continue;
      c.status = *s;
      c.certificate_source.reset();
      for (const auto& cert : metadata.objects(t.subject, vocab::aap("consistencyCertifiedBy")))
        if (const auto* i = as_iri(cert)) c.certificate_source = *i;
    }
  }
  return c;
}

/// Closure declarations from AAP completeness statements, global CWA
/// declarations, and closed SHACL node shapes with a target class.
inline std::set<ClosureDeclaration> declared_closures(const Graph& metadata, const Graph* schema = nullptr) {
  std::set<ClosureDeclaration> out;

  for (const auto& st : metadata.subjects(vocab::rdf_type(), Term{vocab::aap("CompletenessStatement")})) {
    auto semantics = ClosureSemantics::PredicateLcwa;
    if (auto s = metadata.object(st, vocab::aap("closureSemantics")))
      if (const auto* i = as_iri(*s); i && *i == vocab::aap("GlobalCwa")) semantics = ClosureSemantics::GlobalCwa;
    if (semantics == ClosureSemantics::GlobalCwa) {
      out.insert({all_predicates(), semantics, detail::source_label(st, "aap:CompletenessStatement(GlobalCwa)"), {}});
      continue;
    }
    for (const auto& p : metadata.objects(st, vocab::aap("closes")))
      if (const auto* i = as_iri(p))
        out.insert({*i, semantics, detail::source_label(st, "aap:CompletenessStatement(<" + i->str() + ">)"), {}});
  }
  // Profile documents restate closures as aap:closure nodes.
  for (const auto& t : metadata.with_predicate(vocab::aap("closure"))) {
    auto p = metadata.object(t.object, vocab::aap("closedPredicate"));
    auto sem = metadata.object(t.object, vocab::aap("closureSemantics"));
    auto src = metadata.object(t.object, vocab::aap("closureSource"));
    const auto* pi = p ? as_iri(*p) : nullptr;
    const auto* si = sem ? as_iri(*sem) : nullptr;
    if (!pi || !si) continue;
    auto semantics = parse_closure_semantics(si->local_name());
    if (!semantics) continue;
    ClosureDeclaration d{*pi, *semantics, {}, {}};
    if (src)
      if (const auto* l = as_literal(*src)) d.source = l->lexical;
    if (auto tc = metadata.object(t.object, vocab::aap("targetClass")))
      if (const auto* i = as_iri(*tc)) d.target_class = *i;
    out.insert(std::move(d));
  }

  Graph shapes = metadata;
  if (schema) shapes.merge(*schema);
  for (const auto& t : shapes.with_predicate(vocab::sh("closed"))) {
    if (!detail::is_true_literal(t.object)) continue;
    const Term& shape = t.subject;
    NameSet ignored;
    for (const auto& head : shapes.objects(shape, vocab::sh("ignoredProperties")))
      if (auto items = read_list(shapes, head))
        for (const auto& item : *items)
          if (const auto* i = as_iri(item)) ignored.insert(*i);
    for (const auto& tc : shapes.objects(shape, vocab::sh("targetClass"))) {
      const auto* target = as_iri(tc);
      if (!target) continue;
      const auto source = detail::source_label(shape, "sh:NodeShape(<" + target->str() + ">)");
      out.insert({*target, ClosureSemantics::ShaclClosedShape, source, *target});
      for (const auto& ps : shapes.objects(shape, vocab::sh("property"))) {
        for (const auto& path : shapes.objects(ps, vocab::sh("path"))) {
          const auto* p = as_iri(path);
          if (!p || ignored.count(*p)) continue;
          out.insert({*p, ClosureSemantics::ShaclClosedShape, source, *target});
        }
      }
    }
  }
  return out;
}

inline NameSet declared_open_predicates(const Graph& metadata) {
  NameSet out;
  for (const auto& t : metadata.with_predicate(vocab::aap("openPredicate")))
    if (const auto* i = as_iri(t.object)) out.insert(*i);
  return out;
}

/// Reads R from the metadata graph (SHACL shapes also from the schema) and
/// clamps a regime that exceeds the schema fragment to Simple.
inline TrustScopeProfile extract_trust_scope(const KgDescriptor& kg, const ExpressivityProfile& expressivity) {
  TrustScopeProfile p;
  p.consistency = declared_consistency(kg.metadata);
  p.regime = declared_regime(kg.metadata).value_or(EntailmentRegime::Simple);
  if (!fragment_le(as_fragment(p.regime), expressivity.fragment)) {
    p.conflict = RegimeConflict{p.regime, expressivity.fragment};
    p.regime = EntailmentRegime::Simple;
  }
  p.closures = declared_closures(kg.metadata, &kg.schema);
  p.open_predicates = declared_open_predicates(kg.metadata);
  return p;
}

/// Closed predicates; a global closed-world declaration contributes
/// all_predicates().
inline NameSet closed_predicates(const TrustScopeProfile& profile) {
  NameSet out;
  for (const auto& c : profile.closures) out.insert(c.predicate);
  return out;
}

inline bool closes(const NameSet& closed, const Iri& predicate) {
  return closed.count(all_predicates()) || closed.count(predicate);
}

inline Satisfaction satisfies(const TrustScopeProfile& profile, const EpistemicRequirement& req) {
  if (regime_leq(req.min_regime, profile.regime) != Order::True) return {false, Shortfall{ShortfallKind::Regime, {}}};
  const auto closed = closed_predicates(profile);
  NameSet missing;
  for (const auto& p : req.closed_predicates_needed)
    if (!closes(closed, p)) missing.insert(p);
  if (!missing.empty()) return {false, Shortfall{ShortfallKind::Closure, std::move(missing)}};
  if (profile.consistency.status < req.min_consistency) return {false, Shortfall{ShortfallKind::Consistency, {}}};
  return {true, std::nullopt};
}

/// a ⪰ b: componentwise on regime, consistency and closed predicates.
inline bool dominates(const TrustScopeProfile& a, const TrustScopeProfile& b) {
  if (regime_leq(b.regime, a.regime) != Order::True) return false;
  if (a.consistency.status < b.consistency.status) return false;
  const auto ca = closed_predicates(a), cb = closed_predicates(b);
  if (ca.count(all_predicates())) return true;
  if (cb.count(all_predicates())) return false;
  return std::includes(ca.begin(), ca.end(), cb.begin(), cb.end());
}

}  // namespace aap
