#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "aap/error.hpp"
#include "aap/expressivity.hpp"
#include "aap/rational.hpp"
#include "aap/rdf.hpp"
#include "aap/signature.hpp"
#include "aap/tbox.hpp"

namespace aap {

enum class NameKind { Concept, Role };

inline const char* to_string(NameKind k) { return k == NameKind::Concept ? "concept" : "role"; }

struct SignatureEntry {
  Iri name;
  NameKind kind = NameKind::Concept;

  friend bool operator==(const SignatureEntry&, const SignatureEntry&) = default;
  friend auto operator<=>(const SignatureEntry&, const SignatureEntry&) = default;
};

/// Names of the KG's own TBox; a punned name appears with both kinds.
struct ResidentSignature {
  std::set<SignatureEntry> names;

  bool contains(const Iri& n, NameKind k) const { return names.count({n, k}) != 0; }
  bool empty() const { return names.empty(); }
};

struct TaskSignature {
  std::set<SignatureEntry> entries;

  NameSet names() const {
    NameSet out;
    for (const auto& e : entries) out.insert(e.name);
    return out;
  }
};

/// A name outside the base signature together with the axioms that fix it.
struct DerivedName {
  Iri name;
  NameKind kind = NameKind::Concept;
  std::vector<std::string> provenance;  // axiom ids, dependencies first
  bool weak = false;                    // some step only placed it below a closed name
  bool via_reference = false;           // some step used a reference-ontology axiom
};

struct CycleWarning {
  std::vector<Iri> names;
  std::vector<std::string> axioms;

  std::string message() const {
    std::string out = "definitional cycle through";
    for (const auto& n : names) out += " <" + n.str() + ">";
    return out;
  }
};

struct SignatureClosure {
  ResidentSignature base;
  std::vector<DerivedName> derived;  // in derivation order
  std::vector<CycleWarning> cycles;

  const DerivedName* find(const Iri& n, NameKind k) const {
    for (const auto& d : derived)
      if (d.name == n && d.kind == k) return &d;
    return nullptr;
  }
  bool contains(const Iri& n, NameKind k) const { return base.contains(n, k) || find(n, k) != nullptr; }

  std::set<SignatureEntry> entries() const {
    auto out = base.names;
    for (const auto& d : derived) out.insert({d.name, d.kind});
    return out;
  }
  NameSet names() const {
    NameSet out;
    for (const auto& e : entries()) out.insert(e.name);
    return out;
  }
};

struct CoverageResult {
  Rational score{0};
  NameSet covered;
  NameSet gap;
  NameSet kind_mismatch;  // subset of gap: the name is closed, but with the other kind
  NameSet weak;           // subset of covered
  NameSet via_reference;  // subset of covered
  bool lower_bound = false;
};

enum class GroundingRoute { RdfsReachability, DefinitionPatterns, Unsupported };

inline const char* to_string(GroundingRoute r) {
  switch (r) {
    case GroundingRoute::RdfsReachability: return "RdfsReachability";
    case GroundingRoute::DefinitionPatterns: return "DefinitionPatterns";
    case GroundingRoute::Unsupported: return "Unsupported";
  }
  return "Unsupported";
}

inline std::optional<GroundingRoute> parse_grounding_route(std::string_view s) {
  for (auto r : {GroundingRoute::RdfsReachability, GroundingRoute::DefinitionPatterns, GroundingRoute::Unsupported})
    if (s == to_string(r)) return r;
  return std::nullopt;
}

struct RouteDecision {
  GroundingRoute route = GroundingRoute::RdfsReachability;
  std::string diagnostic;
};

inline ResidentSignature resident_signature(const Graph& schema) {
  ResidentSignature r;
  const auto s = split_signature(schema);
  for (const auto& c : s.concepts) r.names.insert({c, NameKind::Concept});
  for (const auto& p : s.roles) r.names.insert({p, NameKind::Role});
  return r;
}

namespace detail {

inline bool is_user_name(const ClassExpr& e) { return e.is_named() && !vocab::is_builtin(e.name); }

inline std::set<SignatureEntry> expr_signature(const ClassExpr& e) {
  NameSet concepts, roles;
  e.collect(concepts, roles);
  std::set<SignatureEntry> out;
  for (const auto& c : concepts) out.insert({c, NameKind::Concept});
  for (const auto& r : roles) out.insert({r, NameKind::Role});
  return out;
}

/// Finds definitional cycles among complex equivalences. Named synonyms
/// (A ≡ B) are merged first; an equivalence N ≡ D is cyclic when N and a
/// concept of D sit in the same strongly connected component.
inline std::set<std::size_t> definition_cycles(const std::vector<Axiom>& axioms, std::vector<CycleWarning>& warnings) {
  std::map<Iri, Iri> parent;
  std::function<Iri(const Iri&)> find = [&](const Iri& x) -> Iri {
    auto it = parent.find(x);
    if (it == parent.end() || it->second == x) return x;
    return it->second = find(it->second);
  };
  for (const auto& a : axioms) {
    if (a.kind != AxiomKind::EquivalentClasses || !is_user_name(a.lhs) || !is_user_name(a.rhs)) continue;
    auto x = find(a.lhs.name), y = find(a.rhs.name);
    if (x != y) parent[std::max(x, y)] = std::min(x, y);
  }

  struct Def {
    std::size_t index;
    Iri defined;
    NameSet uses;
  };
  std::vector<Def> defs;
  std::map<Iri, std::set<Iri>> edges;
  for (std::size_t i = 0; i < axioms.size(); ++i) {
    const auto& a = axioms[i];
    if (a.kind != AxiomKind::EquivalentClasses) continue;
    for (auto [named, other] : {std::pair{&a.lhs, &a.rhs}, std::pair{&a.rhs, &a.lhs}}) {
      if (!is_user_name(*named) || !other->is_complex()) continue;
      NameSet concepts, roles;
      other->collect(concepts, roles);
      Def d{i, find(named->name), {}};
      for (const auto& c : concepts) d.uses.insert(find(c));
      edges[d.defined];
      for (const auto& u : d.uses) edges[d.defined].insert(u);
      defs.push_back(std::move(d));
    }
  }

  // Tarjan over the quotient graph.
  std::map<Iri, int> index, low;
  std::set<Iri> on_stack;
  std::vector<Iri> stack;
  std::map<Iri, int> component;
  int counter = 0, components = 0;
  std::function<void(const Iri&)> visit = [&](const Iri& v) {
    index[v] = low[v] = counter++;
    stack.push_back(v);
    on_stack.insert(v);
    for (const auto& w : edges[v]) {
      if (!index.count(w)) {
        visit(w);
        low[v] = std::min(low[v], low[w]);
      } else if (on_stack.count(w)) {
        low[v] = std::min(low[v], index[w]);
      }
    }
    if (low[v] == index[v]) {
      Iri w;
      do {
        w = stack.back();
        stack.pop_back();
        on_stack.erase(w);
        component[w] = components;
      } while (w != v);
      ++components;
    }
  };
  std::vector<Iri> nodes;
  for (const auto& [v, _] : edges) nodes.push_back(v);
  for (const auto& v : nodes)
    if (!index.count(v)) visit(v);

  std::set<std::size_t> cyclic;
  std::map<int, CycleWarning> by_component;
  for (const auto& d : defs) {
    const int c = component.at(d.defined);
    bool in_cycle = false;
    for (const auto& u : d.uses)
      if (component.count(u) && component.at(u) == c) in_cycle = true;
    if (!in_cycle) continue;
    cyclic.insert(d.index);
    by_component[c].axioms.push_back(axioms[d.index].id());
  }
  for (auto& [c, w] : by_component) {
    std::set<Iri> members;
    for (const auto& [v, comp] : component)
      if (comp == c) members.insert(v);
    // report every synonym of the component members, not just representatives
    for (const auto& a : axioms) {
      if (a.kind != AxiomKind::EquivalentClasses) continue;
      for (const auto* e : {&a.lhs, &a.rhs})
        if (is_user_name(*e) && members.count(find(e->name))) members.insert(e->name);
    }
    w.names.assign(members.begin(), members.end());
    std::sort(w.axioms.begin(), w.axioms.end());
    w.axioms.erase(std::unique(w.axioms.begin(), w.axioms.end()), w.axioms.end());
    warnings.push_back(std::move(w));
  }
  return cyclic;
}

}  // namespace detail

/// Least fixpoint of the two witness rules starting from `base`:
/// (i) a name linked to a closed name by a named subClassOf / subPropertyOf
/// edge, in either direction; (ii) a name N with N ≡ D where every name of D
/// is closed. A definitional cycle is reported but admits nothing by
/// itself: the fixpoint is least, so a name supported only through its own
/// cycle never becomes closed.
inline SignatureClosure derive_closure(ResidentSignature base, const std::vector<Axiom>& axioms) {
  SignatureClosure out;
  out.base = std::move(base);
  detail::definition_cycles(axioms, out.cycles);

  std::map<SignatureEntry, std::size_t> derived_at;
  auto closed = [&](const SignatureEntry& e) { return out.base.names.count(e) || derived_at.count(e); };

  while (true) {
    std::map<SignatureEntry, DerivedName> found;
    auto propose = [&](const SignatureEntry& target, const std::vector<SignatureEntry>& deps, const Axiom& a,
                       bool weak_step) {
      if (vocab::is_builtin(target.name) || closed(target)) return;
      DerivedName d{target.name, target.kind, {}, weak_step, a.origin == AxiomOrigin::Reference};
      for (const auto& dep : deps) {
        auto it = derived_at.find(dep);
        if (it == derived_at.end()) continue;
        const auto& prior = out.derived[it->second];
        d.weak = d.weak || prior.weak;
        d.via_reference = d.via_reference || prior.via_reference;
        for (const auto& step : prior.provenance)
          if (std::find(d.provenance.begin(), d.provenance.end(), step) == d.provenance.end())
            d.provenance.push_back(step);
      }
      const auto id = a.id();
      if (std::find(d.provenance.begin(), d.provenance.end(), id) == d.provenance.end()) d.provenance.push_back(id);

      auto it = found.find(target);
      if (it == found.end()) {
        found.emplace(target, std::move(d));
        return;
      }
      const auto& cur = it->second;
      if (std::pair{d.weak, d.provenance.size()} < std::pair{cur.weak, cur.provenance.size()}) it->second = std::move(d);
    };
    auto edge = [&](const Iri& sub, const Iri& super, NameKind kind, const Axiom& a) {
      const SignatureEntry lo{sub, kind}, hi{super, kind};
      if (closed(hi)) propose(lo, {hi}, a, true);
      if (closed(lo)) propose(hi, {lo}, a, false);
    };

    for (const auto& a : axioms) {
      switch (a.kind) {
        case AxiomKind::SubClassOf:
          if (detail::is_user_name(a.lhs) && detail::is_user_name(a.rhs))
            edge(a.lhs.name, a.rhs.name, NameKind::Concept, a);
          break;
        case AxiomKind::SubPropertyOf:
          if (!vocab::is_builtin(a.property) && !vocab::is_builtin(a.other))
            edge(a.property, a.other, NameKind::Role, a);
          break;
        case AxiomKind::EquivalentClasses: {
          for (auto [named, def] : {std::pair{&a.lhs, &a.rhs}, std::pair{&a.rhs, &a.lhs}}) {
            if (!detail::is_user_name(*named)) continue;
            const auto sig = detail::expr_signature(*def);
            if (!std::all_of(sig.begin(), sig.end(), closed)) continue;
            propose({named->name, NameKind::Concept}, {sig.begin(), sig.end()}, a, false);
          }
          break;
        }
        default: break;
      }
    }
    if (found.empty()) break;
    for (auto& [entry, d] : found) {
      derived_at.emplace(entry, out.derived.size());
      out.derived.push_back(std::move(d));
    }
  }
  return out;
}

namespace detail {

inline std::vector<Axiom> combined_axioms(const Graph& schema, const Graph* reference) {
  auto axioms = read_tbox(schema, AxiomOrigin::Schema).axioms;
  if (reference) {
    auto more = read_tbox(*reference, AxiomOrigin::Reference).axioms;
    axioms.insert(axioms.end(), std::make_move_iterator(more.begin()), std::make_move_iterator(more.end()));
  }
  return axioms;
}

}  // namespace detail

/// R⁺: the KG's resident signature closed under derivation with the schema
/// axioms and, when given, a shared reference ontology.
inline SignatureClosure signature_closure(const Graph& schema, const Graph* reference = nullptr) {
  return derive_closure(resident_signature(schema), detail::combined_axioms(schema, reference));
}

inline SignatureClosure signature_closure(const Graph& schema, const std::optional<Graph>& reference) {
  return signature_closure(schema, reference ? &*reference : nullptr);
}

inline CoverageResult coverage(const TaskSignature& task, const SignatureClosure& closure) {
  if (task.entries.empty()) throw EmptyTaskSignature();
  CoverageResult r;
  std::int64_t hits = 0;
  for (const auto& e : task.entries) {
    if (closure.contains(e.name, e.kind)) {
      ++hits;
      r.covered.insert(e.name);
      if (const auto* d = closure.find(e.name, e.kind)) {
        if (d->weak) r.weak.insert(e.name);
        if (d->via_reference) r.via_reference.insert(e.name);
      }
      continue;
    }
    r.gap.insert(e.name);
    const auto other = e.kind == NameKind::Concept ? NameKind::Role : NameKind::Concept;
    if (closure.contains(e.name, other)) r.kind_mismatch.insert(e.name);
  }
  r.score = Rational(hits, static_cast<std::int64_t>(task.entries.size()));
  return r;
}

/// Which definability route the closure relies on. Unsupported when the
/// axioms can define a name only implicitly (a complex class both below and
/// tied above a named class without an explicit equivalence), or when the
/// schema is outside OWL DL.
inline RouteDecision grounding_route(const Graph& schema, const Graph* reference = nullptr) {
  const auto fragment = detect_fragment(schema);
  if (fragment == DlFragment::OwlFull)
    return {GroundingRoute::Unsupported,
            "schema is outside OWL DL; coverage is a lower bound (no uniform interpolation or query rewriting)"};

  const auto axioms = detail::combined_axioms(schema, reference);
  NameSet explicitly_defined, below_complex, has_super;
  bool equivalences = false;
  std::string complex_gci;
  for (const auto& a : axioms) {
    if (a.kind == AxiomKind::EquivalentClasses) {
      equivalences = true;
      for (auto [named, other] : {std::pair{&a.lhs, &a.rhs}, std::pair{&a.rhs, &a.lhs}})
        if (detail::is_user_name(*named) && other->is_complex()) explicitly_defined.insert(named->name);
    }
    if (a.kind != AxiomKind::SubClassOf) continue;
    if (a.lhs.is_complex() && detail::is_user_name(a.rhs)) below_complex.insert(a.rhs.name);
    if (detail::is_user_name(a.lhs)) has_super.insert(a.lhs.name);
    if (a.lhs.is_complex() && a.rhs.is_complex() && complex_gci.empty()) complex_gci = a.id();
  }
  for (const auto& n : below_complex) {
    if (has_super.count(n) && !explicitly_defined.count(n))
      return {GroundingRoute::Unsupported,
              "<" + n.str() +
                  "> is only implicitly definable; uniform interpolation or query rewriting would be needed, so "
                  "coverage is a lower bound"};
  }
  if (!complex_gci.empty())
    return {GroundingRoute::Unsupported, "general concept inclusion " + complex_gci +
                                             " needs uniform interpolation or query rewriting; coverage is a lower bound"};
  if (fragment_le(fragment, DlFragment::Rdfs)) return {GroundingRoute::RdfsReachability, {}};
  if (equivalences) return {GroundingRoute::DefinitionPatterns, {}};
  return {GroundingRoute::RdfsReachability, {}};
}

inline RouteDecision grounding_route(const Graph& schema, const std::optional<Graph>& reference) {
  return grounding_route(schema, reference ? &*reference : nullptr);
}

}  // namespace aap
