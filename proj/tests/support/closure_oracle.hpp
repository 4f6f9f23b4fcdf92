#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "aap/rdf.hpp"
#include "aap/vocab.hpp"

// Brute-force signature closure over raw triples. Shares nothing with the
// library's TBox reader: it walks the OWL triple encoding directly and
// iterates the two witness rules until nothing changes.
namespace aap::test::oracle {

enum class Kind { Concept, Role };
using Name = std::pair<std::string, Kind>;
using Names = std::set<Name>;

inline bool user_iri(const Term& t) { return is_iri(t) && !vocab::is_builtin(*as_iri(t)); }

inline std::vector<Term> list_items(const Graph& g, Term node) {
  std::vector<Term> out;
  for (int guard = 0; guard < 10000; ++guard) {
    if (is_iri(node) && *as_iri(node) == vocab::rdf("nil")) break;
    auto first = g.object(node, vocab::rdf("first"));
    auto rest = g.object(node, vocab::rdf("rest"));
    if (!first || !rest) break;
    out.push_back(*first);
    node = *rest;
  }
  return out;
}

/// Names occurring in a class expression.
inline void expression_names(const Graph& g, const Term& e, Names& out) {
  if (user_iri(e)) {
    out.insert({as_iri(e)->str(), Kind::Concept});
    return;
  }
  if (!is_blank(e)) return;
  for (const auto& t : g.about(e)) {
    const auto& p = t.predicate;
    if (p == vocab::owl("onProperty") && user_iri(t.object)) out.insert({as_iri(t.object)->str(), Kind::Role});
    if (p == vocab::owl("someValuesFrom") || p == vocab::owl("allValuesFrom") || p == vocab::owl("complementOf"))
      expression_names(g, t.object, out);
    if (p == vocab::owl("intersectionOf") || p == vocab::owl("unionOf"))
      for (const auto& item : list_items(g, t.object)) expression_names(g, item, out);
  }
}

/// Resident signature read straight off the triples.
inline Names resident(const Graph& schema) {
  Names out;
  auto concept_of = [&](const Term& t) {
    if (user_iri(t)) out.insert({as_iri(t)->str(), Kind::Concept});
  };
  auto role_of = [&](const Term& t) {
    if (user_iri(t)) out.insert({as_iri(t)->str(), Kind::Role});
  };
  for (const auto& t : schema) {
    const auto& p = t.predicate;
    if (!vocab::is_builtin(p)) out.insert({p.str(), Kind::Role});
    if (p == vocab::rdf_type()) {
      const auto* o = as_iri(t.object);
      if (!o) continue;
      if (*o == vocab::owl("Class") || *o == vocab::rdfs("Class")) concept_of(t.subject);
      else if (*o == vocab::owl("ObjectProperty") || *o == vocab::rdf("Property") ||
               *o == vocab::owl("TransitiveProperty") || *o == vocab::owl("FunctionalProperty"))
        role_of(t.subject);
      else concept_of(t.object);
    } else if (p == vocab::rdfs("subClassOf") || p == vocab::owl("equivalentClass") ||
               p == vocab::owl("disjointWith")) {
      concept_of(t.subject);
      concept_of(t.object);
    } else if (p == vocab::rdfs("subPropertyOf") || p == vocab::owl("inverseOf")) {
      role_of(t.subject);
      role_of(t.object);
    } else if (p == vocab::rdfs("domain") || p == vocab::rdfs("range")) {
      role_of(t.subject);
      concept_of(t.object);
    } else if (p == vocab::owl("onProperty")) {
      role_of(t.object);
    } else if (p == vocab::owl("someValuesFrom") || p == vocab::owl("allValuesFrom") ||
               p == vocab::owl("complementOf")) {
      concept_of(t.object);
    } else if (p == vocab::owl("intersectionOf") || p == vocab::owl("unionOf")) {
      for (const auto& item : list_items(schema, t.object)) concept_of(item);
    }
  }
  return out;
}

/// R⁺ as a plain set: resident names plus everything the two rules reach.
inline Names closure(const Graph& schema, const Graph* reference) {
  Names closed = resident(schema);
  struct Edge {
    Name a, b;
  };
  struct Definition {
    Name defined;
    Names uses;
  };
  std::vector<Edge> edges;
  std::vector<Definition> defs;
  std::vector<const Graph*> graphs{&schema};
  if (reference) graphs.push_back(reference);
  for (const Graph* g : graphs) {
    for (const auto& t : *g) {
      const bool both_named = user_iri(t.subject) && user_iri(t.object);
      if (t.predicate == vocab::rdfs("subClassOf") && both_named)
        edges.push_back({{as_iri(t.subject)->str(), Kind::Concept}, {as_iri(t.object)->str(), Kind::Concept}});
      if (t.predicate == vocab::rdfs("subPropertyOf") && both_named)
        edges.push_back({{as_iri(t.subject)->str(), Kind::Role}, {as_iri(t.object)->str(), Kind::Role}});
      if (t.predicate == vocab::owl("equivalentClass")) {
        for (auto [named, other] : {std::pair{&t.subject, &t.object}, std::pair{&t.object, &t.subject}}) {
          if (!user_iri(*named)) continue;
          Definition d{{as_iri(*named)->str(), Kind::Concept}, {}};
          expression_names(*g, *other, d.uses);
          defs.push_back(std::move(d));
        }
      }
    }
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& e : edges) {
      if (closed.count(e.a) && closed.insert(e.b).second) changed = true;
      if (closed.count(e.b) && closed.insert(e.a).second) changed = true;
    }
    for (const auto& d : defs) {
      bool all = true;
      for (const auto& u : d.uses) all = all && closed.count(u);
      if (all && closed.insert(d.defined).second) changed = true;
    }
  }
  return closed;
}

}  // namespace aap::test::oracle
