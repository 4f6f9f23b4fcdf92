#pragma once

#include <map>
#include <set>
#include <vector>

#include "aap/rdf.hpp"
#include "aap/vocab.hpp"

namespace aap {

/// A KG as three independently loaded graphs. Any of them may be empty.
struct KgDescriptor {
  Iri id;
  Graph schema;    // TBox
  Graph data;      // ABox
  Graph metadata;  // M(KG)
};

/// Reflexive-transitive closure of a named subsumption relation.
class Hierarchy {
public:
  void add_edge(const Iri& sub, const Iri& super) {
    if (sub != super) up_[sub].insert(super);
  }

  /// `name` and everything above it.
  std::set<Iri> ancestors(const Iri& name) const {
    std::set<Iri> out{name};
    std::vector<Iri> stack{name};
    while (!stack.empty()) {
      auto cur = stack.back();
      stack.pop_back();
      auto it = up_.find(cur);
      if (it == up_.end()) continue;
      for (const auto& s : it->second)
        if (out.insert(s).second) stack.push_back(s);
    }
    return out;
  }

private:
  std::map<Iri, std::set<Iri>> up_;
};

/// Named rdfs:subClassOf (plus named owl:equivalentClass, both ways) and
/// rdfs:subPropertyOf hierarchies read straight from a graph's triples.
struct RdfsHierarchies {
  Hierarchy classes;
  Hierarchy properties;
};

inline RdfsHierarchies rdfs_hierarchies(const Graph& g) {
  RdfsHierarchies h;
  for (const auto& t : g) {
    const auto* s = as_iri(t.subject);
    const auto* o = as_iri(t.object);
    if (!s || !o) continue;
    if (t.predicate == vocab::rdfs("subClassOf")) {
      h.classes.add_edge(*s, *o);
    } else if (t.predicate == vocab::owl("equivalentClass")) {
      h.classes.add_edge(*s, *o);
      h.classes.add_edge(*o, *s);
    } else if (t.predicate == vocab::rdfs("subPropertyOf")) {
      h.properties.add_edge(*s, *o);
    }
  }
  return h;
}

/// RDFS entailment rules rdfs2, rdfs3, rdfs5, rdfs7, rdfs9 and rdfs11,
/// applied to a fixpoint over the graph's own schema triples.
inline Graph rdfs_materialize(const Graph& g) {
  Graph out = g;
  const Iri sco = vocab::rdfs("subClassOf");
  const Iri spo = vocab::rdfs("subPropertyOf");
  const Iri dom = vocab::rdfs("domain");
  const Iri rng = vocab::rdfs("range");
  const Iri& type = vocab::rdf_type();
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<Triple> add;
    std::map<Iri, std::vector<Iri>> sub_class, sub_prop, domains, ranges;
    for (const auto& t : out) {
      const auto* s = as_iri(t.subject);
      const auto* o = as_iri(t.object);
      if (!s || !o) continue;
      if (t.predicate == sco) sub_class[*s].push_back(*o);
      if (t.predicate == spo) sub_prop[*s].push_back(*o);
      if (t.predicate == dom) domains[*s].push_back(*o);
      if (t.predicate == rng) ranges[*s].push_back(*o);
    }
    for (const auto& t : out) {
      if (auto it = sub_prop.find(t.predicate); it != sub_prop.end())
        for (const auto& sup : it->second) add.push_back({t.subject, sup, t.object});
      if (auto it = domains.find(t.predicate); it != domains.end())
        for (const auto& c : it->second) add.push_back({t.subject, type, Term{c}});
      if (auto it = ranges.find(t.predicate); it != ranges.end() && !is_literal(t.object))
        for (const auto& c : it->second) add.push_back({t.object, type, Term{c}});
      if (t.predicate == type) {
        if (const auto* c = as_iri(t.object); c)
          if (auto it = sub_class.find(*c); it != sub_class.end())
            for (const auto& sup : it->second) add.push_back({t.subject, type, Term{sup}});
      }
      if (t.predicate == sco || t.predicate == spo) {
        const auto& table = t.predicate == sco ? sub_class : sub_prop;
        if (const auto* o = as_iri(t.object); o)
          if (auto it = table.find(*o); it != table.end())
            for (const auto& sup : it->second) add.push_back({t.subject, t.predicate, Term{sup}});
      }
    }
    for (auto& t : add)
      if (out.insert(std::move(t))) changed = true;
  }
  return out;
}

}  // namespace aap
