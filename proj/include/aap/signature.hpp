#pragma once

#include <set>
#include <vector>

#include "aap/rdf.hpp"
#include "aap/vocab.hpp"

namespace aap {

enum class SignaturePartition { Concepts, Roles, Individuals, All };

using NameSet = std::set<Iri>;

/// Names of a graph split by the position they occur in. Blank nodes,
/// literals and built-in vocabulary (RDF, RDFS, OWL, XSD, SHACL) never
/// appear. An IRI used both as a class and as a property is kept in both
/// partitions and listed in `punned`.
struct SignatureSplit {
  NameSet concepts;
  NameSet roles;
  NameSet individuals;
  NameSet punned;
};

namespace detail {

inline bool is_class_type(const Iri& t) { return t == vocab::owl("Class") || t == vocab::rdfs("Class"); }

inline bool is_property_type(const Iri& t) {
  static const std::set<Iri> kinds = {
      vocab::rdf("Property"),           vocab::owl("ObjectProperty"),     vocab::owl("DatatypeProperty"),
      vocab::owl("AnnotationProperty"), vocab::owl("TransitiveProperty"), vocab::owl("FunctionalProperty"),
      vocab::owl("InverseFunctionalProperty"), vocab::owl("SymmetricProperty"), vocab::owl("AsymmetricProperty"),
      vocab::owl("ReflexiveProperty"),  vocab::owl("IrreflexiveProperty"),
  };
  return kinds.count(t) != 0;
}

inline void add_name(NameSet& set, const Term& t) {
  if (const auto* iri = as_iri(t); iri && !vocab::is_builtin(*iri)) set.insert(*iri);
}

}  // namespace detail

inline SignatureSplit split_signature(const Graph& g) {
  static const Iri type = vocab::rdf_type();
  static const std::set<Iri> class_both = {vocab::rdfs("subClassOf"), vocab::owl("equivalentClass"),
                                           vocab::owl("disjointWith")};
  static const std::set<Iri> class_object = {vocab::rdfs("domain"), vocab::rdfs("range"),
                                             vocab::owl("someValuesFrom"), vocab::owl("allValuesFrom"),
                                             vocab::owl("complementOf"), vocab::sh("targetClass"),
                                             vocab::owl("onClass")};
  static const std::set<Iri> role_both = {vocab::rdfs("subPropertyOf"), vocab::owl("inverseOf"),
                                          vocab::owl("equivalentProperty")};
  static const std::set<Iri> role_subject = {vocab::rdfs("domain"), vocab::rdfs("range")};
  static const std::set<Iri> role_object = {vocab::owl("onProperty"), vocab::sh("path")};
  static const std::set<Iri> class_lists = {vocab::owl("intersectionOf"), vocab::owl("unionOf")};
  static const std::set<Iri> role_lists = {vocab::sh("ignoredProperties")};

  SignatureSplit s;
  for (const auto& t : g) {
    const Iri& p = t.predicate;
    if (p == type) {
      if (const auto* o = as_iri(t.object)) {
        if (detail::is_class_type(*o)) {
          detail::add_name(s.concepts, t.subject);
        } else if (detail::is_property_type(*o)) {
          detail::add_name(s.roles, t.subject);
        } else {
          detail::add_name(s.concepts, t.object);
        }
      }
      continue;
    }
    if (class_both.count(p)) {
      detail::add_name(s.concepts, t.subject);
      detail::add_name(s.concepts, t.object);
    }
    if (class_object.count(p)) detail::add_name(s.concepts, t.object);
    if (role_both.count(p)) {
      detail::add_name(s.roles, t.subject);
      detail::add_name(s.roles, t.object);
    }
    if (role_subject.count(p)) detail::add_name(s.roles, t.subject);
    if (role_object.count(p)) detail::add_name(s.roles, t.object);
    if (!vocab::is_builtin(p)) s.roles.insert(p);
    if (class_lists.count(p) || role_lists.count(p)) {
      if (auto items = read_list(g, t.object)) {
        for (const auto& item : *items) detail::add_name(class_lists.count(p) ? s.concepts : s.roles, item);
      }
    }
  }

  for (const auto& t : g) {
    for (const Term* pos : {&t.subject, &t.object}) {
      if (const auto* iri = as_iri(*pos); iri && !vocab::is_builtin(*iri) && !s.concepts.count(*iri) &&
                                          !s.roles.count(*iri))
        s.individuals.insert(*iri);
    }
  }
  for (const auto& c : s.concepts)
    if (s.roles.count(c)) s.punned.insert(c);
  return s;
}

inline NameSet signature(const Graph& g, SignaturePartition partition) {
  auto s = split_signature(g);
  switch (partition) {
    case SignaturePartition::Concepts: return s.concepts;
    case SignaturePartition::Roles: return s.roles;
    case SignaturePartition::Individuals: return s.individuals;
    case SignaturePartition::All: break;
  }
  NameSet all = std::move(s.concepts);
  all.insert(s.roles.begin(), s.roles.end());
  all.insert(s.individuals.begin(), s.individuals.end());
  return all;
}

}  // namespace aap
