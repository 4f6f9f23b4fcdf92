#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "aap/rdf.hpp"
#include "aap/signature.hpp"
#include "aap/vocab.hpp"

namespace aap {

/// Class expression over the constructs the library understands. Anything
/// else parses as `Other` and is carried along for diagnostics.
struct ClassExpr {
  enum class Kind { Named, Thing, Nothing, Some, All, And, Or, Not, Other };

  Kind kind = Kind::Other;
  Iri name;      // Named
  Iri property;  // Some, All
  std::vector<ClassExpr> operands;  // filler (Some/All), members (And/Or), operand (Not)
  std::string note;                 // Other: what was not understood

  bool is_named() const { return kind == Kind::Named; }
  bool is_complex() const { return kind != Kind::Named && kind != Kind::Thing && kind != Kind::Nothing; }

  static ClassExpr named(Iri i) {
    ClassExpr e;
    e.kind = Kind::Named;
    e.name = std::move(i);
    return e;
  }

  /// Concept and role names occurring in the expression (built-ins excluded).
  void collect(NameSet& concepts, NameSet& roles) const {
    switch (kind) {
      case Kind::Named:
        if (!vocab::is_builtin(name)) concepts.insert(name);
        break;
      case Kind::Some:
      case Kind::All:
        if (!vocab::is_builtin(property)) roles.insert(property);
        break;
      default: break;
    }
    for (const auto& op : operands) op.collect(concepts, roles);
  }

  std::string render() const {
    auto iri = [](const Iri& i) { return "<" + i.str() + ">"; };
    auto list = [&](const char* head) {
      std::string out = head;
      out += "(";
      for (std::size_t k = 0; k < operands.size(); ++k) {
        if (k) out += " ";
        out += operands[k].render();
      }
      return out + ")";
    };
    switch (kind) {
      case Kind::Named: return iri(name);
      case Kind::Thing: return "owl:Thing";
      case Kind::Nothing: return "owl:Nothing";
      case Kind::Some: return "ObjectSomeValuesFrom(" + iri(property) + " " + operands.at(0).render() + ")";
      case Kind::All: return "ObjectAllValuesFrom(" + iri(property) + " " + operands.at(0).render() + ")";
      case Kind::And: return list("ObjectIntersectionOf");
      case Kind::Or: return list("ObjectUnionOf");
      case Kind::Not: return list("ObjectComplementOf");
      case Kind::Other: return "Unsupported(" + note + ")";
    }
    return {};
  }
};

enum class AxiomKind {
  ClassDeclaration,
  PropertyDeclaration,
  SubClassOf,
  SubPropertyOf,
  Domain,
  Range,
  EquivalentClasses,
  DisjointClasses,
  InverseProperties,
  TransitiveProperty,
  FunctionalProperty,
  Annotation,
  Assertion,
  ShaclShape,
  Unsupported,
};

inline const char* axiom_kind_name(AxiomKind k) {
  switch (k) {
    case AxiomKind::ClassDeclaration: return "ClassDeclaration";
    case AxiomKind::PropertyDeclaration: return "PropertyDeclaration";
    case AxiomKind::SubClassOf: return "SubClassOf";
    case AxiomKind::SubPropertyOf: return "SubPropertyOf";
    case AxiomKind::Domain: return "Domain";
    case AxiomKind::Range: return "Range";
    case AxiomKind::EquivalentClasses: return "EquivalentClasses";
    case AxiomKind::DisjointClasses: return "DisjointClasses";
    case AxiomKind::InverseProperties: return "InverseProperties";
    case AxiomKind::TransitiveProperty: return "TransitiveProperty";
    case AxiomKind::FunctionalProperty: return "FunctionalProperty";
    case AxiomKind::Annotation: return "Annotation";
    case AxiomKind::Assertion: return "Assertion";
    case AxiomKind::ShaclShape: return "ShaclShape";
    case AxiomKind::Unsupported: return "Unsupported";
  }
  return "Unsupported";
}

enum class AxiomOrigin { Schema, Reference };

/// One schema axiom together with the triples that encode it.
struct Axiom {
  AxiomKind kind = AxiomKind::Unsupported;
  AxiomOrigin origin = AxiomOrigin::Schema;
  Term subject;         // declarations, annotations, assertions
  ClassExpr lhs, rhs;   // SubClassOf, EquivalentClasses, DisjointClasses; rhs for Domain/Range
  Iri property, other;  // property axioms
  std::vector<Triple> triples;
  std::string diagnostic;

  /// Stable identifier built from the axiom structure, independent of
  /// blank-node labels.
  std::string id() const {
    auto iri = [](const Iri& i) { return "<" + i.str() + ">"; };
    auto subj = [&]() -> std::string {
      if (const auto* i = as_iri(subject)) return iri(*i);
      return "_";
    };
    switch (kind) {
      case AxiomKind::ClassDeclaration: return "Declaration(Class(" + subj() + "))";
      case AxiomKind::PropertyDeclaration: return "Declaration(Property(" + subj() + "))";
      case AxiomKind::SubClassOf: return "SubClassOf(" + lhs.render() + " " + rhs.render() + ")";
      case AxiomKind::SubPropertyOf: return "SubPropertyOf(" + iri(property) + " " + iri(other) + ")";
      case AxiomKind::Domain: return "Domain(" + iri(property) + " " + rhs.render() + ")";
      case AxiomKind::Range: return "Range(" + iri(property) + " " + rhs.render() + ")";
      case AxiomKind::EquivalentClasses: return "EquivalentClasses(" + lhs.render() + " " + rhs.render() + ")";
      case AxiomKind::DisjointClasses: return "DisjointClasses(" + lhs.render() + " " + rhs.render() + ")";
      case AxiomKind::InverseProperties: return "InverseProperties(" + iri(property) + " " + iri(other) + ")";
      case AxiomKind::TransitiveProperty: return "TransitiveProperty(" + iri(property) + ")";
      case AxiomKind::FunctionalProperty: return "FunctionalProperty(" + iri(property) + ")";
      default: break;
    }
    std::string out = std::string(axiom_kind_name(kind)) + "(" + subj();
    if (!triples.empty()) out += " <" + triples.front().predicate.str() + ">";
    return out + ")";
  }

  /// Concept and role names the axiom mentions.
  void collect(NameSet& concepts, NameSet& roles) const {
    lhs.collect(concepts, roles);
    rhs.collect(concepts, roles);
    for (const Iri* p : {&property, &other})
      if (!p->empty() && !vocab::is_builtin(*p)) roles.insert(*p);
    if (kind == AxiomKind::ClassDeclaration) detail::add_name(concepts, subject);
    if (kind == AxiomKind::PropertyDeclaration) detail::add_name(roles, subject);
  }
};

struct TBox {
  std::vector<Axiom> axioms;
  std::vector<std::string> diagnostics;
};

namespace detail {

class TBoxReader {
public:
  TBoxReader(const Graph& g, AxiomOrigin origin) : g_(g), origin_(origin) {
    for (const auto& t : g_) {
      if (is_blank(t.object)) referenced_.insert(t.object);
    }
  }

  TBox read() {
    for (const auto& t : g_) {
      if (is_blank(t.subject) && referenced_.count(t.subject)) continue;  // part of an expression
      if (is_blank(t.subject)) {
        top_level_blank(t);
        continue;
      }
      top_level(t);
    }
    return std::move(out_);
  }

private:
  const Graph& g_;
  AxiomOrigin origin_;
  std::set<Term> referenced_;
  TBox out_;

  Axiom make(AxiomKind k, const Triple& t) {
    Axiom a;
    a.kind = k;
    a.origin = origin_;
    a.subject = t.subject;
    a.triples.push_back(t);
    return a;
  }

  void push(Axiom a) {
    std::sort(a.triples.begin(), a.triples.end());
    a.triples.erase(std::unique(a.triples.begin(), a.triples.end()), a.triples.end());
    if (a.kind == AxiomKind::Unsupported && !a.diagnostic.empty()) out_.diagnostics.push_back(a.diagnostic);
    out_.axioms.push_back(std::move(a));
  }

  // Collects every triple reachable from a blank node through blank nodes.
  void gather(const Term& node, std::vector<Triple>& into, std::set<Term>& seen) const {
    if (!is_blank(node) || !seen.insert(node).second) return;
    for (auto& t : g_.about(node)) {
      into.push_back(t);
      gather(t.object, into, seen);
    }
  }

  ClassExpr expr(const Term& node, std::vector<Triple>& triples) const {
    std::set<Term> seen;
    gather(node, triples, seen);
    return parse_expr(node, 0);
  }

  ClassExpr parse_expr(const Term& node, int depth) const {
    ClassExpr e;
    if (depth > 64) {
      e.note = "expression nesting too deep";
      return e;
    }
    if (const auto* iri = as_iri(node)) {
      if (*iri == vocab::owl("Thing")) {
        e.kind = ClassExpr::Kind::Thing;
      } else if (*iri == vocab::owl("Nothing")) {
        e.kind = ClassExpr::Kind::Nothing;
      } else {
        e = ClassExpr::named(*iri);
      }
      return e;
    }
    if (!is_blank(node)) {
      e.note = "literal in class position";
      return e;
    }
    if (auto on = g_.object(node, vocab::owl("onProperty"))) {
      const auto* prop = as_iri(*on);
      auto some = g_.object(node, vocab::owl("someValuesFrom"));
      auto all = g_.object(node, vocab::owl("allValuesFrom"));
      if (prop && (some || all) && !(some && all)) {
        e.kind = some ? ClassExpr::Kind::Some : ClassExpr::Kind::All;
        e.property = *prop;
        e.operands.push_back(parse_expr(some ? *some : *all, depth + 1));
        return e;
      }
      e.note = "restriction other than someValuesFrom/allValuesFrom";
      return e;
    }
    for (auto [pred, kind] : {std::pair{vocab::owl("intersectionOf"), ClassExpr::Kind::And},
                              std::pair{vocab::owl("unionOf"), ClassExpr::Kind::Or}}) {
      if (auto head = g_.object(node, pred)) {
        auto items = read_list(g_, *head);
        if (!items || items->size() < 2) {
          e.note = "malformed operand list";
          return e;
        }
        e.kind = kind;
        for (const auto& item : *items) e.operands.push_back(parse_expr(item, depth + 1));
        return e;
      }
    }
    if (auto c = g_.object(node, vocab::owl("complementOf"))) {
      e.kind = ClassExpr::Kind::Not;
      e.operands.push_back(parse_expr(*c, depth + 1));
      return e;
    }
    e.note = "unrecognised anonymous class";
    return e;
  }

  static bool is_shacl(const Triple& t) {
    if (t.predicate.starts_with(vocab::kSh)) return true;
    const auto* o = as_iri(t.object);
    return t.predicate == vocab::rdf_type() && o && o->starts_with(vocab::kSh);
  }

  void top_level_blank(const Triple& t) {
    static const std::set<Iri> gci = {vocab::rdfs("subClassOf"), vocab::owl("equivalentClass"),
                                      vocab::owl("disjointWith")};
    if (is_shacl(t)) {
      auto a = make(AxiomKind::ShaclShape, t);
      std::set<Term> seen;
      gather(t.object, a.triples, seen);
      push(std::move(a));
      return;
    }
    if (gci.count(t.predicate)) {
      const auto kind = t.predicate == vocab::rdfs("subClassOf")       ? AxiomKind::SubClassOf
                        : t.predicate == vocab::owl("equivalentClass") ? AxiomKind::EquivalentClasses
                                                                      : AxiomKind::DisjointClasses;
      auto a = make(kind, t);
      a.triples.clear();
      a.lhs = expr(t.subject, a.triples);
      // other axioms on the same anonymous subject are not part of this one
      std::erase_if(a.triples, [&](const Triple& u) { return u.subject == t.subject && gci.count(u.predicate); });
      a.triples.push_back(t);
      a.rhs = expr(t.object, a.triples);
      push(std::move(a));
      return;
    }
    // Describing triples of an unreferenced blank class (e.g. its owl:Restriction
    // typing) belong to the GCI that uses it; anything else is outside the catalogue.
    const bool describes_gci = [&] {
      for (const auto& u : g_.about(t.subject))
        if (gci.count(u.predicate)) return true;
      return false;
    }();
    if (describes_gci) return;
    auto a = make(AxiomKind::Unsupported, t);
    a.diagnostic = "unsupported triple on anonymous subject with predicate <" + t.predicate.str() + ">";
    push(std::move(a));
  }

  void top_level(const Triple& t) {
    const Iri& p = t.predicate;
    const auto* obj = as_iri(t.object);
    const auto& subj_iri = *as_iri(t.subject);

    if (is_shacl(t)) {
      auto a = make(AxiomKind::ShaclShape, t);
      std::set<Term> seen;
      gather(t.object, a.triples, seen);
      push(std::move(a));
      return;
    }

    if (p == vocab::rdf_type()) {
      if (!obj) {
        auto a = make(AxiomKind::Unsupported, t);
        a.diagnostic = "rdf:type with non-IRI object on <" + subj_iri.str() + ">";
        push(std::move(a));
        return;
      }
      if (is_class_type(*obj)) return push(make(AxiomKind::ClassDeclaration, t));
      if (*obj == vocab::owl("TransitiveProperty")) {
        auto a = make(AxiomKind::TransitiveProperty, t);
        a.property = subj_iri;
        return push(std::move(a));
      }
      if (*obj == vocab::owl("FunctionalProperty")) {
        auto a = make(AxiomKind::FunctionalProperty, t);
        a.property = subj_iri;
        return push(std::move(a));
      }
      if (*obj == vocab::rdf("Property") || *obj == vocab::owl("ObjectProperty") ||
          *obj == vocab::owl("DatatypeProperty") || *obj == vocab::owl("AnnotationProperty"))
        return push(make(AxiomKind::PropertyDeclaration, t));
      if (*obj == vocab::owl("Ontology")) return push(make(AxiomKind::Annotation, t));
      if (*obj == vocab::owl("NamedIndividual") || !vocab::is_builtin(*obj))
        return push(make(AxiomKind::Assertion, t));
      auto a = make(AxiomKind::Unsupported, t);
      a.diagnostic = "type <" + obj->str() + "> is outside the supported catalogue";
      return push(std::move(a));
    }

    if (p == vocab::rdfs("subClassOf") || p == vocab::owl("equivalentClass") || p == vocab::owl("disjointWith")) {
      const auto kind = p == vocab::rdfs("subClassOf")       ? AxiomKind::SubClassOf
                        : p == vocab::owl("equivalentClass") ? AxiomKind::EquivalentClasses
                                                             : AxiomKind::DisjointClasses;
      auto a = make(kind, t);
      a.lhs = ClassExpr::named(subj_iri);
      a.rhs = expr(t.object, a.triples);
      return push(std::move(a));
    }

    if (p == vocab::rdfs("domain") || p == vocab::rdfs("range")) {
      auto a = make(p == vocab::rdfs("domain") ? AxiomKind::Domain : AxiomKind::Range, t);
      a.property = subj_iri;
      a.rhs = expr(t.object, a.triples);
      return push(std::move(a));
    }

    if ((p == vocab::rdfs("subPropertyOf") || p == vocab::owl("inverseOf")) && obj) {
      auto a = make(p == vocab::rdfs("subPropertyOf") ? AxiomKind::SubPropertyOf : AxiomKind::InverseProperties, t);
      a.property = subj_iri;
      a.other = *obj;
      return push(std::move(a));
    }

    if (!vocab::is_builtin(p))
      return push(make(referenced_property_is_role(p) ? AxiomKind::Assertion : AxiomKind::Annotation, t));
    if (p == vocab::rdfs("label") || p == vocab::rdfs("comment") || p == vocab::rdfs("seeAlso") ||
        p == vocab::rdfs("isDefinedBy") || p == vocab::owl("versionInfo"))
      return push(make(AxiomKind::Annotation, t));

    auto a = make(AxiomKind::Unsupported, t);
    a.diagnostic = "predicate <" + p.str() + "> is outside the supported catalogue";
    push(std::move(a));
  }

  // A non-built-in predicate that the schema itself declares or axiomatises
  // as a property is a property assertion, not an annotation.
  bool referenced_property_is_role(const Iri& p) const {
    for (const auto& o : g_.objects(Term{p}, vocab::rdf_type()))
      if (const auto* i = as_iri(o); i && *i != vocab::owl("AnnotationProperty")) return true;
    return false;
  }
};

}  // namespace detail

inline TBox read_tbox(const Graph& g, AxiomOrigin origin = AxiomOrigin::Schema) {
  return detail::TBoxReader(g, origin).read();
}

}  // namespace aap
