#pragma once

#include <bitset>
#include <map>
#include <string>
#include <vector>

#include "aap/fragment.hpp"
#include "aap/rational.hpp"
#include "aap/rdf.hpp"
#include "aap/rdfs.hpp"
#include "aap/signature.hpp"
#include "aap/tbox.hpp"

namespace aap {

/// Dimension E.
struct ExpressivityProfile {
  DlFragment fragment = DlFragment::RdfOnly;
  Rational conformance_ratio{1};
  std::map<std::string, std::size_t> axiom_census;  // axiom kind -> count
  std::map<std::string, std::size_t> features;      // fragment-table feature -> count
  std::vector<std::string> diagnostics;
};

struct FragmentAnalysis {
  DlFragment fragment = DlFragment::RdfOnly;
  std::vector<DlFragment> minimal;  // minimal fragments admitting every feature
  std::map<std::string, std::size_t> features;
  std::vector<std::string> diagnostics;
};

namespace detail {

inline void expr_features(const ClassExpr& e, const char* pos, std::map<std::string, std::size_t>& out) {
  using K = ClassExpr::Kind;
  auto add = [&](const char* ctor) { ++out[std::string(ctor) + "-" + pos]; };
  switch (e.kind) {
    case K::Named:
    case K::Thing:
    case K::Nothing: return;
    case K::Some: add("existential"); break;
    case K::All: add("universal"); break;
    case K::And: add("intersection"); break;
    case K::Or: add("union"); break;
    case K::Not: {
      add("complement");
      const std::string p = pos;
      const char* flipped = p == "sub" ? "super" : p == "super" ? "sub" : pos;
      for (const auto& op : e.operands) expr_features(op, flipped, out);
      return;
    }
    case K::Other: ++out["unsupported"]; return;
  }
  for (const auto& op : e.operands) expr_features(op, pos, out);
}

inline std::map<std::string, std::size_t> schema_features(const TBox& tbox, const SignatureSplit& sig) {
  std::map<std::string, std::size_t> out;
  for (const auto& a : tbox.axioms) {
    switch (a.kind) {
      case AxiomKind::ClassDeclaration: ++out["class-declaration"]; break;
      case AxiomKind::PropertyDeclaration: ++out["property-declaration"]; break;
      case AxiomKind::SubClassOf:
        ++out["subclass-of"];
        expr_features(a.lhs, "sub", out);
        expr_features(a.rhs, "super", out);
        break;
      case AxiomKind::EquivalentClasses:
        if (!a.lhs.is_complex() && !a.rhs.is_complex()) {
          ++out["equivalent-class-named"];
        } else {
          expr_features(a.lhs, "equivalent", out);
          expr_features(a.rhs, "equivalent", out);
        }
        break;
      case AxiomKind::DisjointClasses:
        ++out["disjoint-with"];
        expr_features(a.lhs, "sub", out);
        expr_features(a.rhs, "sub", out);
        break;
      case AxiomKind::Domain:
      case AxiomKind::Range:
        ++out[a.kind == AxiomKind::Domain ? "domain" : "range"];
        expr_features(a.rhs, "super", out);
        break;
      case AxiomKind::SubPropertyOf: ++out["subproperty-of"]; break;
      case AxiomKind::InverseProperties: ++out["inverse-of"]; break;
      case AxiomKind::TransitiveProperty: ++out["transitive-property"]; break;
      case AxiomKind::FunctionalProperty: ++out["functional-property"]; break;
      case AxiomKind::Annotation: ++out["annotation"]; break;
      case AxiomKind::Assertion: ++out["assertion"]; break;
      case AxiomKind::ShaclShape: ++out["shacl-shape"]; break;
      case AxiomKind::Unsupported: ++out["unsupported"]; break;
    }
  }
  if (!sig.punned.empty()) out["punning"] = sig.punned.size();
  return out;
}

using FragmentSet = std::bitset<kAllFragments.size()>;

inline void unsupported_notes(const ClassExpr& e, std::vector<std::string>& out) {
  if (e.kind == ClassExpr::Kind::Other) out.push_back(e.note);
  for (const auto& op : e.operands) unsupported_notes(op, out);
}

inline FragmentSet up_closure(const std::vector<DlFragment>& minimal) {
  FragmentSet s;
  for (std::size_t i = 0; i < kAllFragments.size(); ++i)
    for (auto m : minimal)
      if (fragment_le(m, kAllFragments[i])) s.set(i);
  return s;
}

}  // namespace detail

/// Locates the schema on the fragment order: the least fragment admitting
/// every feature, or, when the admitting set has several minimal elements,
/// the first of them in the table's profile preference.
inline FragmentAnalysis analyse_fragment(const Graph& schema, const FragmentTable& table = default_fragment_table()) {
  FragmentAnalysis r;
  const auto tbox = read_tbox(schema);
  const auto sig = split_signature(schema);
  r.features = detail::schema_features(tbox, sig);
  r.diagnostics = tbox.diagnostics;
  for (const auto& a : tbox.axioms) {
    std::vector<std::string> notes;
    switch (a.kind) {
      case AxiomKind::SubClassOf:
      case AxiomKind::EquivalentClasses:
      case AxiomKind::DisjointClasses: detail::unsupported_notes(a.lhs, notes); [[fallthrough]];
      case AxiomKind::Domain:
      case AxiomKind::Range: detail::unsupported_notes(a.rhs, notes); break;
      default: break;
    }
    for (const auto& n : notes)
      r.diagnostics.push_back("class expression outside the supported catalogue (" + n + ") in " + a.id());
  }
  if (!sig.punned.empty()) {
    std::string names;
    for (const auto& p : sig.punned) names += " <" + p.str() + ">";
    r.diagnostics.push_back("names used both as class and as property:" + names);
  }

  detail::FragmentSet admitted;
  admitted.set();
  for (const auto& [feature, count] : r.features) {
    auto it = table.features.find(feature);
    if (it == table.features.end()) {
      r.diagnostics.push_back("feature '" + feature + "' is missing from the fragment table");
      admitted &= detail::up_closure({DlFragment::OwlFull});
      continue;
    }
    admitted &= detail::up_closure(it->second);
  }

  for (std::size_t i = 0; i < kAllFragments.size(); ++i) {
    if (!admitted.test(i)) continue;
    bool is_minimal = true;
    for (std::size_t j = 0; j < kAllFragments.size(); ++j)
      if (j != i && admitted.test(j) && fragment_le(kAllFragments[j], kAllFragments[i])) is_minimal = false;
    if (is_minimal) r.minimal.push_back(kAllFragments[i]);
  }
  if (r.minimal.size() == 1) {
    r.fragment = r.minimal.front();
    return r;
  }
  for (auto pref : table.profile_preference) {
    for (auto m : r.minimal)
      if (m == pref) {
        r.fragment = m;
        return r;
      }
  }
  r.fragment = r.minimal.front();
  for (auto m : r.minimal) r.fragment = fragment_join(r.fragment, m);
  return r;
}

inline DlFragment detect_fragment(const Graph& schema) { return analyse_fragment(schema).fragment; }

inline std::map<std::string, std::size_t> axiom_census(const TBox& tbox) {
  std::map<std::string, std::size_t> out;
  for (const auto& a : tbox.axioms) ++out[axiom_kind_name(a.kind)];
  return out;
}

/// Typing assertions and assertions with a non-built-in predicate; these
/// form the conformance denominator.
inline bool is_counted_assertion(const Triple& t) {
  if (t.predicate == vocab::rdf_type()) {
    const auto* o = as_iri(t.object);
    return o && !vocab::is_builtin(*o);
  }
  return !vocab::is_builtin(t.predicate);
}

namespace detail {

inline bool literal_fits(const Literal& lit, const Iri& range) {
  if (range == vocab::rdfs("Literal")) return true;
  return lit.datatype == range;
}

}  // namespace detail

/// Share of data-graph assertions whose typing the schema supports. Types of
/// an individual are its asserted types closed under named subsumption in the
/// schema; domains and ranges are checked against those types.
inline Rational conformance_ratio(const KgDescriptor& kg) {
  const auto sig = split_signature(kg.schema);
  const auto tbox = read_tbox(kg.schema);
  const auto h = rdfs_hierarchies(kg.schema);

  std::map<Iri, std::vector<Iri>> domains, ranges;
  for (const auto& a : tbox.axioms) {
    if ((a.kind == AxiomKind::Domain || a.kind == AxiomKind::Range) && a.rhs.is_named())
      (a.kind == AxiomKind::Domain ? domains : ranges)[a.property].push_back(a.rhs.name);
  }

  std::map<Term, std::set<Iri>> types;
  for (const auto& t : kg.data) {
    if (t.predicate != vocab::rdf_type()) continue;
    if (const auto* c = as_iri(t.object)) {
      auto& ts = types[t.subject];
      for (const auto& up : h.classes.ancestors(*c)) ts.insert(up);
    }
  }
  auto has_type = [&](const Term& x, const Iri& c) {
    if (c == vocab::owl("Thing")) return true;
    auto it = types.find(x);
    return it != types.end() && it->second.count(c) != 0;
  };

  std::int64_t total = 0, ok = 0;
  for (const auto& t : kg.data) {
    if (!is_counted_assertion(t)) continue;
    ++total;
    if (t.predicate == vocab::rdf_type()) {
      if (sig.concepts.count(*as_iri(t.object))) ++ok;
      continue;
    }
    if (!sig.roles.count(t.predicate)) continue;
    bool good = true;
    for (const auto& q : h.properties.ancestors(t.predicate)) {
      if (auto it = domains.find(q); it != domains.end())
        for (const auto& d : it->second) good = good && has_type(t.subject, d);
      if (auto it = ranges.find(q); it != ranges.end())
        for (const auto& r : it->second) {
          if (const auto* lit = as_literal(t.object)) {
            good = good && detail::literal_fits(*lit, r);
          } else {
            good = good && has_type(t.object, r);
          }
        }
    }
    if (good) ++ok;
  }
  if (total == 0) return Rational(1);
  return Rational(ok, total);
}

inline ExpressivityProfile compute_expressivity(const KgDescriptor& kg,
                                                const FragmentTable& table = default_fragment_table()) {
  ExpressivityProfile p;
  auto analysis = analyse_fragment(kg.schema, table);
  p.fragment = analysis.fragment;
  p.features = std::move(analysis.features);
  p.diagnostics = std::move(analysis.diagnostics);
  p.axiom_census = axiom_census(read_tbox(kg.schema));
  p.conformance_ratio = conformance_ratio(kg);
  return p;
}

}  // namespace aap
