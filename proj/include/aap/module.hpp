#pragma once

#include <set>
#include <vector>

#include "aap/rdf.hpp"
#include "aap/signature.hpp"
#include "aap/tbox.hpp"

namespace aap {

namespace detail {

inline bool is_top(const ClassExpr& e, const NameSet& sigma);

/// C is ⊥-equivalent once every name outside Σ is read as the empty set.
inline bool is_bot(const ClassExpr& e, const NameSet& sigma) {
  using K = ClassExpr::Kind;
  switch (e.kind) {
    case K::Named: return !sigma.count(e.name);
    case K::Nothing: return true;
    case K::Thing: return false;
    case K::Some: return !sigma.count(e.property) || is_bot(e.operands.at(0), sigma);
    case K::All: return false;
    case K::And:
      for (const auto& op : e.operands)
        if (is_bot(op, sigma)) return true;
      return false;
    case K::Or:
      for (const auto& op : e.operands)
        if (!is_bot(op, sigma)) return false;
      return true;
    case K::Not: return is_top(e.operands.at(0), sigma);
    case K::Other: return false;
  }
  return false;
}

inline bool is_top(const ClassExpr& e, const NameSet& sigma) {
  using K = ClassExpr::Kind;
  switch (e.kind) {
    case K::Thing: return true;
    case K::Named:
    case K::Nothing:
    case K::Some: return false;
    case K::All: return !sigma.count(e.property) || is_top(e.operands.at(0), sigma);
    case K::And:
      for (const auto& op : e.operands)
        if (!is_top(op, sigma)) return false;
      return true;
    case K::Or:
      for (const auto& op : e.operands)
        if (is_top(op, sigma)) return true;
      return false;
    case K::Not: return is_bot(e.operands.at(0), sigma);
    case K::Other: return false;
  }
  return false;
}

}  // namespace detail

/// Syntactic ⊥-locality of one logical axiom w.r.t. Σ. Declarations,
/// annotations, assertions and shapes are not logical axioms here.
inline bool is_bot_local(const Axiom& a, const NameSet& sigma) {
  using detail::is_bot;
  using detail::is_top;
  const auto out = [&](const Iri& p) { return !sigma.count(p); };
  switch (a.kind) {
    case AxiomKind::SubClassOf: return is_bot(a.lhs, sigma) || is_top(a.rhs, sigma);
    case AxiomKind::EquivalentClasses:
      return (is_bot(a.lhs, sigma) && is_bot(a.rhs, sigma)) || (is_top(a.lhs, sigma) && is_top(a.rhs, sigma));
    case AxiomKind::DisjointClasses: return is_bot(a.lhs, sigma) || is_bot(a.rhs, sigma);
    case AxiomKind::SubPropertyOf: return out(a.property);
    case AxiomKind::InverseProperties: return out(a.property) && out(a.other);
    case AxiomKind::TransitiveProperty:
    case AxiomKind::FunctionalProperty: return out(a.property);
    case AxiomKind::Domain:
    case AxiomKind::Range: return out(a.property) || is_top(a.rhs, sigma);
    case AxiomKind::Unsupported: return false;
    default: return true;
  }
}

namespace detail {

inline bool is_logical(AxiomKind k) {
  switch (k) {
    case AxiomKind::ClassDeclaration:
    case AxiomKind::PropertyDeclaration:
    case AxiomKind::Annotation:
    case AxiomKind::Assertion:
    case AxiomKind::ShaclShape: return false;
    default: return true;
  }
}

}  // namespace detail

/// ⊥-locality module of `schema` for `seed`: the fixpoint of adding every
/// non-local axiom and its names to Σ, plus declarations, annotations and
/// assertions about the final Σ. Always a subgraph of `schema`.
inline Graph extract_module(const Graph& schema, const NameSet& seed) {
  const auto tbox = read_tbox(schema);
  NameSet sigma = seed;
  std::vector<bool> in(tbox.axioms.size(), false);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < tbox.axioms.size(); ++i) {
      const auto& a = tbox.axioms[i];
      if (in[i] || !detail::is_logical(a.kind) || is_bot_local(a, sigma)) continue;
      in[i] = true;
      changed = true;
      NameSet concepts, roles;
      a.collect(concepts, roles);
      if (a.kind == AxiomKind::Unsupported)
        for (const auto& t : a.triples) {
          detail::add_name(concepts, t.subject);
          detail::add_name(concepts, t.object);
        }
      sigma.insert(concepts.begin(), concepts.end());
      sigma.insert(roles.begin(), roles.end());
    }
  }

  // A seed name the schema mentions only in local axioms keeps the first of
  // them, so the module signature still contains it. Adding local axioms
  // does not change the entailments over the seed.
  std::vector<bool> witness(tbox.axioms.size(), false);
  NameSet present;
  for (std::size_t i = 0; i < tbox.axioms.size(); ++i)
    if (in[i]) {
      NameSet c, r;
      tbox.axioms[i].collect(c, r);
      present.insert(c.begin(), c.end());
      present.insert(r.begin(), r.end());
    }
  for (std::size_t i = 0; i < tbox.axioms.size(); ++i) {
    const auto& a = tbox.axioms[i];
    if (in[i] || !detail::is_logical(a.kind)) continue;
    NameSet c, r;
    a.collect(c, r);
    c.insert(r.begin(), r.end());
    for (const auto& n : c)
      if (seed.count(n) && !present.count(n)) {
        witness[i] = true;
        present.insert(n);
      }
  }

  Graph module;
  for (std::size_t i = 0; i < tbox.axioms.size(); ++i) {
    const auto& a = tbox.axioms[i];
    bool keep = in[i] || witness[i];
    if (!detail::is_logical(a.kind) && a.kind != AxiomKind::ShaclShape)
      if (const auto* s = as_iri(a.subject)) keep = sigma.count(*s) != 0;
    if (keep)
      for (const auto& t : a.triples) module.insert(t);
  }
  return module;
}

}  // namespace aap
