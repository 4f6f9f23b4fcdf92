#pragma once

#include <compare>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "aap/iri.hpp"
#include "aap/vocab.hpp"

namespace aap {

struct BlankNode {
  std::string label;
  friend bool operator==(const BlankNode&, const BlankNode&) = default;
  friend auto operator<=>(const BlankNode&, const BlankNode&) = default;
};

struct Literal {
  std::string lexical;
  Iri datatype;
  std::optional<std::string> language;

  friend bool operator==(const Literal&, const Literal&) = default;
  friend auto operator<=>(const Literal&, const Literal&) = default;
};

inline Literal make_literal(std::string lexical, std::optional<std::string> language = std::nullopt) {
  if (language) return Literal{std::move(lexical), vocab::rdf("langString"), std::move(language)};
  return Literal{std::move(lexical), vocab::xsd("string"), std::nullopt};
}

inline Literal make_typed_literal(std::string lexical, Iri datatype) {
  return Literal{std::move(lexical), std::move(datatype), std::nullopt};
}

/// IRI, blank node or literal. Variant order fixes the term ordering
/// (IRIs < blank nodes < literals).
using Term = std::variant<Iri, BlankNode, Literal>;

inline bool is_iri(const Term& t) { return std::holds_alternative<Iri>(t); }
inline bool is_blank(const Term& t) { return std::holds_alternative<BlankNode>(t); }
inline bool is_literal(const Term& t) { return std::holds_alternative<Literal>(t); }
inline const Iri* as_iri(const Term& t) { return std::get_if<Iri>(&t); }
inline const BlankNode* as_blank(const Term& t) { return std::get_if<BlankNode>(&t); }
inline const Literal* as_literal(const Term& t) { return std::get_if<Literal>(&t); }

struct Triple {
  Term subject;  // Iri or BlankNode
  Iri predicate;
  Term object;

  friend bool operator==(const Triple&, const Triple&) = default;
  friend auto operator<=>(const Triple&, const Triple&) = default;
};

/// A set of triples. Immutable once built by a parser or a builder; safe to
/// share between readers.
class Graph {
public:
  using const_iterator = std::set<Triple>::const_iterator;

  Graph() = default;
  explicit Graph(std::optional<Iri> label) : label_(std::move(label)) {}

  /// Returns false when the triple was already present.
  bool insert(Triple t) {
    if (is_literal(t.subject)) throw Error("literal in subject position");
    return triples_.insert(std::move(t)).second;
  }
  bool insert(Term s, Iri p, Term o) { return insert(Triple{std::move(s), std::move(p), std::move(o)}); }

  void merge(const Graph& other) {
    for (const auto& t : other) triples_.insert(t);
  }

  bool contains(const Triple& t) const { return triples_.count(t) != 0; }
  std::size_t size() const noexcept { return triples_.size(); }
  bool empty() const noexcept { return triples_.empty(); }
  const_iterator begin() const { return triples_.begin(); }
  const_iterator end() const { return triples_.end(); }

  const std::optional<Iri>& label() const noexcept { return label_; }
  void set_label(std::optional<Iri> label) { label_ = std::move(label); }

  /// Objects of (s, p, ?) in term order.
  std::vector<Term> objects(const Term& s, const Iri& p) const {
    std::vector<Term> out;
    const Triple lo{s, p, Term{Iri{}}};
    for (auto it = triples_.lower_bound(lo); it != triples_.end() && it->subject == s && it->predicate == p; ++it)
      out.push_back(it->object);
    return out;
  }

  std::optional<Term> object(const Term& s, const Iri& p) const {
    const Triple lo{s, p, Term{Iri{}}};
    auto it = triples_.lower_bound(lo);
    if (it != triples_.end() && it->subject == s && it->predicate == p) return it->object;
    return std::nullopt;
  }

  /// All triples with subject s.
  std::vector<Triple> about(const Term& s) const {
    std::vector<Triple> out;
    const Triple lo{s, Iri{}, Term{Iri{}}};
    for (auto it = triples_.lower_bound(lo); it != triples_.end() && it->subject == s; ++it) out.push_back(*it);
    return out;
  }

  std::vector<Term> subjects(const Iri& p, const Term& o) const {
    std::vector<Term> out;
    for (const auto& t : triples_)
      if (t.predicate == p && t.object == o) out.push_back(t.subject);
    return out;
  }

  std::vector<Triple> with_predicate(const Iri& p) const {
    std::vector<Triple> out;
    for (const auto& t : triples_)
      if (t.predicate == p) out.push_back(t);
    return out;
  }

  bool has(const Term& s, const Iri& p, const Term& o) const { return contains(Triple{s, p, o}); }

private:
  std::set<Triple> triples_;
  std::optional<Iri> label_;
};

/// Reads an RDF collection starting at `head`. Returns nullopt when the
/// chain is malformed (missing rdf:first/rdf:rest, or cyclic).
inline std::optional<std::vector<Term>> read_list(const Graph& g, const Term& head,
                                                  std::vector<Term>* list_nodes = nullptr) {
  static const Iri nil = vocab::rdf("nil");
  static const Iri first = vocab::rdf("first");
  static const Iri rest = vocab::rdf("rest");
  std::vector<Term> items;
  std::set<Term> seen;
  Term node = head;
  while (!(is_iri(node) && *as_iri(node) == nil)) {
    if (!seen.insert(node).second) return std::nullopt;
    auto f = g.object(node, first);
    auto r = g.object(node, rest);
    if (!f || !r) return std::nullopt;
    if (list_nodes) list_nodes->push_back(node);
    items.push_back(*f);
    node = *r;
  }
  return items;
}

}  // namespace aap
