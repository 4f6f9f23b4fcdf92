#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "aap/error.hpp"

namespace aap {

enum class DlFragment { RdfOnly, Rdfs, OwlEl, OwlQl, OwlRl, OwlDl, OwlFull };

inline constexpr std::array<DlFragment, 7> kAllFragments = {
    DlFragment::RdfOnly, DlFragment::Rdfs,  DlFragment::OwlEl,  DlFragment::OwlQl,
    DlFragment::OwlRl,   DlFragment::OwlDl, DlFragment::OwlFull};

/// Three-valued answer of the order tests.
enum class Order { True, False, Incomparable };

inline const char* to_string(DlFragment f) {
  switch (f) {
    case DlFragment::RdfOnly: return "RdfOnly";
    case DlFragment::Rdfs: return "Rdfs";
    case DlFragment::OwlEl: return "OwlEl";
    case DlFragment::OwlQl: return "OwlQl";
    case DlFragment::OwlRl: return "OwlRl";
    case DlFragment::OwlDl: return "OwlDl";
    case DlFragment::OwlFull: return "OwlFull";
  }
  return "OwlFull";
}

inline const char* to_string(Order o) {
  switch (o) {
    case Order::True: return "true";
    case Order::False: return "false";
    case Order::Incomparable: return "incomparable";
  }
  return "incomparable";
}

inline std::optional<DlFragment> parse_fragment(std::string_view s) {
  for (auto f : kAllFragments)
    if (s == to_string(f)) return f;
  return std::nullopt;
}

namespace detail {

// Height in the Hasse diagram; the three profiles share a level.
inline int fragment_level(DlFragment f) {
  switch (f) {
    case DlFragment::RdfOnly: return 0;
    case DlFragment::Rdfs: return 1;
    case DlFragment::OwlEl:
    case DlFragment::OwlQl:
    case DlFragment::OwlRl: return 2;
    case DlFragment::OwlDl: return 3;
    case DlFragment::OwlFull: return 4;
  }
  return 4;
}

}  // namespace detail

/// a ≤ b on the fragment order. `False` when b < a, `Incomparable` for
/// distinct OWL 2 profiles.
inline Order fragment_leq(DlFragment a, DlFragment b) {
  if (a == b) return Order::True;
  const int la = detail::fragment_level(a), lb = detail::fragment_level(b);
  if (la == lb) return Order::Incomparable;
  return la < lb ? Order::True : Order::False;
}

inline bool fragment_le(DlFragment a, DlFragment b) { return fragment_leq(a, b) == Order::True; }

inline DlFragment fragment_join(DlFragment a, DlFragment b) {
  if (fragment_le(a, b)) return b;
  if (fragment_le(b, a)) return a;
  return DlFragment::OwlDl;
}

inline DlFragment fragment_meet(DlFragment a, DlFragment b) {
  if (fragment_le(a, b)) return a;
  if (fragment_le(b, a)) return b;
  return DlFragment::Rdfs;
}

/// Schema feature -> minimal fragments expressing it, plus the preference
/// used when several incomparable profiles fit equally well.
struct FragmentTable {
  int version = 0;
  std::map<std::string, std::vector<DlFragment>> features;
  std::vector<DlFragment> profile_preference;

  friend bool operator==(const FragmentTable&, const FragmentTable&) = default;
};

inline FragmentTable parse_fragment_table(std::string_view text) {
  FragmentTable t;
  try {
    const auto j = nlohmann::json::parse(text);
    t.version = j.at("version").get<int>();
    if (t.version != 1) throw InvalidDocument("unsupported fragment table version " + std::to_string(t.version));
    auto frag = [](const nlohmann::json& v) {
      auto f = parse_fragment(v.get<std::string>());
      if (!f) throw InvalidDocument("unknown fragment name " + v.dump());
      return *f;
    };
    for (const auto& v : j.at("profilePreference")) t.profile_preference.push_back(frag(v));
    for (const auto& [name, list] : j.at("features").items()) {
      auto& out = t.features[name];
      for (const auto& v : list) out.push_back(frag(v));
      if (out.empty()) throw InvalidDocument("feature " + name + " has no fragment");
    }
  } catch (const nlohmann::json::exception& e) {
    throw InvalidDocument(std::string("fragment table: ") + e.what());
  }
  return t;
}

/// Same content as data/fragment-table.v1.json.
inline constexpr std::string_view kFragmentTableV1 = R"json({
  "version": 1,
  "description": "Minimal DL fragments able to express each schema feature. A feature is the axiom kind plus, for class expressions, the constructor and the position it occurs in (sub = subclass side, super = superclass side, equivalent = operand of an equivalence).",
  "profilePreference": ["OwlEl", "OwlQl", "OwlRl"],
  "features": {
    "annotation": ["RdfOnly"],
    "assertion": ["RdfOnly"],
    "shacl-shape": ["RdfOnly"],
    "class-declaration": ["Rdfs"],
    "property-declaration": ["Rdfs"],
    "subclass-of": ["Rdfs"],
    "subproperty-of": ["Rdfs"],
    "domain": ["Rdfs"],
    "range": ["Rdfs"],
    "equivalent-class-named": ["OwlEl", "OwlQl", "OwlRl"],
    "disjoint-with": ["OwlEl", "OwlQl", "OwlRl"],
    "existential-super": ["OwlEl", "OwlQl"],
    "existential-sub": ["OwlEl", "OwlRl"],
    "existential-equivalent": ["OwlEl"],
    "universal-super": ["OwlRl"],
    "universal-sub": ["OwlDl"],
    "universal-equivalent": ["OwlDl"],
    "intersection-super": ["OwlEl", "OwlQl", "OwlRl"],
    "intersection-sub": ["OwlEl", "OwlRl"],
    "intersection-equivalent": ["OwlEl"],
    "union-super": ["OwlDl"],
    "union-sub": ["OwlRl"],
    "union-equivalent": ["OwlDl"],
    "complement-super": ["OwlQl", "OwlRl"],
    "complement-sub": ["OwlDl"],
    "complement-equivalent": ["OwlDl"],
    "inverse-of": ["OwlQl", "OwlRl"],
    "transitive-property": ["OwlEl", "OwlRl"],
    "functional-property": ["OwlRl"],
    "unsupported": ["OwlFull"],
    "punning": ["OwlFull"]
  }
}
)json";

inline const FragmentTable& default_fragment_table() {
  static const FragmentTable table = parse_fragment_table(kFragmentTableV1);
  return table;
}

}  // namespace aap
