#pragma once

#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "aap/error.hpp"
#include "aap/grounding.hpp"
#include "aap/io.hpp"
#include "aap/trust_scope.hpp"

namespace aap {

struct TaskType {
  Iri id;
  TaskSignature signature;
  EpistemicRequirement requirement;
  std::string description;
};

struct TaskCatalogue {
  std::vector<TaskType> tasks;

  /// Lookup by full IRI or by a suffix that matches exactly one task id.
  const TaskType& find(std::string_view id) const {
    const TaskType* hit = nullptr;
    for (const auto& t : tasks)
      if (t.id.str() == id) return t;
    for (const auto& t : tasks) {
      const auto& s = t.id.str();
      if (s.size() > id.size() && s.compare(s.size() - id.size(), id.size(), id) == 0) {
        const char before = s[s.size() - id.size() - 1];
        if (before != '/' && before != '#' && before != ':') continue;
        if (hit) throw UnknownTask(std::string(id) + " (ambiguous)");
        hit = &t;
      }
    }
    if (!hit) throw UnknownTask(std::string(id));
    return *hit;
  }
};

namespace detail {

inline Iri expand_curie(const std::string& text, const std::map<std::string, std::string>& prefixes) {
  const auto colon = text.find(':');
  if (colon != std::string::npos) {
    auto it = prefixes.find(text.substr(0, colon));
    if (it != prefixes.end()) return Iri(it->second + text.substr(colon + 1));
  }
  try {
    return Iri(text);
  } catch (const RelativeIriError&) {
    throw InvalidCatalogue("not an absolute IRI or known CURIE: " + text);
  }
}

}  // namespace detail

/// Reads the JSON task catalogue:
/// {"version":1, "prefixes":{..}, "tasks":[{"id","description","signature":[{"name","kind"}],
///  "minRegime","closedPredicatesNeeded":[..],"minConsistency"}]}
inline TaskCatalogue parse_task_catalogue(std::string_view text) {
  TaskCatalogue cat;
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidCatalogue(std::string("task catalogue is not valid JSON: ") + e.what());
  }
  try {
    if (j.value("version", 0) != 1) throw InvalidCatalogue("task catalogue version must be 1");
    std::map<std::string, std::string> prefixes;
    if (j.contains("prefixes"))
      for (const auto& [k, v] : j.at("prefixes").items()) prefixes[k] = v.get<std::string>();

    std::set<Iri> seen;
    for (const auto& jt : j.at("tasks")) {
      TaskType t;
      t.id = detail::expand_curie(jt.at("id").get<std::string>(), prefixes);
      if (!seen.insert(t.id).second) throw InvalidCatalogue("duplicate task id " + t.id.str());
      t.description = jt.value("description", "");
      for (const auto& e : jt.at("signature")) {
        const auto kind = e.at("kind").get<std::string>();
        if (kind != "concept" && kind != "role") throw InvalidCatalogue("kind must be concept or role: " + kind);
        t.signature.entries.insert({detail::expand_curie(e.at("name").get<std::string>(), prefixes),
                                    kind == "concept" ? NameKind::Concept : NameKind::Role});
      }
      if (t.signature.entries.empty()) throw InvalidCatalogue("task " + t.id.str() + " has an empty signature");

      const auto regime = jt.value("minRegime", "Simple");
      auto r = parse_regime(regime);
      if (!r) throw InvalidCatalogue("unknown regime " + regime);
      t.requirement.min_regime = *r;
      const auto consistency = jt.value("minConsistency", "Uncertified");
      auto c = parse_consistency(consistency);
      if (!c) throw InvalidCatalogue("unknown consistency status " + consistency);
      t.requirement.min_consistency = *c;

      const auto names = t.signature.names();
      if (jt.contains("closedPredicatesNeeded"))
        for (const auto& p : jt.at("closedPredicatesNeeded")) {
          auto iri = detail::expand_curie(p.get<std::string>(), prefixes);
          if (!names.count(iri))
            throw InvalidCatalogue("closed predicate " + iri.str() + " is not in the signature of " + t.id.str());
          t.requirement.closed_predicates_needed.insert(iri);
        }
      cat.tasks.push_back(std::move(t));
    }
  } catch (const nlohmann::json::exception& e) {
    throw InvalidCatalogue(std::string("malformed task catalogue: ") + e.what());
  }
  if (cat.tasks.empty()) throw EmptyCatalogue();
  return cat;
}

inline TaskCatalogue load_task_catalogue(const std::string& path) { return parse_task_catalogue(read_file(path)); }

}  // namespace aap
