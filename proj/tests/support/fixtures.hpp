#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "aap/aap.hpp"

#ifndef AAP_FIXTURE_DIR
#error "AAP_FIXTURE_DIR must point at the fixture bundle"
#endif

namespace aap::test {

inline std::string fixture_path(std::string_view rel) { return std::string(AAP_FIXTURE_DIR) + "/" + std::string(rel); }

inline Graph load_ttl(std::string_view rel) { return load_graph(fixture_path(rel), RdfFormat::Turtle); }

inline Iri conf(std::string_view local) { return Iri("http://example.org/conference#" + std::string(local)); }
inline Iri task_iri(std::string_view local) { return Iri("http://example.org/task/" + std::string(local)); }
inline Iri kg_iri(int n) { return Iri("http://example.org/kg/KG" + std::to_string(n)); }

inline nlohmann::json expected(std::string_view name) {
  return nlohmann::json::parse(read_file(fixture_path("expected/" + std::string(name))));
}

inline NameSet conf_names(std::initializer_list<std::string_view> locals) {
  NameSet out;
  for (auto l : locals) out.insert(conf(l));
  return out;
}

inline NameSet conf_names(const nlohmann::json& locals) {
  NameSet out;
  for (const auto& l : locals) out.insert(conf(l.get<std::string>()));
  return out;
}

inline KgDescriptor load_kg(int n) {
  const std::string dir = "kg" + std::to_string(n) + "/";
  KgDescriptor kg;
  kg.id = kg_iri(n);
  kg.schema = load_ttl(dir + "schema.ttl");
  kg.data = load_ttl(dir + "data.ttl");
  kg.metadata = load_ttl(dir + "metadata.ttl");
  return kg;
}

inline const TaskCatalogue& catalogue() {
  static const TaskCatalogue c = load_task_catalogue(fixture_path("tasks.json"));
  return c;
}

inline const TaskType& task(std::string_view local) { return catalogue().find(local); }

inline const Graph& reference() {
  static const Graph g = load_ttl("reference/conference.ttl");
  return g;
}

/// KG₁ is profiled without the reference ontology (it does not deploy it);
/// KG₂ and KG₃ with it. The fixture registry is built the same way.
inline const Graph* reference_for(int n) { return n == 1 ? nullptr : &reference(); }

inline const std::vector<AapProfile>& fixture_profiles() {
  static const std::vector<AapProfile> ps = [] {
    std::vector<AapProfile> out;
    for (int n = 1; n <= 3; ++n) out.push_back(compute_profile(load_kg(n), catalogue(), reference_for(n)));
    return out;
  }();
  return ps;
}

inline const AapProfile& profile(int n) { return fixture_profiles().at(static_cast<std::size_t>(n - 1)); }

inline std::vector<MediatorDescriptor> fixture_mediators() {
  std::vector<MediatorDescriptor> out;
  for (auto f : {"mediators/conference-alignment.ttl", "mediators/music-bridge.ttl"})
    for (auto& m : read_mediators(load_ttl(f))) out.push_back(std::move(m));
  return out;
}

}  // namespace aap::test
