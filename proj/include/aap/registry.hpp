#pragma once

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "aap/digest.hpp"
#include "aap/error.hpp"
#include "aap/io.hpp"
#include "aap/matcher.hpp"
#include "aap/profile_document.hpp"

namespace aap {

struct RegistryEntry {
  std::string id;  // kg id or mediator id
  std::string path;  // relative to the registry directory
  std::string digest;
};

/// index.json:
/// {"version":1, "profiles":[{"kg_id","path","digest"}], "mediators":[{"id","path","digest"}]}
struct RegistryIndex {
  std::vector<RegistryEntry> profiles;
  std::vector<RegistryEntry> mediators;
};

struct Registry {
  RegistryIndex index;
  std::vector<AapProfile> profiles;
  std::vector<MediatorDescriptor> mediators;
  std::vector<std::string> warnings;

  const AapProfile* find(std::string_view id) const {
    const AapProfile* hit = nullptr;
    for (const auto& p : profiles)
      if (p.kg_id.str() == id) return &p;
    for (const auto& p : profiles) {
      const auto& s = p.kg_id.str();
      if (s.size() <= id.size() || s.compare(s.size() - id.size(), id.size(), id) != 0) continue;
      const char before = s[s.size() - id.size() - 1];
      if (before != '/' && before != '#' && before != ':') continue;
      if (hit) throw Error("ambiguous KG id: " + std::string(id));
      hit = &p;
    }
    return hit;
  }
};

inline constexpr std::string_view kRegistryIndexFile = "index.json";

inline RegistryIndex parse_registry_index(std::string_view text) {
  RegistryIndex idx;
  try {
    const auto j = nlohmann::json::parse(text);
    if (j.value("version", 0) != 1) throw InvalidDocument("registry index version must be 1");
    if (j.contains("profiles"))
      for (const auto& e : j.at("profiles"))
        idx.profiles.push_back({e.at("kg_id").get<std::string>(), e.at("path").get<std::string>(),
                                e.at("digest").get<std::string>()});
    if (j.contains("mediators"))
      for (const auto& e : j.at("mediators"))
        idx.mediators.push_back(
            {e.at("id").get<std::string>(), e.at("path").get<std::string>(), e.at("digest").get<std::string>()});
  } catch (const nlohmann::json::exception& e) {
    throw InvalidDocument(std::string("malformed registry index: ") + e.what());
  }
  return idx;
}

inline std::string serialize_registry_index(const RegistryIndex& idx) {
  nlohmann::ordered_json j;
  j["version"] = 1;
  j["profiles"] = nlohmann::ordered_json::array();
  j["mediators"] = nlohmann::ordered_json::array();
  for (const auto& e : idx.profiles) j["profiles"].push_back({{"kg_id", e.id}, {"path", e.path}, {"digest", e.digest}});
  for (const auto& e : idx.mediators) j["mediators"].push_back({{"id", e.id}, {"path", e.path}, {"digest", e.digest}});
  return j.dump(2) + "\n";
}

inline std::vector<MediatorDescriptor> read_mediators(const Graph& g) {
  std::vector<MediatorDescriptor> out;
  for (const auto& s : g.subjects(vocab::rdf_type(), Term{vocab::aap("Mediator")})) {
    const auto* id = as_iri(s);
    if (!id) throw InvalidDocument("mediator must be named by an IRI");
    MediatorDescriptor m;
    m.id = *id;
    for (const auto& o : g.objects(s, vocab::aap("inputName")))
      if (const auto* i = as_iri(o)) m.input_signature.insert(*i);
    for (const auto& o : g.objects(s, vocab::aap("outputName")))
      if (const auto* i = as_iri(o)) m.output_signature.insert(*i);
    if (auto c = g.object(s, vocab::aap("preservationClaim")))
      if (const auto* l = as_literal(*c)) m.preservation_claim = l->lexical;
    if (m.input_signature.empty() || m.output_signature.empty())
      throw InvalidDocument("mediator <" + id->str() + "> needs non-empty input and output signatures");
    out.push_back(std::move(m));
  }
  return out;
}

inline Graph mediator_to_graph(const MediatorDescriptor& m) {
  Graph g;
  const Term s{m.id};
  g.insert(s, vocab::rdf_type(), Term{vocab::aap("Mediator")});
  for (const auto& i : m.input_signature) g.insert(s, vocab::aap("inputName"), Term{i});
  for (const auto& o : m.output_signature) g.insert(s, vocab::aap("outputName"), Term{o});
  if (!m.preservation_claim.empty())
    g.insert(s, vocab::aap("preservationClaim"), Term{make_literal(m.preservation_claim)});
  return g;
}

/// Loads every indexed profile and mediator. A digest mismatch or a repeated
/// KG id is fatal; a file that does not parse is skipped with a warning.
inline Registry load_registry(const std::filesystem::path& dir) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(dir)) throw Error("registry directory does not exist: " + dir.string());
  Registry reg;
  const auto index_path = dir / kRegistryIndexFile;
  if (!fs::exists(index_path)) return reg;
  reg.index = parse_registry_index(read_file(index_path.string()));

  std::set<std::string> ids;
  for (const auto& e : reg.index.profiles)
    if (!ids.insert(e.id).second) throw DuplicateKgId(e.id);

  auto bytes_of = [&](const RegistryEntry& e) -> std::optional<std::string> {
    const auto path = (dir / e.path).string();
    std::string bytes;
    try {
      bytes = read_file(path);
    } catch (const Error& err) {
      reg.warnings.push_back(std::string(err.what()) + "; skipped");
      return std::nullopt;
    }
    const auto actual = content_digest(bytes);
    if (actual != e.digest) throw DigestMismatch(path, e.digest, actual);
    return bytes;
  };

  std::set<Iri> loaded;
  for (const auto& e : reg.index.profiles) {
    auto bytes = bytes_of(e);
    if (!bytes) continue;
    try {
      auto doc = read_profile_document(parse_graph(*bytes, RdfFormat::Turtle));
      if (doc.profile.kg_id.str() != e.id)
        throw InvalidDocument("profile describes <" + doc.profile.kg_id.str() + "> but is indexed as " + e.id);
      if (!loaded.insert(doc.profile.kg_id).second) throw DuplicateKgId(e.id);
      reg.profiles.push_back(std::move(doc.profile));
    } catch (const DuplicateKgId&) {
      throw;
    } catch (const Error& err) {
      reg.warnings.push_back(e.path + ": " + err.what() + "; skipped");
    }
  }
  for (const auto& e : reg.index.mediators) {
    auto bytes = bytes_of(e);
    if (!bytes) continue;
    try {
      for (auto& m : read_mediators(parse_graph(*bytes, RdfFormat::Turtle))) reg.mediators.push_back(std::move(m));
    } catch (const Error& err) {
      reg.warnings.push_back(e.path + ": " + err.what() + "; skipped");
    }
  }
  return reg;
}

enum class PublishKind { Profile, Mediator };

/// Copies a profile or mediator document into the registry and records it in
/// the index, replacing an entry with the same id.
inline RegistryEntry publish(const std::filesystem::path& dir, const std::filesystem::path& file, PublishKind kind) {
  namespace fs = std::filesystem;
  fs::create_directories(dir);
  const auto bytes = read_file(file.string());
  const auto g = parse_graph(bytes, RdfFormat::Turtle);
  RegistryEntry entry;
  entry.path = file.filename().string();
  entry.digest = content_digest(bytes);
  if (kind == PublishKind::Profile) {
    entry.id = read_profile_document(g).profile.kg_id.str();
  } else {
    auto ms = read_mediators(g);
    if (ms.size() != 1) throw InvalidDocument("a mediator file must describe exactly one mediator");
    entry.id = ms.front().id.str();
  }

  RegistryIndex idx;
  const auto index_path = dir / kRegistryIndexFile;
  if (fs::exists(index_path)) idx = parse_registry_index(read_file(index_path.string()));
  auto& list = kind == PublishKind::Profile ? idx.profiles : idx.mediators;
  for (const auto& e : list)
    if (e.path == entry.path && e.id != entry.id)
      throw InvalidDocument("registry already holds " + e.path + " for " + e.id);
  std::erase_if(list, [&](const RegistryEntry& e) { return e.id == entry.id; });
  list.push_back(entry);
  std::sort(list.begin(), list.end(), [](const auto& a, const auto& b) { return a.id < b.id; });

  if (fs::absolute(file.parent_path()) != fs::absolute(dir)) {
    std::ofstream out(dir / entry.path, std::ios::binary);
    out << bytes;
    if (!out) throw Error("cannot write " + (dir / entry.path).string());
  }
  std::ofstream out(index_path, std::ios::binary);
  out << serialize_registry_index(idx);
  if (!out) throw Error("cannot write " + index_path.string());
  return entry;
}

}  // namespace aap
