#pragma once

#include <array>
#include <string_view>

#include "aap/iri.hpp"

// Namespace constants for the vocabularies the library reads and writes.
namespace aap::vocab {

inline constexpr std::string_view kRdf = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
inline constexpr std::string_view kRdfs = "http://www.w3.org/2000/01/rdf-schema#";
inline constexpr std::string_view kOwl = "http://www.w3.org/2002/07/owl#";
inline constexpr std::string_view kXsd = "http://www.w3.org/2001/XMLSchema#";
inline constexpr std::string_view kSh = "http://www.w3.org/ns/shacl#";
inline constexpr std::string_view kVoid = "http://rdfs.org/ns/void#";
inline constexpr std::string_view kDcat = "http://www.w3.org/ns/dcat#";
inline constexpr std::string_view kDct = "http://purl.org/dc/terms/";
inline constexpr std::string_view kSd = "http://www.w3.org/ns/sparql-service-description#";
inline constexpr std::string_view kEntailment = "http://www.w3.org/ns/entailment/";
inline constexpr std::string_view kOwlProfile = "http://www.w3.org/ns/owl-profile/";

/// Agentic Affordance Profile vocabulary, strawman version 0.1.
inline constexpr std::string_view kAap = "urn:aap:0.1:";
inline constexpr std::string_view kAapVersion = "0.1";

/// Namespaces whose terms never count as names of a KG's signature.
inline constexpr std::array<std::string_view, 5> kBuiltinNamespaces = {kRdf, kRdfs, kOwl, kXsd, kSh};

inline Iri term(std::string_view ns, std::string_view local) {
  std::string s(ns);
  s += local;
  return Iri(s);
}

inline Iri rdf(std::string_view local) { return term(kRdf, local); }
inline Iri rdfs(std::string_view local) { return term(kRdfs, local); }
inline Iri owl(std::string_view local) { return term(kOwl, local); }
inline Iri xsd(std::string_view local) { return term(kXsd, local); }
inline Iri sh(std::string_view local) { return term(kSh, local); }
inline Iri void_(std::string_view local) { return term(kVoid, local); }
inline Iri dcat(std::string_view local) { return term(kDcat, local); }
inline Iri sd(std::string_view local) { return term(kSd, local); }
inline Iri aap(std::string_view local) { return term(kAap, local); }

inline bool is_builtin(const Iri& iri) {
  for (auto ns : kBuiltinNamespaces)
    if (iri.starts_with(ns)) return true;
  return false;
}

inline const Iri& rdf_type() {
  static const Iri v = rdf("type");
  return v;
}

}  // namespace aap::vocab
