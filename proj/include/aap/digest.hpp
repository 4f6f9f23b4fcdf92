#pragma once

#include <algorithm>
#include <string>
#include <string_view>
#include <vector>

#include <openssl/evp.h>

#include "aap/error.hpp"
#include "aap/io.hpp"
#include "aap/rdf.hpp"

namespace aap {

inline std::string sha256_hex(std::string_view data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr) != 1) throw Error("SHA-256 failed");
  static constexpr char hex[] = "0123456789abcdef";
  std::string out;
  out.reserve(len * 2);
  for (unsigned int i = 0; i < len; ++i) {
    out += hex[md[i] >> 4];
    out += hex[md[i] & 0xf];
  }
  return out;
}

/// "sha256:<hex>" of raw bytes; used for registry files.
inline std::string content_digest(std::string_view bytes) { return "sha256:" + sha256_hex(bytes); }

/// Digest of a graph that ignores blank-node labels and triple order: every
/// blank node prints as the same placeholder and the N-Triples lines are
/// sorted before hashing.
inline std::string graph_digest(const Graph& g) {
  std::vector<std::string> lines;
  lines.reserve(g.size());
  auto term = [](const Term& t) { return is_blank(t) ? std::string("_:b") : detail::ntriples_term(t); };
  for (const auto& t : g) lines.push_back(term(t.subject) + " " + term(Term{t.predicate}) + " " + term(t.object) + " .\n");
  std::sort(lines.begin(), lines.end());
  std::string all;
  for (const auto& l : lines) all += l;
  return content_digest(all);
}

}  // namespace aap
