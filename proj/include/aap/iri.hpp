#pragma once

#include <algorithm>
#include <cctype>
#include <compare>
#include <functional>
#include <optional>
#include <string>
#include <string_view>

#include "aap/error.hpp"

namespace aap {

namespace detail {

inline bool is_unreserved(unsigned char c) {
  return std::isalnum(c) || c == '-' || c == '.' || c == '_' || c == '~';
}

inline int hex_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

// Length of the scheme (without ':'), or npos when the string has none.
inline std::size_t scheme_length(std::string_view s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return std::string_view::npos;
  for (std::size_t i = 1; i < s.size(); ++i) {
    const auto c = static_cast<unsigned char>(s[i]);
    if (c == ':') return i;
    if (!std::isalnum(c) && c != '+' && c != '-' && c != '.') return std::string_view::npos;
  }
  return std::string_view::npos;
}

inline std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

}  // namespace detail

/// True when `s` has a scheme followed by a non-empty hier-part.
inline bool is_absolute_iri(std::string_view s) {
  const auto n = detail::scheme_length(s);
  return n != std::string_view::npos && n + 1 < s.size();
}

/// Percent-encoding normalization plus scheme/host lowercasing. Nothing else:
/// no path normalization and no case folding of other components.
inline std::string normalize_iri(std::string_view raw) {
  std::string pct;
  pct.reserve(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (raw[i] == '%' && i + 2 < raw.size()) {
      const int hi = detail::hex_value(raw[i + 1]);
      const int lo = detail::hex_value(raw[i + 2]);
      if (hi >= 0 && lo >= 0) {
        const auto decoded = static_cast<unsigned char>(hi * 16 + lo);
        if (detail::is_unreserved(decoded)) {
          pct.push_back(static_cast<char>(decoded));
        } else {
          pct.push_back('%');
          pct.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(raw[i + 1]))));
          pct.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(raw[i + 2]))));
        }
        i += 2;
        continue;
      }
    }
    pct.push_back(raw[i]);
  }

  const auto scheme_len = detail::scheme_length(pct);
  if (scheme_len == std::string::npos) return pct;
  std::string out = detail::lower(std::string_view(pct).substr(0, scheme_len));
  out.push_back(':');
  std::string_view rest = std::string_view(pct).substr(scheme_len + 1);
  if (rest.substr(0, 2) == "//") {
    rest.remove_prefix(2);
    const auto end = rest.find_first_of("/?#");
    std::string_view authority = rest.substr(0, end);
    const auto at = authority.rfind('@');
    out += "//";
    if (at != std::string_view::npos) {
      out += authority.substr(0, at + 1);
      authority.remove_prefix(at + 1);
    }
    out += detail::lower(authority);
    if (end != std::string_view::npos) out += rest.substr(end);
  } else {
    out += rest;
  }
  return out;
}

namespace detail {

inline std::string remove_dot_segments(std::string_view path) {
  std::string input(path);
  std::string output;
  while (!input.empty()) {
    if (input.rfind("../", 0) == 0) {
      input.erase(0, 3);
    } else if (input.rfind("./", 0) == 0) {
      input.erase(0, 2);
    } else if (input.rfind("/./", 0) == 0) {
      input.erase(0, 2);
    } else if (input == "/.") {
      input = "/";
    } else if (input.rfind("/../", 0) == 0 || input == "/..") {
      input = input == "/.." ? "/" : input.substr(3);
      const auto slash = output.rfind('/');
      output.erase(slash == std::string::npos ? 0 : slash);
    } else if (input == "." || input == "..") {
      input.clear();
    } else {
      const auto next = input.find('/', input[0] == '/' ? 1 : 0);
      output += input.substr(0, next);
      input.erase(0, next == std::string::npos ? input.size() : next);
    }
  }
  return output;
}

struct IriParts {
  std::string scheme;
  std::optional<std::string> authority;
  std::string path;
  std::optional<std::string> query;
  std::optional<std::string> fragment;
};

inline IriParts split_iri(std::string_view s) {
  IriParts p;
  const auto n = scheme_length(s);
  if (n != std::string_view::npos) {
    p.scheme = std::string(s.substr(0, n));
    s.remove_prefix(n + 1);
  }
  if (const auto hash = s.find('#'); hash != std::string_view::npos) {
    p.fragment = std::string(s.substr(hash + 1));
    s = s.substr(0, hash);
  }
  if (const auto q = s.find('?'); q != std::string_view::npos) {
    p.query = std::string(s.substr(q + 1));
    s = s.substr(0, q);
  }
  if (s.substr(0, 2) == "//") {
    s.remove_prefix(2);
    const auto slash = s.find('/');
    p.authority = std::string(s.substr(0, slash));
    s = slash == std::string_view::npos ? std::string_view{} : s.substr(slash);
  }
  p.path = std::string(s);
  return p;
}

}  // namespace detail

/// Reference resolution against an absolute base IRI.
inline std::string resolve_iri(std::string_view base, std::string_view reference) {
  if (is_absolute_iri(reference)) return std::string(reference);
  if (!is_absolute_iri(base)) throw RelativeIriError(std::string(reference));
  const auto b = detail::split_iri(base);
  const auto r = detail::split_iri(reference);
  detail::IriParts t;
  t.scheme = b.scheme;
  if (r.authority) {
    t.authority = r.authority;
    t.path = detail::remove_dot_segments(r.path);
    t.query = r.query;
  } else {
    if (r.path.empty()) {
      t.path = b.path;
      t.query = r.query ? r.query : b.query;
    } else {
      if (r.path[0] == '/') {
        t.path = detail::remove_dot_segments(r.path);
      } else {
        std::string merged;
        if (b.authority && b.path.empty()) {
          merged = "/" + r.path;
        } else {
          const auto slash = b.path.rfind('/');
          merged = (slash == std::string::npos ? std::string{} : b.path.substr(0, slash + 1)) + r.path;
        }
        t.path = detail::remove_dot_segments(merged);
      }
      t.query = r.query;
    }
    t.authority = b.authority;
  }
  t.fragment = r.fragment;

  std::string out = t.scheme + ":";
  if (t.authority) out += "//" + *t.authority;
  out += t.path;
  if (t.query) out += "?" + *t.query;
  if (t.fragment) out += "#" + *t.fragment;
  return out;
}

/// An absolute, normalized IRI. Equality is exact string equality of the
/// normalized form.
class Iri {
public:
  Iri() = default;

  explicit Iri(std::string_view value) : value_(normalize_iri(value)) {
    if (!is_absolute_iri(value_)) throw RelativeIriError(std::string(value));
  }

  const std::string& str() const noexcept { return value_; }
  bool empty() const noexcept { return value_.empty(); }

  /// Text after the last '#' or '/', used for display and id suffix lookups.
  std::string local_name() const {
    const auto pos = value_.find_last_of("#/:");
    return pos == std::string::npos ? value_ : value_.substr(pos + 1);
  }

  bool starts_with(std::string_view prefix) const { return value_.rfind(prefix, 0) == 0; }

  friend bool operator==(const Iri&, const Iri&) = default;
  friend auto operator<=>(const Iri&, const Iri&) = default;

private:
  std::string value_;
};

}  // namespace aap

template <>
struct std::hash<aap::Iri> {
  std::size_t operator()(const aap::Iri& iri) const noexcept { return std::hash<std::string>{}(iri.str()); }
};
