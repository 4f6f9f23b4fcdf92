#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <istream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "aap/error.hpp"
#include "aap/rdf.hpp"

namespace aap {

enum class RdfFormat { NTriples, Turtle };

inline RdfFormat parse_format_name(std::string_view name) {
  if (name == "ntriples" || name == "nt") return RdfFormat::NTriples;
  if (name == "turtle" || name == "ttl" || name == "turtle-subset") return RdfFormat::Turtle;
  throw Error("unknown RDF format: " + std::string(name));
}

namespace detail {

inline void append_utf8(std::string& out, std::uint32_t cp) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

inline std::atomic<std::uint64_t>& parse_counter() {
  static std::atomic<std::uint64_t> counter{0};
  return counter;
}

// Recursive-descent reader for N-Triples and the supported Turtle subset.
// In N-Triples mode every Turtle-only construct is a syntax error.
class RdfReader {
public:
  RdfReader(std::string_view text, RdfFormat format)
      : text_(text), turtle_(format == RdfFormat::Turtle), scope_("p" + std::to_string(parse_counter()++) + "_") {}

  Graph parse() {
    skip_ws();
    while (!at_end()) {
      statement();
      skip_ws();
    }
    return std::move(graph_);
  }

private:
  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
  bool turtle_;
  std::string scope_;
  std::map<std::string, std::string> prefixes_;
  std::optional<std::string> base_;
  std::size_t anon_ = 0;
  Graph graph_;

  [[noreturn]] void fail(const std::string& msg) const { throw SyntaxError(line_, col_, msg); }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek(std::size_t ahead = 0) const { return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0'; }

  char get() {
    if (at_end()) fail("unexpected end of input");
    const char c = text_[pos_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }

  void skip_ws() {
    while (!at_end()) {
      const char c = peek();
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        get();
      } else if (c == '#') {
        while (!at_end() && peek() != '\n') get();
      } else {
        break;
      }
    }
  }

  void expect(char c) {
    skip_ws();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    get();
  }

  bool starts_with_keyword(std::string_view kw, bool case_insensitive) const {
    if (text_.size() - pos_ < kw.size()) return false;
    for (std::size_t i = 0; i < kw.size(); ++i) {
      char a = text_[pos_ + i];
      char b = kw[i];
      if (case_insensitive) {
        a = static_cast<char>(std::toupper(static_cast<unsigned char>(a)));
        b = static_cast<char>(std::toupper(static_cast<unsigned char>(b)));
      }
      if (a != b) return false;
    }
    const char after = pos_ + kw.size() < text_.size() ? text_[pos_ + kw.size()] : ' ';
    return after == ' ' || after == '\t' || after == '\n' || after == '\r' || after == '<' || after == '#';
  }

  void statement() {
    if (peek() == '@' || starts_with_keyword("PREFIX", true) || starts_with_keyword("BASE", true)) {
      if (!turtle_) fail("directives are not allowed in N-Triples");
      directive();
      return;
    }
    Term subject = read_subject();
    skip_ws();
    if (turtle_ && peek() == '.' && is_blank(subject) && last_was_property_list_) {
      get();
      return;
    }
    predicate_object_list(subject);
    expect('.');
  }

  bool last_was_property_list_ = false;

  void directive() {
    bool sparql_style = peek() != '@';
    if (!sparql_style) get();
    std::string word;
    while (!at_end() && std::isalpha(static_cast<unsigned char>(peek()))) word.push_back(get());
    for (auto& ch : word) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    skip_ws();
    if (word == "prefix") {
      std::string name;
      while (!at_end() && peek() != ':') {
        const char c = peek();
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '.'))
          fail("invalid prefix name");
        name.push_back(get());
      }
      expect(':');
      skip_ws();
      prefixes_[name] = read_iriref();
    } else if (word == "base") {
      skip_ws();
      base_ = read_iriref();
    } else {
      fail("unknown directive '" + word + "'");
    }
    if (!sparql_style) expect('.');
  }

  // Returns the resolved, absolute IRI text.
  std::string read_iriref() {
    if (peek() != '<') fail("expected IRI");
    get();
    std::string raw;
    while (true) {
      if (at_end()) fail("unterminated IRI");
      const char c = get();
      if (c == '>') break;
      if (c == '\\') {
        const char e = get();
        if (e == 'u' || e == 'U') {
          raw_unicode(raw, e == 'u' ? 4 : 8);
        } else {
          fail("invalid escape in IRI");
        }
        continue;
      }
      if (static_cast<unsigned char>(c) <= 0x20 || c == '<' || c == '"' || c == '{' || c == '}' || c == '|' ||
          c == '^' || c == '`')
        fail("invalid character in IRI");
      raw.push_back(c);
    }
    if (is_absolute_iri(raw)) return raw;
    if (!base_) throw RelativeIriError(raw);
    return resolve_iri(*base_, raw);
  }

  void raw_unicode(std::string& out, int digits) {
    std::uint32_t cp = 0;
    for (int i = 0; i < digits; ++i) {
      const int v = hex_value(get());
      if (v < 0) fail("invalid unicode escape");
      cp = cp * 16 + static_cast<std::uint32_t>(v);
    }
    if (cp > 0x10FFFF) fail("code point out of range");
    append_utf8(out, cp);
  }

  static Iri make_iri(const std::string& s) { return Iri(s); }

  static bool is_pn_char(char c) {
    const auto u = static_cast<unsigned char>(c);
    return std::isalnum(u) || c == '_' || c == '-' || u >= 0x80;
  }

  Iri read_prefixed_name() {
    std::string prefix;
    while (!at_end() && peek() != ':') {
      const char c = peek();
      if (!(is_pn_char(c) || c == '.')) fail("invalid prefixed name");
      prefix.push_back(get());
    }
    if (at_end()) fail("expected ':' in prefixed name");
    get();
    std::string local;
    while (!at_end()) {
      const char c = peek();
      if (is_pn_char(c) || c == ':' || c == '%') {
        local.push_back(get());
      } else if (c == '.') {
        // a dot may continue the name only if followed by a name character
        const char n = peek(1);
        if (is_pn_char(n) || n == ':' || n == '%') {
          local.push_back(get());
        } else {
          break;
        }
      } else if (c == '\\') {
        get();
        local.push_back(get());
      } else {
        break;
      }
    }
    auto it = prefixes_.find(prefix);
    if (it == prefixes_.end()) fail("undeclared prefix '" + prefix + "'");
    return make_iri(it->second + local);
  }

  BlankNode read_blank_label() {
    get();  // '_'
    if (peek() != ':') fail("expected ':' after '_'");
    get();
    std::string label;
    while (!at_end()) {
      const char c = peek();
      if (is_pn_char(c)) {
        label.push_back(get());
      } else if (c == '.' && is_pn_char(peek(1))) {
        label.push_back(get());
      } else {
        break;
      }
    }
    if (label.empty()) fail("empty blank node label");
    return BlankNode{scope_ + label};
  }

  BlankNode fresh_blank() { return BlankNode{scope_ + "anon" + std::to_string(anon_++)}; }

  Term read_subject() {
    skip_ws();
    last_was_property_list_ = false;
    const char c = peek();
    if (c == '<') return make_iri(read_iriref());
    if (c == '_') return read_blank_label();
    if (!turtle_) fail("expected IRI or blank node as subject");
    if (c == '[') return read_blank_property_list();
    if (c == '(') fail("collections are not supported");
    return read_prefixed_name();
  }

  Term read_blank_property_list() {
    get();  // '['
    skip_ws();
    BlankNode b = fresh_blank();
    if (peek() == ']') {
      get();
      return b;
    }
    predicate_object_list(b);
    expect(']');
    last_was_property_list_ = true;
    return b;
  }

  Iri read_predicate() {
    skip_ws();
    const char c = peek();
    if (c == '<') return make_iri(read_iriref());
    if (!turtle_) fail("expected IRI as predicate");
    if (c == 'a') {
      const char n = peek(1);
      if (n == ' ' || n == '\t' || n == '\n' || n == '\r' || n == '<' || n == '[' || n == '"' || n == '_') {
        get();
        return vocab::rdf_type();
      }
    }
    if (c == '_' || c == '[' || c == '"') fail("predicate must be an IRI");
    return read_prefixed_name();
  }

  void predicate_object_list(const Term& subject) {
    while (true) {
      Iri p = read_predicate();
      while (true) {
        Term o = read_object();
        graph_.insert(subject, p, std::move(o));
        skip_ws();
        if (turtle_ && peek() == ',') {
          get();
          continue;
        }
        break;
      }
      skip_ws();
      if (turtle_ && peek() == ';') {
        while (peek() == ';') {
          get();
          skip_ws();
        }
        if (peek() == '.' || peek() == ']') return;
        continue;
      }
      return;
    }
  }

  Term read_object() {
    skip_ws();
    const char c = peek();
    if (c == '<') return make_iri(read_iriref());
    if (c == '_') return read_blank_label();
    if (c == '"') return read_literal();
    if (!turtle_) fail("expected IRI, blank node or literal as object");
    if (c == '\'') return read_literal();
    if (c == '[') {
      auto t = read_blank_property_list();
      last_was_property_list_ = false;
      return t;
    }
    if (c == '(') fail("collections are not supported");
    if (c == '+' || c == '-' || c == '.' || std::isdigit(static_cast<unsigned char>(c))) return read_number();
    if (starts_with_literal_keyword("true")) {
      pos_ += 4;
      col_ += 4;
      return make_typed_literal("true", vocab::xsd("boolean"));
    }
    if (starts_with_literal_keyword("false")) {
      pos_ += 5;
      col_ += 5;
      return make_typed_literal("false", vocab::xsd("boolean"));
    }
    return read_prefixed_name();
  }

  bool starts_with_literal_keyword(std::string_view kw) const {
    if (text_.substr(pos_, kw.size()) != kw) return false;
    const char after = peek(kw.size());
    return !(is_pn_char(after) || after == ':');
  }

  Term read_number() {
    std::string s;
    if (peek() == '+' || peek() == '-') s.push_back(get());
    bool dot = false;
    bool exp = false;
    while (!at_end()) {
      const char c = peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        s.push_back(get());
      } else if (c == '.' && !dot && !exp && std::isdigit(static_cast<unsigned char>(peek(1)))) {
        dot = true;
        s.push_back(get());
      } else if ((c == 'e' || c == 'E') && !exp) {
        exp = true;
        s.push_back(get());
        if (peek() == '+' || peek() == '-') s.push_back(get());
      } else {
        break;
      }
    }
    if (s.empty() || s == "+" || s == "-") fail("invalid numeric literal");
    const char* dt = exp ? "double" : dot ? "decimal" : "integer";
    return make_typed_literal(s, vocab::xsd(dt));
  }

  Term read_literal() {
    const char quote = get();
    bool long_form = false;
    if (peek() == quote && peek(1) == quote) {
      if (!turtle_) fail("long string literals are not allowed in N-Triples");
      get();
      get();
      long_form = true;
    } else if (peek() == quote) {
      get();
      return finish_literal("");
    }
    std::string value;
    while (true) {
      if (at_end()) fail("unterminated string literal");
      const char c = get();
      if (c == quote) {
        if (!long_form) break;
        if (peek() == quote && peek(1) == quote) {
          get();
          get();
          break;
        }
        value.push_back(c);
        continue;
      }
      if (c == '\\') {
        const char e = get();
        switch (e) {
          case 't': value.push_back('\t'); break;
          case 'b': value.push_back('\b'); break;
          case 'n': value.push_back('\n'); break;
          case 'r': value.push_back('\r'); break;
          case 'f': value.push_back('\f'); break;
          case '"': value.push_back('"'); break;
          case '\'': value.push_back('\''); break;
          case '\\': value.push_back('\\'); break;
          case 'u': raw_unicode(value, 4); break;
          case 'U': raw_unicode(value, 8); break;
          default: fail("invalid escape sequence");
        }
        continue;
      }
      if (!long_form && (c == '\n' || c == '\r')) fail("newline in string literal");
      value.push_back(c);
    }
    return finish_literal(std::move(value));
  }

  Term finish_literal(std::string value) {
    if (peek() == '@') {
      get();
      std::string lang;
      while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '-')) lang.push_back(get());
      if (lang.empty() || !std::isalpha(static_cast<unsigned char>(lang[0]))) fail("invalid language tag");
      return make_literal(std::move(value), std::move(lang));
    }
    if (peek() == '^' && peek(1) == '^') {
      get();
      get();
      if (peek() != '<' && !turtle_) fail("expected datatype IRI");
      Iri dt = peek() == '<' ? make_iri(read_iriref()) : read_prefixed_name();
      if (dt == vocab::rdf("langString")) fail("rdf:langString literal without language tag");
      return make_typed_literal(std::move(value), std::move(dt));
    }
    return make_literal(std::move(value));
  }
};

inline void escape_iri(std::string& out, const std::string& iri) {
  static const char* hex = "0123456789ABCDEF";
  for (const char ch : iri) {
    const auto c = static_cast<unsigned char>(ch);
    if (c <= 0x20 || ch == '<' || ch == '>' || ch == '"' || ch == '{' || ch == '}' || ch == '|' || ch == '^' ||
        ch == '`' || ch == '\\') {
      out += "\\u00";
      out.push_back(hex[c >> 4]);
      out.push_back(hex[c & 0xF]);
    } else {
      out.push_back(ch);
    }
  }
}

inline void escape_string(std::string& out, const std::string& s) {
  static const char* hex = "0123456789ABCDEF";
  for (const char ch : s) {
    const auto c = static_cast<unsigned char>(ch);
    switch (ch) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      case '\b': out += "\\b"; break;
      case '\f': out += "\\f"; break;
      default:
        if (c < 0x20 || c == 0x7F) {
          out += "\\u00";
          out.push_back(hex[c >> 4]);
          out.push_back(hex[c & 0xF]);
        } else {
          out.push_back(ch);
        }
    }
  }
}

inline std::string ntriples_term(const Term& t) {
  std::string out;
  if (const auto* iri = as_iri(t)) {
    out.push_back('<');
    escape_iri(out, iri->str());
    out.push_back('>');
  } else if (const auto* b = as_blank(t)) {
    out = "_:" + b->label;
  } else {
    const auto& lit = *as_literal(t);
    out.push_back('"');
    escape_string(out, lit.lexical);
    out.push_back('"');
    if (lit.language) {
      out += "@" + *lit.language;
    } else if (lit.datatype != vocab::xsd("string")) {
      out += "^^<";
      escape_iri(out, lit.datatype.str());
      out.push_back('>');
    }
  }
  return out;
}

struct PrefixEntry {
  std::string_view name;
  std::string_view ns;
};

inline constexpr PrefixEntry kWellKnownPrefixes[] = {
    {"aap", vocab::kAap},   {"dcat", vocab::kDcat}, {"dct", vocab::kDct}, {"ent", vocab::kEntailment},
    {"owl", vocab::kOwl},   {"rdf", vocab::kRdf},   {"rdfs", vocab::kRdfs}, {"sd", vocab::kSd},
    {"sh", vocab::kSh},     {"void", vocab::kVoid}, {"xsd", vocab::kXsd},
};

inline bool safe_local(std::string_view s) {
  if (s.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-')) return false;
  return true;
}

/// Blank nodes used exactly once as an object are written inline as
/// `[ ... ]`, with sibling objects ordered by their rendered text, so the
/// output for tree-shaped blank structure does not depend on blank labels.
/// Other blank nodes get `_:bN` labels in order of first use.
class TurtleWriter {
public:
  explicit TurtleWriter(const Graph& g) : g_(g) {
    for (const auto& t : g_)
      if (is_blank(t.object)) ++uses_[t.object];
  }

  std::string write() {
    std::vector<std::string> blocks;
    for (const auto& t : g_)
      if (!is_blank(t.subject) && done_.insert(t.subject).second) blocks.push_back(block(t.subject));
    // blank roots: never an object, shared, or on a cycle of single uses
    for (bool progress = true; progress;) {
      progress = false;
      for (const auto& t : g_) {
        if (done_.count(t.subject) || (uses_[t.subject] == 1 && !orphan_pass_)) continue;
        done_.insert(t.subject);
        blocks.push_back(block(t.subject));
        progress = true;
      }
      if (!progress && !orphan_pass_) {
        orphan_pass_ = true;
        progress = true;
      }
    }

    std::string body;
    for (const auto& b : blocks) body += (body.empty() ? "" : "\n") + b + " .\n";
    std::string out;
    for (const auto& p : kWellKnownPrefixes) {
      if (used_.count(std::string(p.name)))
        out += "@prefix " + std::string(p.name) + ": <" + std::string(p.ns) + "> .\n";
    }
    if (!out.empty() && !body.empty()) out += "\n";
    return out + body;
  }

private:
  const Graph& g_;
  std::set<std::string> used_;
  std::map<Term, std::size_t> uses_;
  std::map<Term, std::string> labels_;
  std::set<Term> done_;
  bool orphan_pass_ = false;

  std::string block(const Term& subject) { return term(subject) + " " + predicate_list(subject, 1); }

  // "p o1 , o2 ;\n  q o3" for the triples about `s`, indented `depth` levels.
  std::string predicate_list(const Term& s, int depth) {
    const std::string indent(static_cast<std::size_t>(depth) * 4, ' ');
    std::map<Iri, std::vector<std::string>> by_pred;
    for (const auto& t : g_.about(s)) by_pred[t.predicate].push_back(object(t.object, depth));
    std::string out;
    bool first = true;
    for (auto& [p, objs] : by_pred) {
      std::sort(objs.begin(), objs.end());
      if (!first) out += " ;\n" + indent;
      first = false;
      out += predicate(p) + " ";
      for (std::size_t i = 0; i < objs.size(); ++i) out += (i ? " ,\n" + indent + "    " : "") + objs[i];
    }
    return out;
  }

  std::string object(const Term& o, int depth) {
    if (!is_blank(o) || uses_[o] != 1 || done_.count(o)) return term(o);
    done_.insert(o);
    if (g_.about(o).empty()) return "[]";
    const auto inner = predicate_list(o, depth + 1);
    if (inner.find('\n') == std::string::npos && inner.size() <= 72) return "[ " + inner + " ]";
    const std::string indent(static_cast<std::size_t>(depth) * 4, ' ');
    return "[\n" + indent + "    " + inner + "\n" + indent + "]";
  }

  std::string iri(const Iri& i) {
    for (const auto& p : kWellKnownPrefixes) {
      if (i.starts_with(p.ns)) {
        auto local = std::string_view(i.str()).substr(p.ns.size());
        if (safe_local(local)) {
          used_.insert(std::string(p.name));
          return std::string(p.name) + ":" + std::string(local);
        }
      }
    }
    std::string out = "<";
    escape_iri(out, i.str());
    return out + ">";
  }

  std::string predicate(const Iri& p) { return p == vocab::rdf_type() ? "a" : iri(p); }

  std::string term(const Term& t) {
    if (const auto* i = as_iri(t)) return iri(*i);
    if (is_blank(t)) {
      auto [it, fresh] = labels_.emplace(t, "");
      if (fresh) it->second = "_:b" + std::to_string(labels_.size() - 1);
      return it->second;
    }
    const auto& lit = *as_literal(t);
    std::string out = "\"";
    escape_string(out, lit.lexical);
    out += "\"";
    if (lit.language) {
      out += "@" + *lit.language;
    } else if (lit.datatype != vocab::xsd("string")) {
      out += "^^" + iri(lit.datatype);
    }
    return out;
  }
};

}  // namespace detail

/// Parses a whole document. Blank-node labels are rewritten so that labels
/// from different parse calls never collide.
inline Graph parse_graph(std::string_view text, RdfFormat format) {
  return detail::RdfReader(text, format).parse();
}

inline Graph parse_graph(std::istream& in, RdfFormat format) {
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_graph(ss.str(), format);
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline Graph load_graph(const std::string& path, RdfFormat format) { return parse_graph(read_file(path), format); }

/// N-Triples output is one triple per line in graph order, '\n' terminated,
/// with canonical escaping.
namespace detail {

// Blank node labels that do not depend on the input labels: colours are
// refined from each node's neighbourhood until the partition is stable, and
// nodes are numbered in colour order. Nodes left with equal colours are
// interchangeable in tree-shaped graphs, so the output is the same whichever
// way the tie is broken.
inline std::string fnv1a_hex(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) h = (h ^ c) * 0x100000001b3ULL;
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

inline std::map<Term, std::string> canonical_blank_labels(const Graph& g) {
  std::map<Term, std::string> colour;
  for (const auto& t : g) {
    if (is_blank(t.subject)) colour[t.subject];
    if (is_blank(t.object)) colour[t.object];
  }
  auto show = [&](const Term& t) { return is_blank(t) ? "_:" + colour.at(t) : ntriples_term(t); };
  std::size_t classes = 1;
  for (std::size_t round = 0; round <= colour.size(); ++round) {
    std::map<Term, std::vector<std::string>> parts;
    for (const auto& t : g) {
      const auto p = ntriples_term(Term{t.predicate});
      if (is_blank(t.subject)) parts[t.subject].push_back("> " + p + " " + show(t.object));
      if (is_blank(t.object)) parts[t.object].push_back("< " + show(t.subject) + " " + p);
    }
    std::map<Term, std::string> next;
    std::set<std::string> distinct;
    for (auto& [node, own] : colour) {
      auto& ps = parts[node];
      std::sort(ps.begin(), ps.end());
      std::string key = own;
      for (const auto& x : ps) key += "|" + x;
      next[node] = fnv1a_hex(key);
      distinct.insert(next[node]);
    }
    colour = std::move(next);
    if (distinct.size() == classes && round > 0) break;
    classes = distinct.size();
  }
  std::vector<std::pair<std::string, Term>> order;
  for (const auto& [node, c] : colour) order.emplace_back(c, node);
  std::sort(order.begin(), order.end());
  std::map<Term, std::string> labels;
  for (const auto& [_, node] : order) labels[node] = "_:b" + std::to_string(labels.size());
  return labels;
}

}  // namespace detail

inline std::string serialize_graph(const Graph& g, RdfFormat format) {
  if (format == RdfFormat::Turtle) return detail::TurtleWriter(g).write();
  const auto labels = detail::canonical_blank_labels(g);
  auto term = [&](const Term& t) { return is_blank(t) ? labels.at(t) : detail::ntriples_term(t); };
  std::vector<std::string> lines;
  lines.reserve(g.size());
  for (const auto& t : g)
    lines.push_back(term(t.subject) + " " + detail::ntriples_term(Term{t.predicate}) + " " + term(t.object) + " .\n");
  std::sort(lines.begin(), lines.end());
  std::string out;
  for (const auto& l : lines) out += l;
  return out;
}

}  // namespace aap
