#pragma once

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <functional>
#include <map>
#include <string>
#include <type_traits>
#include <vector>

#include "aap/digest.hpp"
#include "aap/io.hpp"
#include "aap/profile.hpp"
#include "aap/rational.hpp"
#include "aap/vocab.hpp"

namespace aap {

inline constexpr std::string_view kToolVersion = "0.1.0";

struct ProfileProvenance {
  std::string tool_version{kToolVersion};
  std::string generated_at;
  std::map<std::string, std::string> digests;  // "schema", "data", "metadata", "reference"
};

struct AapProfileDocument {
  Graph graph;
  AapProfile profile;
  ProfileProvenance provenance;
};

/// UTC timestamp, or the value of AAP_FIXED_TIME when set.
inline std::string default_clock() {
  if (const char* fixed = std::getenv("AAP_FIXED_TIME"); fixed && *fixed) return fixed;
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

struct EmitOptions {
  std::function<std::string()> clock = default_clock;
};

namespace detail {

inline Literal rational_literal(const Rational& r) { return make_typed_literal(to_string(r), vocab::aap("rational")); }
inline Literal bool_literal(bool b) { return make_typed_literal(b ? "true" : "false", vocab::xsd("boolean")); }
inline Literal int_literal(std::size_t n) { return make_typed_literal(std::to_string(n), vocab::xsd("integer")); }

class ProfileWriter {
public:
  Graph g;

  Term fresh() { return Term{BlankNode{"b" + std::to_string(next_++)}}; }
  void add(const Term& s, std::string_view p, Term o) { g.insert(s, vocab::aap(p), std::move(o)); }
  void add(const Term& s, std::string_view p, const Iri& o) { add(s, p, Term{o}); }
  void add(const Term& s, std::string_view p, Literal o) { add(s, p, Term{std::move(o)}); }
  void add_text(const Term& s, std::string_view p, std::string text) { add(s, p, make_literal(std::move(text))); }

private:
  std::size_t next_ = 0;
};

}  // namespace detail

/// Serialises a computed profile into the AAP vocabulary. Per-task trust
/// satisfaction is recorded so that metadata consumers can decide fitness.
inline Graph profile_to_graph(const AapProfile& p, const ProfileProvenance& prov, const TaskCatalogue& catalogue) {
  detail::ProfileWriter w;
  const Term root = w.fresh();
  w.g.insert(root, vocab::rdf_type(), Term{vocab::aap("Profile")});
  w.add(root, "describes", p.kg_id);
  w.add_text(root, "toolVersion", prov.tool_version);
  w.add(root, "generatedAt", make_typed_literal(prov.generated_at, vocab::xsd("dateTime")));
  for (const auto& [k, v] : prov.digests) w.add_text(root, k + "Digest", v);

  // E
  w.add(root, "fragment", vocab::aap(to_string(p.expressivity.fragment)));
  w.add(root, "conformanceRatio", detail::rational_literal(p.expressivity.conformance_ratio));
  for (const auto& [kind, n] : p.expressivity.axiom_census) {
    const Term c = w.fresh();
    w.add(root, "axiomCount", c);
    w.add_text(c, "axiomKind", kind);
    w.add(c, "count", detail::int_literal(n));
  }
  for (const auto& d : p.expressivity.diagnostics) w.add_text(root, "diagnostic", d);

  // R
  w.add(root, "regime", vocab::aap(to_string(p.trust.regime)));
  w.add(root, "consistency", vocab::aap(to_string(p.trust.consistency.status)));
  if (p.trust.consistency.certificate_source)
    w.add(root, "consistencyCertifiedBy", *p.trust.consistency.certificate_source);
  if (p.trust.conflict) {
    const Term c = w.fresh();
    w.add(root, "regimeConflict", c);
    w.add(c, "declaredRegime", vocab::aap(to_string(p.trust.conflict->declared)));
    w.add(c, "maximumFragment", vocab::aap(to_string(p.trust.conflict->maximum)));
  }
  for (const auto& c : p.trust.closures) {
    const Term n = w.fresh();
    w.add(root, "closure", n);
    w.add(n, "closedPredicate", c.predicate);
    w.add(n, "closureSemantics", vocab::aap(to_string(c.semantics)));
    w.add_text(n, "closureSource", c.source);
    if (c.target_class) w.add(n, "targetClass", *c.target_class);
  }
  for (const auto& o : p.trust.open_predicates) w.add(root, "openPredicate", o);

  // D
  w.add(root, "discoverability", detail::rational_literal(p.discoverability.value));
  w.add_text(root, "discoverabilityBand", to_string(p.discoverability.band));
  for (const auto& [task, d] : p.discoverability.per_task) {
    const Term n = w.fresh();
    w.add(root, "taskVerdict", n);
    w.add(n, "task", task);
    w.add(n, "decidability", vocab::aap(to_string(d)));
  }

  // G
  for (const auto& e : p.closure.base.names)
    w.add(root, e.kind == NameKind::Concept ? "residentConcept" : "residentRole", e.name);
  for (const auto& d : p.closure.derived) {
    const Term n = w.fresh();
    w.add(root, "derivedName", n);
    w.add(n, "name", d.name);
    w.add_text(n, "kind", to_string(d.kind));
    w.add(n, "weak", detail::bool_literal(d.weak));
    w.add(n, "viaReference", detail::bool_literal(d.via_reference));
    for (std::size_t i = 0; i < d.provenance.size(); ++i) {
      const Term s = w.fresh();
      w.add(n, "provenanceStep", s);
      w.add(s, "index", detail::int_literal(i));
      w.add_text(s, "axiom", d.provenance[i]);
    }
  }
  for (const auto& c : p.closure.cycles) {
    const Term n = w.fresh();
    w.add(root, "cycleWarning", n);
    for (const auto& name : c.names) w.add(n, "cycleName", name);
    for (const auto& ax : c.axioms) w.add_text(n, "cycleAxiom", ax);
  }
  w.add(root, "groundingRoute", vocab::aap(to_string(p.route.route)));
  if (!p.route.diagnostic.empty()) w.add_text(root, "routeDiagnostic", p.route.diagnostic);

  for (const auto& task : catalogue.tasks) {
    auto cov = p.per_task_coverage.find(task.id);
    if (cov == p.per_task_coverage.end()) continue;
    const Term n = w.fresh();
    w.add(root, "taskAssessment", n);
    w.add(n, "task", task.id);
    w.add(n, "groundingScore", detail::rational_literal(cov->second.score));
    for (const auto& x : cov->second.covered) w.add(n, "coveredName", x);
    for (const auto& x : cov->second.gap) w.add(n, "gapName", x);
    for (const auto& x : cov->second.kind_mismatch) w.add(n, "kindMismatchName", x);
    for (const auto& x : cov->second.weak) w.add(n, "weakName", x);
    for (const auto& x : cov->second.via_reference) w.add(n, "viaReferenceName", x);
    w.add(n, "lowerBound", detail::bool_literal(cov->second.lower_bound));
    if (auto m = p.per_task_module.find(task.id); m != p.per_task_module.end())
      for (const auto& x : m->second) w.add(n, "moduleName", x);
    w.add(n, "trustSatisfied", detail::bool_literal(satisfies(p.trust, task.requirement).holds));
  }
  for (const auto& warning : p.warnings) w.add_text(root, "warning", warning);
  return std::move(w.g);
}

namespace detail {

class ProfileReader {
public:
  explicit ProfileReader(const Graph& g) : g_(g) {}

  std::pair<AapProfile, ProfileProvenance> read() {
    const auto roots = g_.subjects(vocab::rdf_type(), Term{vocab::aap("Profile")});
    if (roots.size() != 1) throw InvalidDocument("expected exactly one aap:Profile, found " + std::to_string(roots.size()));
    const Term& r = roots.front();
    AapProfile p;
    ProfileProvenance prov;

    p.kg_id = iri(r, "describes");
    prov.tool_version = text(r, "toolVersion");
    prov.generated_at = text(r, "generatedAt");
    for (const auto& t : g_.about(r)) {
      const auto& pred = t.predicate.str();
      static const std::string suffix = "Digest";
      if (t.predicate.starts_with(vocab::kAap) && pred.size() > suffix.size() &&
          pred.compare(pred.size() - suffix.size(), suffix.size(), suffix) == 0)
        if (const auto* l = as_literal(t.object)) {
          auto local = pred.substr(vocab::kAap.size());
          prov.digests[local.substr(0, local.size() - suffix.size())] = l->lexical;
        }
    }

    p.expressivity.fragment = enum_value(r, "fragment", parse_fragment);
    p.expressivity.conformance_ratio = rational(r, "conformanceRatio");
    for (const auto& c : all(r, "axiomCount"))
      p.expressivity.axiom_census[text(c, "axiomKind")] = std::stoul(text(c, "count"));
    for (const auto& d : all(r, "diagnostic")) p.expressivity.diagnostics.push_back(lexical(d));

    p.trust.regime = enum_value(r, "regime", parse_regime);
    p.trust.consistency.status = enum_value(r, "consistency", parse_consistency);
    if (auto c = g_.object(r, vocab::aap("consistencyCertifiedBy")))
      if (const auto* i = as_iri(*c)) p.trust.consistency.certificate_source = *i;
    if (auto c = g_.object(r, vocab::aap("regimeConflict")))
      p.trust.conflict =
          RegimeConflict{enum_value(*c, "declaredRegime", parse_regime), enum_value(*c, "maximumFragment", parse_fragment)};
    for (const auto& n : all(r, "closure")) {
      ClosureDeclaration d;
      d.predicate = iri(n, "closedPredicate");
      d.semantics = enum_value(n, "closureSemantics", parse_closure_semantics);
      d.source = text(n, "closureSource");
      if (g_.object(n, vocab::aap("targetClass"))) d.target_class = iri(n, "targetClass");
      p.trust.closures.insert(std::move(d));
    }
    for (const auto& o : all(r, "openPredicate"))
      if (const auto* i = as_iri(o)) p.trust.open_predicates.insert(*i);

    p.discoverability.value = rational(r, "discoverability");
    auto band = parse_band(text(r, "discoverabilityBand"));
    if (!band) throw InvalidDocument("unknown discoverability band");
    p.discoverability.band = *band;
    for (const auto& n : all(r, "taskVerdict")) {
      const auto task = iri(n, "task");
      const auto d = enum_value(n, "decidability", parse_decidability);
      p.discoverability.per_task[task] = d;
      if (d != Decidability::Undecidable) p.discoverability.decidable.insert(task);
    }

    for (const auto& o : all(r, "residentConcept"))
      if (const auto* i = as_iri(o)) p.closure.base.names.insert({*i, NameKind::Concept});
    for (const auto& o : all(r, "residentRole"))
      if (const auto* i = as_iri(o)) p.closure.base.names.insert({*i, NameKind::Role});
    for (const auto& n : all(r, "derivedName")) {
      DerivedName d;
      d.name = iri(n, "name");
      d.kind = text(n, "kind") == "role" ? NameKind::Role : NameKind::Concept;
      d.weak = boolean(n, "weak");
      d.via_reference = boolean(n, "viaReference");
      std::map<std::size_t, std::string> steps;
      for (const auto& s : all(n, "provenanceStep")) steps[std::stoul(text(s, "index"))] = text(s, "axiom");
      for (auto& [_, ax] : steps) d.provenance.push_back(std::move(ax));
      p.closure.derived.push_back(std::move(d));
    }
    // derivation order is not kept in the graph; fall back to provenance length
    std::stable_sort(p.closure.derived.begin(), p.closure.derived.end(), [](const auto& a, const auto& b) {
      return std::pair{a.provenance.size(), SignatureEntry{a.name, a.kind}} <
             std::pair{b.provenance.size(), SignatureEntry{b.name, b.kind}};
    });
    for (const auto& n : all(r, "cycleWarning")) {
      CycleWarning c;
      for (const auto& o : all(n, "cycleName"))
        if (const auto* i = as_iri(o)) c.names.push_back(*i);
      for (const auto& o : all(n, "cycleAxiom")) c.axioms.push_back(lexical(o));
      p.closure.cycles.push_back(std::move(c));
    }
    p.route.route = enum_value(r, "groundingRoute", parse_grounding_route);
    if (g_.object(r, vocab::aap("routeDiagnostic"))) p.route.diagnostic = text(r, "routeDiagnostic");

    for (const auto& n : all(r, "taskAssessment")) {
      const auto task = iri(n, "task");
      CoverageResult c;
      c.score = rational(n, "groundingScore");
      c.covered = names(n, "coveredName");
      c.gap = names(n, "gapName");
      c.kind_mismatch = names(n, "kindMismatchName");
      c.weak = names(n, "weakName");
      c.via_reference = names(n, "viaReferenceName");
      c.lower_bound = boolean(n, "lowerBound");
      p.per_task_coverage[task] = std::move(c);
      p.per_task_module[task] = names(n, "moduleName");
    }
    for (const auto& w : all(r, "warning")) p.warnings.push_back(lexical(w));
    return {std::move(p), std::move(prov)};
  }

private:
  const Graph& g_;

  static std::optional<Decidability> parse_decidability(std::string_view s) {
    for (auto d : {Decidability::DecidableFit, Decidability::DecidableUnfit, Decidability::Undecidable})
      if (s == to_string(d)) return d;
    return std::nullopt;
  }

  std::vector<Term> all(const Term& s, std::string_view p) const { return g_.objects(s, vocab::aap(p)); }

  Term one(const Term& s, std::string_view p) const {
    auto o = g_.object(s, vocab::aap(p));
    if (!o) throw InvalidDocument("profile is missing aap:" + std::string(p));
    return *o;
  }

  static std::string lexical(const Term& t) {
    if (const auto* l = as_literal(t)) return l->lexical;
    throw InvalidDocument("expected a literal");
  }

  Iri iri(const Term& s, std::string_view p) const {
    auto o = one(s, p);
    if (const auto* i = as_iri(o)) return *i;
    throw InvalidDocument("aap:" + std::string(p) + " must be an IRI");
  }

  std::string text(const Term& s, std::string_view p) const { return lexical(one(s, p)); }

  Rational rational(const Term& s, std::string_view p) const {
    try {
      return parse_rational(text(s, p));
    } catch (const Error&) {
      throw InvalidDocument("aap:" + std::string(p) + " is not a rational");
    }
  }

  bool boolean(const Term& s, std::string_view p) const { return text(s, p) == "true"; }

  NameSet names(const Term& s, std::string_view p) const {
    NameSet out;
    for (const auto& o : all(s, p))
      if (const auto* i = as_iri(o)) out.insert(*i);
    return out;
  }

  template <class Parse>
  auto enum_value(const Term& s, std::string_view p, Parse parse) const ->
      typename std::invoke_result_t<Parse, std::string_view>::value_type {
    const auto v = iri(s, p);
    auto parsed = parse(v.local_name());
    if (!parsed) throw InvalidDocument("unknown value <" + v.str() + "> for aap:" + std::string(p));
    return *parsed;
  }
};

}  // namespace detail

inline AapProfileDocument read_profile_document(const Graph& g) {
  AapProfileDocument doc;
  doc.graph = g;
  auto [profile, prov] = detail::ProfileReader(g).read();
  doc.profile = std::move(profile);
  doc.provenance = std::move(prov);
  return doc;
}

/// Profiles one KG and renders the result as an AAP document.
inline AapProfileDocument emit_profile(const KgDescriptor& kg, const TaskCatalogue& catalogue,
                                       const Graph* reference = nullptr, const EmitOptions& opt = {}) {
  AapProfileDocument doc;
  doc.profile = compute_profile(kg, catalogue, reference);
  doc.provenance.generated_at = opt.clock ? opt.clock() : default_clock();
  doc.provenance.digests["schema"] = graph_digest(kg.schema);
  doc.provenance.digests["data"] = graph_digest(kg.data);
  doc.provenance.digests["metadata"] = graph_digest(kg.metadata);
  if (reference) doc.provenance.digests["reference"] = graph_digest(*reference);
  doc.graph = profile_to_graph(doc.profile, doc.provenance, catalogue);
  return doc;
}

}  // namespace aap
