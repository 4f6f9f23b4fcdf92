#include <algorithm>
#include <deque>
#include <map>
#include <random>

#include <gtest/gtest.h>

#include "support/closure_oracle.hpp"
#include "support/fixtures.hpp"
#include "support/random_tbox.hpp"

namespace aap {
namespace {

using test::conf;
using test::rand_concept;
using test::rand_role;
using test::TBoxWriter;

TaskSignature concepts_and_roles(std::initializer_list<const char*> concepts, std::initializer_list<const char*> roles) {
  TaskSignature s;
  for (auto c : concepts) s.entries.insert({conf(c), NameKind::Concept});
  for (auto r : roles) s.entries.insert({conf(r), NameKind::Role});
  return s;
}

const TaskSignature& worked_example() {
  static const auto s =
      concepts_and_roles({"Researcher", "Paper", "Invited_speaker", "Conference"}, {"authorOf", "givenAt"});
  return s;
}

std::set<SignatureEntry> entries_of(const NameSet& concepts, const NameSet& roles) {
  std::set<SignatureEntry> out;
  for (const auto& c : concepts) out.insert({c, NameKind::Concept});
  for (const auto& r : roles) out.insert({r, NameKind::Role});
  return out;
}

// Axioms named in a provenance chain, looked up by id.
std::vector<Axiom> replay_axioms(const std::vector<Axiom>& all, const std::vector<std::string>& ids) {
  std::vector<Axiom> out;
  for (const auto& a : all)
    if (std::find(ids.begin(), ids.end(), a.id()) != ids.end()) out.push_back(a);
  return out;
}

TEST(ResidentSignature, Kg1) {
  const auto r = resident_signature(test::load_ttl("kg1/schema.ttl"));
  EXPECT_EQ(r.names, entries_of(test::conf_names({"Researcher", "Paper"}), test::conf_names({"authorOf"})));
}

TEST(ResidentSignature, Empty) { EXPECT_TRUE(resident_signature(Graph{}).empty()); }

TEST(ResidentSignature, FixtureManifest) {
  const auto manifest = test::expected("signatures.json");
  for (const char* f : {"kg2/schema.ttl", "kg3/schema.ttl"}) {
    const auto r = resident_signature(test::load_ttl(f));
    EXPECT_EQ(r.names, entries_of(test::conf_names(manifest[f]["concepts"]), test::conf_names(manifest[f]["roles"])))
        << f;
  }
}

TEST(SignatureClosure, Kg1WithoutReferenceIsItsBase) {
  const auto c = signature_closure(test::load_ttl("kg1/schema.ttl"));
  EXPECT_TRUE(c.derived.empty());
  EXPECT_TRUE(c.cycles.empty());
  for (const char* n : {"Invited_speaker", "Conference"}) EXPECT_FALSE(c.contains(conf(n), NameKind::Concept));
  EXPECT_FALSE(c.contains(conf("givenAt"), NameKind::Role));
}

TEST(SignatureClosure, OneStepDefinition) {
  Graph g;
  TBoxWriter w(g, "t");
  w.declare_class(rand_concept(1));
  w.equiv(rand_concept(0), Term{rand_concept(1)});
  const auto c = signature_closure(g);
  // a named equivalence puts both names in the resident signature already
  EXPECT_TRUE(c.base.contains(rand_concept(0), NameKind::Concept));

  Graph schema, ref;
  TBoxWriter s(schema, "s"), r(ref, "r");
  s.declare_class(rand_concept(1));
  r.equiv(rand_concept(0), Term{rand_concept(1)});
  const auto d = signature_closure(schema, &ref);
  ASSERT_EQ(d.derived.size(), 1u);
  EXPECT_EQ(d.derived[0].name, rand_concept(0));
  EXPECT_EQ(d.derived[0].provenance, (std::vector<std::string>{"EquivalentClasses(<http://example.org/rand#C0> "
                                                                "<http://example.org/rand#C1>)"}));
  EXPECT_FALSE(d.derived[0].weak);
  EXPECT_TRUE(d.derived[0].via_reference);
}

TEST(SignatureClosure, ReferenceDerivationsForKg2) {
  const auto c = signature_closure(test::load_ttl("kg2/schema.ttl"), &test::reference());
  const auto* keynote = c.find(conf("Keynote_talk"), NameKind::Concept);
  const auto* regular = c.find(conf("Regular_author"), NameKind::Concept);
  const auto* contributes = c.find(conf("contributes"), NameKind::Role);
  ASSERT_TRUE(keynote && regular && contributes);
  EXPECT_FALSE(keynote->weak);
  EXPECT_TRUE(regular->weak);  // only placed below Researcher
  EXPECT_FALSE(contributes->weak);
  for (const auto* d : {keynote, regular, contributes}) EXPECT_TRUE(d->via_reference);
}

TEST(SignatureClosure, DefinitionNeedsEveryNameOfTheDefiniens) {
  Graph schema, ref;
  TBoxWriter s(schema, "s"), r(ref, "r");
  s.declare_class(rand_concept(1));
  s.declare_class(rand_concept(2));
  r.equiv(rand_concept(0), r.all_of({Term{rand_concept(1)}, r.some(rand_role(0), Term{rand_concept(2)})}));
  EXPECT_FALSE(signature_closure(schema, &ref).contains(rand_concept(0), NameKind::Concept));
  s.declare_role(rand_role(0));
  EXPECT_TRUE(signature_closure(schema, &ref).contains(rand_concept(0), NameKind::Concept));
}

TEST(SignatureClosure, ChainedDefinitionsKeepDependencyOrder) {
  Graph schema, ref;
  TBoxWriter s(schema, "s"), r(ref, "r");
  s.declare_class(rand_concept(0));
  s.declare_role(rand_role(0));
  r.equiv(rand_concept(1), r.some(rand_role(0), Term{rand_concept(0)}));
  r.equiv(rand_concept(2), r.some(rand_role(0), Term{rand_concept(1)}));
  const auto c = signature_closure(schema, &ref);
  const auto* a2 = c.find(rand_concept(2), NameKind::Concept);
  ASSERT_NE(a2, nullptr);
  ASSERT_EQ(a2->provenance.size(), 2u);
  EXPECT_NE(a2->provenance[0].find("rand#C1"), std::string::npos);
}

TEST(SignatureClosure, CyclesAreReportedAndAdmitNothingByThemselves) {
  Graph schema, ref;
  TBoxWriter s(schema, "s"), r(ref, "r");
  s.declare_class(rand_concept(0));
  s.declare_role(rand_role(0));
  r.equiv(rand_concept(1), r.some(rand_role(0), Term{rand_concept(2)}));
  r.equiv(rand_concept(2), r.some(rand_role(0), Term{rand_concept(1)}));
  const auto c = signature_closure(schema, &ref);
  EXPECT_FALSE(c.cycles.empty());
  EXPECT_FALSE(c.contains(rand_concept(1), NameKind::Concept));
  EXPECT_FALSE(c.contains(rand_concept(2), NameKind::Concept));

  // once one member is fixed from outside the cycle, the other follows
  r.equiv(rand_concept(1), Term{rand_concept(0)});
  const auto d = signature_closure(schema, &ref);
  EXPECT_TRUE(d.contains(rand_concept(1), NameKind::Concept));
  EXPECT_TRUE(d.contains(rand_concept(2), NameKind::Concept));
}

TEST(SignatureClosure, StructuralInvariantsOnRandomTBoxes) {
  for (unsigned seed = 0; seed < 150; ++seed) {
    test::RandomTBoxOptions opt;
    opt.rich = seed % 3 == 0;
    auto t = test::RandomTBoxGenerator(seed, opt).next();
    const auto c = signature_closure(t.schema, &t.reference);
    const auto axioms = detail::combined_axioms(t.schema, &t.reference);
    for (const auto& d : c.derived) {
      EXPECT_FALSE(c.base.contains(d.name, d.kind)) << "seed " << seed;
      ASSERT_FALSE(d.provenance.empty()) << "seed " << seed;
      // replaying only the provenance chain re-derives the name
      const auto replay = derive_closure(c.base, replay_axioms(axioms, d.provenance));
      EXPECT_TRUE(replay.contains(d.name, d.kind)) << "seed " << seed << " " << d.name.str();
    }
    // fixpoint: starting from R⁺ derives nothing new
    ResidentSignature all{c.entries()};
    EXPECT_TRUE(derive_closure(all, axioms).derived.empty()) << "seed " << seed;
  }
}

TEST(SignatureClosure, MatchesNaiveOracle) {
  for (unsigned seed = 1000; seed < 1100; ++seed) {
    auto t = test::RandomTBoxGenerator(seed).next();
    test::oracle::Names lib;
    for (const auto& e : signature_closure(t.schema, &t.reference).entries())
      lib.insert({e.name.str(), e.kind == NameKind::Concept ? test::oracle::Kind::Concept : test::oracle::Kind::Role});
    EXPECT_EQ(lib, test::oracle::closure(t.schema, &t.reference)) << "seed " << seed;
  }
}

TEST(SignatureClosure, MonotoneUnderAxiomAddition) {
  for (unsigned seed = 0; seed < 40; ++seed) {
    test::RandomTBoxGenerator gen(seed);
    Graph schema, ref;
    TBoxWriter s(schema, "s"), r(ref, "r");
    s.declare_class(rand_concept(0));
    auto prev = signature_closure(schema, &ref).entries();
    for (int step = 0; step < 20; ++step) {
      gen.axiom(step % 4 ? r : s, 10, 3);
      const auto now = signature_closure(schema, &ref).entries();
      EXPECT_TRUE(std::includes(now.begin(), now.end(), prev.begin(), prev.end())) << "seed " << seed;
      prev = now;
    }
  }
}

// Plain breadth-first reachability over named subClassOf / subPropertyOf
// edges, ignoring direction.
std::set<SignatureEntry> reachable(const Graph& schema, const Graph& ref) {
  std::map<SignatureEntry, std::vector<SignatureEntry>> adj;
  for (const Graph* g : {&schema, &ref})
    for (const auto& t : *g) {
      const auto *a = as_iri(t.subject), *b = as_iri(t.object);
      if (!a || !b) continue;
      NameKind k;
      if (t.predicate == vocab::rdfs("subClassOf")) {
        k = NameKind::Concept;
      } else if (t.predicate == vocab::rdfs("subPropertyOf")) {
        k = NameKind::Role;
      } else {
        continue;
      }
      adj[{*a, k}].push_back({*b, k});
      adj[{*b, k}].push_back({*a, k});
    }
  auto seen = resident_signature(schema).names;
  std::deque<SignatureEntry> todo(seen.begin(), seen.end());
  while (!todo.empty()) {
    const auto cur = todo.front();
    todo.pop_front();
    for (const auto& n : adj[cur])
      if (seen.insert(n).second) todo.push_back(n);
  }
  return seen;
}

TEST(SignatureClosure, RdfsRouteIsGraphReachability) {
  std::mt19937 rng(42);
  auto pick = [&](int n) { return static_cast<int>(rng() % static_cast<unsigned>(n)); };
  for (int round = 0; round < 100; ++round) {
    Graph schema, ref;
    TBoxWriter s(schema, "s"), r(ref, "r");
    for (int i = 0; i < 1 + pick(4); ++i) s.sub(rand_concept(pick(5)), Term{rand_concept(pick(5))});
    s.declare_role(rand_role(pick(2)));
    for (int i = 0; i < pick(25); ++i) {
      if (pick(4) == 0) {
        r.sub_property(rand_role(pick(6)), rand_role(pick(6)));
      } else {
        r.sub(rand_concept(pick(16)), Term{rand_concept(pick(16))});
      }
    }
    ASSERT_EQ(grounding_route(schema, &ref).route, GroundingRoute::RdfsReachability);
    EXPECT_EQ(signature_closure(schema, &ref).entries(), reachable(schema, ref)) << "round " << round;
  }
}

TEST(Coverage, WorkedExampleOnKg1) {
  const auto c = coverage(worked_example(), signature_closure(test::load_ttl("kg1/schema.ttl")));
  EXPECT_EQ(c.score, Rational(1, 2));
  EXPECT_EQ(c.gap, test::conf_names({"Invited_speaker", "Conference", "givenAt"}));
  EXPECT_EQ(c.covered, test::conf_names({"Researcher", "Paper", "authorOf"}));
  EXPECT_TRUE(c.kind_mismatch.empty());
}

TEST(Coverage, SubsetOfBaseAndDisjointSignature) {
  const auto closure = signature_closure(test::load_ttl("kg1/schema.ttl"));
  const auto full = coverage(concepts_and_roles({"Researcher"}, {"authorOf"}), closure);
  EXPECT_EQ(full.score, Rational(1));
  EXPECT_TRUE(full.gap.empty());
  const auto none = coverage(concepts_and_roles({"Workshop"}, {"gives"}), closure);
  EXPECT_EQ(none.score, Rational(0));
  EXPECT_EQ(none.gap, test::conf_names({"Workshop", "gives"}));
}

TEST(Coverage, EmptyTaskSignatureIsAnError) {
  EXPECT_THROW(coverage(TaskSignature{}, SignatureClosure{}), EmptyTaskSignature);
}

TEST(Coverage, KindIsRespected) {
  const auto c =
      coverage(concepts_and_roles({"authorOf"}, {"Paper"}), signature_closure(test::load_ttl("kg1/schema.ttl")));
  EXPECT_EQ(c.score, Rational(0));
  EXPECT_EQ(c.kind_mismatch, test::conf_names({"authorOf", "Paper"}));
}

TEST(Coverage, ScoreAndGapAgreeOnRandomTasks) {
  std::mt19937 rng(3);
  for (unsigned seed = 0; seed < 50; ++seed) {
    auto t = test::RandomTBoxGenerator(seed).next();
    const auto closure = signature_closure(t.schema, &t.reference);
    TaskSignature task;
    const int n = 1 + static_cast<int>(rng() % 6);
    for (int i = 0; i < n; ++i)
      task.entries.insert(rng() % 3 ? SignatureEntry{rand_concept(static_cast<int>(rng() % 14)), NameKind::Concept}
                                    : SignatureEntry{rand_role(static_cast<int>(rng() % 4)), NameKind::Role});
    const auto c = coverage(task, closure);
    EXPECT_GE(c.score, Rational(0));
    EXPECT_LE(c.score, Rational(1));
    EXPECT_EQ(c.score == Rational(1), c.gap.empty());
    EXPECT_EQ(c.covered.size() + c.gap.size(), task.names().size());
    EXPECT_EQ(c.score, Rational(static_cast<std::int64_t>(c.covered.size()),
                                static_cast<std::int64_t>(task.entries.size())));
  }
}

TEST(Coverage, SameKgDifferentTasks) {
  const auto& kg1 = test::profile(1);
  EXPECT_EQ(kg1.per_task_coverage.at(test::task_iri("papers-by-researcher")).score, Rational(1));
  EXPECT_EQ(kg1.per_task_coverage.at(test::task_iri("list-invited-speakers")).score, Rational(0));
}

TEST(GroundingRoute, Fixtures) {
  EXPECT_EQ(grounding_route(test::load_ttl("kg1/schema.ttl")).route, GroundingRoute::RdfsReachability);
  EXPECT_EQ(grounding_route(test::load_ttl("kg2/schema.ttl"), &test::reference()).route,
            GroundingRoute::DefinitionPatterns);
  EXPECT_EQ(grounding_route(test::load_ttl("kg3/schema.ttl"), &test::reference()).route,
            GroundingRoute::DefinitionPatterns);
}

TEST(GroundingRoute, ImplicitDefinitionIsUnsupported) {
  KgDescriptor kg;
  kg.id = Iri("http://example.org/kg/implicit");
  kg.schema = test::load_ttl("grounding/implicit-definition/schema.ttl");
  const Graph ref = test::load_ttl("grounding/implicit-definition/reference.ttl");
  const auto route = grounding_route(kg.schema, &ref);
  EXPECT_EQ(route.route, GroundingRoute::Unsupported);
  EXPECT_NE(route.diagnostic.find("uniform interpolation"), std::string::npos);

  // Invited_speaker is semantically fixed by the two inclusions, yet neither
  // implemented route derives it: the score is a lower bound
  const auto p = compute_profile(kg, test::catalogue(), &ref);
  const auto& c = p.per_task_coverage.at(test::task_iri("list-invited-speakers"));
  EXPECT_TRUE(c.lower_bound);
  EXPECT_TRUE(c.gap.count(conf("Invited_speaker")));
  EXPECT_TRUE(std::any_of(p.warnings.begin(), p.warnings.end(),
                          [](const std::string& w) { return w.rfind("PartialProfile", 0) == 0; }));
}

TEST(GroundingRoute, OwlFullIsUnsupported) {
  Graph g;
  g.insert(conf("x"), vocab::rdf_type(), vocab::owl("Class"));
  g.insert(conf("x"), vocab::rdf_type(), vocab::owl("ObjectProperty"));
  EXPECT_EQ(grounding_route(g).route, GroundingRoute::Unsupported);
}

TEST(GroundingRoute, EquivalencesWithoutImplicitPatterns) {
  Graph g;
  TBoxWriter w(g, "t");
  w.equiv(rand_concept(0), w.some(rand_role(0), Term{rand_concept(1)}));
  EXPECT_EQ(grounding_route(g).route, GroundingRoute::DefinitionPatterns);
  w.sub(w.some(rand_role(0), Term{rand_concept(2)}), w.some(rand_role(1), Term{rand_concept(3)}));
  EXPECT_EQ(grounding_route(g).route, GroundingRoute::Unsupported);
}

TEST(GroundingRoute, NamesRoundTrip) {
  for (auto r : {GroundingRoute::RdfsReachability, GroundingRoute::DefinitionPatterns, GroundingRoute::Unsupported})
    EXPECT_EQ(parse_grounding_route(to_string(r)), r);
}

}  // namespace
}  // namespace aap
