#pragma once

#include <string>
#include <vector>

#include <aap/aap.hpp>

namespace aap::test {

inline const std::string kMetadataPrefixes =
    "@prefix void: <http://rdfs.org/ns/void#> .\n"
    "@prefix sd: <http://www.w3.org/ns/sparql-service-description#> .\n"
    "@prefix ent: <http://www.w3.org/ns/entailment/> .\n"
    "@prefix rdfs: <http://www.w3.org/2000/01/rdf-schema#> .\n"
    "@prefix xsd: <http://www.w3.org/2001/XMLSchema#> .\n"
    "@prefix aap: <urn:aap:0.1:> .\n"
    "@prefix conf: <http://example.org/conference#> .\n"
    "@prefix task: <http://example.org/task/> .\n";

inline Graph metadata_graph(const std::string& body) {
  return parse_graph(kMetadataPrefixes + body, RdfFormat::Turtle);
}

/// Single metadata statements (Turtle, prefixes above) that an augmentation
/// step may add: listings, regimes, closures, open predicates, assessments.
inline std::vector<std::string> metadata_statement_pool(const TaskCatalogue& catalogue) {
  std::vector<std::string> out;
  for (const char* c : {"Researcher", "Paper", "Invited_speaker", "Conference", "Person", "Workshop"})
    out.push_back("<http://x/d> void:classPartition [ void:class conf:" + std::string(c) + " ] .");
  for (const char* p : {"authorOf", "givenAt", "gives"})
    out.push_back("<http://x/d> void:propertyPartition [ void:property conf:" + std::string(p) + " ] .");
  for (const char* r : {"ent:Simple", "ent:RDFS", "ent:OWL-Direct"})
    out.push_back("<http://x/s> sd:defaultEntailmentRegime " + std::string(r) + " .");
  for (const char* p : {"authorOf", "Invited_speaker", "gives"}) {
    out.push_back("[] a aap:CompletenessStatement ; aap:closes conf:" + std::string(p) + " .");
    out.push_back("<http://x/d> aap:openPredicate conf:" + std::string(p) + " .");
  }
  out.push_back("[] a aap:CompletenessStatement ; aap:closureSemantics aap:GlobalCwa .");
  for (const auto& t : catalogue.tasks) {
    const std::string head = "[] aap:taskAssessment [ aap:task <" + t.id.str() + "> ; ";
    out.push_back(head + "aap:groundingScore \"1\" ] .");
    out.push_back(head + "aap:groundingScore \"1/2\" ] .");
    out.push_back(head + "aap:trustSatisfied \"true\"^^xsd:boolean ] .");
    out.push_back(head + "aap:trustSatisfied \"false\"^^xsd:boolean ] .");
    out.push_back(head + "aap:gapName conf:Conference ] .");
  }
  out.push_back("<http://x/k> aap:consistencyStatus aap:TboxConsistent .");
  out.push_back("conf:lists rdfs:subPropertyOf void:class .");
  out.push_back("<http://x/d> conf:lists conf:Invited_speaker , conf:Conference .");
  return out;
}

}  // namespace aap::test
