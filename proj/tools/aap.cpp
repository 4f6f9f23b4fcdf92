// aap: profile KGs, publish profiles, and match tasks against a registry.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "aap/aap.hpp"

namespace {

enum Exit : int { kOk = 0, kGFailure = 2, kRFailure = 3, kEFailure = 4, kUsage = 64, kInput = 65 };

int exit_for(const aap::FeasibilityVerdict& v) {
  if (v.feasible) return kOk;
  switch (*v.failure) {
    case aap::FailureDimension::GFailure: return kGFailure;
    case aap::FailureDimension::RFailure: return kRFailure;
    case aap::FailureDimension::EFailure: return kEFailure;
  }
  return kEFailure;
}

aap::Graph load_optional(const std::string& path, aap::RdfFormat format) {
  if (path.empty()) return {};
  return aap::load_graph(path, format);
}

// The dataset a metadata graph describes, when exactly one is typed.
std::optional<aap::Iri> dataset_id(const aap::Graph& metadata) {
  std::set<aap::Iri> ids;
  for (const auto& cls : {aap::vocab::void_("Dataset"), aap::vocab::dcat("Dataset")})
    for (const auto& s : metadata.subjects(aap::vocab::rdf_type(), aap::Term{cls}))
      if (const auto* i = aap::as_iri(s)) ids.insert(*i);
  if (ids.size() != 1) return std::nullopt;
  return *ids.begin();
}

void write_output(const std::string& text, const std::string& out) {
  if (out.empty() || out == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(out, std::ios::binary);
  f << text;
  if (!f) throw aap::Error("cannot write " + out);
}

std::vector<const aap::AapProfile*> select_kgs(const aap::Registry& reg, const std::vector<std::string>& ids) {
  std::vector<const aap::AapProfile*> out;
  for (const auto& id : ids) {
    const auto* p = reg.find(id);
    if (!p) throw aap::Error("unknown KG id: " + id);
    out.push_back(p);
  }
  return out;
}

void report_warnings(const std::vector<std::string>& warnings) {
  for (const auto& w : warnings) std::cerr << "warning: " << w << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Agentic affordance profiles for knowledge graphs"};
  app.require_subcommand(1);

  std::string schema, data, metadata, reference, tasks_path, out, kg_id;
  std::string registry, task_id, kg, profile_file, mediator_file, module_schema;
  std::vector<std::string> kgs;
  std::string floor = "9/10";
  std::string format = "turtle";
  bool explain = false;

  auto* profile = app.add_subcommand("profile", "Profile one KG and write its AAP document");
  profile->add_option("--schema", schema, "Schema graph (Turtle)")->check(CLI::ExistingFile);
  profile->add_option("--data", data, "Data graph (Turtle)")->check(CLI::ExistingFile);
  profile->add_option("--metadata", metadata, "Metadata graph (Turtle)")->check(CLI::ExistingFile);
  profile->add_option("--reference", reference, "Reference ontology (Turtle)")->check(CLI::ExistingFile);
  profile->add_option("--tasks", tasks_path, "Task catalogue (JSON)")->required()->check(CLI::ExistingFile);
  profile->add_option("--format", format, "Syntax of the input graphs")
      ->check(CLI::IsMember({"turtle", "ntriples"}))
      ->capture_default_str();
  profile->add_option("--id", kg_id, "KG IRI; defaults to the dataset typed in the metadata");
  profile->add_option("--out", out, "Output file, '-' for stdout")->required();

  auto add_registry = [&](CLI::App* sub) {
    sub->add_option("--registry", registry, "Registry directory")->envname("AAP_REGISTRY")->required();
  };

  auto* publish = app.add_subcommand("publish", "Add a profile or mediator document to a registry");
  add_registry(publish);
  auto* pub_profile = publish->add_option("--profile", profile_file, "AAP profile document")->check(CLI::ExistingFile);
  auto* pub_mediator =
      publish->add_option("--mediator", mediator_file, "Mediator descriptor")->check(CLI::ExistingFile);
  pub_profile->excludes(pub_mediator);
  publish->parse_complete_callback([pub_profile, pub_mediator] {
    if (pub_profile->count() == 0 && pub_mediator->count() == 0) throw CLI::RequiredError("--profile or --mediator");
  });

  auto* match = app.add_subcommand("match", "Rank every registered KG for a task");
  add_registry(match);
  match->add_option("--task", task_id, "Task IRI or unique suffix")->required();
  match->add_option("--tasks", tasks_path, "Task catalogue (JSON)")->required()->check(CLI::ExistingFile);
  match->add_flag("--explain", explain, "Include derivation provenance");
  match->add_option("--conformance-floor", floor, "Conformance ratio below which E fails")->capture_default_str();
  match->add_option("--out", out, "Report file, stdout by default");

  auto* diagnose = app.add_subcommand("diagnose", "Verdict, remedy and detail for one KG");
  add_registry(diagnose);
  diagnose->add_option("--kg", kg, "KG IRI or unique suffix")->required();
  diagnose->add_option("--task", task_id, "Task IRI or unique suffix")->required();
  diagnose->add_option("--tasks", tasks_path, "Task catalogue (JSON)")->required()->check(CLI::ExistingFile);
  diagnose->add_flag("--explain", explain, "Include derivation provenance");
  diagnose->add_option("--conformance-floor", floor, "Conformance ratio below which E fails")->capture_default_str();
  diagnose->add_option("--out", out, "Report file, stdout by default");

  auto* compose = app.add_subcommand("compose", "Plan a composition of KGs and mediators for a task");
  add_registry(compose);
  compose->add_option("--kgs", kgs, "Comma-separated KG ids")->required()->delimiter(',');
  compose->add_option("--task", task_id, "Task IRI or unique suffix")->required();
  compose->add_option("--tasks", tasks_path, "Task catalogue (JSON)")->required()->check(CLI::ExistingFile);
  compose->add_option("--module-schema", module_schema, "Schema for the task-scoped module")
      ->check(CLI::ExistingFile);
  compose->add_option("--out", out, "Report file, stdout by default");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*profile) {
      const auto fmt = aap::parse_format_name(format);
      aap::KgDescriptor desc;
      desc.schema = load_optional(schema, fmt);
      desc.data = load_optional(data, fmt);
      desc.metadata = load_optional(metadata, fmt);
      if (!kg_id.empty()) {
        desc.id = aap::Iri(kg_id);
      } else if (auto id = dataset_id(desc.metadata)) {
        desc.id = *id;
      } else {
        std::cerr << "error: --id is required when the metadata does not type exactly one dataset\n";
        return kUsage;
      }
      const auto catalogue = aap::load_task_catalogue(tasks_path);
      std::optional<aap::Graph> ref;
      if (!reference.empty()) ref = aap::load_graph(reference, fmt);
      const auto doc = aap::emit_profile(desc, catalogue, ref ? &*ref : nullptr);
      report_warnings(doc.profile.warnings);
      write_output(aap::serialize_graph(doc.graph, aap::RdfFormat::Turtle), out);
      return kOk;
    }

    if (*publish) {
      const bool is_profile = !profile_file.empty();
      const auto entry = aap::publish(registry, is_profile ? profile_file : mediator_file,
                                      is_profile ? aap::PublishKind::Profile : aap::PublishKind::Mediator);
      std::cout << entry.id << ' ' << entry.digest << '\n';
      return kOk;
    }

    aap::ReportOptions opt;
    opt.explain = explain;
    try {
      opt.match.conformance_floor = aap::parse_rational(floor);
    } catch (const aap::Error& e) {
      std::cerr << "error: --conformance-floor: " << e.what() << '\n';
      return kUsage;
    }
    const auto catalogue = aap::load_task_catalogue(tasks_path);
    const auto& task = catalogue.find(task_id);
    const auto reg = aap::load_registry(registry);
    report_warnings(reg.warnings);

    if (*match) {
      if (reg.profiles.empty()) throw aap::Error("registry holds no profiles: " + registry);
      const auto verdicts = aap::rank(reg.profiles, task, opt.match);
      const auto report = aap::report_json(task, verdicts, reg.profiles, std::nullopt, reg.warnings, opt);
      write_output(report.dump(2) + "\n", out);
      return exit_for(verdicts.front());
    }

    if (*diagnose) {
      const auto* p = select_kgs(reg, {kg}).front();
      const auto v = aap::feasible(*p, task, opt.match);
      std::vector<std::string> warnings = reg.warnings;
      warnings.insert(warnings.end(), p->warnings.begin(), p->warnings.end());
      const auto report = aap::report_json(task, {v}, reg.profiles, std::nullopt, warnings, opt);
      write_output(report.dump(2) + "\n", out);
      return exit_for(v);
    }

    if (*compose) {
      const auto selected = select_kgs(reg, kgs);
      std::optional<aap::Graph> ms;
      if (!module_schema.empty()) ms = aap::load_graph(module_schema, aap::RdfFormat::Turtle);
      const auto plan = aap::compose(selected, task, reg.mediators, ms ? &*ms : nullptr);
      std::vector<aap::FeasibilityVerdict> verdicts;
      for (const auto* p : selected) verdicts.push_back(aap::feasible(*p, task, opt.match));
      std::sort(verdicts.begin(), verdicts.end(), aap::rank_before);
      const auto report = aap::report_json(task, verdicts, reg.profiles, plan, reg.warnings, opt);
      write_output(report.dump(2) + "\n", out);
      return plan.verdict == aap::CompositionVerdict::Closed ? kOk : kGFailure;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInput;
  }
  return kUsage;
}
