#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>
#include <thread>

#include "CLI11.hpp"
#include "rwiki/pipeline.hpp"

namespace rwiki::cli {
namespace {

struct Options {
  std::string dir;
  std::string program = "program";
  std::string core_path;
  std::string scimago_path;
  std::string overrides_path;
  std::string output_file;
  std::string output_dir = "output";
  std::string ns = "phd:bibliography";
  std::string page;
  std::string kind;
  double threshold = biblio::kDefaultThreshold;
  unsigned workers = 0;  // 0: hardware concurrency
};

unsigned worker_count(const Options& o) {
  if (o.workers) return o.workers;
  return std::max(1u, std::thread::hardware_concurrency());
}

void report_issues(const std::vector<Issue>& issues, std::ostream& err) {
  for (const auto& i : issues) err << "note\t" << i.where << "\t" << i.message << "\n";
}

pipeline::Wiki ingest(const Options& o, std::ostream& err) {
  auto wiki = pipeline::ingest(WikiRoot{o.dir}, worker_count(o));
  report_issues(wiki.issues, err);
  return wiki;
}

struct LoadedRegistries {
  std::optional<biblio::VenueRegistry> core;
  std::optional<biblio::VenueRegistry> scimago;
  std::optional<biblio::Overrides> overrides;

  pipeline::Registries view(double threshold) const {
    return {core ? &*core : nullptr, scimago ? &*scimago : nullptr, overrides ? &*overrides : nullptr, threshold};
  }
};

LoadedRegistries load_registries(const Options& o, std::ostream& err) {
  LoadedRegistries r;
  if (!o.core_path.empty()) {
    r.core = biblio::load_registry(biblio::RegistryKind::core_conference, o.core_path);
    report_issues(r.core->issues, err);
  }
  if (!o.scimago_path.empty()) {
    r.scimago = biblio::load_registry(biblio::RegistryKind::scimago_journal, o.scimago_path);
    report_issues(r.scimago->issues, err);
  }
  if (!o.overrides_path.empty()) {
    r.overrides = biblio::Overrides::load(o.overrides_path);
    report_issues(r.overrides->issues(), err);
  }
  return r;
}

int cmd_scaffold(const Options& o, std::ostream& out) {
  auto report = scaffold(o.dir, o.program);
  for (const auto& d : report.directories) out << "dir\t" << d.generic_string() << "\n";
  for (const auto& p : report.pages) out << "page\t" << p.generic_string() << "\n";
  for (const auto& t : report.templates) out << "template\t" << t.generic_string() << "\n";
  return 0;
}

int cmd_lint(const Options& o, std::ostream& out, std::ostream& err) {
  auto wiki = ingest(o, err);
  auto diags = pipeline::lint(wiki);
  std::size_t counts[3] = {0, 0, 0};
  for (const auto& d : diags) {
    err << graph::render(d) << "\n";
    ++counts[static_cast<int>(d.severity)];
  }
  out << counts[0] << " error(s), " << counts[1] << " warning(s), " << counts[2] << " info\n";
  return counts[0] ? 1 : 0;
}

int cmd_export(const Options& o, std::ostream& out, std::ostream& err) {
  auto regs = load_registries(o, err);
  auto wiki = ingest(o, err);
  auto records = pipeline::bibliography(wiki, regs.view(o.threshold));
  const auto content = analysis::bib_csv(records);
  std::ofstream f(o.output_file, std::ios::binary | std::ios::trunc);
  f << content;
  f.close();
  if (!f) throw Error("cannot write " + o.output_file);
  out << o.output_file << "\n";
  return 0;
}

int cmd_analyze(const Options& o, std::ostream& out, std::ostream& err) {
  if (!PageId::parse(o.ns)) throw Error("malformed namespace: " + o.ns);
  auto regs = load_registries(o, err);
  auto wiki = ingest(o, err);
  auto outputs = pipeline::analyze(wiki, regs.view(o.threshold), PageId::of(o.ns).str());
  for (const auto& p : analysis::write_outputs(outputs, o.output_dir)) out << p.generic_string() << "\n";
  return 0;
}

int cmd_backlinks(const Options& o, std::ostream& out, std::ostream& err) {
  auto wiki = ingest(o, err);
  for (const auto& id : graph::backlinks(wiki.graph, PageId::of(o.page))) out << id.str() << "\n";
  return 0;
}

int cmd_index(const Options& o, std::ostream& out, std::ostream& err) {
  auto kind = sheets::parse_entity_kind(o.kind);
  if (!kind) throw Error("unknown entity kind: " + o.kind);
  auto wiki = ingest(o, err);
  for (const auto& [entity, list] : graph::entity_index(wiki.graph, *kind)) {
    out << entity.str() << "\t" << list.size() << "\t";
    for (std::size_t i = 0; i < list.size(); ++i) out << (i ? " " : "") << list[i].str();
    out << "\n";
  }
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Research wiki toolkit: scaffold, lint, index and analyze a documentation wiki", "rwiki"};
  app.require_subcommand(1, 1);
  app.set_help_all_flag("--help-all", "Show help for every command");

  auto threshold_check = CLI::Validator(
      [](std::string& v) -> std::string {
        double t = 0.0;
        try {
          t = std::stod(v);
        } catch (const std::exception&) {
          return "threshold must be a number";
        }
        return t > 0.0 && t <= 1.0 ? std::string{} : std::string("threshold must lie in (0, 1]");
      },
      "(0,1]");

  auto common = [&](CLI::App* sub) {
    sub->add_option("dir", o.dir, "Wiki root directory (holding pages/ and meta/)")->required();
    sub->add_option("-j,--workers", o.workers, "Worker threads for page ingestion (default: all cores)");
  };
  auto registries = [&](CLI::App* sub, bool required) {
    auto* c = sub->add_option("--core", o.core_path, "CORE conference ranking CSV (name,acronym,rank)");
    auto* s = sub->add_option("--scimago", o.scimago_path, "Scimago journal CSV (title,h_index)");
    if (required) {
      c->required();
      s->required();
    }
    c->check(CLI::ExistingFile);
    s->check(CLI::ExistingFile);
    sub->add_option("--overrides", o.overrides_path, "Manual venue overrides CSV (name,rank_or_hindex)")
        ->check(CLI::ExistingFile);
    sub->add_option("--threshold", o.threshold, "Minimum Jaccard score for a venue match")
        ->check(threshold_check)
        ->capture_default_str();
  };

  auto* scaffold_cmd = app.add_subcommand("scaffold", "Create the research wiki page structure in an empty directory");
  scaffold_cmd->add_option("dir", o.dir, "Target directory (must be empty or absent)")->required();
  scaffold_cmd->add_option("--program", o.program, "Name of the study program page")->capture_default_str();

  auto* lint_cmd = app.add_subcommand("lint", "Check the wiki against its naming and structure conventions");
  common(lint_cmd);

  auto* export_cmd = app.add_subcommand("export-csv", "Export the bibliography table as CSV");
  common(export_cmd);
  registries(export_cmd, true);
  export_cmd->add_option("-o,--output", o.output_file, "Output CSV file")->required();

  auto* analyze_cmd = app.add_subcommand("analyze", "Write bibliography, change and term statistics with plots");
  common(analyze_cmd);
  registries(analyze_cmd, false);
  analyze_cmd->add_option("--namespace", o.ns, "Namespace for the changes-over-time plot")->capture_default_str();
  analyze_cmd->add_option("--output", o.output_dir, "Output directory")->capture_default_str();

  auto* backlinks_cmd = app.add_subcommand("backlinks", "List pages linking to a page");
  common(backlinks_cmd);
  backlinks_cmd->add_option("page-id", o.page, "Target page id")->required();

  auto* index_cmd = app.add_subcommand("index", "List reading sheets per entity page");
  common(index_cmd);
  index_cmd->add_option("entity-kind", o.kind, "author, year, journal, conference, publisher or institution")
      ->required()
      ->check(CLI::IsMember({"author", "year", "journal", "conference", "publisher", "institution"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n";
    auto* sub = app.get_subcommands().empty() ? &app : app.get_subcommands().front();
    err << sub->help();
    return 2;
  }

  try {
    if (scaffold_cmd->parsed()) return cmd_scaffold(o, out);
    if (lint_cmd->parsed()) return cmd_lint(o, out, err);
    if (export_cmd->parsed()) return cmd_export(o, out, err);
    if (analyze_cmd->parsed()) return cmd_analyze(o, out, err);
    if (backlinks_cmd->parsed()) return cmd_backlinks(o, out, err);
    if (index_cmd->parsed()) return cmd_index(o, out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace rwiki::cli
