#include <fstream>
#include <string>
#include <vector>

#include "rwiki/markup.hpp"
#include "rwiki/wiki_store.hpp"

namespace fs = std::filesystem;

namespace rwiki {
namespace {

struct PlannedFile {
  fs::path rel;  // relative to pages/
  std::string content;
  bool is_template = false;
};

constexpr std::string_view kEntityKinds[] = {"author", "year", "journal", "conference", "publisher", "institution"};

constexpr std::string_view kReadingSheetTemplate = R"(====== @!!PAGE@ ======

^ Title       |  |
^ Authors     |  |
^ Year        |  |
^ Conference  |  |
^ Journal     |  |
^ Institution |  |
^ Publisher   |  |

===== Introduction =====

===== Conclusions =====
)";

constexpr std::string_view kCollectionTemplate = R"(====== @!!PAGE@ ======

^ Source      |  |
^ Paper       |  |
^ Date        |  |
^ Size        |  |
^ Documents   |  |
^ Entities    |  |
^ Topics      |  |
^ Assessments |  |

===== Description =====

===== Evaluations =====

^ Task ^ Metric ^ Value ^ Reference ^
)";

constexpr std::string_view kExperimentTemplate = R"(====== @!!PAGE@ ======

^ ID              |  |
^ Start Date      |  |
^ End Date        | Ongoing |
^ Why do it?      |  |
^ Main strengths  |  |
^ Main weaknesses |  |
^ Test collection |  |

===== To-do =====

  * [ ] Prepare the test collection

===== Challenges =====

^ Challenge ^ Description ^

===== Dependencies =====

^ Dependency ^ Description ^

===== Versions =====

^ Version ^ Description ^

===== Evaluation =====

^ Version ^ Metric ^ Value ^

===== Traces =====

===== Research log =====
)";

constexpr std::string_view kResourceTemplate = R"(====== @!!PAGE@ ======

^ URL  |  |
^ Type |  |

===== Notes =====
)";

std::string entity_template(std::string_view kind) {
  return "====== @!!PAGE@ ======\n\nPublications linked to this " + std::string(kind) +
         ":\n\n{{backlinks>.}}\n";
}

std::string entity_index(std::string_view kind) {
  return "===== " + std::string(kind) + " =====\n\n{{nspages>phd:bibliography:" + std::string(kind) + "}}\n";
}

std::vector<PlannedFile> plan(const std::string& program) {
  std::vector<PlannedFile> files;
  auto page = [&](fs::path rel, std::string content) { files.push_back({std::move(rel), std::move(content), false}); };
  auto tmpl = [&](fs::path ns, std::string_view content) {
    files.push_back({std::move(ns) / "_template.txt", std::string(content), true});
  };

  page("sidebar.txt",
       "  * [[start|Home]]\n  * [[infopages|Infopages]]\n  * [[phd|PhD]]\n  * [[" + program + "|Program]]\n");
  page("start.txt", "====== Welcome ======\n\nPublic landing page.\n");
  page("infopages.txt", "====== Infopages ======\n\nTopics explored so far.\n");
  page("phd.txt",
       "====== PhD ======\n\nThesis title and statement.\n\n"
       "  * [[phd:bibliography|Bibliography]]\n"
       "  * [[phd:collections|Collections]]\n"
       "  * [[phd:experiments|Experiments]]\n"
       "  * [[phd:milestones|Milestones]]\n"
       "  * [[phd:resources|Resources]]\n");

  std::string bib = "====== Bibliography ======\n\nReading sheets by subject.\n\n===== Indexes =====\n\n";
  for (auto kind : kEntityKinds) bib += "  * [[phd:bibliography:" + std::string(kind) + "|" + std::string(kind) + "]]\n";
  page("phd/bibliography.txt", bib);
  for (auto kind : kEntityKinds) page(fs::path("phd/bibliography") / (std::string(kind) + ".txt"), entity_index(kind));

  page("phd/collections.txt", "====== Collections ======\n\nDatasets by type of data.\n");
  page("phd/experiments.txt", "====== Experiments ======\n\nExperiments and methodology notes.\n");
  page("phd/milestones.txt", "====== Milestones ======\n\nMilestones, activities and tasks.\n");
  page("phd/resources.txt", "====== Resources ======\n\nWeb resources by category.\n");
  page(program + ".txt", "====== Program ======\n\nCourses and general tasks.\n");

  tmpl("phd/bibliography", kReadingSheetTemplate);
  for (auto kind : kEntityKinds) tmpl(fs::path("phd/bibliography") / std::string(kind), entity_template(kind));
  tmpl("phd/collections", kCollectionTemplate);
  tmpl("phd/experiments", kExperimentTemplate);
  tmpl("phd/resources", kResourceTemplate);
  return files;
}

std::vector<fs::path> plan_directories(const std::string& program) {
  std::vector<fs::path> dirs = {"pages", "meta", "pages/infopages", "pages/phd", "pages/phd/bibliography"};
  for (auto kind : kEntityKinds) dirs.push_back(fs::path("pages/phd/bibliography") / std::string(kind));
  for (auto d : {"pages/phd/bibliography/list", "pages/phd/collections", "pages/phd/experiments", "pages/phd/milestones",
                 "pages/phd/resources"})
    dirs.emplace_back(d);
  dirs.push_back(fs::path("pages") / program);
  return dirs;
}

}  // namespace

ScaffoldReport scaffold(const fs::path& target, std::string_view program_name) {
  const std::string program = markup::slugify(program_name);
  for (auto reserved : {"sidebar", "start", "infopages", "phd"})
    if (program == reserved) throw Error("program name '" + program + "' collides with a reserved page");

  std::error_code ec;
  const bool existed = fs::exists(target, ec);
  if (existed) {
    if (!fs::is_directory(target, ec)) throw Error("scaffold target is not a directory: " + target.string());
    if (!fs::is_empty(target, ec)) throw Error("scaffold target is not empty: " + target.string());
  }

  const auto files = plan(program);
  ScaffoldReport report;
  report.directories = plan_directories(program);

  try {
    if (!existed) fs::create_directories(target);
    for (const auto& d : report.directories) fs::create_directories(target / d);
    for (const auto& f : files) {
      auto rel = fs::path("pages") / f.rel;
      std::ofstream out(target / rel, std::ios::binary);
      out << f.content;
      out.close();
      if (!out) throw Error("cannot write " + (target / rel).string());
      (f.is_template ? report.templates : report.pages).push_back(rel);
    }
  } catch (...) {
    // Leave the target exactly as found.
    if (existed) {
      for (const auto& entry : fs::directory_iterator(target, ec)) fs::remove_all(entry.path(), ec);
    } else {
      fs::remove_all(target, ec);
    }
    throw;
  }
  return report;
}

}  // namespace rwiki
