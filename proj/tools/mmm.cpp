// mmm: analyze a process model file and write its matrix exports.

#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mmm/error.hpp"
#include "mmm/ingest.hpp"
#include "mmm/pipeline.hpp"

namespace fs = std::filesystem;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitIo = 2;

struct Output {
  std::string stage;
  std::string format;
  std::string file;
  std::function<std::string(const mmm::Analysis&)> render;
};

const std::vector<Output>& outputs() {
  static const std::vector<Output> table = {
      {"dsm", "csv", "dsm.csv", [](const mmm::Analysis& a) { return mmm::dsm_to_csv(a.dsm); }},
      {"ism", "csv", "ism.csv", [](const mmm::Analysis& a) { return mmm::ism_to_csv(a.ism); }},
      {"levels", "json", "levels.json",
       [](const mmm::Analysis& a) { return mmm::levels_to_json(a.levels, a.triangulation); }},
      {"clusters", "json", "clusters.json",
       [](const mmm::Analysis& a) { return mmm::clusters_to_json(a.clustering, a.interdependent); }},
      {"mmm", "md", "mmm.md", [](const mmm::Analysis& a) { return mmm::mmm_to_markdown(a.mmm); }},
      {"mmm", "json", "mmm.json", [](const mmm::Analysis& a) { return mmm::mmm_to_json(a.mmm); }},
      {"mmm", "dot", "graph.dot",
       [](const mmm::Analysis& a) { return mmm::export_dot(a.model, a.triangulation, a.clustering); }},
  };
  return table;
}

struct Style {
  bool enabled = false;
  std::string wrap(const std::string& text, const char* code) const {
    return enabled ? std::string("\x1b[") + code + "m" + text + "\x1b[0m" : text;
  }
};

Style terminal_style() {
  return Style{std::getenv("MMM_NO_COLOR") == nullptr && ::isatty(STDOUT_FILENO) != 0};
}

void report(const std::string& file, const mmm::Error& e) {
  for (const auto& d : e.diagnostics()) std::cerr << file << ':' << d.to_string() << '\n';
}

int run_analyze(const std::string& input, const std::string& stage,
                const std::vector<std::string>& formats, const fs::path& out_dir) {
  const std::set<std::string> wanted(formats.begin(), formats.end());
  std::vector<const Output*> selected;
  for (const auto& o : outputs()) {
    if ((stage == "all" || stage == o.stage) && wanted.contains(o.format)) selected.push_back(&o);
  }
  if (selected.empty()) {
    std::cerr << "mmm: stage '" << stage << "' has no output in the requested formats\n";
    return kExitIo;
  }

  mmm::Analysis analysis;
  try {
    analysis = mmm::analyze(mmm::load_model_file(input));
  } catch (const mmm::Error& e) {
    report(input, e);
    return (e.code() == "io-error" || e.code() == "syntax-error") ? kExitIo : kExitInvalid;
  }

  const auto style = terminal_style();
  std::error_code ec;
  fs::create_directories(out_dir, ec);
  if (ec) {
    std::cerr << "mmm: cannot create '" << out_dir.string() << "': " << ec.message() << '\n';
    return kExitIo;
  }
  for (const auto* o : selected) {
    const auto path = out_dir / o->file;
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out << o->render(analysis);
    if (!out) {
      std::cerr << "mmm: cannot write '" << path.string() << "'\n";
      return kExitIo;
    }
    std::cout << style.wrap("wrote", "32") << ' ' << path.string() << '\n';
  }

  const auto& m = analysis.mmm;
  std::cout << style.wrap(analysis.model.name, "1") << ": " << m.records.size() << " activities, "
            << m.level_count << " levels, " << analysis.clustering.subprocesses.size()
            << " sub-processes, " << m.cycles.size() << " cycles, " << m.metrics.entry_count
            << " feedback entries\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Design/Interface Structure Matrix analysis of process models", "mmm"};
  app.require_subcommand(1);

  auto* analyze = app.add_subcommand("analyze", "Run the analysis pipeline on a .pmodel file");
  std::string input;
  std::string stage = "all";
  std::vector<std::string> formats{"csv", "json", "md", "dot"};
  std::string out_dir = ".";
  analyze->add_option("file", input, "Process model (.pmodel)")->required();
  analyze->add_option("--stage", stage, "Stage to export")
      ->check(CLI::IsMember({"all", "dsm", "ism", "levels", "clusters", "mmm"}));
  analyze->add_option("--format", formats, "Comma-separated export formats")
      ->delimiter(',')
      ->check(CLI::IsMember({"csv", "json", "md", "dot"}));
  analyze->add_option("--out", out_dir, "Output directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitIo;
  }
  return run_analyze(input, stage, formats, out_dir);
}
