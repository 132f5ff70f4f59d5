// tul: enumerate coverings, predict asymptotics, run Monte Carlo scans and
// the verification matrix for trace invariants of random tensors.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "tul/asymptotics.hpp"
#include "tul/constructors.hpp"
#include "tul/enumeration.hpp"
#include "tul/io.hpp"
#include "tul/tensor_sim.hpp"
#include "tul/verify.hpp"

namespace {

using tul::io::Json;

struct GlobalOptions {
  std::string out;
  std::string format = "json";
  int threads = 1;
  std::optional<std::uint64_t> seed;
};

void emit(const GlobalOptions& g, const std::string& text) {
  if (g.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(g.out, std::ios::binary);
  if (!f) throw tul::InvalidArgument("cannot write '" + g.out + "'");
  f << text;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

int run_enumerate(const GlobalOptions& g, const std::string& graph_path, bool faces, bool all,
                  std::optional<int> histogram_color) {
  const auto graph = tul::io::graph_from_json(tul::io::read_json_file(graph_path));
  if (!tul::is_connected(graph)) {
    throw tul::InvalidArgument("graph in '" + graph_path + "' is not connected");
  }
  if (g.format == "csv") {
    if (all) {
      emit(g, tul::io::coverings_csv(tul::enumerate_coverings(graph), graph.colors()));
    } else {
      const auto minimal = tul::minimal_coverings(graph, tul::enumeration_cap(), g.threads);
      emit(g, tul::io::coverings_csv(minimal.members, graph.colors()));
    }
    return 0;
  }
  const auto minimal = tul::minimal_coverings(graph, tul::enumeration_cap(), g.threads);
  std::optional<std::map<int, std::size_t>> histogram;
  if (histogram_color) {
    const int color = *histogram_color - 1;
    if (color < 0 || color >= graph.colors()) {
      throw tul::InvalidArgument("--histogram color must lie in 1.." + std::to_string(graph.colors()));
    }
    histogram.emplace();
    for (const auto& m : minimal.members) ++(*histogram)[m.faces.zero_faces[static_cast<std::size_t>(color)]];
  }
  auto out = tul::io::minimal_coverings_json(minimal, faces, histogram);
  if (all) {
    Json coverings = Json::array();
    for (const auto& c : tul::enumerate_coverings(graph)) {
      coverings.push_back(Json{{"tau", c.tau.one_based()},
                               {"zero_faces", c.faces.zero_faces},
                               {"total", c.faces.total}});
    }
    out["coverings"] = std::move(coverings);
  }
  emit(g, dump(out));
  return 0;
}

int run_asym(const GlobalOptions& g, const std::string& family, const std::string& spec_path,
             const std::string& ratios) {
  const auto j = tul::io::read_json_file(spec_path);
  tul::AsymptoticPrediction prediction;
  std::vector<double> c;
  if (family == "cycle") {
    const auto spec = tul::io::cycle_spec_from_json(j);
    c = ratios.empty() ? std::vector<double>(static_cast<std::size_t>(spec.colors()), 1.0)
                       : tul::io::parse_ratio_list(ratios);
    prediction = tul::predict_cycle(spec, c);
  } else if (family == "melonic") {
    const auto graph = j.contains("sigma") ? tul::io::graph_from_json(j)
                                           : tul::make_melonic(tul::io::melonic_recipe_from_json(j));
    c = ratios.empty() ? std::vector<double>(static_cast<std::size_t>(graph.colors()), 1.0)
                       : tul::io::parse_ratio_list(ratios);
    prediction = tul::predict_melonic(graph, c);
  } else {
    throw tul::InvalidArgument("--family must be 'melonic' or 'cycle'");
  }
  if (g.format == "csv") {
    emit(g, "family,gamma,coefficient\n" + std::string(tul::to_string(prediction.family)) + "," +
                std::to_string(prediction.gamma) + "," + tul::io::format_double(prediction.coefficient) +
                "\n");
  } else {
    emit(g, dump(tul::io::to_json(prediction)));
  }
  return 0;
}

int run_mc(const GlobalOptions& g, const std::string& spec_path, const std::string& graph_path,
           std::size_t samples, const std::string& n_list_text) {
  auto spec = tul::io::tensor_spec_from_json(tul::io::read_json_file(spec_path));
  if (g.seed) spec.seed = *g.seed;
  const auto target = tul::io::target_from_json(tul::io::read_json_file(graph_path));
  const auto graph = tul::graph_of(target);
  if (!tul::is_connected(graph)) throw tul::InvalidArgument("graph is not connected");
  const auto n_list = tul::io::parse_int_list(n_list_text);
  const auto report = tul::universality_scan(spec, target, n_list, samples, g.threads);
  for (auto r : report.flagged()) {
    std::cerr << "note: N=" << report.rows[r].N << " normalized mean "
              << tul::io::format_double(report.rows[r].normalized) << " is more than 4 standard errors from "
              << tul::io::format_double(report.predicted) << " (finite-N correction)\n";
  }
  emit(g, g.format == "csv" ? tul::io::to_csv(report) : dump(tul::io::to_json(report)));
  return 0;
}

int run_verify(const GlobalOptions& g, tul::VerifySuiteConfig config, const std::string& families) {
  if (g.seed) config.seed = *g.seed;
  config.threads = g.threads;
  if (!families.empty()) {
    config.families.clear();
    std::stringstream ss(families);
    std::string name;
    while (std::getline(ss, name, ',')) config.families.push_back(tul::family_from_string(name));
  }
  const auto summary = tul::run_verify(config);
  if (g.format == "csv") {
    std::ostringstream os;
    os << "name,pass,detail\n";
    for (const auto& c : summary.checks) {
      os << '"' << c.name << "\"," << (c.pass ? "true" : "false") << ",\"" << c.detail << "\"\n";
    }
    emit(g, os.str());
  } else {
    Json checks = Json::array();
    for (const auto& c : summary.checks) {
      checks.push_back(Json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    }
    Json rows = Json::array();
    for (const auto& r : summary.catalan_rows) {
      rows.push_back(Json{{"k", r.k},
                          {"count", r.count},
                          {"catalan", r.catalan},
                          {"histogram", r.histogram},
                          {"narayana", r.narayana}});
    }
    Json fams = Json::array();
    for (auto f : config.families) fams.push_back(std::string(tul::to_string(f)));
    Json out{{"schema", tul::io::kSchemaVersion},
             {"config",
              {{"max_k", config.max_k},
               {"max_D", config.max_D},
               {"families", std::move(fams)},
               {"seed", config.seed},
               {"samples", config.samples}}},
             {"passed", summary.checks.size() - summary.failures()},
             {"failed", summary.failures()},
             {"checks", std::move(checks)}};
    if (!rows.empty()) out["catalan_narayana"] = std::move(rows);
    emit(g, dump(out));
  }
  for (const auto& c : summary.checks) {
    if (!c.pass) std::cerr << "FAIL " << c.name << ": " << c.detail << "\n";
  }
  return summary.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact enumeration and Monte Carlo checks for trace invariants of random tensors"};
  app.require_subcommand(1);
  GlobalOptions g;
  std::uint64_t seed = 0;
  app.add_option("--out", g.out, "Write output to this file instead of stdout");
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--threads", g.threads, "Worker threads")->check(CLI::PositiveNumber);
  auto* seed_opt = app.add_option("--seed", seed, "RNG seed (overrides the spec file)");

  auto* enumerate = app.add_subcommand("enumerate", "Minimal coverings of a colored graph");
  std::string graph_path;
  bool faces = false;
  bool all = false;
  std::optional<int> histogram;
  enumerate->add_option("--graph", graph_path, "Graph JSON")->required()->check(CLI::ExistingFile);
  enumerate->add_flag("--faces", faces, "Include every minimal covering and its face profile");
  enumerate->add_flag("--all", all, "Include all k! coverings");
  enumerate->add_option("--histogram", histogram, "Histogram of (0,COLOR)-faces over minimal coverings");

  auto* asym = app.add_subcommand("asym", "Closed-form gamma and limit coefficient");
  std::string family;
  std::string spec_path;
  std::string ratios;
  asym->add_option("--family", family, "melonic or cycle")->required()->check(CLI::IsMember({"melonic", "cycle"}));
  asym->add_option("--spec", spec_path, "Cycle spec, melonic recipe or graph JSON")->required()->check(CLI::ExistingFile);
  asym->add_option("--c", ratios, "Comma-separated dimension ratios (default all 1)");

  auto* mc = app.add_subcommand("mc", "Monte Carlo universality scan");
  std::string tensor_path;
  std::string target_path;
  std::size_t samples = 1000;
  std::string n_list = "4,8,16";
  mc->add_option("--spec", tensor_path, "Tensor spec JSON")->required()->check(CLI::ExistingFile);
  mc->add_option("--graph", target_path, "Graph or cycle spec JSON")->required()->check(CLI::ExistingFile);
  mc->add_option("--samples", samples, "Samples per N")->check(CLI::Range(2, 100000000));
  mc->add_option("--N-list", n_list, "Comma-separated N values");

  auto* verify = app.add_subcommand("verify", "Run the cross-check matrix");
  tul::VerifySuiteConfig config;
  std::string families;
  verify->add_option("--max-k", config.max_k, "Largest k");
  verify->add_option("--max-D", config.max_D, "Largest number of colors");
  verify->add_option("--families", families, "Comma-separated subset of cycle_11,cycle_mm,cycle_mn,melonic");
  verify->add_option("--samples", config.samples, "Monte Carlo samples per Wick check");

  for (auto* sub : {enumerate, asym, mc, verify}) sub->fallthrough();

  CLI11_PARSE(app, argc, argv);
  if (*seed_opt) g.seed = seed;

  try {
    if (*enumerate) return run_enumerate(g, graph_path, faces, all, histogram);
    if (*asym) return run_asym(g, family, spec_path, ratios);
    if (*mc) return run_mc(g, tensor_path, target_path, samples, n_list);
    if (*verify) return run_verify(g, config, families);
  } catch (const std::exception& e) {
    std::cerr << "tul: error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
