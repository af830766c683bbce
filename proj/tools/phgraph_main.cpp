#include <filesystem>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "json.hpp"
#include "phg/complex.hpp"
#include "phg/filtration.hpp"
#include "phg/fixtures.hpp"
#include "phg/graph6.hpp"
#include "phg/harness.hpp"
#include "phg/jsonio.hpp"
#include "phg/metrics.hpp"
#include "phg/wl.hpp"

namespace {

using namespace phg;

FiltrationAssignment build_filtration(const Graph& g, const ExperimentConfig& cfg) {
  switch (cfg.filtration) {
    case FiltrationKind::degree: return degree_filtration(g);
    case FiltrationKind::laplacian_sorted:
      return laplacian_filtration(g, LaplacianMode::sorted_assign);
    case FiltrationKind::hks: return laplacian_filtration(g, LaplacianMode::hks, cfg.hks_time);
    case FiltrationKind::orc: return orc_filtration(g, cfg.alpha);
    case FiltrationKind::wl: return wl_filtration(g, cfg.wl_rounds);
    default: throw std::invalid_argument("kwl builds its own complex; use `diagram` with --filtration kwl");
  }
}

int cmd_generate(const std::string& family, std::optional<int> n, std::optional<int> b,
                 const std::string& out) {
  std::vector<Graph> graphs;
  if (family.rfind("cub", 0) == 0 && family.size() == 5) {
    graphs = enumerate_connected_cubic(std::stoi(family.substr(3)));
  } else if (family == "sr16622") {
    graphs = {make_rook4x4(), make_shrikhande()};
  } else if (family == "cubic") {
    if (!n) throw std::invalid_argument("--family cubic needs --n");
    graphs = enumerate_connected_cubic(*n);
  } else {
    graphs = {fixture_by_name(family, n, b)};
  }
  write_graph6_file(out, graphs);
  std::cout << "wrote " << graphs.size() << " graph(s) to " << out << "\n";
  return 0;
}

int cmd_diagram(const std::string& input, int index, ExperimentConfig cfg,
                const std::string& out_dir, const std::string& dump_filtration,
                const std::string& dump_complex) {
  auto graphs = load_dataset(input);
  if (index < 0 || index >= static_cast<int>(graphs.size()))
    throw std::invalid_argument("graph index out of range (file has " +
                                std::to_string(graphs.size()) + " graphs)");
  const Graph& g = graphs[index];

  FilteredComplex complex;
  if (cfg.filtration == FiltrationKind::kwl) {
    complex = kwl_complex(g, cfg.wl_k);
  } else {
    FiltrationAssignment f = build_filtration(g, cfg);
    if (!dump_filtration.empty()) write_text_file(dump_filtration, filtration_to_json(g, f));
    complex = clique_complex(g, f, cfg.k_expansion);
  }
  if (!dump_complex.empty()) write_text_file(dump_complex, complex_to_json(complex));

  auto diagrams = persistence_reduction(complex);
  std::filesystem::create_directories(out_dir);
  for (const auto& d : diagrams) {
    std::string path = out_dir + "/dim" + std::to_string(d.dim) + ".json";
    write_text_file(path, diagram_to_json(d));
  }
  write_text_file(out_dir + "/diagrams.json", diagrams_to_json(diagrams));
  std::cout << "wrote " << diagrams.size() << " diagram(s) to " << out_dir << "\n";
  return 0;
}

int cmd_compare(const std::string& a_path, const std::string& b_path, double threshold) {
  auto a = diagrams_from_json(read_text_file(a_path));
  auto b = diagrams_from_json(read_text_file(b_path));
  size_t dims = std::max(a.size(), b.size());
  bool verdict = false;
  for (size_t d = 0; d < dims; ++d) {
    PersistenceDiagram empty;
    empty.dim = static_cast<int>(d);
    const auto& da = d < a.size() ? a[d] : empty;
    const auto& db = d < b.size() ? b[d] : empty;
    double dist = bottleneck_distance(da, db);
    std::cout << "dim " << d << ": " << dist << "\n";
    if (dist > threshold) verdict = true;
  }
  std::cout << (verdict ? "distinguished" : "indistinguishable") << " at threshold " << threshold
            << "\n";
  return 0;
}

int cmd_distinguish(const ExperimentConfig& cfg) {
  SuccessRateReport report = run_experiment(cfg);
  std::string rendered;
  switch (cfg.format) {
    case TableFormat::json: rendered = report_to_json(report) + "\n"; break;
    default: rendered = emit_table({report}, cfg.format); break;
  }
  if (cfg.output.empty())
    std::cout << rendered;
  else
    write_text_file(cfg.output, rendered);
  std::cerr << cfg.dataset << " " << filtration_name(cfg.filtration) << " k=" << report.k << ": "
            << report.distinguished << "/" << report.total_pairs << " pairs distinguished\n";
  return 0;
}

int cmd_wl(const std::string& input, int k, const std::string& out) {
  auto graphs = load_dataset(input);
  ColorTable table;
  nlohmann::json result = nlohmann::json::array();
  std::vector<WLColoring> colorings;
  for (size_t i = 0; i < graphs.size(); ++i) {
    WLColoring c = k == 1 ? wl1_refine(graphs[i], WlInit::degree, table)
                          : kwl_refine(graphs[i], k, table);
    nlohmann::json iterations = nlohmann::json::array();
    for (size_t it = 0; it < c.iterations.size(); ++it) {
      nlohmann::json hist = nlohmann::json::array();
      for (auto& [color, count] : c.histogram(it))
        hist.push_back(nlohmann::json::array({color, count}));
      iterations.push_back(hist);
    }
    result.push_back({{"graph", i}, {"stable_at", c.stable_at}, {"histograms", iterations}});
    colorings.push_back(std::move(c));
  }
  std::string rendered = result.dump() + "\n";
  if (out.empty())
    std::cout << rendered;
  else
    write_text_file(out, rendered);

  for (size_t i = 0; i < colorings.size(); ++i)
    for (size_t j = i + 1; j < colorings.size(); ++j)
      std::cerr << "graphs " << i << "," << j << ": "
                << (colorings_distinguish(colorings[i], colorings[j]) ? "distinguished"
                                                                      : "indistinguishable")
                << "\n";
  return 0;
}

void apply_config_file(const std::string& path, ExperimentConfig& cfg, CLI::App* cmd) {
  nlohmann::json file = nlohmann::json::parse(read_text_file(path));
  auto overridden = [&](const std::string& flag) { return cmd->count("--" + flag) > 0; };
  if (file.contains("dataset") && !overridden("dataset")) cfg.dataset = file["dataset"];
  if (file.contains("filtration") && !overridden("filtration"))
    cfg.filtration = filtration_from_name(file["filtration"]);
  if (file.contains("k") && !overridden("k")) cfg.k_expansion = file["k"];
  if (file.contains("threshold") && !overridden("threshold")) cfg.threshold = file["threshold"];
  if (file.contains("t") && !overridden("t")) cfg.hks_time = file["t"];
  if (file.contains("alpha") && !overridden("alpha")) cfg.alpha = file["alpha"];
  if (file.contains("h") && !overridden("rounds")) cfg.wl_rounds = file["h"];
  if (file.contains("wl_k") && !overridden("wl-k")) cfg.wl_k = file["wl_k"];
  if (file.contains("workers") && !overridden("workers")) cfg.workers = file["workers"];
  if (file.contains("output") && !overridden("out")) cfg.output = file["output"];
  if (file.contains("format") && !overridden("format")) {
    std::string f = file["format"];
    cfg.format = f == "md" ? TableFormat::markdown
                           : (f == "json" ? TableFormat::json : TableFormat::csv);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"persistent homology toolkit for graph filtrations"};
  app.require_subcommand(1);

  // generate
  auto* generate = app.add_subcommand("generate", "write fixture graphs as graph6 lines");
  std::string gen_family, gen_out;
  std::optional<int> gen_n, gen_b;
  generate->add_option("--family", gen_family, "fixture or family name")->required();
  generate->add_option("--n", gen_n, "size parameter");
  generate->add_option("--b", gen_b, "second size parameter (bipartite)");
  generate->add_option("--out", gen_out, "output file")->required();

  // shared filtration options
  auto add_filtration_options = [](CLI::App* cmd, ExperimentConfig& cfg,
                                   std::string& filtration_name_out) {
    cmd->add_option("--filtration", filtration_name_out,
                    "degree|laplacian_sorted|hks|orc|wl|kwl");
    cmd->add_option("--k", cfg.k_expansion, "clique expansion dimension");
    cmd->add_option("--alpha", cfg.alpha, "lazy walk parameter (orc)");
    cmd->add_option("--t", cfg.hks_time, "heat kernel time (hks)");
    cmd->add_option("--rounds", cfg.wl_rounds, "refinement rounds (wl); -1 = stabilize");
    cmd->add_option("--wl-k", cfg.wl_k, "tuple size (kwl)");
    cmd->add_option("--threshold", cfg.threshold, "distinguishability threshold");
    cmd->add_option("--workers", cfg.workers, "worker threads");
  };

  // diagram
  auto* diagram = app.add_subcommand("diagram", "compute persistence diagrams for one graph");
  ExperimentConfig diag_cfg;
  std::string diag_input, diag_out, diag_filt = "degree";
  std::string diag_dump_filtration, diag_dump_complex;
  int diag_index = 0;
  diagram->add_option("--input", diag_input, "graph6 file or fixture token")->required();
  diagram->add_option("--index", diag_index, "graph index within the file");
  add_filtration_options(diagram, diag_cfg, diag_filt);
  diagram->add_option("--out", diag_out, "output directory")->required();
  diagram->add_option("--dump-filtration", diag_dump_filtration, "also write the filtration JSON");
  diagram->add_option("--dump-complex", diag_dump_complex, "also write the complex JSON");

  // compare
  auto* compare = app.add_subcommand("compare", "bottleneck-compare two diagram files");
  std::string cmp_a, cmp_b;
  double cmp_threshold = 1e-8;
  compare->add_option("--a", cmp_a)->required();
  compare->add_option("--b", cmp_b)->required();
  compare->add_option("--threshold", cmp_threshold);

  // distinguish
  auto* distinguish =
      app.add_subcommand("distinguish", "pairwise distinguishability over a dataset");
  ExperimentConfig dist_cfg;
  std::string dist_filt = "degree", dist_format = "csv", dist_config_path;
  distinguish->add_option("--dataset", dist_cfg.dataset, "graph6 file or family name");
  add_filtration_options(distinguish, dist_cfg, dist_filt);
  distinguish->add_option("--out", dist_cfg.output, "output file (stdout when omitted)");
  distinguish->add_option("--format", dist_format, "csv|md|json");
  distinguish->add_option("--config", dist_config_path, "declarative config file; flags override");

  // wl
  auto* wl = app.add_subcommand("wl", "emit per-iteration color histograms");
  std::string wl_input, wl_out;
  int wl_k = 1;
  wl->add_option("--input", wl_input, "graph6 file or fixture token")->required();
  wl->add_option("--k", wl_k, "1 (color refinement), 2 or 3 (folklore k-WL)");
  wl->add_option("--out", wl_out, "output file (stdout when omitted)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (generate->parsed()) return cmd_generate(gen_family, gen_n, gen_b, gen_out);
    if (diagram->parsed()) {
      diag_cfg.dataset = diag_input;
      diag_cfg.filtration = filtration_from_name(diag_filt);
      return cmd_diagram(diag_input, diag_index, diag_cfg, diag_out, diag_dump_filtration,
                         diag_dump_complex);
    }
    if (compare->parsed()) return cmd_compare(cmp_a, cmp_b, cmp_threshold);
    if (distinguish->parsed()) {
      if (!dist_config_path.empty()) apply_config_file(dist_config_path, dist_cfg, distinguish);
      if (distinguish->count("--filtration") > 0 || dist_config_path.empty())
        dist_cfg.filtration = filtration_from_name(dist_filt);
      if (distinguish->count("--format") > 0 || dist_config_path.empty())
        dist_cfg.format = dist_format == "md"
                              ? TableFormat::markdown
                              : (dist_format == "json" ? TableFormat::json : TableFormat::csv);
      return cmd_distinguish(dist_cfg);
    }
    if (wl->parsed()) return cmd_wl(wl_input, wl_k, wl_out);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
