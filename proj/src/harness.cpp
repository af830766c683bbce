#include "phg/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "json.hpp"
#include "phg/complex.hpp"
#include "phg/filtration.hpp"
#include "phg/fixtures.hpp"
#include "phg/graph6.hpp"
#include "phg/metrics.hpp"

namespace phg {

std::string filtration_name(FiltrationKind kind) {
  switch (kind) {
    case FiltrationKind::degree: return "degree";
    case FiltrationKind::laplacian_sorted: return "laplacian_sorted";
    case FiltrationKind::hks: return "hks";
    case FiltrationKind::orc: return "orc";
    case FiltrationKind::wl: return "wl";
    case FiltrationKind::kwl: return "kwl";
  }
  return "?";
}

FiltrationKind filtration_from_name(const std::string& name) {
  if (name == "degree") return FiltrationKind::degree;
  if (name == "laplacian_sorted") return FiltrationKind::laplacian_sorted;
  if (name == "hks") return FiltrationKind::hks;
  if (name == "orc") return FiltrationKind::orc;
  if (name == "wl") return FiltrationKind::wl;
  if (name == "kwl") return FiltrationKind::kwl;
  throw std::invalid_argument("unknown filtration: " + name);
}

void ExperimentConfig::validate() const {
  if (dataset.empty()) throw std::invalid_argument("dataset must be set");
  if (k_expansion < 1) throw std::invalid_argument("k must be >= 1");
  if (!(threshold > 0.0)) throw std::invalid_argument("threshold must be positive");
  if (!(hks_time > 0.0)) throw std::invalid_argument("t must be positive");
  if (alpha < 0.0 || alpha > 1.0) throw std::invalid_argument("alpha must lie in [0,1]");
  if (wl_k != 2 && wl_k != 3) throw std::invalid_argument("kwl supports k in {2,3}");
  if (workers < 1) throw std::invalid_argument("worker count must be >= 1");
}

std::vector<Graph> load_dataset(const std::string& dataset) {
  if (std::filesystem::exists(dataset)) return read_graph6_file(dataset);

  if (dataset.rfind("cub", 0) == 0 && dataset.size() == 5) {
    int n = std::stoi(dataset.substr(3));
    return enumerate_connected_cubic(n);
  }
  if (dataset == "sr16622") return {make_rook4x4(), make_shrikhande()};

  // Fixture token, optionally parameterized: name[:n[,b]]
  std::string name = dataset;
  std::optional<int> n, b;
  if (auto colon = dataset.find(':'); colon != std::string::npos) {
    name = dataset.substr(0, colon);
    std::string params = dataset.substr(colon + 1);
    if (auto comma = params.find(','); comma != std::string::npos) {
      n = std::stoi(params.substr(0, comma));
      b = std::stoi(params.substr(comma + 1));
    } else {
      n = std::stoi(params);
    }
  }
  return {fixture_by_name(name, n, b)};
}

namespace {

std::vector<PersistenceDiagram> pad_dimensions(std::vector<PersistenceDiagram> diags, int k) {
  while (static_cast<int>(diags.size()) <= k) {
    PersistenceDiagram empty;
    empty.dim = static_cast<int>(diags.size());
    diags.push_back(empty);
  }
  return diags;
}

}  // namespace

std::vector<std::vector<PersistenceDiagram>> dataset_diagrams(const std::vector<Graph>& graphs,
                                                              const ExperimentConfig& cfg) {
  int count = static_cast<int>(graphs.size());
  std::vector<std::vector<PersistenceDiagram>> diagrams(count);

  switch (cfg.filtration) {
    case FiltrationKind::degree:
    case FiltrationKind::laplacian_sorted:
    case FiltrationKind::hks:
    case FiltrationKind::orc: {
      parallel_for(count, cfg.workers, [&](int i) {
        FiltrationAssignment f;
        switch (cfg.filtration) {
          case FiltrationKind::degree: f = degree_filtration(graphs[i]); break;
          case FiltrationKind::laplacian_sorted:
            f = laplacian_filtration(graphs[i], LaplacianMode::sorted_assign);
            break;
          case FiltrationKind::hks:
            f = laplacian_filtration(graphs[i], LaplacianMode::hks, cfg.hks_time);
            break;
          default: f = orc_filtration(graphs[i], cfg.alpha); break;
        }
        diagrams[i] = persistence_reduction(clique_complex(graphs[i], f, cfg.k_expansion));
      });
      break;
    }
    case FiltrationKind::wl: {
      // The color table is shared mutable state, so refinement runs
      // sequentially in dataset order. With open-ended rounds all graphs are
      // refined to the common stabilization horizon to keep ids comparable.
      WlFiltrationSession session;
      int rounds = cfg.wl_rounds;
      if (rounds < 0) {
        for (const auto& g : graphs) {
          auto coloring = wl1_refine(g, WlInit::degree, session.table);
          rounds = std::max(rounds, coloring.stable_at);
        }
      }
      for (int i = 0; i < count; ++i) {
        FiltrationAssignment f = wl_filtration(graphs[i], rounds, session);
        diagrams[i] = persistence_reduction(clique_complex(graphs[i], f, cfg.k_expansion));
      }
      break;
    }
    case FiltrationKind::kwl: {
      WlFiltrationSession session;
      int rounds = -1;
      for (const auto& g : graphs) {
        auto coloring = kwl_refine(g, cfg.wl_k, session.table);
        rounds = std::max(rounds, coloring.stable_at);
      }
      for (int i = 0; i < count; ++i)
        diagrams[i] = persistence_reduction(kwl_complex(graphs[i], cfg.wl_k, session, rounds));
      break;
    }
  }

  int pad = cfg.filtration == FiltrationKind::kwl ? cfg.wl_k - 1 : cfg.k_expansion;
  for (auto& d : diagrams) d = pad_dimensions(std::move(d), pad);
  return diagrams;
}

SuccessRateReport run_experiment(const ExperimentConfig& cfg) {
  cfg.validate();
  std::vector<Graph> graphs = load_dataset(cfg.dataset);
  if (graphs.empty()) throw std::runtime_error("dataset " + cfg.dataset + " is empty");

  auto diagrams = dataset_diagrams(graphs, cfg);

  int count = static_cast<int>(graphs.size());
  SuccessRateReport report;
  report.dataset = cfg.dataset;
  report.filtration = filtration_name(cfg.filtration);
  report.k = cfg.filtration == FiltrationKind::kwl ? cfg.wl_k : cfg.k_expansion;
  report.threshold = cfg.threshold;
  report.equivariant = cfg.filtration != FiltrationKind::laplacian_sorted;

  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < count; ++i)
    for (int j = i + 1; j < count; ++j) pairs.push_back({i, j});

  report.verdicts.resize(pairs.size());
  parallel_for(static_cast<int>(pairs.size()), cfg.workers, [&](int idx) {
    auto [i, j] = pairs[idx];
    int dim = separating_dimension(diagrams[i], diagrams[j], cfg.threshold);
    report.verdicts[idx] = {i, j, dim >= 0, dim};
  });

  report.total_pairs = static_cast<long long>(pairs.size());
  for (const auto& v : report.verdicts)
    if (v.distinguished) ++report.distinguished;
  report.rate = report.total_pairs == 0
                    ? 1.0
                    : static_cast<double>(report.distinguished) / report.total_pairs;
  return report;
}

namespace {

std::string format_rate(double rate, bool rounded) {
  char buf[64];
  if (rounded)
    std::snprintf(buf, sizeof(buf), "%.2f", rate);
  else
    std::snprintf(buf, sizeof(buf), "%.17g", rate);
  return buf;
}

}  // namespace

std::string report_to_json(const SuccessRateReport& r) {
  nlohmann::json verdicts = nlohmann::json::array();
  for (const auto& v : r.verdicts)
    verdicts.push_back(nlohmann::json::array({v.a, v.b, v.distinguished, v.separating_dim}));
  nlohmann::json out{
      {"dataset", r.dataset},
      {"filtration", r.filtration},
      {"k", r.k},
      {"pairs", r.total_pairs},
      {"distinguished", r.distinguished},
      {"rate", r.rate},
      {"verdicts", verdicts},
      {"metadata",
       {{"threshold", r.threshold},
        {"equivariant", r.equivariant},
        {"essential_convention", "essential-count mismatch compares as infinite distance"}}}};
  return out.dump();
}

std::string emit_table(const std::vector<SuccessRateReport>& reports, TableFormat format) {
  if (format == TableFormat::json) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : reports) arr.push_back(nlohmann::json::parse(report_to_json(r)));
    return arr.dump() + "\n";
  }

  // Pivot: rows = datasets (input order), columns = (k, filtration) groups.
  std::vector<std::string> datasets;
  std::vector<std::pair<int, std::string>> columns;
  for (const auto& r : reports) {
    if (std::find(datasets.begin(), datasets.end(), r.dataset) == datasets.end())
      datasets.push_back(r.dataset);
    std::pair<int, std::string> col{r.k, r.filtration};
    if (std::find(columns.begin(), columns.end(), col) == columns.end()) columns.push_back(col);
  }
  std::sort(columns.begin(), columns.end());

  auto cell = [&](const std::string& ds, const std::pair<int, std::string>& col)
      -> std::optional<double> {
    for (const auto& r : reports)
      if (r.dataset == ds && r.k == col.first && r.filtration == col.second) return r.rate;
    return std::nullopt;
  };

  std::ostringstream out;
  if (format == TableFormat::csv) {
    out << "dataset";
    for (const auto& [k, name] : columns) out << "," << name << "_k" << k;
    out << "\n";
    for (const auto& ds : datasets) {
      out << ds;
      for (const auto& col : columns) {
        auto value = cell(ds, col);
        out << "," << (value ? format_rate(*value, false) : "");
      }
      out << "\n";
    }
  } else {
    out << "| dataset |";
    for (const auto& [k, name] : columns) out << " " << name << " (k=" << k << ") |";
    out << "\n|---|";
    for (size_t i = 0; i < columns.size(); ++i) out << "---|";
    out << "\n";
    for (const auto& ds : datasets) {
      out << "| " << ds << " |";
      for (const auto& col : columns) {
        auto value = cell(ds, col);
        out << " " << (value ? format_rate(*value, true) : "") << " |";
      }
      out << "\n";
    }
  }
  return out.str();
}

void parallel_for(int count, int workers, const std::function<void(int)>& fn) {
  if (count <= 0) return;
  workers = std::min(workers, count);
  if (workers <= 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  std::exception_ptr error;
  std::mutex error_mutex;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w)
    pool.emplace_back([&]() {
      for (;;) {
        int i = next.fetch_add(1);
        if (i >= count) return;
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!error) error = std::current_exception();
          return;
        }
      }
    });
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace phg
