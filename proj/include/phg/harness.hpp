#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "phg/graph.hpp"
#include "phg/persistence.hpp"

namespace phg {

enum class FiltrationKind { degree, laplacian_sorted, hks, orc, wl, kwl };

std::string filtration_name(FiltrationKind kind);
FiltrationKind filtration_from_name(const std::string& name);

enum class TableFormat { csv, markdown, json };

struct ExperimentConfig {
  std::string dataset;  // path to a graph6 file, or a named family
  FiltrationKind filtration = FiltrationKind::degree;
  int k_expansion = 1;
  double threshold = 1e-8;
  double hks_time = 10.0;     // hks
  double alpha = 0.0;         // orc
  int wl_rounds = -1;         // wl; -1 refines to stabilization
  int wl_k = 2;               // kwl
  int workers = 1;
  std::string output;
  TableFormat format = TableFormat::csv;

  void validate() const;
};

struct PairVerdict {
  int a = 0;
  int b = 0;
  bool distinguished = false;
  int separating_dim = -1;
};

struct SuccessRateReport {
  std::string dataset;
  std::string filtration;
  int k = 1;
  double threshold = 1e-8;
  long long total_pairs = 0;
  long long distinguished = 0;
  double rate = 1.0;
  bool equivariant = true;  // sorted-assignment Laplacian mode is flagged false
  std::vector<PairVerdict> verdicts;
};

// Graphs for a dataset name: an existing file of graph6 lines, a cubic
// family (cub04..cub10), the rook/Shrikhande pair (sr16622), or a fixture
// token like "cycle:5" / "complete_bipartite:3,3".
std::vector<Graph> load_dataset(const std::string& dataset);

// Diagram sets for every graph under one shared comparison session.
std::vector<std::vector<PersistenceDiagram>> dataset_diagrams(const std::vector<Graph>& graphs,
                                                              const ExperimentConfig& cfg);

// Pairwise distinguishability: diagrams are computed once per graph, every
// unordered pair is compared, and the rate is the distinguished fraction.
SuccessRateReport run_experiment(const ExperimentConfig& cfg);

std::string emit_table(const std::vector<SuccessRateReport>& reports, TableFormat format);
std::string report_to_json(const SuccessRateReport& report);

// Runs fn(0..count) on a small worker pool; results must be written to
// per-index slots so the merge is deterministic regardless of schedule.
void parallel_for(int count, int workers, const std::function<void(int)>& fn);

}  // namespace phg
