#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gpa/embedding.hpp"
#include "gpa/graph.hpp"
#include "gpa/skipgram.hpp"
#include "gpa/walk.hpp"

namespace gpa {

/// The eight graph-level features of an abstract graph.
struct GraphStats {
  std::size_t node_count = 0;
  std::size_t edge_count = 0;
  double density = 0.0;
  std::size_t diameter = 0;
  double avg_degree = 0.0;
  double max_degree = 0.0;
  double avg_edge_weight = 0.0;
  double max_edge_weight = 0.0;
  /// Set when the graph is disconnected; diameter then covers the largest
  /// component only.
  bool diameter_from_largest_component = false;
  /// False when the graph exceeds kExactDiameterLimit nodes and the diameter
  /// is a double-sweep lower bound.
  bool diameter_exact = true;

  std::array<double, 8> features() const;
};

inline constexpr std::size_t kExactDiameterLimit = 5000;

/// Diameter by BFS from every node (exact) up to kExactDiameterLimit nodes.
/// Throws DomainError on an empty graph.
GraphStats compute_stats(const Graph& g);

struct HyperCombo {
  std::size_t walks_per_node = 10;
  std::size_t walk_length = 40;

  WalkParams walk_params() const { return {walks_per_node, walk_length}; }
  friend bool operator==(const HyperCombo&, const HyperCombo&) = default;
};

using HyperGrid = std::vector<HyperCombo>;

/// Cartesian product, walks-major.
HyperGrid make_grid(std::span<const std::size_t> walks, std::span<const std::size_t> lengths);
/// walks in {5, 10, 20, 40, 80} x length in {10, 20, 40, 80}.
HyperGrid default_grid();

struct RandomGraphOptions {
  std::size_t min_nodes = 50;
  std::size_t max_nodes = 2000;
  double min_avg_degree = 2.0;
  double max_avg_degree = 12.0;
  /// Chung-Lu expected degrees follow a power law with this exponent.
  double power_law_exponent = 2.5;
  std::size_t max_weight = 100;
  double zipf_exponent = 1.5;
};

/// Connected weighted graphs: node count log-uniform in [min_nodes, max_nodes],
/// Erdos-Renyi or Chung-Lu topology (fair coin per graph), components joined
/// by extra edges, integer Zipf weights in [1, max_weight].
std::vector<Graph> generate_random_abstract_graphs(std::size_t count, std::uint64_t seed,
                                                   const RandomGraphOptions& options = {});

/// Sum over unordered pairs v < u of (A(v,u) - ||f(v) - f(u)||)^2 where A holds
/// edge weights and zero for non-edges.
double score_embedding(const Graph& g, const EmbeddingMatrix& f);

inline constexpr std::size_t kFeatureCount = 10;
using FeatureRow = std::array<double, kFeatureCount>;
extern const std::array<std::string_view, kFeatureCount> kFeatureNames;

FeatureRow hybrid_features(const HyperCombo& combo, const GraphStats& stats);

/// Training data for the hyperparameter regression. X keeps raw feature
/// values; standardized() applies the stored z-score parameters.
struct HybridDataset {
  std::vector<FeatureRow> x;
  std::vector<double> y;
  FeatureRow means{};
  FeatureRow stds{};

  std::size_t rows() const noexcept { return x.size(); }
  FeatureRow standardize(const FeatureRow& raw) const;
  std::vector<FeatureRow> standardized() const;
};

/// Computes means and population standard deviations of X.
HybridDataset make_dataset(std::vector<FeatureRow> x, std::vector<double> y);

/// One row per (graph, combo): embed the graph with the combo's walk
/// parameters, score the embedding, record hybrid features and score. Rows are
/// graph-major. Jobs run on `threads` workers; each job has its own seed, so
/// the result is independent of the worker count.
HybridDataset build_dataset(std::span<const Graph> graphs, const HyperGrid& grid,
                            const SkipGramParams& params, std::uint64_t seed,
                            std::size_t threads = 1);

/// Linear model over standardized features plus bias.
struct RegressionModel {
  FeatureRow means{};
  FeatureRow stds{};
  FeatureRow weights{};
  double bias = 0.0;

  double predict(const FeatureRow& raw) const;
};

struct FitOptions {
  std::size_t epochs = 400;
  double lr = 0.005;
  std::uint64_t seed = 1;
};

struct FitResult {
  RegressionModel model;
  /// Training MSE after each epoch.
  std::vector<double> mse_history;
  double baseline_mse = 0.0;  // predicting the mean label
  std::vector<std::size_t> dropped_features;
};

/// Least-squares regression by stochastic gradient descent. Constant feature
/// columns are dropped with a warning. Throws DomainError when there are fewer
/// rows than features.
FitResult fit(const HybridDataset& data, const FitOptions& options = {});

double mean_squared_error(const RegressionModel& model, const HybridDataset& data);

enum class SelectDirection { kMinimize, kMaximize };

struct Selection {
  HyperCombo combo;
  double predicted = 0.0;
  std::size_t evaluated = 0;
  GraphStats stats;
};

/// Scores every combo against the graph's statistics in one pass and keeps the
/// best prediction (lowest by default, since the label is a loss). Ties go to
/// fewer walks, then shorter walks. Throws DomainError on an empty grid.
Selection select_hyperparameters(const RegressionModel& model, const Graph& g,
                                 const HyperGrid& grid,
                                 SelectDirection direction = SelectDirection::kMinimize);
Selection select_from_stats(const RegressionModel& model, const GraphStats& stats,
                            const HyperGrid& grid,
                            SelectDirection direction = SelectDirection::kMinimize);

/// Four comma-separated lines: feature names, means, stds, weights then bias.
void write_model(std::ostream& out, const RegressionModel& model);
RegressionModel read_model(std::istream& in);
void save_model(const std::string& path, const RegressionModel& model);
RegressionModel load_model(const std::string& path);

/// CSV with a header of feature names plus "score".
void write_dataset_csv(std::ostream& out, const HybridDataset& data);

}  // namespace gpa
