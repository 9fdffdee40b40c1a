#include "gpa/hyperopt.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <istream>
#include <limits>
#include <numeric>
#include <ostream>
#include <sstream>

#include "gpa/alias_table.hpp"
#include "gpa/generators.hpp"
#include "gpa/parallel.hpp"

namespace gpa {

const std::array<std::string_view, kFeatureCount> kFeatureNames = {
    "walks_per_node", "walk_length",  "node_count",      "edge_count",     "density",
    "diameter",       "avg_degree",   "max_degree",      "avg_edge_weight", "max_edge_weight"};

std::array<double, 8> GraphStats::features() const {
  return {static_cast<double>(node_count), static_cast<double>(edge_count), density,
          static_cast<double>(diameter),   avg_degree,                      max_degree,
          avg_edge_weight,                 max_edge_weight};
}

namespace {

/// BFS eccentricity of `source`; also reports the farthest node.
std::size_t eccentricity(const Graph& g, NodeId source, std::vector<std::int64_t>& dist,
                         std::vector<NodeId>& queue, NodeId* farthest = nullptr) {
  std::fill(dist.begin(), dist.end(), -1);
  queue.clear();
  queue.push_back(source);
  dist[source] = 0;
  std::size_t head = 0;
  NodeId last = source;
  while (head < queue.size()) {
    const NodeId v = queue[head++];
    last = v;
    for (const Neighbor& nb : g.adjacency(v)) {
      if (dist[nb.node] < 0) {
        dist[nb.node] = dist[v] + 1;
        queue.push_back(nb.node);
      }
    }
  }
  if (farthest != nullptr) *farthest = last;
  return static_cast<std::size_t>(dist[last]);
}

}  // namespace

GraphStats compute_stats(const Graph& g) {
  if (g.empty()) throw DomainError("statistics of an empty graph are undefined");
  GraphStats s;
  const std::size_t n = g.node_count();
  s.node_count = n;
  s.edge_count = g.edge_count();
  s.density = n < 2 ? 0.0
                    : 2.0 * static_cast<double>(s.edge_count) /
                          (static_cast<double>(n) * static_cast<double>(n - 1));
  s.avg_degree = 2.0 * static_cast<double>(s.edge_count) / static_cast<double>(n);
  for (NodeId v = 0; v < n; ++v) {
    s.max_degree = std::max(s.max_degree, static_cast<double>(g.degree(v)));
  }
  for (const Edge& e : g.edges()) {
    s.avg_edge_weight += e.weight;
    s.max_edge_weight = std::max(s.max_edge_weight, e.weight);
  }
  if (s.edge_count > 0) s.avg_edge_weight /= static_cast<double>(s.edge_count);

  const auto component = largest_connected_component(g);
  s.diameter_from_largest_component = component.size() < n;
  std::vector<std::int64_t> dist(n);
  std::vector<NodeId> queue;
  queue.reserve(n);
  if (n <= kExactDiameterLimit) {
    for (NodeId v : component) s.diameter = std::max(s.diameter, eccentricity(g, v, dist, queue));
  } else {
    s.diameter_exact = false;
    NodeId far = component.front();
    eccentricity(g, far, dist, queue, &far);
    s.diameter = eccentricity(g, far, dist, queue);
  }
  return s;
}

HyperGrid make_grid(std::span<const std::size_t> walks, std::span<const std::size_t> lengths) {
  HyperGrid grid;
  for (std::size_t w : walks) {
    for (std::size_t l : lengths) grid.push_back({w, l});
  }
  return grid;
}

HyperGrid default_grid() {
  const std::size_t walks[] = {5, 10, 20, 40, 80};
  const std::size_t lengths[] = {10, 20, 40, 80};
  return make_grid(walks, lengths);
}

std::vector<Graph> generate_random_abstract_graphs(std::size_t count, std::uint64_t seed,
                                                   const RandomGraphOptions& options) {
  if (count < 1) throw DomainError("need at least one random graph");
  if (options.min_nodes < 2 || options.max_nodes < options.min_nodes) {
    throw DomainError("invalid node range for random graphs");
  }
  std::vector<double> zipf(options.max_weight);
  for (std::size_t w = 0; w < zipf.size(); ++w) {
    zipf[w] = std::pow(static_cast<double>(w + 1), -options.zipf_exponent);
  }
  const AliasTable weight_table = AliasTable::build(zipf);

  std::vector<Graph> graphs;
  graphs.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    Rng rng(mix_seed(seed, i));
    const double lo = std::log(static_cast<double>(options.min_nodes));
    const double hi = std::log(static_cast<double>(options.max_nodes));
    const auto n = std::clamp<std::size_t>(
        static_cast<std::size_t>(std::llround(std::exp(lo + uniform01(rng) * (hi - lo)))),
        options.min_nodes, options.max_nodes);
    const double avg_degree = std::min(
        static_cast<double>(n - 1),
        options.min_avg_degree + uniform01(rng) * (options.max_avg_degree - options.min_avg_degree));

    Graph topology;
    if (uniform01(rng) < 0.5) {
      topology = erdos_renyi(n, avg_degree / static_cast<double>(n - 1), rng());
    } else {
      std::vector<double> expected(n);
      const double exponent = -1.0 / (options.power_law_exponent - 1.0);
      for (std::size_t v = 0; v < n; ++v) expected[v] = std::pow(static_cast<double>(v + 1), exponent);
      const double scale = avg_degree * static_cast<double>(n) /
                           std::accumulate(expected.begin(), expected.end(), 0.0);
      for (double& d : expected) d *= scale;
      topology = chung_lu(expected, rng());
    }
    topology = connect_components(topology, rng());

    std::vector<double> weights(topology.edge_count());
    for (double& w : weights) w = static_cast<double>(weight_table.sample(rng) + 1);
    graphs.push_back(reweight(topology, weights));
  }
  return graphs;
}

double score_embedding(const Graph& g, const EmbeddingMatrix& f) {
  if (f.rows() != g.node_count()) {
    throw DomainError("embedding rows do not match the graph's node count");
  }
  const std::size_t n = g.node_count();
  // all pairs as non-edges first, then correct the edge pairs
  double total = 0.0;
  for (std::size_t v = 0; v < n; ++v) {
    const auto fv = f.row(v);
    for (std::size_t u = v + 1; u < n; ++u) {
      const double d = euclidean_distance(fv, f.row(u));
      total += d * d;
    }
  }
  for (const Edge& e : g.edges()) {
    const double d = euclidean_distance(f.row(e.u), f.row(e.v));
    total += (e.weight - d) * (e.weight - d) - d * d;
  }
  return total;
}

FeatureRow hybrid_features(const HyperCombo& combo, const GraphStats& stats) {
  FeatureRow row{};
  row[0] = static_cast<double>(combo.walks_per_node);
  row[1] = static_cast<double>(combo.walk_length);
  const auto s = stats.features();
  std::copy(s.begin(), s.end(), row.begin() + 2);
  return row;
}

FeatureRow HybridDataset::standardize(const FeatureRow& raw) const {
  FeatureRow z{};
  for (std::size_t j = 0; j < kFeatureCount; ++j) {
    z[j] = stds[j] > 0.0 ? (raw[j] - means[j]) / stds[j] : 0.0;
  }
  return z;
}

std::vector<FeatureRow> HybridDataset::standardized() const {
  std::vector<FeatureRow> out;
  out.reserve(x.size());
  for (const auto& row : x) out.push_back(standardize(row));
  return out;
}

HybridDataset make_dataset(std::vector<FeatureRow> x, std::vector<double> y) {
  if (x.size() != y.size()) throw DomainError("feature and label counts differ");
  HybridDataset ds;
  ds.x = std::move(x);
  ds.y = std::move(y);
  const auto rows = static_cast<double>(ds.x.size());
  if (ds.x.empty()) return ds;
  for (const auto& row : ds.x) {
    for (std::size_t j = 0; j < kFeatureCount; ++j) ds.means[j] += row[j];
  }
  for (double& m : ds.means) m /= rows;
  for (const auto& row : ds.x) {
    for (std::size_t j = 0; j < kFeatureCount; ++j) {
      ds.stds[j] += (row[j] - ds.means[j]) * (row[j] - ds.means[j]);
    }
  }
  for (std::size_t j = 0; j < kFeatureCount; ++j) {
    ds.stds[j] = std::sqrt(ds.stds[j] / rows);
    // relative threshold so rounding noise on a constant column reads as constant
    if (ds.stds[j] <= 1e-12 * std::max(1.0, std::fabs(ds.means[j]))) ds.stds[j] = 0.0;
  }
  return ds;
}

HybridDataset build_dataset(std::span<const Graph> graphs, const HyperGrid& grid,
                            const SkipGramParams& params, std::uint64_t seed, std::size_t threads) {
  if (graphs.empty() || grid.empty()) throw DomainError("dataset needs graphs and a grid");
  std::vector<GraphStats> stats;
  stats.reserve(graphs.size());
  for (const Graph& g : graphs) stats.push_back(compute_stats(g));

  const std::size_t jobs = graphs.size() * grid.size();
  std::vector<FeatureRow> x(jobs);
  std::vector<double> y(jobs);
  SkipGramParams single = params;
  single.threads = 1;
  parallel_chunks(jobs, threads, [&](std::size_t, std::size_t begin, std::size_t end) {
    for (std::size_t job = begin; job < end; ++job) {
      const std::size_t gi = job / grid.size();
      const HyperCombo& combo = grid[job % grid.size()];
      const EmbeddingMatrix f =
          embed_graph(graphs[gi], combo.walk_params(), single, nullptr, mix_seed(seed, job));
      x[job] = hybrid_features(combo, stats[gi]);
      y[job] = score_embedding(graphs[gi], f);
    }
  });
  return make_dataset(std::move(x), std::move(y));
}

double RegressionModel::predict(const FeatureRow& raw) const {
  double y = bias;
  for (std::size_t j = 0; j < kFeatureCount; ++j) {
    if (stds[j] > 0.0) y += weights[j] * (raw[j] - means[j]) / stds[j];
  }
  return y;
}

double mean_squared_error(const RegressionModel& model, const HybridDataset& data) {
  if (data.rows() == 0) return 0.0;
  double total = 0.0;
  for (std::size_t i = 0; i < data.rows(); ++i) {
    const double r = model.predict(data.x[i]) - data.y[i];
    total += r * r;
  }
  return total / static_cast<double>(data.rows());
}

FitResult fit(const HybridDataset& data, const FitOptions& options) {
  const std::size_t rows = data.rows();
  if (rows < kFeatureCount) {
    throw DomainError("regression needs at least " + std::to_string(kFeatureCount) + " rows, got " +
                      std::to_string(rows));
  }
  FitResult result;
  RegressionModel& model = result.model;
  model.means = data.means;
  model.stds = data.stds;
  for (std::size_t j = 0; j < kFeatureCount; ++j) {
    if (data.stds[j] == 0.0) {
      result.dropped_features.push_back(j);
      warn("dropping constant feature '" + std::string(kFeatureNames[j]) + "'");
    }
  }

  const double y_mean = std::accumulate(data.y.begin(), data.y.end(), 0.0) / static_cast<double>(rows);
  double y_var = 0.0;
  for (double y : data.y) y_var += (y - y_mean) * (y - y_mean);
  y_var /= static_cast<double>(rows);
  result.baseline_mse = y_var;
  model.bias = y_mean;
  if (y_var == 0.0) {
    result.mse_history.assign(options.epochs, 0.0);
    return result;
  }
  const double y_std = std::sqrt(y_var);

  // SGD in standardized units for both features and target
  const auto z = data.standardized();
  std::vector<double> target(rows);
  for (std::size_t i = 0; i < rows; ++i) target[i] = (data.y[i] - y_mean) / y_std;

  FeatureRow w{};
  double b = 0.0;
  std::vector<std::size_t> order(rows);
  std::iota(order.begin(), order.end(), std::size_t{0});
  Rng rng(options.seed);
  for (std::size_t epoch = 0; epoch < options.epochs; ++epoch) {
    const double lr = options.lr / (1.0 + 0.01 * static_cast<double>(epoch));
    shuffle(order, rng);
    // The reported model is the mean iterate over the epoch, which damps the
    // per-sample jitter without changing where SGD converges.
    FeatureRow w_avg{};
    double b_avg = 0.0;
    for (std::size_t i : order) {
      double pred = b;
      for (std::size_t j = 0; j < kFeatureCount; ++j) pred += w[j] * z[i][j];
      const double err = pred - target[i];
      b -= lr * err;
      for (std::size_t j = 0; j < kFeatureCount; ++j) w[j] -= lr * err * z[i][j];
      for (std::size_t j = 0; j < kFeatureCount; ++j) w_avg[j] += w[j];
      b_avg += b;
    }
    const auto steps = static_cast<double>(rows);
    for (std::size_t j = 0; j < kFeatureCount; ++j) model.weights[j] = w_avg[j] / steps * y_std;
    model.bias = y_mean + b_avg / steps * y_std;
    result.mse_history.push_back(mean_squared_error(model, data));
  }
  return result;
}

Selection select_from_stats(const RegressionModel& model, const GraphStats& stats,
                            const HyperGrid& grid, SelectDirection direction) {
  if (grid.empty()) throw DomainError("hyperparameter grid is empty");
  Selection best;
  best.stats = stats;
  bool first = true;
  for (const HyperCombo& combo : grid) {
    const double y = model.predict(hybrid_features(combo, stats));
    ++best.evaluated;
    bool better = first;
    if (!first) {
      const bool strictly = direction == SelectDirection::kMinimize ? y < best.predicted
                                                                    : y > best.predicted;
      const bool tie = y == best.predicted;
      better = strictly ||
               (tie && (combo.walks_per_node < best.combo.walks_per_node ||
                        (combo.walks_per_node == best.combo.walks_per_node &&
                         combo.walk_length < best.combo.walk_length)));
    }
    if (better) {
      best.combo = combo;
      best.predicted = y;
      first = false;
    }
  }
  return best;
}

Selection select_hyperparameters(const RegressionModel& model, const Graph& g,
                                 const HyperGrid& grid, SelectDirection direction) {
  if (grid.empty()) throw DomainError("hyperparameter grid is empty");
  return select_from_stats(model, compute_stats(g), grid, direction);
}

namespace {

template <typename Values>
void write_csv_line(std::ostream& out, const Values& values) {
  bool first = true;
  for (const auto& v : values) {
    if (!first) out << ',';
    out << v;
    first = false;
  }
  out << '\n';
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) out.push_back(cell);
  return out;
}

FeatureRow parse_feature_line(const std::string& line, std::size_t line_no, std::size_t expected,
                              double* extra = nullptr) {
  const auto cells = split_csv(line);
  if (cells.size() != expected) {
    throw ParseError("expected " + std::to_string(expected) + " values", line_no);
  }
  FeatureRow row{};
  for (std::size_t j = 0; j < cells.size(); ++j) {
    char* end = nullptr;
    const double v = std::strtod(cells[j].c_str(), &end);
    if (end == cells[j].c_str()) throw ParseError("bad number '" + cells[j] + "'", line_no);
    if (j < kFeatureCount) {
      row[j] = v;
    } else if (extra != nullptr) {
      *extra = v;
    }
  }
  return row;
}

}  // namespace

void write_model(std::ostream& out, const RegressionModel& model) {
  out << std::setprecision(std::numeric_limits<double>::max_digits10);
  write_csv_line(out, kFeatureNames);
  write_csv_line(out, model.means);
  write_csv_line(out, model.stds);
  std::vector<double> last(model.weights.begin(), model.weights.end());
  last.push_back(model.bias);
  write_csv_line(out, last);
}

RegressionModel read_model(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw ParseError("missing feature names", 1);
  const auto names = split_csv(line);
  if (names.size() != kFeatureCount ||
      !std::equal(names.begin(), names.end(), kFeatureNames.begin())) {
    throw ParseError("feature names do not match this build's schema", 1);
  }
  RegressionModel model;
  if (!std::getline(in, line)) throw ParseError("missing means", 2);
  model.means = parse_feature_line(line, 2, kFeatureCount);
  if (!std::getline(in, line)) throw ParseError("missing stds", 3);
  model.stds = parse_feature_line(line, 3, kFeatureCount);
  if (!std::getline(in, line)) throw ParseError("missing weights", 4);
  model.weights = parse_feature_line(line, 4, kFeatureCount + 1, &model.bias);
  return model;
}

void save_model(const std::string& path, const RegressionModel& model) {
  std::ofstream out(path);
  if (!out) throw DomainError("cannot write model file: " + path);
  write_model(out, model);
}

RegressionModel load_model(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open model file: " + path);
  return read_model(in);
}

void write_dataset_csv(std::ostream& out, const HybridDataset& data) {
  std::vector<std::string> header(kFeatureNames.begin(), kFeatureNames.end());
  header.emplace_back("score");
  write_csv_line(out, header);
  out << std::setprecision(std::numeric_limits<double>::max_digits10);
  for (std::size_t i = 0; i < data.rows(); ++i) {
    std::vector<double> row(data.x[i].begin(), data.x[i].end());
    row.push_back(data.y[i]);
    write_csv_line(out, row);
  }
}

}  // namespace gpa
