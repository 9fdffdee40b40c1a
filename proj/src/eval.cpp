#include "gpa/eval.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <exception>
#include <iomanip>
#include <limits>
#include <mutex>
#include <numeric>
#include <optional>
#include <ostream>
#include <sstream>
#include <unordered_set>

#include "gpa/parallel.hpp"

namespace gpa {

namespace {

constexpr std::size_t kNegativeTries = 100;

std::uint64_t pair_key(NodeId a, NodeId b) {
  if (a > b) std::swap(a, b);
  return (static_cast<std::uint64_t>(a) << 32) | b;
}

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

/// Pairs up a shuffled stub list and repairs invalid pairs by swapping
/// endpoints with other pairs. Returns the local node of a stub that could not
/// be placed, or nullopt when every pair is valid.
struct NegativeSampler {
  const Graph& original;
  const std::vector<NodeId>& component;

  bool allowed(NodeId a, NodeId b, const std::unordered_set<std::uint64_t>& used) const {
    return a != b && !original.has_edge(component[a], component[b]) &&
           !used.contains(pair_key(a, b));
  }

  std::optional<NodeId> sample(const std::vector<std::size_t>& t, Rng& rng,
                               std::vector<NodePair>& pairs) const {
    std::vector<NodeId> stubs;
    for (NodeId v = 0; v < t.size(); ++v) stubs.insert(stubs.end(), t[v], v);
    shuffle(stubs, rng);

    pairs.clear();
    std::vector<bool> valid(stubs.size() / 2, false);
    std::unordered_set<std::uint64_t> used;
    for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
      pairs.emplace_back(stubs[i], stubs[i + 1]);
      const auto [a, b] = pairs.back();
      if (allowed(a, b, used)) {
        used.insert(pair_key(a, b));
        valid[pairs.size() - 1] = true;
      }
    }

    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if (valid[i]) continue;
      const auto [x, y] = pairs[i];
      for (std::size_t attempt = 0; attempt < kNegativeTries && !valid[i]; ++attempt) {
        const std::size_t j = uniform_index(rng, pairs.size());
        if (j == i) continue;
        const auto [a, b] = pairs[j];
        if (valid[j]) used.erase(pair_key(a, b));
        for (const auto& [p, q] : {std::pair{a, b}, std::pair{b, a}}) {
          if (!allowed(x, p, used) || !allowed(y, q, used) || pair_key(x, p) == pair_key(y, q)) {
            continue;
          }
          pairs[i] = {x, p};
          pairs[j] = {y, q};
          used.insert(pair_key(x, p));
          used.insert(pair_key(y, q));
          valid[i] = valid[j] = true;
          break;
        }
        if (!valid[i] && valid[j]) used.insert(pair_key(a, b));
      }
      if (!valid[i]) return x;
    }
    return std::nullopt;
  }
};

}  // namespace

LinkPredSplit make_link_split(const Graph& g, double alpha, std::uint64_t seed) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw DomainError("alpha must lie in (0, 1)");
  const std::size_t m = g.edge_count();
  const auto held = static_cast<std::size_t>(std::ceil(alpha * static_cast<double>(m) - 1e-9));
  if (held >= m) throw DomainError("alpha |E| leaves no training edges");

  Rng rng(mix_seed(seed, 41));
  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), std::size_t{0});
  shuffle(order, rng);
  std::vector<bool> is_test(m, false);
  for (std::size_t i = 0; i < held; ++i) is_test[order[i]] = true;

  const auto all = g.edges();
  std::vector<Edge> residual;
  residual.reserve(m - held);
  for (std::size_t i = 0; i < m; ++i) {
    if (!is_test[i]) residual.push_back(all[i]);
  }
  const Graph rest = Graph::from_edges(g.node_count(), residual);

  LinkPredSplit split;
  split.held_out = held;
  split.component = largest_connected_component(rest);
  split.train_graph = induced_subgraph(rest, split.component);

  constexpr NodeId kAbsent = std::numeric_limits<NodeId>::max();
  std::vector<NodeId> local(g.node_count(), kAbsent);
  for (std::size_t i = 0; i < split.component.size(); ++i) {
    local[split.component[i]] = static_cast<NodeId>(i);
  }
  for (std::size_t i = 0; i < m; ++i) {
    if (!is_test[i]) continue;
    const NodeId a = local[all[i].u];
    const NodeId b = local[all[i].v];
    if (a != kAbsent && b != kAbsent) split.positives.emplace_back(a, b);
  }

  const NegativeSampler sampler{g, split.component};
  std::vector<std::size_t> t(split.component.size(), 0);
  for (const auto& [a, b] : split.positives) {
    ++t[a];
    ++t[b];
  }
  while (!split.positives.empty()) {
    const auto stuck = sampler.sample(t, rng, split.negatives);
    if (!stuck) break;
    std::vector<std::size_t> incident;
    for (std::size_t i = 0; i < split.positives.size(); ++i) {
      const auto [a, b] = split.positives[i];
      if (a == *stuck || b == *stuck) incident.push_back(i);
    }
    const std::size_t drop = incident[uniform_index(rng, incident.size())];
    --t[split.positives[drop].first];
    --t[split.positives[drop].second];
    split.positives.erase(split.positives.begin() + static_cast<std::ptrdiff_t>(drop));
    ++split.pruned_positives;
  }
  if (split.pruned_positives > 0) {
    warn("pruned " + std::to_string(split.pruned_positives) +
         " held-out edges that could not be matched with negatives");
  }
  if (split.positives.empty()) {
    throw DomainError("no held-out edge can be balanced with non-edges");
  }
  split.per_node_positive = std::move(t);
  return split;
}

LinkPrecision link_precision(const EmbeddingMatrix& emb, const LinkPredSplit& split,
                             Similarity metric) {
  if (emb.rows() < split.component.size()) {
    throw DomainError("embedding does not cover the evaluation component");
  }
  const std::size_t npos = split.positives.size();
  const std::size_t total = split.test_size();
  std::vector<double> score(total);
  auto pair_at = [&](std::size_t i) {
    return i < npos ? split.positives[i] : split.negatives[i - npos];
  };
  for (std::size_t i = 0; i < total; ++i) {
    const auto [a, b] = pair_at(i);
    score[i] = metric == Similarity::kCosine ? cosine_similarity(emb.row(a), emb.row(b))
                                             : -euclidean_distance(emb.row(a), emb.row(b));
  }
  // Higher score first; on ties negatives come first.
  auto before = [&](std::size_t i, std::size_t j) {
    if (score[i] != score[j]) return score[i] > score[j];
    const bool pi = i < npos;
    const bool pj = j < npos;
    if (pi != pj) return !pi;
    return i < j;
  };

  LinkPrecision out;
  if (total == 0) return out;
  std::vector<std::size_t> order(total);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::partial_sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(npos), order.end(),
                    before);
  std::size_t hits = 0;
  for (std::size_t r = 0; r < npos; ++r) hits += order[r] < npos ? 1 : 0;
  out.global = static_cast<double>(hits) / static_cast<double>(npos);

  const std::size_t c = split.component.size();
  std::vector<std::vector<std::size_t>> by_node(c);
  for (std::size_t i = 0; i < total; ++i) {
    const auto [a, b] = pair_at(i);
    by_node[a].push_back(i);
    by_node[b].push_back(i);
  }
  std::vector<bool> chosen(total, false);
  for (std::size_t v = 0; v < c; ++v) {
    const std::size_t t = split.per_node_positive[v];
    if (t == 0) continue;
    auto& list = by_node[v];
    const std::size_t take = std::min(t, list.size());
    std::partial_sort(list.begin(), list.begin() + static_cast<std::ptrdiff_t>(take), list.end(),
                      before);
    for (std::size_t r = 0; r < take; ++r) chosen[list[r]] = true;
  }
  std::size_t picked = 0;
  std::size_t picked_pos = 0;
  for (std::size_t i = 0; i < total; ++i) {
    if (!chosen[i]) continue;
    ++picked;
    picked_pos += i < npos ? 1 : 0;
  }
  out.per_node = picked == 0 ? 0.0 : static_cast<double>(picked_pos) / static_cast<double>(picked);
  return out;
}

ClassificationSplit make_classification_split(const LabelSet& labels, std::uint64_t seed) {
  auto nodes = labels.labeled_nodes();
  Rng rng(mix_seed(seed, 51));
  shuffle(nodes, rng);
  ClassificationSplit split;
  const std::size_t half = (nodes.size() + 1) / 2;
  split.train.assign(nodes.begin(), nodes.begin() + static_cast<std::ptrdiff_t>(half));
  split.test.assign(nodes.begin() + static_cast<std::ptrdiff_t>(half), nodes.end());
  return split;
}

double logreg_objective(std::span<const double> w, double bias, std::span<const double> x,
                        std::span<const double> y, std::size_t dim, double l2) {
  const std::size_t n = y.size();
  double loss = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double z = bias;
    for (std::size_t j = 0; j < dim; ++j) z += w[j] * x[i * dim + j];
    // log(1 + e^z) - y z, computed without overflow
    loss += std::max(z, 0.0) + std::log1p(std::exp(-std::abs(z))) - y[i] * z;
  }
  double sq = 0.0;
  for (std::size_t j = 0; j < dim; ++j) sq += w[j] * w[j];
  const auto nn = static_cast<double>(n);
  return loss / nn + l2 / (2.0 * nn) * sq;
}

void logreg_gradient(std::span<const double> w, double bias, std::span<const double> x,
                     std::span<const double> y, std::size_t dim, double l2,
                     std::span<double> grad_w, double& grad_bias) {
  const std::size_t n = y.size();
  const auto nn = static_cast<double>(n);
  std::fill(grad_w.begin(), grad_w.end(), 0.0);
  grad_bias = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double z = bias;
    for (std::size_t j = 0; j < dim; ++j) z += w[j] * x[i * dim + j];
    const double r = stable_sigmoid(z) - y[i];
    for (std::size_t j = 0; j < dim; ++j) grad_w[j] += r * x[i * dim + j];
    grad_bias += r;
  }
  for (std::size_t j = 0; j < dim; ++j) grad_w[j] = grad_w[j] / nn + l2 / nn * w[j];
  grad_bias /= nn;
}

OneVsRestClassifier OneVsRestClassifier::fit(const EmbeddingMatrix& emb, const LabelSet& labels,
                                             std::span<const NodeId> train,
                                             const LogRegOptions& options) {
  if (options.l2 < 0.0 || !(options.lr > 0.0)) throw DomainError("invalid logistic regression options");
  for (NodeId v : train) {
    if (v >= emb.rows() || v >= labels.labels.size()) {
      throw DomainError("training node outside the embedding or label set");
    }
  }
  const std::size_t dim = emb.dim();
  const std::size_t n = train.size();
  const std::size_t stride = dim + 1;

  OneVsRestClassifier clf;
  clf.dim_ = dim;
  clf.weights_.assign(labels.label_count * stride, 0.0);
  clf.trained_.assign(labels.label_count, false);

  std::vector<double> x(n * dim);
  for (std::size_t i = 0; i < n; ++i) {
    const auto row = emb.row(train[i]);
    std::copy(row.begin(), row.end(), x.begin() + static_cast<std::ptrdiff_t>(i * dim));
  }
  const double reg = n == 0 ? 0.0 : options.l2 / static_cast<double>(n);

  std::vector<double> y(n);
  std::vector<std::size_t> order(n);
  for (std::size_t label = 0; label < labels.label_count; ++label) {
    bool seen = false;
    for (std::size_t i = 0; i < n; ++i) {
      const auto& have = labels.labels[train[i]];
      y[i] = std::binary_search(have.begin(), have.end(), static_cast<std::uint32_t>(label)) ? 1.0 : 0.0;
      seen = seen || y[i] > 0.0;
    }
    if (!seen) {
      warn("label " + std::to_string(label) + " has no training node; it is never predicted");
      continue;
    }
    clf.trained_[label] = true;
    double* w = clf.weights_.data() + label * stride;
    double& b = w[dim];
    Rng rng(mix_seed(options.seed, label));
    std::iota(order.begin(), order.end(), std::size_t{0});
    for (std::size_t epoch = 0; epoch < options.epochs; ++epoch) {
      shuffle(order, rng);
      const double lr = options.lr / (1.0 + 0.01 * static_cast<double>(epoch));
      for (std::size_t i : order) {
        const double* xi = x.data() + i * dim;
        double z = b;
        for (std::size_t j = 0; j < dim; ++j) z += w[j] * xi[j];
        const double r = stable_sigmoid(z) - y[i];
        for (std::size_t j = 0; j < dim; ++j) w[j] -= lr * (r * xi[j] + reg * w[j]);
        b -= lr * r;
      }
    }
  }
  return clf;
}

double OneVsRestClassifier::probability(std::size_t label, std::span<const float> x) const {
  if (label >= trained_.size() || !trained_[label]) return 0.0;
  const double* w = weights_.data() + label * (dim_ + 1);
  double z = w[dim_];
  for (std::size_t j = 0; j < dim_; ++j) z += w[j] * x[j];
  return stable_sigmoid(z);
}

std::vector<std::uint32_t> OneVsRestClassifier::top_labels(std::span<const float> x,
                                                           std::size_t m) const {
  std::vector<std::pair<double, std::uint32_t>> ranked;
  ranked.reserve(trained_.size());
  for (std::size_t l = 0; l < trained_.size(); ++l) {
    ranked.emplace_back(probability(l, x), static_cast<std::uint32_t>(l));
  }
  m = std::min(m, ranked.size());
  std::partial_sort(ranked.begin(), ranked.begin() + static_cast<std::ptrdiff_t>(m), ranked.end(),
                    [](const auto& a, const auto& b) {
                      return a.first != b.first ? a.first > b.first : a.second < b.second;
                    });
  std::vector<std::uint32_t> out;
  for (std::size_t i = 0; i < m; ++i) out.push_back(ranked[i].second);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<std::uint32_t>> OneVsRestClassifier::predict(
    const EmbeddingMatrix& emb, const LabelSet& labels, std::span<const NodeId> nodes) const {
  std::vector<std::vector<std::uint32_t>> out;
  out.reserve(nodes.size());
  for (NodeId v : nodes) out.push_back(top_labels(emb.row(v), labels.labels.at(v).size()));
  return out;
}

F1Scores f1_scores(const std::vector<std::vector<std::uint32_t>>& predicted,
                   const std::vector<std::vector<std::uint32_t>>& truth, std::size_t label_count) {
  if (predicted.size() != truth.size()) throw DomainError("prediction and truth sizes differ");
  std::vector<std::size_t> tp(label_count, 0), fp(label_count, 0), fn(label_count, 0);
  auto check = [&](std::uint32_t l) {
    if (l >= label_count) throw DomainError("label id out of range");
  };
  for (std::size_t i = 0; i < truth.size(); ++i) {
    const auto& p = predicted[i];
    const auto& t = truth[i];
    for (std::uint32_t l : p) {
      check(l);
      if (std::find(t.begin(), t.end(), l) != t.end()) ++tp[l]; else ++fp[l];
    }
    for (std::uint32_t l : t) {
      check(l);
      if (std::find(p.begin(), p.end(), l) == p.end()) ++fn[l];
    }
  }
  auto f1 = [](std::size_t a, std::size_t b, std::size_t c) {
    const std::size_t denom = 2 * a + b + c;
    return denom == 0 ? 0.0 : 2.0 * static_cast<double>(a) / static_cast<double>(denom);
  };
  F1Scores out;
  const std::size_t all_tp = std::accumulate(tp.begin(), tp.end(), std::size_t{0});
  const std::size_t all_fp = std::accumulate(fp.begin(), fp.end(), std::size_t{0});
  const std::size_t all_fn = std::accumulate(fn.begin(), fn.end(), std::size_t{0});
  out.micro = f1(all_tp, all_fp, all_fn);
  if (label_count > 0) {
    double sum = 0.0;
    for (std::size_t l = 0; l < label_count; ++l) sum += f1(tp[l], fp[l], fn[l]);
    out.macro = sum / static_cast<double>(label_count);
  }
  return out;
}

std::string to_string(InitMode mode) { return mode == InitMode::kGpa ? "gpa" : "random"; }
std::string to_string(Task task) { return task == Task::kLink ? "link" : "classify"; }

namespace {

template <typename Fn>
RunRecord combine(const std::vector<RunRecord>& runs, Fn&& fn) {
  RunRecord out;
  auto apply = [&](double RunRecord::*field) {
    std::vector<double> values;
    values.reserve(runs.size());
    for (const auto& r : runs) values.push_back(r.*field);
    out.*field = fn(values);
  };
  for (auto field : {&RunRecord::cosine_precision, &RunRecord::euclidean_precision,
                     &RunRecord::cosine_per_node, &RunRecord::euclidean_per_node,
                     &RunRecord::micro_f1, &RunRecord::macro_f1, &RunRecord::init_seconds,
                     &RunRecord::total_seconds}) {
    apply(field);
  }
  return out;
}

double mean_of(const std::vector<double>& v) {
  if (v.empty()) return 0.0;
  return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

EmbeddingMatrix initial_embedding(const Graph& g, const ComparisonConfig& config,
                                  std::uint64_t seed) {
  if (config.init == InitMode::kRandom) {
    return random_embedding(g.node_count(), config.skipgram.dim, seed);
  }
  GpaConfig gpa = config.gpa;
  gpa.abstract_skipgram.dim = config.skipgram.dim;
  return init_for_graph(g, gpa, seed);
}

RunRecord run_once(const Graph& g, const LabelSet* labels, const ComparisonConfig& config,
                   std::uint64_t seed) {
  RunRecord rec;
  rec.seed = seed;
  const auto start = Clock::now();
  if (config.task == Task::kLink) {
    const LinkPredSplit split = make_link_split(g, config.alpha, seed);
    const auto init_start = Clock::now();
    const EmbeddingMatrix init = initial_embedding(split.train_graph, config, mix_seed(seed, 61));
    rec.init_seconds = seconds_since(init_start);
    const EmbeddingMatrix emb =
        embed_graph(split.train_graph, config.walks, config.skipgram, &init, mix_seed(seed, 62));
    const auto cos = link_precision(emb, split, Similarity::kCosine);
    const auto euc = link_precision(emb, split, Similarity::kEuclidean);
    rec.cosine_precision = cos.global;
    rec.cosine_per_node = cos.per_node;
    rec.euclidean_precision = euc.global;
    rec.euclidean_per_node = euc.per_node;
  } else {
    const auto init_start = Clock::now();
    const EmbeddingMatrix init = initial_embedding(g, config, mix_seed(seed, 61));
    rec.init_seconds = seconds_since(init_start);
    const EmbeddingMatrix emb = embed_graph(g, config.walks, config.skipgram, &init, mix_seed(seed, 62));
    const auto split = make_classification_split(*labels, seed);
    LogRegOptions lr = config.logreg;
    lr.seed = mix_seed(seed, 63);
    const auto clf = OneVsRestClassifier::fit(emb, *labels, split.train, lr);
    const auto predicted = clf.predict(emb, *labels, split.test);
    std::vector<std::vector<std::uint32_t>> truth;
    truth.reserve(split.test.size());
    for (NodeId v : split.test) truth.push_back(labels->labels[v]);
    const auto f1 = f1_scores(predicted, truth, labels->label_count);
    rec.micro_f1 = f1.micro;
    rec.macro_f1 = f1.macro;
  }
  rec.total_seconds = seconds_since(start);
  return rec;
}

}  // namespace

RunRecord ComparisonReport::mean() const { return combine(runs, mean_of); }

RunRecord ComparisonReport::stddev() const {
  return combine(runs, [](const std::vector<double>& v) {
    if (v.size() < 2) return 0.0;
    const double mu = mean_of(v);
    double ss = 0.0;
    for (double x : v) ss += (x - mu) * (x - mu);
    return std::sqrt(ss / static_cast<double>(v.size() - 1));
  });
}

ComparisonReport run_comparison(const Graph& g, const LabelSet* labels,
                                const ComparisonConfig& config) {
  if (config.seeds.empty()) throw DomainError("at least one seed is required");
  if (config.task == Task::kClassify) {
    if (labels == nullptr) throw DomainError("classification needs labels");
    if (labels->labels.size() != g.node_count()) throw DomainError("labels do not match the graph");
    if (labels->labeled_nodes().size() < 2) throw DomainError("need at least two labeled nodes");
  }
  config.walks.validate();
  config.skipgram.validate();

  ComparisonReport report;
  report.runs.resize(config.seeds.size());
  std::exception_ptr failure;
  std::mutex failure_lock;
  parallel_chunks(config.seeds.size(), config.parallel_runs,
                  [&](std::size_t, std::size_t begin, std::size_t end) {
                    for (std::size_t i = begin; i < end; ++i) {
                      try {
                        report.runs[i] = run_once(g, labels, config, config.seeds[i]);
                      } catch (...) {
                        std::lock_guard lock(failure_lock);
                        if (!failure) failure = std::current_exception();
                        return;
                      }
                    }
                  });
  if (failure) std::rethrow_exception(failure);
  return report;
}

namespace {

void write_settings(std::ostream& out, const ComparisonConfig& config) {
  const auto& sp = config.skipgram;
  out << "# task=" << to_string(config.task) << " init=" << to_string(config.init)
      << " seeds=" << config.seeds.size() << '\n';
  if (config.task == Task::kLink) out << "# alpha=" << config.alpha << '\n';
  out << "# walks_per_node=" << config.walks.walks_per_node
      << " walk_length=" << config.walks.walk_length << " dim=" << sp.dim
      << " window=" << sp.window << " negatives=" << sp.negatives << " epochs=" << sp.epochs
      << " lr=" << sp.initial_lr << '\n';
  if (config.init == InitMode::kGpa) {
    const auto& gpa = config.gpa;
    out << "# k=" << (gpa.k == 0 ? std::string("auto") : std::to_string(gpa.k))
        << " epsilon=" << gpa.partition.epsilon
        << " abstract_walks_per_node=" << gpa.abstract_walks.walks_per_node
        << " abstract_walk_length=" << gpa.abstract_walks.walk_length << " delta="
        << (gpa.propagation.delta == 0.0 ? std::string("1/|V|")
                                          : std::to_string(gpa.propagation.delta))
        << " max_iters=" << gpa.propagation.max_iters << '\n';
  }
  if (config.task == Task::kClassify) {
    out << "# l2=" << config.logreg.l2 << " logreg_epochs=" << config.logreg.epochs
        << " logreg_lr=" << config.logreg.lr << '\n';
  }
}

std::vector<std::pair<std::string, double RunRecord::*>> report_columns(Task task) {
  if (task == Task::kLink) {
    return {{"cosine_precision", &RunRecord::cosine_precision},
            {"euclidean_precision", &RunRecord::euclidean_precision},
            {"cosine_per_node_precision", &RunRecord::cosine_per_node},
            {"euclidean_per_node_precision", &RunRecord::euclidean_per_node},
            {"init_seconds", &RunRecord::init_seconds},
            {"total_seconds", &RunRecord::total_seconds}};
  }
  return {{"micro_f1", &RunRecord::micro_f1},
          {"macro_f1", &RunRecord::macro_f1},
          {"init_seconds", &RunRecord::init_seconds},
          {"total_seconds", &RunRecord::total_seconds}};
}

}  // namespace

void write_report_csv(std::ostream& out, const ComparisonReport& report,
                      const ComparisonConfig& config) {
  write_settings(out, config);
  const auto columns = report_columns(config.task);
  out << "seed";
  for (const auto& [name, field] : columns) out << ',' << name;
  out << '\n';
  auto row = [&](const std::string& head, const RunRecord& r) {
    out << head;
    for (const auto& [name, field] : columns) out << ',' << std::setprecision(6) << r.*field;
    out << '\n';
  };
  for (const auto& r : report.runs) row(std::to_string(r.seed), r);
  row("mean", report.mean());
  row("std", report.stddev());
}

void write_report_table(std::ostream& out, const ComparisonReport& report,
                        const ComparisonConfig& config) {
  write_settings(out, config);
  const auto columns = report_columns(config.task);
  out << std::left << std::setw(8) << "seed";
  for (const auto& [name, field] : columns) out << "  " << name;
  out << '\n';
  auto row = [&](const std::string& head, const RunRecord& r) {
    out << std::left << std::setw(8) << head;
    for (const auto& [name, field] : columns) {
      std::ostringstream cell;
      cell << std::fixed << std::setprecision(4) << r.*field;
      out << "  " << std::right << std::setw(static_cast<int>(name.size())) << cell.str();
    }
    out << '\n';
  };
  for (const auto& r : report.runs) row(std::to_string(r.seed), r);
  row("mean", report.mean());
  row("std", report.stddev());
}

}  // namespace gpa
