#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gpa/embedding.hpp"
#include "gpa/graph.hpp"
#include "gpa/propagate.hpp"
#include "gpa/skipgram.hpp"
#include "gpa/walk.hpp"

namespace gpa {

using NodePair = std::pair<NodeId, NodeId>;

/// Edge hold-out split for link prediction. All ids are local to the largest
/// component C of the residual graph; component[i] is the original id of
/// local node i.
struct LinkPredSplit {
  Graph train_graph;
  std::vector<NodeId> component;
  std::vector<NodePair> positives;
  std::vector<NodePair> negatives;
  /// Positives incident to each local node (the per-node t).
  std::vector<std::size_t> per_node_positive;
  /// ceil(alpha |E|) edges held out before restricting to C.
  std::size_t held_out = 0;
  /// Positives dropped because no balanced set of negatives could be found.
  std::size_t pruned_positives = 0;

  std::size_t test_size() const noexcept { return positives.size() + negatives.size(); }
};

/// Holds out ceil(alpha |E|) random edges, keeps the largest component of the
/// rest, and pairs every node's held-out edges with the same number of random
/// non-edges inside the component. A negative slot that cannot be filled after
/// 100 random partners per node (and a swap repair) costs one positive, which
/// is logged. Throws DomainError unless 0 < alpha < 1 and ceil(alpha |E|) <
/// |E|, or when no positive survives.
LinkPredSplit make_link_split(const Graph& g, double alpha, std::uint64_t seed);

enum class Similarity { kCosine, kEuclidean };

struct LinkPrecision {
  /// Fraction of positives among the |positives| most similar test pairs.
  double global = 0.0;
  /// Fraction of positives in the union of every node's top-t pairs.
  double per_node = 0.0;
};

/// Rows of `emb` are local component ids. Ties in similarity rank negatives
/// first, so degenerate embeddings never look better than they are.
LinkPrecision link_precision(const EmbeddingMatrix& emb, const LinkPredSplit& split,
                             Similarity metric);

struct ClassificationSplit {
  std::vector<NodeId> train;
  std::vector<NodeId> test;
};

/// Shuffles the labeled nodes and cuts them in half (train gets the extra one).
ClassificationSplit make_classification_split(const LabelSet& labels, std::uint64_t seed);

struct LogRegOptions {
  double l2 = 1.0;
  std::size_t epochs = 100;
  double lr = 0.05;
  std::uint64_t seed = 1;
};

/// Mean logistic loss plus l2 / (2N) ||w||^2 (the bias is not penalized).
/// Rows of `x` have `dim` values; labels are 0 or 1.
double logreg_objective(std::span<const double> w, double bias, std::span<const double> x,
                        std::span<const double> y, std::size_t dim, double l2);
/// Gradient of logreg_objective; grad_w has dim entries.
void logreg_gradient(std::span<const double> w, double bias, std::span<const double> x,
                     std::span<const double> y, std::size_t dim, double l2,
                     std::span<double> grad_w, double& grad_bias);

/// One L2-regularized binary logistic regression per label.
class OneVsRestClassifier {
 public:
  static OneVsRestClassifier fit(const EmbeddingMatrix& emb, const LabelSet& labels,
                                 std::span<const NodeId> train, const LogRegOptions& options);

  std::size_t label_count() const noexcept { return trained_.size(); }
  /// Probability of the label; 0 for labels never seen in training.
  double probability(std::size_t label, std::span<const float> x) const;
  /// The m most probable labels, ties to the smaller label id.
  std::vector<std::uint32_t> top_labels(std::span<const float> x, std::size_t m) const;
  /// Predicts each node's true label count worth of labels.
  std::vector<std::vector<std::uint32_t>> predict(const EmbeddingMatrix& emb, const LabelSet& labels,
                                                  std::span<const NodeId> nodes) const;

 private:
  std::size_t dim_ = 0;
  std::vector<double> weights_;  // label-major, dim_ + 1 per label (bias last)
  std::vector<bool> trained_;
};

struct F1Scores {
  double micro = 0.0;
  double macro = 0.0;
};

/// Micro: F1 of pooled decisions. Macro: unweighted mean of per-label F1 over
/// all label_count labels, where a label with no true and no predicted
/// positives scores 0.
F1Scores f1_scores(const std::vector<std::vector<std::uint32_t>>& predicted,
                   const std::vector<std::vector<std::uint32_t>>& truth, std::size_t label_count);

enum class InitMode { kGpa, kRandom };
enum class Task { kLink, kClassify };

std::string to_string(InitMode mode);
std::string to_string(Task task);

struct ComparisonConfig {
  InitMode init = InitMode::kGpa;
  Task task = Task::kLink;
  std::vector<std::uint64_t> seeds;
  double alpha = 0.1;
  WalkParams walks{10, 40};
  SkipGramParams skipgram;
  GpaConfig gpa;
  LogRegOptions logreg;
  /// Seeds evaluated concurrently; each run is single-threaded inside unless
  /// skipgram.threads says otherwise.
  std::size_t parallel_runs = 1;
};

struct RunRecord {
  std::uint64_t seed = 0;
  double cosine_precision = 0.0;
  double euclidean_precision = 0.0;
  double cosine_per_node = 0.0;
  double euclidean_per_node = 0.0;
  double micro_f1 = 0.0;
  double macro_f1 = 0.0;
  double init_seconds = 0.0;
  double total_seconds = 0.0;
};

struct ComparisonReport {
  std::vector<RunRecord> runs;

  RunRecord mean() const;
  RunRecord stddev() const;
};

/// One embedding run per seed on the task's training graph, initialized by GPA
/// or at random, then scored. Classification needs labels.
ComparisonReport run_comparison(const Graph& g, const LabelSet* labels,
                                const ComparisonConfig& config);

/// CSV: '#'-prefixed settings lines, header, one row per seed, mean and std rows.
void write_report_csv(std::ostream& out, const ComparisonReport& report,
                      const ComparisonConfig& config);
void write_report_table(std::ostream& out, const ComparisonReport& report,
                        const ComparisonConfig& config);

}  // namespace gpa
