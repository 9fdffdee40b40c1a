#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "gpa/abstract_graph.hpp"
#include "gpa/embedding.hpp"
#include "gpa/partition.hpp"
#include "gpa/skipgram.hpp"

namespace gpa {

struct PropagationConfig {
  /// Convergence threshold on the mean per-node movement; 0 selects 1/|V|.
  double delta = 0.0;
  std::size_t max_iters = 100;
  std::size_t threads = 1;

  double effective_delta(std::size_t node_count) const;
  void validate() const;
};

struct PropagationResult {
  EmbeddingMatrix embedding;
  /// Mean movement after each iteration.
  std::vector<double> delta_trace;
  /// Neighbor rows read in each iteration; always sum of |N(v)|.
  std::vector<std::uint64_t> neighbor_visits;
  bool converged = false;

  std::size_t iterations() const noexcept { return delta_trace.size(); }
};

/// Synchronous neighbor averaging starting from `start`. Each iteration sets
/// f'(v) = (f(v) + mean of f(u) over N(v)) / 2 for every node with neighbors,
/// from the previous iteration's values only; isolated nodes keep their row.
/// Stops once the mean Euclidean movement over all |V| nodes is <= delta, or
/// after max_iters iterations. Results do not depend on the thread count.
PropagationResult propagate_from(const Graph& g, EmbeddingMatrix start, const PropagationConfig& cfg);

/// Every node inherits the embedding of its abstract node, then propagate_from.
/// Throws DomainError when f_a does not have one row per abstract node or the
/// mapping does not cover g.
PropagationResult propagate(const Graph& g, const AbstractGraph& ga, const EmbeddingMatrix& f_a,
                            const PropagationConfig& cfg);

EmbeddingMatrix inherit_embedding(const AbstractGraph& ga, const EmbeddingMatrix& f_a);

/// Settings for the whole initialization pipeline.
struct GpaConfig {
  /// Number of blocks; 0 selects default_k().
  std::size_t k = 0;
  PartitionOptions partition;
  WalkParams abstract_walks{40, 40};
  SkipGramParams abstract_skipgram;
  PropagationConfig propagation;
  /// When set, picks the abstract walk parameters per abstract graph (for
  /// example from a fitted hyperparameter model), overriding abstract_walks.
  std::function<WalkParams(const AbstractGraph&)> choose_walks;
};

struct GpaInitResult {
  Partitioning partitioning;
  AbstractGraph abstract_graph;
  WalkParams abstract_walks;
  EmbeddingMatrix abstract_embedding;
  EmbeddingMatrix inherited;
  PropagationResult propagation;
  double partition_seconds = 0.0;
  double embed_seconds = 0.0;
  double propagate_seconds = 0.0;

  const EmbeddingMatrix& embedding() const noexcept { return propagation.embedding; }
  double total_seconds() const noexcept {
    return partition_seconds + embed_seconds + propagate_seconds;
  }
};

/// partition -> build_abstract -> embed_abstract -> propagate, keeping every
/// intermediate result. Throws DomainError on an empty graph.
GpaInitResult run_gpa_init(const Graph& g, const GpaConfig& cfg, std::uint64_t seed);

/// The initial embedding matrix alone.
EmbeddingMatrix init_for_graph(const Graph& g, const GpaConfig& cfg, std::uint64_t seed);

/// Mean-movement trace as "iteration,delta" CSV.
void write_delta_trace(std::ostream& out, const PropagationResult& result);

}  // namespace gpa
