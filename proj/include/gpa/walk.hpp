#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "gpa/alias_table.hpp"
#include "gpa/graph.hpp"

namespace gpa {

struct WalkParams {
  std::size_t walks_per_node = 10;
  std::size_t walk_length = 40;

  void validate() const;
};

/// Random walks stored back to back; walk(i) is a view into the token buffer.
class WalkCorpus {
 public:
  WalkCorpus() = default;
  explicit WalkCorpus(std::size_t node_count) : node_count_(node_count) {}

  void add_walk(std::span<const NodeId> walk);

  std::size_t node_count() const noexcept { return node_count_; }
  std::size_t size() const noexcept { return offsets_.size() - 1; }
  bool empty() const noexcept { return size() == 0; }
  std::size_t token_count() const noexcept { return tokens_.size(); }

  std::span<const NodeId> walk(std::size_t i) const noexcept {
    return {tokens_.data() + offsets_[i], tokens_.data() + offsets_[i + 1]};
  }

  /// Occurrences of each node across all walks.
  std::vector<std::uint64_t> frequencies() const;

 private:
  std::size_t node_count_ = 0;
  std::vector<NodeId> tokens_;
  std::vector<std::size_t> offsets_{0};
};

/// One alias table per node over its incident edge weights, so a step from u
/// picks neighbor v with probability w(u, v) / sum of w(u, .). Nodes without
/// neighbors get an empty table.
class TransitionTables {
 public:
  explicit TransitionTables(const Graph& g);

  bool has_exit(NodeId v) const noexcept { return !tables_[v].empty(); }
  NodeId step(NodeId from, Rng& rng) const {
    return graph_->adjacency(from)[tables_[from].sample(rng)].node;
  }
  const AliasTable& table(NodeId v) const { return tables_.at(v); }

 private:
  const Graph* graph_;
  std::vector<AliasTable> tables_;
};

/// walks_per_node rounds; each round visits every node once, in a freshly
/// shuffled order, and starts one weighted walk there. Walks stop early at
/// nodes without neighbors. With threads > 1 the walks are split into
/// contiguous ranges, each drawn from its own seeded generator, so the output
/// depends on (seed, threads) only.
WalkCorpus generate_walks(const Graph& g, const WalkParams& params, std::uint64_t seed,
                          std::size_t threads = 1);

}  // namespace gpa
