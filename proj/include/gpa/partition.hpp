#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "gpa/graph.hpp"

namespace gpa {

/// Node -> block assignment with k blocks and balance factor epsilon.
struct Partitioning {
  std::vector<BlockId> assignment;
  std::size_t k = 1;
  double epsilon = 0.05;

  std::vector<std::size_t> block_sizes() const;
  std::size_t max_block_size() const;
};

struct PartitionOptions {
  double epsilon = 0.05;
  std::uint64_t seed = 1;
  /// Maximum number of refinement passes per level.
  int refine_passes = 8;
  /// Graph-growing attempts per bisection; the best cut wins.
  int bisection_trials = 4;
};

/// ceil(sqrt(node_count)), clamped to [1, node_count].
std::size_t default_k(const Graph& g);
std::size_t default_k(std::size_t node_count);

/// Largest admissible block size: floor((1 + epsilon) * ceil(n / k)).
std::size_t block_capacity(std::size_t node_count, std::size_t k, double epsilon);

/// Multilevel (k, epsilon)-balanced partitioning minimizing the edge cut.
///
/// Heavy-edge matching coarsens the graph to at most max(2k, 200) nodes,
/// recursive greedy graph-growing bisection (each bisection polished by FM)
/// seeds the coarsest level, and boundary k-way refinement with explicit
/// balancing runs at every level on the way back. Isolated nodes are placed
/// last, one at a time into the lightest block. Every block is non-empty and
/// no block exceeds block_capacity(). Deterministic for a fixed seed.
///
/// Throws DomainError unless 1 <= k <= node_count and 0 < epsilon < 1.
Partitioning partition(const Graph& g, std::size_t k, const PartitionOptions& options = {});

/// Number of edges whose endpoints lie in different blocks.
std::size_t edge_cut(const Graph& g, const Partitioning& p);

/// Uniformly random assignment that fills blocks to ceil(n / k) round-robin
/// before shuffling; used as a quality baseline.
Partitioning random_balanced_partition(std::size_t node_count, std::size_t k,
                                       std::uint64_t seed);

/// "node_id block_id" per line.
void write_partition(std::ostream& out, const Partitioning& p,
                     std::span<const std::int64_t> original_ids = {});
void save_partition(const std::string& path, const Partitioning& p,
                    std::span<const std::int64_t> original_ids = {});

}  // namespace gpa
