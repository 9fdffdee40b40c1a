#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "gpa/graph.hpp"
#include "gpa/partition.hpp"

namespace gpa {

/// Weighted quotient graph of a partitioning: one node per block, one edge per
/// pair of blocks joined by at least one original edge, weighted by the number
/// of such edges. Abstract node ids equal block ids.
struct AbstractGraph {
  Graph core;
  std::vector<BlockId> node_to_abstract;  // original node -> abstract node
  std::vector<std::size_t> block_sizes;

  std::size_t k() const noexcept { return core.node_count(); }
};

/// Intra-block edges are dropped, so the result has no self-loops.
AbstractGraph build_abstract(const Graph& g, const Partitioning& p);

/// "node_id abstract_id" per line.
void write_abstract_mapping(std::ostream& out, const AbstractGraph& ga,
                            std::span<const std::int64_t> original_ids = {});
void save_abstract_mapping(const std::string& path, const AbstractGraph& ga,
                           std::span<const std::int64_t> original_ids = {});

}  // namespace gpa
