#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "gpa/common.hpp"

namespace gpa {

struct Edge {
  NodeId u;
  NodeId v;
  double weight = 1.0;
};

struct Neighbor {
  NodeId node;
  double weight;
};

/// How repeated (u, v) pairs in the input are combined.
enum class DuplicatePolicy {
  kSum,       // weights add up
  kCollapse,  // the first occurrence wins
};

/// Undirected graph with dense node ids and CSR adjacency.
///
/// Each undirected edge is stored once in edges() with u < v, sorted by
/// (u, v), and twice in the adjacency (once per endpoint). Immutable after
/// construction.
class Graph {
 public:
  Graph() = default;

  /// Normalizes an arbitrary edge list: drops self-loops (with a warning),
  /// merges duplicates in either orientation according to `policy`.
  /// Throws DomainError for out-of-range endpoints or non-positive weights.
  static Graph from_edges(std::size_t node_count, std::span<const Edge> edges,
                          DuplicatePolicy policy = DuplicatePolicy::kSum);

  std::size_t node_count() const noexcept { return node_count_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  bool empty() const noexcept { return node_count_ == 0; }

  std::span<const Edge> edges() const noexcept { return edges_; }

  /// Throws std::out_of_range for v >= node_count().
  std::span<const Neighbor> neighbors(NodeId v) const;

  std::size_t degree(NodeId v) const {
    return offsets_.at(v + 1) - offsets_[v];
  }
  double weighted_degree(NodeId v) const;

  /// Unchecked adjacency access for hot loops.
  std::span<const Neighbor> adjacency(NodeId v) const noexcept {
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
  }

  bool has_edge(NodeId u, NodeId v) const;

 private:
  std::size_t node_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_{0};
  std::vector<Neighbor> adjacency_;
};

/// Subgraph induced on `nodes` (given in any order); node i of the result is
/// nodes[i].
Graph induced_subgraph(const Graph& g, std::span<const NodeId> nodes);

/// A graph read from text together with the original identifiers.
struct LoadedGraph {
  Graph graph;
  /// original_ids[dense] is the identifier used in the file.
  std::vector<std::int64_t> original_ids;

  std::unordered_map<std::int64_t, NodeId> dense_index() const;
};

/// Parses "u v" / "u v w" lines ('#' comments, blank lines skipped).
/// Dense ids are assigned in increasing order of the original ids. In weighted
/// mode duplicate edges sum their weights; otherwise the weight column is
/// ignored and duplicates collapse to a single unit edge.
LoadedGraph read_edge_list(std::istream& in, bool weighted);
LoadedGraph load_edge_list(const std::string& path, bool weighted);

/// Writes edges once each, using original ids when provided.
void write_edge_list(std::ostream& out, const Graph& g, bool weighted,
                     std::span<const std::int64_t> original_ids = {});
void save_edge_list(const std::string& path, const Graph& g, bool weighted,
                    std::span<const std::int64_t> original_ids = {});

/// Multi-label ground truth keyed by dense node id.
struct LabelSet {
  std::vector<std::vector<std::uint32_t>> labels;  // sorted, per node; empty = unlabeled
  std::size_t label_count = 0;

  std::vector<NodeId> labeled_nodes() const;
};

/// Reads "node_id label[,label...]" lines; node ids are looked up through the
/// loaded graph's id map, label ids are remapped densely in increasing order.
LabelSet read_labels(std::istream& in, const LoadedGraph& graph);
LabelSet load_labels(const std::string& path, const LoadedGraph& graph);

/// Component index per node; components are numbered in order of their
/// smallest node id.
std::vector<std::uint32_t> connected_components(const Graph& g);

/// Sorted nodes of the largest component; ties go to the component holding the
/// smallest node id. Empty graph yields an empty set.
std::vector<NodeId> largest_connected_component(const Graph& g);

}  // namespace gpa
