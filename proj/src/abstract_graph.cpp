#include "gpa/abstract_graph.hpp"

#include <fstream>
#include <ostream>

namespace gpa {

AbstractGraph build_abstract(const Graph& g, const Partitioning& p) {
  if (p.assignment.size() != g.node_count()) {
    throw DomainError("partitioning does not cover the graph");
  }
  AbstractGraph ga;
  ga.node_to_abstract = p.assignment;
  ga.block_sizes.assign(p.k, 0);
  for (BlockId b : p.assignment) {
    if (b >= p.k) throw DomainError("block id out of range");
    ++ga.block_sizes[b];
  }
  std::vector<Edge> crossing;
  for (const Edge& e : g.edges()) {
    const BlockId a = p.assignment[e.u];
    const BlockId b = p.assignment[e.v];
    // every crossing edge counts once regardless of its own weight
    if (a != b) crossing.push_back({a, b, 1.0});
  }
  ga.core = Graph::from_edges(p.k, crossing, DuplicatePolicy::kSum);
  return ga;
}

void write_abstract_mapping(std::ostream& out, const AbstractGraph& ga,
                            std::span<const std::int64_t> original_ids) {
  for (std::size_t v = 0; v < ga.node_to_abstract.size(); ++v) {
    out << (original_ids.empty() ? static_cast<std::int64_t>(v) : original_ids[v]) << ' '
        << ga.node_to_abstract[v] << '\n';
  }
}

void save_abstract_mapping(const std::string& path, const AbstractGraph& ga,
                           std::span<const std::int64_t> original_ids) {
  std::ofstream out(path);
  if (!out) throw DomainError("cannot write mapping file: " + path);
  write_abstract_mapping(out, ga, original_ids);
}

}  // namespace gpa
