#include "gpa/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace gpa {

namespace {

/// Calls emit(i) for each index in [0, total) independently with probability p.
template <typename Emit>
void bernoulli_indices(std::uint64_t total, double p, Rng& rng, Emit&& emit) {
  if (p <= 0.0 || total == 0) return;
  if (p >= 1.0) {
    for (std::uint64_t i = 0; i < total; ++i) emit(i);
    return;
  }
  const double log_q = std::log1p(-p);
  std::uint64_t i = 0;
  while (true) {
    const double r = uniform01(rng);
    const double skip = std::floor(std::log1p(-r) / log_q);
    if (skip >= static_cast<double>(total - i)) return;
    i += static_cast<std::uint64_t>(skip);
    emit(i);
    if (++i >= total) return;
  }
}

/// Pair index -> (row, col) with col < row for the strict lower triangle.
std::pair<std::uint64_t, std::uint64_t> triangle_pair(std::uint64_t idx) {
  auto row = static_cast<std::uint64_t>((1.0 + std::sqrt(1.0 + 8.0 * static_cast<double>(idx))) / 2.0);
  while (row * (row - 1) / 2 > idx) --row;
  while ((row + 1) * row / 2 <= idx) ++row;
  return {row, idx - row * (row - 1) / 2};
}

}  // namespace

Graph erdos_renyi(std::size_t n, double p, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Edge> edges;
  const std::uint64_t pairs = static_cast<std::uint64_t>(n) * (n > 0 ? n - 1 : 0) / 2;
  bernoulli_indices(pairs, p, rng, [&](std::uint64_t idx) {
    auto [a, b] = triangle_pair(idx);
    edges.push_back({static_cast<NodeId>(a), static_cast<NodeId>(b), 1.0});
  });
  return Graph::from_edges(n, edges);
}

PlantedGraph planted_partition(std::size_t n, std::size_t blocks, double p_in, double p_out,
                               std::uint64_t seed) {
  if (blocks < 1 || blocks > n) throw DomainError("planted partition needs 1 <= blocks <= n");
  Rng rng(seed);
  PlantedGraph out;
  out.block.resize(n);
  for (std::size_t v = 0; v < n; ++v) out.block[v] = static_cast<std::uint32_t>(v % blocks);
  shuffle(out.block, rng);

  std::vector<std::vector<NodeId>> members(blocks);
  for (NodeId v = 0; v < n; ++v) members[out.block[v]].push_back(v);

  std::vector<Edge> edges;
  for (std::size_t a = 0; a < blocks; ++a) {
    const auto& ma = members[a];
    const std::uint64_t inside = static_cast<std::uint64_t>(ma.size()) * (ma.size() - 1) / 2;
    bernoulli_indices(inside, p_in, rng, [&](std::uint64_t idx) {
      auto [i, j] = triangle_pair(idx);
      edges.push_back({ma[i], ma[j], 1.0});
    });
    for (std::size_t b = a + 1; b < blocks; ++b) {
      const auto& mb = members[b];
      bernoulli_indices(static_cast<std::uint64_t>(ma.size()) * mb.size(), p_out, rng,
                        [&](std::uint64_t idx) {
                          edges.push_back({ma[idx / mb.size()], mb[idx % mb.size()], 1.0});
                        });
    }
  }
  out.graph = Graph::from_edges(n, edges);
  return out;
}

Graph chung_lu(std::span<const double> expected_degree, std::uint64_t seed) {
  const std::size_t n = expected_degree.size();
  const double total = std::accumulate(expected_degree.begin(), expected_degree.end(), 0.0);
  Rng rng(seed);
  std::vector<Edge> edges;
  if (total <= 0.0) return Graph::from_edges(n, edges);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double p = std::min(1.0, expected_degree[i] * expected_degree[j] / total);
      if (uniform01(rng) < p) edges.push_back({static_cast<NodeId>(i), static_cast<NodeId>(j), 1.0});
    }
  }
  return Graph::from_edges(n, edges);
}

Graph connect_components(const Graph& g, std::uint64_t seed) {
  if (g.empty()) return g;
  const auto comp = connected_components(g);
  const std::uint32_t count = *std::max_element(comp.begin(), comp.end()) + 1;
  if (count == 1) return g;
  std::vector<std::vector<NodeId>> members(count);
  for (NodeId v = 0; v < g.node_count(); ++v) members[comp[v]].push_back(v);

  Rng rng(seed);
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  std::vector<NodeId> joined = members[0];
  for (std::uint32_t c = 1; c < count; ++c) {
    const NodeId a = members[c][uniform_index(rng, members[c].size())];
    const NodeId b = joined[uniform_index(rng, joined.size())];
    edges.push_back({a, b, 1.0});
    joined.insert(joined.end(), members[c].begin(), members[c].end());
  }
  return Graph::from_edges(g.node_count(), edges);
}

Graph reweight(const Graph& g, std::span<const double> weights) {
  if (weights.size() != g.edge_count()) throw DomainError("one weight per edge required");
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  for (std::size_t i = 0; i < edges.size(); ++i) edges[i].weight = weights[i];
  return Graph::from_edges(g.node_count(), edges);
}

}  // namespace gpa
