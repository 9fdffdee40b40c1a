#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "gpa/graph.hpp"

namespace gpa {

/// G(n, p) via geometric skipping, O(n + m).
Graph erdos_renyi(std::size_t n, double p, std::uint64_t seed);

struct PlantedGraph {
  Graph graph;
  std::vector<std::uint32_t> block;  // planted community of each node
};

/// Stochastic block model with `blocks` equal-size communities (sizes differ
/// by at most one, membership shuffled). Pairs inside a community connect with
/// probability p_in, pairs across communities with p_out.
PlantedGraph planted_partition(std::size_t n, std::size_t blocks, double p_in, double p_out,
                               std::uint64_t seed);

/// Chung-Lu graph: pair (i, j) connects with probability
/// min(1, w_i w_j / sum(w)).
Graph chung_lu(std::span<const double> expected_degree, std::uint64_t seed);

/// Adds one edge from a random node of every non-first component to a random
/// node of the part already joined, so the result is connected.
Graph connect_components(const Graph& g, std::uint64_t seed);

/// Copy of g with new edge weights (one per entry of g.edges()).
Graph reweight(const Graph& g, std::span<const double> weights);

}  // namespace gpa
