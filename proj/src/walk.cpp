#include "gpa/walk.hpp"

#include <numeric>

#include "gpa/parallel.hpp"

namespace gpa {

void WalkParams::validate() const {
  if (walks_per_node < 1 || walk_length < 1) {
    throw DomainError("walks_per_node and walk_length must be at least 1");
  }
}

void WalkCorpus::add_walk(std::span<const NodeId> walk) {
  tokens_.insert(tokens_.end(), walk.begin(), walk.end());
  offsets_.push_back(tokens_.size());
}

std::vector<std::uint64_t> WalkCorpus::frequencies() const {
  std::vector<std::uint64_t> freq(node_count_, 0);
  for (NodeId v : tokens_) ++freq[v];
  return freq;
}

TransitionTables::TransitionTables(const Graph& g) : graph_(&g), tables_(g.node_count()) {
  std::vector<double> weights;
  for (NodeId v = 0; v < g.node_count(); ++v) {
    auto adj = g.adjacency(v);
    if (adj.empty()) continue;
    weights.clear();
    for (const Neighbor& nb : adj) weights.push_back(nb.weight);
    tables_[v] = AliasTable::build(weights);
  }
}

WalkCorpus generate_walks(const Graph& g, const WalkParams& params, std::uint64_t seed,
                          std::size_t threads) {
  params.validate();
  if (g.empty()) throw DomainError("cannot generate walks on an empty graph");
  const std::size_t n = g.node_count();
  const TransitionTables transitions(g);

  // start node of every walk, round by round
  std::vector<NodeId> starts(n * params.walks_per_node);
  Rng order_rng(mix_seed(seed, 0));
  std::vector<NodeId> order(n);
  std::iota(order.begin(), order.end(), NodeId{0});
  for (std::size_t r = 0; r < params.walks_per_node; ++r) {
    shuffle(order, order_rng);
    std::copy(order.begin(), order.end(), starts.begin() + static_cast<std::ptrdiff_t>(r * n));
  }

  threads = std::max<std::size_t>(1, threads);
  std::vector<WalkCorpus> parts(threads, WalkCorpus(n));
  parallel_chunks(starts.size(), threads, [&](std::size_t worker, std::size_t begin, std::size_t end) {
    Rng rng(mix_seed(seed, worker + 1));
    std::vector<NodeId> walk;
    walk.reserve(params.walk_length);
    for (std::size_t i = begin; i < end; ++i) {
      walk.clear();
      NodeId cur = starts[i];
      walk.push_back(cur);
      while (walk.size() < params.walk_length && transitions.has_exit(cur)) {
        cur = transitions.step(cur, rng);
        walk.push_back(cur);
      }
      parts[worker].add_walk(walk);
    }
  });

  if (threads == 1) return std::move(parts.front());
  WalkCorpus corpus(n);
  for (const WalkCorpus& part : parts) {
    for (std::size_t i = 0; i < part.size(); ++i) corpus.add_walk(part.walk(i));
  }
  return corpus;
}

}  // namespace gpa
