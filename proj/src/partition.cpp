#include "gpa/partition.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <numeric>
#include <ostream>
#include <queue>

namespace gpa {

std::vector<std::size_t> Partitioning::block_sizes() const {
  std::vector<std::size_t> sizes(k, 0);
  for (BlockId b : assignment) ++sizes.at(b);
  return sizes;
}

std::size_t Partitioning::max_block_size() const {
  auto sizes = block_sizes();
  return sizes.empty() ? 0 : *std::max_element(sizes.begin(), sizes.end());
}

std::size_t default_k(std::size_t node_count) {
  if (node_count == 0) throw DomainError("default_k requires at least one node");
  auto k = static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(node_count))));
  // guard against sqrt rounding on perfect squares
  while (k > 1 && (k - 1) * (k - 1) >= node_count) --k;
  while (k * k < node_count) ++k;
  return std::clamp<std::size_t>(k, 1, node_count);
}

std::size_t default_k(const Graph& g) { return default_k(g.node_count()); }

std::size_t block_capacity(std::size_t node_count, std::size_t k, double epsilon) {
  const std::size_t ideal = (node_count + k - 1) / k;
  // the small bias keeps e.g. 1.05 * 20 from flooring to 20.999... -> 20
  return static_cast<std::size_t>(std::floor((1.0 + epsilon) * static_cast<double>(ideal) + 1e-9));
}

namespace {

using Weight = std::int64_t;

/// Weighted working graph used across the multilevel hierarchy.
struct WorkGraph {
  std::vector<std::size_t> xadj{0};
  std::vector<std::uint32_t> adj;
  std::vector<Weight> ewgt;
  std::vector<Weight> vwgt;

  std::size_t size() const { return vwgt.size(); }
  Weight total_weight() const { return std::accumulate(vwgt.begin(), vwgt.end(), Weight{0}); }
  Weight max_node_weight() const {
    return vwgt.empty() ? 0 : *std::max_element(vwgt.begin(), vwgt.end());
  }
};

WorkGraph work_graph_from(const Graph& g, std::span<const NodeId> nodes) {
  constexpr std::uint32_t kAbsent = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> local(g.node_count(), kAbsent);
  for (std::size_t i = 0; i < nodes.size(); ++i) local[nodes[i]] = static_cast<std::uint32_t>(i);
  WorkGraph w;
  w.vwgt.assign(nodes.size(), 1);
  for (NodeId v : nodes) {
    for (const Neighbor& nb : g.adjacency(v)) {
      if (local[nb.node] == kAbsent) continue;
      w.adj.push_back(local[nb.node]);
      w.ewgt.push_back(1);  // the cut counts edges, not weights
    }
    w.xadj.push_back(w.adj.size());
  }
  return w;
}

/// Induced working subgraph on `members` (indices into g).
WorkGraph work_subgraph(const WorkGraph& g, std::span<const std::uint32_t> members) {
  constexpr std::uint32_t kAbsent = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> local(g.size(), kAbsent);
  for (std::size_t i = 0; i < members.size(); ++i) local[members[i]] = static_cast<std::uint32_t>(i);
  WorkGraph s;
  s.vwgt.reserve(members.size());
  for (std::uint32_t v : members) {
    s.vwgt.push_back(g.vwgt[v]);
    for (std::size_t e = g.xadj[v]; e < g.xadj[v + 1]; ++e) {
      if (local[g.adj[e]] == kAbsent) continue;
      s.adj.push_back(local[g.adj[e]]);
      s.ewgt.push_back(g.ewgt[e]);
    }
    s.xadj.push_back(s.adj.size());
  }
  return s;
}

struct CoarseLevel {
  WorkGraph graph;
  std::vector<std::uint32_t> fine_to_coarse;
};

/// Heavy-edge matching; nodes are visited in a seeded random order and ties
/// between equally heavy edges go to the smallest neighbor id.
CoarseLevel coarsen(const WorkGraph& g, Weight max_node_weight, Rng& rng) {
  constexpr std::uint32_t kUnmatched = std::numeric_limits<std::uint32_t>::max();
  const std::size_t n = g.size();
  std::vector<std::uint32_t> order(n);
  std::iota(order.begin(), order.end(), 0u);
  shuffle(order, rng);

  std::vector<std::uint32_t> match(n, kUnmatched);
  for (std::uint32_t v : order) {
    if (match[v] != kUnmatched) continue;
    std::uint32_t best = v;
    Weight best_w = -1;
    for (std::size_t e = g.xadj[v]; e < g.xadj[v + 1]; ++e) {
      const std::uint32_t u = g.adj[e];
      if (match[u] != kUnmatched || u == v) continue;
      if (g.vwgt[u] + g.vwgt[v] > max_node_weight) continue;
      if (g.ewgt[e] > best_w || (g.ewgt[e] == best_w && u < best)) {
        best = u;
        best_w = g.ewgt[e];
      }
    }
    match[v] = best;
    match[best] = v;
  }

  CoarseLevel level;
  level.fine_to_coarse.assign(n, kUnmatched);
  std::vector<std::pair<std::uint32_t, std::uint32_t>> members;
  for (std::uint32_t v = 0; v < n; ++v) {
    if (level.fine_to_coarse[v] != kUnmatched) continue;
    const auto c = static_cast<std::uint32_t>(members.size());
    level.fine_to_coarse[v] = c;
    level.fine_to_coarse[match[v]] = c;
    members.emplace_back(v, match[v]);
  }

  WorkGraph& cg = level.graph;
  const std::size_t cn = members.size();
  cg.vwgt.resize(cn);
  std::vector<std::int64_t> slot(cn, -1);
  for (std::uint32_t c = 0; c < cn; ++c) {
    const auto [a, b] = members[c];
    cg.vwgt[c] = g.vwgt[a] + (a != b ? g.vwgt[b] : 0);
    const std::size_t row_begin = cg.adj.size();
    for (std::uint32_t v : {a, b}) {
      for (std::size_t e = g.xadj[v]; e < g.xadj[v + 1]; ++e) {
        const std::uint32_t cu = level.fine_to_coarse[g.adj[e]];
        if (cu == c) continue;
        if (slot[cu] < 0) {
          slot[cu] = static_cast<std::int64_t>(cg.adj.size());
          cg.adj.push_back(cu);
          cg.ewgt.push_back(g.ewgt[e]);
        } else {
          cg.ewgt[static_cast<std::size_t>(slot[cu])] += g.ewgt[e];
        }
      }
      if (a == b) break;
    }
    for (std::size_t e = row_begin; e < cg.adj.size(); ++e) slot[cg.adj[e]] = -1;
    cg.xadj.push_back(cg.adj.size());
  }
  return level;
}

Weight cut_of(const WorkGraph& g, std::span<const std::uint32_t> part) {
  Weight cut = 0;
  for (std::uint32_t v = 0; v < g.size(); ++v) {
    for (std::size_t e = g.xadj[v]; e < g.xadj[v + 1]; ++e) {
      if (part[v] != part[g.adj[e]]) cut += g.ewgt[e];
    }
  }
  return cut / 2;
}

/// Max-heap entry: larger gain first, then smaller node id.
struct GainEntry {
  Weight gain;
  std::uint32_t node;
  bool operator<(const GainEntry& o) const {
    return gain != o.gain ? gain < o.gain : node > o.node;
  }
};

/// Two-way Fiduccia-Mattheyses refinement. side[v] is 0 (left) or 1.
/// The left weight must end within [target - tolerance, target + tolerance]
/// whenever such a state is reached during the passes.
void fm_refine(const WorkGraph& g, std::vector<std::uint32_t>& side, Weight target_left,
               Weight tolerance, int max_passes) {
  const std::size_t n = g.size();
  if (n < 2) return;
  const Weight lo = target_left - tolerance;
  const Weight hi = target_left + tolerance;
  auto in_bounds = [&](Weight left) { return left >= lo && left <= hi; };
  auto distance = [&](Weight left) { return left < lo ? lo - left : (left > hi ? left - hi : 0); };

  std::vector<Weight> gain(n);
  std::vector<char> locked(n);
  for (int pass = 0; pass < max_passes; ++pass) {
    Weight left = 0;
    for (std::uint32_t v = 0; v < n; ++v) {
      if (side[v] == 0) left += g.vwgt[v];
    }
    Weight cut = 0;
    std::priority_queue<GainEntry> heap[2];
    for (std::uint32_t v = 0; v < n; ++v) {
      Weight ext = 0, in = 0;
      for (std::size_t e = g.xadj[v]; e < g.xadj[v + 1]; ++e) {
        (side[g.adj[e]] == side[v] ? in : ext) += g.ewgt[e];
      }
      gain[v] = ext - in;
      cut += ext;
      locked[v] = 0;
      heap[side[v]].push({gain[v], v});
    }
    cut /= 2;

    const Weight start_cut = cut;
    const Weight start_dist = distance(left);
    Weight best_cut = cut;
    Weight best_dist = start_dist;
    std::size_t best_prefix = 0;
    std::vector<std::uint32_t> moves;
    const std::size_t stall_limit = std::max<std::size_t>(25, n / 20);

    auto top = [&](int s) -> std::int64_t {
      while (!heap[s].empty()) {
        const GainEntry t = heap[s].top();
        if (locked[t.node] || gain[t.node] != t.gain || side[t.node] != static_cast<std::uint32_t>(s)) {
          heap[s].pop();
          continue;
        }
        return t.node;
      }
      return -1;
    };
    auto feasible = [&](std::uint32_t v) {
      const Weight next = side[v] == 0 ? left - g.vwgt[v] : left + g.vwgt[v];
      return in_bounds(next) || distance(next) < distance(left);
    };

    while (true) {
      std::int64_t pick = -1;
      for (int s = 0; s < 2; ++s) {
        const std::int64_t cand = top(s);
        if (cand < 0 || !feasible(static_cast<std::uint32_t>(cand))) continue;
        if (pick < 0 || gain[cand] > gain[pick] ||
            (gain[cand] == gain[pick] && cand < pick)) {
          pick = cand;
        }
      }
      if (pick < 0) break;
      const auto v = static_cast<std::uint32_t>(pick);
      const std::uint32_t from = side[v];
      heap[from].pop();
      left += from == 0 ? -g.vwgt[v] : g.vwgt[v];
      cut -= gain[v];
      side[v] = 1 - from;
      locked[v] = 1;
      gain[v] = -gain[v];
      moves.push_back(v);
      for (std::size_t e = g.xadj[v]; e < g.xadj[v + 1]; ++e) {
        const std::uint32_t u = g.adj[e];
        if (locked[u]) continue;
        gain[u] += side[u] == side[v] ? -2 * g.ewgt[e] : 2 * g.ewgt[e];
        heap[side[u]].push({gain[u], u});
      }
      const Weight dist = distance(left);
      if (dist < best_dist || (dist == best_dist && cut < best_cut)) {
        best_cut = cut;
        best_dist = dist;
        best_prefix = moves.size();
      }
      if (moves.size() - best_prefix > stall_limit) break;
    }
    for (std::size_t i = moves.size(); i > best_prefix; --i) {
      side[moves[i - 1]] ^= 1u;
    }
    if (!(best_dist < start_dist || (best_dist == start_dist && best_cut < start_cut))) break;
  }
}

/// Greedy graph-growing bisection. Returns side[v] in {0, 1} with the left
/// side weighing approximately target_left.
std::vector<std::uint32_t> bisect(const WorkGraph& g, Weight target_left, Weight tolerance,
                                  const PartitionOptions& options, Rng& rng) {
  const std::size_t n = g.size();
  std::vector<std::uint32_t> best(n, 1);
  Weight best_cut = std::numeric_limits<Weight>::max();
  Weight best_dist = std::numeric_limits<Weight>::max();

  std::vector<std::uint32_t> order(n);
  std::iota(order.begin(), order.end(), 0u);
  for (int trial = 0; trial < std::max(1, options.bisection_trials); ++trial) {
    shuffle(order, rng);
    std::vector<std::uint32_t> side(n, 1);
    std::vector<Weight> gain(n);
    for (std::uint32_t v = 0; v < n; ++v) {
      gain[v] = -std::accumulate(g.ewgt.begin() + static_cast<std::ptrdiff_t>(g.xadj[v]),
                                 g.ewgt.begin() + static_cast<std::ptrdiff_t>(g.xadj[v + 1]),
                                 Weight{0});
    }
    std::priority_queue<GainEntry> frontier;
    std::size_t next_seed = 0;
    Weight region = 0;
    while (region < target_left) {
      std::int64_t pick = -1;
      while (!frontier.empty()) {
        const GainEntry t = frontier.top();
        frontier.pop();
        if (side[t.node] == 1 && gain[t.node] == t.gain) {
          pick = t.node;
          break;
        }
      }
      if (pick < 0) {
        // frontier exhausted: start a new region in another component
        while (next_seed < n && side[order[next_seed]] == 0) ++next_seed;
        if (next_seed == n) break;
        pick = order[next_seed];
      }
      const auto v = static_cast<std::uint32_t>(pick);
      const Weight after = region + g.vwgt[v];
      if (after > target_left && after - target_left > target_left - region && region > 0) break;
      side[v] = 0;
      region = after;
      for (std::size_t e = g.xadj[v]; e < g.xadj[v + 1]; ++e) {
        const std::uint32_t u = g.adj[e];
        if (side[u] == 0) continue;
        gain[u] += 2 * g.ewgt[e];
        frontier.push({gain[u], u});
      }
    }
    fm_refine(g, side, target_left, tolerance, options.refine_passes);
    Weight left = 0;
    for (std::uint32_t v = 0; v < n; ++v) {
      if (side[v] == 0) left += g.vwgt[v];
    }
    const Weight dist = std::max<Weight>(0, std::abs(left - target_left) - tolerance);
    const Weight cut = cut_of(g, side);
    if (dist < best_dist || (dist == best_dist && cut < best_cut)) {
      best = side;
      best_cut = cut;
      best_dist = dist;
    }
  }
  return best;
}

void recursive_bisection(const WorkGraph& g, std::span<const std::uint32_t> ids, std::size_t k,
                         BlockId first_block, std::vector<std::uint32_t>& out,
                         const PartitionOptions& options, double epsilon, Rng& rng) {
  if (g.size() == 0) return;
  if (k == 1) {
    for (std::uint32_t id : ids) out[id] = first_block;
    return;
  }
  const std::size_t k_left = k / 2;
  const Weight total = g.total_weight();
  const auto target_left = static_cast<Weight>(
      std::llround(static_cast<double>(total) * static_cast<double>(k_left) / static_cast<double>(k)));
  const Weight tolerance = std::max<Weight>(
      g.max_node_weight() / 2,
      static_cast<Weight>(epsilon * 0.5 * static_cast<double>(target_left) / std::log2(static_cast<double>(k) + 1.0)));
  const auto side = bisect(g, target_left, tolerance, options, rng);

  for (std::uint32_t s = 0; s < 2; ++s) {
    std::vector<std::uint32_t> members;
    std::vector<std::uint32_t> sub_ids;
    for (std::uint32_t v = 0; v < g.size(); ++v) {
      if (side[v] != s) continue;
      members.push_back(v);
      sub_ids.push_back(ids[v]);
    }
    const WorkGraph sub = work_subgraph(g, members);
    recursive_bisection(sub, sub_ids, s == 0 ? k_left : k - k_left,
                        s == 0 ? first_block : first_block + static_cast<BlockId>(k_left), out,
                        options, epsilon, rng);
  }
}

/// Block bookkeeping shared by balancing and refinement.
struct BlockState {
  std::vector<Weight> weight;
  std::vector<std::size_t> count;

  BlockState(const WorkGraph& g, std::span<const std::uint32_t> part, std::size_t k)
      : weight(k, 0), count(k, 0) {
    for (std::uint32_t v = 0; v < g.size(); ++v) {
      weight[part[v]] += g.vwgt[v];
      ++count[part[v]];
    }
  }

  void move(std::uint32_t from, std::uint32_t to, Weight w) {
    weight[from] -= w;
    --count[from];
    weight[to] += w;
    ++count[to];
  }
};

/// Connectivity of one node to each adjacent block, gathered with a sparse
/// marker array of size k.
class Connectivity {
 public:
  explicit Connectivity(std::size_t k) : slot_(k, -1) {}

  void gather(const WorkGraph& g, std::span<const std::uint32_t> part, std::uint32_t v) {
    for (const auto& [b, w] : entries_) slot_[b] = -1;
    entries_.clear();
    for (std::size_t e = g.xadj[v]; e < g.xadj[v + 1]; ++e) {
      const std::uint32_t b = part[g.adj[e]];
      if (slot_[b] < 0) {
        slot_[b] = static_cast<std::int64_t>(entries_.size());
        entries_.emplace_back(b, 0);
      }
      entries_[static_cast<std::size_t>(slot_[b])].second += g.ewgt[e];
    }
  }

  Weight to(std::uint32_t b) const {
    return slot_[b] < 0 ? 0 : entries_[static_cast<std::size_t>(slot_[b])].second;
  }

  const std::vector<std::pair<std::uint32_t, Weight>>& entries() const { return entries_; }

 private:
  std::vector<std::int64_t> slot_;
  std::vector<std::pair<std::uint32_t, Weight>> entries_;
};

/// Moves nodes out of blocks heavier than `cap`, choosing the move that loses
/// the least cut. Falls back to the globally lightest block when no adjacent
/// block has room. Returns false if some block is still overweight.
bool rebalance(const WorkGraph& g, std::vector<std::uint32_t>& part, BlockState& blocks,
               std::size_t k, Weight cap) {
  Connectivity conn(k);
  while (true) {
    std::int64_t heaviest = -1;
    for (std::uint32_t b = 0; b < k; ++b) {
      if (blocks.weight[b] > cap && (heaviest < 0 || blocks.weight[b] > blocks.weight[heaviest])) {
        heaviest = b;
      }
    }
    if (heaviest < 0) return true;
    const auto src = static_cast<std::uint32_t>(heaviest);
    if (blocks.count[src] <= 1) return false;

    std::uint32_t lightest = 0;
    for (std::uint32_t b = 1; b < k; ++b) {
      if (blocks.weight[b] < blocks.weight[lightest]) lightest = b;
    }

    std::int64_t best_node = -1;
    std::uint32_t best_dest = 0;
    Weight best_gain = std::numeric_limits<Weight>::min();
    for (std::uint32_t v = 0; v < g.size(); ++v) {
      if (part[v] != src) continue;
      conn.gather(g, part, v);
      const Weight internal = conn.to(src);
      auto consider = [&](std::uint32_t dest, Weight gain) {
        if (dest == src || blocks.weight[dest] + g.vwgt[v] > cap) return;
        if (gain > best_gain) {
          best_gain = gain;
          best_node = v;
          best_dest = dest;
        }
      };
      for (const auto& [b, w] : conn.entries()) consider(b, w - internal);
      consider(lightest, conn.to(lightest) - internal);
    }
    if (best_node < 0) return false;
    blocks.move(src, best_dest, g.vwgt[static_cast<std::size_t>(best_node)]);
    part[static_cast<std::size_t>(best_node)] = best_dest;
  }
}

/// Greedy boundary refinement: positive-gain moves, or zero-gain moves that
/// strictly improve balance, never exceeding cap and never emptying a block.
void refine_kway(const WorkGraph& g, std::vector<std::uint32_t>& part, BlockState& blocks,
                 std::size_t k, Weight cap, int max_passes) {
  Connectivity conn(k);
  for (int pass = 0; pass < max_passes; ++pass) {
    std::size_t moved = 0;
    for (std::uint32_t v = 0; v < g.size(); ++v) {
      const std::uint32_t own = part[v];
      bool boundary = false;
      for (std::size_t e = g.xadj[v]; e < g.xadj[v + 1]; ++e) {
        if (part[g.adj[e]] != own) {
          boundary = true;
          break;
        }
      }
      if (!boundary || blocks.count[own] <= 1) continue;
      conn.gather(g, part, v);
      const Weight internal = conn.to(own);
      std::int64_t best = -1;
      Weight best_gain = 0;
      for (const auto& [b, w] : conn.entries()) {
        if (b == own || blocks.weight[b] + g.vwgt[v] > cap) continue;
        const Weight gain = w - internal;
        if (best < 0 || gain > best_gain ||
            (gain == best_gain && (blocks.weight[b] < blocks.weight[best] ||
                                   (blocks.weight[b] == blocks.weight[best] && b < best)))) {
          best = b;
          best_gain = gain;
        }
      }
      if (best < 0) continue;
      const auto dest = static_cast<std::uint32_t>(best);
      if (best_gain > 0 ||
          (best_gain == 0 && blocks.weight[dest] + g.vwgt[v] < blocks.weight[own])) {
        blocks.move(own, dest, g.vwgt[v]);
        part[v] = dest;
        ++moved;
      }
    }
    if (moved == 0) break;
  }
}

}  // namespace

Partitioning partition(const Graph& g, std::size_t k, const PartitionOptions& options) {
  const std::size_t n = g.node_count();
  if (k < 1 || k > n) {
    throw DomainError("partition requires 1 <= k <= node_count (k=" + std::to_string(k) +
                      ", n=" + std::to_string(n) + ")");
  }
  if (!(options.epsilon > 0.0 && options.epsilon < 1.0)) {
    throw DomainError("partition requires 0 < epsilon < 1");
  }
  Partitioning result;
  result.k = k;
  result.epsilon = options.epsilon;
  result.assignment.assign(n, 0);
  if (k == 1) return result;
  if (k == n) {
    std::iota(result.assignment.begin(), result.assignment.end(), BlockId{0});
    return result;
  }

  const auto cap = static_cast<Weight>(block_capacity(n, k, options.epsilon));
  Rng rng(mix_seed(options.seed, 0x9a27));

  std::vector<NodeId> active;
  std::vector<NodeId> isolated;
  for (NodeId v = 0; v < n; ++v) (g.degree(v) > 0 ? active : isolated).push_back(v);

  std::vector<std::size_t> block_weight(k, 0);
  if (!active.empty()) {
    std::vector<WorkGraph> levels;
    std::vector<std::vector<std::uint32_t>> maps;
    levels.push_back(work_graph_from(g, active));
    const std::size_t coarsen_to = std::max<std::size_t>(2 * k, 200);
    const Weight max_node_weight = std::max<Weight>(1, cap / 2);
    while (levels.back().size() > coarsen_to) {
      CoarseLevel next = coarsen(levels.back(), max_node_weight, rng);
      if (next.graph.size() * 20 > levels.back().size() * 19) break;  // < 5% shrink: stalled
      maps.push_back(std::move(next.fine_to_coarse));
      levels.push_back(std::move(next.graph));
    }

    const WorkGraph& coarsest = levels.back();
    std::vector<std::uint32_t> part(coarsest.size(), 0);
    std::vector<std::uint32_t> ids(coarsest.size());
    std::iota(ids.begin(), ids.end(), 0u);
    recursive_bisection(coarsest, ids, k, 0, part, options, options.epsilon, rng);

    for (std::size_t level = levels.size(); level-- > 0;) {
      const WorkGraph& wg = levels[level];
      if (level + 1 < levels.size()) {
        const auto& map = maps[level];
        std::vector<std::uint32_t> fine(wg.size());
        for (std::size_t v = 0; v < wg.size(); ++v) fine[v] = part[map[v]];
        part = std::move(fine);
      }
      BlockState blocks(wg, part, k);
      rebalance(wg, part, blocks, k, cap);
      refine_kway(wg, part, blocks, k, cap, options.refine_passes);
    }
    for (std::size_t i = 0; i < active.size(); ++i) {
      result.assignment[active[i]] = part[i];
      ++block_weight[part[i]];
    }
  }

  for (NodeId v : isolated) {
    const auto lightest = static_cast<BlockId>(
        std::min_element(block_weight.begin(), block_weight.end()) - block_weight.begin());
    result.assignment[v] = lightest;
    ++block_weight[lightest];
  }

  // Surjectivity: refill empty blocks from the heaviest block, taking the node
  // with the fewest edges inside its block.
  for (BlockId empty = 0; empty < k; ++empty) {
    if (block_weight[empty] != 0) continue;
    const auto heaviest = static_cast<BlockId>(
        std::max_element(block_weight.begin(), block_weight.end()) - block_weight.begin());
    std::int64_t pick = -1;
    std::size_t pick_internal = 0;
    for (NodeId v = 0; v < n; ++v) {
      if (result.assignment[v] != heaviest) continue;
      std::size_t internal = 0;
      for (const Neighbor& nb : g.adjacency(v)) internal += result.assignment[nb.node] == heaviest;
      if (pick < 0 || internal < pick_internal) {
        pick = v;
        pick_internal = internal;
      }
    }
    result.assignment[static_cast<std::size_t>(pick)] = empty;
    --block_weight[heaviest];
    ++block_weight[empty];
  }
  return result;
}

std::size_t edge_cut(const Graph& g, const Partitioning& p) {
  if (p.assignment.size() != g.node_count()) {
    throw DomainError("partitioning does not cover the graph");
  }
  std::size_t cut = 0;
  for (const Edge& e : g.edges()) cut += p.assignment[e.u] != p.assignment[e.v];
  return cut;
}

Partitioning random_balanced_partition(std::size_t node_count, std::size_t k, std::uint64_t seed) {
  if (k < 1 || k > node_count) throw DomainError("random partition requires 1 <= k <= n");
  Partitioning p;
  p.k = k;
  p.assignment.resize(node_count);
  for (std::size_t v = 0; v < node_count; ++v) p.assignment[v] = static_cast<BlockId>(v % k);
  Rng rng(seed);
  shuffle(p.assignment, rng);
  return p;
}

void write_partition(std::ostream& out, const Partitioning& p,
                     std::span<const std::int64_t> original_ids) {
  for (std::size_t v = 0; v < p.assignment.size(); ++v) {
    out << (original_ids.empty() ? static_cast<std::int64_t>(v) : original_ids[v]) << ' '
        << p.assignment[v] << '\n';
  }
}

void save_partition(const std::string& path, const Partitioning& p,
                    std::span<const std::int64_t> original_ids) {
  std::ofstream out(path);
  if (!out) throw DomainError("cannot write partition file: " + path);
  write_partition(out, p, original_ids);
}

}  // namespace gpa
