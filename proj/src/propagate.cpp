#include "gpa/propagate.hpp"

#include <chrono>
#include <cmath>
#include <iomanip>
#include <limits>
#include <ostream>

#include "gpa/parallel.hpp"

namespace gpa {

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

double PropagationConfig::effective_delta(std::size_t node_count) const {
  if (delta > 0.0) return delta;
  return node_count == 0 ? 1.0 : 1.0 / static_cast<double>(node_count);
}

void PropagationConfig::validate() const {
  if (delta < 0.0 || !std::isfinite(delta)) throw DomainError("delta must be positive");
  if (max_iters < 1) throw DomainError("max_iters must be at least 1");
}

PropagationResult propagate_from(const Graph& g, EmbeddingMatrix start, const PropagationConfig& cfg) {
  cfg.validate();
  const std::size_t n = g.node_count();
  if (start.rows() != n) {
    throw DomainError("embedding has " + std::to_string(start.rows()) + " rows for a graph of " +
                      std::to_string(n) + " nodes");
  }
  const std::size_t dim = start.dim();
  const double delta = cfg.effective_delta(n);

  PropagationResult result;
  EmbeddingMatrix current = std::move(start);
  EmbeddingMatrix next = current;
  std::vector<double> movement(n, 0.0);
  std::vector<std::uint64_t> visits(std::max<std::size_t>(1, cfg.threads), 0);

  for (std::size_t iter = 0; iter < cfg.max_iters; ++iter) {
    std::fill(visits.begin(), visits.end(), 0);
    parallel_chunks(n, cfg.threads, [&](std::size_t worker, std::size_t begin, std::size_t end) {
      std::vector<double> acc(dim);
      std::uint64_t local_visits = 0;
      for (std::size_t v = begin; v < end; ++v) {
        const auto adj = g.adjacency(static_cast<NodeId>(v));
        auto own = current.row(v);
        auto out = next.row(v);
        if (adj.empty()) {
          std::copy(own.begin(), own.end(), out.begin());
          movement[v] = 0.0;
          continue;
        }
        std::fill(acc.begin(), acc.end(), 0.0);
        for (const Neighbor& nb : adj) {
          const auto other = current.row(nb.node);
          for (std::size_t j = 0; j < dim; ++j) acc[j] += other[j];
        }
        local_visits += adj.size();
        const double inv = 1.0 / static_cast<double>(adj.size());
        double moved = 0.0;
        for (std::size_t j = 0; j < dim; ++j) {
          const double updated = 0.5 * (static_cast<double>(own[j]) + acc[j] * inv);
          out[j] = static_cast<float>(updated);
          const double diff = static_cast<double>(out[j]) - own[j];
          moved += diff * diff;
        }
        movement[v] = std::sqrt(moved);
      }
      visits[worker] = local_visits;
    });

    double total_movement = 0.0;
    for (double m : movement) total_movement += m;
    const double mean_movement = n == 0 ? 0.0 : total_movement / static_cast<double>(n);
    std::uint64_t visit_total = 0;
    for (auto c : visits) visit_total += c;

    std::swap(current, next);
    result.delta_trace.push_back(mean_movement);
    result.neighbor_visits.push_back(visit_total);
    if (mean_movement <= delta) {
      result.converged = true;
      break;
    }
  }
  result.embedding = std::move(current);
  return result;
}

EmbeddingMatrix inherit_embedding(const AbstractGraph& ga, const EmbeddingMatrix& f_a) {
  if (f_a.rows() != ga.k()) {
    throw DomainError("abstract embedding has " + std::to_string(f_a.rows()) + " rows, expected " +
                      std::to_string(ga.k()));
  }
  EmbeddingMatrix out(ga.node_to_abstract.size(), f_a.dim());
  for (std::size_t v = 0; v < ga.node_to_abstract.size(); ++v) {
    const auto src = f_a.row(ga.node_to_abstract[v]);
    std::copy(src.begin(), src.end(), out.row(v).begin());
  }
  return out;
}

PropagationResult propagate(const Graph& g, const AbstractGraph& ga, const EmbeddingMatrix& f_a,
                            const PropagationConfig& cfg) {
  if (ga.node_to_abstract.size() != g.node_count()) {
    throw DomainError("abstract mapping does not cover the graph");
  }
  return propagate_from(g, inherit_embedding(ga, f_a), cfg);
}

GpaInitResult run_gpa_init(const Graph& g, const GpaConfig& cfg, std::uint64_t seed) {
  if (g.empty()) throw DomainError("cannot initialize an empty graph");
  GpaInitResult r;

  auto t0 = std::chrono::steady_clock::now();
  const std::size_t k = cfg.k == 0 ? default_k(g) : cfg.k;
  PartitionOptions popts = cfg.partition;
  popts.seed = mix_seed(seed, 21);
  r.partitioning = partition(g, k, popts);
  r.abstract_graph = build_abstract(g, r.partitioning);
  r.partition_seconds = seconds_since(t0);

  t0 = std::chrono::steady_clock::now();
  r.abstract_walks = cfg.choose_walks ? cfg.choose_walks(r.abstract_graph) : cfg.abstract_walks;
  r.abstract_embedding = embed_abstract(r.abstract_graph, r.abstract_walks, cfg.abstract_skipgram,
                                        mix_seed(seed, 22));
  r.embed_seconds = seconds_since(t0);

  t0 = std::chrono::steady_clock::now();
  r.inherited = inherit_embedding(r.abstract_graph, r.abstract_embedding);
  r.propagation = propagate_from(g, r.inherited, cfg.propagation);
  r.propagate_seconds = seconds_since(t0);
  return r;
}

EmbeddingMatrix init_for_graph(const Graph& g, const GpaConfig& cfg, std::uint64_t seed) {
  return run_gpa_init(g, cfg, seed).propagation.embedding;
}

void write_delta_trace(std::ostream& out, const PropagationResult& result) {
  out << "iteration,delta\n" << std::setprecision(std::numeric_limits<double>::max_digits10);
  for (std::size_t i = 0; i < result.delta_trace.size(); ++i) {
    out << i + 1 << ',' << result.delta_trace[i] << '\n';
  }
}

}  // namespace gpa
