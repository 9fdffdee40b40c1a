#include "gpa/skipgram.hpp"

#include <algorithm>
#include <cmath>

#include "gpa/parallel.hpp"

namespace gpa {

void SkipGramParams::validate() const {
  if (window < 1 || negatives < 1 || dim < 1) {
    throw DomainError("window, negatives and dim must be positive");
  }
  if (!(initial_lr > 0.0 && initial_lr < 1.0)) {
    throw DomainError("initial learning rate must lie in (0, 1)");
  }
  if (threads < 1) throw DomainError("thread count must be positive");
}

namespace {

std::uint64_t pairs_in_walk(std::size_t length, std::size_t window) {
  std::uint64_t pairs = 0;
  for (std::size_t p = 0; p < length; ++p) {
    const std::size_t lo = p >= window ? p - window : 0;
    const std::size_t hi = std::min(length - 1, p + window);
    pairs += hi - lo;
  }
  return pairs;
}

}  // namespace

std::uint64_t count_training_pairs(const WalkCorpus& corpus, std::size_t window) {
  std::uint64_t pairs = 0;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    pairs += pairs_in_walk(corpus.walk(i).size(), window);
  }
  return pairs;
}

EmbeddingMatrix train_skipgram(const WalkCorpus& corpus, const SkipGramParams& params,
                               const EmbeddingMatrix* init, std::uint64_t seed) {
  params.validate();
  if (corpus.empty()) throw DomainError("cannot train on an empty corpus");
  const std::size_t n = corpus.node_count();
  const std::size_t dim = params.dim;
  if (init != nullptr && (init->rows() != n || init->dim() != dim)) {
    throw DomainError("initial embedding has shape " + std::to_string(init->rows()) + "x" +
                      std::to_string(init->dim()) + ", expected " + std::to_string(n) + "x" +
                      std::to_string(dim));
  }
  EmbeddingMatrix input = init != nullptr ? *init : random_embedding(n, dim, mix_seed(seed, 1));
  if (params.epochs == 0) return input;

  std::vector<float> output(n * dim, 0.0f);

  const auto freq = corpus.frequencies();
  std::vector<NodeId> vocab;
  std::vector<double> noise;
  for (NodeId v = 0; v < n; ++v) {
    if (freq[v] == 0) continue;
    vocab.push_back(v);
    noise.push_back(std::pow(static_cast<double>(freq[v]), 0.75));
  }
  const AliasTable noise_table = AliasTable::build(noise);
  const auto lr0 = static_cast<float>(params.initial_lr);
  const float lr_floor = lr0 * 1e-4f;

  parallel_chunks(corpus.size(), params.threads, [&](std::size_t worker, std::size_t begin,
                                                     std::size_t end) {
    Rng rng(mix_seed(seed, 100 + worker));
    std::uint64_t local_pairs = 0;
    for (std::size_t i = begin; i < end; ++i) {
      local_pairs += pairs_in_walk(corpus.walk(i).size(), params.window);
    }
    const double total = static_cast<double>(local_pairs * params.epochs);
    std::uint64_t done = 0;
    std::vector<SgnsTarget> targets;
    targets.reserve(params.negatives + 1);
    std::vector<float> scratch(dim);

    for (std::size_t epoch = 0; epoch < params.epochs; ++epoch) {
      for (std::size_t i = begin; i < end; ++i) {
        const auto walk = corpus.walk(i);
        const std::size_t len = walk.size();
        for (std::size_t p = 0; p < len; ++p) {
          const float lr = total > 0
              ? std::max(lr_floor, lr0 * static_cast<float>(1.0 - static_cast<double>(done) / total))
              : lr0;
          const std::size_t lo = p >= params.window ? p - params.window : 0;
          const std::size_t hi = std::min(len - 1, p + params.window);
          auto center = input.row(walk[p]);
          for (std::size_t q = lo; q <= hi; ++q) {
            if (q == p) continue;
            const NodeId context = walk[q];
            targets.clear();
            targets.push_back({context, 1.0f});
            for (std::size_t k = 0; k < params.negatives; ++k) {
              const NodeId neg = vocab[noise_table.sample(rng)];
              if (neg != context) targets.push_back({neg, 0.0f});
            }
            sgns_update<float>(center, output.data(), targets, lr, scratch);
            ++done;
          }
        }
      }
    }
  });
  return input;
}

EmbeddingMatrix embed_graph(const Graph& g, const WalkParams& walks, const SkipGramParams& params,
                            const EmbeddingMatrix* init, std::uint64_t seed) {
  const WalkCorpus corpus = generate_walks(g, walks, mix_seed(seed, 11), params.threads);
  return train_skipgram(corpus, params, init, mix_seed(seed, 12));
}

EmbeddingMatrix embed_abstract(const AbstractGraph& ga, const WalkParams& walks,
                               const SkipGramParams& params, std::uint64_t seed) {
  return embed_graph(ga.core, walks, params, nullptr, seed);
}

}  // namespace gpa
