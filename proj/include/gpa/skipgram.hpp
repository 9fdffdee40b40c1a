#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <span>
#include <vector>

#include "gpa/abstract_graph.hpp"
#include "gpa/embedding.hpp"
#include "gpa/walk.hpp"

namespace gpa {

struct SkipGramParams {
  std::size_t window = 10;
  std::size_t negatives = 5;
  std::size_t epochs = 1;
  double initial_lr = 0.025;
  std::size_t dim = 128;
  /// Worker count for lock-free (Hogwild) SGD; 1 is exactly reproducible.
  std::size_t threads = 1;

  void validate() const;
};

/// One output row scored against the input vector; label 1 for the observed
/// context, 0 for a sampled negative.
struct SgnsTarget {
  std::uint32_t row;
  float label;
};

template <typename T>
T stable_sigmoid(T x) {
  if (x >= T(0)) return T(1) / (T(1) + std::exp(-x));
  const T e = std::exp(x);
  return e / (T(1) + e);
}

/// log(1 + exp(-x)) without overflow.
template <typename T>
T softplus_neg(T x) {
  return x >= T(0) ? std::log1p(std::exp(-x)) : -x + std::log1p(std::exp(x));
}

template <typename T>
T dot_product(const T* __restrict a, const T* __restrict b, std::size_t dim) {
  T s = 0;
#pragma omp simd reduction(+ : s)
  for (std::size_t i = 0; i < dim; ++i) s += a[i] * b[i];
  return s;
}

/// Negative-sampling loss of one input vector against its targets:
/// sum over targets of -log sigma(+-in . out_t).
template <typename T>
T sgns_loss(std::span<const T> in, const T* output, std::span<const SgnsTarget> targets) {
  const std::size_t dim = in.size();
  T loss = 0;
  for (const SgnsTarget& t : targets) {
    const T score = dot_product(in.data(), output + t.row * dim, dim);
    loss += t.label > 0 ? softplus_neg(score) : softplus_neg(-score);
  }
  return loss;
}

/// Gradient of sgns_loss. grad_in is overwritten; grad_output (same layout as
/// output) is accumulated into.
template <typename T>
void sgns_gradient(std::span<const T> in, const T* output, std::span<const SgnsTarget> targets,
                   std::span<T> grad_in, T* grad_output) {
  const std::size_t dim = in.size();
  std::fill(grad_in.begin(), grad_in.end(), T(0));
  for (const SgnsTarget& t : targets) {
    const T* out = output + t.row * dim;
    const T coef = static_cast<T>(t.label) - stable_sigmoid(dot_product(in.data(), out, dim));
    T* g_out = grad_output + t.row * dim;
    for (std::size_t i = 0; i < dim; ++i) {
      grad_in[i] -= coef * out[i];
      g_out[i] -= coef * in[i];
    }
  }
}

/// One SGD step of size lr on sgns_loss, with all partial derivatives taken
/// at the pre-step parameters (the word2vec update order). `scratch` must hold
/// dim values.
template <typename T>
void sgns_update(std::span<T> in, T* output, std::span<const SgnsTarget> targets, T lr,
                 std::span<T> scratch) {
  const std::size_t dim = in.size();
  T* __restrict acc = scratch.data();
  T* __restrict v = in.data();
  std::fill(scratch.begin(), scratch.end(), T(0));
  for (const SgnsTarget& t : targets) {
    T* __restrict out = output + t.row * dim;
    const T g = lr * (static_cast<T>(t.label) - stable_sigmoid(dot_product(v, out, dim)));
#pragma omp simd
    for (std::size_t i = 0; i < dim; ++i) acc[i] += g * out[i];
#pragma omp simd
    for (std::size_t i = 0; i < dim; ++i) out[i] += g * v[i];
  }
#pragma omp simd
  for (std::size_t i = 0; i < dim; ++i) v[i] += acc[i];
}

/// Skip-gram with negative sampling over a walk corpus.
///
/// Every (center, context) pair within `window` positions is one update; the
/// center's input vector is scored against the context's output vector and
/// `negatives` nodes drawn from the corpus unigram distribution raised to
/// 0.75. The learning rate falls linearly from initial_lr to initial_lr * 1e-4
/// over all pairs. With `init`, input vectors start there and output vectors
/// start at zero; otherwise inputs are random_embedding(seed).
///
/// Returns the input-side matrix. Throws DomainError if init has the wrong shape.
EmbeddingMatrix train_skipgram(const WalkCorpus& corpus, const SkipGramParams& params,
                               const EmbeddingMatrix* init, std::uint64_t seed);

/// Total (center, context) pairs one epoch over the corpus produces.
std::uint64_t count_training_pairs(const WalkCorpus& corpus, std::size_t window);

/// Weighted walks on the abstract graph followed by skip-gram from random init.
EmbeddingMatrix embed_abstract(const AbstractGraph& ga, const WalkParams& walks,
                               const SkipGramParams& params, std::uint64_t seed);
EmbeddingMatrix embed_graph(const Graph& g, const WalkParams& walks,
                            const SkipGramParams& params, const EmbeddingMatrix* init,
                            std::uint64_t seed);

}  // namespace gpa
