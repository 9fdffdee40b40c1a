#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "gpa/common.hpp"

namespace gpa {

/// Row-major node_count x dim matrix of single-precision embeddings.
class EmbeddingMatrix {
 public:
  using value_type = float;

  EmbeddingMatrix() = default;
  EmbeddingMatrix(std::size_t rows, std::size_t dim, float fill = 0.0f)
      : rows_(rows), dim_(dim), data_(rows * dim, fill) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t dim() const noexcept { return dim_; }

  std::span<float> row(std::size_t i) noexcept { return {data_.data() + i * dim_, dim_}; }
  std::span<const float> row(std::size_t i) const noexcept {
    return {data_.data() + i * dim_, dim_};
  }

  float& operator()(std::size_t i, std::size_t j) noexcept { return data_[i * dim_ + j]; }
  float operator()(std::size_t i, std::size_t j) const noexcept { return data_[i * dim_ + j]; }

  std::span<float> data() noexcept { return data_; }
  std::span<const float> data() const noexcept { return data_; }

  bool all_finite() const;

  friend bool operator==(const EmbeddingMatrix&, const EmbeddingMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t dim_ = 0;
  std::vector<float> data_;
};

/// word2vec initialization: entries uniform in [-0.5/dim, 0.5/dim].
EmbeddingMatrix random_embedding(std::size_t rows, std::size_t dim, std::uint64_t seed);

double dot(std::span<const float> a, std::span<const float> b);
double norm(std::span<const float> a);
double euclidean_distance(std::span<const float> a, std::span<const float> b);
/// Zero when either vector has zero norm.
double cosine_similarity(std::span<const float> a, std::span<const float> b);

/// Text format: "rows dim" header, then "node_id v1 ... vd" per row. Values are
/// written with enough digits to round-trip exactly.
void write_embedding(std::ostream& out, const EmbeddingMatrix& m,
                     std::span<const std::int64_t> original_ids = {});
void save_embedding(const std::string& path, const EmbeddingMatrix& m,
                    std::span<const std::int64_t> original_ids = {});

/// Reads the text format; rows stay in file order and `ids` records the id
/// printed on each row.
struct LoadedEmbedding {
  EmbeddingMatrix matrix;
  std::vector<std::int64_t> ids;  // file id of each row, in row order
};
LoadedEmbedding read_embedding(std::istream& in);
LoadedEmbedding load_embedding(const std::string& path);

}  // namespace gpa
