#include "gpa/embedding.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

namespace gpa {

bool EmbeddingMatrix::all_finite() const {
  for (float x : data_) {
    if (!std::isfinite(x)) return false;
  }
  return true;
}

EmbeddingMatrix random_embedding(std::size_t rows, std::size_t dim, std::uint64_t seed) {
  EmbeddingMatrix m(rows, dim);
  Rng rng(seed);
  const double half_width = 0.5 / static_cast<double>(dim);
  for (float& x : m.data()) {
    x = static_cast<float>((uniform01(rng) * 2.0 - 1.0) * half_width);
  }
  return m;
}

double dot(std::span<const float> a, std::span<const float> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += static_cast<double>(a[i]) * b[i];
  return s;
}

double norm(std::span<const float> a) { return std::sqrt(dot(a, a)); }

double euclidean_distance(std::span<const float> a, std::span<const float> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = static_cast<double>(a[i]) - b[i];
    s += d * d;
  }
  return std::sqrt(s);
}

double cosine_similarity(std::span<const float> a, std::span<const float> b) {
  const double na = norm(a);
  const double nb = norm(b);
  if (na == 0.0 || nb == 0.0) return 0.0;
  return dot(a, b) / (na * nb);
}

void write_embedding(std::ostream& out, const EmbeddingMatrix& m,
                     std::span<const std::int64_t> original_ids) {
  out << m.rows() << ' ' << m.dim() << '\n';
  out << std::setprecision(std::numeric_limits<float>::max_digits10);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out << (original_ids.empty() ? static_cast<std::int64_t>(i) : original_ids[i]);
    for (float x : m.row(i)) out << ' ' << x;
    out << '\n';
  }
}

void save_embedding(const std::string& path, const EmbeddingMatrix& m,
                    std::span<const std::int64_t> original_ids) {
  std::ofstream out(path);
  if (!out) throw DomainError("cannot write embedding file: " + path);
  write_embedding(out, m, original_ids);
}

LoadedEmbedding read_embedding(std::istream& in) {
  std::string line;
  std::size_t line_no = 1;
  if (!std::getline(in, line)) throw ParseError("missing embedding header", line_no);
  std::istringstream header(line);
  std::size_t rows = 0, dim = 0;
  if (!(header >> rows >> dim) || dim == 0) throw ParseError("bad embedding header", line_no);

  LoadedEmbedding out;
  out.matrix = EmbeddingMatrix(rows, dim);
  out.ids.reserve(rows);
  for (std::size_t r = 0; r < rows; ++r) {
    ++line_no;
    if (!std::getline(in, line)) throw ParseError("truncated embedding file", line_no);
    std::istringstream fields(line);
    std::int64_t id = 0;
    if (!(fields >> id)) throw ParseError("missing node id", line_no);
    out.ids.push_back(id);
    auto row = out.matrix.row(r);
    for (std::size_t j = 0; j < dim; ++j) {
      if (!(fields >> row[j])) throw ParseError("expected " + std::to_string(dim) + " values", line_no);
    }
    std::string extra;
    if (fields >> extra) throw ParseError("too many values", line_no);
  }
  return out;
}

LoadedEmbedding load_embedding(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open embedding file: " + path);
  return read_embedding(in);
}

}  // namespace gpa
