#pragma once

#include <span>
#include <vector>

#include "gpa/common.hpp"

namespace gpa {

/// Walker alias table: O(|S|) construction, O(1) sampling.
///
/// Column i keeps itself with probability alias_prob[i] and otherwise yields
/// alias[i].
class AliasTable {
 public:
  AliasTable() = default;

  /// Accepts positive probabilities; input summing to something other than 1
  /// is renormalized. Throws DomainError on empty input or non-positive entries.
  static AliasTable build(std::span<const double> probs);

  std::size_t sample(Rng& rng) const {
    const std::size_t column = uniform_index(rng, prob_.size());
    return uniform01(rng) < prob_[column] ? column : alias_[column];
  }

  std::size_t size() const noexcept { return prob_.size(); }
  bool empty() const noexcept { return prob_.empty(); }
  std::span<const double> alias_prob() const noexcept { return prob_; }
  std::span<const std::size_t> alias() const noexcept { return alias_; }

  /// Distribution encoded by the table: (1/|S|)(P_a(e) + sum over columns
  /// aliased to e of 1 - P_a(x)).
  std::vector<double> implied_distribution() const;

 private:
  std::vector<double> prob_;
  std::vector<std::size_t> alias_;
};

}  // namespace gpa
