#include "gpa/alias_table.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace gpa {

AliasTable AliasTable::build(std::span<const double> probs) {
  if (probs.empty()) throw DomainError("alias table needs at least one element");
  double total = 0.0;
  for (double p : probs) {
    if (!(p > 0.0) || !std::isfinite(p)) {
      throw DomainError("alias table probabilities must be positive and finite");
    }
    total += p;
  }

  const std::size_t n = probs.size();
  AliasTable t;
  t.prob_.resize(n);
  t.alias_.resize(n);
  const double scale = static_cast<double>(n) / total;
  std::vector<std::size_t> large;
  std::vector<std::size_t> small;
  for (std::size_t e = 0; e < n; ++e) {
    t.prob_[e] = probs[e] * scale;
    t.alias_[e] = e;
    if (t.prob_[e] > 1.0) large.push_back(e);
    if (t.prob_[e] < 1.0) small.push_back(e);
  }

  // Both sets are consumed smallest index first. Large elements that drop
  // below 1 do so in increasing index order, so they form a second sorted
  // queue and the smallest member of S_s is the lesser of the two fronts.
  std::vector<std::size_t> demoted;
  std::size_t large_head = 0, small_head = 0, demoted_head = 0;
  while (large_head < large.size()) {
    const bool have_small = small_head < small.size();
    const bool have_demoted = demoted_head < demoted.size();
    if (!have_small && !have_demoted) break;  // only reachable through rounding drift
    std::size_t x;
    if (have_small && (!have_demoted || small[small_head] < demoted[demoted_head])) {
      x = small[small_head++];
    } else {
      x = demoted[demoted_head++];
    }
    const std::size_t y = large[large_head];
    t.alias_[x] = y;
    t.prob_[y] -= 1.0 - t.prob_[x];
    if (t.prob_[y] <= 1.0) {
      ++large_head;
      if (t.prob_[y] < 1.0) demoted.push_back(y);
    }
  }

  for (double& p : t.prob_) {
    if (std::fabs(p - 1.0) <= 1e-9) p = 1.0;
    p = std::clamp(p, 0.0, 1.0);
  }
  return t;
}

std::vector<double> AliasTable::implied_distribution() const {
  const std::size_t n = prob_.size();
  std::vector<double> dist(n, 0.0);
  for (std::size_t x = 0; x < n; ++x) {
    dist[x] += prob_[x];
    dist[alias_[x]] += 1.0 - prob_[x];
  }
  for (double& d : dist) d /= static_cast<double>(n);
  return dist;
}

}  // namespace gpa
