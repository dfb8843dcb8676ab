#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "coarse/entourage.hpp"
#include "coarse/metric.hpp"

namespace coarse {

/// Graded family E_0 ⊆ E_1 ⊆ ... ⊆ E_N of symmetric relations with
/// E_0 the diagonal and E_n ∘ E_m ⊆ E_{n+m} for n+m <= N. Levels past
/// N are unknown (the generated coarse structure is infinite; a finite
/// realization has to truncate).
class Filtration {
 public:
  explicit Filtration(std::vector<Entourage> levels) : levels_(std::move(levels)) {
    if (levels_.empty()) throw std::invalid_argument("Filtration: needs at least E_0");
    validate();
  }

  int depth() const { return static_cast<int>(levels_.size()) - 1; }
  int ground_size() const { return levels_.front().ground_size(); }
  const Entourage& level(int k) const { return levels_.at(k); }
  const std::vector<Entourage>& levels() const { return levels_; }

 private:
  void validate() const {
    const int n = levels_.front().ground_size();
    if (!(levels_.front() == Entourage::diagonal(n)))
      throw std::invalid_argument("Filtration: E_0 must be the diagonal");
    for (std::size_t k = 0; k < levels_.size(); ++k) {
      if (levels_[k].ground_size() != n)
        throw std::invalid_argument("Filtration: ground set mismatch at level " + std::to_string(k));
      if (!levels_[k].is_symmetric())
        throw std::invalid_argument("Filtration: level " + std::to_string(k) + " not symmetric");
      if (k > 0 && !levels_[k - 1].subset_of(levels_[k]))
        throw std::invalid_argument("Filtration: levels not nested at " + std::to_string(k));
    }
  }

  std::vector<Entourage> levels_;
};

/// Filtration of the coarse structure generated by `gens` on
/// {0,...,n-1}, truncated at `depth`: E_1 = Δ ∪ ⋃gens ∪ ⋃gens^{-1},
/// E_{k+1} = E_k ∘ E_1. Since Δ ⊆ E_1 and E_1 is symmetric,
/// E_k = E_1^k is symmetric, increasing, and satisfies
/// E_k ∘ E_m = E_{k+m}.
inline Filtration filtration_from_generators(int n, const std::vector<Entourage>& gens, int depth) {
  if (depth < 0) throw std::invalid_argument("filtration_from_generators: negative depth");
  Entourage e1 = Entourage::diagonal(n);
  for (const auto& g : gens) {
    e1 = e1.union_with(g);
    e1 = e1.union_with(inverse_entourage(g));
  }
  std::vector<Entourage> levels;
  levels.push_back(Entourage::diagonal(n));
  if (depth >= 1) levels.push_back(e1);
  for (int k = 2; k <= depth; ++k) levels.push_back(compose_entourages(levels.back(), e1));
  return Filtration(std::move(levels));
}

/// Ground size inferred from the first generator.
inline Filtration filtration_from_generators(const std::vector<Entourage>& gens, int depth) {
  if (gens.empty())
    throw std::invalid_argument("filtration_from_generators: cannot infer ground size from an empty list");
  return filtration_from_generators(gens.front().ground_size(), gens, depth);
}

/// d(x,y) = least n with (x,y) ∈ E_n; infinity when the pair is
/// absent from every provided level (beyond the truncation depth,
/// not necessarily disconnected).
inline ExtendedMetric metric_from_filtration(const Filtration& f) {
  const int n = f.ground_size();
  std::vector<ExtDist> table(static_cast<std::size_t>(n) * n, ExtDist::infinity());
  for (int k = f.depth(); k >= 0; --k)
    for (const auto& [x, y] : f.level(k).pairs())
      table[static_cast<std::size_t>(x) * n + y] = ExtDist(k);
  return ExtendedMetric(n, std::move(table));
}

}  // namespace coarse
