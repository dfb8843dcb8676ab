#pragma once

#include <stdexcept>
#include <vector>

#include "coarse/entourage.hpp"
#include "coarse/translation.hpp"

namespace coarse {

/// Decompose a symmetric relation s ⊇ Δ of max row degree d into at
/// most 2d-1 total involutions whose graphs cover s exactly.
///
/// The identity involution absorbs the diagonal; the off-diagonal
/// pairs are edge-colored greedily into matchings (pairs sharing an
/// endpoint get distinct colors) and each matching becomes the
/// involution swapping its pairs and fixing everything else. Fixed
/// points contribute diagonal pairs, which stay inside s because
/// Δ ⊆ s. Pairs are processed in lexicographic order with the first
/// available color, so the output is deterministic.
inline std::vector<PartialTranslation> edge_color_decompose(const Entourage& s) {
  if (!s.is_symmetric()) throw std::invalid_argument("edge_color_decompose: relation not symmetric");
  if (!s.contains_diagonal())
    throw std::invalid_argument("edge_color_decompose: relation must contain the diagonal");
  const int n = s.ground_size();
  if (n == 0) return {};

  // Unordered off-diagonal pairs in lexicographic order.
  std::vector<std::pair<int, int>> edges;
  for (const auto& [x, y] : s.pairs())
    if (x < y) edges.push_back({x, y});

  std::vector<std::vector<int>> colors_at(n);  // colors already used at a vertex
  std::vector<int> color_of(edges.size(), -1);
  int num_colors = 0;
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const auto [x, y] = edges[e];
    int c = 0;
    auto used = [&](int cand) {
      for (int cx : colors_at[x])
        if (cx == cand) return true;
      for (int cy : colors_at[y])
        if (cy == cand) return true;
      return false;
    };
    while (used(c)) ++c;
    color_of[e] = c;
    colors_at[x].push_back(c);
    colors_at[y].push_back(c);
    num_colors = std::max(num_colors, c + 1);
  }

  std::vector<PartialTranslation> out;
  out.push_back(PartialTranslation::identity(n));
  std::vector<std::vector<int>> images(num_colors);
  for (int c = 0; c < num_colors; ++c) {
    std::vector<int> im(n);
    for (int i = 0; i < n; ++i) im[i] = i;
    images[c] = std::move(im);
  }
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const auto [x, y] = edges[e];
    images[color_of[e]][x] = y;
    images[color_of[e]][y] = x;
  }
  for (int c = 0; c < num_colors; ++c)
    out.emplace_back(n, std::move(images[c]));
  return out;
}

}  // namespace coarse
