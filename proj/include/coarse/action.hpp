#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "coarse/coloring.hpp"
#include "coarse/entourage.hpp"
#include "coarse/graph.hpp"
#include "coarse/translation.hpp"

namespace coarse {

struct NamedTranslation {
  std::string name;
  PartialTranslation map;
};

/// Generator set of a group action on {0, ..., n-1}, given
/// extensionally as named permutations. For a genuine action every
/// generator must be a total bijection; partial maps are accepted at
/// construction (e.g. when loaded from files) and rejected by the
/// operations that need permutations.
class ActionGenerators {
 public:
  ActionGenerators() : n_(0), symmetrized_(false) {}

  ActionGenerators(int n, std::vector<NamedTranslation> gens, bool symmetrized = false)
      : n_(n), gens_(std::move(gens)), symmetrized_(symmetrized) {
    for (const auto& g : gens_)
      if (g.map.ground_size() != n_)
        throw std::invalid_argument("ActionGenerators: generator '" + g.name + "' ground set mismatch");
  }

  int ground_size() const { return n_; }
  const std::vector<NamedTranslation>& generators() const { return gens_; }
  bool is_symmetrized() const { return symmetrized_; }

  /// Close the list under inverses; inverses get a "_inv" suffix.
  /// Generators that are already involutions (or whose inverse is
  /// present) are not duplicated.
  ActionGenerators symmetrized() const {
    if (symmetrized_) return *this;
    std::vector<NamedTranslation> out = gens_;
    for (const auto& g : gens_) {
      PartialTranslation inv = g.map.inverse();
      bool present = false;
      for (const auto& h : out)
        if (h.map == inv) {
          present = true;
          break;
        }
      if (!present) out.push_back({g.name + "_inv", std::move(inv)});
    }
    return ActionGenerators(n_, std::move(out), true);
  }

 private:
  int n_;
  std::vector<NamedTranslation> gens_;
  bool symmetrized_;
};

/// Schreier graph of the action: vertex set X, edges {sx, x} over all
/// generators s and points x (self-loops at fixed points). Throws if a
/// generator is not a total bijection, naming it.
inline UlfGraph schreier_graph(const ActionGenerators& gens) {
  for (const auto& g : gens.generators())
    if (!g.map.is_bijection())
      throw std::invalid_argument("schreier_graph: generator '" + g.name + "' is not a bijection");
  const ActionGenerators sym = gens.symmetrized();
  std::vector<std::pair<int, int>> edges;
  for (const auto& g : sym.generators())
    for (int x = 0; x < sym.ground_size(); ++x) edges.push_back({*g.map.apply(x), x});
  return UlfGraph(sym.ground_size(), std::move(edges));
}

/// Left translation action of Z/n on itself with S = {+1, -1}.
inline ActionGenerators cyclic_action(int n) {
  std::vector<int> up(n), down(n);
  for (int i = 0; i < n; ++i) {
    up[i] = (i + 1) % n;
    down[i] = (i + n - 1) % n;
  }
  std::vector<NamedTranslation> gens;
  gens.push_back({"+1", PartialTranslation(n, std::move(up))});
  gens.push_back({"-1", PartialTranslation(n, std::move(down))});
  return ActionGenerators(n, std::move(gens), true);
}

/// Realize a generated coarse structure as a group action: symmetrize
/// the union of the generators, adjoin the diagonal, and decompose
/// into involutions. The Schreier graph of the result has edge set
/// containing every generator pair and contained in the symmetrized
/// union. An empty generator list yields an empty action (discrete
/// Schreier graph).
inline ActionGenerators realize_as_action(int n, const std::vector<Entourage>& gens) {
  if (gens.empty()) return ActionGenerators(n, {}, true);
  Entourage s = Entourage::diagonal(n);
  for (const auto& g : gens) {
    if (g.ground_size() != n)
      throw std::invalid_argument("realize_as_action: generator ground set mismatch");
    s = s.union_with(g);
    s = s.union_with(inverse_entourage(g));
  }
  std::vector<PartialTranslation> invs = edge_color_decompose(s);
  std::vector<NamedTranslation> named;
  named.reserve(invs.size());
  for (std::size_t i = 0; i < invs.size(); ++i)
    named.push_back({"inv" + std::to_string(i), std::move(invs[i])});
  return ActionGenerators(n, std::move(named), true);
}

}  // namespace coarse
