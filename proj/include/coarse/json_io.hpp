#pragma once

#include <fstream>
#include <nlohmann/json.hpp>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "coarse/action.hpp"
#include "coarse/box_space.hpp"
#include "coarse/entourage.hpp"
#include "coarse/ext_dist.hpp"
#include "coarse/graph.hpp"
#include "coarse/measure.hpp"
#include "coarse/operator.hpp"
#include "coarse/suites.hpp"
#include "coarse/translation.hpp"

namespace coarse {

using nlohmann::json;

// Distances serialize as integers, infinity as the string "inf".
inline json to_json(const ExtDist& d) {
  if (d.is_inf()) return json("inf");
  return json(d.value());
}

inline ExtDist ext_dist_from_json(const json& j) {
  if (j.is_string()) {
    if (j.get<std::string>() != "inf") throw std::invalid_argument("ExtDist: bad string value");
    return ExtDist::infinity();
  }
  return ExtDist(j.get<std::int64_t>());
}

// {"n": int, "edges": [[u,v], ...]}
inline void to_json(json& j, const UlfGraph& g) {
  j = json{{"n", g.size()}, {"edges", g.edges()}};
}

inline void from_json(const json& j, UlfGraph& g) {
  g = UlfGraph(j.at("n").get<int>(), j.at("edges").get<std::vector<std::pair<int, int>>>());
}

// {"n": int, "pairs": [[x,y], ...]}
inline void to_json(json& j, const Entourage& e) {
  j = json{{"n", e.ground_size()}, {"pairs", e.pairs()}};
}

inline void from_json(const json& j, Entourage& e) {
  e = Entourage(j.at("n").get<int>(), j.at("pairs").get<std::vector<std::pair<int, int>>>());
}

// Partial maps list one image per vertex, null when undefined.
inline json translation_to_json(const PartialTranslation& p) {
  json map = json::array();
  for (int x = 0; x < p.ground_size(); ++x) {
    if (p.defined_at(x))
      map.push_back(*p.apply(x));
    else
      map.push_back(nullptr);
  }
  return map;
}

inline PartialTranslation translation_from_json(int n, const json& map) {
  std::vector<int> im(n, PartialTranslation::kUndef);
  if (static_cast<int>(map.size()) != n)
    throw std::invalid_argument("PartialTranslation: map length mismatch");
  for (int x = 0; x < n; ++x)
    if (!map[x].is_null()) im[x] = map[x].get<int>();
  return PartialTranslation(n, std::move(im));
}

// {"n": int, "generators": [{"name": str, "map": [...]}, ...]}
inline void to_json(json& j, const ActionGenerators& a) {
  json gens = json::array();
  for (const auto& g : a.generators())
    gens.push_back(json{{"name", g.name}, {"map", translation_to_json(g.map)}});
  j = json{{"n", a.ground_size()}, {"generators", std::move(gens)}};
}

inline void from_json(const json& j, ActionGenerators& a) {
  const int n = j.at("n").get<int>();
  std::vector<NamedTranslation> gens;
  for (const auto& g : j.at("generators"))
    gens.push_back({g.at("name").get<std::string>(), translation_from_json(n, g.at("map"))});
  a = ActionGenerators(n, std::move(gens));
}

// {"components": [graph, ...], "basepoints": [int, ...]}
inline void to_json(json& j, const BoxSpace& b) {
  json comps = json::array();
  json bases = json::array();
  for (int i = 0; i < b.component_count(); ++i) {
    comps.push_back(b.component(i));
    bases.push_back(b.basepoint(i));
  }
  j = json{{"components", std::move(comps)}, {"basepoints", std::move(bases)}};
}

inline void from_json(const json& j, BoxSpace& b) {
  b = BoxSpace(j.at("components").get<std::vector<UlfGraph>>());
}

// {"n": int, "triplets": [[i, j, re, im], ...]}; zero entries dropped,
// row-major order.
inline void to_json(json& j, const PropOperator& a) {
  json triplets = json::array();
  for (int r = 0; r < a.dim(); ++r)
    for (int c = 0; c < a.dim(); ++c) {
      const Complex v = a.mat(r, c);
      if (v != Complex(0.0, 0.0)) triplets.push_back(json::array({r, c, v.real(), v.imag()}));
    }
  j = json{{"n", a.dim()}, {"triplets", std::move(triplets)}};
}

inline void from_json(const json& j, PropOperator& a) {
  const int n = j.at("n").get<int>();
  Matrix m = Matrix::Zero(n, n);
  for (const auto& t : j.at("triplets")) {
    if (t.size() != 4) throw std::invalid_argument("PropOperator: triplet must be [i,j,re,im]");
    const int r = t[0].get<int>(), c = t[1].get<int>();
    if (r < 0 || r >= n || c < 0 || c >= n)
      throw std::invalid_argument("PropOperator: triplet index out of range");
    m(r, c) += Complex(t[2].get<double>(), t[3].get<double>());
  }
  a = PropOperator(std::move(m));
}

// {"n": int, "weights": [[index, weight], ...]}
inline void to_json(json& j, const ProbMeasure& m) {
  j = json{{"n", m.ground_size()}, {"weights", m.entries()}};
}

inline void from_json(const json& j, ProbMeasure& m) {
  m = ProbMeasure(j.at("n").get<int>(),
                  j.at("weights").get<std::vector<std::pair<int, double>>>());
}

// {"check": str, "residual": float, "slack": float, "pass": bool, "seed": int}
inline void to_json(json& j, const CheckReport& r) {
  j = json{{"check", r.check}, {"residual", r.residual}, {"slack", r.slack},
           {"pass", r.pass},   {"seed", r.seed}};
}

inline void from_json(const json& j, CheckReport& r) {
  r.check = j.at("check").get<std::string>();
  r.residual = j.at("residual").get<double>();
  r.slack = j.at("slack").get<double>();
  r.pass = j.at("pass").get<bool>();
  r.seed = j.at("seed").get<std::uint64_t>();
}

inline void save_json(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << j.dump(2) << "\n";
}

inline json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open: " + path);
  return json::parse(in);
}

}  // namespace coarse
