#pragma once

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <string>
#include <vector>

#include "coarse/box_space.hpp"
#include "coarse/csv.hpp"
#include "coarse/ghost.hpp"
#include "coarse/json_io.hpp"
#include "coarse/random_gen.hpp"
#include "coarse/suites.hpp"
#include "coarse/witness.hpp"

namespace coarse {

/// Witness-quality sweep over the cycle box space: per support radius
/// S, the worst ball-average witness quality across components at
/// comparison scale R. On a cycle C_n with n > 2S+1 the quality is
/// exactly 2/(2S+1), so the sweep decays to zero: the finite-scale
/// shadow of property A for this amenable family.
struct AmenableBoxResult {
  std::vector<int> sizes;
  int scale = 1;
  std::vector<QualityRow> sweep;
  std::vector<std::vector<double>> per_component;  // [S index][component]
  std::vector<std::string> failures;

  bool pass() const { return failures.empty(); }
};

inline std::vector<int> default_cycle_sizes() {
  std::vector<int> sizes;
  for (int n = 5; n <= 101; n += 4) sizes.push_back(n);
  return sizes;
}

inline AmenableBoxResult run_amenable_box(const std::vector<int>& sizes, int max_radius,
                                          int scale = 1) {
  AmenableBoxResult out;
  out.sizes = sizes;
  out.scale = scale;
  std::vector<UlfGraph> comps;
  comps.reserve(sizes.size());
  for (int n : sizes) comps.push_back(cycle_graph(n));

  double prev = std::numeric_limits<double>::infinity();
  for (int radius = 1; radius <= max_radius; ++radius) {
    double worst = 0.0;
    std::vector<double> per_comp;
    per_comp.reserve(comps.size());
    for (std::size_t c = 0; c < comps.size(); ++c) {
      const Witness w = ball_average_witness(comps[c], radius);
      const double eps = witness_quality(w, scale, comps[c].metric());
      per_comp.push_back(eps);
      worst = std::max(worst, eps);
      if (scale == 1 && sizes[c] > 2 * radius + 1) {
        const double expected = 2.0 / (2 * radius + 1);
        if (std::abs(eps - expected) > 1e-12)
          out.failures.push_back("component C_" + std::to_string(sizes[c]) + " at S=" +
                                 std::to_string(radius) + ": eps=" + fmt_g(eps) + " expected " +
                                 fmt_g(expected));
      }
    }
    if (worst > 0.0 && worst >= prev)
      out.failures.push_back("quality not strictly decreasing at S=" + std::to_string(radius));
    prev = worst;
    out.sweep.push_back({radius, scale, worst});
    out.per_component.push_back(std::move(per_comp));
  }
  return out;
}

/// Ghost machinery over a box space of expander-like components:
/// spectral gaps, the polynomial block-constant approximation with
/// its per-component error bounds, and the decay profile of the exact
/// block-constant projection, plus the witness-quality sweep (which
/// does not decay to zero for genuine expander families).
struct ExpanderBoxResult {
  std::vector<int> sizes;
  int graph_degree = 0;  // 0 for complete components
  int poly_degree = 0;
  std::vector<SpectralRow> spectral;
  std::vector<double> bounds;    // per component, == spectral[i].ghost_bound
  std::vector<double> measured;  // ||p_k - J/m|| per component
  std::vector<double> profile;   // ghost profile of the exact projection
  std::vector<QualityRow> sweep;
  double quality_floor = 0.0;
  std::vector<std::string> failures;

  bool pass() const { return failures.empty(); }
};

inline ExpanderBoxResult run_expander_box(const std::vector<int>& sizes, int graph_degree,
                                          bool complete, int poly_degree, int max_radius,
                                          int scale, std::uint64_t seed) {
  ExpanderBoxResult out;
  out.sizes = sizes;
  out.graph_degree = complete ? 0 : graph_degree;
  out.poly_degree = poly_degree;

  Rng rng(seed);
  std::vector<UlfGraph> comps;
  comps.reserve(sizes.size());
  for (int m : sizes)
    comps.push_back(complete ? complete_graph(m) : random_connected_regular_graph(rng, m, graph_degree));
  const BoxSpace box(comps);

  const BlockGhost ghost = block_constant_ghost(box, poly_degree);
  out.bounds = ghost.bound;
  for (int c = 0; c < box.component_count(); ++c) {
    const int m = box.component(c).size();
    const int off = box.offset(c);
    Matrix diff = ghost.op.mat.block(off, off, m, m) - Matrix::Constant(m, m, Complex(1.0 / m, 0.0));
    const double measured = operator_norm(diff);
    out.measured.push_back(measured);
    if (measured > ghost.bound[c] + 1e-9)
      out.failures.push_back("component " + std::to_string(c + 1) + ": ghost error " +
                             fmt_g(measured) + " exceeds bound " + fmt_g(ghost.bound[c]));
    SpectralRow row;
    row.component = c + 1;
    row.size = m;
    row.degree = ghost.degree[c];
    row.lambda2 = ghost.lambda2[c];
    row.gap = 1.0 - ghost.lambda2[c];
    row.ghost_bound = ghost.bound[c];
    out.spectral.push_back(row);
  }

  const SparseFamily family(box.ambient_metric(), box.component_blocks());
  const PropOperator projection = block_constant_projection(family);
  for (int c = 0; c < box.component_count(); ++c) {
    const int m = box.component(c).size();
    const int off = box.offset(c);
    const double norm = operator_norm(Matrix(projection.mat.block(off, off, m, m)));
    if (std::abs(norm - 1.0) > 1e-9)
      out.failures.push_back("block " + std::to_string(c + 1) + " norm " + fmt_g(norm));
  }
  out.profile = ghost_profile(projection);
  for (std::size_t k = 1; k < out.profile.size(); ++k)
    if (out.profile[k] > out.profile[k - 1] + 1e-15)
      out.failures.push_back("ghost profile not nonincreasing at k=" + std::to_string(k));

  out.quality_floor = std::numeric_limits<double>::infinity();
  for (int radius = 1; radius <= max_radius; ++radius) {
    double worst = 0.0;
    for (int c = 0; c < box.component_count(); ++c) {
      const Witness w = ball_average_witness(box.component(c), radius);
      worst = std::max(worst, witness_quality(w, scale, box.component(c).metric()));
    }
    out.sweep.push_back({radius, scale, worst});
    out.quality_floor = std::min(out.quality_floor, worst);
  }
  return out;
}

/// All rep-check and smoothing property suites under one seed.
struct LemmaSuiteResult {
  std::vector<CheckReport> checks;
  bool all_pass = false;
};

inline LemmaSuiteResult run_lemma_suite(std::uint64_t seed) {
  LemmaSuiteResult out;
  for (auto&& suite : {run_smoothing_suite(seed), run_rep_check_suite(seed),
                       run_fixed_point_suite(seed)})
    out.checks.insert(out.checks.end(), suite.begin(), suite.end());
  out.all_pass = std::all_of(out.checks.begin(), out.checks.end(),
                             [](const CheckReport& r) { return r.pass; });
  return out;
}

// ---- file emission -------------------------------------------------

inline void write_amenable_box_files(const AmenableBoxResult& r, const std::string& dir,
                                     const std::string& format) {
  std::filesystem::create_directories(dir);
  write_quality_csv(dir + "/quality.csv", r.sweep);
  if (format == "csv") {
    std::ofstream out(dir + "/summary.csv");
    out << "S,R,eps,pass\n";
    for (const auto& row : r.sweep)
      out << row.radius << "," << row.scale << "," << fmt_g(row.eps) << ","
          << (r.pass() ? 1 : 0) << "\n";
  } else {
    json j{{"experiment", "amenable-box"},
           {"sizes", r.sizes},
           {"scale", r.scale},
           {"pass", r.pass()},
           {"failures", r.failures}};
    save_json(dir + "/summary.json", j);
  }
}

inline void write_expander_box_files(const ExpanderBoxResult& r, const std::string& dir,
                                     const std::string& format) {
  std::filesystem::create_directories(dir);
  write_spectral_csv(dir + "/spectral.csv", r.spectral);
  write_kv_csv(dir + "/ghost_profile.csv", r.profile);
  write_kv_csv(dir + "/ghost_bounds.csv", r.bounds);
  write_quality_csv(dir + "/quality.csv", r.sweep);
  if (format == "csv") {
    std::ofstream out(dir + "/summary.csv");
    out << "quality_floor,poly_degree,pass\n";
    out << fmt_g(r.quality_floor) << "," << r.poly_degree << "," << (r.pass() ? 1 : 0) << "\n";
  } else {
    json j{{"experiment", "expander-box"},
           {"sizes", r.sizes},
           {"graph_degree", r.graph_degree},
           {"poly_degree", r.poly_degree},
           {"quality_floor", r.quality_floor},
           {"measured_ghost_error", r.measured},
           {"pass", r.pass()},
           {"failures", r.failures}};
    save_json(dir + "/summary.json", j);
  }
}

inline void write_lemma_suite_files(const LemmaSuiteResult& r, const std::string& dir) {
  std::filesystem::create_directories(dir);
  json j = json::array();
  for (const auto& c : r.checks) j.push_back(c);
  save_json(dir + "/checks.json", j);
}

}  // namespace coarse
