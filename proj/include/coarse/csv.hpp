#pragma once

#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "coarse/witness.hpp"

namespace coarse {

inline std::string fmt_g(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

/// k,value rows (ghost profiles, per-component error bounds).
inline void write_kv_csv(const std::string& path, const std::vector<double>& values) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << "k,value\n";
  for (std::size_t k = 0; k < values.size(); ++k) out << k << "," << fmt_g(values[k]) << "\n";
}

struct QualityRow {
  int radius = 0;  // witness support radius S
  int scale = 0;   // comparison scale R
  double eps = 0.0;
};

/// S,R,eps sweep rows.
inline void write_quality_csv(const std::string& path, const std::vector<QualityRow>& rows) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << "S,R,eps\n";
  for (const auto& r : rows) out << r.radius << "," << r.scale << "," << fmt_g(r.eps) << "\n";
}

/// x,support vertex,weight rows.
inline void write_witness_csv(const std::string& path, const Witness& w) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << "x,support_vertex,weight\n";
  for (int x = 0; x < w.ground_size(); ++x)
    for (const auto& [v, weight] : w.at(x).entries())
      out << x << "," << v << "," << fmt_g(weight) << "\n";
}

struct SpectralRow {
  int component = 0;  // 1-based
  int size = 0;
  int degree = 0;
  double lambda2 = 0.0;
  double gap = 0.0;
  double ghost_bound = 0.0;
};

inline void write_spectral_csv(const std::string& path, const std::vector<SpectralRow>& rows) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << "component,size,degree,lambda2,gap,ghost_bound\n";
  for (const auto& r : rows)
    out << r.component << "," << r.size << "," << r.degree << "," << fmt_g(r.lambda2) << ","
        << fmt_g(r.gap) << "," << fmt_g(r.ghost_bound) << "\n";
}

}  // namespace coarse
