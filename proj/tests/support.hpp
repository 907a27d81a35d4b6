#pragma once

#include <cmath>
#include <vector>

#include "doctest.h"
#include "nevpull/selfmap.hpp"

namespace testing {

using nevpull::AnalyticSelfMap;
using nevpull::cplx;

inline bool near(double a, double b, double tol) { return std::abs(a - b) <= tol; }
inline bool near(cplx a, cplx b, double tol) { return std::abs(a - b) <= tol; }

inline AnalyticSelfMap identity() { return AnalyticSelfMap::blaschke({0.0}); }
inline AnalyticSelfMap square() { return AnalyticSelfMap::blaschke({0.0, 0.0}); }
inline AnalyticSelfMap b_half() { return AnalyticSelfMap::blaschke({0.0, 0.5}); }
inline AnalyticSelfMap b_three() { return AnalyticSelfMap::blaschke({0.0, cplx{0.0, 0.3}, -0.4}); }
inline AnalyticSelfMap singular1() { return AnalyticSelfMap::atomic_singular(1.0); }
inline AnalyticSelfMap scaled(double t, AnalyticSelfMap m) { return AnalyticSelfMap::scaled(t, std::move(m)); }

/// The standard suite: identity, z^2, zeros {0, 0.5}, zeros {0, 0.3i, -0.4},
/// t * identity for t = 0.5 and 0.9, and the singular inner map with c = 1.
inline std::vector<AnalyticSelfMap> standard_suite() {
  return {identity(), square(), b_half(), b_three(), scaled(0.5, identity()), scaled(0.9, identity()), singular1()};
}

/// Deterministic points of the disk of radius < rmax (golden-angle spiral).
inline std::vector<cplx> spiral(int n, double rmax = 0.95) {
  std::vector<cplx> out;
  const double golden = 2.399963229728653;
  for (int k = 0; k < n; ++k) out.push_back(std::polar(rmax * std::sqrt((k + 0.5) / n), golden * k));
  return out;
}

}  // namespace testing
