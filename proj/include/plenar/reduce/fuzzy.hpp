#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <vector>

#include "plenar/reduce/knn.hpp"

namespace plenar::reduce {

struct FuzzyEdge {
  std::size_t i = 0;
  std::size_t j = 0;
  double weight = 0.0;  // in (0, 1]
};

struct FuzzyGraph {
  std::size_t n = 0;
  std::vector<FuzzyEdge> edges;  // i < j, sorted, no self-edges
  bool symmetric = true;
  int sigma_clamp_warnings = 0;
};

namespace detail {

// Smooth-kNN calibration: sigma such that
//   sum_j exp(-max(0, d_ij - rho) / sigma) = log2(k)
inline double solve_sigma(const double* dists, int k, double rho, int* warnings) {
  const double target = std::log2(static_cast<double>(k));
  double lo = 0.0, hi = 1.0;

  auto mass = [&](double sigma) {
    double s = 0.0;
    for (int j = 0; j < k; ++j) {
      double d = dists[j] - rho;
      s += d <= 0.0 ? 1.0 : std::exp(-d / sigma);
    }
    return s;
  };

  for (int grow = 0; grow < 64 && mass(hi) < target; ++grow) hi *= 2.0;
  double mid = hi;
  bool converged = false;
  for (int it = 0; it < 64; ++it) {
    mid = 0.5 * (lo + hi);
    double m = mass(mid);
    if (std::fabs(m - target) < 1e-9) {
      converged = true;
      break;
    }
    if (m > target) hi = mid;
    else lo = mid;
  }
  if (!converged && warnings) *warnings += 1;
  return std::max(mid, 1e-12);
}

}  // namespace detail

// Fuzzy topological representation of the kNN graph. Directed membership
// weights exp(-max(0, d - rho)/sigma) are symmetrized with the
// probabilistic t-conorm a + b - ab.
inline FuzzyGraph fuzzy_graph(const KnnResult& nn, int local_connectivity = 1) {
  if (local_connectivity < 1) throw ParamError("local_connectivity must be >= 1");
  if (local_connectivity > nn.k)
    throw ParamError("local_connectivity cannot exceed n_neighbors");

  FuzzyGraph g;
  g.n = nn.n;

  std::map<std::pair<std::size_t, std::size_t>, std::pair<double, double>> directed;
  for (std::size_t i = 0; i < nn.n; ++i) {
    const double rho = nn.dist(i, local_connectivity - 1);
    const double sigma =
        detail::solve_sigma(&nn.distances[i * nn.k], nn.k, rho, &g.sigma_clamp_warnings);
    for (int j = 0; j < nn.k; ++j) {
      std::size_t tgt = nn.idx(i, j);
      double d = nn.dist(i, j) - rho;
      double w = d <= 0.0 ? 1.0 : std::exp(-d / sigma);
      auto key = std::minmax(i, tgt);
      auto& slot = directed[{key.first, key.second}];
      if (i < tgt) slot.first = w;
      else slot.second = w;
    }
  }

  g.edges.reserve(directed.size());
  for (const auto& [key, ab] : directed) {
    double w = ab.first + ab.second - ab.first * ab.second;
    if (w > 0.0) g.edges.push_back({key.first, key.second, w});
  }
  return g;
}

}  // namespace plenar::reduce
