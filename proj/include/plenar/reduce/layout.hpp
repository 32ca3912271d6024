#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "plenar/reduce/curve.hpp"
#include "plenar/reduce/fuzzy.hpp"
#include "plenar/reduce/params.hpp"
#include "plenar/util/matrix.hpp"
#include "plenar/util/rng.hpp"

namespace plenar::reduce {

struct LowDimPoints {
  util::Matrix coords;  // n x n_components
};

namespace detail {

inline double clip4(double v) { return v > 4.0 ? 4.0 : (v < -4.0 ? -4.0 : v); }

}  // namespace detail

// Stochastic layout: edge-sampled attraction along the fitted similarity
// curve, negative-sampled repulsion, linearly decaying learning rate.
// Single-threaded and fully determined by (graph, params, seed).
inline LowDimPoints optimize_layout(const FuzzyGraph& graph, const LayoutParams& params) {
  const std::size_t n = graph.n;
  const int dim = params.n_components;
  const CurveParams curve = fit_ab(params.min_dist);
  const int n_epochs = params.resolve_epochs(n);

  util::Rng rng(params.seed);
  LowDimPoints out;
  out.coords = util::Matrix(n, static_cast<std::size_t>(dim));
  for (double& v : out.coords.data) v = rng.uniform(-10.0, 10.0);

  // Directed edge list (both orientations), sampled in proportion to weight.
  struct DirEdge {
    std::size_t head, tail;
  };
  std::vector<DirEdge> edges;
  std::vector<double> weights;
  edges.reserve(graph.edges.size() * 2);
  for (const auto& e : graph.edges) {
    edges.push_back({e.i, e.j});
    weights.push_back(e.weight);
    edges.push_back({e.j, e.i});
    weights.push_back(e.weight);
  }
  if (edges.empty()) return out;

  double max_w = *std::max_element(weights.begin(), weights.end());
  std::vector<double> epochs_per_sample(edges.size());
  for (std::size_t e = 0; e < edges.size(); ++e) epochs_per_sample[e] = max_w / weights[e];

  const double neg_rate = std::max(params.negative_sample_rate, 0);
  std::vector<double> next_sample(edges.size());
  std::vector<double> next_negative(edges.size());
  for (std::size_t e = 0; e < edges.size(); ++e) {
    next_sample[e] = epochs_per_sample[e];
    next_negative[e] = neg_rate > 0.0 ? epochs_per_sample[e] / neg_rate : 0.0;
  }

  const double a = curve.a, b = curve.b;
  double* coords = out.coords.data.data();

  for (int epoch = 1; epoch <= n_epochs; ++epoch) {
    const double alpha =
        params.learning_rate * (1.0 - static_cast<double>(epoch - 1) / static_cast<double>(n_epochs));
    for (std::size_t e = 0; e < edges.size(); ++e) {
      if (next_sample[e] > static_cast<double>(epoch)) continue;
      double* yi = coords + edges[e].head * static_cast<std::size_t>(dim);
      double* yj = coords + edges[e].tail * static_cast<std::size_t>(dim);

      double d2 = 0.0;
      for (int d = 0; d < dim; ++d) {
        double diff = yi[d] - yj[d];
        d2 += diff * diff;
      }
      if (d2 > 0.0) {
        double grad_coeff = (-2.0 * a * b * std::pow(d2, b - 1.0)) / (1.0 + a * std::pow(d2, b));
        for (int d = 0; d < dim; ++d) {
          double g = detail::clip4(grad_coeff * (yi[d] - yj[d]));
          yi[d] += g * alpha;
          yj[d] -= g * alpha;
        }
      }
      next_sample[e] += epochs_per_sample[e];

      if (neg_rate > 0.0) {
        double eps_per_neg = epochs_per_sample[e] / neg_rate;
        int n_neg =
            static_cast<int>((static_cast<double>(epoch) - next_negative[e]) / eps_per_neg);
        for (int s = 0; s < n_neg; ++s) {
          std::size_t k = static_cast<std::size_t>(rng.below(n));
          if (k == edges[e].head) continue;
          double* yk = coords + k * static_cast<std::size_t>(dim);
          double dk2 = 0.0;
          for (int d = 0; d < dim; ++d) {
            double diff = yi[d] - yk[d];
            dk2 += diff * diff;
          }
          if (dk2 > 0.0) {
            double grad_coeff = (2.0 * b) / ((0.001 + dk2) * (1.0 + a * std::pow(dk2, b)));
            for (int d = 0; d < dim; ++d)
              yi[d] += detail::clip4(grad_coeff * (yi[d] - yk[d])) * alpha;
          } else if (edges[e].tail != k) {
            for (int d = 0; d < dim; ++d) yi[d] += 4.0 * alpha;
          }
        }
        next_negative[e] += n_neg * eps_per_neg;
      }
    }
  }

  if (!out.coords.all_finite())
    throw Error("optimize_layout: non-finite coordinates after optimization");
  return out;
}

}  // namespace plenar::reduce
