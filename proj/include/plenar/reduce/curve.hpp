#pragma once

#include <cmath>
#include <vector>

#include "plenar/error.hpp"

namespace plenar::reduce {

struct CurveParams {
  double a = 0.0;
  double b = 0.0;
};

// Least-squares fit of f(d) = 1 / (1 + a d^(2b)) to the piecewise target
//   1                      for d <= min_dist
//   exp(-(d - min_dist))   beyond
// sampled at 300 points on [0, 3]. Levenberg-Marquardt from (1, 1);
// deterministic given the fixed grid.
inline CurveParams fit_ab(double min_dist) {
  if (min_dist < 0.0 || min_dist > 1.0) throw ParamError("fit_ab: min_dist must be in [0, 1]");

  constexpr int kSamples = 300;
  constexpr double kSpan = 3.0;
  std::vector<double> xs(kSamples), ys(kSamples);
  for (int i = 0; i < kSamples; ++i) {
    double x = kSpan * static_cast<double>(i) / static_cast<double>(kSamples - 1);
    xs[i] = x;
    ys[i] = x <= min_dist ? 1.0 : std::exp(-(x - min_dist));
  }

  double a = 1.0, b = 1.0;
  double lambda = 1e-3;

  auto sq_residual = [&](double pa, double pb) {
    double s = 0.0;
    for (int i = 0; i < kSamples; ++i) {
      double xb = xs[i] > 0.0 ? std::pow(xs[i], 2.0 * pb) : 0.0;
      double f = 1.0 / (1.0 + pa * xb);
      double r = f - ys[i];
      s += r * r;
    }
    return s;
  };

  double cur = sq_residual(a, b);
  for (int iter = 0; iter < 200; ++iter) {
    // J^T J and J^T r for the 2-parameter model
    double jtj00 = 0, jtj01 = 0, jtj11 = 0, jtr0 = 0, jtr1 = 0;
    for (int i = 0; i < kSamples; ++i) {
      double x = xs[i];
      double xb = x > 0.0 ? std::pow(x, 2.0 * b) : 0.0;
      double denom = 1.0 + a * xb;
      double f = 1.0 / denom;
      double r = f - ys[i];
      double dfda = -xb / (denom * denom);
      double dfdb = x > 0.0 ? -2.0 * a * xb * std::log(x) / (denom * denom) : 0.0;
      jtj00 += dfda * dfda;
      jtj01 += dfda * dfdb;
      jtj11 += dfdb * dfdb;
      jtr0 += dfda * r;
      jtr1 += dfdb * r;
    }
    double m00 = jtj00 * (1.0 + lambda), m11 = jtj11 * (1.0 + lambda), m01 = jtj01;
    double det = m00 * m11 - m01 * m01;
    if (std::fabs(det) < 1e-300) break;
    double da = (-jtr0 * m11 + jtr1 * m01) / det;
    double db = (-jtr1 * m00 + jtr0 * m01) / det;
    double na = a + da, nb = b + db;
    if (na <= 1e-6) na = 1e-6;
    if (nb <= 1e-6) nb = 1e-6;
    double nxt = sq_residual(na, nb);
    if (nxt < cur) {
      a = na;
      b = nb;
      cur = nxt;
      lambda = std::max(lambda * 0.5, 1e-12);
      if (std::fabs(da) < 1e-12 && std::fabs(db) < 1e-12) break;
    } else {
      lambda *= 4.0;
      if (lambda > 1e12) break;
    }
  }
  return {a, b};
}

// The low-dimensional similarity curve itself.
inline double low_dim_similarity(double sq_dist, const CurveParams& c) {
  if (sq_dist <= 0.0) return 1.0;
  return 1.0 / (1.0 + c.a * std::pow(sq_dist, c.b));
}

}  // namespace plenar::reduce
