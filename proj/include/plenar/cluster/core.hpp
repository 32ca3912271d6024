#pragma once

#include <algorithm>
#include <vector>

#include "plenar/error.hpp"
#include "plenar/util/matrix.hpp"

namespace plenar::cluster {

// Distance to the min_samples-th nearest neighbor, self excluded.
inline std::vector<double> core_distances(const util::Matrix& points, int min_samples) {
  const std::size_t n = points.rows;
  if (min_samples < 1 || static_cast<std::size_t>(min_samples) >= n)
    throw ParamError("core_distances: min_samples must satisfy 1 <= m < n");

  std::vector<double> core(n);
  std::vector<double> row(n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t m = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      row[m++] = util::euclidean(points.row_span(i), points.row_span(j));
    }
    std::nth_element(row.begin(), row.begin() + (min_samples - 1), row.end());
    core[i] = row[min_samples - 1];
  }
  return core;
}

inline double mutual_reachability(const util::Matrix& points, const std::vector<double>& core,
                                  std::size_t i, std::size_t j) {
  double d = util::euclidean(points.row_span(i), points.row_span(j));
  return std::max({core[i], core[j], d});
}

}  // namespace plenar::cluster
