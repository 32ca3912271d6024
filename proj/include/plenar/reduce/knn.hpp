#pragma once

#include <algorithm>
#include <vector>

#include "plenar/reduce/params.hpp"
#include "plenar/util/matrix.hpp"

namespace plenar::reduce {

struct KnnResult {
  std::size_t n = 0;
  int k = 0;
  std::vector<std::size_t> indices;   // n x k
  std::vector<double> distances;      // n x k, ascending per row

  std::size_t idx(std::size_t i, int j) const { return indices[i * k + j]; }
  double dist(std::size_t i, int j) const { return distances[i * k + j]; }
};

// Exact brute-force neighbors; ties break toward the lower index, self
// excluded. Fine at this corpus's scale (<= ~20k points per run); an
// approximate backend could slot in behind the same result shape.
inline KnnResult knn(const util::Matrix& points, int k, Metric metric) {
  const std::size_t n = points.rows;
  if (k < 1 || static_cast<std::size_t>(k) >= n)
    throw ParamError("knn: k must satisfy 1 <= k < n");

  KnnResult res;
  res.n = n;
  res.k = k;
  res.indices.resize(n * static_cast<std::size_t>(k));
  res.distances.resize(n * static_cast<std::size_t>(k));

  std::vector<std::pair<double, std::size_t>> row(n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t m = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      double d = metric == Metric::Cosine ? util::cosine_distance(points.row_span(i), points.row_span(j))
                                          : util::euclidean(points.row_span(i), points.row_span(j));
      row[m++] = {d, j};
    }
    std::partial_sort(row.begin(), row.begin() + k, row.end());
    for (int j = 0; j < k; ++j) {
      res.indices[i * k + j] = row[j].second;
      res.distances[i * k + j] = row[j].first;
    }
  }
  return res;
}

}  // namespace plenar::reduce
