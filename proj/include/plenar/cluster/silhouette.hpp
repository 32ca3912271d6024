#pragma once

#include <map>
#include <vector>

#include "plenar/error.hpp"
#include "plenar/util/matrix.hpp"

namespace plenar::cluster {

// Mean over non-noise points of (b - a) / max(a, b), where a is the mean
// distance to the point's own cluster and b the smallest mean distance to
// another cluster. Noise (-1) is excluded entirely; singleton-cluster
// points contribute 0. Euclidean, computed in the space where the
// clustering ran.
inline double silhouette(const util::Matrix& points, const std::vector<int>& labels) {
  if (labels.size() != points.rows)
    throw ParamError("silhouette: labels and points differ in length");

  std::map<int, std::vector<std::size_t>> clusters;
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (labels[i] >= 0) clusters[labels[i]].push_back(i);
  if (clusters.size() < 2)
    throw UndefinedMetricError("silhouette: needs at least 2 non-noise clusters");

  double total = 0.0;
  std::size_t counted = 0;
  for (const auto& [own_label, members] : clusters) {
    for (std::size_t i : members) {
      if (members.size() == 1) {
        counted += 1;  // contributes 0
        continue;
      }
      double a = 0.0;
      for (std::size_t j : members) {
        if (j == i) continue;
        a += util::euclidean(points.row_span(i), points.row_span(j));
      }
      a /= static_cast<double>(members.size() - 1);

      double b = std::numeric_limits<double>::infinity();
      for (const auto& [other_label, other_members] : clusters) {
        if (other_label == own_label) continue;
        double mean = 0.0;
        for (std::size_t j : other_members)
          mean += util::euclidean(points.row_span(i), points.row_span(j));
        mean /= static_cast<double>(other_members.size());
        if (mean < b) b = mean;
      }
      double denom = std::max(a, b);
      total += denom > 0.0 ? (b - a) / denom : 0.0;
      counted += 1;
    }
  }
  return total / static_cast<double>(counted);
}

}  // namespace plenar::cluster
