#pragma once

#include <algorithm>
#include <optional>

namespace plenar::tune {

// Cluster-count-penalized silhouette. Configurations with few clusters
// are penalized linearly below k_min so trivial splits cannot win:
//   objective = silhouette - penalty_weight * max(0, k_min - n_clusters)
// An undefined silhouette (< 2 clusters) scores strictly below anything a
// defined trial can reach.
struct PenaltyConfig {
  int k_min = 10;
  double penalty_weight = 0.1;
};

inline double objective(std::optional<double> raw_silhouette, int n_clusters,
                        const PenaltyConfig& cfg) {
  if (!raw_silhouette)
    return -1.0 - cfg.penalty_weight * static_cast<double>(cfg.k_min);
  double penalty =
      cfg.penalty_weight * static_cast<double>(std::max(0, cfg.k_min - n_clusters));
  return *raw_silhouette - penalty;
}

}  // namespace plenar::tune
