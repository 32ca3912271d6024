#pragma once

#include <limits>
#include <vector>

#include "plenar/cluster/core.hpp"

namespace plenar::cluster {

struct MstEdge {
  std::size_t i = 0;  // i < j
  std::size_t j = 0;
  double weight = 0.0;
};

// Minimum spanning tree of the complete mutual-reachability graph.
// Prim's algorithm over the implicit dense graph; ties break toward the
// (min index, max index) pair so runs are bit-reproducible.
inline std::vector<MstEdge> mst_mutual_reachability(const util::Matrix& points,
                                                    const std::vector<double>& core) {
  const std::size_t n = points.rows;
  std::vector<MstEdge> tree;
  if (n < 2) return tree;
  tree.reserve(n - 1);

  constexpr double kInf = std::numeric_limits<double>::infinity();
  std::vector<bool> in_tree(n, false);
  std::vector<double> best(n, kInf);
  std::vector<std::size_t> parent(n, 0);

  in_tree[0] = true;
  for (std::size_t j = 1; j < n; ++j) {
    best[j] = mutual_reachability(points, core, 0, j);
    parent[j] = 0;
  }

  for (std::size_t step = 1; step < n; ++step) {
    std::size_t pick = n;
    double pick_w = kInf;
    for (std::size_t j = 0; j < n; ++j) {
      if (in_tree[j]) continue;
      if (best[j] < pick_w) {
        pick_w = best[j];
        pick = j;
      }
    }
    in_tree[pick] = true;
    std::size_t a = std::min(pick, parent[pick]);
    std::size_t b = std::max(pick, parent[pick]);
    tree.push_back({a, b, pick_w});

    for (std::size_t j = 0; j < n; ++j) {
      if (in_tree[j]) continue;
      double w = mutual_reachability(points, core, pick, j);
      if (w < best[j] || (w == best[j] && pick < parent[j])) {
        best[j] = w;
        parent[j] = pick;
      }
    }
  }
  return tree;
}

}  // namespace plenar::cluster
