#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <numeric>
#include <set>
#include <vector>

#include <nlohmann/json.hpp>

#include "plenar/cluster/mst.hpp"

namespace plenar::cluster {

struct ClusterParams {
  int min_cluster_size = 6;
  int min_samples = 10;
  double cluster_selection_epsilon = 0.15;

  void validate() const {
    if (min_cluster_size < 2) throw ParamError("min_cluster_size must be >= 2");
    if (min_samples < 1) throw ParamError("min_samples must be >= 1");
    if (cluster_selection_epsilon < 0.0)
      throw ParamError("cluster_selection_epsilon must be >= 0");
  }
};

struct ClusterLabels {
  std::vector<int> labels;  // -1 = noise
  int n_clusters = 0;
  bool all_noise_warning = false;
};

struct CondensedTree {
  struct Node {
    int parent = -1;
    double birth_lambda = 0.0;
    double death_lambda = std::numeric_limits<double>::infinity();
    std::size_t size = 0;  // points at birth
    std::vector<int> children;
    std::vector<std::pair<std::size_t, double>> point_events;  // (point, exit lambda)
  };
  std::vector<Node> nodes;          // [0] is the root cluster
  std::vector<double> stabilities;  // per node
  std::vector<int> selected;        // final selected cluster ids

  nlohmann::json to_json() const {
    nlohmann::json out = nlohmann::json::array();
    for (std::size_t c = 0; c < nodes.size(); ++c) {
      nlohmann::json n;
      n["cluster_id"] = c;
      n["parent"] = nodes[c].parent;
      n["birth_lambda"] = nodes[c].birth_lambda;
      n["death_lambda"] = std::isfinite(nodes[c].death_lambda) ? nodes[c].death_lambda : -1.0;
      n["size"] = nodes[c].size;
      n["stability"] = stabilities[c];
      n["children"] = nodes[c].children;
      nlohmann::json ev = nlohmann::json::array();
      for (const auto& [p, lam] : nodes[c].point_events) ev.push_back({p, lam});
      n["point_events"] = std::move(ev);
      n["selected"] =
          std::find(selected.begin(), selected.end(), static_cast<int>(c)) != selected.end();
      out.push_back(std::move(n));
    }
    return out;
  }
};

namespace detail {

// Single-linkage dendrogram node; children < n are points, >= n index
// earlier merges (child - n).
struct SlNode {
  std::size_t left = 0;
  std::size_t right = 0;
  double distance = 0.0;
  std::size_t size = 0;
};

inline std::vector<SlNode> single_linkage(std::vector<MstEdge> mst, std::size_t n) {
  std::sort(mst.begin(), mst.end(), [](const MstEdge& a, const MstEdge& b) {
    if (a.weight != b.weight) return a.weight < b.weight;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  });
  std::vector<std::size_t> uf_parent(n + mst.size());
  std::iota(uf_parent.begin(), uf_parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    while (uf_parent[x] != x) {
      uf_parent[x] = uf_parent[uf_parent[x]];
      x = uf_parent[x];
    }
    return x;
  };
  // component root -> its current dendrogram node id (points are their own)
  std::vector<std::size_t> node_of(n + mst.size());
  std::iota(node_of.begin(), node_of.end(), 0);

  std::vector<SlNode> nodes;
  nodes.reserve(mst.size());
  for (const auto& e : mst) {
    std::size_t ra = find(e.i), rb = find(e.j);
    std::size_t na = node_of[ra], nb = node_of[rb];
    SlNode merged;
    merged.left = std::min(na, nb);
    merged.right = std::max(na, nb);
    merged.distance = e.weight;
    auto size_of = [&](std::size_t node) {
      return node < n ? std::size_t{1} : nodes[node - n].size;
    };
    merged.size = size_of(na) + size_of(nb);
    nodes.push_back(merged);
    std::size_t new_id = n + nodes.size() - 1;
    uf_parent[ra] = new_id;
    uf_parent[rb] = new_id;
    node_of[new_id] = new_id;
  }
  return nodes;
}

inline void collect_points(const std::vector<SlNode>& sl, std::size_t n, std::size_t node,
                           std::vector<std::size_t>& out) {
  std::vector<std::size_t> stack{node};
  while (!stack.empty()) {
    std::size_t cur = stack.back();
    stack.pop_back();
    if (cur < n) {
      out.push_back(cur);
    } else {
      stack.push_back(sl[cur - n].left);
      stack.push_back(sl[cur - n].right);
    }
  }
}

constexpr double kMinDistance = 1e-10;  // caps lambda for coincident points

}  // namespace detail

// Condenses the single-linkage hierarchy (splits smaller than
// min_cluster_size become point fall-outs), scores cluster stability
// sum(lambda_exit - lambda_birth), applies excess-of-mass selection and
// the epsilon merge rule, and labels unselected points -1.
inline std::pair<CondensedTree, ClusterLabels> condense_and_select(
    const std::vector<MstEdge>& mst, std::size_t n_points, const ClusterParams& params) {
  params.validate();
  const std::size_t mcs = static_cast<std::size_t>(params.min_cluster_size);

  CondensedTree tree;
  ClusterLabels labels;
  labels.labels.assign(n_points, -1);

  if (n_points < mcs || n_points < 2) {
    labels.all_noise_warning = true;
    return {tree, labels};
  }

  auto sl = detail::single_linkage(mst, n_points);
  const std::size_t root_sl = n_points + sl.size() - 1;

  tree.nodes.push_back({});  // condensed root
  tree.nodes[0].parent = -1;
  tree.nodes[0].birth_lambda = 0.0;
  tree.nodes[0].size = n_points;

  // Walk the dendrogram top-down carrying the condensed cluster id.
  std::vector<std::pair<std::size_t, int>> stack{{root_sl, 0}};
  while (!stack.empty()) {
    auto [sl_id, cid] = stack.back();
    stack.pop_back();
    const auto& node = sl[sl_id - n_points];
    double lam = 1.0 / std::max(node.distance, detail::kMinDistance);

    auto size_of = [&](std::size_t child) {
      return child < n_points ? std::size_t{1} : sl[child - n_points].size;
    };
    std::size_t size_l = size_of(node.left), size_r = size_of(node.right);
    bool big_l = size_l >= mcs, big_r = size_r >= mcs;

    auto fall_out = [&](std::size_t child) {
      std::vector<std::size_t> pts;
      detail::collect_points(sl, n_points, child, pts);
      std::sort(pts.begin(), pts.end());
      for (std::size_t p : pts) tree.nodes[cid].point_events.push_back({p, lam});
    };

    if (big_l && big_r) {
      for (std::size_t child : {node.left, node.right}) {
        int new_id = static_cast<int>(tree.nodes.size());
        tree.nodes.push_back({});
        tree.nodes[new_id].parent = cid;
        tree.nodes[new_id].birth_lambda = lam;
        tree.nodes[new_id].size = size_of(child);
        tree.nodes[cid].children.push_back(new_id);
      }
      tree.nodes[cid].death_lambda = lam;
      // push right first so the left child is processed first (ids stay ordered)
      stack.emplace_back(node.right, tree.nodes[cid].children[1]);
      stack.emplace_back(node.left, tree.nodes[cid].children[0]);
    } else if (big_l) {
      fall_out(node.right);
      stack.emplace_back(node.left, cid);
    } else if (big_r) {
      fall_out(node.left);
      stack.emplace_back(node.right, cid);
    } else {
      fall_out(node.left);
      fall_out(node.right);
      tree.nodes[cid].death_lambda = lam;
    }
  }

  // Stability: every exit (point fall-out, or handoff to a child cluster)
  // contributes (lambda_exit - lambda_birth) per point.
  tree.stabilities.assign(tree.nodes.size(), 0.0);
  for (std::size_t c = 0; c < tree.nodes.size(); ++c) {
    const auto& node = tree.nodes[c];
    for (const auto& [p, lam] : node.point_events)
      tree.stabilities[c] += lam - node.birth_lambda;
    for (int child : node.children)
      tree.stabilities[c] += (tree.nodes[child].birth_lambda - node.birth_lambda) *
                             static_cast<double>(tree.nodes[child].size);
  }

  // Excess-of-mass: leaves first; a parent keeps its children when their
  // combined propagated stability beats its own. The root is never a
  // cluster. Ties select the ancestor (the lower cluster id).
  std::vector<bool> is_selected(tree.nodes.size(), true);
  std::vector<double> propagated = tree.stabilities;
  is_selected[0] = false;

  auto deselect_descendants = [&](int top) {
    std::vector<int> st{top};
    while (!st.empty()) {
      int cur = st.back();
      st.pop_back();
      for (int child : tree.nodes[cur].children) {
        is_selected[child] = false;
        st.push_back(child);
      }
    }
  };

  for (std::size_t c = tree.nodes.size(); c-- > 1;) {
    double subtree = 0.0;
    for (int child : tree.nodes[c].children) subtree += propagated[child];
    if (!tree.nodes[c].children.empty() && subtree > tree.stabilities[c]) {
      is_selected[c] = false;
      propagated[c] = subtree;
    } else {
      is_selected[c] = true;
      deselect_descendants(static_cast<int>(c));
    }
  }

  // Epsilon merge: a selected cluster born "closer" than epsilon (birth
  // lambda > 1/epsilon) is replaced by its highest ancestor still below
  // the threshold; never the root.
  std::vector<int> selected;
  for (std::size_t c = 1; c < tree.nodes.size(); ++c)
    if (is_selected[c]) selected.push_back(static_cast<int>(c));

  if (params.cluster_selection_epsilon > 0.0 && !selected.empty()) {
    const double eps = params.cluster_selection_epsilon;
    std::set<int> processed;
    std::vector<int> merged;
    auto descendants = [&](int top, std::set<int>& out) {
      std::vector<int> st{top};
      while (!st.empty()) {
        int cur = st.back();
        st.pop_back();
        for (int child : tree.nodes[cur].children) {
          out.insert(child);
          st.push_back(child);
        }
      }
    };
    for (int c : selected) {
      double born_at = 1.0 / tree.nodes[c].birth_lambda;
      if (born_at >= eps) {
        merged.push_back(c);
        continue;
      }
      if (processed.count(c)) continue;
      int cur = c;
      while (true) {
        int parent = tree.nodes[cur].parent;
        if (parent <= 0) break;  // next stop is the root: stay at cur
        if (1.0 / tree.nodes[parent].birth_lambda > eps) {
          cur = parent;
          break;
        }
        cur = parent;
      }
      merged.push_back(cur);
      std::set<int> desc;
      descendants(cur, desc);
      processed.insert(desc.begin(), desc.end());
    }
    std::sort(merged.begin(), merged.end());
    merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
    selected = std::move(merged);
  }

  std::sort(selected.begin(), selected.end());
  tree.selected = selected;

  std::vector<int> label_of_node(tree.nodes.size(), -1);
  for (std::size_t i = 0; i < selected.size(); ++i) label_of_node[selected[i]] = static_cast<int>(i);

  // A point gets the label of the nearest selected ancestor of the
  // cluster it fell out of.
  for (std::size_t c = 0; c < tree.nodes.size(); ++c) {
    for (const auto& [p, lam] : tree.nodes[c].point_events) {
      int cur = static_cast<int>(c);
      int label = -1;
      while (cur >= 0) {
        if (label_of_node[cur] >= 0) {
          label = label_of_node[cur];
          break;
        }
        cur = tree.nodes[cur].parent;
      }
      labels.labels[p] = label;
    }
  }
  labels.n_clusters = static_cast<int>(selected.size());
  labels.all_noise_warning = labels.n_clusters == 0;
  return {tree, labels};
}

// core distances -> mutual-reachability MST -> condensed tree selection.
inline std::pair<CondensedTree, ClusterLabels> hdbscan(const util::Matrix& points,
                                                       const ClusterParams& params) {
  params.validate();
  const std::size_t n = points.rows;
  if (n < static_cast<std::size_t>(params.min_cluster_size) ||
      static_cast<std::size_t>(params.min_samples) >= n) {
    ClusterLabels labels;
    labels.labels.assign(n, -1);
    labels.all_noise_warning = true;
    return {CondensedTree{}, labels};
  }
  auto core = core_distances(points, params.min_samples);
  auto tree_edges = mst_mutual_reachability(points, core);
  return condense_and_select(tree_edges, n, params);
}

}  // namespace plenar::cluster
