#pragma once

#include <array>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <thread>
#include <vector>

#include "plenar/cluster/condense.hpp"
#include "plenar/cluster/silhouette.hpp"
#include "plenar/reduce/umap.hpp"
#include "plenar/tune/objective.hpp"
#include "plenar/tune/space.hpp"
#include "plenar/util/csv.hpp"
#include "plenar/util/rng.hpp"

namespace plenar::tune {

struct Trial {
  int trial_id = 0;
  TrialParams params;
  int n_clusters = 0;
  double noise_fraction = 0.0;
  std::optional<double> raw_silhouette;
  double objective_value = 0.0;
  std::uint64_t seed = 0;
};

enum class Strategy { QuasiRandom, Smbo };

inline std::string to_string(Strategy s) {
  return s == Strategy::QuasiRandom ? "quasirandom" : "smbo";
}

inline Strategy strategy_from_string(const std::string& s) {
  if (s == "quasirandom") return Strategy::QuasiRandom;
  if (s == "smbo") return Strategy::Smbo;
  throw ConfigError("unknown search strategy '" + s + "'");
}

struct SearchOptions {
  int budget = 1024;
  Strategy strategy = Strategy::QuasiRandom;
  std::uint64_t seed = 42;
  PenaltyConfig penalty;
  reduce::Metric metric = reduce::Metric::Cosine;  // pre-reduction metric
  int n_epochs = 0;
  int negative_sample_rate = 5;
  double learning_rate = 1.0;
  int jobs = 1;
  double smbo_warmup_fraction = 0.25;
  int smbo_candidates = 32;
};

struct SearchResult {
  Trial best;
  std::vector<Trial> log;  // by trial_id
  bool degenerate_warning = false;  // every trial had an undefined silhouette
};

namespace detail {

// R_d low-discrepancy sequence: x_n[j] = frac(offset_j + (n+1) * alpha_j)
// with alpha from the d-dimensional generalization of the golden ratio.
class QuasiRandom {
public:
  QuasiRandom(int dims, std::uint64_t seed) : alpha_(dims), offset_(dims) {
    double phi = 2.0;
    for (int it = 0; it < 64; ++it)
      phi = std::pow(1.0 + phi, 1.0 / (dims + 1));
    double inv = 1.0 / phi;
    double acc = 1.0;
    for (int j = 0; j < dims; ++j) {
      acc *= inv;
      alpha_[j] = acc;
      offset_[j] =
          static_cast<double>(util::Rng::derive(seed, 1000 + j) >> 11) * 0x1.0p-53;
    }
  }

  // point index n (0-based), dimension j, in [0, 1)
  double at(int n, int j) const {
    double v = offset_[j] + static_cast<double>(n + 1) * alpha_[j];
    return v - std::floor(v);
  }

private:
  std::vector<double> alpha_;
  std::vector<double> offset_;
};

inline int map_int(double u, int lo, int hi) {
  int span = hi - lo + 1;
  int v = lo + static_cast<int>(std::floor(u * span));
  return std::min(v, hi);
}

inline double map_real(double u, double lo, double hi) { return lo + u * (hi - lo); }

inline TrialParams params_from_unit(const double* u, const SearchSpace& s) {
  TrialParams p;
  p.n_neighbors = map_int(u[0], s.n_neighbors_lo, s.n_neighbors_hi);
  p.n_components = map_int(u[1], s.n_components_lo, s.n_components_hi);
  p.min_dist = map_real(u[2], s.min_dist_lo, s.min_dist_hi);
  p.min_cluster_size = map_int(u[3], s.min_cluster_size_lo, s.min_cluster_size_hi);
  p.min_samples = map_int(u[4], s.min_samples_lo, s.min_samples_hi);
  p.cluster_selection_epsilon = map_real(u[5], s.epsilon_lo, s.epsilon_hi);
  return p;
}

// Normalized parameter-space coordinates for the surrogate's distances.
inline std::array<double, 6> unit_coords(const TrialParams& p, const SearchSpace& s) {
  auto norm_i = [](int v, int lo, int hi) {
    return hi > lo ? static_cast<double>(v - lo) / static_cast<double>(hi - lo) : 0.0;
  };
  auto norm_d = [](double v, double lo, double hi) { return hi > lo ? (v - lo) / (hi - lo) : 0.0; };
  return {norm_i(p.n_neighbors, s.n_neighbors_lo, s.n_neighbors_hi),
          norm_i(p.n_components, s.n_components_lo, s.n_components_hi),
          norm_d(p.min_dist, s.min_dist_lo, s.min_dist_hi),
          norm_i(p.min_cluster_size, s.min_cluster_size_lo, s.min_cluster_size_hi),
          norm_i(p.min_samples, s.min_samples_lo, s.min_samples_hi),
          norm_d(p.cluster_selection_epsilon, s.epsilon_lo, s.epsilon_hi)};
}

}  // namespace detail

// One full pipeline evaluation: umap -> hdbscan -> penalized silhouette.
// n_neighbors is clamped below the point count; the clamped value is what
// gets logged.
inline Trial execute_trial(const util::Matrix& fingerprints, TrialParams params, int trial_id,
                           std::uint64_t trial_seed, const SearchOptions& opts) {
  const std::size_t n = fingerprints.rows;
  params.n_neighbors = std::min<int>(params.n_neighbors, static_cast<int>(n) - 1);

  Trial t;
  t.trial_id = trial_id;
  t.params = params;
  t.seed = trial_seed;

  reduce::LayoutParams layout;
  layout.n_neighbors = params.n_neighbors;
  layout.n_components = params.n_components;
  layout.min_dist = params.min_dist;
  layout.n_epochs = opts.n_epochs;
  layout.negative_sample_rate = opts.negative_sample_rate;
  layout.learning_rate = opts.learning_rate;
  layout.seed = trial_seed;
  layout.metric = opts.metric;
  reduce::LowDimPoints reduced = reduce::umap(fingerprints, layout);

  cluster::ClusterParams cp;
  cp.min_cluster_size = params.min_cluster_size;
  cp.min_samples = params.min_samples;
  cp.cluster_selection_epsilon = params.cluster_selection_epsilon;
  auto [tree, labels] = cluster::hdbscan(reduced.coords, cp);

  std::int64_t noise = 0;
  for (int l : labels.labels)
    if (l < 0) noise += 1;
  t.n_clusters = labels.n_clusters;
  t.noise_fraction = static_cast<double>(noise) / static_cast<double>(n);
  try {
    t.raw_silhouette = cluster::silhouette(reduced.coords, labels.labels);
  } catch (const UndefinedMetricError&) {
    t.raw_silhouette.reset();
  }
  t.objective_value = objective(t.raw_silhouette, t.n_clusters, opts.penalty);
  return t;
}

// Seeded hyperparameter search over the UMAP+HDBSCAN stack. Trials are
// independent; parallel execution merges by trial_id, so the selected
// best does not depend on the worker count.
inline SearchResult search(const util::Matrix& fingerprints, const SearchSpace& space,
                           const SearchOptions& opts) {
  space.validate();
  if (opts.budget < 1) throw ParamError("search: budget must be >= 1");
  if (fingerprints.rows < static_cast<std::size_t>(space.min_cluster_size_hi) + 1)
    throw ParamError("search: need at least max(min_cluster_size)+1 = " +
                     std::to_string(space.min_cluster_size_hi + 1) + " fingerprints, got " +
                     std::to_string(fingerprints.rows));

  detail::QuasiRandom qr(6, opts.seed);
  SearchResult result;
  result.log.resize(opts.budget);

  int warmup = opts.budget;
  if (opts.strategy == Strategy::Smbo)
    warmup = std::max(1, static_cast<int>(std::ceil(opts.budget * opts.smbo_warmup_fraction)));

  auto run_range_parallel = [&](int begin, int end) {
    std::atomic<int> next(begin);
    int jobs = std::max(1, opts.jobs);
    auto worker = [&]() {
      while (true) {
        int id = next.fetch_add(1);
        if (id >= end) break;
        double u[6];
        for (int j = 0; j < 6; ++j) u[j] = qr.at(id, j);
        TrialParams p = detail::params_from_unit(u, space);
        result.log[id] =
            execute_trial(fingerprints, p, id, util::Rng::derive(opts.seed, id), opts);
      }
    };
    if (jobs == 1) {
      worker();
    } else {
      std::vector<std::thread> pool;
      for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
      for (auto& th : pool) th.join();
    }
  };

  run_range_parallel(0, warmup);

  // Sequential model-based refinement: propose candidates, score them with
  // a distance-weighted k-NN surrogate over the log, evaluate the most
  // promising one.
  for (int id = warmup; id < opts.budget; ++id) {
    util::Rng rng(util::Rng::derive(opts.seed, 500000 + id));
    TrialParams best_cand;
    double best_pred = -std::numeric_limits<double>::infinity();
    for (int c = 0; c < std::max(1, opts.smbo_candidates); ++c) {
      double u[6];
      for (int j = 0; j < 6; ++j) u[j] = rng.uniform();
      TrialParams cand = detail::params_from_unit(u, space);
      auto cu = detail::unit_coords(cand, space);
      // 5-NN inverse-distance prediction
      std::vector<std::pair<double, double>> near;  // (distance, objective)
      for (int k = 0; k < id; ++k) {
        auto ku = detail::unit_coords(result.log[k].params, space);
        double d2 = 0.0;
        for (int j = 0; j < 6; ++j) d2 += (cu[j] - ku[j]) * (cu[j] - ku[j]);
        near.emplace_back(std::sqrt(d2), result.log[k].objective_value);
      }
      std::sort(near.begin(), near.end());
      double wsum = 0.0, vsum = 0.0;
      for (std::size_t k = 0; k < std::min<std::size_t>(5, near.size()); ++k) {
        double w = 1.0 / (near[k].first + 1e-6);
        wsum += w;
        vsum += w * near[k].second;
      }
      double pred = wsum > 0.0 ? vsum / wsum : 0.0;
      if (pred > best_pred) {
        best_pred = pred;
        best_cand = cand;
      }
    }
    result.log[id] =
        execute_trial(fingerprints, best_cand, id, util::Rng::derive(opts.seed, id), opts);
  }

  int best_id = 0;
  for (int id = 1; id < opts.budget; ++id)
    if (result.log[id].objective_value > result.log[best_id].objective_value) best_id = id;
  result.best = result.log[best_id];
  result.degenerate_warning = true;
  for (const auto& t : result.log)
    if (t.raw_silhouette) result.degenerate_warning = false;
  return result;
}

inline std::string trials_csv(const std::vector<Trial>& log) {
  util::CsvWriter csv;
  csv.row({"trial_id", "n_neighbors", "n_components", "min_dist", "min_cluster_size",
           "min_samples", "cluster_selection_epsilon", "n_clusters", "noise_fraction",
           "silhouette", "objective", "seed"});
  for (const auto& t : log) {
    csv.row({std::to_string(t.trial_id), std::to_string(t.params.n_neighbors),
             std::to_string(t.params.n_components), util::fmt_double(t.params.min_dist),
             std::to_string(t.params.min_cluster_size), std::to_string(t.params.min_samples),
             util::fmt_double(t.params.cluster_selection_epsilon),
             std::to_string(t.n_clusters), util::fmt_double(t.noise_fraction),
             t.raw_silhouette ? util::fmt_double(*t.raw_silhouette) : "",
             util::fmt_double(t.objective_value), std::to_string(t.seed)});
  }
  return csv.str();
}

struct ApplyResult {
  reduce::LowDimPoints reduced;
  cluster::CondensedTree tree;
  cluster::ClusterLabels labels;
  std::optional<double> silhouette_value;
  nlohmann::json manifest;
};

// One final deterministic run with the chosen parameters; the manifest
// records everything needed to reproduce it bit-for-bit.
inline ApplyResult apply_best(const util::Matrix& fingerprints, const TrialParams& params,
                              std::uint64_t seed, const SearchOptions& opts) {
  ApplyResult res;
  reduce::LayoutParams layout;
  layout.n_neighbors =
      std::min<int>(params.n_neighbors, static_cast<int>(fingerprints.rows) - 1);
  layout.n_components = params.n_components;
  layout.min_dist = params.min_dist;
  layout.n_epochs = opts.n_epochs;
  layout.negative_sample_rate = opts.negative_sample_rate;
  layout.learning_rate = opts.learning_rate;
  layout.seed = seed;
  layout.metric = opts.metric;
  res.reduced = reduce::umap(fingerprints, layout);

  cluster::ClusterParams cp;
  cp.min_cluster_size = params.min_cluster_size;
  cp.min_samples = params.min_samples;
  cp.cluster_selection_epsilon = params.cluster_selection_epsilon;
  auto [tree, labels] = cluster::hdbscan(res.reduced.coords, cp);
  res.tree = std::move(tree);
  res.labels = std::move(labels);
  try {
    res.silhouette_value = cluster::silhouette(res.reduced.coords, res.labels.labels);
  } catch (const UndefinedMetricError&) {
    res.silhouette_value.reset();
  }

  std::int64_t noise = 0;
  for (int l : res.labels.labels)
    if (l < 0) noise += 1;
  res.manifest["params"] = params.to_json();
  res.manifest["seed"] = seed;
  res.manifest["metric"] = reduce::to_string(opts.metric);
  res.manifest["n_epochs"] = layout.resolve_epochs(fingerprints.rows);
  res.manifest["negative_sample_rate"] = opts.negative_sample_rate;
  res.manifest["learning_rate"] = opts.learning_rate;
  res.manifest["n_clusters"] = res.labels.n_clusters;
  res.manifest["noise_fraction"] =
      static_cast<double>(noise) / static_cast<double>(fingerprints.rows);
  if (res.silhouette_value) res.manifest["silhouette"] = *res.silhouette_value;
  else res.manifest["silhouette"] = nullptr;
  return res;
}

}  // namespace plenar::tune
