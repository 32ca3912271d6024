#pragma once

#include <cstdint>
#include <string>

#include <nlohmann/json.hpp>

#include "plenar/error.hpp"

namespace plenar::tune {

// The six searched hyperparameters with the study's ranges as defaults.
struct SearchSpace {
  int n_neighbors_lo = 5, n_neighbors_hi = 100;
  int n_components_lo = 5, n_components_hi = 100;
  double min_dist_lo = 0.0, min_dist_hi = 0.5;
  int min_cluster_size_lo = 5, min_cluster_size_hi = 30;
  int min_samples_lo = 1, min_samples_hi = 10;
  double epsilon_lo = 0.0, epsilon_hi = 0.5;

  void validate() const {
    auto check = [](auto lo, auto hi, const char* name) {
      if (lo > hi) throw ParamError(std::string("search space: ") + name + " range inverted");
    };
    check(n_neighbors_lo, n_neighbors_hi, "n_neighbors");
    check(n_components_lo, n_components_hi, "n_components");
    check(min_dist_lo, min_dist_hi, "min_dist");
    check(min_cluster_size_lo, min_cluster_size_hi, "min_cluster_size");
    check(min_samples_lo, min_samples_hi, "min_samples");
    check(epsilon_lo, epsilon_hi, "cluster_selection_epsilon");
    if (n_neighbors_lo < 2) throw ParamError("search space: n_neighbors must be >= 2");
    if (n_components_lo < 2) throw ParamError("search space: n_components must be >= 2");
    if (min_cluster_size_lo < 2) throw ParamError("search space: min_cluster_size must be >= 2");
    if (min_samples_lo < 1) throw ParamError("search space: min_samples must be >= 1");
    if (min_dist_lo < 0 || epsilon_lo < 0) throw ParamError("search space: negative range");
  }

  nlohmann::json to_json() const {
    return {{"n_neighbors", {n_neighbors_lo, n_neighbors_hi}},
            {"n_components", {n_components_lo, n_components_hi}},
            {"min_dist", {min_dist_lo, min_dist_hi}},
            {"min_cluster_size", {min_cluster_size_lo, min_cluster_size_hi}},
            {"min_samples", {min_samples_lo, min_samples_hi}},
            {"cluster_selection_epsilon", {epsilon_lo, epsilon_hi}}};
  }

  static SearchSpace from_json(const nlohmann::json& j) {
    SearchSpace s;
    auto pair_i = [&](const char* key, int& lo, int& hi) {
      if (!j.contains(key)) return;
      lo = j.at(key).at(0).get<int>();
      hi = j.at(key).at(1).get<int>();
    };
    auto pair_d = [&](const char* key, double& lo, double& hi) {
      if (!j.contains(key)) return;
      lo = j.at(key).at(0).get<double>();
      hi = j.at(key).at(1).get<double>();
    };
    pair_i("n_neighbors", s.n_neighbors_lo, s.n_neighbors_hi);
    pair_i("n_components", s.n_components_lo, s.n_components_hi);
    pair_d("min_dist", s.min_dist_lo, s.min_dist_hi);
    pair_i("min_cluster_size", s.min_cluster_size_lo, s.min_cluster_size_hi);
    pair_i("min_samples", s.min_samples_lo, s.min_samples_hi);
    pair_d("cluster_selection_epsilon", s.epsilon_lo, s.epsilon_hi);
    s.validate();
    return s;
  }
};

// A single sampled configuration.
struct TrialParams {
  int n_neighbors = 0;
  int n_components = 0;
  double min_dist = 0.0;
  int min_cluster_size = 0;
  int min_samples = 0;
  double cluster_selection_epsilon = 0.0;

  bool within(const SearchSpace& s) const {
    return n_neighbors >= s.n_neighbors_lo && n_neighbors <= s.n_neighbors_hi &&
           n_components >= s.n_components_lo && n_components <= s.n_components_hi &&
           min_dist >= s.min_dist_lo && min_dist <= s.min_dist_hi &&
           min_cluster_size >= s.min_cluster_size_lo &&
           min_cluster_size <= s.min_cluster_size_hi && min_samples >= s.min_samples_lo &&
           min_samples <= s.min_samples_hi && cluster_selection_epsilon >= s.epsilon_lo &&
           cluster_selection_epsilon <= s.epsilon_hi;
  }

  nlohmann::json to_json() const {
    return {{"n_neighbors", n_neighbors},
            {"n_components", n_components},
            {"min_dist", min_dist},
            {"min_cluster_size", min_cluster_size},
            {"min_samples", min_samples},
            {"cluster_selection_epsilon", cluster_selection_epsilon}};
  }

  static TrialParams from_json(const nlohmann::json& j) {
    TrialParams p;
    p.n_neighbors = j.at("n_neighbors").get<int>();
    p.n_components = j.at("n_components").get<int>();
    p.min_dist = j.at("min_dist").get<double>();
    p.min_cluster_size = j.at("min_cluster_size").get<int>();
    p.min_samples = j.at("min_samples").get<int>();
    p.cluster_selection_epsilon = j.at("cluster_selection_epsilon").get<double>();
    return p;
  }
};

}  // namespace plenar::tune
