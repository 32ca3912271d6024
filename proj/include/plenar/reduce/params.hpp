#pragma once

#include <cstdint>
#include <string>

#include "plenar/error.hpp"

namespace plenar::reduce {

enum class Metric { Cosine, Euclidean };

inline std::string to_string(Metric m) { return m == Metric::Cosine ? "cosine" : "euclidean"; }

inline Metric metric_from_string(const std::string& s) {
  if (s == "cosine") return Metric::Cosine;
  if (s == "euclidean") return Metric::Euclidean;
  throw ConfigError("unknown metric '" + s + "' (expected cosine or euclidean)");
}

struct LayoutParams {
  int n_neighbors = 15;
  int n_components = 2;
  double min_dist = 0.1;
  int n_epochs = 0;  // 0 = auto: 500 for n <= 10000, else 200
  int negative_sample_rate = 5;
  double learning_rate = 1.0;
  std::uint64_t seed = 42;
  Metric metric = Metric::Cosine;

  int resolve_epochs(std::size_t n_points) const {
    if (n_epochs > 0) return n_epochs;
    return n_points <= 10000 ? 500 : 200;
  }

  void validate(std::size_t n_points) const {
    if (n_neighbors < 2 || static_cast<std::size_t>(n_neighbors) >= n_points)
      throw ParamError("n_neighbors must satisfy 2 <= k < n (k=" + std::to_string(n_neighbors) +
                       ", n=" + std::to_string(n_points) + ")");
    if (n_components < 2) throw ParamError("n_components must be >= 2");
    if (min_dist < 0.0 || min_dist > 1.0) throw ParamError("min_dist must be in [0, 1]");
    if (negative_sample_rate < 0) throw ParamError("negative_sample_rate must be >= 0");
    if (learning_rate <= 0.0) throw ParamError("learning_rate must be > 0");
  }
};

}  // namespace plenar::reduce
