#pragma once

#include <map>
#include <vector>

#include "plenar/error.hpp"

namespace plenar::cluster {

// Adjusted Rand index between two labelings. Noise labels participate as
// ordinary groups, so spurious noise depresses the score against a
// planted ground truth.
inline double adjusted_rand_index(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() != b.size()) throw ParamError("ari: labelings differ in length");
  if (a.empty()) throw ParamError("ari: empty labelings");
  if (a.size() == 1) return 1.0;

  std::map<std::pair<int, int>, long long> contingency;
  std::map<int, long long> rows, cols;
  for (std::size_t i = 0; i < a.size(); ++i) {
    contingency[{a[i], b[i]}] += 1;
    rows[a[i]] += 1;
    cols[b[i]] += 1;
  }
  auto comb2 = [](long long n) { return static_cast<double>(n) * static_cast<double>(n - 1) / 2.0; };

  double sum_ij = 0.0, sum_a = 0.0, sum_b = 0.0;
  for (const auto& [_, n] : contingency) sum_ij += comb2(n);
  for (const auto& [_, n] : rows) sum_a += comb2(n);
  for (const auto& [_, n] : cols) sum_b += comb2(n);

  double n_pairs = comb2(static_cast<long long>(a.size()));
  double expected = sum_a * sum_b / n_pairs;
  double max_index = 0.5 * (sum_a + sum_b);
  if (max_index == expected) return 1.0;  // both partitions trivial
  return (sum_ij - expected) / (max_index - expected);
}

}  // namespace plenar::cluster
