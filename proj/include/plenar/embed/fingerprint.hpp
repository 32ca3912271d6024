#pragma once

#include <cmath>
#include <cstdint>
#include <span>
#include <vector>

#include "plenar/embed/store.hpp"
#include "plenar/error.hpp"

namespace plenar::embed {

// A deputy's semantic fingerprint: the mean of their speech embeddings.
struct Fingerprint {
  std::int64_t deputy_id = 0;
  std::vector<double> vector;
  std::int64_t speech_count = 0;
};

// Plain component-wise mean (the literal definition). Set normalize_first
// to study length-normalized averaging instead.
inline Fingerprint fingerprint(std::int64_t deputy_id, const VectorStore& store,
                               std::span<const std::int64_t> speech_ids,
                               bool normalize_first = false) {
  if (speech_ids.empty())
    throw ParamError("fingerprint: deputy " + std::to_string(deputy_id) +
                     " has no speeches; exclude upstream");
  Fingerprint fp;
  fp.deputy_id = deputy_id;
  fp.speech_count = static_cast<std::int64_t>(speech_ids.size());
  fp.vector.assign(store.dim(), 0.0);
  for (std::int64_t sid : speech_ids) {
    auto v = store.vector(sid);
    if (normalize_first) {
      double norm = 0.0;
      for (double x : v) norm += x * x;
      norm = std::sqrt(norm);
      double inv = norm > 0.0 ? 1.0 / norm : 0.0;
      for (std::size_t i = 0; i < v.size(); ++i) fp.vector[i] += v[i] * inv;
    } else {
      for (std::size_t i = 0; i < v.size(); ++i) fp.vector[i] += v[i];
    }
  }
  double inv_n = 1.0 / static_cast<double>(speech_ids.size());
  for (double& x : fp.vector) x *= inv_n;
  return fp;
}

}  // namespace plenar::embed
