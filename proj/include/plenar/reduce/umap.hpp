#pragma once

#include "plenar/reduce/fuzzy.hpp"
#include "plenar/reduce/knn.hpp"
#include "plenar/reduce/layout.hpp"
#include "plenar/reduce/params.hpp"

namespace plenar::reduce {

// knn -> fuzzy_graph -> fit_ab -> optimize_layout.
inline LowDimPoints umap(const util::Matrix& vectors, const LayoutParams& params) {
  params.validate(vectors.rows);
  KnnResult nn = knn(vectors, params.n_neighbors, params.metric);
  FuzzyGraph graph = fuzzy_graph(nn);
  return optimize_layout(graph, params);
}

}  // namespace plenar::reduce
