#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "plenar/error.hpp"

namespace plenar::topics {

struct TopicKeyword {
  std::string term;
  double score = 0.0;
};

// Class-based TF-IDF: all documents of a class concatenate into one
// pseudo-document, then
//   weight(t, c) = tf_{t,c} * log(1 + A / f_t)
// with tf_{t,c} the term's frequency in class c, f_t its total frequency
// across classes, and A the average term count per class. Terms whose
// document frequency (over the original documents) falls below min_df are
// excluded before weighting.
struct CtfidfResult {
  std::vector<std::vector<TopicKeyword>> keywords;  // per class, ranked
  bool all_terms_filtered = false;
};

inline CtfidfResult ctfidf(const std::vector<std::vector<std::vector<std::string>>>& class_docs,
                           std::int64_t min_df = 10, std::size_t top_k = 10) {
  if (class_docs.empty()) throw ParamError("ctfidf: no classes");
  if (min_df < 1) throw ParamError("ctfidf: min_df must be >= 1");

  std::map<std::string, std::int64_t> doc_freq;
  for (const auto& docs : class_docs) {
    for (const auto& doc : docs) {
      std::set<std::string> seen;
      for (const auto& tok : doc) seen.insert(tok);
      for (const auto& tok : seen) doc_freq[tok] += 1;
    }
  }

  std::set<std::string> vocab;
  for (const auto& [term, df] : doc_freq)
    if (df >= min_df) vocab.insert(term);

  CtfidfResult result;
  result.keywords.resize(class_docs.size());
  if (vocab.empty()) {
    result.all_terms_filtered = true;
    return result;
  }

  const std::size_t n_classes = class_docs.size();
  std::vector<std::map<std::string, std::int64_t>> tf(n_classes);
  std::map<std::string, std::int64_t> total_freq;
  std::int64_t grand_total = 0;
  for (std::size_t c = 0; c < n_classes; ++c) {
    for (const auto& doc : class_docs[c]) {
      for (const auto& tok : doc) {
        if (!vocab.count(tok)) continue;
        tf[c][tok] += 1;
        total_freq[tok] += 1;
        grand_total += 1;
      }
    }
  }
  const double avg_per_class = static_cast<double>(grand_total) / static_cast<double>(n_classes);

  for (std::size_t c = 0; c < n_classes; ++c) {
    std::vector<TopicKeyword> ranked;
    ranked.reserve(tf[c].size());
    for (const auto& [term, count] : tf[c]) {
      double weight = static_cast<double>(count) *
                      std::log(1.0 + avg_per_class / static_cast<double>(total_freq[term]));
      ranked.push_back({term, weight});
    }
    std::sort(ranked.begin(), ranked.end(), [](const TopicKeyword& a, const TopicKeyword& b) {
      if (a.score != b.score) return a.score > b.score;
      return a.term < b.term;
    });
    if (ranked.size() > top_k) ranked.resize(top_k);
    result.keywords[c] = std::move(ranked);
  }
  return result;
}

}  // namespace plenar::topics
