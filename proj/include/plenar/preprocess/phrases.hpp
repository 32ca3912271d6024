#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include <nlohmann/json.hpp>

#include "plenar/error.hpp"

namespace plenar::preprocess {

// Collocation-scored bigram detector. A pair merges when it is frequent
// enough and its score clears the threshold:
//   score(a,b) = (count(ab) - min_count) * V / (count(a) * count(b))
// with V the vocabulary size.
struct PhraseTable {
  std::unordered_map<std::string, std::int64_t> vocab_counts;
  std::map<std::pair<std::string, std::string>, std::int64_t> bigram_counts;
  std::int64_t min_count = 5;
  double threshold = 10.0;
  std::set<std::pair<std::string, std::string>> merged;

  double score(const std::string& a, const std::string& b) const {
    auto big = bigram_counts.find({a, b});
    auto ca = vocab_counts.find(a);
    auto cb = vocab_counts.find(b);
    if (big == bigram_counts.end() || ca == vocab_counts.end() || cb == vocab_counts.end())
      return 0.0;
    double v = static_cast<double>(vocab_counts.size());
    return static_cast<double>(big->second - min_count) * v /
           (static_cast<double>(ca->second) * static_cast<double>(cb->second));
  }

  nlohmann::json to_json() const {
    nlohmann::json j;
    j["min_count"] = min_count;
    j["threshold"] = threshold;
    nlohmann::json vc = nlohmann::json::object();
    for (const auto& [tok, n] : std::map<std::string, std::int64_t>(vocab_counts.begin(),
                                                                    vocab_counts.end()))
      vc[tok] = n;
    j["vocab_counts"] = std::move(vc);
    nlohmann::json bc = nlohmann::json::array();
    for (const auto& [pair, n] : bigram_counts)
      bc.push_back({pair.first, pair.second, n});
    j["bigram_counts"] = std::move(bc);
    nlohmann::json mg = nlohmann::json::array();
    for (const auto& pair : merged) mg.push_back({pair.first, pair.second});
    j["merged"] = std::move(mg);
    return j;
  }

  static PhraseTable from_json(const nlohmann::json& j) {
    PhraseTable t;
    t.min_count = j.at("min_count").get<std::int64_t>();
    t.threshold = j.at("threshold").get<double>();
    for (const auto& [tok, n] : j.at("vocab_counts").items())
      t.vocab_counts[tok] = n.get<std::int64_t>();
    for (const auto& e : j.at("bigram_counts"))
      t.bigram_counts[{e.at(0).get<std::string>(), e.at(1).get<std::string>()}] =
          e.at(2).get<std::int64_t>();
    for (const auto& e : j.at("merged"))
      t.merged.insert({e.at(0).get<std::string>(), e.at(1).get<std::string>()});
    return t;
  }
};

inline PhraseTable train_phrases(std::span<const std::vector<std::string>> token_streams,
                                 std::int64_t min_count = 5, double threshold = 10.0) {
  if (token_streams.empty()) throw ParamError("train_phrases: need at least one token stream");
  if (min_count < 1) throw ParamError("train_phrases: min_count must be >= 1");

  PhraseTable t;
  t.min_count = min_count;
  t.threshold = threshold;
  for (const auto& stream : token_streams) {
    for (std::size_t i = 0; i < stream.size(); ++i) {
      t.vocab_counts[stream[i]] += 1;
      if (i + 1 < stream.size()) t.bigram_counts[{stream[i], stream[i + 1]}] += 1;
    }
  }
  for (const auto& [pair, n] : t.bigram_counts) {
    if (n < min_count) continue;
    if (t.score(pair.first, pair.second) >= threshold) t.merged.insert(pair);
  }
  return t;
}

// Single greedy left-to-right pass; a consumed token cannot start a new
// pair, so overlapping candidates resolve to the leftmost merge.
inline std::vector<std::string> apply_phrases(const std::vector<std::string>& tokens,
                                              const PhraseTable& table) {
  std::vector<std::string> out;
  out.reserve(tokens.size());
  std::size_t i = 0;
  while (i < tokens.size()) {
    if (i + 1 < tokens.size() && table.merged.count({tokens[i], tokens[i + 1]})) {
      out.push_back(tokens[i] + "_" + tokens[i + 1]);
      i += 2;
    } else {
      out.push_back(tokens[i]);
      i += 1;
    }
  }
  return out;
}

}  // namespace plenar::preprocess
