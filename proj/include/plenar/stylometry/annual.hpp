#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "plenar/stylometry/annotations.hpp"
#include "plenar/stylometry/metrics.hpp"

namespace plenar::stylometry {

struct AnnualStyle {
  int year = 0;
  std::int64_t speech_count = 0;
  double mean_word_count = 0.0;
  double mean_flesch = 0.0;
  double mean_ttr = 0.0;
  std::map<std::string, double> mean_pos_ratios;
  std::map<std::string, std::int64_t> total_ner_counts;
  std::vector<EntityCount> entity_rankings;
};

struct AnnualWarning {
  int year = 0;
  std::string message;
};

// Arithmetic means over all speeches of each year; insertion-order
// independent. year_filter drops partial years from the time series (the
// default run config excludes 2025).
inline std::vector<AnnualStyle> aggregate_annual(
    const std::vector<std::pair<int, SpeechStyle>>& styles,
    const std::set<int>& exclude_years = {},
    std::vector<AnnualWarning>* warnings = nullptr) {
  std::map<int, std::vector<const SpeechStyle*>> by_year;
  for (const auto& [year, st] : styles) {
    if (exclude_years.count(year)) continue;
    by_year[year].push_back(&st);
  }
  std::vector<AnnualStyle> out;
  for (const auto& [year, group] : by_year) {
    if (group.empty()) {
      if (warnings) warnings->push_back({year, "no speeches; year omitted"});
      continue;
    }
    AnnualStyle a;
    a.year = year;
    a.speech_count = static_cast<std::int64_t>(group.size());
    double n = static_cast<double>(group.size());
    a.mean_pos_ratios = {{"noun", 0}, {"verb", 0}, {"adj", 0}, {"adv", 0}};
    a.total_ner_counts = {{"PER", 0}, {"ORG", 0}, {"LOC", 0}};
    for (const SpeechStyle* st : group) {
      a.mean_word_count += static_cast<double>(st->word_count);
      a.mean_flesch += st->flesch;
      a.mean_ttr += st->ttr;
      for (const auto& [k, v] : st->pos_ratios) a.mean_pos_ratios[k] += v;
      for (const auto& [k, v] : st->ner_counts) a.total_ner_counts[k] += v;
    }
    a.mean_word_count /= n;
    a.mean_flesch /= n;
    a.mean_ttr /= n;
    for (auto& [_, v] : a.mean_pos_ratios) v /= n;
    out.push_back(std::move(a));
  }
  return out;  // std::map iteration is already year-ascending
}

// Per-year entity rankings from the raw annotations.
inline std::map<int, std::vector<EntityCount>> annual_entities(
    const std::map<int, std::vector<AnnotationSet>>& annotations_by_year, std::size_t top_k) {
  std::map<int, std::vector<EntityCount>> out;
  for (const auto& [year, anns] : annotations_by_year)
    out[year] = ner_salience(anns, top_k);
  return out;
}

}  // namespace plenar::stylometry
