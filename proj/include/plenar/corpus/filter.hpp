#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "plenar/corpus/registry.hpp"
#include "plenar/corpus/types.hpp"

namespace plenar::corpus {

struct FilterPolicy {
  // The study's threshold; parties below it are dropped unless explicitly listed.
  std::int64_t min_speeches_per_party = 15000;
  std::optional<std::vector<std::string>> included_parties;
  std::optional<std::set<int>> included_years;

  void validate() const {
    if (min_speeches_per_party < 0)
      throw ParamError("min_speeches_per_party must be >= 0");
  }
};

struct FilterReport {
  std::map<std::string, std::int64_t> retained_per_party;
  std::map<std::string, std::int64_t> dropped_per_party;
  std::int64_t retained_speeches = 0;
  std::int64_t dropped_speeches = 0;
  bool empty_result_warning = false;
};

// Retains speeches whose canonical party meets the threshold (or is in the
// explicit list). Party names must already be canonical.
inline std::pair<std::vector<SpeechRecord>, FilterReport> apply_filter(
    const std::vector<SpeechRecord>& speeches, const FilterPolicy& policy) {
  policy.validate();

  std::map<std::string, std::int64_t> counts;
  for (const auto& s : speeches) {
    if (policy.included_years && !policy.included_years->count(s.year)) continue;
    counts[s.party_at_time] += 1;
  }

  std::set<std::string> keep;
  if (policy.included_parties) {
    keep.insert(policy.included_parties->begin(), policy.included_parties->end());
  } else {
    for (const auto& [party, n] : counts)
      if (n >= policy.min_speeches_per_party) keep.insert(party);
  }

  std::vector<SpeechRecord> out;
  FilterReport report;
  for (const auto& s : speeches) {
    if (policy.included_years && !policy.included_years->count(s.year)) {
      report.dropped_per_party[s.party_at_time] += 1;
      report.dropped_speeches += 1;
      continue;
    }
    if (keep.count(s.party_at_time)) {
      out.push_back(s);
      report.retained_per_party[s.party_at_time] += 1;
      report.retained_speeches += 1;
    } else {
      report.dropped_per_party[s.party_at_time] += 1;
      report.dropped_speeches += 1;
    }
  }
  report.empty_result_warning = out.empty();
  return {std::move(out), std::move(report)};
}

struct CorpusStats {
  std::map<int, std::int64_t> per_year_counts;
  std::map<std::int64_t, std::int64_t> per_deputy_counts;
  std::int64_t total_speeches = 0;
  std::int64_t distinct_deputies = 0;
  double mean_words_per_speech = 0.0;
};

// Words here are whitespace-separated tokens of the raw transcript.
inline CorpusStats corpus_stats(const std::vector<SpeechRecord>& speeches) {
  CorpusStats st;
  std::int64_t total_words = 0;
  for (const auto& s : speeches) {
    st.per_year_counts[s.year] += 1;
    st.per_deputy_counts[s.deputy_id] += 1;
    st.total_speeches += 1;
    total_words += static_cast<std::int64_t>(util::split_ws(s.raw_text).size());
  }
  st.distinct_deputies = static_cast<std::int64_t>(st.per_deputy_counts.size());
  st.mean_words_per_speech =
      st.total_speeches == 0 ? 0.0
                             : static_cast<double>(total_words) /
                                   static_cast<double>(st.total_speeches);
  return st;
}

}  // namespace plenar::corpus
