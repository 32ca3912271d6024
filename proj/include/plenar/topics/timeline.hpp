#pragma once

#include <map>
#include <string>
#include <vector>

#include "plenar/topics/pipeline.hpp"
#include "plenar/topics/themes.hpp"

namespace plenar::topics {

struct ThemeTimeline {
  struct YearRow {
    int year = 0;
    std::map<std::string, double> shares;  // theme -> classified share
    double unclassified_share = 0.0;
    std::string dominant;
    bool dominant_tie = false;
  };
  std::vector<YearRow> rows;  // year-ascending
};

// Speech-weighted theme shares per year and the dominant-theme timeline.
// Shares sum to <= 1; noise documents and Unclassified topics make up the
// remainder. Dominance ties resolve to the lexicographically first theme,
// flagged.
inline ThemeTimeline theme_timeline(const std::vector<YearTopics>& years,
                                    const MacroThemeDictionary& dict) {
  ThemeTimeline tl;
  std::map<int, const YearTopics*> ordered;
  for (const auto& y : years) ordered[y.year] = &y;

  for (const auto& [year, yt] : ordered) {
    ThemeTimeline::YearRow row;
    row.year = year;
    for (const auto& [theme, _] : dict.themes()) row.shares[theme] = 0.0;

    double total = static_cast<double>(yt->total_docs);
    if (total <= 0.0) {
      tl.rows.push_back(std::move(row));
      continue;
    }
    double unclassified_docs = 0.0;
    for (const auto& topic : yt->topics) {
      MacroClassification cls = classify_macro(topic.keywords, dict);
      if (cls.theme)
        row.shares[*cls.theme] += static_cast<double>(topic.doc_count) / total;
      else
        unclassified_docs += static_cast<double>(topic.doc_count);
    }
    row.unclassified_share = unclassified_docs / total;

    double best = -1.0;
    int best_count = 0;
    for (const auto& [theme, share] : row.shares) {
      if (share > best) {
        best = share;
        best_count = 1;
        row.dominant = theme;
      } else if (share == best) {
        best_count += 1;
      }
    }
    row.dominant_tie = best_count > 1;  // lexicographically first already wins
    tl.rows.push_back(std::move(row));
  }
  return tl;
}

}  // namespace plenar::topics
