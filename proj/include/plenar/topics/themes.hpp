#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "plenar/error.hpp"
#include "plenar/topics/ctfidf.hpp"
#include "plenar/util/text.hpp"

namespace plenar::topics {

// Six macro-themes, each a keyword set. The dictionary is a static input
// file (seed keywords plus any expanded terms); swapping in a richer
// dictionary is a config change, not a code change.
class MacroThemeDictionary {
public:
  static constexpr int kThemeCount = 6;

  static MacroThemeDictionary from_json(const nlohmann::json& j) {
    MacroThemeDictionary d;
    if (!j.contains("themes")) throw ConfigError("theme dictionary missing field 'themes'");
    for (const auto& [name, words] : j.at("themes").items()) {
      std::set<std::string> kw;
      for (const auto& w : words) kw.insert(normalize_keyword(w.get<std::string>()));
      if (kw.empty())
        throw ConfigError("theme dictionary: theme '" + name + "' has no keywords");
      d.themes_[name] = std::move(kw);
    }
    if (d.themes_.size() != kThemeCount)
      throw ConfigError("theme dictionary must define exactly " +
                        std::to_string(kThemeCount) + " themes, got " +
                        std::to_string(d.themes_.size()));
    return d;
  }

  const std::map<std::string, std::set<std::string>>& themes() const { return themes_; }

  // Underscores (merged bigrams) and spaces compare equal; everything
  // lowercases.
  static std::string normalize_keyword(const std::string& raw) {
    std::string out = util::lowercase(util::trim(raw));
    for (char& c : out)
      if (c == '_') c = ' ';
    return out;
  }

private:
  std::map<std::string, std::set<std::string>> themes_;
};

struct MacroClassification {
  std::optional<std::string> theme;  // empty = Unclassified
  bool tie = false;
  std::map<std::string, int> overlaps;  // per theme, for audit
};

// Maximal keyword overlap; zero overlap or a tie gives Unclassified (ties
// are flagged rather than resolved by an undocumented priority order).
inline MacroClassification classify_macro(const std::vector<std::string>& topic_keywords,
                                          const MacroThemeDictionary& dict) {
  std::set<std::string> topic_set;
  for (const auto& k : topic_keywords)
    topic_set.insert(MacroThemeDictionary::normalize_keyword(k));

  MacroClassification out;
  int best = 0;
  int best_count = 0;
  for (const auto& [name, words] : dict.themes()) {
    int overlap = 0;
    for (const auto& w : words)
      if (topic_set.count(w)) overlap += 1;
    out.overlaps[name] = overlap;
    if (overlap > best) {
      best = overlap;
      best_count = 1;
      out.theme = name;
    } else if (overlap == best && overlap > 0) {
      best_count += 1;
    }
  }
  if (best == 0) {
    out.theme.reset();
  } else if (best_count > 1) {
    out.theme.reset();
    out.tie = true;
  }
  return out;
}

inline MacroClassification classify_macro(const std::vector<TopicKeyword>& topic_keywords,
                                          const MacroThemeDictionary& dict) {
  std::vector<std::string> terms;
  terms.reserve(topic_keywords.size());
  for (const auto& kw : topic_keywords) terms.push_back(kw.term);
  return classify_macro(terms, dict);
}

}  // namespace plenar::topics
