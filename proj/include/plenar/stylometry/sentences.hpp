#pragma once

#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "plenar/util/text.hpp"

namespace plenar::stylometry {

namespace detail {

// Abbreviations whose trailing dot does not end a sentence.
inline const std::set<std::string>& abbreviations() {
  static const std::set<std::string> abbr = {
      "sr",  "sra",  "srs", "sras", "dr",  "dra", "exa", "exas", "prof", "profa",
      "art", "arts", "inc", "par",  "pag", "fl",  "fls", "dep",  "av",   "gen",
      "cel", "obs",  "tel", "ltda", "jr",  "dept"};
  return abbr;
}

inline bool is_terminator(char32_t cp) {
  return cp == U'.' || cp == U'!' || cp == U'?' || cp == 0x2026;  // …
}

}  // namespace detail

// Splits on ./!/?/… followed by whitespace or end of text. A dot after a
// listed abbreviation or a single-letter initial does not split. Never
// returns zero sentences for non-empty (non-whitespace) text.
inline std::vector<std::string> split_sentences(std::string_view text) {
  std::vector<std::string> sentences;
  auto cps = util::utf8_codepoints(text);

  std::string last_word;  // letters only, lowercased, reset on non-letter
  std::vector<char32_t> current;
  auto flush = [&]() {
    std::string s = util::trim(util::utf8_encode(current));
    if (!s.empty()) sentences.push_back(s);
    current.clear();
  };

  for (std::size_t i = 0; i < cps.size(); ++i) {
    char32_t cp = cps[i];
    current.push_back(cp);
    if (!detail::is_terminator(cp)) {
      if (util::is_letter(cp)) {
        std::string low;
        util::utf8_append(util::to_lower(cp), low);
        last_word += low;
      } else {
        last_word.clear();
      }
      continue;
    }

    // Consume the whole terminator run ("...", "?!").
    bool has_strong = cp != U'.';
    std::size_t run_len = 1;
    while (i + 1 < cps.size() && detail::is_terminator(cps[i + 1])) {
      ++i;
      current.push_back(cps[i]);
      if (cps[i] != U'.') has_strong = true;
      ++run_len;
    }
    bool at_break = i + 1 >= cps.size() || util::is_space(cps[i + 1]);
    bool abbreviation = !has_strong && run_len == 1 &&
                        (detail::abbreviations().count(last_word) > 0 ||
                         util::utf8_codepoints(last_word).size() == 1);
    last_word.clear();
    if (at_break && !abbreviation) flush();
  }
  flush();
  return sentences;
}

}  // namespace plenar::stylometry
