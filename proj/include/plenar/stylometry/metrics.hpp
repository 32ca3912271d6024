#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "plenar/error.hpp"
#include "plenar/stylometry/sentences.hpp"
#include "plenar/stylometry/syllables.hpp"
#include "plenar/util/text.hpp"

namespace plenar::stylometry {

// Classic Flesch constants (the 1948 formulation). Alternates can be
// configured without code change.
struct FleschConstants {
  double base = 206.835;
  double words_per_sentence_weight = 1.015;
  double syllables_per_word_weight = 84.6;
};

inline double flesch_from_counts(std::int64_t words, std::int64_t sentences,
                                 std::int64_t syllables,
                                 const FleschConstants& k = FleschConstants{}) {
  if (words < 1 || sentences < 1)
    throw UndefinedMetricError("flesch: needs at least one word and one sentence");
  return k.base -
         k.words_per_sentence_weight * (static_cast<double>(words) / static_cast<double>(sentences)) -
         k.syllables_per_word_weight * (static_cast<double>(syllables) / static_cast<double>(words));
}

// Numeric tokens count one syllable each; alphabetic tokens go through
// the Portuguese heuristic.
inline std::int64_t count_text_syllables(const std::vector<std::string>& words) {
  std::int64_t syllables = 0;
  for (const auto& w : words)
    syllables += util::is_alphabetic_word(w) ? count_syllables_pt(w) : 1;
  return syllables;
}

inline double flesch_score(std::string_view text, const FleschConstants& k = FleschConstants{}) {
  auto words = util::word_tokens(text);
  auto sentences = split_sentences(text);
  if (words.empty() || sentences.empty())
    throw UndefinedMetricError("flesch: text has no words or no sentences");
  return flesch_from_counts(static_cast<std::int64_t>(words.size()),
                            static_cast<std::int64_t>(sentences.size()),
                            count_text_syllables(words), k);
}

// Type-token ratio: distinct tokens over total tokens.
inline double ttr(const std::vector<std::string>& tokens) {
  if (tokens.empty()) throw UndefinedMetricError("ttr: empty token list");
  std::map<std::string_view, int> distinct;
  for (const auto& t : tokens) distinct[t] = 1;
  return static_cast<double>(distinct.size()) / static_cast<double>(tokens.size());
}

// Per-speech stylometric profile. Readability and diversity are computed
// on the isolated monologue before normalization (sentence punctuation is
// still needed); POS/NER slots are filled from annotation files.
struct SpeechStyle {
  std::int64_t speech_id = 0;
  std::int64_t word_count = 0;
  std::int64_t sentence_count = 0;
  std::int64_t syllable_count = 0;
  double flesch = 0.0;
  double ttr = 0.0;
  std::map<std::string, double> pos_ratios;       // noun/verb/adj/adv
  std::map<std::string, std::int64_t> ner_counts;  // PER/ORG/LOC
};

inline SpeechStyle compute_style(std::int64_t speech_id, std::string_view monologue,
                                 const FleschConstants& k = FleschConstants{}) {
  auto words = util::word_tokens(monologue);
  auto sentences = split_sentences(monologue);
  if (words.empty() || sentences.empty())
    throw UndefinedMetricError("speech " + std::to_string(speech_id) +
                               ": no words or sentences, style undefined");
  SpeechStyle st;
  st.speech_id = speech_id;
  st.word_count = static_cast<std::int64_t>(words.size());
  st.sentence_count = static_cast<std::int64_t>(sentences.size());
  st.syllable_count = count_text_syllables(words);
  st.flesch = flesch_from_counts(st.word_count, st.sentence_count, st.syllable_count, k);
  std::vector<std::string> lowered;
  lowered.reserve(words.size());
  for (const auto& w : words) lowered.push_back(util::lowercase(w));
  st.ttr = ttr(lowered);
  st.pos_ratios = {{"noun", 0.0}, {"verb", 0.0}, {"adj", 0.0}, {"adv", 0.0}};
  st.ner_counts = {{"PER", 0}, {"ORG", 0}, {"LOC", 0}};
  return st;
}

}  // namespace plenar::stylometry
