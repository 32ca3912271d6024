#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "plenar/corpus/types.hpp"
#include "plenar/preprocess/normalize.hpp"
#include "plenar/preprocess/phrases.hpp"
#include "plenar/preprocess/speaker.hpp"

namespace plenar::preprocess {

// Single-speaker, normalized token stream with provenance back to the raw
// record. phrase_tokens is filled once the year's PhraseTable is trained.
struct CleanSpeech {
  std::int64_t speech_id = 0;
  std::int64_t deputy_id = 0;
  int year = 0;
  std::string text;
  std::vector<std::string> tokens;
  std::vector<std::string> phrase_tokens;

  nlohmann::json to_json() const {
    nlohmann::json j;
    j["speech_id"] = speech_id;
    j["deputy_id"] = deputy_id;
    j["text"] = text;
    j["tokens"] = tokens;
    j["phrase_tokens"] = phrase_tokens;
    return j;
  }

  static CleanSpeech from_json(const nlohmann::json& j, int year) {
    CleanSpeech c;
    c.speech_id = j.at("speech_id").get<std::int64_t>();
    c.deputy_id = j.at("deputy_id").get<std::int64_t>();
    c.year = year;
    c.text = j.at("text").get<std::string>();
    c.tokens = j.at("tokens").get<std::vector<std::string>>();
    c.phrase_tokens = j.at("phrase_tokens").get<std::vector<std::string>>();
    return c;
  }
};

struct SegmentationStats {
  std::int64_t speeches_in = 0;
  std::int64_t no_intro = 0;         // kept whole, flagged
  std::int64_t multi_speaker = 0;    // truncated at the 2nd intro
  std::int64_t empty_after_clean = 0;  // dropped: no tokens survived
  std::int64_t missing_transcript = 0;

  nlohmann::json to_json() const {
    return {{"speeches_in", speeches_in},
            {"no_intro", no_intro},
            {"multi_speaker", multi_speaker},
            {"empty_after_clean", empty_after_clean},
            {"missing_transcript", missing_transcript}};
  }
};

// raw transcript -> isolated monologue -> normalized text -> tokens.
// Returns nothing when no tokens survive (the speech is not retained).
inline std::optional<CleanSpeech> build_clean_speech(
    const corpus::SpeechRecord& speech, const std::vector<std::string>& honorifics,
    SegmentationStats* stats = nullptr) {
  if (stats) stats->speeches_in += 1;
  if (speech.raw_text.empty()) {
    if (stats) stats->missing_transcript += 1;
    return std::nullopt;
  }
  MonologueResult mono = isolate_monologue(speech.raw_text);
  if (stats) {
    if (mono.no_intro) stats->no_intro += 1;
    if (mono.speaker_count >= 2) stats->multi_speaker += 1;
  }
  CleanSpeech clean;
  clean.speech_id = speech.speech_id;
  clean.deputy_id = speech.deputy_id;
  clean.year = speech.year;
  clean.text = normalize_text(mono.text, honorifics);
  clean.tokens = util::split_ws(clean.text);
  if (clean.tokens.empty()) {
    if (stats) stats->empty_after_clean += 1;
    return std::nullopt;
  }
  clean.phrase_tokens = clean.tokens;  // provisional until the table is trained
  return clean;
}

}  // namespace plenar::preprocess
