#pragma once

#include <set>
#include <string>
#include <vector>

#include "plenar/stylometry/annotations.hpp"
#include "plenar/util/text.hpp"

namespace plenar::stylometry {

// NAIVE suffix/lexicon tagger — FOR TESTS AND DEMOS ONLY, NOT PRODUCTION.
// Real runs ingest annotation files produced offline by a proper tagger;
// this one exists so the pipeline can be exercised without models. Runs
// that use it are marked "tagger=naive-fallback" in their report headers.
namespace fallback {

inline bool ends_with(const std::string& w, const char* suffix) {
  std::string s(suffix);
  return w.size() >= s.size() && w.compare(w.size() - s.size(), s.size(), s) == 0;
}

inline std::string pos_tag(const std::string& token) {
  static const std::set<std::string> dets = {"o",  "a",  "os", "as", "um",  "uma",
                                             "uns", "umas", "este", "esta", "esse", "essa"};
  static const std::set<std::string> adps = {"de", "da", "do", "das", "dos", "em", "no", "na",
                                             "nos", "nas", "para", "por", "com", "sem", "sobre",
                                             "entre", "até", "desde", "contra", "ao", "aos"};
  static const std::set<std::string> conj = {"e", "ou", "mas", "que", "se", "porque", "como",
                                             "quando", "pois"};
  static const std::set<std::string> advs = {"não", "já", "hoje", "ontem", "amanhã", "sempre",
                                             "nunca", "muito", "pouco", "bem", "mal", "mais",
                                             "menos", "aqui", "ali", "agora", "também", "apenas",
                                             "ainda", "depois", "antes", "assim", "sim"};
  static const std::set<std::string> verbs = {"é",     "são",   "foi",   "eram",  "ser",  "estar",
                                              "está",  "estão", "tem",   "têm",   "há",   "vai",
                                              "vão",   "pode",  "podem", "deve",  "devem", "fez",
                                              "disse", "falou", "quer",  "precisa", "vamos"};
  static const std::set<std::string> adjs = {"novo", "nova", "grande", "pequeno", "bom", "boa",
                                             "melhor", "pior", "importante", "nacional", "federal",
                                             "social", "público", "pública"};

  std::string w = util::lowercase(token);
  if (dets.count(w)) return "DET";
  if (adps.count(w)) return "ADP";
  if (conj.count(w)) return "CCONJ";
  if (advs.count(w)) return "ADV";
  if (verbs.count(w)) return "VERB";
  if (adjs.count(w)) return "ADJ";
  if (ends_with(w, "mente")) return "ADV";
  if (ends_with(w, "ção") || ends_with(w, "ções") || ends_with(w, "dade") ||
      ends_with(w, "dades") || ends_with(w, "mento") || ends_with(w, "mentos") ||
      ends_with(w, "ismo") || ends_with(w, "agem") || ends_with(w, "eza"))
    return "NOUN";
  if (w.size() > 3 && (ends_with(w, "ar") || ends_with(w, "er") || ends_with(w, "ir") ||
                       ends_with(w, "ou") || ends_with(w, "am") || ends_with(w, "aram") ||
                       ends_with(w, "eram") || ends_with(w, "ava") || ends_with(w, "avam") ||
                       ends_with(w, "ando") || ends_with(w, "endo") || ends_with(w, "indo") ||
                       ends_with(w, "amos") || ends_with(w, "emos")))
    return "VERB";
  if (ends_with(w, "oso") || ends_with(w, "osa") || ends_with(w, "ível") ||
      ends_with(w, "ável") || ends_with(w, "ico") || ends_with(w, "ica"))
    return "ADJ";
  return "NOUN";
}

inline std::string entity_label(const std::string& first_word_lower) {
  static const std::set<std::string> persons = {"lula", "dilma", "bolsonaro", "temer", "cunha",
                                                "lira", "moraes", "marielle", "maria", "joão",
                                                "josé", "ana", "paulo", "pedro", "carlos"};
  static const std::set<std::string> places = {"brasil", "brasília", "são", "rio", "minas",
                                               "bahia", "paraná", "amazonas", "ceará", "goiás",
                                               "pernambuco", "nordeste", "norte", "sul"};
  if (persons.count(first_word_lower)) return "PER";
  if (places.count(first_word_lower)) return "LOC";
  return "ORG";
}

}  // namespace fallback

// Tags the speech's normalized tokens and scrapes capitalized runs from
// the raw monologue as entity mentions. Sentence-initial words are skipped
// to cut false positives.
inline AnnotationSet fallback_annotate(std::int64_t speech_id,
                                       const std::vector<std::string>& tokens,
                                       std::string_view monologue) {
  AnnotationSet ann;
  ann.speech_id = speech_id;
  for (const auto& t : tokens) ann.pos_tags.emplace_back(t, fallback::pos_tag(t));

  auto cps = util::utf8_codepoints(monologue);
  bool sentence_start = true;
  std::size_t i = 0;
  while (i < cps.size()) {
    if (util::is_upper(cps[i]) && !sentence_start) {
      // capitalized word run
      std::vector<char32_t> run;
      std::size_t begin = i;
      while (i < cps.size()) {
        if (!util::is_upper(cps[i])) break;
        while (i < cps.size() && util::is_letter(cps[i])) run.push_back(cps[i++]);
        if (i + 1 < cps.size() && cps[i] == U' ' && util::is_upper(cps[i + 1])) {
          run.push_back(U' ');
          ++i;
          continue;
        }
        break;
      }
      std::string surface = util::utf8_encode(run);
      auto words = util::split_ws(surface);
      if (!words.empty()) {
        AnnotationSet::Entity e;
        e.surface = surface;
        e.label = fallback::entity_label(util::lowercase(words[0]));
        e.span_begin = static_cast<std::int64_t>(begin);
        e.span_end = static_cast<std::int64_t>(begin + run.size());
        ann.entities.push_back(std::move(e));
      }
      sentence_start = false;
      continue;
    }
    if (cps[i] == U'.' || cps[i] == U'!' || cps[i] == U'?') sentence_start = true;
    else if (util::is_letter(cps[i])) sentence_start = false;
    ++i;
  }
  return ann;
}

}  // namespace plenar::stylometry
