#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "plenar/error.hpp"
#include "plenar/util/io.hpp"
#include "plenar/util/text.hpp"

namespace plenar::stylometry {

// POS/NER annotations produced offline by any tagger. One JSON object per
// line: {"speech_id": .., "pos_tags": [[token, tag], ..],
//        "entities": [[surface, label, [start, end]], ..]}
// GPE folds into LOC at load; pos_tags align 1:1 with the speech's
// normalized tokens.
struct AnnotationSet {
  struct Entity {
    std::string surface;
    std::string label;  // PER / ORG / LOC
    std::int64_t span_begin = 0;
    std::int64_t span_end = 0;
  };

  std::int64_t speech_id = 0;
  std::vector<std::pair<std::string, std::string>> pos_tags;
  std::vector<Entity> entities;

  nlohmann::json to_json() const {
    nlohmann::json j;
    j["speech_id"] = speech_id;
    nlohmann::json tags = nlohmann::json::array();
    for (const auto& [tok, tag] : pos_tags) tags.push_back({tok, tag});
    j["pos_tags"] = std::move(tags);
    nlohmann::json ents = nlohmann::json::array();
    for (const auto& e : entities)
      ents.push_back({e.surface, e.label, {e.span_begin, e.span_end}});
    j["entities"] = std::move(ents);
    return j;
  }

  static AnnotationSet from_json(const nlohmann::json& j) {
    AnnotationSet a;
    if (!j.contains("speech_id")) throw SchemaError("annotation missing field 'speech_id'");
    a.speech_id = j.at("speech_id").get<std::int64_t>();
    for (const auto& t : j.value("pos_tags", nlohmann::json::array()))
      a.pos_tags.emplace_back(t.at(0).get<std::string>(), t.at(1).get<std::string>());
    for (const auto& e : j.value("entities", nlohmann::json::array())) {
      Entity ent;
      ent.surface = e.at(0).get<std::string>();
      ent.label = e.at(1).get<std::string>();
      if (ent.label == "GPE") ent.label = "LOC";
      if (ent.label != "PER" && ent.label != "ORG" && ent.label != "LOC")
        throw SchemaError("annotation for speech " + std::to_string(a.speech_id) +
                          ": unknown entity label '" + ent.label + "'");
      if (e.size() > 2 && e.at(2).is_array() && e.at(2).size() == 2) {
        ent.span_begin = e.at(2).at(0).get<std::int64_t>();
        ent.span_end = e.at(2).at(1).get<std::int64_t>();
      }
      a.entities.push_back(std::move(ent));
    }
    return a;
  }
};

inline std::vector<AnnotationSet> load_annotations(const util::fs::path& path) {
  std::vector<AnnotationSet> out;
  for (const auto& line : util::read_lines(path))
    out.push_back(AnnotationSet::from_json(nlohmann::json::parse(line)));
  return out;
}

// Ratio of each tracked grammatical class over all tagged tokens. Other
// tags contribute to the denominator only.
inline std::map<std::string, double> pos_profile(const AnnotationSet& ann) {
  if (ann.pos_tags.empty())
    throw UndefinedMetricError("speech " + std::to_string(ann.speech_id) +
                               ": no POS tags, profile undefined");
  std::map<std::string, double> counts{{"noun", 0}, {"verb", 0}, {"adj", 0}, {"adv", 0}};
  for (const auto& [tok, tag] : ann.pos_tags) {
    std::string up;
    for (char c : tag) up.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
    if (up == "NOUN") counts["noun"] += 1;
    else if (up == "VERB") counts["verb"] += 1;
    else if (up == "ADJ") counts["adj"] += 1;
    else if (up == "ADV") counts["adv"] += 1;
  }
  double total = static_cast<double>(ann.pos_tags.size());
  for (auto& [_, v] : counts) v /= total;
  return counts;
}

// Validating overload: the annotation's token column must match the
// speech's tokens exactly.
inline std::map<std::string, double> pos_profile(const AnnotationSet& ann,
                                                 const std::vector<std::string>& speech_tokens) {
  if (ann.pos_tags.size() != speech_tokens.size())
    throw SchemaError("speech " + std::to_string(ann.speech_id) +
                      ": annotation misaligned (" + std::to_string(ann.pos_tags.size()) +
                      " tags for " + std::to_string(speech_tokens.size()) + " tokens)");
  for (std::size_t i = 0; i < speech_tokens.size(); ++i)
    if (ann.pos_tags[i].first != speech_tokens[i])
      throw SchemaError("speech " + std::to_string(ann.speech_id) +
                        ": annotation misaligned at token " + std::to_string(i));
  return pos_profile(ann);
}

inline std::map<std::string, std::int64_t> ner_counts(const AnnotationSet& ann) {
  std::map<std::string, std::int64_t> counts{{"PER", 0}, {"ORG", 0}, {"LOC", 0}};
  for (const auto& e : ann.entities) counts[e.label] += 1;
  return counts;
}

struct EntityCount {
  std::string surface;  // case-folded
  std::string label;
  std::int64_t count = 0;
};

// Case-folded surface aggregation ranked by descending count, ties broken
// alphabetically by surface then label.
inline std::vector<EntityCount> ner_salience(std::span<const AnnotationSet> annotations,
                                             std::size_t top_k) {
  std::map<std::pair<std::string, std::string>, std::int64_t> agg;
  for (const auto& ann : annotations)
    for (const auto& e : ann.entities)
      agg[{util::lowercase(e.surface), e.label}] += 1;
  std::vector<EntityCount> out;
  out.reserve(agg.size());
  for (const auto& [key, n] : agg) out.push_back({key.first, key.second, n});
  std::sort(out.begin(), out.end(), [](const EntityCount& a, const EntityCount& b) {
    if (a.count != b.count) return a.count > b.count;
    if (a.surface != b.surface) return a.surface < b.surface;
    return a.label < b.label;
  });
  if (out.size() > top_k) out.resize(top_k);
  return out;
}

}  // namespace plenar::stylometry
