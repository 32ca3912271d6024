#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "plenar/error.hpp"

namespace plenar::corpus {

using json = nlohmann::json;

enum class Gender { F, M, Unspecified };

inline std::string to_string(Gender g) {
  switch (g) {
    case Gender::F: return "F";
    case Gender::M: return "M";
    default: return "unspecified";
  }
}

inline Gender gender_from_string(const std::string& s) {
  if (s == "F") return Gender::F;
  if (s == "M") return Gender::M;
  return Gender::Unspecified;
}

struct SessionPhase {
  enum class Kind { PequenoExpediente, GrandeExpediente, OrdemDoDia, Other };
  Kind kind = Kind::Other;
  std::string text;  // as received; canonical for the three named phases

  static SessionPhase parse(const std::string& raw) {
    std::string t;
    for (char c : raw) t.push_back(c == '_' ? ' ' : c);
    auto ieq = [](const std::string& a, const char* b) {
      if (a.size() != std::string(b).size()) return false;
      for (std::size_t i = 0; i < a.size(); ++i)
        if (std::tolower(static_cast<unsigned char>(a[i])) !=
            std::tolower(static_cast<unsigned char>(b[i])))
          return false;
      return true;
    };
    if (ieq(t, "Pequeno Expediente"))
      return {Kind::PequenoExpediente, "Pequeno Expediente"};
    if (ieq(t, "Grande Expediente")) return {Kind::GrandeExpediente, "Grande Expediente"};
    if (ieq(t, "Ordem do Dia")) return {Kind::OrdemDoDia, "Ordem do Dia"};
    return {Kind::Other, raw};
  }
};

struct DeputyRecord {
  std::int64_t deputy_id = 0;
  std::string full_name;
  Gender gender = Gender::Unspecified;
  std::optional<std::string> birth_date;    // YYYY-MM-DD
  std::optional<std::string> birth_municipality;
  std::optional<std::string> birth_state;   // 2-letter code
  std::optional<std::string> education;

  json to_json() const {
    json j;
    j["deputy_id"] = deputy_id;
    j["full_name"] = full_name;
    j["gender"] = to_string(gender);
    if (birth_date) j["birth_date"] = *birth_date;
    if (birth_municipality) j["birth_municipality"] = *birth_municipality;
    if (birth_state) j["birth_state"] = *birth_state;
    if (education) j["education"] = *education;
    return j;
  }

  static DeputyRecord from_json(const json& j) {
    DeputyRecord d;
    if (!j.contains("deputy_id")) throw SchemaError("deputy record missing field 'deputy_id'");
    d.deputy_id = j.at("deputy_id").get<std::int64_t>();
    d.full_name = j.value("full_name", "");
    d.gender = gender_from_string(j.value("gender", "unspecified"));
    if (j.contains("birth_date")) d.birth_date = j.at("birth_date").get<std::string>();
    if (j.contains("birth_municipality"))
      d.birth_municipality = j.at("birth_municipality").get<std::string>();
    if (j.contains("birth_state")) d.birth_state = j.at("birth_state").get<std::string>();
    if (j.contains("education")) d.education = j.at("education").get<std::string>();
    return d;
  }
};

struct SpeechRecord {
  std::int64_t speech_id = 0;
  std::int64_t deputy_id = 0;
  std::string started_at;  // ISO-8601
  int year = 0;
  int legislature = 0;
  std::string party_at_time;
  std::string state_represented;
  SessionPhase session_phase;
  std::string speech_type;
  std::string title;
  std::string summary;
  std::vector<std::string> keywords;
  std::string transcript_url;
  std::string raw_text;
  bool transcript_missing = false;

  json to_json() const {
    json j;
    j["speech_id"] = speech_id;
    j["deputy_id"] = deputy_id;
    j["started_at"] = started_at;
    j["year"] = year;
    j["legislature"] = legislature;
    j["party_at_time"] = party_at_time;
    j["state_represented"] = state_represented;
    j["session_phase"] = session_phase.text;
    j["speech_type"] = speech_type;
    j["title"] = title;
    j["summary"] = summary;
    j["keywords"] = keywords;
    j["transcript_url"] = transcript_url;
    j["raw_text"] = raw_text;
    if (transcript_missing) j["transcript_missing"] = true;
    return j;
  }

  static SpeechRecord from_json(const json& j) {
    SpeechRecord s;
    for (const char* f : {"speech_id", "deputy_id", "started_at", "year"})
      if (!j.contains(f)) throw SchemaError(std::string("speech record missing field '") + f + "'");
    s.speech_id = j.at("speech_id").get<std::int64_t>();
    s.deputy_id = j.at("deputy_id").get<std::int64_t>();
    s.started_at = j.at("started_at").get<std::string>();
    s.year = j.at("year").get<int>();
    s.legislature = j.value("legislature", 0);
    s.party_at_time = j.value("party_at_time", "");
    s.state_represented = j.value("state_represented", "");
    s.session_phase = SessionPhase::parse(j.value("session_phase", ""));
    s.speech_type = j.value("speech_type", "");
    s.title = j.value("title", "");
    s.summary = j.value("summary", "");
    if (j.contains("keywords")) s.keywords = j.at("keywords").get<std::vector<std::string>>();
    s.transcript_url = j.value("transcript_url", "");
    s.raw_text = j.value("raw_text", "");
    s.transcript_missing = j.value("transcript_missing", false);
    if (!s.started_at.empty() && s.started_at.size() >= 4) {
      int y = std::atoi(s.started_at.substr(0, 4).c_str());
      if (y != s.year)
        throw SchemaError("speech " + std::to_string(s.speech_id) +
                          ": year does not match started_at");
    }
    return s;
  }
};

}  // namespace plenar::corpus
