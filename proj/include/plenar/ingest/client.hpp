#pragma once

#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <httplib.h>
#include <nlohmann/json.hpp>

#include "plenar/corpus/types.hpp"
#include "plenar/error.hpp"
#include "plenar/util/rng.hpp"

namespace plenar::ingest {

using json = nlohmann::json;

// Wire contract (modeled on the Chamber's open-data portal):
//   GET /deputados?dataInicio=Y-M-D&dataFim=Y-M-D&pagina=N
//     -> {"dados": [{"id", "nomeCivil", "sexo", "dataNascimento",
//                    "municipioNascimento", "ufNascimento", "escolaridade"}],
//         "links": [{"rel": "next", "href": ...}]}
//   GET /deputados/{id}/discursos?dataInicio=&dataFim=&pagina=N
//     -> {"dados": [{"id", "dataHoraInicio", "siglaPartido", "siglaUf",
//                    "faseEvento": {"titulo"}, "tipoDiscurso", "titulo",
//                    "sumario", "keywords", "urlTexto", "codLegislatura"}],
//         "links": [...]}
//   GET <urlTexto> -> text/plain transcript
// Pagination follows rel=next links until absent.

struct ApiOptions {
  std::string base_url;  // PLENAR_API_BASE wins over config
  int retry_budget = 5;
  int retry_base_ms = 1000;
  int page_size = 100;
  std::uint64_t jitter_seed = 0;
};

struct DateWindow {
  std::string start;  // YYYY-MM-DD inclusive
  std::string end;

  void validate() const {
    if (start.empty() || end.empty() || start > end)
      throw ParamError("date window: start must be <= end");
  }
};

namespace detail {

// Splits an absolute or relative URL into (origin, path+query).
inline std::pair<std::string, std::string> split_url(const std::string& url) {
  auto scheme_end = url.find("://");
  if (scheme_end == std::string::npos) return {"", url};
  auto path_begin = url.find('/', scheme_end + 3);
  if (path_begin == std::string::npos) return {url, "/"};
  return {url.substr(0, path_begin), url.substr(path_begin)};
}

}  // namespace detail

class ApiClient {
public:
  explicit ApiClient(ApiOptions opt)
      : opt_(std::move(opt)), jitter_(opt_.jitter_seed) {
    if (opt_.base_url.empty())
      throw ConfigError("API base URL not configured (set PLENAR_API_BASE or api.base_url)");
  }

  const ApiOptions& options() const { return opt_; }

  // GET with the retry/backoff policy; 404 is surfaced via status, never
  // retried.
  struct Response {
    int status = 0;
    std::string body;
  };

  Response get(const std::string& origin, const std::string& path_query) {
    httplib::Client cli(origin.empty() ? opt_.base_url : origin);
    cli.set_connection_timeout(10, 0);
    cli.set_read_timeout(60, 0);
    std::string last_error;
    for (int attempt = 0; attempt < std::max(1, opt_.retry_budget); ++attempt) {
      if (attempt > 0) {
        double jitter = 0.5 + jitter_.uniform();  // 0.5x .. 1.5x
        auto delay = static_cast<std::int64_t>(opt_.retry_base_ms * (1 << (attempt - 1)) * jitter);
        std::this_thread::sleep_for(std::chrono::milliseconds(delay));
      }
      auto res = cli.Get(path_query);
      if (!res) {
        last_error = "connection failure";
        continue;
      }
      if (res->status == 429 || res->status >= 500) {
        last_error = "status " + std::to_string(res->status);
        continue;
      }
      return {res->status, res->body};
    }
    throw TransportError("GET " + path_query + ": " + last_error + " after " +
                         std::to_string(opt_.retry_budget) + " attempts");
  }

  json get_json(const std::string& path_query) {
    Response res = get("", path_query);
    if (res.status != 200)
      throw TransportError("GET " + path_query + ": status " + std::to_string(res.status));
    json j = json::parse(res.body, nullptr, false);
    if (j.is_discarded())
      throw SchemaError("GET " + path_query + ": response is not valid JSON");
    return j;
  }

  // Follows rel=next pagination, returning every "dados" element.
  std::vector<json> get_paginated(std::string path_query) {
    std::vector<json> items;
    std::string origin;
    for (int page = 0; page < kMaxPages; ++page) {
      Response res = get(origin, path_query);
      if (res.status != 200)
        throw TransportError("GET " + path_query + ": status " + std::to_string(res.status));
      json j = json::parse(res.body, nullptr, false);
      if (j.is_discarded())
        throw SchemaError("GET " + path_query + ": response is not valid JSON");
      if (!j.contains("dados"))
        throw SchemaError("GET " + path_query + ": response missing field 'dados'");
      for (auto& item : j.at("dados")) items.push_back(std::move(item));

      std::string next;
      for (const auto& link : j.value("links", json::array())) {
        if (link.value("rel", "") == "next") {
          next = link.value("href", "");
          break;
        }
      }
      if (next.empty()) break;
      auto [next_origin, next_path] = detail::split_url(next);
      origin = next_origin;
      path_query = next_path;
    }
    return items;
  }

  // Every deputy with a mandate intersecting the window, de-duplicated by
  // id, ascending.
  std::vector<corpus::DeputyRecord> list_deputies(const DateWindow& window) {
    window.validate();
    auto items = get_paginated("/deputados?dataInicio=" + window.start +
                               "&dataFim=" + window.end + "&itens=" +
                               std::to_string(opt_.page_size) + "&pagina=1");
    std::map<std::int64_t, corpus::DeputyRecord> by_id;
    for (const auto& item : items) {
      if (!item.contains("id"))
        throw SchemaError("deputy list item missing field 'id'");
      corpus::DeputyRecord d;
      d.deputy_id = item.at("id").get<std::int64_t>();
      d.full_name = item.value("nomeCivil", item.value("nome", ""));
      d.gender = corpus::gender_from_string(item.value("sexo", ""));
      if (item.contains("dataNascimento") && item.at("dataNascimento").is_string())
        d.birth_date = item.at("dataNascimento").get<std::string>();
      if (item.contains("municipioNascimento") && item.at("municipioNascimento").is_string())
        d.birth_municipality = item.at("municipioNascimento").get<std::string>();
      if (item.contains("ufNascimento") && item.at("ufNascimento").is_string())
        d.birth_state = item.at("ufNascimento").get<std::string>();
      if (item.contains("escolaridade") && item.at("escolaridade").is_string())
        d.education = item.at("escolaridade").get<std::string>();
      by_id[d.deputy_id] = std::move(d);
    }
    std::vector<corpus::DeputyRecord> out;
    out.reserve(by_id.size());
    for (auto& [_, d] : by_id) out.push_back(std::move(d));
    return out;
  }

  struct FetchResult {
    std::vector<corpus::SpeechRecord> speeches;
    std::int64_t missing_transcripts = 0;
  };

  // One record per speech event; transcripts resolved after the metadata
  // pages (a 404 keeps the record, flagged, with empty text).
  FetchResult fetch_speeches(std::int64_t deputy_id, const DateWindow& window) {
    window.validate();
    auto items = get_paginated("/deputados/" + std::to_string(deputy_id) +
                               "/discursos?dataInicio=" + window.start + "&dataFim=" +
                               window.end + "&itens=" + std::to_string(opt_.page_size) +
                               "&pagina=1");
    FetchResult result;
    for (const auto& item : items) {
      for (const char* f : {"id", "dataHoraInicio"})
        if (!item.contains(f))
          throw SchemaError("discurso item for deputy " + std::to_string(deputy_id) +
                            " missing field '" + std::string(f) + "'");
      corpus::SpeechRecord s;
      s.speech_id = item.at("id").get<std::int64_t>();
      s.deputy_id = deputy_id;
      s.started_at = item.at("dataHoraInicio").get<std::string>();
      if (s.started_at.size() < 4)
        throw SchemaError("discurso " + std::to_string(s.speech_id) +
                          ": bad field 'dataHoraInicio'");
      s.year = std::atoi(s.started_at.substr(0, 4).c_str());
      s.legislature = item.value("codLegislatura", 0);
      s.party_at_time = item.value("siglaPartido", "");
      s.state_represented = item.value("siglaUf", "");
      if (item.contains("faseEvento") && item.at("faseEvento").is_object())
        s.session_phase =
            corpus::SessionPhase::parse(item.at("faseEvento").value("titulo", ""));
      s.speech_type = item.value("tipoDiscurso", "");
      s.title = item.value("titulo", "");
      s.summary = item.value("sumario", "");
      if (item.contains("keywords")) {
        if (item.at("keywords").is_array())
          s.keywords = item.at("keywords").get<std::vector<std::string>>();
        else if (item.at("keywords").is_string())
          for (const auto& k : split_keywords(item.at("keywords").get<std::string>()))
            s.keywords.push_back(k);
      }
      s.transcript_url = item.value("urlTexto", "");
      result.speeches.push_back(std::move(s));
    }
    // transcripts fetched lazily, after all metadata
    for (auto& s : result.speeches) {
      if (s.transcript_url.empty()) {
        s.transcript_missing = true;
        result.missing_transcripts += 1;
        continue;
      }
      auto [origin, path] = detail::split_url(s.transcript_url);
      Response res = get(origin, path);
      if (res.status == 404) {
        s.transcript_missing = true;
        s.raw_text.clear();
        result.missing_transcripts += 1;
      } else if (res.status == 200) {
        s.raw_text = res.body;
      } else {
        throw TransportError("transcript for speech " + std::to_string(s.speech_id) +
                             ": status " + std::to_string(res.status));
      }
    }
    return result;
  }

private:
  static std::vector<std::string> split_keywords(const std::string& csv) {
    std::vector<std::string> out;
    std::size_t i = 0;
    while (i <= csv.size()) {
      std::size_t j = csv.find(',', i);
      if (j == std::string::npos) j = csv.size();
      std::string part = util::trim(csv.substr(i, j - i));
      if (!part.empty()) out.push_back(part);
      i = j + 1;
    }
    return out;
  }

  static constexpr int kMaxPages = 100000;

  ApiOptions opt_;
  util::Rng jitter_;
};

}  // namespace plenar::ingest
