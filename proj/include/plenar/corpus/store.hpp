#pragma once

#include <algorithm>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "plenar/corpus/types.hpp"
#include "plenar/util/io.hpp"

namespace plenar::corpus {

namespace fs = std::filesystem;

// On-disk corpus layout:
//   <dir>/deputies.jsonl          one DeputyRecord per line, sorted by id
//   <dir>/speeches/<year>.jsonl   one SpeechRecord per line, sorted by id
//   <dir>/manifest.json           ingest bookkeeping (see ingest/sync.hpp)
class CorpusStore {
public:
  explicit CorpusStore(fs::path dir) : dir_(std::move(dir)) {}

  const fs::path& dir() const { return dir_; }
  fs::path deputies_path() const { return dir_ / "deputies.jsonl"; }
  fs::path speeches_dir() const { return dir_ / "speeches"; }
  fs::path year_path(int year) const {
    return speeches_dir() / (std::to_string(year) + ".jsonl");
  }
  fs::path manifest_path() const { return dir_ / "manifest.json"; }

  bool exists() const { return fs::exists(deputies_path()); }

  std::vector<DeputyRecord> load_deputies() const {
    std::vector<DeputyRecord> out;
    for (const auto& line : util::read_lines(deputies_path()))
      out.push_back(DeputyRecord::from_json(json::parse(line)));
    return out;
  }

  std::vector<int> years_present() const {
    std::vector<int> years;
    if (!fs::exists(speeches_dir())) return years;
    for (const auto& e : fs::directory_iterator(speeches_dir())) {
      if (e.path().extension() == ".jsonl")
        years.push_back(std::atoi(e.path().stem().string().c_str()));
    }
    std::sort(years.begin(), years.end());
    return years;
  }

  std::vector<SpeechRecord> load_year(int year) const {
    std::vector<SpeechRecord> out;
    if (!fs::exists(year_path(year))) return out;
    for (const auto& line : util::read_lines(year_path(year)))
      out.push_back(SpeechRecord::from_json(json::parse(line)));
    return out;
  }

  std::vector<SpeechRecord> load_all_speeches() const {
    std::vector<SpeechRecord> out;
    for (int y : years_present()) {
      auto part = load_year(y);
      out.insert(out.end(), part.begin(), part.end());
    }
    return out;
  }

  // Writers produce canonical bytes: records sorted by id, one compact
  // JSON object per line, keys in lexicographic order.
  bool write_deputies(std::vector<DeputyRecord> deputies) const {
    std::sort(deputies.begin(), deputies.end(),
              [](const auto& a, const auto& b) { return a.deputy_id < b.deputy_id; });
    std::string buf;
    for (const auto& d : deputies) {
      buf += d.to_json().dump();
      buf.push_back('\n');
    }
    return util::write_file_if_different(deputies_path(), buf);
  }

  bool write_year(int year, std::vector<SpeechRecord> speeches) const {
    std::sort(speeches.begin(), speeches.end(),
              [](const auto& a, const auto& b) { return a.speech_id < b.speech_id; });
    std::string buf;
    for (const auto& s : speeches) {
      buf += s.to_json().dump();
      buf.push_back('\n');
    }
    return util::write_file_if_different(year_path(year), buf);
  }

private:
  fs::path dir_;
};

}  // namespace plenar::corpus
