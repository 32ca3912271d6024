#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "plenar/error.hpp"
#include "plenar/util/text.hpp"

namespace plenar::corpus {

// Canonical party table: rename chains plus the ideology classification
// used for cluster profiling. Ships as an editable JSON file so other
// legislatures can be configured without code changes.
//
// Lookups are case-insensitive; the output keeps the registry's official
// casing ("PCdoB"), while unknown names pass through uppercased.
class PartyRegistry {
public:
  struct Rename {
    std::string old_name;
    std::string new_name;
    int effective_year = 0;
  };
  struct Party {
    std::string acronym;  // display form
    std::string full_name;
    int ideology = 0;  // -1 left, 0 center, +1 right
  };

  static PartyRegistry from_json(const nlohmann::json& j) {
    PartyRegistry r;
    if (!j.contains("renames")) throw ConfigError("party registry missing field 'renames'");
    if (!j.contains("parties")) throw ConfigError("party registry missing field 'parties'");
    for (const auto& e : j.at("parties")) {
      Party p;
      p.acronym = util::collapse_whitespace(e.at("acronym").get<std::string>());
      p.full_name = e.value("full_name", "");
      int ideo = e.at("ideology").get<int>();
      if (ideo < -1 || ideo > 1)
        throw ConfigError("party registry: ideology for '" + p.acronym +
                          "' must be -1, 0 or +1");
      p.ideology = ideo;
      std::string key = fold(p.acronym);
      if (r.parties_.count(key))
        throw ConfigError("party registry: duplicate party '" + p.acronym + "'");
      r.parties_[key] = p;
    }
    for (const auto& e : j.at("renames")) {
      Rename rn;
      rn.old_name = fold(e.at("old").get<std::string>());
      rn.new_name = fold(e.at("new").get<std::string>());
      rn.effective_year = e.value("effective_year", 0);
      if (rn.old_name == rn.new_name)
        throw ConfigError("party registry: rename maps '" + rn.old_name + "' to itself");
      if (r.renames_.count(rn.old_name))
        throw ConfigError("party registry: duplicate rename for '" + rn.old_name + "'");
      r.renames_[rn.old_name] = rn;
    }
    r.check_acyclic();
    return r;
  }

  // Whitespace/case normalization then the full rename chain; total and
  // idempotent. The year is accepted for interface symmetry: historical
  // names always map to the current designation regardless of when the
  // speech was delivered.
  std::string canonical(const std::string& name, int year = 0) const {
    (void)year;
    std::string key = fold(name);
    for (std::size_t hops = 0; hops <= renames_.size(); ++hops) {
      auto it = renames_.find(key);
      if (it == renames_.end()) return display(key, name);
      key = it->second.new_name;
    }
    throw ConfigError("party registry: rename chain too long for '" + name + "'");
  }

  bool has_ideology(const std::string& party) const { return parties_.count(fold(party)) > 0; }

  int ideology(const std::string& party) const {
    auto it = parties_.find(fold(party));
    if (it == parties_.end())
      throw ConfigError("party '" + party + "' has no registry ideology entry");
    return it->second.ideology;
  }

  std::vector<Party> parties() const {
    std::vector<Party> out;
    for (const auto& [_, p] : parties_) out.push_back(p);
    return out;
  }

private:
  // Uppercased, whitespace-collapsed lookup key.
  static std::string fold(const std::string& raw) {
    std::string collapsed = util::collapse_whitespace(raw);
    std::string out;
    std::size_t pos = 0;
    while (pos < collapsed.size())
      util::utf8_append(util::to_upper(util::utf8_decode(collapsed, pos)), out);
    return out;
  }

  std::string display(const std::string& key, const std::string& original) const {
    auto it = parties_.find(key);
    if (it != parties_.end()) return it->second.acronym;
    (void)original;
    return key;
  }

  void check_acyclic() const {
    for (const auto& [start, _] : renames_) {
      std::set<std::string> seen{start};
      std::string cur = start;
      while (true) {
        auto it = renames_.find(cur);
        if (it == renames_.end()) break;
        cur = it->second.new_name;
        if (!seen.insert(cur).second)
          throw ConfigError("party registry: rename cycle through '" + cur + "'");
      }
    }
  }

  std::map<std::string, Rename> renames_;
  std::map<std::string, Party> parties_;
};

// The five Brazilian macro-regions keyed by 2-letter state code.
class RegionMap {
public:
  static constexpr int kRegionCount = 5;

  static RegionMap from_json(const nlohmann::json& j) {
    RegionMap m;
    if (!j.contains("state_to_region"))
      throw ConfigError("region map missing field 'state_to_region'");
    std::set<std::string> regions;
    for (const auto& [state, region] : j.at("state_to_region").items()) {
      if (state.size() != 2) throw ConfigError("region map: bad state code '" + state + "'");
      m.map_[state] = region.get<std::string>();
      regions.insert(m.map_[state]);
    }
    if (m.map_.size() != 27)
      throw ConfigError(
          "region map must cover all 26 states plus the federal district (27 codes), got " +
          std::to_string(m.map_.size()));
    if (regions.size() != kRegionCount)
      throw ConfigError("region map must define exactly 5 regions, got " +
                        std::to_string(regions.size()));
    return m;
  }

  const std::string& region_of(const std::string& state) const {
    auto it = map_.find(state);
    if (it == map_.end())
      throw ConfigError("state '" + state + "' is not mapped to a macro-region");
    return it->second;
  }

  bool has_state(const std::string& state) const { return map_.count(state) > 0; }
  const std::map<std::string, std::string>& states() const { return map_; }

private:
  std::map<std::string, std::string> map_;
};

}  // namespace plenar::corpus
