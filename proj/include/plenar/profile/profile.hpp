#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "plenar/corpus/registry.hpp"
#include "plenar/corpus/types.hpp"
#include "plenar/error.hpp"

namespace plenar::profile {

// A cluster member as the profiler sees it: most recent affiliation (the
// paper profiles by latest party, while corpus filtering uses
// party-at-time), represented state, gender.
struct Member {
  std::int64_t deputy_id = 0;
  std::string party;  // canonical acronym
  std::string state;  // 2-letter code
  corpus::Gender gender = corpus::Gender::Unspecified;
};

// Herfindahl-Hirschman concentration of the members' party composition.
inline double phhi(const std::vector<Member>& members) {
  if (members.empty()) throw ParamError("phhi: empty cluster");
  std::map<std::string, double> counts;
  for (const auto& m : members) counts[m.party] += 1.0;
  double total = static_cast<double>(members.size());
  double h = 0.0;
  for (const auto& [_, c] : counts) {
    double p = c / total;
    h += p * p;
  }
  return h;
}

// Same index over the five macro-regions.
inline double rhhi(const std::vector<Member>& members, const corpus::RegionMap& regions) {
  if (members.empty()) throw ParamError("rhhi: empty cluster");
  std::map<std::string, double> counts;
  for (const auto& m : members) counts[regions.region_of(m.state)] += 1.0;
  double total = static_cast<double>(members.size());
  double h = 0.0;
  for (const auto& [_, c] : counts) {
    double p = c / total;
    h += p * p;
  }
  return h;
}

// Mean of the members' party ideology values in {-1, 0, +1}.
inline double ideology_mean(const std::vector<Member>& members,
                            const corpus::PartyRegistry& registry) {
  if (members.empty()) throw ParamError("ideology_mean: empty cluster");
  double sum = 0.0;
  for (const auto& m : members) sum += static_cast<double>(registry.ideology(m.party));
  return sum / static_cast<double>(members.size());
}

// Fraction of female members. Deputies with unspecified gender stay in
// the denominator; the count is reported so nothing shifts silently.
struct FemaleShare {
  double share = 0.0;
  std::int64_t unspecified = 0;
};

inline FemaleShare female_share(const std::vector<Member>& members) {
  if (members.empty()) throw ParamError("female_share: empty cluster");
  FemaleShare fs;
  double f = 0.0;
  for (const auto& m : members) {
    if (m.gender == corpus::Gender::F) f += 1.0;
    if (m.gender == corpus::Gender::Unspecified) fs.unspecified += 1;
  }
  fs.share = f / static_cast<double>(members.size());
  return fs;
}

struct ClusterProfile {
  int cluster_id = 0;
  std::int64_t size = 0;
  double phhi = 0.0;
  double rhhi = 0.0;
  double ideology_mean = 0.0;
  double female_share = 0.0;
  std::int64_t unspecified_gender = 0;
  std::map<std::string, double> party_breakdown;   // fractions, sum 1
  std::map<std::string, double> region_breakdown;  // fractions, sum 1
  std::string top_party;
  std::string top_region;
};

struct ProfileSummary {
  int n_clusters = 0;
  double mean_phhi = 0.0;
  int clusters_rhhi_above_0_7 = 0;
  int clusters_female_above_0_9 = 0;
  double noise_fraction = 0.0;
  double pooled_female_baseline = 0.0;  // over all clustered+noise deputies
  std::int64_t deputies_total = 0;
  std::int64_t deputies_noise = 0;

  nlohmann::json to_json() const {
    return {{"n_clusters", n_clusters},
            {"mean_phhi", mean_phhi},
            {"clusters_rhhi_above_0_7", clusters_rhhi_above_0_7},
            {"clusters_female_above_0_9", clusters_female_above_0_9},
            {"noise_fraction", noise_fraction},
            {"pooled_female_baseline", pooled_female_baseline},
            {"deputies_total", deputies_total},
            {"deputies_noise", deputies_noise}};
  }
};

// One profile per non-noise cluster plus the corpus-level summary. The
// labels vector is aligned with the deputies vector.
inline std::pair<std::vector<ClusterProfile>, ProfileSummary> profile_report(
    const std::vector<int>& labels, const std::vector<Member>& deputies,
    const corpus::PartyRegistry& registry, const corpus::RegionMap& regions) {
  if (labels.size() != deputies.size())
    throw ParamError("profile_report: labels and deputies differ in length");

  std::map<int, std::vector<Member>> clusters;
  std::int64_t noise = 0, female_total = 0;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (deputies[i].gender == corpus::Gender::F) female_total += 1;
    if (labels[i] < 0) {
      noise += 1;
      continue;
    }
    clusters[labels[i]].push_back(deputies[i]);
  }

  std::vector<ClusterProfile> profiles;
  ProfileSummary summary;
  summary.deputies_total = static_cast<std::int64_t>(deputies.size());
  summary.deputies_noise = noise;
  summary.noise_fraction =
      deputies.empty() ? 0.0
                       : static_cast<double>(noise) / static_cast<double>(deputies.size());
  summary.pooled_female_baseline =
      deputies.empty() ? 0.0
                       : static_cast<double>(female_total) / static_cast<double>(deputies.size());

  for (const auto& [cid, members] : clusters) {
    ClusterProfile p;
    p.cluster_id = cid;
    p.size = static_cast<std::int64_t>(members.size());
    p.phhi = phhi(members);
    p.rhhi = rhhi(members, regions);
    p.ideology_mean = ideology_mean(members, registry);
    FemaleShare fs = female_share(members);
    p.female_share = fs.share;
    p.unspecified_gender = fs.unspecified;

    double total = static_cast<double>(members.size());
    for (const auto& m : members) {
      p.party_breakdown[m.party] += 1.0 / total;
      p.region_breakdown[regions.region_of(m.state)] += 1.0 / total;
    }
    auto top_of = [](const std::map<std::string, double>& m) {
      std::string best;
      double best_v = -1.0;
      for (const auto& [k, v] : m)
        if (v > best_v) {
          best_v = v;
          best = k;
        }
      return best;  // ties: alphabetically first (map order)
    };
    p.top_party = top_of(p.party_breakdown);
    p.top_region = top_of(p.region_breakdown);

    summary.mean_phhi += p.phhi;
    if (p.rhhi > 0.7) summary.clusters_rhhi_above_0_7 += 1;
    if (p.female_share > 0.9) summary.clusters_female_above_0_9 += 1;
    profiles.push_back(std::move(p));
  }
  summary.n_clusters = static_cast<int>(profiles.size());
  if (!profiles.empty()) summary.mean_phhi /= static_cast<double>(profiles.size());
  return {std::move(profiles), summary};
}

}  // namespace plenar::profile
