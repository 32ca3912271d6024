#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "plenar/cluster/condense.hpp"
#include "plenar/embed/provider.hpp"
#include "plenar/preprocess/clean.hpp"
#include "plenar/reduce/umap.hpp"
#include "plenar/topics/ctfidf.hpp"

namespace plenar::topics {

struct Topic {
  int topic_id = 0;
  std::vector<TopicKeyword> keywords;
  std::int64_t doc_count = 0;
};

struct YearTopics {
  int year = 0;
  std::vector<Topic> topics;
  double outlier_ratio = 0.0;
  std::int64_t total_docs = 0;
  bool too_few_docs_warning = false;

  nlohmann::json to_json() const {
    nlohmann::json j;
    j["year"] = year;
    j["outlier_ratio"] = outlier_ratio;
    j["total_docs"] = total_docs;
    if (too_few_docs_warning) j["too_few_docs_warning"] = true;
    nlohmann::json ts = nlohmann::json::array();
    for (const auto& t : topics) {
      nlohmann::json tj;
      tj["topic_id"] = t.topic_id;
      tj["doc_count"] = t.doc_count;
      nlohmann::json kws = nlohmann::json::array();
      for (const auto& kw : t.keywords) kws.push_back({kw.term, kw.score});
      tj["keywords"] = std::move(kws);
      ts.push_back(std::move(tj));
    }
    j["topics"] = std::move(ts);
    return j;
  }

  static YearTopics from_json(const nlohmann::json& j) {
    YearTopics y;
    y.year = j.at("year").get<int>();
    y.outlier_ratio = j.at("outlier_ratio").get<double>();
    y.total_docs = j.at("total_docs").get<std::int64_t>();
    y.too_few_docs_warning = j.value("too_few_docs_warning", false);
    for (const auto& tj : j.at("topics")) {
      Topic t;
      t.topic_id = tj.at("topic_id").get<int>();
      t.doc_count = tj.at("doc_count").get<std::int64_t>();
      for (const auto& kw : tj.at("keywords"))
        t.keywords.push_back({kw.at(0).get<std::string>(), kw.at(1).get<double>()});
      y.topics.push_back(std::move(t));
    }
    return y;
  }
};

struct TopicPipelineParams {
  int min_topic_size = 20;  // becomes HDBSCAN's min_cluster_size
  std::int64_t min_df = 10;
  std::size_t top_k = 10;
  reduce::LayoutParams umap;  // pre-reduction metric defaults to cosine
  int min_samples = 10;
  double cluster_selection_epsilon = 0.0;

  TopicPipelineParams() {
    umap.n_neighbors = 15;
    umap.n_components = 5;
    umap.min_dist = 0.0;
    umap.metric = reduce::Metric::Cosine;
  }
};

// One year's snapshot: embed -> reduce -> cluster -> c-TF-IDF keywords.
// Independent per year, matching the paper's annual modeling.
inline YearTopics model_year(int year, const std::vector<preprocess::CleanSpeech>& speeches,
                             const TopicPipelineParams& params,
                             embed::EmbeddingProvider& provider) {
  YearTopics out;
  out.year = year;
  out.total_docs = static_cast<std::int64_t>(speeches.size());
  if (speeches.size() < static_cast<std::size_t>(params.min_topic_size)) {
    out.outlier_ratio = 1.0;
    out.too_few_docs_warning = true;
    return out;
  }

  std::vector<std::int64_t> ids;
  std::vector<std::string> texts;
  ids.reserve(speeches.size());
  for (const auto& s : speeches) {
    ids.push_back(s.speech_id);
    texts.push_back(s.text);
  }
  embed::VectorStore store = embed::embed_speeches(ids, texts, provider);

  util::Matrix vectors(speeches.size(), store.dim());
  for (std::size_t i = 0; i < speeches.size(); ++i) {
    auto v = store.vector(ids[i]);
    std::copy(v.begin(), v.end(), vectors.row(i));
  }

  reduce::LayoutParams layout = params.umap;
  layout.n_neighbors = std::min<int>(layout.n_neighbors, static_cast<int>(speeches.size()) - 1);
  reduce::LowDimPoints reduced = reduce::umap(vectors, layout);

  cluster::ClusterParams cp;
  cp.min_cluster_size = params.min_topic_size;
  cp.min_samples = std::min<int>(params.min_samples, static_cast<int>(speeches.size()) - 1);
  cp.cluster_selection_epsilon = params.cluster_selection_epsilon;
  auto [tree, labels] = cluster::hdbscan(reduced.coords, cp);

  std::int64_t noise = 0;
  for (int l : labels.labels)
    if (l < 0) noise += 1;
  out.outlier_ratio =
      static_cast<double>(noise) / static_cast<double>(speeches.size());

  if (labels.n_clusters == 0) return out;

  std::vector<std::vector<std::vector<std::string>>> class_docs(labels.n_clusters);
  std::vector<std::int64_t> doc_counts(labels.n_clusters, 0);
  for (std::size_t i = 0; i < speeches.size(); ++i) {
    int l = labels.labels[i];
    if (l < 0) continue;
    class_docs[l].push_back(speeches[i].phrase_tokens);
    doc_counts[l] += 1;
  }
  CtfidfResult kws = ctfidf(class_docs, params.min_df, params.top_k);
  for (int c = 0; c < labels.n_clusters; ++c) {
    Topic t;
    t.topic_id = c;
    t.doc_count = doc_counts[c];
    t.keywords = kws.keywords[c];
    out.topics.push_back(std::move(t));
  }
  return out;
}

}  // namespace plenar::topics
