#pragma once

#include <cmath>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <thread>
#include <vector>

#include <httplib.h>
#include <nlohmann/json.hpp>

#include "plenar/embed/store.hpp"
#include "plenar/error.hpp"
#include "plenar/util/rng.hpp"
#include "plenar/util/text.hpp"

namespace plenar::embed {

// A provider turns texts into vectors. Long-context handling is the
// provider's contract; this module never truncates.
class EmbeddingProvider {
public:
  virtual ~EmbeddingProvider() = default;
  virtual std::string id() const = 0;
  virtual std::size_t dim() const = 0;
  // One vector per input. ids parallel texts; file-backed providers key on them.
  virtual std::vector<std::vector<double>> embed(std::span<const std::int64_t> ids,
                                                 std::span<const std::string> texts) = 0;
};

// Deterministic token-hash bag-of-features test provider, L2-normalized.
// Identical text gives an identical vector; texts sharing tokens land
// closer in cosine than disjoint ones.
class HashProvider final : public EmbeddingProvider {
public:
  HashProvider(std::size_t dim, std::uint64_t seed) : dim_(dim), seed_(seed) {
    if (dim < 2) throw ParamError("hash provider: dim must be >= 2");
  }

  std::string id() const override {
    return "hash:dim=" + std::to_string(dim_) + ":seed=" + std::to_string(seed_);
  }
  std::size_t dim() const override { return dim_; }

  std::vector<double> embed_one(const std::string& text) const {
    auto tokens = util::split_ws(text);
    if (tokens.empty())
      throw ParamError("hash provider: empty text carries no information");
    std::vector<double> v(dim_, 0.0);
    for (const auto& t : tokens) {
      std::uint64_t h = util::splitmix64(util::fnv1a64(t) ^ seed_);
      std::size_t idx = static_cast<std::size_t>(h % dim_);
      double sign = (h >> 63) ? 1.0 : -1.0;
      v[idx] += sign;
    }
    double norm = 0.0;
    for (double x : v) norm += x * x;
    norm = std::sqrt(norm);
    if (norm > 0.0)
      for (double& x : v) x /= norm;
    return v;
  }

  std::vector<std::vector<double>> embed(std::span<const std::int64_t>,
                                         std::span<const std::string> texts) override {
    std::vector<std::vector<double>> out;
    out.reserve(texts.size());
    for (const auto& t : texts) out.push_back(embed_one(t));
    return out;
  }

private:
  std::size_t dim_;
  std::uint64_t seed_;
};

// Serves vectors precomputed into a VectorStore file, keyed by id.
class FileProvider final : public EmbeddingProvider {
public:
  explicit FileProvider(const util::fs::path& path) : store_(VectorStore::load(path)) {}

  std::string id() const override { return "file:" + store_.provider_id(); }
  std::size_t dim() const override { return store_.dim(); }

  std::vector<std::vector<double>> embed(std::span<const std::int64_t> ids,
                                         std::span<const std::string>) override {
    std::vector<std::vector<double>> out;
    out.reserve(ids.size());
    std::string missing;
    for (std::int64_t id : ids) {
      if (!store_.contains(id)) {
        missing += (missing.empty() ? "" : ", ") + std::to_string(id);
        continue;
      }
      auto v = store_.vector(id);
      out.emplace_back(v.begin(), v.end());
    }
    if (!missing.empty())
      throw ParamError("file provider: no precomputed vector for ids " + missing);
    return out;
  }

  const VectorStore& store() const { return store_; }

private:
  VectorStore store_;
};

// Minimal HTTP JSON contract: POST {"texts": [...]} -> {"vectors": [[...]]}.
// The heavyweight embedding model lives behind this boundary.
class RemoteProvider final : public EmbeddingProvider {
public:
  struct Options {
    std::string base_url;            // http://host:port
    std::string path = "/embed";
    std::string auth_header;         // "Bearer ..." sent as Authorization
    int retries = 5;
    int retry_base_ms = 1000;
    std::size_t expected_dim = 0;    // 0 = accept the first batch's dim
  };

  explicit RemoteProvider(Options opt) : opt_(std::move(opt)) {
    if (opt_.base_url.empty()) throw ConfigError("remote provider: base_url not configured");
  }

  std::string id() const override { return "remote:" + opt_.base_url + opt_.path; }
  std::size_t dim() const override { return dim_; }

  std::vector<std::vector<double>> embed(std::span<const std::int64_t>,
                                         std::span<const std::string> texts) override {
    nlohmann::json body;
    body["texts"] = std::vector<std::string>(texts.begin(), texts.end());
    std::string payload = body.dump();

    httplib::Client cli(opt_.base_url);
    cli.set_read_timeout(120, 0);
    std::string last_error;
    for (int attempt = 0; attempt < std::max(1, opt_.retries); ++attempt) {
      if (attempt > 0) {
        int delay = opt_.retry_base_ms * (1 << (attempt - 1));
        std::this_thread::sleep_for(std::chrono::milliseconds(delay));
      }
      httplib::Headers headers;
      if (!opt_.auth_header.empty()) headers.emplace("Authorization", opt_.auth_header);
      auto res = cli.Post(opt_.path, headers, payload, "application/json");
      if (!res) {
        last_error = "connection failure";
        continue;
      }
      if (res->status == 429 || res->status >= 500) {
        last_error = "status " + std::to_string(res->status);
        continue;
      }
      if (res->status != 200)
        throw TransportError("remote provider: status " + std::to_string(res->status));
      nlohmann::json j = nlohmann::json::parse(res->body);
      if (!j.contains("vectors"))
        throw SchemaError("remote provider: response missing field 'vectors'");
      auto vecs = j.at("vectors").get<std::vector<std::vector<double>>>();
      if (vecs.size() != texts.size())
        throw SchemaError("remote provider: got " + std::to_string(vecs.size()) +
                          " vectors for " + std::to_string(texts.size()) + " texts");
      for (const auto& v : vecs) {
        if (dim_ == 0) dim_ = opt_.expected_dim ? opt_.expected_dim : v.size();
        if (v.size() != dim_)
          throw ConfigError("remote provider: dim changed mid-stream (" +
                            std::to_string(v.size()) + " vs " + std::to_string(dim_) + ")");
      }
      return vecs;
    }
    throw TransportError("remote provider: " + last_error + " after " +
                         std::to_string(opt_.retries) + " attempts");
  }

private:
  Options opt_;
  std::size_t dim_ = 0;
};

// Embeds every text and assembles the store. A provider failure surfaces
// as a partial-store error listing the ids that are still missing.
inline VectorStore embed_speeches(std::span<const std::int64_t> ids,
                                  std::span<const std::string> texts,
                                  EmbeddingProvider& provider, std::size_t batch_size = 64) {
  if (ids.size() != texts.size())
    throw ParamError("embed_speeches: ids and texts differ in length");
  if (texts.empty()) throw ParamError("embed_speeches: no texts");
  if (batch_size == 0) batch_size = 1;

  VectorStore store(0, provider.id());
  bool dim_fixed = false;
  std::string failed_ids;
  for (std::size_t off = 0; off < texts.size(); off += batch_size) {
    std::size_t n = std::min(batch_size, texts.size() - off);
    std::vector<std::vector<double>> vecs;
    try {
      vecs = provider.embed(ids.subspan(off, n), texts.subspan(off, n));
    } catch (const TransportError&) {
      for (std::size_t i = 0; i < n; ++i)
        failed_ids += (failed_ids.empty() ? "" : ", ") + std::to_string(ids[off + i]);
      continue;
    }
    for (std::size_t i = 0; i < vecs.size(); ++i) {
      if (!dim_fixed) {
        store = VectorStore(static_cast<std::uint32_t>(vecs[i].size()), provider.id());
        dim_fixed = true;
      }
      if (vecs[i].size() != store.dim())
        throw ConfigError("embed_speeches: provider changed dim across batches (" +
                          std::to_string(vecs[i].size()) + " vs " + std::to_string(store.dim()) +
                          "); provenance broken");
      store.add(ids[off + i], vecs[i]);
    }
  }
  if (!failed_ids.empty())
    throw TransportError("embed_speeches: provider failed for ids " + failed_ids +
                         "; partial store discarded");
  return store;
}

}  // namespace plenar::embed
