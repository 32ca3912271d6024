#pragma once

#include <cstdint>
#include <cstring>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "plenar/error.hpp"
#include "plenar/util/io.hpp"

namespace plenar::embed {

// Binary vector store, little-endian:
//   "PLVS" | u32 version | u32 dim | u64 count | u32 len | provider_id
//   | count x i64 ids | count x dim x f32 row-major | 32-byte sha256
// Vectors are held as doubles in memory but stored as f32, so a
// load/save round-trip is byte-exact.
class VectorStore {
public:
  VectorStore() = default;
  VectorStore(std::uint32_t dim, std::string provider_id)
      : dim_(dim), provider_id_(std::move(provider_id)) {}

  std::uint32_t dim() const { return dim_; }
  const std::string& provider_id() const { return provider_id_; }
  std::size_t size() const { return ids_.size(); }
  const std::vector<std::int64_t>& ids() const { return ids_; }

  bool contains(std::int64_t id) const { return index_.count(id) > 0; }

  std::span<const double> vector(std::int64_t id) const {
    auto it = index_.find(id);
    if (it == index_.end())
      throw ParamError("vector store: unknown id " + std::to_string(id));
    return {data_.data() + it->second * dim_, dim_};
  }

  void add(std::int64_t id, std::span<const double> v) {
    if (v.size() != dim_)
      throw ConfigError("vector store: dim mismatch for id " + std::to_string(id) + " (got " +
                        std::to_string(v.size()) + ", store is " + std::to_string(dim_) + ")");
    if (index_.count(id))
      throw ParamError("vector store: duplicate id " + std::to_string(id));
    index_[id] = ids_.size();
    ids_.push_back(id);
    // round-trip through f32: memory matches what a save/load would hold
    for (double x : v) data_.push_back(static_cast<double>(static_cast<float>(x)));
  }

  std::string serialize() const {
    std::string buf;
    auto put_u32 = [&](std::uint32_t v) {
      for (int i = 0; i < 4; ++i) buf.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
    };
    auto put_u64 = [&](std::uint64_t v) {
      for (int i = 0; i < 8; ++i) buf.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
    };
    buf += "PLVS";
    put_u32(kVersion);
    put_u32(dim_);
    put_u64(ids_.size());
    put_u32(static_cast<std::uint32_t>(provider_id_.size()));
    buf += provider_id_;
    for (std::int64_t id : ids_) put_u64(static_cast<std::uint64_t>(id));
    for (double x : data_) {
      float f = static_cast<float>(x);
      std::uint32_t bits;
      std::memcpy(&bits, &f, 4);
      put_u32(bits);
    }
    std::string digest_hex = util::sha256_hex(buf);
    for (std::size_t i = 0; i < 64; i += 2) {
      auto nib = [&](char c) -> unsigned {
        return c <= '9' ? static_cast<unsigned>(c - '0') : static_cast<unsigned>(c - 'a' + 10);
      };
      buf.push_back(static_cast<char>(nib(digest_hex[i]) << 4 | nib(digest_hex[i + 1])));
    }
    return buf;
  }

  void save(const util::fs::path& path) const { util::write_file(path, serialize()); }

  static VectorStore deserialize(std::string_view buf) {
    if (buf.size() < 20 + 32 || buf.substr(0, 4) != "PLVS")
      throw SchemaError("vector store: bad magic");
    std::string_view payload = buf.substr(0, buf.size() - 32);
    std::string digest_hex = util::sha256_hex(payload);
    std::string stored;
    for (std::size_t i = buf.size() - 32; i < buf.size(); ++i) {
      static const char* hex = "0123456789abcdef";
      unsigned char c = static_cast<unsigned char>(buf[i]);
      stored.push_back(hex[c >> 4]);
      stored.push_back(hex[c & 0xf]);
    }
    if (stored != digest_hex) throw SchemaError("vector store: checksum mismatch");

    std::size_t pos = 4;
    auto get_u32 = [&]() {
      std::uint32_t v = 0;
      for (int i = 0; i < 4; ++i) v |= static_cast<std::uint32_t>(static_cast<unsigned char>(buf[pos++])) << (8 * i);
      return v;
    };
    auto get_u64 = [&]() {
      std::uint64_t v = 0;
      for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(static_cast<unsigned char>(buf[pos++])) << (8 * i);
      return v;
    };
    std::uint32_t version = get_u32();
    if (version != kVersion)
      throw SchemaError("vector store: unsupported version " + std::to_string(version));
    VectorStore s;
    s.dim_ = get_u32();
    std::uint64_t count = get_u64();
    std::uint32_t plen = get_u32();
    s.provider_id_ = std::string(buf.substr(pos, plen));
    pos += plen;
    s.ids_.reserve(count);
    for (std::uint64_t i = 0; i < count; ++i) {
      auto id = static_cast<std::int64_t>(get_u64());
      if (s.index_.count(id)) throw SchemaError("vector store: duplicate id " + std::to_string(id));
      s.index_[id] = s.ids_.size();
      s.ids_.push_back(id);
    }
    s.data_.reserve(count * s.dim_);
    for (std::uint64_t i = 0; i < count * s.dim_; ++i) {
      std::uint32_t bits = get_u32();
      float f;
      std::memcpy(&f, &bits, 4);
      s.data_.push_back(static_cast<double>(f));
    }
    return s;
  }

  static VectorStore load(const util::fs::path& path) {
    return deserialize(util::read_file(path));
  }

private:
  static constexpr std::uint32_t kVersion = 1;
  std::uint32_t dim_ = 0;
  std::string provider_id_;
  std::vector<std::int64_t> ids_;
  std::map<std::int64_t, std::size_t> index_;
  std::vector<double> data_;
};

}  // namespace plenar::embed
