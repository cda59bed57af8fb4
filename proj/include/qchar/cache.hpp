#pragma once

#include <atomic>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

#include <unistd.h>

#include <openssl/evp.h>
#include <zlib.h>

#include "qchar/fm_engine.hpp"
#include "qchar/rootdata.hpp"
#include "qchar/serialize.hpp"

namespace qchar {

/// Bumped whenever the engine output for a fixed seed could change.
inline constexpr const char* engine_version = "1.0.0";

inline std::string sha256_hex(std::string_view data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("SHA-256 failed");
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned k = 0; k < len; ++k) {
    out += hex[digest[k] >> 4];
    out += hex[digest[k] & 15];
  }
  return out;
}

struct CacheKey {
  LieType type;
  int rank;
  Node node;

  std::string stem() const { return std::string(1, to_char(type)) + std::to_string(rank) + "-" + std::to_string(node); }
};

struct CacheMeta {
  std::string engine_version;
  std::size_t terms = 0;
  double wall_ms = 0;
  std::string checksum;
};

/// Directory precedence: explicit flag, then QCHAR_CACHE_DIR, then ./qchar-cache.
inline std::filesystem::path resolve_cache_dir(const std::optional<std::string>& flag) {
  if (flag && !flag->empty()) return *flag;
  if (const char* env = std::getenv("QCHAR_CACHE_DIR"); env && *env) return env;
  return "qchar-cache";
}

namespace detail {

inline std::string read_file(const std::filesystem::path& p) {
  if (p.extension() == ".gz") {
    gzFile f = gzopen(p.c_str(), "rb");
    if (!f) throw std::runtime_error("cannot open " + p.string());
    std::string out;
    char buf[1 << 15];
    int n;
    while ((n = gzread(f, buf, sizeof buf)) > 0) out.append(buf, static_cast<std::size_t>(n));
    const bool bad = n < 0;
    gzclose(f);
    if (bad) throw std::runtime_error("corrupt gzip stream in " + p.string());
    return out;
  }
  std::ifstream in(p, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + p.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

/// Writes to a sibling temporary file and renames it over the target.
inline void write_file_atomic(const std::filesystem::path& p, const std::string& data, bool gzip) {
  static std::atomic<unsigned> counter{0};
  auto tmp = p;
  tmp += ".tmp." + std::to_string(::getpid()) + "." + std::to_string(counter++);
  if (gzip) {
    gzFile f = gzopen(tmp.c_str(), "wb");
    if (!f) throw std::runtime_error("cannot write " + tmp.string());
    const bool ok = data.empty() || gzwrite(f, data.data(), static_cast<unsigned>(data.size())) > 0;
    if (gzclose(f) != Z_OK || !ok) {
      std::filesystem::remove(tmp);
      throw std::runtime_error("gzip write failed for " + tmp.string());
    }
  } else {
    std::ofstream out(tmp, std::ios::binary);
    out << data;
    out.close();
    if (!out) {
      std::filesystem::remove(tmp);
      throw std::runtime_error("cannot write " + tmp.string());
    }
  }
  std::filesystem::rename(tmp, p);
}

}  // namespace detail

/// JSON file cache of fundamental characters, one file per (type, rank, node).
class CharacterCache {
 public:
  explicit CharacterCache(std::filesystem::path dir, bool gzip = false) : dir_(std::move(dir)), gzip_(gzip) {}

  const std::filesystem::path& dir() const { return dir_; }

  std::filesystem::path path_for(const CacheKey& k, bool gz) const {
    return dir_ / (k.stem() + (gz ? ".json.gz" : ".json"));
  }

  /// Returns the cached character, or nullopt when absent, stale (engine
  /// version mismatch) or corrupt (checksum or parse failure). why receives
  /// the reason in the latter cases.
  std::optional<QCharacter> load(const CacheKey& k, std::string* why = nullptr) const {
    for (bool gz : {gzip_, !gzip_}) {
      const auto p = path_for(k, gz);
      if (!std::filesystem::exists(p)) continue;
      try {
        const Json j = Json::parse(detail::read_file(p));
        const auto& meta = j.at("meta");
        if (meta.at("engine_version").get<std::string>() != engine_version) {
          if (why) *why = "engine version mismatch in " + p.string();
          return std::nullopt;
        }
        const auto& payload = j.at("payload");
        if (sha256_hex(payload.dump()) != meta.at("sha256").get<std::string>()) {
          if (why) *why = "checksum mismatch in " + p.string();
          return std::nullopt;
        }
        auto doc = document_from_json(payload);
        const auto& key = j.at("key");
        if (doc.type != k.type || doc.rank != k.rank || doc.node != k.node ||
            key.at("node").get<int>() != k.node) {
          if (why) *why = "key mismatch in " + p.string();
          return std::nullopt;
        }
        return std::move(doc.character);
      } catch (const std::exception& e) {
        if (why) *why = "unreadable cache file " + p.string() + ": " + e.what();
        return std::nullopt;
      }
    }
    return std::nullopt;
  }

  std::filesystem::path store(const CacheKey& k, const QCharacter& chi, double wall_ms) const {
    std::filesystem::create_directories(dir_);
    const Json payload = document_to_json({k.type, k.rank, k.node, chi});
    Json j;
    j["schema"] = schema_version;
    j["key"] = {{"type", std::string(1, to_char(k.type))}, {"rank", k.rank}, {"node", k.node}};
    j["meta"] = {{"engine_version", engine_version},
                 {"terms", chi.size()},
                 {"wall_ms", wall_ms},
                 {"sha256", sha256_hex(payload.dump())}};
    j["payload"] = payload;
    const auto p = path_for(k, gzip_);
    detail::write_file_atomic(p, j.dump() + "\n", gzip_);
    return p;
  }

 private:
  std::filesystem::path dir_;
  bool gzip_;
};

}  // namespace qchar
