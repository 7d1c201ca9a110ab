#include "cyclomat/field_cache.hpp"

#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <string>
#include <thread>

#include <unistd.h>
#include <vector>

namespace cyclomat {

std::optional<FieldCache> FieldCache::from_environment() {
  const char* dir = std::getenv(kCacheDirEnv);
  if (dir == nullptr || *dir == '\0') return std::nullopt;
  return FieldCache(dir);
}

std::filesystem::path FieldCache::entry_path(int p, int n) const {
  return dir_ / ("fq_p" + std::to_string(p) + "_n" + std::to_string(n) + "_v" +
                 std::to_string(kFieldCacheVersion) + ".json");
}

std::optional<FqCtxPtr> FieldCache::load(int p, int n) const {
  std::ifstream in(entry_path(p, n));
  if (!in) return std::nullopt;
  try {
    const auto doc = nlohmann::json::parse(in);
    if (doc.at("format_version").get<int>() != kFieldCacheVersion || doc.at("p").get<int>() != p ||
        doc.at("n").get<int>() != n) {
      return std::nullopt;
    }
    auto ctx = FqCtx::from_parts(p, n, doc.at("modulus").get<std::vector<int>>(),
                                 doc.at("generator").get<int>());
    const auto table = doc.at("exp_table").get<std::vector<int>>();
    const auto expected = ctx->exp_table();
    if (!std::equal(table.begin(), table.end(), expected.begin(), expected.end())) return std::nullopt;
    return ctx;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

void FieldCache::store(const FqCtx& ctx) const {
  std::filesystem::create_directories(dir_);
  const nlohmann::json doc = {
      {"format_version", kFieldCacheVersion},
      {"p", ctx.p()},
      {"n", ctx.n()},
      {"modulus", ctx.modulus()},
      {"generator", ctx.generator_index()},
      {"exp_table", std::vector<int>(ctx.exp_table().begin(), ctx.exp_table().end())},
  };
  const auto target = entry_path(ctx.p(), ctx.n());
  // Unique per writer so concurrent stores of the same entry never share a
  // temporary; the rename is atomic either way.
  auto tmp = target;
  tmp += ".tmp." + std::to_string(::getpid()) + "." +
         std::to_string(std::hash<std::thread::id>{}(std::this_thread::get_id()));
  {
    std::ofstream out(tmp, std::ios::trunc);
    out << doc.dump();
    if (!out) throw std::runtime_error("FieldCache: failed writing " + tmp.string());
  }
  std::filesystem::rename(tmp, target);
}

FqCtxPtr FieldCache::get(int p, int n, std::uint64_t max_q) const {
  if (auto hit = load(p, n)) return *hit;
  auto ctx = build_field(p, n, max_q);
  try {
    store(*ctx);
  } catch (const std::exception&) {
    // An unwritable cache only costs a rebuild next time.
  }
  return ctx;
}

}  // namespace cyclomat
