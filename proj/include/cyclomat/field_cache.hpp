#pragma once

// On-disk cache of finite-field contexts keyed by (p, n, format version).
//
// Each entry is a small JSON document holding the modulus, the generator
// index and the exponent table.  Loading re-validates everything; any
// mismatch or parse failure counts as a miss and the entry is rebuilt.
// Writes go to a temporary file that is renamed into place.

#include "cyclomat/finite_field.hpp"

#include <filesystem>
#include <optional>

namespace cyclomat {

inline constexpr int kFieldCacheVersion = 1;
inline constexpr const char* kCacheDirEnv = "CYCLOMAT_CACHE_DIR";

class FieldCache {
 public:
  explicit FieldCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

  /// Directory from $CYCLOMAT_CACHE_DIR, if set and non-empty.
  static std::optional<FieldCache> from_environment();

  const std::filesystem::path& directory() const { return dir_; }
  std::filesystem::path entry_path(int p, int n) const;

  std::optional<FqCtxPtr> load(int p, int n) const;
  void store(const FqCtx& ctx) const;
  /// Load, or build and store.
  FqCtxPtr get(int p, int n, std::uint64_t max_q = kDefaultFieldBound) const;

 private:
  std::filesystem::path dir_;
};

}  // namespace cyclomat
