#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "genset/equiv.hpp"
#include "genset/errors.hpp"

namespace genset {

inline constexpr std::uint32_t kCacheFormatVersion = 1;

// FNV-1a over the degree, the sorted generator image arrays and the order.
std::uint64_t group_hash(const PermGroup& g);

// Byte image of the lattice, maximal classes and fixed-point vectors.
std::string serialize(const PermGroup& g, const GroupData& data);
// Throws CacheFormatError on a malformed, foreign or outdated image.
GroupData deserialize(const PermGroup& g, std::string_view bytes);

class CacheFormatError : public Error {
 public:
  using Error::Error;
};

std::filesystem::path cache_file(const std::filesystem::path& dir, const PermGroup& g);
// nullopt on a missing or unusable entry.
std::optional<GroupData> load_cached(const std::filesystem::path& dir, const PermGroup& g);
// Written to a temporary file and renamed into place.
void store_cached(const std::filesystem::path& dir, const PermGroup& g, const GroupData& data);

struct CacheOutcome {
  bool used = false;  // a cache directory was configured
  bool hit = false;
};

// analyze() behind the cache in `dir` when one is given.
GroupData analyze_cached(const PermGroup& g, const AnalysisOptions& options,
                         const std::optional<std::filesystem::path>& dir, CacheOutcome* outcome = nullptr);

}  // namespace genset
