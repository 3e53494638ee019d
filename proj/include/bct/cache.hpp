#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bct/group_io.hpp"
#include "bct/transversality.hpp"

namespace bct {

// Bumped whenever the layout or the meaning of cached data changes.
inline constexpr std::uint32_t kCacheVersion = 1;

// SHA-256 of canonical_definition_text, lower-case hex.
std::string definition_hash(const GroupDefinition& def);

struct CachedData {
  std::vector<char> transverse_flags;
  std::vector<OrbitRecord> orbits;
};

// Binary file <dir>/<hash>.bin: magic, version, hash, group order, hyperplane
// count, flags, orbits, then the SHA-256 of all of that. Anything that does
// not match is treated as a miss.
class GroupCache {
 public:
  explicit GroupCache(std::string dir) : dir_(std::move(dir)) {}
  std::string path_for(const std::string& hash) const;
  std::optional<CachedData> load(const std::string& hash, std::size_t group_order, std::size_t hyperplanes) const;
  static std::vector<char> serialize(const std::string& hash, std::size_t group_order, const CachedData& data,
                                     std::uint32_t version = kCacheVersion);
  // Writes through a temporary file and a rename.
  void store(const std::string& hash, std::size_t group_order, const CachedData& data) const;

 private:
  std::string dir_;
};

}  // namespace bct
