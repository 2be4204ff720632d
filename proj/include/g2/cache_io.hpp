#pragma once

#include <filesystem>

#include "g2/genus_zero.hpp"

namespace g2 {

inline constexpr int kCacheVersion = 1;

/// Writes every stored genus-zero invariant as versioned JSON. The file is
/// written beside the target and renamed into place.
void save_cache(const GenusZero& gw, const std::filesystem::path& path);

/// Reads a cache file written by save_cache and seeds `gw`. Nothing is
/// inserted unless the whole file validates. Returns the entry count.
std::size_t load_cache(GenusZero& gw, const std::filesystem::path& path);

}  // namespace g2
