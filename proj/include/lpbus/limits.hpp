#pragma once

#include <cstdint>

namespace lpbus {

// Cap on the number of words/blocks any operation will materialize in memory.
// Constructions whose output would exceed this throw resource_limit_error.
inline constexpr std::uint64_t kMaxMaterializedWords = std::uint64_t{1} << 22;

}  // namespace lpbus
