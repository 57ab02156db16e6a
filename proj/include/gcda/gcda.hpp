#pragma once

#include <cstdint>
#include <vector>

#include "gcda/grammar.hpp"

namespace gcda {

/// One maximal parse-tree node covering text positions [sp, ep] (1-based
/// inclusive over the grammar's expansion). Terminals appear as length-1
/// segments.
struct CoverSegment {
  Symbol sym;
  std::uint32_t sp, ep;

  bool operator==(const CoverSegment&) const = default;
};

/// Expansion symbol at position i (1-based). O(height). Completed grammars only.
Symbol access(const Grammar& g, std::uint32_t i);

/// Expansion slice [sp, ep], 1-based inclusive. O(height + ep - sp).
std::vector<Symbol> extract(const Grammar& g, std::uint32_t sp, std::uint32_t ep);

/// Minimal left-to-right sequence of maximal parse-tree nodes tiling
/// [sp, ep]: descend to the lowest node containing the range, then collect
/// maximal children along the two boundary paths. At most 2*height(start)
/// segments (n >= 2).
std::vector<CoverSegment> cover(const Grammar& g, std::uint32_t sp, std::uint32_t ep);

}  // namespace gcda
