#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "gcda/corpus.hpp"

namespace gcda {

/// Plain suffix array over the collection text plus the aligned document
/// array. sa[k] is the 1-based text position of the rank-(k+1) suffix;
/// da[k] = doc_of(sa[k]). Suffixes are ordered by full lexicographic
/// comparison with the terminator as the smallest byte.
struct SuffixStructures {
  std::vector<std::uint32_t> sa;
  std::vector<std::uint32_t> da;
};

SuffixStructures build_suffix_structures(const DocumentCollection& coll);

/// 1-based inclusive interval [sp, ep] of suffixes prefixed by `pattern`,
/// or nullopt when the pattern does not occur. O(|pattern| * log n).
/// Throws EmptyPattern, TerminatorInPattern.
std::optional<std::pair<std::uint32_t, std::uint32_t>> pattern_range(
    const SuffixStructures& s, const DocumentCollection& coll, std::string_view pattern);

}  // namespace gcda
