#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "gcda/corpus.hpp"
#include "gcda/doclists.hpp"
#include "gcda/gcda.hpp"
#include "gcda/grammar.hpp"
#include "gcda/suffix_index.hpp"

namespace gcda {

// Defaults validated experimentally as a good general-purpose choice.
inline constexpr std::uint32_t kDefaultB = 512;
inline constexpr std::uint64_t kDefaultBetaMilli = 4000;  // beta = 4

/// Full document-listing index: pattern-range component (plain suffix
/// array over the text), the grammar-compressed document array, and the
/// sampled distinct-document lists.
struct Index {
  DocumentCollection coll;
  SuffixStructures sfx;
  Grammar grammar;
  SampledLists lists;
};

enum class ListMode { Gcda, BruteC, BruteD };

/// Per-query instrumentation (merge volume for the sampling contract).
struct QueryStats {
  std::uint64_t heap_pushed = 0;  // elements fed through the merge heap
  std::uint32_t n_segments = 0;
  std::uint32_t n_unsampled_leaf_segments = 0;
};

/// In-memory component sizes; the space story the CLI reports.
struct SpaceReport {
  std::uint64_t text_bytes = 0;
  std::uint64_t sa_bytes = 0;
  std::uint64_t da_bytes = 0;  // plain 32-bit document array baseline
  std::uint64_t grammar_bytes = 0;
  std::uint64_t lists_bytes = 0;

  std::uint64_t index_bytes() const { return grammar_bytes + lists_bytes; }
};

struct BuildStats {
  SpaceReport space;
  std::uint32_t core_rules = 0;   // rules out of Re-Pair
  std::uint32_t total_rules = 0;  // after completion
  std::uint32_t top_level_len = 0;
  std::uint32_t height = 0;
  DoclistsBuildInfo doclists;
};

/// Index the collection: suffix array + DA, Re-Pair + completion over the
/// DA, sampled lists at parameters (b, beta).
Index build_index(DocumentCollection coll, std::uint32_t b = kDefaultB,
                  std::uint64_t beta_milli = kDefaultBetaMilli, BuildStats* stats = nullptr);

SpaceReport measure_space(const Index& idx);

/// Distinct union of strictly increasing lists via a k-way binary heap.
/// Violations of the sorted-input contract surface lazily as UnsortedInput.
std::vector<Symbol> merge_distinct(const std::vector<std::vector<Symbol>>& lists,
                                   QueryStats* stats = nullptr);

/// Distinct documents containing `pattern`, ascending. Mode Gcda runs the
/// compressed path (cover -> sampled lists -> merge); BruteC expands the
/// compressed DA slice; BruteD scans the plain DA. All three agree.
std::vector<std::uint32_t> list_documents(const Index& idx, std::string_view pattern,
                                          ListMode mode = ListMode::Gcda,
                                          QueryStats* stats = nullptr);

}  // namespace gcda
