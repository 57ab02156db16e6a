#pragma once

#include <cstdint>
#include <vector>

#include "gcda/bitvector.hpp"
#include "gcda/grammar.hpp"

namespace gcda {

/// Grammar-compressed distinct-document lists for the sampled symbols of a
/// DA grammar. Lists are stored in ascending symbol-id order, concatenated
/// into list_store (symbols of the uncompleted grammar G' over document-id
/// terminals); list_starts marks where each compressed list begins.
struct SampledLists {
  std::uint32_t b = 512;
  std::uint64_t beta_milli = 4000;  // beta, fixed point x1000
  BitVector sampled;                // indexed by symbol id; bit set = list stored
  Grammar list_grammar;
  std::vector<Symbol> list_store;
  BitVector list_starts;

  bool is_sampled(Symbol v) const { return v < sampled.size() && sampled.get(v); }
};

/// Build-time facts that are useful to tests and the CLI space report but
/// are not part of the serialized index.
struct DoclistsBuildInfo {
  std::vector<std::uint32_t> d_size;  // |D_v| per symbol id (terminals 1; id 0 unused)
  std::uint32_t n_leaf_sampled = 0;
  std::uint32_t n_initial = 0;
  std::uint32_t n_pruned = 0;
  std::uint32_t n_stored = 0;
  std::uint64_t raw_list_elems = 0;  // sum |D_v| over stored symbols, uncompressed
};

/// Sample the parse tree of a completed grammar and compress the retained
/// lists. A symbol is leaf-sampled when it occurs with exp_len(v) <= b under
/// a parent with exp_len > b; every symbol with exp_len > b starts out
/// sampled (it is an ancestor of such a leaf occurrence) and is then pruned
/// bottom-up, in increasing height, when the lists below it are cheap enough
/// to merge: summing |D_u| per distinct sampled descendant u and 1 per
/// distinct terminal on the frontier, sum <= beta * |D_v|. That sum is
/// exactly what a query pays to merge the segment, so pruning preserves the
/// merge-volume bound. The start symbol and leaf-sampled symbols are never
/// pruned. Throws GrammarNotCompleted, InvalidParameter.
SampledLists build_sampled_lists(const Grammar& g, std::uint32_t b, std::uint64_t beta_milli,
                                 DoclistsBuildInfo* info = nullptr);

struct CompressedLists {
  Grammar grammar;  // G': uncompleted, n_terminals = d
  std::vector<Symbol> store;
  BitVector starts;
};

/// Re-Pair the concatenation of `lists` with one unique separator (> d)
/// between consecutive lists, then drop the separators from the top level
/// and split it back into per-list compressed sequences. Separators occur
/// once each, so no rule can capture one (checked).
CompressedLists compress_lists(const std::vector<std::vector<Symbol>>& lists, Symbol d);

/// Stored list of a sampled symbol, decompressed: strictly increasing
/// document ids. O(|D_v|). Throws NotSampled / UnknownSymbol.
std::vector<Symbol> get_list(const SampledLists& sl, Symbol v);

/// Sorted distinct documents of v's expansion, computed directly from the
/// DA grammar (the query-time path for small unsampled nodes). O(len log len).
std::vector<Symbol> compute_list(const Grammar& g, Symbol v);

/// [v] when v is sampled or terminal; otherwise the left-to-right sequence
/// of highest sampled descendants, with bare terminals as implicit
/// singletons.
std::vector<Symbol> sampled_descendants(const Grammar& g, const SampledLists& sl, Symbol v);

}  // namespace gcda
