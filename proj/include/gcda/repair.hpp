#pragma once

#include <vector>

#include "gcda/grammar.hpp"

namespace gcda::repair {

/// Re-Pair: repeatedly replace the most frequent adjacent pair with a fresh
/// nonterminal until no pair occurs at least twice. Frequencies count
/// non-overlapping occurrences left to right (a run x^5 holds two (x,x)
/// occurrences). Frequency ties prefer the pair whose symbols were generated
/// earliest (minimal sum of creation ranks, terminals rank 0), then the
/// lexicographically smaller pair. Returns an uncompleted grammar whose
/// top_level is the residual sequence.
Grammar compress(const std::vector<Symbol>& seq, Symbol n_terminals);

/// Fold top_level into a single start symbol by repeatedly merging the
/// adjacent pair with minimal merged height 1 + max(h_left, h_right),
/// leftmost first on ties. Throws AlreadyCompleted on a completed grammar.
Grammar complete(Grammar g);

}  // namespace gcda::repair
