#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "gcda/errors.hpp"

namespace gcda {

using Symbol = std::uint32_t;

/// Binary straight-line grammar. Symbol ids are 1-based: 1..n_terminals are
/// terminals, and rule k (0-based) defines nonterminal n_terminals + 1 + k.
/// Rules only reference terminals or earlier nonterminals, so the rule array
/// is already in topological order.
///
/// A grammar fresh out of compress() carries the remaining `top_level`
/// sequence and no start symbol; complete() folds top_level into additional
/// rules and sets `start`.
struct Grammar {
  Symbol n_terminals = 0;
  std::vector<std::array<Symbol, 2>> rules;
  std::vector<Symbol> top_level;
  Symbol start = 0;

  bool completed() const { return start != 0; }

  Symbol num_symbols() const {
    return n_terminals + static_cast<Symbol>(rules.size());
  }

  bool is_terminal(Symbol s) const { return s >= 1 && s <= n_terminals; }

  bool valid_symbol(Symbol s) const { return s >= 1 && s <= num_symbols(); }

  const std::array<Symbol, 2>& rhs(Symbol s) const {
    return rules[s - n_terminals - 1];
  }

  std::uint32_t exp_len(Symbol s) const {
    return is_terminal(s) ? 1 : exp_len_[s - n_terminals - 1];
  }

  std::uint32_t height(Symbol s) const {
    return is_terminal(s) ? 0 : height_[s - n_terminals - 1];
  }

  /// Append rule s -> (left, right); returns the new symbol id.
  Symbol add_rule(Symbol left, Symbol right);

  /// Recompute exp_len/height tables from the rule array (used after
  /// deserialization, which stores only the rules).
  void rebuild_tables();

 private:
  std::vector<std::uint32_t> exp_len_;  // per nonterminal
  std::vector<std::uint32_t> height_;   // per nonterminal
};

/// Expand one symbol, appending exp_len(s) terminals to `out`.
void expand_symbol(const Grammar& g, Symbol s, std::vector<Symbol>& out);

/// Full expansion: the start symbol if completed, else the top_level
/// sequence in order. Throws EmptySequence if there is nothing to expand.
std::vector<Symbol> decompress(const Grammar& g);

}  // namespace gcda
