#include "gcda/grammar.hpp"

#include <algorithm>

namespace gcda {

Symbol Grammar::add_rule(Symbol left, Symbol right) {
  if (!valid_symbol(left) || !valid_symbol(right)) {
    fail(ErrorCode::SymbolOutOfRange, "rule references symbol outside [1, " +
                                          std::to_string(num_symbols()) + "]");
  }
  rules.push_back({left, right});
  exp_len_.push_back(exp_len(left) + exp_len(right));
  height_.push_back(1 + std::max(height(left), height(right)));
  return num_symbols();
}

void Grammar::rebuild_tables() {
  exp_len_.clear();
  height_.clear();
  exp_len_.reserve(rules.size());
  height_.reserve(rules.size());
  for (std::size_t k = 0; k < rules.size(); ++k) {
    const Symbol s = n_terminals + 1 + static_cast<Symbol>(k);
    const auto& [l, r] = rules[k];
    if (!valid_symbol(l) || !valid_symbol(r) || l >= s || r >= s) {
      fail(ErrorCode::SymbolOutOfRange,
           "rule " + std::to_string(k) + " references a later or invalid symbol");
    }
    exp_len_.push_back(exp_len(l) + exp_len(r));
    height_.push_back(1 + std::max(height(l), height(r)));
  }
}

void expand_symbol(const Grammar& g, Symbol s, std::vector<Symbol>& out) {
  if (!g.valid_symbol(s)) {
    fail(ErrorCode::UnknownSymbol, "cannot expand symbol " + std::to_string(s));
  }
  // Explicit stack: completed grammars can be deep.
  std::vector<Symbol> stack{s};
  while (!stack.empty()) {
    const Symbol v = stack.back();
    stack.pop_back();
    if (g.is_terminal(v)) {
      out.push_back(v);
    } else {
      const auto& [l, r] = g.rhs(v);
      stack.push_back(r);
      stack.push_back(l);
    }
  }
}

std::vector<Symbol> decompress(const Grammar& g) {
  std::vector<Symbol> out;
  if (g.completed()) {
    out.reserve(g.exp_len(g.start));
    expand_symbol(g, g.start, out);
  } else {
    if (g.top_level.empty()) fail(ErrorCode::EmptySequence, "grammar has no content to expand");
    for (Symbol s : g.top_level) expand_symbol(g, s, out);
  }
  return out;
}

}  // namespace gcda
