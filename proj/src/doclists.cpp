#include "gcda/doclists.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

#include "gcda/repair.hpp"

namespace gcda {

SampledLists build_sampled_lists(const Grammar& g, std::uint32_t b, std::uint64_t beta_milli,
                                 DoclistsBuildInfo* info) {
  if (!g.completed()) fail(ErrorCode::GrammarNotCompleted, "sampling needs a completed grammar");
  if (b < 1) fail(ErrorCode::InvalidParameter, "block threshold b must be >= 1");
  if (beta_milli < 1000) fail(ErrorCode::InvalidParameter, "beta must be >= 1");

  const Symbol d = g.n_terminals;
  const Symbol nsym = g.num_symbols();
  const std::size_t nrules = g.rules.size();

  // Distinct document lists for every nonterminal, bottom-up: union of the
  // children's lists (a terminal child acts as a singleton).
  std::vector<std::vector<Symbol>> dv(nrules);
  for (std::size_t k = 0; k < nrules; ++k) {
    const auto& [l, r] = g.rules[k];
    Symbol lbuf, rbuf;
    auto span_of = [&](Symbol s, Symbol& buf) -> std::pair<const Symbol*, std::size_t> {
      if (g.is_terminal(s)) {
        buf = s;
        return {&buf, 1};
      }
      const auto& list = dv[s - d - 1];
      return {list.data(), list.size()};
    };
    const auto [lp, ln] = span_of(l, lbuf);
    const auto [rp, rn] = span_of(r, rbuf);
    dv[k].reserve(ln + rn);
    std::set_union(lp, lp + ln, rp, rp + rn, std::back_inserter(dv[k]));
  }

  // Leaf sampling: v occurs with exp_len(v) <= b under a parent exp_len > b.
  std::vector<std::uint8_t> leaf_sampled(nsym + 1, 0);
  for (std::size_t k = 0; k < nrules; ++k) {
    const Symbol w = d + 1 + static_cast<Symbol>(k);
    if (g.exp_len(w) <= b) continue;
    for (const Symbol c : g.rules[k]) {
      if (!g.is_terminal(c) && g.exp_len(c) <= b) leaf_sampled[c] = 1;
    }
  }

  // Initially sampled: leaf-sampled symbols plus every ancestor of a sampled
  // leaf occurrence — exactly the symbols with exp_len > b — plus the start.
  std::vector<std::uint8_t> in_set(nsym + 1, 0);
  std::uint32_t n_initial = 0, n_leaf = 0;
  for (Symbol v = d + 1; v <= nsym; ++v) {
    if (leaf_sampled[v] || g.exp_len(v) > b) {
      in_set[v] = 1;
      ++n_initial;
    }
    if (leaf_sampled[v]) ++n_leaf;
  }
  if (!in_set[g.start]) {
    in_set[g.start] = 1;
    ++n_initial;
  }

  // Bottom-up pruning in increasing height (id breaks ties; children always
  // have strictly smaller height, so equal-height symbols are independent).
  std::vector<Symbol> order(nrules);
  std::iota(order.begin(), order.end(), d + 1);
  std::stable_sort(order.begin(), order.end(),
                   [&](Symbol x, Symbol y) { return g.height(x) < g.height(y); });

  // Pruning charges each distinct symbol on v's current sampled frontier
  // once: |D_u| for a sampled nonterminal, 1 for a terminal singleton. This
  // equals the query-time merge volume of the segment (which fetches one
  // list per distinct frontier symbol), so pruned nodes certify the
  // merge-volume bound. The walk over the frontier dedupes via stamps and
  // stops early once the budget is exceeded.
  std::vector<std::uint32_t> stamp(nsym + 1, 0);
  std::uint32_t cur = 0;
  std::vector<Symbol> stack;
  std::uint32_t n_pruned = 0;
  for (const Symbol v : order) {
    if (!in_set[v] || v == g.start || leaf_sampled[v]) continue;
    const std::uint64_t budget = beta_milli * dv[v - d - 1].size();
    ++cur;
    stamp[v] = cur;  // occurrences of v below itself cannot happen; be safe
    const auto& [l, r] = g.rhs(v);
    stack.assign({r, l});
    std::uint64_t sum = 0;
    bool keep = false;
    while (!stack.empty()) {
      const Symbol s = stack.back();
      stack.pop_back();
      if (stamp[s] == cur) continue;
      stamp[s] = cur;
      if (g.is_terminal(s)) {
        sum += 1;
      } else if (in_set[s]) {
        sum += dv[s - d - 1].size();
      } else {
        stack.push_back(g.rhs(s)[1]);
        stack.push_back(g.rhs(s)[0]);
        continue;
      }
      if (sum * 1000 > budget) {
        keep = true;
        break;
      }
    }
    if (!keep) {
      in_set[v] = 0;
      ++n_pruned;
    }
  }

  // Gather stored lists in ascending symbol order and compress them.
  std::vector<std::vector<Symbol>> stored;
  SampledLists sl;
  sl.b = b;
  sl.beta_milli = beta_milli;
  sl.sampled = BitVector(nsym + 1);
  std::uint64_t raw_elems = 0;
  for (Symbol v = d + 1; v <= nsym; ++v) {
    if (!in_set[v]) continue;
    sl.sampled.set(v);
    stored.push_back(dv[v - d - 1]);
    raw_elems += stored.back().size();
  }
  sl.sampled.finalize();

  CompressedLists cl = compress_lists(stored, d);
  sl.list_grammar = std::move(cl.grammar);
  sl.list_store = std::move(cl.store);
  sl.list_starts = std::move(cl.starts);

  if (info) {
    info->d_size.assign(nsym + 1, 0);
    for (Symbol v = 1; v <= nsym; ++v) {
      info->d_size[v] =
          g.is_terminal(v) ? 1 : static_cast<std::uint32_t>(dv[v - d - 1].size());
    }
    info->n_leaf_sampled = n_leaf;
    info->n_initial = n_initial;
    info->n_pruned = n_pruned;
    info->n_stored = static_cast<std::uint32_t>(stored.size());
    info->raw_list_elems = raw_elems;
  }
  return sl;
}

CompressedLists compress_lists(const std::vector<std::vector<Symbol>>& lists, Symbol d) {
  if (lists.empty()) fail(ErrorCode::EmptySequence, "no lists to compress");
  const Symbol nseps = static_cast<Symbol>(lists.size()) - 1;

  std::vector<Symbol> input;
  {
    std::size_t total = nseps;
    for (const auto& l : lists) total += l.size();
    input.reserve(total);
  }
  for (std::size_t k = 0; k < lists.size(); ++k) {
    if (lists[k].empty()) fail(ErrorCode::EmptySequence, "list " + std::to_string(k) + " is empty");
    Symbol prev = 0;
    for (Symbol s : lists[k]) {
      if (s < 1 || s > d) {
        fail(ErrorCode::DocIdOutOfRange, "list element " + std::to_string(s) +
                                             " outside [1, " + std::to_string(d) + "]");
      }
      if (s <= prev)
        fail(ErrorCode::UnsortedList, "list " + std::to_string(k) + " is not strictly increasing");
      prev = s;
      input.push_back(s);
    }
    if (k + 1 < lists.size()) input.push_back(d + 1 + static_cast<Symbol>(k));  // separator
  }

  Grammar packed = repair::compress(input, d + nseps);

  // Separators occur exactly once, so they can never be captured by a rule.
  for (const auto& [l, r] : packed.rules) {
    if ((l > d && l <= d + nseps) || (r > d && r <= d + nseps)) {
      fail(ErrorCode::InvalidParameter, "separator symbol leaked into a list rule");
    }
  }

  // Drop separators from the top level and remap nonterminals down into the
  // document-id alphabet: id > d + nseps shifts by nseps.
  auto remap = [&](Symbol s) { return s > d + nseps ? s - nseps : s; };
  CompressedLists out;
  out.grammar.n_terminals = d;
  for (const auto& [l, r] : packed.rules) out.grammar.add_rule(remap(l), remap(r));

  std::vector<std::uint32_t> start_positions;
  start_positions.reserve(lists.size());
  std::uint32_t pos = 0;
  bool at_start = true;
  for (Symbol s : packed.top_level) {
    if (s > d && s <= d + nseps) {
      at_start = true;
      continue;
    }
    if (at_start) {
      start_positions.push_back(pos);
      at_start = false;
    }
    out.store.push_back(remap(s));
    ++pos;
  }
  assert(start_positions.size() == lists.size());

  out.starts = BitVector(out.store.size());
  for (std::uint32_t p : start_positions) out.starts.set(p);
  out.starts.finalize();
  return out;
}

std::vector<Symbol> get_list(const SampledLists& sl, Symbol v) {
  if (v == 0 || v >= sl.sampled.size()) {
    fail(ErrorCode::UnknownSymbol, "symbol " + std::to_string(v) + " not in grammar");
  }
  if (!sl.is_sampled(v)) {
    fail(ErrorCode::NotSampled, "no stored list for symbol " + std::to_string(v));
  }
  const std::uint64_t ordinal = sl.sampled.rank1(v) + 1;  // 1-based among stored
  const std::uint64_t from = sl.list_starts.select1(ordinal);
  const std::uint64_t to = ordinal < sl.list_starts.ones() ? sl.list_starts.select1(ordinal + 1)
                                                           : sl.list_store.size();
  std::vector<Symbol> out;
  for (std::uint64_t p = from; p < to; ++p) {
    expand_symbol(sl.list_grammar, sl.list_store[p], out);
  }
  return out;
}

std::vector<Symbol> compute_list(const Grammar& g, Symbol v) {
  std::vector<Symbol> out;
  expand_symbol(g, v, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Symbol> sampled_descendants(const Grammar& g, const SampledLists& sl, Symbol v) {
  if (!g.valid_symbol(v)) {
    fail(ErrorCode::UnknownSymbol, "symbol " + std::to_string(v) + " not in grammar");
  }
  std::vector<Symbol> out;
  std::vector<Symbol> stack{v};
  while (!stack.empty()) {
    const Symbol s = stack.back();
    stack.pop_back();
    if (g.is_terminal(s) || sl.is_sampled(s)) {
      out.push_back(s);
      continue;
    }
    const auto& [l, r] = g.rhs(s);
    stack.push_back(r);
    stack.push_back(l);
  }
  return out;
}

}  // namespace gcda
