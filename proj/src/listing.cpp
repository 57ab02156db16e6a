#include "gcda/listing.hpp"

#include <algorithm>
#include <cassert>
#include <queue>

#include "gcda/errors.hpp"
#include "gcda/repair.hpp"

namespace gcda {

Index build_index(DocumentCollection coll, std::uint32_t b, std::uint64_t beta_milli,
                  BuildStats* stats) {
  if (b == 0) fail(ErrorCode::InvalidParameter, "block threshold b must be positive");
  if (beta_milli < 1000) fail(ErrorCode::InvalidParameter, "beta must be >= 1");

  Index idx;
  idx.coll = std::move(coll);
  idx.sfx = build_suffix_structures(idx.coll);

  const auto d = static_cast<Symbol>(idx.coll.d());
  std::vector<Symbol> da(idx.sfx.da.begin(), idx.sfx.da.end());
  idx.grammar = repair::compress(da, d);
  const auto core_rules = static_cast<std::uint32_t>(idx.grammar.rules.size());
  const auto top_len = static_cast<std::uint32_t>(idx.grammar.top_level.size());
  idx.grammar = repair::complete(std::move(idx.grammar));

  DoclistsBuildInfo info;
  idx.lists = build_sampled_lists(idx.grammar, b, beta_milli, &info);

  if (stats != nullptr) {
    stats->space = measure_space(idx);
    stats->core_rules = core_rules;
    stats->total_rules = static_cast<std::uint32_t>(idx.grammar.rules.size());
    stats->top_level_len = top_len;
    stats->height = idx.grammar.height(idx.grammar.start);
    stats->doclists = std::move(info);
  }
  return idx;
}

SpaceReport measure_space(const Index& idx) {
  SpaceReport r;
  r.text_bytes = idx.coll.text.size();
  r.sa_bytes = idx.sfx.sa.size() * sizeof(std::uint32_t);
  r.da_bytes = idx.sfx.da.size() * sizeof(std::uint32_t);
  // Grammar cost at query time: rule pairs plus the expansion-length table
  // that drives the cover descent.
  r.grammar_bytes = idx.grammar.rules.size() * (2 * sizeof(Symbol) + sizeof(std::uint64_t));
  r.lists_bytes = idx.lists.list_grammar.rules.size() * 2 * sizeof(Symbol) +
                  idx.lists.list_grammar.top_level.size() * sizeof(Symbol) +
                  idx.lists.list_store.size() * sizeof(Symbol) + idx.lists.list_starts.size_bytes() +
                  idx.lists.sampled.size_bytes();
  return r;
}

namespace {

struct HeapItem {
  Symbol val;
  std::uint32_t list;
  std::uint32_t pos;
};

struct HeapOrder {
  bool operator()(const HeapItem& x, const HeapItem& y) const {
    if (x.val != y.val) return x.val > y.val;  // min-heap on value
    return x.list > y.list;
  }
};

}  // namespace

std::vector<Symbol> merge_distinct(const std::vector<std::vector<Symbol>>& lists,
                                   QueryStats* stats) {
  std::priority_queue<HeapItem, std::vector<HeapItem>, HeapOrder> heap;
  std::uint64_t pushed = 0;
  for (std::uint32_t l = 0; l < lists.size(); ++l) {
    if (!lists[l].empty()) {
      heap.push({lists[l][0], l, 0});
      ++pushed;
    }
  }
  std::vector<Symbol> out;
  bool have_last = false;
  Symbol last = 0;
  while (!heap.empty()) {
    const HeapItem top = heap.top();
    heap.pop();
    if (!have_last || top.val != last) {
      out.push_back(top.val);
      last = top.val;
      have_last = true;
    }
    const auto& src = lists[top.list];
    const std::uint32_t next = top.pos + 1;
    if (next < src.size()) {
      if (src[next] <= top.val)
        fail(ErrorCode::UnsortedInput, "merge input list is not strictly increasing");
      heap.push({src[next], top.list, next});
      ++pushed;
    }
  }
  if (stats != nullptr) stats->heap_pushed += pushed;
  return out;
}

namespace {

std::vector<std::uint32_t> distinct_sorted(std::vector<std::uint32_t> vals) {
  std::sort(vals.begin(), vals.end());
  vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
  return vals;
}

std::vector<std::uint32_t> list_gcda(const Index& idx, std::uint32_t sp, std::uint32_t ep,
                                     QueryStats* stats) {
  const auto segments = cover(idx.grammar, sp, ep);
  std::vector<std::vector<Symbol>> inputs;
  std::uint32_t unsampled_leaves = 0;
  for (const CoverSegment& seg : segments) {
    if (idx.grammar.is_terminal(seg.sym)) {
      inputs.push_back({seg.sym});
    } else if (idx.lists.is_sampled(seg.sym)) {
      inputs.push_back(get_list(idx.lists, seg.sym));
    } else if (idx.grammar.exp_len(seg.sym) <= idx.lists.b) {
      // Unsampled leaf of the cover: expand on the fly, at most b symbols.
      inputs.push_back(compute_list(idx.grammar, seg.sym));
      ++unsampled_leaves;
    } else {
      // Large unsampled node: its pruning certificate guarantees the set of
      // distinct frontier symbols below it is cheap enough to merge
      // directly. A symbol occurring several times on the frontier holds
      // one list, fetched once.
      auto frontier = sampled_descendants(idx.grammar, idx.lists, seg.sym);
      std::sort(frontier.begin(), frontier.end());
      frontier.erase(std::unique(frontier.begin(), frontier.end()), frontier.end());
      for (Symbol u : frontier) {
        if (idx.grammar.is_terminal(u))
          inputs.push_back({u});
        else
          inputs.push_back(get_list(idx.lists, u));
      }
    }
  }
  if (stats != nullptr) {
    stats->n_segments = static_cast<std::uint32_t>(segments.size());
    stats->n_unsampled_leaf_segments = unsampled_leaves;
  }
  auto merged = merge_distinct(inputs, stats);
  return {merged.begin(), merged.end()};
}

}  // namespace

std::vector<std::uint32_t> list_documents(const Index& idx, std::string_view pattern,
                                          ListMode mode, QueryStats* stats) {
  const auto range = pattern_range(idx.sfx, idx.coll, pattern);
  if (!range) return {};
  const auto [sp, ep] = *range;
  switch (mode) {
    case ListMode::Gcda:
      return list_gcda(idx, sp, ep, stats);
    case ListMode::BruteC: {
      auto slice = extract(idx.grammar, sp, ep);
      return distinct_sorted({slice.begin(), slice.end()});
    }
    case ListMode::BruteD: {
      std::vector<std::uint32_t> slice(idx.sfx.da.begin() + (sp - 1), idx.sfx.da.begin() + ep);
      return distinct_sorted(std::move(slice));
    }
  }
  fail(ErrorCode::InvalidParameter, "unknown listing mode");
}

}  // namespace gcda
