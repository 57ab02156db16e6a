#include "gcda/repair.hpp"

#include <cassert>
#include <cstdint>
#include <limits>
#include <queue>
#include <unordered_map>

namespace gcda::repair {

namespace {

using std::int32_t;
using std::uint32_t;
using std::uint64_t;

constexpr int32_t kNull = -1;

inline uint64_t pair_key(Symbol a, Symbol b) {
  return (static_cast<uint64_t>(a) << 32) | b;
}

struct PairRec {
  uint32_t count = 0;  // greedy non-overlapping occurrences
  int32_t head = kNull;  // first threaded occurrence position
  bool dirty = false;
};

struct HeapEntry {
  uint32_t count;
  Symbol a, b;
};

// Re-Pair over a doubly linked symbol list. Occurrences of each live pair
// are threaded through the positions (onext/oprev); for equal pairs (x,x)
// only the greedy non-overlapping starts of each run are threaded, so a
// pair's threaded-occurrence count is exactly its spec frequency. Runs are
// re-normalized locally whenever a replacement disturbs them.
class Engine {
 public:
  Engine(const std::vector<Symbol>& seq, Grammar& g) : g_(g) {
    const std::size_t n = seq.size();
    sym_.assign(seq.begin(), seq.end());
    prv_.resize(n);
    nxt_.resize(n);
    onext_.assign(n, kNull);
    oprev_.assign(n, kNull);
    is_head_.assign(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      prv_[i] = static_cast<int32_t>(i) - 1;
      nxt_[i] = (i + 1 < n) ? static_cast<int32_t>(i) + 1 : kNull;
    }
    table_.reserve(n);
    rank_base_ = g_.n_terminals;
  }

  void run() {
    initial_scan();
    flush_dirty();
    while (!heap_.empty()) {
      const HeapEntry e = heap_.top();
      heap_.pop();
      auto it = table_.find(pair_key(e.a, e.b));
      if (it == table_.end() || it->second.count != e.count) continue;  // stale
      if (e.count < 2) continue;
      const Symbol fresh = g_.add_rule(e.a, e.b);
      replace_all(e.a, e.b, fresh);
      flush_dirty();
    }
    collect_top_level();
  }

 private:
  // ---- pair table / threading ----------------------------------------

  void mark_dirty(uint64_t key, PairRec& rec) {
    if (!rec.dirty) {
      rec.dirty = true;
      dirty_.push_back(key);
    }
  }

  // Thread position `pos` as a counted occurrence of its current pair.
  void thread(int32_t pos) {
    assert(!is_head_[pos] && nxt_[pos] != kNull);
    const uint64_t key = pair_key(sym_[pos], sym_[nxt_[pos]]);
    PairRec& rec = table_[key];
    onext_[pos] = rec.head;
    oprev_[pos] = kNull;
    if (rec.head != kNull) oprev_[rec.head] = pos;
    rec.head = pos;
    ++rec.count;
    is_head_[pos] = 1;
    mark_dirty(key, rec);
  }

  void unthread(int32_t pos) {
    assert(is_head_[pos] && nxt_[pos] != kNull);
    const uint64_t key = pair_key(sym_[pos], sym_[nxt_[pos]]);
    auto it = table_.find(key);
    assert(it != table_.end() && it->second.count > 0);
    PairRec& rec = it->second;
    if (oprev_[pos] != kNull) onext_[oprev_[pos]] = onext_[pos];
    else rec.head = onext_[pos];
    if (onext_[pos] != kNull) oprev_[onext_[pos]] = oprev_[pos];
    onext_[pos] = oprev_[pos] = kNull;
    --rec.count;
    is_head_[pos] = 0;
    mark_dirty(key, rec);
  }

  // Restore greedy parity threading for the maximal equal-symbol run
  // containing `pos`: within a run of length k the heads sit at offsets
  // 0, 2, ... and number floor(k/2). O(run length).
  void renormalize_run(int32_t pos) {
    const Symbol y = sym_[pos];
    int32_t first = pos;
    while (prv_[first] != kNull && sym_[prv_[first]] == y) first = prv_[first];
    // Walk the run; p's pair is (y,y) exactly while its successor stays in
    // the run.
    int32_t p = first;
    uint32_t offset = 0;
    while (true) {
      const int32_t q = nxt_[p];
      if (q == kNull || sym_[q] != y) break;
      const bool want = (offset % 2 == 0);
      if (want && !is_head_[p]) thread(p);
      else if (!want && is_head_[p]) unthread(p);
      p = q;
      ++offset;
    }
  }

  // ---- initial state ---------------------------------------------------

  void initial_scan() {
    int32_t i = 0;
    while (i != kNull && nxt_[i] != kNull) {
      thread(i);
      const int32_t ni = nxt_[i];
      // Greedy run counting: skip the overlapping occurrence of (x,x).
      if (sym_[i] == sym_[ni] && nxt_[ni] != kNull && sym_[nxt_[ni]] == sym_[i]) i = nxt_[ni];
      else i = ni;
    }
  }

  // ---- replacement -----------------------------------------------------

  // Replace every threaded occurrence of (a, b) with `fresh`. Order over the
  // occurrence list is irrelevant: each splice is local, and neighbour pairs
  // are re-derived from the live state.
  void replace_all(Symbol a, Symbol b, Symbol fresh) {
    const uint64_t kab = pair_key(a, b);
    while (true) {
      auto it = table_.find(kab);
      if (it == table_.end() || it->second.head == kNull) break;
      const int32_t i = it->second.head;
      unthread(i);  // consume this occurrence
      const int32_t j = nxt_[i];
      assert(j != kNull && sym_[i] == a && sym_[j] == b);
      const int32_t lpos = prv_[i];
      const int32_t rpos = nxt_[j];

      // Pairs dying with the splice: (sym[lpos], a) at lpos, (b, sym[rpos]) at j.
      if (lpos != kNull && is_head_[lpos]) unthread(lpos);
      if (rpos != kNull && is_head_[j]) unthread(j);

      // Splice: i absorbs j.
      sym_[i] = fresh;
      nxt_[i] = rpos;
      if (rpos != kNull) prv_[rpos] = i;
      prv_[j] = nxt_[j] = kNull;

      // New pair at lpos; a fresh-symbol run may have grown leftward.
      if (lpos != kNull) {
        if (sym_[lpos] == fresh) renormalize_run(lpos);
        else thread(lpos);
      }
      // New pair at i; if j was the left edge of a b-run, the survivors'
      // greedy parity shifted and must be rebuilt.
      if (rpos != kNull) {
        if (sym_[rpos] == fresh) {
          renormalize_run(i);
        } else {
          thread(i);
          if (sym_[rpos] == b) renormalize_run(rpos);
        }
      }
    }
    // The replaced pair cannot re-form: fresh never occurred before.
    auto it = table_.find(kab);
    assert(it == table_.end() || it->second.count == 0);
    if (it != table_.end()) table_.erase(it);
  }

  // ---- priority handling -----------------------------------------------

  uint64_t creation_rank(Symbol s) const { return s <= rank_base_ ? 0 : s - rank_base_; }

  struct Worse {
    const Engine* eng;
    bool operator()(const HeapEntry& x, const HeapEntry& y) const {
      if (x.count != y.count) return x.count < y.count;
      const uint64_t rx = eng->creation_rank(x.a) + eng->creation_rank(x.b);
      const uint64_t ry = eng->creation_rank(y.a) + eng->creation_rank(y.b);
      if (rx != ry) return rx > ry;
      if (x.a != y.a) return x.a > y.a;
      return x.b > y.b;
    }
  };

  void flush_dirty() {
    for (uint64_t key : dirty_) {
      auto it = table_.find(key);
      if (it == table_.end()) continue;
      it->second.dirty = false;
      if (it->second.count >= 2) {
        heap_.push({it->second.count, static_cast<Symbol>(key >> 32),
                    static_cast<Symbol>(key & 0xffffffffu)});
      } else if (it->second.count == 0) {
        assert(it->second.head == kNull);
        table_.erase(it);
      }
    }
    dirty_.clear();
  }

  void collect_top_level() {
    g_.top_level.clear();
    for (int32_t i = 0; i != kNull; i = nxt_[i]) g_.top_level.push_back(sym_[i]);
  }

  Grammar& g_;
  Symbol rank_base_ = 0;
  std::vector<Symbol> sym_;
  std::vector<int32_t> prv_, nxt_;
  std::vector<int32_t> onext_, oprev_;
  std::vector<std::uint8_t> is_head_;
  std::unordered_map<uint64_t, PairRec> table_;
  std::vector<uint64_t> dirty_;
  std::priority_queue<HeapEntry, std::vector<HeapEntry>, Worse> heap_{Worse{this}};
};

}  // namespace

Grammar compress(const std::vector<Symbol>& seq, Symbol n_terminals) {
  if (seq.empty()) fail(ErrorCode::EmptySequence, "compress needs a nonempty sequence");
  if (n_terminals == 0) fail(ErrorCode::SymbolOutOfRange, "alphabet must be nonempty");
  if (seq.size() > static_cast<std::size_t>(std::numeric_limits<int32_t>::max()) - 2) {
    fail(ErrorCode::InvalidParameter, "sequence too long for this build");
  }
  for (Symbol s : seq) {
    if (s < 1 || s > n_terminals) {
      fail(ErrorCode::SymbolOutOfRange,
           "sequence symbol " + std::to_string(s) + " outside [1, " +
               std::to_string(n_terminals) + "]");
    }
  }
  Grammar g;
  g.n_terminals = n_terminals;
  Engine engine(seq, g);
  engine.run();
  return g;
}

Grammar complete(Grammar g) {
  if (g.completed()) fail(ErrorCode::AlreadyCompleted, "grammar already has a start symbol");
  if (g.top_level.empty()) fail(ErrorCode::EmptySequence, "grammar has no top-level sequence");

  const std::size_t t = g.top_level.size();
  if (t == 1) {
    g.start = g.top_level[0];
    g.top_level.clear();
    return g;
  }

  // Doubly linked slots over the top-level sequence; a merge keeps the left
  // slot. `origin` (original index of a slot's leftmost leaf) is stable and
  // strictly increasing left to right, so it breaks height ties leftmost.
  std::vector<Symbol> slot_sym(g.top_level.begin(), g.top_level.end());
  std::vector<int32_t> nprv(t), nnxt(t);
  for (std::size_t k = 0; k < t; ++k) {
    nprv[k] = static_cast<int32_t>(k) - 1;
    nnxt[k] = (k + 1 < t) ? static_cast<int32_t>(k) + 1 : -1;
  }

  struct Cand {
    uint32_t merged_height;
    uint32_t origin;
    int32_t left, right;
    Symbol left_sym, right_sym;
  };
  struct Worse {
    bool operator()(const Cand& x, const Cand& y) const {
      if (x.merged_height != y.merged_height) return x.merged_height > y.merged_height;
      return x.origin > y.origin;
    }
  };
  std::priority_queue<Cand, std::vector<Cand>, Worse> heap;

  auto push_cand = [&](int32_t l, int32_t r) {
    heap.push({1 + std::max(g.height(slot_sym[l]), g.height(slot_sym[r])),
               static_cast<uint32_t>(l), l, r, slot_sym[l], slot_sym[r]});
  };
  for (std::size_t k = 0; k + 1 < t; ++k) {
    push_cand(static_cast<int32_t>(k), static_cast<int32_t>(k) + 1);
  }

  for (std::size_t merges = t - 1; merges > 0;) {
    assert(!heap.empty());
    const Cand c = heap.top();
    heap.pop();
    if (nnxt[c.left] != c.right || slot_sym[c.left] != c.left_sym ||
        slot_sym[c.right] != c.right_sym) {
      continue;  // stale adjacency
    }
    slot_sym[c.left] = g.add_rule(c.left_sym, c.right_sym);
    slot_sym[c.right] = 0;  // dead slot: no candidate can match symbol 0
    nnxt[c.left] = nnxt[c.right];
    if (nnxt[c.right] != -1) nprv[nnxt[c.right]] = c.left;
    --merges;
    if (nprv[c.left] != -1) push_cand(nprv[c.left], c.left);
    if (nnxt[c.left] != -1) push_cand(c.left, nnxt[c.left]);
  }

  g.start = slot_sym[0];
  g.top_level.clear();
  return g;
}

}  // namespace gcda::repair
