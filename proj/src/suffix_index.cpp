#include "gcda/suffix_index.hpp"

#include <algorithm>
#include <numeric>

namespace gcda {

namespace {

// Prefix-doubling suffix sort, O(n log n): each round stable-sorts by the
// rank k positions ahead (counting sort), then by the current rank.
std::vector<std::uint32_t> sort_suffixes(const std::vector<std::uint8_t>& text) {
  const std::uint32_t n = static_cast<std::uint32_t>(text.size());
  std::vector<std::uint32_t> sa(n), rank(n), tmp(n), cnt;

  // Round 0: single characters.
  cnt.assign(257, 0);
  for (std::uint8_t c : text) ++cnt[c + 1];
  for (std::size_t i = 1; i < cnt.size(); ++i) cnt[i] += cnt[i - 1];
  for (std::uint32_t i = 0; i < n; ++i) sa[cnt[text[i]]++] = i;
  rank[sa[0]] = 0;
  for (std::uint32_t i = 1; i < n; ++i) {
    rank[sa[i]] = rank[sa[i - 1]] + (text[sa[i]] != text[sa[i - 1]] ? 1 : 0);
  }

  for (std::uint32_t k = 1; k < n && rank[sa[n - 1]] + 1 < n; k <<= 1) {
    // Order by second key: suffixes with i + k >= n (empty tail) first,
    // then the rest in the order of the current sa.
    std::uint32_t m = 0;
    for (std::uint32_t i = n - k; i < n; ++i) tmp[m++] = i;
    for (std::uint32_t i = 0; i < n; ++i) {
      if (sa[i] >= k) tmp[m++] = sa[i] - k;
    }
    // Stable counting sort by first key.
    cnt.assign(rank[sa[n - 1]] + 2, 0);
    for (std::uint32_t i = 0; i < n; ++i) ++cnt[rank[i] + 1];
    for (std::size_t i = 1; i < cnt.size(); ++i) cnt[i] += cnt[i - 1];
    for (std::uint32_t i = 0; i < n; ++i) sa[cnt[rank[tmp[i]]]++] = tmp[i];
    // New ranks.
    std::vector<std::uint32_t>& nrank = tmp;  // reuse
    nrank[sa[0]] = 0;
    for (std::uint32_t i = 1; i < n; ++i) {
      const std::uint32_t a = sa[i - 1], b = sa[i];
      const bool same = rank[a] == rank[b] &&
                        ((a + k < n && b + k < n) ? rank[a + k] == rank[b + k]
                                                  : (a + k >= n && b + k >= n));
      nrank[b] = nrank[a] + (same ? 0 : 1);
    }
    std::swap(rank, nrank);
  }
  return sa;
}

}  // namespace

SuffixStructures build_suffix_structures(const DocumentCollection& coll) {
  if (coll.n() == 0) fail(ErrorCode::EmptyCollection, "cannot index an empty collection");
  SuffixStructures s;
  s.sa = sort_suffixes(coll.text);
  for (auto& v : s.sa) ++v;  // expose 1-based text positions
  s.da.resize(s.sa.size());
  for (std::size_t i = 0; i < s.sa.size(); ++i) s.da[i] = doc_of(coll, s.sa[i]);
  return s;
}

std::optional<std::pair<std::uint32_t, std::uint32_t>> pattern_range(
    const SuffixStructures& s, const DocumentCollection& coll, std::string_view pattern) {
  if (pattern.empty()) fail(ErrorCode::EmptyPattern, "pattern must be nonempty");
  for (char c : pattern) {
    if (static_cast<std::uint8_t>(c) == kTerminator) {
      fail(ErrorCode::TerminatorInPattern, "pattern contains the terminator byte");
    }
  }

  const std::uint32_t n = coll.n();
  // -1: suffix < pattern; 0: pattern is a prefix of the suffix; +1: suffix > pattern.
  auto cmp = [&](std::uint32_t pos1) {
    const std::uint32_t off = pos1 - 1;
    for (std::size_t t = 0; t < pattern.size(); ++t) {
      if (off + t >= n) return -1;  // suffix exhausted: proper prefix of pattern
      const std::uint8_t c = coll.text[off + t];
      const std::uint8_t p = static_cast<std::uint8_t>(pattern[t]);
      if (c != p) return c < p ? -1 : 1;
    }
    return 0;
  };

  // First suffix >= pattern.
  std::uint32_t lo = 0, hi = n;
  while (lo < hi) {
    const std::uint32_t mid = lo + (hi - lo) / 2;
    if (cmp(s.sa[mid]) < 0) lo = mid + 1;
    else hi = mid;
  }
  const std::uint32_t first = lo;
  // First suffix strictly greater (mismatch above pattern within |P| chars).
  hi = n;
  while (lo < hi) {
    const std::uint32_t mid = lo + (hi - lo) / 2;
    if (cmp(s.sa[mid]) <= 0) lo = mid + 1;
    else hi = mid;
  }
  if (first == lo) return std::nullopt;
  return std::make_pair(first + 1, lo);  // 1-based inclusive
}

}  // namespace gcda
