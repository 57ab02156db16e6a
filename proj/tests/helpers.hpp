#pragma once

// Shared fixtures and independent reference implementations (oracles) used
// across the test binaries. Everything here is deliberately naive: the point
// is that these disagree with the library only when the library is wrong.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "gcda/corpus.hpp"
#include "gcda/grammar.hpp"

namespace testutil {

using gcda::DocumentCollection;
using gcda::Grammar;
using gcda::Symbol;

// Two small worked collections used throughout.
inline DocumentCollection make_ex1() { return gcda::load_documents({"ab", "ab"}); }
inline DocumentCollection make_ex2() { return gcda::load_documents({"aba", "ab"}); }

// --------------------------------------------------------------------------
// Suffix / pattern oracles
// --------------------------------------------------------------------------

/// O(n^2 log n) suffix sort by direct byte comparison (terminator byte 0 is
/// naturally smallest). Returns 1-based positions.
inline std::vector<std::uint32_t> naive_suffix_array(const DocumentCollection& coll) {
  const std::uint32_t n = coll.n();
  std::vector<std::uint32_t> sa(n);
  std::iota(sa.begin(), sa.end(), 1u);
  std::sort(sa.begin(), sa.end(), [&](std::uint32_t a, std::uint32_t b) {
    return std::lexicographical_compare(coll.text.begin() + (a - 1), coll.text.end(),
                                        coll.text.begin() + (b - 1), coll.text.end());
  });
  return sa;
}

/// 1-based text positions where `p` occurs in T (cannot span documents as
/// long as p is terminator-free).
inline std::vector<std::uint32_t> naive_occurrences(const DocumentCollection& coll,
                                                    std::string_view p) {
  std::vector<std::uint32_t> out;
  if (p.empty() || p.size() > coll.text.size()) return out;
  for (std::uint32_t i = 0; i + p.size() <= coll.text.size(); ++i) {
    if (std::equal(p.begin(), p.end(), coll.text.begin() + i,
                   [](char c, std::uint8_t t) { return static_cast<std::uint8_t>(c) == t; }))
      out.push_back(i + 1);
  }
  return out;
}

/// Distinct documents containing `p`, ascending — the listing ground truth.
inline std::vector<std::uint32_t> naive_docs_with(const DocumentCollection& coll,
                                                  std::string_view p) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t pos : naive_occurrences(coll, p)) out.push_back(gcda::doc_of(coll, pos));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// --------------------------------------------------------------------------
// Re-Pair oracle: quadratic, recounts from scratch every round
// --------------------------------------------------------------------------

/// Non-overlapping occurrences counted greedily left to right: a run x^k
/// contributes floor(k/2) occurrences of (x,x); mixed pairs cannot overlap.
inline std::map<std::pair<Symbol, Symbol>, std::uint32_t> naive_pair_counts(
    const std::vector<Symbol>& s) {
  std::map<std::pair<Symbol, Symbol>, std::uint32_t> cnt;
  for (std::size_t i = 0; i + 1 < s.size();) {
    ++cnt[{s[i], s[i + 1]}];
    if (s[i] == s[i + 1] && i + 2 < s.size() && s[i + 2] == s[i])
      i += 2;  // stay on even offsets within the run
    else
      ++i;
  }
  return cnt;
}

/// Reference Re-Pair with the pinned tie rules: highest count, then minimal
/// sum of creation ranks (terminals rank 0, i-th nonterminal rank i), then
/// lexicographically smaller pair.
inline Grammar naive_repair(std::vector<Symbol> s, Symbol n_terminals) {
  Grammar g;
  g.n_terminals = n_terminals;
  auto rank = [&](Symbol v) -> std::uint64_t { return v <= n_terminals ? 0 : v - n_terminals; };
  for (;;) {
    const auto cnt = naive_pair_counts(s);
    bool have = false;
    std::pair<Symbol, Symbol> best{};
    std::uint32_t best_cnt = 0;
    for (const auto& [pair, c] : cnt) {
      if (c < 2) continue;
      if (!have) {
        have = true;
        best = pair;
        best_cnt = c;
        continue;
      }
      const auto bsum = rank(best.first) + rank(best.second);
      const auto psum = rank(pair.first) + rank(pair.second);
      if (c > best_cnt || (c == best_cnt && (psum < bsum || (psum == bsum && pair < best)))) {
        best = pair;
        best_cnt = c;
      }
    }
    if (!have) break;
    const Symbol fresh = g.add_rule(best.first, best.second);
    std::vector<Symbol> next;
    next.reserve(s.size());
    for (std::size_t i = 0; i < s.size();) {
      if (i + 1 < s.size() && s[i] == best.first && s[i + 1] == best.second) {
        next.push_back(fresh);
        i += 2;
      } else {
        next.push_back(s[i]);
        ++i;
      }
    }
    s = std::move(next);
  }
  g.top_level = std::move(s);
  return g;
}

// --------------------------------------------------------------------------
// Random inputs
// --------------------------------------------------------------------------

inline std::uint64_t rnd_below(std::mt19937_64& rng, std::uint64_t n) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(rng()) * n) >> 64);
}

inline std::string random_doc(std::mt19937_64& rng, std::uint32_t max_len, std::uint32_t sigma) {
  const auto len = 1 + rnd_below(rng, max_len);
  std::string doc(len, 'a');
  for (char& c : doc) c = static_cast<char>('a' + rnd_below(rng, sigma));
  return doc;
}

inline DocumentCollection random_collection(std::mt19937_64& rng, std::uint32_t max_docs,
                                            std::uint32_t max_doc_len, std::uint32_t sigma) {
  const auto d = 1 + rnd_below(rng, max_docs);
  std::vector<std::string> docs;
  for (std::uint64_t k = 0; k < d; ++k) docs.push_back(random_doc(rng, max_doc_len, sigma));
  return gcda::load_documents(docs);
}

/// Near-duplicate documents: one random base, per-copy random point edits.
inline DocumentCollection repetitive_collection(std::mt19937_64& rng, std::uint32_t docs,
                                                std::uint32_t base_len, std::uint32_t sigma,
                                                std::uint32_t edits_per_doc) {
  const std::string base = random_doc(rng, base_len, sigma);
  std::vector<std::string> out;
  for (std::uint32_t k = 0; k < docs; ++k) {
    std::string doc = base;
    for (std::uint32_t e = 0; e < edits_per_doc; ++e) {
      doc[rnd_below(rng, doc.size())] = static_cast<char>('a' + rnd_below(rng, sigma));
    }
    out.push_back(std::move(doc));
  }
  return gcda::load_documents(out);
}

inline std::vector<Symbol> random_sequence(std::mt19937_64& rng, std::uint32_t max_len,
                                           Symbol alphabet) {
  const auto len = 1 + rnd_below(rng, max_len);
  std::vector<Symbol> s(len);
  for (auto& v : s) v = static_cast<Symbol>(1 + rnd_below(rng, alphabet));
  return s;
}

/// A pattern that may or may not occur: half the time a slice of the text,
/// half the time fully random symbols.
inline std::string random_pattern(std::mt19937_64& rng, const DocumentCollection& coll,
                                  std::uint32_t max_len, std::uint32_t sigma) {
  const auto len = static_cast<std::uint32_t>(1 + rnd_below(rng, max_len));
  std::string p(len, 'a');
  if (rng() & 1) {
    const std::uint32_t doc = static_cast<std::uint32_t>(1 + rnd_below(rng, coll.d()));
    const std::uint32_t dlen = coll.doc_length(doc);
    if (dlen >= len) {
      const auto start = coll.doc_begin(doc) + rnd_below(rng, dlen - len + 1);
      for (std::uint32_t i = 0; i < len; ++i)
        p[i] = static_cast<char>(coll.text[start + i]);
      return p;
    }
  }
  for (char& c : p) c = static_cast<char>('a' + rnd_below(rng, sigma));
  return p;
}

}  // namespace testutil
