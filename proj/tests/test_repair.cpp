#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "gcda/repair.hpp"
#include "helpers.hpp"

using namespace gcda;
using testutil::naive_pair_counts;
using testutil::naive_repair;

namespace {

void check_same_grammar(const Grammar& got, const Grammar& want) {
  REQUIRE(got.n_terminals == want.n_terminals);
  REQUIRE(got.rules.size() == want.rules.size());
  for (std::size_t k = 0; k < got.rules.size(); ++k) {
    CHECK(got.rules[k] == want.rules[k]);
  }
  CHECK(got.top_level == want.top_level);
}

}  // namespace

TEST_CASE("compress worked examples") {
  {
    // One repeating pair; (A,A) then occurs once non-overlapping.
    const auto g = repair::compress({2, 1, 2, 1, 2, 1}, 2);
    REQUIRE(g.rules.size() == 1);
    CHECK(g.rules[0] == std::array<Symbol, 2>{2, 1});
    CHECK(g.top_level == std::vector<Symbol>{3, 3, 3});
    CHECK(decompress(g) == std::vector<Symbol>{2, 1, 2, 1, 2, 1});
  }
  {
    const auto g = repair::compress({2, 1, 1, 2, 1, 2, 1}, 2);
    REQUIRE(g.rules.size() == 1);
    CHECK(g.rules[0] == std::array<Symbol, 2>{2, 1});
    CHECK(g.top_level == std::vector<Symbol>{3, 1, 3, 3});
  }
  {
    const auto g = repair::compress({5}, 5);
    CHECK(g.rules.empty());
    CHECK(g.top_level == std::vector<Symbol>{5});
  }
  {
    // A run x^5 holds two non-overlapping (x,x): one replacement round.
    const auto g = repair::compress({1, 1, 1, 1, 1}, 1);
    REQUIRE(g.rules.size() == 1);
    CHECK(g.rules[0] == std::array<Symbol, 2>{1, 1});
    CHECK(g.top_level == std::vector<Symbol>{2, 2, 1});
    CHECK(decompress(g) == std::vector<Symbol>{1, 1, 1, 1, 1});
  }
}

TEST_CASE("compress input validation") {
  CHECK_THROWS_WITH_AS(repair::compress({}, 3), doctest::Contains("EmptySequence"), Error);
  CHECK_THROWS_WITH_AS(repair::compress({0}, 3), doctest::Contains("SymbolOutOfRange"), Error);
  CHECK_THROWS_WITH_AS(repair::compress({1, 4}, 3), doctest::Contains("SymbolOutOfRange"), Error);
}

TEST_CASE("compress matches the reference implementation exactly") {
  std::mt19937_64 rng(101);
  int nontrivial = 0;
  for (int it = 0; it < 300; ++it) {
    const Symbol sigma = static_cast<Symbol>(1 + testutil::rnd_below(rng, 6));
    const auto seq = testutil::random_sequence(rng, 140, sigma);
    const auto got = repair::compress(seq, sigma);
    const auto want = naive_repair(seq, sigma);
    CAPTURE(it);
    check_same_grammar(got, want);
    CHECK(decompress(got) == seq);
    if (!got.rules.empty()) ++nontrivial;
  }
  CHECK(nontrivial > 150);  // the cases actually exercise replacements
}

TEST_CASE("compress matches the reference on run-heavy and repetitive inputs") {
  std::mt19937_64 rng(555);
  for (int it = 0; it < 80; ++it) {
    // Bursty runs stress the equal-pair parity handling.
    std::vector<Symbol> seq;
    const Symbol sigma = 3;
    while (seq.size() < 120) {
      const Symbol s = static_cast<Symbol>(1 + testutil::rnd_below(rng, sigma));
      const auto run = 1 + testutil::rnd_below(rng, 7);
      for (std::uint64_t k = 0; k < run; ++k) seq.push_back(s);
    }
    const auto got = repair::compress(seq, sigma);
    check_same_grammar(got, naive_repair(seq, sigma));
    CHECK(decompress(got) == seq);
  }
  for (int it = 0; it < 50; ++it) {
    // w^k with occasional point mutations.
    const auto w = testutil::random_sequence(rng, 20, 4);
    std::vector<Symbol> seq;
    const auto k = 4 + testutil::rnd_below(rng, 6);
    for (std::uint64_t rep = 0; rep < k; ++rep) seq.insert(seq.end(), w.begin(), w.end());
    for (int m = 0; m < 3; ++m)
      seq[testutil::rnd_below(rng, seq.size())] = static_cast<Symbol>(1 + testutil::rnd_below(rng, 4));
    const auto got = repair::compress(seq, 4);
    check_same_grammar(got, naive_repair(seq, 4));
    CHECK(decompress(got) == seq);
  }
}

TEST_CASE("after compress no pair repeats, and repetitive inputs shrink") {
  std::mt19937_64 rng(77);
  for (int it = 0; it < 100; ++it) {
    const auto seq = testutil::random_sequence(rng, 400, 5);
    const auto g = repair::compress(seq, 5);
    for (const auto& [pair, count] : naive_pair_counts(g.top_level)) {
      CHECK(count < 2);
    }
  }
  for (int it = 0; it < 20; ++it) {
    const auto w = testutil::random_sequence(rng, 30, 4);
    std::vector<Symbol> seq;
    for (int rep = 0; rep < 6; ++rep) seq.insert(seq.end(), w.begin(), w.end());
    const auto g = repair::compress(seq, 4);
    CHECK(2 * g.rules.size() + g.top_level.size() < seq.size());
  }
}

TEST_CASE("complete worked examples") {
  {
    Grammar g;
    g.n_terminals = 2;
    const Symbol a = g.add_rule(2, 1);
    g.top_level = {a, 1, a, a};
    const Grammar c = repair::complete(std::move(g));
    REQUIRE(c.rules.size() == 4);
    CHECK(c.rules[1] == std::array<Symbol, 2>{3, 1});  // B -> (A, 1)
    CHECK(c.rules[2] == std::array<Symbol, 2>{3, 3});  // C -> (A, A)
    CHECK(c.rules[3] == std::array<Symbol, 2>{4, 5});  // D -> (B, C)
    CHECK(c.start == 6);
    CHECK(c.exp_len(c.start) == 7);
    CHECK(c.height(c.start) == 3);
    CHECK(c.top_level.empty());
    CHECK(decompress(c) == std::vector<Symbol>{2, 1, 1, 2, 1, 2, 1});
  }
  {
    Grammar g;
    g.n_terminals = 9;
    g.top_level = {4};
    const Grammar c = repair::complete(std::move(g));
    CHECK(c.start == 4);
    CHECK(c.rules.empty());
  }
  {
    Grammar g;
    g.n_terminals = 2;
    g.top_level = {1, 2};
    const Grammar c = repair::complete(std::move(g));
    REQUIRE(c.rules.size() == 1);
    CHECK(c.rules[0] == std::array<Symbol, 2>{1, 2});
    CHECK(c.start == 3);
    CHECK(c.height(c.start) == 1);
  }
}

TEST_CASE("complete rejects completed grammars") {
  Grammar g;
  g.n_terminals = 2;
  g.top_level = {1, 2};
  Grammar c = repair::complete(std::move(g));
  CHECK_THROWS_WITH_AS(repair::complete(std::move(c)), doctest::Contains("AlreadyCompleted"),
                       Error);
}

TEST_CASE("complete preserves content and keeps recurrences") {
  std::mt19937_64 rng(31);
  for (int it = 0; it < 120; ++it) {
    const Symbol sigma = static_cast<Symbol>(1 + testutil::rnd_below(rng, 8));
    const auto seq = testutil::random_sequence(rng, 600, sigma);
    Grammar g = repair::compress(seq, sigma);
    const Grammar c = repair::complete(std::move(g));
    REQUIRE(c.completed());
    CHECK(decompress(c) == seq);
    CHECK(c.exp_len(c.start) == seq.size());
    for (Symbol v = c.n_terminals + 1; v <= c.num_symbols(); ++v) {
      const auto& [l, r] = c.rhs(v);
      CHECK(c.exp_len(v) == c.exp_len(l) + c.exp_len(r));
      CHECK(c.height(v) == 1 + std::max(c.height(l), c.height(r)));
    }
  }
}

TEST_CASE("complete merges balanced: uniform heights give log-depth") {
  // 256 equal-height symbols must complete into a height-8 tree above them.
  Grammar g;
  g.n_terminals = 2;
  const Symbol a = g.add_rule(1, 2);
  g.top_level.assign(256, a);
  const Grammar c = repair::complete(std::move(g));
  CHECK(c.height(c.start) == 1 + 8);
}

TEST_CASE("round trip at the property-test scale") {
  std::mt19937_64 rng(13);
  for (int it = 0; it < 500; ++it) {
    const Symbol sigma = static_cast<Symbol>(1 + testutil::rnd_below(rng, 50));
    const auto seq = testutil::random_sequence(rng, 5000, sigma);
    const Grammar c = repair::complete(repair::compress(seq, sigma));
    CHECK(decompress(c) == seq);
  }
}
