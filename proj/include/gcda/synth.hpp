#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "gcda/corpus.hpp"

namespace gcda::synth {

/// All synthetic data flows from one documented generator so collections
/// are reproducible from the manifest alone.
using Rng = std::mt19937_64;
inline constexpr const char* kRngName = "mt19937_64";

/// Alphabet is 'a' .. 'a'+sigma-1; sigma in [2, 25] keeps symbols printable
/// and leaves room for a separator byte outside the alphabet.
inline constexpr std::uint32_t kMinSigma = 2;
inline constexpr std::uint32_t kMaxSigma = 25;
inline constexpr char kAlphabetFirst = 'a';

enum class Mode { Concat, Version };

struct SynthSpec {
  Mode mode = Mode::Version;
  std::uint32_t base_count = 10;
  std::uint32_t base_len = 1000;
  std::uint32_t variants_per_base = 10;
  double mutation_rate = 0.01;
  std::uint32_t sigma = 4;
  std::uint64_t rng_seed = 1;
  // Optional style source: bases become consecutive base_len slices of this
  // text instead of uniform random strings.
  std::vector<std::uint8_t> seed_text;
};

/// Uniform draw in [0, n) by multiply-shift on the full 64-bit output.
std::uint64_t below(Rng& rng, std::uint64_t n);

/// Uniform draw in [0, 1) with 53 random bits.
double unit(Rng& rng);

/// Independently replace each position, with probability `rate`, by a
/// uniformly random alphabet symbol different from the original.
std::string mutate(std::string_view doc, double rate, Rng& rng, std::uint32_t sigma = 4);

DocumentCollection generate(const SynthSpec& spec);

/// Substrings of random documents, lengths uniform in [min_len, max_len]
/// (clamped per document); every pattern occurs in the collection.
std::vector<std::string> sample_patterns(const DocumentCollection& coll, std::uint32_t count,
                                         std::uint32_t min_len, std::uint32_t max_len, Rng& rng);

/// Line-oriented key=value description; enough to regenerate the collection.
std::string manifest_text(const SynthSpec& spec, std::uint8_t separator);

}  // namespace gcda::synth
