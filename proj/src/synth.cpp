#include "gcda/synth.hpp"

#include <algorithm>
#include <cassert>
#include <cstdio>
#include <sstream>

#include "gcda/errors.hpp"

namespace gcda::synth {

std::uint64_t below(Rng& rng, std::uint64_t n) {
  assert(n > 0);
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(rng()) * n) >> 64);
}

double unit(Rng& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

namespace {

void check_sigma(std::uint32_t sigma) {
  if (sigma < kMinSigma || sigma > kMaxSigma)
    fail(ErrorCode::InvalidSpec, "alphabet size must be in [2, 25], got " + std::to_string(sigma));
}

char replacement_for(char original, std::uint32_t sigma, Rng& rng) {
  const auto off = static_cast<std::uint32_t>(original - kAlphabetFirst);
  if (off < sigma) {
    // Shift by a nonzero amount mod sigma: uniform over the other symbols.
    const auto shift = 1 + static_cast<std::uint32_t>(below(rng, sigma - 1));
    return static_cast<char>(kAlphabetFirst + (off + shift) % sigma);
  }
  // Original is outside the alphabet (seed-text bases): anything qualifies.
  return static_cast<char>(kAlphabetFirst + below(rng, sigma));
}

}  // namespace

std::string mutate(std::string_view doc, double rate, Rng& rng, std::uint32_t sigma) {
  // rate == 1 (replace everything) is a meaningful degenerate case; only
  // rates outside (0, 1] are rejected.
  if (!(rate > 0.0) || rate > 1.0)
    fail(ErrorCode::RateOutOfRange, "mutation rate must be in (0, 1]");
  check_sigma(sigma);
  std::string out(doc);
  for (char& c : out) {
    if (unit(rng) < rate) c = replacement_for(c, sigma, rng);
  }
  return out;
}

DocumentCollection generate(const SynthSpec& spec) {
  if (spec.base_count < 1) fail(ErrorCode::InvalidSpec, "base_count must be >= 1");
  if (spec.base_len < 1) fail(ErrorCode::InvalidSpec, "base_len must be >= 1");
  if (spec.variants_per_base < 1) fail(ErrorCode::InvalidSpec, "variants_per_base must be >= 1");
  if (!(spec.mutation_rate > 0.0) || !(spec.mutation_rate < 1.0))
    fail(ErrorCode::InvalidSpec, "mutation_rate must be in (0, 1)");
  check_sigma(spec.sigma);

  // Bases come from their own stream so that the same seed yields the same
  // bases no matter the mutation rate; only the variants differ.
  Rng base_rng(spec.rng_seed);
  Rng mut_rng(spec.rng_seed ^ 0x9e3779b97f4a7c15ull);

  std::vector<std::string> bases(spec.base_count);
  if (spec.seed_text.empty()) {
    for (auto& base : bases) {
      base.resize(spec.base_len);
      for (char& c : base) c = static_cast<char>(kAlphabetFirst + below(base_rng, spec.sigma));
    }
  } else {
    const std::uint64_t need =
        static_cast<std::uint64_t>(spec.base_count) * spec.base_len;
    if (spec.seed_text.size() < need)
      fail(ErrorCode::InvalidSpec, "seed text shorter than base_count * base_len");
    for (std::uint32_t i = 0; i < spec.base_count; ++i) {
      const auto* begin = spec.seed_text.data() + static_cast<std::uint64_t>(i) * spec.base_len;
      if (std::find(begin, begin + spec.base_len, std::uint8_t{kTerminator}) !=
          begin + spec.base_len)
        fail(ErrorCode::InvalidSpec, "seed text contains the terminator byte");
      bases[i].assign(reinterpret_cast<const char*>(begin), spec.base_len);
    }
  }

  // Version and Concat consume the mutation stream identically, so the
  // concatenation of one base's Version documents equals its Concat document.
  std::vector<std::string> docs;
  docs.reserve(spec.mode == Mode::Version
                   ? static_cast<std::size_t>(spec.base_count) * spec.variants_per_base
                   : spec.base_count);
  for (const std::string& base : bases) {
    std::string concat;
    if (spec.mode == Mode::Concat)
      concat.reserve(static_cast<std::size_t>(spec.base_len) * spec.variants_per_base);
    for (std::uint32_t v = 0; v < spec.variants_per_base; ++v) {
      std::string variant = mutate(base, spec.mutation_rate, mut_rng, spec.sigma);
      if (spec.mode == Mode::Version)
        docs.push_back(std::move(variant));
      else
        concat += variant;
    }
    if (spec.mode == Mode::Concat) docs.push_back(std::move(concat));
  }
  return load_documents(docs);
}

std::vector<std::string> sample_patterns(const DocumentCollection& coll, std::uint32_t count,
                                         std::uint32_t min_len, std::uint32_t max_len, Rng& rng) {
  if (min_len < 1) fail(ErrorCode::PatternLengthInfeasible, "min_len must be >= 1");
  if (min_len > max_len) fail(ErrorCode::PatternLengthInfeasible, "min_len exceeds max_len");
  const std::uint32_t d = coll.d();
  std::uint32_t longest = 0;
  for (std::uint32_t doc = 1; doc <= d; ++doc)
    longest = std::max(longest, coll.doc_length(doc));
  if (min_len > longest)
    fail(ErrorCode::PatternLengthInfeasible,
         "no document is long enough for min_len " + std::to_string(min_len));

  std::vector<std::string> out;
  out.reserve(count);
  while (out.size() < count) {
    const auto doc = static_cast<std::uint32_t>(1 + below(rng, d));
    const std::uint32_t doc_len = coll.doc_length(doc);
    if (doc_len < min_len) continue;  // some document qualifies, so this terminates
    const std::uint32_t hi = std::min(max_len, doc_len);
    const auto len = static_cast<std::uint32_t>(min_len + below(rng, hi - min_len + 1));
    const auto start = static_cast<std::uint32_t>(below(rng, doc_len - len + 1));
    const auto* base = reinterpret_cast<const char*>(coll.text.data()) + coll.doc_begin(doc) + start;
    out.emplace_back(base, len);
  }
  return out;
}

std::string manifest_text(const SynthSpec& spec, std::uint8_t separator) {
  std::ostringstream os;
  os << "mode=" << (spec.mode == Mode::Version ? "version" : "concat") << '\n';
  os << "base_count=" << spec.base_count << '\n';
  os << "base_len=" << spec.base_len << '\n';
  os << "variants_per_base=" << spec.variants_per_base << '\n';
  char rate[64];
  std::snprintf(rate, sizeof rate, "%.17g", spec.mutation_rate);
  os << "mutation_rate=" << rate << '\n';
  os << "sigma=" << spec.sigma << '\n';
  os << "rng_seed=" << spec.rng_seed << '\n';
  os << "rng=" << kRngName << '\n';
  os << "separator=" << static_cast<unsigned>(separator) << '\n';
  return os.str();
}

}  // namespace gcda::synth
