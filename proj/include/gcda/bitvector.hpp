#pragma once

#include <cstdint>
#include <vector>

namespace gcda {

/// Immutable bitvector with rank/select support. Rank uses one cumulative
/// counter per 8-word (512-bit) superblock plus in-block popcounts; select
/// keeps a sampled hint per 512th one-bit and scans from there. Far from the
/// theoretical o(n) structures the literature cites, but the contract here is
/// correctness at desk scale, and every operation is O(1)-ish in practice.
class BitVector {
 public:
  BitVector() = default;

  /// All bits start cleared.
  explicit BitVector(std::uint64_t nbits);

  void set(std::uint64_t i);
  bool get(std::uint64_t i) const {
    return (words_[i >> 6] >> (i & 63)) & 1u;
  }

  /// Call once after the last set(); builds the rank/select directories.
  void finalize();

  std::uint64_t size() const { return nbits_; }
  std::uint64_t ones() const { return total_ones_; }

  /// Number of set bits in [0, i). rank1(size()) == ones().
  std::uint64_t rank1(std::uint64_t i) const;

  /// 0-based position of the k-th set bit (k is 1-based); k in [1, ones()].
  std::uint64_t select1(std::uint64_t k) const;

  const std::vector<std::uint64_t>& words() const { return words_; }

  /// Payload plus rank/select directories, in bytes.
  std::uint64_t size_bytes() const {
    return (words_.size() + block_rank_.size() + select_hint_.size()) * sizeof(std::uint64_t);
  }

  /// Rebuild from raw words (deserialization).
  static BitVector from_words(std::vector<std::uint64_t> words, std::uint64_t nbits);

 private:
  static constexpr std::uint64_t kWordsPerBlock = 8;  // 512-bit superblocks
  static constexpr std::uint64_t kSelectSample = 512;

  std::uint64_t nbits_ = 0;
  std::uint64_t total_ones_ = 0;
  std::vector<std::uint64_t> words_;
  std::vector<std::uint64_t> block_rank_;   // ones before each superblock
  std::vector<std::uint64_t> select_hint_;  // superblock of every kSelectSample-th one
};

}  // namespace gcda
