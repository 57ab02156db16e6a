#include "gcda/bitvector.hpp"

#include <bit>
#include <cassert>

namespace gcda {

BitVector::BitVector(std::uint64_t nbits) : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

void BitVector::set(std::uint64_t i) {
  assert(i < nbits_);
  words_[i >> 6] |= (std::uint64_t{1} << (i & 63));
}

void BitVector::finalize() {
  const std::uint64_t nblocks = (words_.size() + kWordsPerBlock - 1) / kWordsPerBlock;
  block_rank_.assign(nblocks + 1, 0);
  select_hint_.clear();

  std::uint64_t ones = 0;
  for (std::uint64_t b = 0; b < nblocks; ++b) {
    block_rank_[b] = ones;
    const std::uint64_t end = std::min<std::uint64_t>((b + 1) * kWordsPerBlock, words_.size());
    for (std::uint64_t w = b * kWordsPerBlock; w < end; ++w) {
      const std::uint64_t before = ones;
      ones += std::popcount(words_[w]);
      if (ones == before) continue;
      // select_hint_[j] = superblock holding the (j*kSelectSample + 1)-th one.
      const std::uint64_t jlo = (before + kSelectSample - 1) / kSelectSample;
      const std::uint64_t jhi = (ones - 1) / kSelectSample;
      for (std::uint64_t j = jlo; j <= jhi; ++j) {
        assert(select_hint_.size() == j);
        select_hint_.push_back(b);
      }
    }
  }
  block_rank_[nblocks] = ones;
  total_ones_ = ones;
}

std::uint64_t BitVector::rank1(std::uint64_t i) const {
  assert(i <= nbits_);
  const std::uint64_t word = i >> 6;
  const std::uint64_t block = word / kWordsPerBlock;
  std::uint64_t r = block_rank_[block];
  for (std::uint64_t w = block * kWordsPerBlock; w < word; ++w) r += std::popcount(words_[w]);
  if (i & 63) r += std::popcount(words_[word] & ((std::uint64_t{1} << (i & 63)) - 1));
  return r;
}

std::uint64_t BitVector::select1(std::uint64_t k) const {
  assert(k >= 1 && k <= total_ones_);
  // Narrow to a superblock: start from the sampled hint, then scan forward.
  const std::uint64_t j = (k - 1) / kSelectSample;
  std::uint64_t block = j < select_hint_.size() ? select_hint_[j] : 0;
  while (block + 1 < block_rank_.size() && block_rank_[block + 1] < k) ++block;

  std::uint64_t remaining = k - block_rank_[block];
  const std::uint64_t wend = std::min<std::uint64_t>((block + 1) * kWordsPerBlock, words_.size());
  for (std::uint64_t w = block * kWordsPerBlock; w < wend; ++w) {
    const std::uint64_t pc = std::popcount(words_[w]);
    if (remaining > pc) {
      remaining -= pc;
      continue;
    }
    std::uint64_t word = words_[w];
    while (--remaining > 0) word &= word - 1;  // drop lowest set bits
    return (w << 6) + std::countr_zero(word);
  }
  assert(false && "select1 past end");
  return nbits_;
}

BitVector BitVector::from_words(std::vector<std::uint64_t> words, std::uint64_t nbits) {
  BitVector bv;
  bv.nbits_ = nbits;
  bv.words_ = std::move(words);
  bv.words_.resize((nbits + 63) / 64, 0);
  bv.finalize();
  return bv;
}

}  // namespace gcda
