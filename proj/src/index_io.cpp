#include "gcda/index_io.hpp"

#include <array>
#include <cassert>
#include <cstring>
#include <fstream>

#include "gcda/errors.hpp"

namespace gcda {

std::uint32_t crc32(const std::uint8_t* data, std::size_t len) {
  static const auto table = [] {
    std::array<std::uint32_t, 256> t{};
    for (std::uint32_t i = 0; i < 256; ++i) {
      std::uint32_t c = i;
      for (int k = 0; k < 8; ++k) c = (c & 1) ? 0xEDB88320u ^ (c >> 1) : c >> 1;
      t[i] = c;
    }
    return t;
  }();
  std::uint32_t crc = 0xFFFFFFFFu;
  for (std::size_t i = 0; i < len; ++i) crc = table[(crc ^ data[i]) & 0xFF] ^ (crc >> 8);
  return crc ^ 0xFFFFFFFFu;
}

namespace {

constexpr char kMagic[4] = {'G', 'C', 'D', 'A'};

enum SectionId : std::uint64_t {
  kSecMeta = 1,
  kSecText = 2,
  kSecSa = 3,
  kSecGrammar = 4,
  kSecLists = 5,
};
constexpr std::uint64_t kSectionCount = 5;

class Writer {
 public:
  void u32(std::uint32_t v) {
    for (int i = 0; i < 4; ++i) buf_.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
  }
  void u64(std::uint64_t v) {
    for (int i = 0; i < 8; ++i) buf_.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
  }
  void bytes(const std::uint8_t* p, std::size_t len) { buf_.insert(buf_.end(), p, p + len); }
  void bitvector(const BitVector& bv) {
    u64(bv.size());
    u64(bv.words().size());
    for (std::uint64_t w : bv.words()) u64(w);
  }
  std::size_t size() const { return buf_.size(); }
  std::vector<std::uint8_t> take() { return std::move(buf_); }

 private:
  std::vector<std::uint8_t> buf_;
};

class Cursor {
 public:
  Cursor(const std::uint8_t* data, std::uint64_t len) : data_(data), len_(len) {}

  std::uint32_t u32() {
    need(4);
    std::uint32_t v = 0;
    for (int i = 0; i < 4; ++i) v |= static_cast<std::uint32_t>(data_[pos_ + i]) << (8 * i);
    pos_ += 4;
    return v;
  }
  std::uint64_t u64() {
    need(8);
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(data_[pos_ + i]) << (8 * i);
    pos_ += 8;
    return v;
  }
  const std::uint8_t* bytes(std::uint64_t len) {
    need(len);
    const std::uint8_t* p = data_ + pos_;
    pos_ += len;
    return p;
  }
  BitVector bitvector() {
    const std::uint64_t nbits = u64();
    const std::uint64_t nwords = u64();
    if (nwords != (nbits + 63) / 64) fail(ErrorCode::BadIndexFile, "bitvector shape mismatch");
    std::vector<std::uint64_t> words(nwords);
    for (auto& w : words) w = u64();
    return BitVector::from_words(std::move(words), nbits);
  }
  std::uint64_t remaining() const { return len_ - pos_; }

 private:
  void need(std::uint64_t k) const {
    if (len_ - pos_ < k) fail(ErrorCode::BadIndexFile, "truncated section");
  }
  const std::uint8_t* data_;
  std::uint64_t len_;
  std::uint64_t pos_ = 0;
};

void write_grammar(Writer& w, const Grammar& g, bool with_exp) {
  w.u64(g.n_terminals);
  w.u64(g.rules.size());
  w.u64(g.start);
  for (const auto& [l, r] : g.rules) {
    w.u64(l);
    w.u64(r);
  }
  if (with_exp) {
    for (Symbol s = g.n_terminals + 1; s <= g.num_symbols(); ++s) w.u64(g.exp_len(s));
  }
}

Grammar read_grammar(Cursor& c, bool with_exp) {
  Grammar g;
  const std::uint64_t n_terminals = c.u64();
  const std::uint64_t n_rules = c.u64();
  const std::uint64_t start = c.u64();
  if (n_terminals == 0 || n_terminals + n_rules > 0xFFFFFFFFull)
    fail(ErrorCode::BadIndexFile, "grammar alphabet out of range");
  g.n_terminals = static_cast<Symbol>(n_terminals);
  g.rules.reserve(n_rules);
  for (std::uint64_t i = 0; i < n_rules; ++i) {
    const std::uint64_t l = c.u64();
    const std::uint64_t r = c.u64();
    g.rules.push_back({static_cast<Symbol>(l), static_cast<Symbol>(r)});
  }
  try {
    g.rebuild_tables();  // validates rhs ranges and topological order
  } catch (const Error&) {
    fail(ErrorCode::BadIndexFile, "grammar rules fail validation");
  }
  if (start > g.num_symbols()) fail(ErrorCode::BadIndexFile, "grammar start out of range");
  g.start = static_cast<Symbol>(start);
  if (with_exp) {
    for (Symbol s = g.n_terminals + 1; s <= g.num_symbols(); ++s) {
      if (c.u64() != g.exp_len(s))
        fail(ErrorCode::BadIndexFile, "stored expansion length disagrees with rules");
    }
  }
  return g;
}

}  // namespace

std::vector<std::uint8_t> serialize_index(const Index& idx) {
  // Payload of every section, in id order.
  std::array<std::vector<std::uint8_t>, kSectionCount> payloads;
  {
    Writer w;
    w.u64(idx.coll.n());
    w.u64(idx.coll.d());
    for (std::uint32_t bpos : idx.coll.boundaries) w.u64(bpos);
    payloads[0] = w.take();
  }
  {
    Writer w;
    w.bytes(idx.coll.text.data(), idx.coll.text.size());
    payloads[1] = w.take();
  }
  {
    Writer w;
    for (std::uint32_t v : idx.sfx.sa) w.u64(v);
    payloads[2] = w.take();
  }
  {
    Writer w;
    write_grammar(w, idx.grammar, /*with_exp=*/true);
    payloads[3] = w.take();
  }
  {
    Writer w;
    w.u64(idx.lists.b);
    w.u64(idx.lists.beta_milli);
    w.bitvector(idx.lists.sampled);
    write_grammar(w, idx.lists.list_grammar, /*with_exp=*/false);
    w.u64(idx.lists.list_store.size());
    for (Symbol s : idx.lists.list_store) w.u64(s);
    w.bitvector(idx.lists.list_starts);
    payloads[4] = w.take();
  }

  Writer out;
  out.bytes(reinterpret_cast<const std::uint8_t*>(kMagic), 4);
  out.u32(kIndexFormatVersion);
  out.u64(kSectionCount);
  std::uint64_t offset = 4 + 4 + 8 + kSectionCount * 24;  // header + count + table
  for (std::uint64_t i = 0; i < kSectionCount; ++i) {
    out.u64(i + 1);
    out.u64(offset);
    out.u64(payloads[i].size());
    offset += payloads[i].size();
  }
  for (const auto& p : payloads) out.bytes(p.data(), p.size());
  auto bytes = out.take();
  const std::uint32_t crc = crc32(bytes.data(), bytes.size());
  for (int i = 0; i < 4; ++i) bytes.push_back(static_cast<std::uint8_t>(crc >> (8 * i)));
  return bytes;
}

Index deserialize_index(const std::vector<std::uint8_t>& bytes) {
  constexpr std::uint64_t kHeaderLen = 4 + 4 + 8 + kSectionCount * 24;
  if (bytes.size() < kHeaderLen + 4) fail(ErrorCode::BadIndexFile, "file too short");
  if (std::memcmp(bytes.data(), kMagic, 4) != 0) fail(ErrorCode::BadIndexFile, "bad magic");

  Cursor header(bytes.data() + 4, bytes.size() - 4);
  const std::uint32_t version = header.u32();
  if (version != kIndexFormatVersion)
    fail(ErrorCode::BadIndexFile, "unsupported format version " + std::to_string(version));

  const std::uint32_t stored_crc =
      static_cast<std::uint32_t>(bytes[bytes.size() - 4]) |
      static_cast<std::uint32_t>(bytes[bytes.size() - 3]) << 8 |
      static_cast<std::uint32_t>(bytes[bytes.size() - 2]) << 16 |
      static_cast<std::uint32_t>(bytes[bytes.size() - 1]) << 24;
  if (crc32(bytes.data(), bytes.size() - 4) != stored_crc)
    fail(ErrorCode::BadIndexFile, "checksum mismatch");

  if (header.u64() != kSectionCount) fail(ErrorCode::BadIndexFile, "unexpected section count");
  std::array<Cursor, kSectionCount> sections{
      Cursor(nullptr, 0), Cursor(nullptr, 0), Cursor(nullptr, 0),
      Cursor(nullptr, 0), Cursor(nullptr, 0)};
  for (std::uint64_t i = 0; i < kSectionCount; ++i) {
    const std::uint64_t id = header.u64();
    const std::uint64_t off = header.u64();
    const std::uint64_t len = header.u64();
    if (id != i + 1) fail(ErrorCode::BadIndexFile, "unexpected section id");
    if (off < kHeaderLen || off + len > bytes.size() - 4 || off + len < off)
      fail(ErrorCode::BadIndexFile, "section out of bounds");
    sections[i] = Cursor(bytes.data() + off, len);
  }

  Index idx;

  {  // META
    Cursor& c = sections[0];
    const std::uint64_t n = c.u64();
    const std::uint64_t d = c.u64();
    if (d == 0 || n < 2 * d || n > 0xFFFFFFFFull)
      fail(ErrorCode::BadIndexFile, "implausible collection dimensions");
    idx.coll.boundaries.resize(d);
    std::uint64_t prev = 0;
    for (auto& bpos : idx.coll.boundaries) {
      const std::uint64_t v = c.u64();
      if (v <= prev || v > n) fail(ErrorCode::BadIndexFile, "boundaries not increasing");
      bpos = static_cast<std::uint32_t>(v);
      prev = v;
    }
    if (prev != n) fail(ErrorCode::BadIndexFile, "boundaries do not end at n");
    if (c.remaining() != 0) fail(ErrorCode::BadIndexFile, "trailing bytes in metadata");

    Cursor& t = sections[1];
    const std::uint8_t* text = t.bytes(n);
    if (t.remaining() != 0) fail(ErrorCode::BadIndexFile, "text length mismatch");
    idx.coll.text.assign(text, text + n);
    std::uint32_t doc = 1;
    for (std::uint64_t i = 0; i < n; ++i) {
      const bool is_term = idx.coll.text[i] == kTerminator;
      const bool should = doc <= d && idx.coll.boundaries[doc - 1] == i + 1;
      if (is_term != should) fail(ErrorCode::BadIndexFile, "terminators disagree with boundaries");
      if (should) ++doc;
    }
  }

  {  // SA (document array is rebuilt from it, not stored)
    Cursor& c = sections[2];
    const std::uint64_t n = idx.coll.n();
    idx.sfx.sa.resize(n);
    std::vector<bool> seen(n + 1, false);
    for (auto& v : idx.sfx.sa) {
      const std::uint64_t x = c.u64();
      if (x < 1 || x > n || seen[x]) fail(ErrorCode::BadIndexFile, "suffix array not a permutation");
      seen[x] = true;
      v = static_cast<std::uint32_t>(x);
    }
    if (c.remaining() != 0) fail(ErrorCode::BadIndexFile, "trailing bytes in suffix array");
    idx.sfx.da.resize(n);
    for (std::uint64_t i = 0; i < n; ++i) idx.sfx.da[i] = doc_of(idx.coll, idx.sfx.sa[i]);
  }

  {  // GRAMMAR
    Cursor& c = sections[3];
    idx.grammar = read_grammar(c, /*with_exp=*/true);
    if (c.remaining() != 0) fail(ErrorCode::BadIndexFile, "trailing bytes in grammar");
    if (idx.grammar.n_terminals != idx.coll.d())
      fail(ErrorCode::BadIndexFile, "grammar alphabet disagrees with document count");
    if (!idx.grammar.completed() || idx.grammar.exp_len(idx.grammar.start) != idx.coll.n())
      fail(ErrorCode::BadIndexFile, "grammar does not expand to the document array");
  }

  {  // LISTS
    Cursor& c = sections[4];
    idx.lists.b = static_cast<std::uint32_t>(c.u64());
    idx.lists.beta_milli = c.u64();
    if (idx.lists.b == 0 || idx.lists.beta_milli == 0)
      fail(ErrorCode::BadIndexFile, "invalid sampling parameters");
    idx.lists.sampled = c.bitvector();
    if (idx.lists.sampled.size() != static_cast<std::uint64_t>(idx.grammar.num_symbols()) + 1)
      fail(ErrorCode::BadIndexFile, "sampled flags do not match the grammar");
    idx.lists.list_grammar = read_grammar(c, /*with_exp=*/false);
    if (idx.lists.list_grammar.n_terminals != idx.coll.d())
      fail(ErrorCode::BadIndexFile, "list grammar alphabet disagrees with document count");
    const std::uint64_t store_len = c.u64();
    idx.lists.list_store.resize(store_len);
    for (auto& s : idx.lists.list_store) {
      const std::uint64_t v = c.u64();
      if (v == 0 || !idx.lists.list_grammar.valid_symbol(static_cast<Symbol>(v)))
        fail(ErrorCode::BadIndexFile, "list store symbol out of range");
      s = static_cast<Symbol>(v);
    }
    idx.lists.list_starts = c.bitvector();
    if (c.remaining() != 0) fail(ErrorCode::BadIndexFile, "trailing bytes in lists");
    if (idx.lists.list_starts.size() != store_len ||
        idx.lists.list_starts.ones() != idx.lists.sampled.ones())
      fail(ErrorCode::BadIndexFile, "list starts disagree with sampled set");
    if (store_len > 0 && idx.lists.list_starts.select1(1) != 0)
      fail(ErrorCode::BadIndexFile, "first list does not start at position 0");
  }

  return idx;
}

void save_index(const Index& idx, const std::string& path) {
  const auto bytes = serialize_index(idx);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) fail(ErrorCode::IoError, "cannot open for writing: " + path);
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) fail(ErrorCode::IoError, "write failed: " + path);
}

Index load_index(const std::string& path) {
  std::ifstream in(path, std::ios::binary | std::ios::ate);
  if (!in) fail(ErrorCode::IoError, "cannot open for reading: " + path);
  const std::streamsize size = in.tellg();
  in.seekg(0);
  std::vector<std::uint8_t> bytes(static_cast<std::size_t>(size));
  if (size > 0) in.read(reinterpret_cast<char*>(bytes.data()), size);
  if (!in) fail(ErrorCode::IoError, "read failed: " + path);
  return deserialize_index(bytes);
}

}  // namespace gcda
