#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gcda/errors.hpp"

namespace gcda {

// Terminator appended after every document inside the concatenated text.
// Documents must not contain this byte.
inline constexpr std::uint8_t kTerminator = 0;

/// A document collection flattened into one text T = D1 $ D2 $ ... Dd $.
/// Positions are 1-based throughout the public API; `boundaries[k]` is the
/// 1-based position of the terminator that ends document k+1, so boundaries
/// is strictly increasing and ends at n.
struct DocumentCollection {
  std::vector<std::uint8_t> text;
  std::vector<std::uint32_t> boundaries;

  std::uint32_t n() const { return static_cast<std::uint32_t>(text.size()); }
  std::uint32_t d() const { return static_cast<std::uint32_t>(boundaries.size()); }

  /// 0-based offset in `text` of the first byte of document `doc` (1-based).
  std::uint32_t doc_begin(std::uint32_t doc) const {
    return doc == 1 ? 0 : boundaries[doc - 2];
  }

  /// Length of document `doc` (1-based), terminator excluded.
  std::uint32_t doc_length(std::uint32_t doc) const {
    return boundaries[doc - 1] - doc_begin(doc) - 1;
  }
};

/// Build a collection from in-memory documents (kept in input order).
/// Throws EmptyCollection, EmptyDocument, TerminatorInDocument.
DocumentCollection load_documents(const std::vector<std::string>& docs);

/// Parse a single buffer holding documents joined by `separator`.
/// A trailing separator is allowed (it closes the final document); an empty
/// segment anywhere else is an EmptyDocument error.
DocumentCollection load_concat(const std::string& bytes, std::uint8_t separator);

/// Read every regular file in `dir` (sorted by filename) as one document.
DocumentCollection load_directory(const std::string& dir);

/// Document that owns text position `pos` (both 1-based).
/// Throws PositionOutOfRange.
std::uint32_t doc_of(const DocumentCollection& coll, std::uint32_t pos);

/// Recover the original documents (terminators stripped).
std::vector<std::string> split(const DocumentCollection& coll);

}  // namespace gcda
