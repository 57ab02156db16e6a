#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gcda/listing.hpp"

namespace gcda {

/// On-disk index layout, version 1:
///   magic "GCDA" | u32 version | u64 section count | section table | payloads | u32 CRC-32
/// The table lists (id, absolute offset, length) per section. All integers
/// are little-endian, 64-bit unless stated. The CRC covers every preceding
/// byte. Fixed-width fields favor simplicity; the in-memory structures carry
/// the space story.
inline constexpr std::uint32_t kIndexFormatVersion = 1;

std::uint32_t crc32(const std::uint8_t* data, std::size_t len);

/// Deterministic: equal indexes serialize to identical bytes.
std::vector<std::uint8_t> serialize_index(const Index& idx);

/// Validates magic, version, section table, CRC, and structural invariants
/// (boundary/terminator agreement, SA permutation, grammar tables, list
/// shapes). Throws BadIndexFile on any violation.
Index deserialize_index(const std::vector<std::uint8_t>& bytes);

void save_index(const Index& idx, const std::string& path);
Index load_index(const std::string& path);

}  // namespace gcda
