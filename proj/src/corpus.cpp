#include "gcda/corpus.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace gcda {

namespace {

void append_document(DocumentCollection& coll, const char* data, std::size_t len,
                     std::size_t doc_index) {
  if (len == 0) {
    fail(ErrorCode::EmptyDocument, "document " + std::to_string(doc_index + 1) + " is empty");
  }
  for (std::size_t i = 0; i < len; ++i) {
    if (static_cast<std::uint8_t>(data[i]) == kTerminator) {
      fail(ErrorCode::TerminatorInDocument,
           "document " + std::to_string(doc_index + 1) + " contains the terminator byte at offset " +
               std::to_string(i));
    }
  }
  coll.text.insert(coll.text.end(), data, data + len);
  coll.text.push_back(kTerminator);
  coll.boundaries.push_back(static_cast<std::uint32_t>(coll.text.size()));
}

}  // namespace

DocumentCollection load_documents(const std::vector<std::string>& docs) {
  if (docs.empty()) fail(ErrorCode::EmptyCollection, "no documents given");
  DocumentCollection coll;
  for (std::size_t k = 0; k < docs.size(); ++k) {
    append_document(coll, docs[k].data(), docs[k].size(), k);
  }
  return coll;
}

DocumentCollection load_concat(const std::string& bytes, std::uint8_t separator) {
  DocumentCollection coll;
  std::size_t start = 0;
  std::size_t doc_index = 0;
  while (start < bytes.size()) {
    std::size_t end = bytes.find(static_cast<char>(separator), start);
    if (end == std::string::npos) end = bytes.size();
    append_document(coll, bytes.data() + start, end - start, doc_index++);
    start = end + 1;
  }
  // A trailing separator simply closes the last document; "a\n\nb" has an
  // empty middle document and is rejected inside append_document.
  if (coll.boundaries.empty()) fail(ErrorCode::EmptyCollection, "input holds no documents");
  return coll;
}

DocumentCollection load_directory(const std::string& dir) {
  namespace fs = std::filesystem;
  std::vector<fs::path> files;
  std::error_code ec;
  for (const auto& entry : fs::directory_iterator(dir, ec)) {
    if (entry.is_regular_file()) files.push_back(entry.path());
  }
  if (ec) fail(ErrorCode::IoError, "cannot read directory " + dir + ": " + ec.message());
  std::sort(files.begin(), files.end());
  if (files.empty()) fail(ErrorCode::EmptyCollection, "directory " + dir + " holds no files");

  DocumentCollection coll;
  for (std::size_t k = 0; k < files.size(); ++k) {
    std::ifstream in(files[k], std::ios::binary);
    if (!in) fail(ErrorCode::IoError, "cannot open " + files[k].string());
    std::ostringstream buf;
    buf << in.rdbuf();
    const std::string data = buf.str();
    append_document(coll, data.data(), data.size(), k);
  }
  return coll;
}

std::uint32_t doc_of(const DocumentCollection& coll, std::uint32_t pos) {
  if (pos < 1 || pos > coll.n()) {
    fail(ErrorCode::PositionOutOfRange,
         "position " + std::to_string(pos) + " outside [1, " + std::to_string(coll.n()) + "]");
  }
  // First boundary >= pos owns the position.
  auto it = std::lower_bound(coll.boundaries.begin(), coll.boundaries.end(), pos);
  return static_cast<std::uint32_t>(it - coll.boundaries.begin()) + 1;
}

std::vector<std::string> split(const DocumentCollection& coll) {
  std::vector<std::string> docs;
  docs.reserve(coll.d());
  std::uint32_t start = 0;  // 0-based offset into text
  for (std::uint32_t b : coll.boundaries) {
    docs.emplace_back(reinterpret_cast<const char*>(coll.text.data()) + start, b - 1 - start);
    start = b;
  }
  return docs;
}

}  // namespace gcda
