#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace pankrag {

struct Document {
  std::string id;           // derived from the relative path; unique per corpus
  std::string title;
  std::string body;
  std::string source_path;  // provenance
};

struct Chunk {
  std::string id;       // "{doc_id}#{ordinal}"
  std::string doc_id;
  int ordinal = 0;      // 0-based position within the document
  std::string text;
  int token_count = 0;
};

/// Per-file problems collected while loading; the load itself continues.
struct LoadReport {
  struct Item {
    std::string path;
    std::string message;
  };
  std::vector<Item> errors;
  std::vector<Item> warnings;

  bool clean() const { return errors.empty() && warnings.empty(); }
};

/// Loads every .txt/.md file under root (or exactly the files named by the
/// manifest, one relative path per line). Documents are ordered
/// lexicographically by relative path and ids are the relative paths.
std::vector<Document> load_corpus(const std::filesystem::path& root,
                                  const std::optional<std::filesystem::path>& manifest,
                                  LoadReport& report);

/// Token-window chunking. Every chunk has at most max_tokens tokens and
/// consecutive chunks share exactly overlap_tokens tokens (except possibly
/// the final pair). Chunk texts are byte spans of the body chosen so that
/// concatenating them with the overlaps removed reproduces the body exactly.
std::vector<Chunk> segment(const Document& doc, int max_tokens, int overlap_tokens);

constexpr int kMinChunkTokens = 32;
constexpr int kDefaultChunkTokens = 600;
constexpr int kDefaultChunkOverlap = 100;

}  // namespace pankrag
