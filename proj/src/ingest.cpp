#include "pankrag/ingest.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "pankrag/errors.hpp"
#include "pankrag/tokenize.hpp"

namespace fs = std::filesystem;

namespace pankrag {

namespace {

bool valid_utf8(std::string_view s) {
  std::size_t i = 0;
  while (i < s.size()) {
    const unsigned char c = static_cast<unsigned char>(s[i]);
    std::size_t extra = 0;
    if (c < 0x80) {
      extra = 0;
    } else if ((c & 0xe0) == 0xc0) {
      extra = 1;
    } else if ((c & 0xf0) == 0xe0) {
      extra = 2;
    } else if ((c & 0xf8) == 0xf0) {
      extra = 3;
    } else {
      return false;
    }
    for (std::size_t k = 1; k <= extra; ++k) {
      if (i + k >= s.size()) return false;
      if ((static_cast<unsigned char>(s[i + k]) & 0xc0) != 0x80) return false;
    }
    i += extra + 1;
  }
  return true;
}

bool whitespace_only(std::string_view s) {
  return std::all_of(s.begin(), s.end(), [](unsigned char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
  });
}

std::string path_to_id(const fs::path& rel) {
  return rel.generic_string();
}

std::optional<Document> load_one(const fs::path& root, const fs::path& rel, LoadReport& report) {
  const fs::path full = root / rel;
  std::ifstream in(full, std::ios::binary);
  if (!in) {
    report.errors.push_back({rel.generic_string(), "unreadable file"});
    return std::nullopt;
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  std::string body = buf.str();
  if (!valid_utf8(body)) {
    report.errors.push_back({rel.generic_string(), "not valid UTF-8"});
    return std::nullopt;
  }
  if (body.empty() || whitespace_only(body)) {
    report.errors.push_back({rel.generic_string(), "empty body"});
    return std::nullopt;
  }
  Document doc;
  doc.id = path_to_id(rel);
  doc.title = rel.stem().string();
  doc.body = std::move(body);
  doc.source_path = full.generic_string();
  return doc;
}

}  // namespace

std::vector<Document> load_corpus(const fs::path& root,
                                  const std::optional<fs::path>& manifest,
                                  LoadReport& report) {
  if (!fs::exists(root) || !fs::is_directory(root)) {
    throw Error::input("corpus root does not exist: " + root.string());
  }

  std::vector<fs::path> rel_paths;
  if (manifest) {
    std::ifstream in(*manifest);
    if (!in) throw Error::input("cannot read manifest: " + manifest->string());
    std::string line;
    while (std::getline(in, line)) {
      while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
      if (line.empty() || line[0] == '#') continue;
      rel_paths.emplace_back(line);
    }
  } else {
    for (const auto& entry : fs::recursive_directory_iterator(root)) {
      if (!entry.is_regular_file()) continue;
      const auto ext = entry.path().extension().string();
      if (ext != ".txt" && ext != ".md") continue;
      rel_paths.push_back(fs::relative(entry.path(), root));
    }
  }
  std::sort(rel_paths.begin(), rel_paths.end(),
            [](const fs::path& a, const fs::path& b) { return a.generic_string() < b.generic_string(); });

  std::vector<Document> docs;
  for (const auto& rel : rel_paths) {
    if (manifest && !fs::exists(root / rel)) {
      report.errors.push_back({rel.generic_string(), "listed in manifest but missing"});
      continue;
    }
    if (auto doc = load_one(root, rel, report)) docs.push_back(std::move(*doc));
  }
  if (docs.empty()) {
    report.warnings.push_back({root.generic_string(), "no documents found"});
  }
  return docs;
}

std::vector<Chunk> segment(const Document& doc, int max_tokens, int overlap_tokens) {
  if (max_tokens < kMinChunkTokens) {
    throw Error::config("max_tokens below floor of " + std::to_string(kMinChunkTokens));
  }
  if (overlap_tokens < 0 || overlap_tokens >= max_tokens) {
    throw Error::config("overlap_tokens must satisfy 0 <= overlap < max_tokens");
  }

  const std::string& body = doc.body;
  const std::vector<Token> tokens = tokenize(body);
  if (tokens.empty()) {
    throw Error::input("document has empty body after normalization: " + doc.id);
  }

  const std::size_t n = tokens.size();
  const std::size_t max = static_cast<std::size_t>(max_tokens);
  const std::size_t overlap = static_cast<std::size_t>(overlap_tokens);

  std::vector<Chunk> chunks;
  std::size_t start = 0;
  int ordinal = 0;
  while (true) {
    const std::size_t end = std::min(start + max, n);
    // Chunk text spans from this window's first token (byte 0 for the first
    // chunk, to keep leading whitespace) up to the next window's first token
    // start, or end of body for the final chunk.
    const std::size_t byte_begin = ordinal == 0 ? 0 : tokens[start].begin;
    const std::size_t byte_end = end == n ? body.size() : tokens[end].begin;

    Chunk chunk;
    chunk.doc_id = doc.id;
    chunk.ordinal = ordinal;
    chunk.id = doc.id + "#" + std::to_string(ordinal);
    chunk.text = body.substr(byte_begin, byte_end - byte_begin);
    chunk.token_count = static_cast<int>(end - start);
    chunks.push_back(std::move(chunk));

    if (end == n) break;
    start = end - overlap;
    ++ordinal;
  }
  return chunks;
}

}  // namespace pankrag
