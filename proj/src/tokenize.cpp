#include "pankrag/tokenize.hpp"

#include <cctype>

namespace pankrag {

bool is_word_char(unsigned char c) {
  if (c >= 0x80) return true;  // UTF-8 continuation / lead bytes
  return std::isalnum(c) != 0 || c == '_' || c == '\'';
}

static bool is_space_char(unsigned char c) {
  return c < 0x80 && std::isspace(c) != 0;
}

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  const std::size_t n = text.size();
  while (i < n) {
    const unsigned char c = static_cast<unsigned char>(text[i]);
    if (is_space_char(c)) {
      ++i;
      continue;
    }
    if (is_word_char(c)) {
      std::size_t j = i + 1;
      while (j < n && is_word_char(static_cast<unsigned char>(text[j]))) ++j;
      tokens.push_back({i, j});
      i = j;
    } else {
      tokens.push_back({i, i + 1});
      ++i;
    }
  }
  return tokens;
}

std::size_t count_tokens(std::string_view text) { return tokenize(text).size(); }

std::string case_fold(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (unsigned char c : s) {
    out.push_back(c < 0x80 ? static_cast<char>(std::tolower(c)) : static_cast<char>(c));
  }
  return out;
}

std::vector<std::string> word_tokens_folded(std::string_view text) {
  std::vector<std::string> out;
  for (const Token& t : tokenize(text)) {
    const std::string_view v = t.view(text);
    if (v.size() == 1 && !is_word_char(static_cast<unsigned char>(v[0]))) continue;
    out.push_back(case_fold(v));
  }
  return out;
}

}  // namespace pankrag
