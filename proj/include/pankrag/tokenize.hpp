#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace pankrag {

/// One token of the deterministic chunking tokenizer: a maximal run of word
/// characters, or a single punctuation character. Offsets are byte positions
/// into the tokenized text.
struct Token {
  std::size_t begin = 0;
  std::size_t end = 0;

  std::string_view view(std::string_view text) const {
    return text.substr(begin, end - begin);
  }
};

/// Splits on whitespace; every punctuation character becomes its own token.
/// Bytes >= 0x80 count as word characters so UTF-8 words stay intact.
std::vector<Token> tokenize(std::string_view text);

std::size_t count_tokens(std::string_view text);

/// Lowercased token strings, punctuation-only tokens dropped. This is the
/// view of a text the mock embedding and mock extraction rules operate on.
std::vector<std::string> word_tokens_folded(std::string_view text);

std::string case_fold(std::string_view s);

bool is_word_char(unsigned char c);

}  // namespace pankrag
