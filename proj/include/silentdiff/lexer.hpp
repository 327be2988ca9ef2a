#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "silentdiff/error.hpp"

namespace silentdiff {

enum class TokenKind {
  Identifier,
  Keyword,
  Punctuation,
  Operator,
  StringLiteral,
  CharLiteral,
  Number,
  DocComment,
  LineComment,
  BlockComment,
  AnnotationMarker,
};

std::string_view to_string(TokenKind kind);

struct Token {
  TokenKind kind;
  std::string text;
  int line;      // 1-based line of the first character
  int end_line;  // 1-based line of the last character
  std::size_t begin;  // byte offsets into the source, [begin, end)
  std::size_t end;

  bool is(TokenKind k, std::string_view t) const noexcept { return kind == k && text == t; }
  bool is_punct(std::string_view t) const noexcept { return kind == TokenKind::Punctuation && text == t; }
  bool is_keyword(std::string_view t) const noexcept { return kind == TokenKind::Keyword && text == t; }
  bool is_comment() const noexcept {
    return kind == TokenKind::DocComment || kind == TokenKind::LineComment ||
           kind == TokenKind::BlockComment;
  }
};

/// Java lexer. String, char and text-block literals are opaque single tokens;
/// every comment is a single token. Throws ParseError on unterminated
/// literals or comments.
std::vector<Token> tokenize_source(std::string_view text);

/// Drops line and block comments; doc comments are kept when keep_doc is set.
std::vector<Token> strip_comments(const std::vector<Token>& tokens, bool keep_doc = false);

bool is_java_keyword(std::string_view word) noexcept;

}  // namespace silentdiff
