#include "silentdiff/lexer.hpp"

#include <algorithm>
#include <array>

#include "silentdiff/error.hpp"

namespace silentdiff {
namespace {

constexpr std::array<std::string_view, 53> kKeywords = {
    "abstract", "assert",     "boolean",   "break",     "byte",       "case",
    "catch",    "char",       "class",     "const",     "continue",   "default",
    "do",       "double",     "else",      "enum",      "extends",    "final",
    "finally",  "float",      "for",       "goto",      "if",         "implements",
    "import",   "instanceof", "int",       "interface", "long",       "native",
    "new",      "package",    "private",   "protected", "public",     "return",
    "short",    "static",     "strictfp",  "super",     "switch",     "synchronized",
    "this",     "throw",      "throws",    "transient", "try",        "void",
    "volatile", "while",      "true",      "false",     "null",
};

// Longest first so that a linear scan finds the maximal munch.
constexpr std::array<std::string_view, 38> kOperators = {
    ">>>=", "<<=", ">>=", ">>>", "->", "::", "++", "--", "&&", "||", "==", "!=", "<=",
    ">=",   "+=",  "-=",  "*=",  "/=", "&=", "|=", "^=", "%=", "<<", ">>", "+",  "-",
    "*",    "/",   "%",   "&",   "|",  "^",  "!",  "~",  "?",  ":",  "=",  "<",
};

bool is_ident_start(unsigned char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_' || c == '$' || c >= 0x80;
}
bool is_ident_part(unsigned char c) { return is_ident_start(c) || (c >= '0' && c <= '9'); }
bool is_digit(char c) { return c >= '0' && c <= '9'; }

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (c == '\n') {
        ++line_;
        ++pos_;
      } else if (c == ' ' || c == '\t' || c == '\r' || c == '\f') {
        ++pos_;
      } else if (c == '/' && peek(1) == '/') {
        line_comment();
      } else if (c == '/' && peek(1) == '*') {
        block_comment();
      } else if (c == '"') {
        if (peek(1) == '"' && peek(2) == '"') {
          text_block();
        } else {
          quoted('"', TokenKind::StringLiteral, "unterminated string literal");
        }
      } else if (c == '\'') {
        quoted('\'', TokenKind::CharLiteral, "unterminated char literal");
      } else if (is_digit(c) || (c == '.' && is_digit(peek(1)))) {
        number();
      } else if (is_ident_start(static_cast<unsigned char>(c))) {
        identifier();
      } else if (c == '@') {
        emit(TokenKind::AnnotationMarker, pos_, pos_ + 1, line_);
        ++pos_;
      } else if (c == '.' && peek(1) == '.' && peek(2) == '.') {
        emit(TokenKind::Punctuation, pos_, pos_ + 3, line_);
        pos_ += 3;
      } else if (std::string_view("(){}[];,.").find(c) != std::string_view::npos) {
        emit(TokenKind::Punctuation, pos_, pos_ + 1, line_);
        ++pos_;
      } else {
        op();
      }
    }
    return std::move(out_);
  }

 private:
  char peek(std::size_t ahead) const {
    return pos_ + ahead < src_.size() ? src_[pos_ + ahead] : '\0';
  }

  void emit(TokenKind kind, std::size_t begin, std::size_t end, int start_line) {
    out_.push_back(Token{kind, std::string(src_.substr(begin, end - begin)), start_line, line_,
                         begin, end});
  }

  void line_comment() {
    std::size_t begin = pos_;
    while (pos_ < src_.size() && src_[pos_] != '\n') ++pos_;
    std::size_t end = pos_;
    if (end > begin && src_[end - 1] == '\r') --end;
    emit(TokenKind::LineComment, begin, end, line_);
  }

  void block_comment() {
    std::size_t begin = pos_;
    int start_line = line_;
    // `/**/` is an ordinary empty comment, not a doc comment.
    bool doc = peek(2) == '*' && peek(3) != '/';
    pos_ += 2;
    while (true) {
      if (pos_ >= src_.size()) throw ParseError(start_line, "unterminated comment");
      if (src_[pos_] == '*' && peek(1) == '/') break;
      if (src_[pos_] == '\n') ++line_;
      ++pos_;
    }
    pos_ += 2;
    emit(doc ? TokenKind::DocComment : TokenKind::BlockComment, begin, pos_, start_line);
  }

  void quoted(char quote, TokenKind kind, const char* error) {
    std::size_t begin = pos_;
    ++pos_;
    while (true) {
      if (pos_ >= src_.size() || src_[pos_] == '\n') throw ParseError(line_, error);
      char c = src_[pos_];
      if (c == '\\') {
        if (peek(1) == '\n' || pos_ + 1 >= src_.size()) throw ParseError(line_, error);
        pos_ += 2;
        continue;
      }
      ++pos_;
      if (c == quote) break;
    }
    emit(kind, begin, pos_, line_);
  }

  void text_block() {
    std::size_t begin = pos_;
    int start_line = line_;
    pos_ += 3;
    while (true) {
      if (pos_ >= src_.size()) throw ParseError(start_line, "unterminated text block");
      char c = src_[pos_];
      if (c == '\\') {
        if (peek(1) == '\n') ++line_;
        pos_ += 2;
        continue;
      }
      if (c == '"' && peek(1) == '"' && peek(2) == '"') {
        pos_ += 3;
        break;
      }
      if (c == '\n') ++line_;
      ++pos_;
    }
    emit(TokenKind::StringLiteral, begin, pos_, start_line);
  }

  void number() {
    std::size_t begin = pos_;
    bool hex = src_[pos_] == '0' && (peek(1) == 'x' || peek(1) == 'X');
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (is_ident_part(static_cast<unsigned char>(c)) || c == '.') {
        // `1.foo` never occurs in Java, but `a[1].b` does: stop at a dot not
        // followed by a digit or exponent-ish continuation.
        if (c == '.' && !(is_digit(peek(1)) || peek(1) == 'e' || peek(1) == 'E' ||
                          peek(1) == 'f' || peek(1) == 'F' || peek(1) == 'd' ||
                          peek(1) == 'D' || !is_ident_start(static_cast<unsigned char>(peek(1))))) {
          break;
        }
        if (c == '.' && peek(1) == '.') break;
        ++pos_;
        bool exp = hex ? (c == 'p' || c == 'P') : (c == 'e' || c == 'E');
        if (exp && (peek(0) == '+' || peek(0) == '-')) ++pos_;
      } else {
        break;
      }
    }
    emit(TokenKind::Number, begin, pos_, line_);
  }

  void identifier() {
    std::size_t begin = pos_;
    while (pos_ < src_.size() && is_ident_part(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    auto word = src_.substr(begin, pos_ - begin);
    emit(is_java_keyword(word) ? TokenKind::Keyword : TokenKind::Identifier, begin, pos_, line_);
  }

  void op() {
    auto rest = src_.substr(pos_);
    for (auto candidate : kOperators) {
      if (rest.substr(0, candidate.size()) == candidate) {
        emit(TokenKind::Operator, pos_, pos_ + candidate.size(), line_);
        pos_ += candidate.size();
        return;
      }
    }
    // Stray byte (e.g. a `#` or a backslash outside a literal): keep it as an
    // operator token so structure scanning can carry on.
    emit(TokenKind::Operator, pos_, pos_ + 1, line_);
    ++pos_;
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  int line_ = 1;
  std::vector<Token> out_;
};

}  // namespace

std::string_view to_string(TokenKind kind) {
  switch (kind) {
    case TokenKind::Identifier: return "identifier";
    case TokenKind::Keyword: return "keyword";
    case TokenKind::Punctuation: return "punctuation";
    case TokenKind::Operator: return "operator";
    case TokenKind::StringLiteral: return "string-literal";
    case TokenKind::CharLiteral: return "char-literal";
    case TokenKind::Number: return "number";
    case TokenKind::DocComment: return "doc-comment";
    case TokenKind::LineComment: return "line-comment";
    case TokenKind::BlockComment: return "block-comment";
    case TokenKind::AnnotationMarker: return "annotation-marker";
  }
  return "unknown";
}

bool is_java_keyword(std::string_view word) noexcept {
  return std::find(kKeywords.begin(), kKeywords.end(), word) != kKeywords.end();
}

std::vector<Token> tokenize_source(std::string_view text) { return Lexer(text).run(); }

std::vector<Token> strip_comments(const std::vector<Token>& tokens, bool keep_doc) {
  std::vector<Token> out;
  out.reserve(tokens.size());
  for (const auto& t : tokens) {
    if (t.kind == TokenKind::LineComment || t.kind == TokenKind::BlockComment) continue;
    if (t.kind == TokenKind::DocComment && !keep_doc) continue;
    out.push_back(t);
  }
  return out;
}

}  // namespace silentdiff
