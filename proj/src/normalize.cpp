#include <string>
#include <vector>

#include "silentdiff/extract.hpp"
#include "silentdiff/lexer.hpp"

namespace silentdiff {
namespace {

std::string canonical_newlines(std::string_view raw) {
  std::string out;
  out.reserve(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (raw[i] == '\r') {
      out += '\n';
      if (i + 1 < raw.size() && raw[i + 1] == '\n') ++i;
    } else {
      out += raw[i];
    }
  }
  return out;
}

bool is_hspace(char c) { return c == ' ' || c == '\t' || c == '\f' || c == '\v'; }

std::string clean_line(std::string_view line, bool strip_gutter) {
  std::size_t b = 0;
  while (b < line.size() && is_hspace(line[b])) ++b;
  if (strip_gutter) {
    while (b < line.size() && line[b] == '*') ++b;
  }
  std::string out;
  bool pending_space = false;
  for (std::size_t i = b; i < line.size(); ++i) {
    if (is_hspace(line[i])) {
      pending_space = true;
      continue;
    }
    if (pending_space && !out.empty()) out += ' ';
    pending_space = false;
    out += line[i];
  }
  return out;
}

}  // namespace

std::string normalize_comment(std::string_view raw, bool strict) {
  std::string text = canonical_newlines(raw);
  if (strict) return text;

  std::string_view body = text;
  bool delimited = body.size() >= 5 && body.substr(0, 3) == "/**" &&
                   body.substr(body.size() - 2) == "*/";
  if (delimited) body = body.substr(3, body.size() - 5);

  std::vector<std::string> lines;
  std::size_t start = 0;
  while (true) {
    auto nl = body.find('\n', start);
    auto piece = body.substr(start, nl == std::string_view::npos ? body.npos : nl - start);
    lines.push_back(clean_line(piece, delimited));
    if (nl == std::string_view::npos) break;
    start = nl + 1;
  }
  std::size_t first = 0;
  std::size_t last = lines.size();
  while (first < last && lines[first].empty()) ++first;
  while (last > first && lines[last - 1].empty()) --last;

  std::string out;
  for (std::size_t i = first; i < last; ++i) {
    if (i > first) out += '\n';
    out += lines[i];
  }
  return out;
}

std::string normalize_body(std::string_view raw, bool strict) {
  if (strict) return canonical_newlines(raw);
  std::string out;
  for (const auto& t : tokenize_source(raw)) {
    if (t.is_comment()) continue;
    if (!out.empty()) out += ' ';
    out += t.text;
  }
  return out;
}

}  // namespace silentdiff
