#include <map>
#include <stdexcept>
#include <unordered_set>

#include "silentdiff/semdiff.hpp"

namespace silentdiff {
namespace {

bool same(const Token& a, const Token& b) { return a.text == b.text; }

bool is_ident(const std::vector<Token>& t, std::size_t i) {
  return i < t.size() && t[i].kind == TokenKind::Identifier;
}

// `Name .` immediately before another identifier.
bool qualifier_at(const std::vector<Token>& t, std::size_t i) {
  return is_ident(t, i) && i + 1 < t.size() && t[i + 1].is_punct(".") && is_ident(t, i + 2);
}

bool is_structural(const Token& t) {
  return t.is_punct(";") || t.is_punct("{") || t.is_punct("}");
}

std::string canonical_newlines(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '\r') {
      out += '\n';
      if (i + 1 < s.size() && s[i + 1] == '\n') ++i;
    } else {
      out += s[i];
    }
  }
  return out;
}

// Beyond this edit distance the diff trace would grow quadratically; such
// bodies are rewritten wholesale and the coarse fallback is used instead.
constexpr long kMaxEditDistance = 2000;

}  // namespace

bool is_qualifier_only_edit(const std::vector<Token>& a, const std::vector<Token>& b) {
  const std::size_t n = a.size();
  const std::size_t m = b.size();
  std::unordered_set<std::size_t> seen;
  std::vector<std::pair<std::size_t, std::size_t>> stack{{0, 0}};
  while (!stack.empty()) {
    auto [i, j] = stack.back();
    stack.pop_back();
    if (!seen.insert(i * (m + 1) + j).second) continue;
    if (i == n && j == m) return true;
    // Pushed in reverse preference: matching is tried first.
    if (qualifier_at(b, j)) stack.emplace_back(i, j + 2);
    if (qualifier_at(a, i)) stack.emplace_back(i + 2, j);
    if (i < n && j < m && same(a[i], b[j])) stack.emplace_back(i + 1, j + 1);
  }
  return false;
}

bool is_consistent_rename(const std::vector<Token>& a, const std::vector<Token>& b,
                          std::size_t max_renames) {
  if (a.size() != b.size()) return false;
  std::map<std::string, std::string> forward;
  std::map<std::string, std::string> backward;
  std::size_t renamed = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const bool equal = same(a[i], b[i]);
    const bool idents = a[i].kind == TokenKind::Identifier && b[i].kind == TokenKind::Identifier;
    if (!idents) {
      if (!equal) return false;
      continue;
    }
    auto [f, f_new] = forward.try_emplace(a[i].text, b[i].text);
    if (!f_new && f->second != b[i].text) return false;
    auto [r, r_new] = backward.try_emplace(b[i].text, a[i].text);
    if (!r_new && r->second != a[i].text) return false;
    if (f_new && !equal) ++renamed;
  }
  return renamed >= 1 && renamed <= max_renames;
}

bool edits_structural_tokens(const std::vector<Token>& a, const std::vector<Token>& b) {
  std::size_t lo = 0;
  while (lo < a.size() && lo < b.size() && same(a[lo], b[lo])) ++lo;
  std::size_t hi_a = a.size();
  std::size_t hi_b = b.size();
  while (hi_a > lo && hi_b > lo && same(a[hi_a - 1], b[hi_b - 1])) --hi_a, --hi_b;

  const long n = static_cast<long>(hi_a - lo);
  const long m = static_cast<long>(hi_b - lo);
  auto A = [&](long x) -> const Token& { return a[lo + static_cast<std::size_t>(x)]; };
  auto B = [&](long y) -> const Token& { return b[lo + static_cast<std::size_t>(y)]; };

  // Myers' greedy shortest edit script with a per-step trace for backtracking.
  const long max_d = std::min(n + m, kMaxEditDistance);
  const long offset = max_d + 1;
  std::vector<long> v(static_cast<std::size_t>(2 * max_d + 3), 0);
  std::vector<std::vector<long>> trace;
  long final_d = -1;
  for (long d = 0; d <= max_d && final_d < 0; ++d) {
    trace.emplace_back(v.begin() + (offset - d - 1), v.begin() + (offset + d + 2));
    for (long k = -d; k <= d; k += 2) {
      long x = (k == -d || (k != d && v[offset + k - 1] < v[offset + k + 1]))
                   ? v[offset + k + 1]
                   : v[offset + k - 1] + 1;
      long y = x - k;
      while (x < n && y < m && same(A(x), B(y))) ++x, ++y;
      v[offset + k] = x;
      if (x >= n && y >= m) {
        final_d = d;
        break;
      }
    }
  }

  if (final_d < 0) {
    for (long x = 0; x < n; ++x) if (is_structural(A(x))) return true;
    for (long y = 0; y < m; ++y) if (is_structural(B(y))) return true;
    return false;
  }

  long x = n;
  long y = m;
  for (long d = final_d; d > 0; --d) {
    const auto& prev = trace[static_cast<std::size_t>(d)];
    auto pv = [&](long k) { return prev[static_cast<std::size_t>(k + d + 1)]; };
    long k = x - y;
    bool down = (k == -d || (k != d && pv(k - 1) < pv(k + 1)));
    long prev_k = down ? k + 1 : k - 1;
    long prev_x = pv(prev_k);
    long prev_y = prev_x - prev_k;
    while (x > prev_x && y > prev_y) --x, --y;
    if (down) {
      if (is_structural(B(prev_y))) return true;  // inserted
    } else {
      if (is_structural(A(prev_x))) return true;  // deleted
    }
    x = prev_x;
    y = prev_y;
  }
  return false;
}

ChangeClass classify_change(const std::optional<std::string>& old_raw,
                            const std::optional<std::string>& new_raw) {
  if (!old_raw && !new_raw) throw std::invalid_argument("classify_change: both bodies absent");
  if (!old_raw || !new_raw) return ChangeClass::Uncertain;

  auto old_tokens = strip_comments(tokenize_source(*old_raw));
  auto new_tokens = strip_comments(tokenize_source(*new_raw));
  bool tokens_equal = old_tokens.size() == new_tokens.size() &&
                      std::equal(old_tokens.begin(), old_tokens.end(), new_tokens.begin(), same);
  if (tokens_equal) {
    if (canonical_newlines(*old_raw) == canonical_newlines(*new_raw)) {
      throw std::invalid_argument("classify_change: bodies are identical");
    }
    return ChangeClass::FormattingOnly;
  }
  if (is_qualifier_only_edit(old_tokens, new_tokens) ||
      is_consistent_rename(old_tokens, new_tokens)) {
    return ChangeClass::LikelyRefactoring;
  }
  if (edits_structural_tokens(old_tokens, new_tokens)) return ChangeClass::SemanticCandidate;
  return ChangeClass::Uncertain;
}

}  // namespace silentdiff
