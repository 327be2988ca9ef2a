#include <algorithm>
#include <charconv>

#include "silentdiff/corpus.hpp"
#include "silentdiff/usage.hpp"

namespace silentdiff {

namespace {

constexpr std::pair<std::string_view, int> kBuiltinCodes[] = {
    {"BASE", 1},
    {"BASE_1_1", 2},
    {"CUPCAKE", 3},
    {"DONUT", 4},
    {"ECLAIR", 5},
    {"ECLAIR_0_1", 6},
    {"ECLAIR_MR1", 7},
    {"FROYO", 8},
    {"GINGERBREAD", 9},
    {"GINGERBREAD_MR1", 10},
    {"HONEYCOMB", 11},
    {"HONEYCOMB_MR1", 12},
    {"HONEYCOMB_MR2", 13},
    {"ICE_CREAM_SANDWICH", 14},
    {"ICE_CREAM_SANDWICH_MR1", 15},
    {"JELLY_BEAN", 16},
    {"JELLY_BEAN_MR1", 17},
    {"JELLY_BEAN_MR2", 18},
    {"KITKAT", 19},
    {"KITKAT_WATCH", 20},
    {"LOLLIPOP", 21},
    {"LOLLIPOP_MR1", 22},
    {"M", 23},
    {"N", 24},
    {"N_MR1", 25},
    {"O", 26},
    {"O_MR1", 27},
    {"P", 28},
    {"Q", 29},
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::optional<int> parse_level(std::string_view text) {
  if (!text.empty() && (text.back() == 'L' || text.back() == 'l')) text.remove_suffix(1);
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || value < 1) return std::nullopt;
  return value;
}

Comparison flip(Comparison c) {
  switch (c) {
    case Comparison::Less: return Comparison::Greater;
    case Comparison::LessEqual: return Comparison::GreaterEqual;
    case Comparison::Greater: return Comparison::Less;
    case Comparison::GreaterEqual: return Comparison::LessEqual;
    default: return c;
  }
}

struct Condition {
  Comparison comparison;
  int level;
};

class GuardWalker {
 public:
  GuardWalker(const std::vector<Token>& t, const VersionCodes& codes) : t_(t), codes_(codes) {
    match_.assign(t_.size(), 0);
    std::vector<std::size_t> stack;
    for (std::size_t i = 0; i < t_.size(); ++i) {
      const auto& tok = t_[i];
      if (tok.kind != TokenKind::Punctuation || tok.text.size() != 1) continue;
      char c = tok.text[0];
      if (c == '(' || c == '[' || c == '{') {
        stack.push_back(i);
      } else if (c == ')' || c == ']' || c == '}') {
        char open = c == ')' ? '(' : c == ']' ? '[' : '{';
        if (stack.empty() || t_[stack.back()].text[0] != open) {
          throw ParseError(tok.line, std::string("unbalanced '") + c + "'");
        }
        match_[stack.back()] = i;
        match_[i] = stack.back();
        stack.pop_back();
      }
    }
    if (!stack.empty()) throw ParseError(t_[stack.back()].line, "unclosed '" + t_[stack.back()].text + "'");
  }

  std::optional<GuardInfo> guard_for(std::size_t call) const {
    struct Candidate {
      std::size_t if_index;
      Branch branch;
      std::size_t begin;
      std::size_t end;
    };
    std::vector<Candidate> enclosing;
    for (std::size_t k = 0; k < t_.size() && k < call; ++k) {
      if (!t_[k].is_keyword("if") || !is(k + 1, "(")) continue;
      std::size_t close = match_[k + 1];
      if (close + 1 >= t_.size()) continue;
      std::size_t then_end = statement_end(close + 1);
      if (call > close && call <= then_end) {
        enclosing.push_back({k, Branch::Then, close + 1, then_end});
        continue;
      }
      if (then_end + 1 < t_.size() && t_[then_end + 1].is_keyword("else")) {
        std::size_t else_begin = then_end + 2;
        std::size_t else_end = statement_end(else_begin);
        if (call >= else_begin && call <= else_end) {
          enclosing.push_back({k, Branch::Else, else_begin, else_end});
        }
      }
    }
    // Innermost first: the latest-starting branch is the most deeply nested.
    std::sort(enclosing.begin(), enclosing.end(),
              [](const Candidate& a, const Candidate& b) { return a.begin > b.begin; });
    for (const auto& c : enclosing) {
      auto cond = sdk_condition(c.if_index + 2, match_[c.if_index + 1]);
      if (!cond) continue;
      GuardInfo g;
      g.comparison = cond->comparison;
      g.level = cond->level;
      g.branch = c.branch;
      g.guard_line = t_[c.if_index].line;
      g.span_begin = c.begin;
      g.span_end = c.end;
      return g;
    }
    return std::nullopt;
  }

 private:
  bool is(std::size_t i, std::string_view punct) const {
    return i < t_.size() && t_[i].is_punct(punct);
  }
  bool is_open(std::size_t i) const { return is(i, "(") || is(i, "[") || is(i, "{"); }
  std::size_t last() const { return t_.empty() ? 0 : t_.size() - 1; }

  // Index of the final token of the statement starting at i.
  std::size_t statement_end(std::size_t i) const {
    if (i >= t_.size()) return last();
    const auto& tok = t_[i];
    if (tok.is_punct("{")) return match_[i];
    if (tok.is_keyword("if") && is(i + 1, "(")) {
      std::size_t then_end = statement_end(match_[i + 1] + 1);
      if (then_end + 1 < t_.size() && t_[then_end + 1].is_keyword("else")) {
        return statement_end(then_end + 2);
      }
      return then_end;
    }
    if ((tok.is_keyword("for") || tok.is_keyword("while") || tok.is_keyword("synchronized")) &&
        is(i + 1, "(")) {
      return statement_end(match_[i + 1] + 1);
    }
    if (tok.is_keyword("switch") && is(i + 1, "(") && is(match_[i + 1] + 1, "{")) {
      return match_[match_[i + 1] + 1];
    }
    if (tok.is_keyword("do")) {
      std::size_t body_end = statement_end(i + 1);
      return simple_end(body_end + 1);
    }
    if (tok.is_keyword("try")) {
      std::size_t j = i + 1;
      if (is(j, "(")) j = match_[j] + 1;
      if (!is(j, "{")) return simple_end(i);
      std::size_t end = match_[j];
      while (end + 1 < t_.size()) {
        const auto& nx = t_[end + 1];
        if (nx.is_keyword("catch") && is(end + 2, "(") && is(match_[end + 2] + 1, "{")) {
          end = match_[match_[end + 2] + 1];
        } else if (nx.is_keyword("finally") && is(end + 2, "{")) {
          end = match_[end + 2];
        } else {
          break;
        }
      }
      return end;
    }
    return simple_end(i);
  }

  std::size_t simple_end(std::size_t i) const {
    while (i < t_.size()) {
      if (t_[i].is_punct(";")) return i;
      if (t_[i].is_punct("}")) return i > 0 ? i - 1 : 0;
      i = is_open(i) ? match_[i] + 1 : i + 1;
    }
    return last();
  }

  static std::optional<Comparison> comparison_at(const Token& t) {
    if (t.kind != TokenKind::Operator) return std::nullopt;
    return parse_comparison(t.text);
  }

  bool operand_boundary(std::size_t i, std::size_t cond_end) const {
    if (i >= cond_end) return true;
    const auto& tok = t_[i];
    return tok.is_punct(")") || tok.is(TokenKind::Operator, "&&") ||
           tok.is(TokenKind::Operator, "||") || tok.is(TokenKind::Operator, "?") ||
           tok.is(TokenKind::Operator, ":") || tok.is_punct(",");
  }

  // Operand starting at i: an integer literal or a dotted name ending in
  // `VERSION_CODES . NAME`.
  std::optional<int> operand_forward(std::size_t i, std::size_t cond_end) const {
    if (i >= cond_end) return std::nullopt;
    if (t_[i].kind == TokenKind::Number) {
      if (!operand_boundary(i + 1, cond_end)) return std::nullopt;
      return parse_level(t_[i].text);
    }
    if (t_[i].kind != TokenKind::Identifier) return std::nullopt;
    std::size_t j = i;
    while (j + 2 < cond_end && t_[j + 1].is_punct(".") && t_[j + 2].kind == TokenKind::Identifier) {
      j += 2;
    }
    if (!operand_boundary(j + 1, cond_end)) return std::nullopt;
    return named_level(j);
  }

  // Operand ending at i (reversed comparisons such as `28 <= SDK_INT`).
  std::optional<int> operand_backward(std::size_t i) const {
    if (t_[i].kind == TokenKind::Number) return parse_level(t_[i].text);
    if (t_[i].kind != TokenKind::Identifier) return std::nullopt;
    return named_level(i);
  }

  std::optional<int> named_level(std::size_t name) const {
    if (name < 2 || !t_[name - 1].is_punct(".") || t_[name - 2].text != "VERSION_CODES") {
      return std::nullopt;
    }
    return codes_.level(t_[name].text);
  }

  std::optional<Condition> sdk_condition(std::size_t begin, std::size_t end) const {
    for (std::size_t s = begin; s < end; ++s) {
      if (t_[s].kind != TokenKind::Identifier || t_[s].text != "SDK_INT") continue;
      if (s + 1 < end) {
        if (auto cmp = comparison_at(t_[s + 1])) {
          if (auto level = operand_forward(s + 2, end)) return Condition{*cmp, *level};
        }
      }
      // Start of the dotted chain holding SDK_INT, e.g. `Build.VERSION.SDK_INT`.
      std::size_t q = s;
      while (q >= begin + 2 && t_[q - 1].is_punct(".") && t_[q - 2].kind == TokenKind::Identifier) {
        q -= 2;
      }
      if (q >= begin + 2) {
        if (auto cmp = comparison_at(t_[q - 1])) {
          if (auto level = operand_backward(q - 2)) return Condition{flip(*cmp), *level};
        }
      }
    }
    return std::nullopt;
  }

  const std::vector<Token>& t_;
  const VersionCodes& codes_;
  std::vector<std::size_t> match_;
};

}  // namespace

VersionCodes VersionCodes::builtin() {
  VersionCodes codes;
  for (auto [name, level] : kBuiltinCodes) codes.table_.emplace(std::string(name), level);
  return codes;
}

VersionCodes VersionCodes::parse_csv(std::string_view text) {
  VersionCodes codes;
  std::size_t start = 0;
  int line_no = 0;
  while (start < text.size()) {
    auto nl = text.find('\n', start);
    auto line = trim(text.substr(start, nl == std::string_view::npos ? text.npos : nl - start));
    start = nl == std::string_view::npos ? text.size() : nl + 1;
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    auto comma = line.find(',');
    if (comma == std::string_view::npos) {
      throw Error("VERSION_CODES table line " + std::to_string(line_no) + ": expected name,level");
    }
    auto name = trim(line.substr(0, comma));
    auto level_text = trim(line.substr(comma + 1));
    if (line_no == 1 && name == "name") continue;
    auto level = parse_level(level_text);
    if (name.empty() || !level) {
      throw Error("VERSION_CODES table line " + std::to_string(line_no) + ": invalid entry");
    }
    codes.table_[std::string(name)] = *level;
  }
  return codes;
}

VersionCodes VersionCodes::load_csv(const std::filesystem::path& path) {
  return parse_csv(read_text_file(path));
}

void VersionCodes::merge(const VersionCodes& other) {
  for (const auto& [name, level] : other.table_) table_[name] = level;
}

std::optional<int> VersionCodes::level(std::string_view name) const {
  auto it = table_.find(name);
  if (it == table_.end()) return std::nullopt;
  return it->second;
}

std::string_view to_string(Comparison c) {
  switch (c) {
    case Comparison::Less: return "<";
    case Comparison::LessEqual: return "<=";
    case Comparison::Greater: return ">";
    case Comparison::GreaterEqual: return ">=";
    case Comparison::Equal: return "==";
    case Comparison::NotEqual: return "!=";
  }
  return "";
}

std::optional<Comparison> parse_comparison(std::string_view text) {
  for (auto c : {Comparison::Less, Comparison::LessEqual, Comparison::Greater,
                 Comparison::GreaterEqual, Comparison::Equal, Comparison::NotEqual}) {
    if (to_string(c) == text) return c;
  }
  return std::nullopt;
}

std::string_view to_string(Branch b) { return b == Branch::Then ? "then" : "else"; }

std::optional<GuardInfo> detect_guard(const std::vector<Token>& tokens, std::size_t call_index,
                                      const VersionCodes& codes) {
  return GuardWalker(tokens, codes).guard_for(call_index);
}

namespace detail {

// Shared with usage.cpp so a file's brackets are matched once.
std::vector<std::optional<GuardInfo>> detect_guards(const std::vector<Token>& tokens,
                                                    const std::vector<std::size_t>& calls,
                                                    const VersionCodes& codes) {
  GuardWalker walker(tokens, codes);
  std::vector<std::optional<GuardInfo>> out;
  out.reserve(calls.size());
  for (auto c : calls) out.push_back(walker.guard_for(c));
  return out;
}

}  // namespace detail

}  // namespace silentdiff
