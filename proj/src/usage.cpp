#include "silentdiff/usage.hpp"

#include <algorithm>
#include <unordered_map>

#include "silentdiff/corpus.hpp"

namespace silentdiff {

namespace detail {
std::vector<std::optional<GuardInfo>> detect_guards(const std::vector<Token>& tokens,
                                                    const std::vector<std::size_t>& calls,
                                                    const VersionCodes& codes);
}  // namespace detail

std::string_view to_string(MatchConfidence c) {
  return c == MatchConfidence::Qualified ? "qualified" : "name-and-arity";
}

namespace {

bool is_type_keyword(const Token& t) {
  if (t.kind != TokenKind::Keyword) return false;
  static constexpr std::string_view kTypes[] = {"void", "boolean", "byte",  "char",  "short",
                                                "int",  "long",    "float", "double"};
  return std::find(std::begin(kTypes), std::end(kTypes), t.text) != std::end(kTypes);
}

bool is_angle(const Token& t, std::string_view text) {
  return t.kind == TokenKind::Operator && t.text == text;
}

int angle_delta(const Token& t) {
  if (t.kind != TokenKind::Operator) return 0;
  if (t.text == "<") return 1;
  if (t.text == ">") return -1;
  if (t.text == ">>") return -2;
  if (t.text == ">>>") return -3;
  return 0;
}

// Argument count of the list opening at `open`; `close` is its match.
std::size_t count_args(const std::vector<Token>& t, std::size_t open, std::size_t close) {
  if (close == open + 1) return 0;
  std::size_t args = 1;
  int depth = 0;
  for (std::size_t i = open + 1; i < close; ++i) {
    const auto& tok = t[i];
    if (tok.is_punct("(") || tok.is_punct("[") || tok.is_punct("{")) {
      ++depth;
    } else if (tok.is_punct(")") || tok.is_punct("]") || tok.is_punct("}")) {
      --depth;
    } else if (depth == 0 && tok.is_keyword("new")) {
      // `new Map<K, V>(...)`: skip the type arguments so their commas are
      // not taken for argument separators.
      std::size_t j = i + 1;
      while (j + 1 < close && t[j].kind == TokenKind::Identifier && t[j + 1].is_punct(".")) j += 2;
      if (j + 1 < close && t[j].kind == TokenKind::Identifier && is_angle(t[j + 1], "<")) {
        int angle = 0;
        std::size_t k = j + 1;
        for (; k < close; ++k) {
          angle += angle_delta(t[k]);
          if (angle <= 0) break;
        }
        i = k;
      }
    } else if (depth == 0 && tok.is_punct(",")) {
      ++args;
    }
  }
  return args;
}

}  // namespace

std::vector<CallSite> find_call_sites(const std::vector<Token>& t) {
  std::vector<std::size_t> match(t.size(), 0);
  {
    std::vector<std::size_t> stack;
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (t[i].is_punct("(")) {
        stack.push_back(i);
      } else if (t[i].is_punct(")")) {
        if (stack.empty()) throw ParseError(t[i].line, "unbalanced ')'");
        match[stack.back()] = i;
        stack.pop_back();
      }
    }
    if (!stack.empty()) throw ParseError(t[stack.back()].line, "unclosed '('");
  }

  std::vector<CallSite> sites;
  for (std::size_t i = 0; i + 1 < t.size(); ++i) {
    if (t[i].kind != TokenKind::Identifier || !t[i + 1].is_punct("(")) continue;
    const std::size_t close = match[i + 1];
    CallSite site;
    site.name_index = i;
    if (i > 0) {
      const auto& prev = t[i - 1];
      // Declarations: `Type name(`, `Type[] name(`, `void name(`.
      if (prev.kind == TokenKind::Identifier || prev.is_punct("]") || is_type_keyword(prev)) {
        continue;
      }
      if (angle_delta(prev) < 0 && close + 1 < t.size() &&
          (t[close + 1].is_punct("{") || t[close + 1].is_keyword("throws"))) {
        continue;  // generic return type
      }
      if (prev.is_punct(".") && i >= 2 && t[i - 2].kind == TokenKind::Identifier) {
        site.receiver = t[i - 2].text;
      } else if (prev.is_keyword("new")) {
        site.receiver = t[i].text;
      }
    }
    site.arity = count_args(t, i + 1, close);
    sites.push_back(std::move(site));
  }
  return sites;
}

std::vector<UsageFinding> scan_source(std::string_view client, std::string_view file,
                                      std::string_view text,
                                      const std::vector<MethodIdentity>& pasems,
                                      const VersionCodes& codes) {
  std::unordered_map<std::string, std::vector<const MethodIdentity*>> by_name;
  for (const auto& p : pasems) by_name[p.method_name].push_back(&p);

  auto tokens = strip_comments(tokenize_source(text));
  auto sites = find_call_sites(tokens);

  std::vector<UsageFinding> findings;
  std::vector<std::size_t> call_indices;
  for (const auto& site : sites) {
    auto it = by_name.find(tokens[site.name_index].text);
    if (it == by_name.end()) continue;
    for (const MethodIdentity* target : it->second) {
      if (target->arity() != site.arity) continue;
      UsageFinding f;
      f.pasem = *target;
      f.client = std::string(client);
      f.client_file = std::string(file);
      f.call_line = tokens[site.name_index].line;
      f.call_index = site.name_index;
      f.confidence = !site.receiver.empty() && site.receiver == target->simple_class_name()
                         ? MatchConfidence::Qualified
                         : MatchConfidence::NameAndArity;
      findings.push_back(std::move(f));
      call_indices.push_back(site.name_index);
    }
  }
  if (!findings.empty()) {
    auto guards = detail::detect_guards(tokens, call_indices, codes);
    for (std::size_t i = 0; i < findings.size(); ++i) findings[i].guard = guards[i];
  }
  return findings;
}

ScanResult scan_call_sites(const std::filesystem::path& client_root, std::string_view client,
                           const std::vector<MethodIdentity>& pasems, const VersionCodes& codes,
                           std::string_view suffix) {
  ScanResult result;
  auto listing = enumerate_all_sources(client_root, suffix);
  result.diagnostics = listing.diagnostics;
  for (const auto& rel : listing.files) {
    try {
      auto text = read_text_file(client_root / rel);
      auto found = scan_source(client, rel, text, pasems, codes);
      std::move(found.begin(), found.end(), std::back_inserter(result.findings));
    } catch (const ParseError& e) {
      result.diagnostics.push_back({rel, e.what()});
    } catch (const Error& e) {
      result.diagnostics.push_back({rel, e.what()});
    }
  }
  std::stable_sort(result.findings.begin(), result.findings.end(),
                   [](const UsageFinding& a, const UsageFinding& b) {
                     return std::tie(a.client_file, a.call_line, a.call_index, a.pasem) <
                            std::tie(b.client_file, b.call_line, b.call_index, b.pasem);
                   });
  return result;
}

UsageSummary aggregate_usage(const std::vector<UsageFinding>& findings,
                             const std::vector<std::string>& clients, std::size_t pasem_count) {
  UsageSummary summary;
  std::map<std::string, std::size_t> index;
  for (const auto& c : clients) {
    if (index.count(c)) continue;
    index[c] = summary.clients.size();
    summary.clients.push_back(ClientSummary{c});
  }
  std::vector<std::set<MethodIdentity>> used(summary.clients.size());
  std::vector<std::set<MethodIdentity>> guarded(summary.clients.size());
  std::set<MethodIdentity> used_anywhere;

  for (const auto& f : findings) {
    auto it = index.find(f.client);
    if (it == index.end()) {
      it = index.emplace(f.client, summary.clients.size()).first;
      summary.clients.push_back(ClientSummary{f.client});
      used.emplace_back();
      guarded.emplace_back();
    }
    auto& cs = summary.clients[it->second];
    ++cs.findings;
    ++summary.total_findings;
    used[it->second].insert(f.pasem);
    used_anywhere.insert(f.pasem);
    if (f.guard) {
      ++cs.protected_findings;
      ++summary.protected_findings;
      guarded[it->second].insert(f.pasem);
      summary.guard_levels[f.pasem].insert(f.guard->level);
    } else {
      ++cs.unprotected_findings;
      ++summary.unprotected_findings;
    }
  }
  for (std::size_t i = 0; i < summary.clients.size(); ++i) {
    auto& cs = summary.clients[i];
    cs.used = static_cast<int>(used[i].size());
    cs.protected_ = static_cast<int>(guarded[i].size());
    cs.unprotected = cs.used - cs.protected_;
    if (cs.used > 0) ++summary.clients_using;
  }
  if (!summary.clients.empty()) {
    summary.client_usage_fraction =
        static_cast<double>(summary.clients_using) / static_cast<double>(summary.clients.size());
  }
  summary.distinct_pasems_used = static_cast<int>(used_anywhere.size());
  if (pasem_count > 0) {
    summary.pasem_coverage_fraction =
        static_cast<double>(summary.distinct_pasems_used) / static_cast<double>(pasem_count);
  }
  for (const auto& [id, levels] : summary.guard_levels) {
    if (levels.size() > 1) summary.inconsistent_guard_levels.push_back(id);
  }
  return summary;
}

std::vector<std::pair<MethodIdentity, int>> rank_protected(const std::vector<UsageFinding>& findings,
                                                           std::size_t top_k) {
  std::map<MethodIdentity, int> counts;
  for (const auto& f : findings) {
    if (f.guard) ++counts[f.pasem];
  }
  std::vector<std::pair<MethodIdentity, int>> ranked(counts.begin(), counts.end());
  // Stable over identity order, so ties keep ascending identity.
  std::stable_sort(ranked.begin(), ranked.end(),
                   [](const auto& a, const auto& b) { return a.second > b.second; });
  if (ranked.size() > top_k) ranked.resize(top_k);
  return ranked;
}

}  // namespace silentdiff
