#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "silentdiff/error.hpp"
#include "silentdiff/extract.hpp"
#include "silentdiff/lexer.hpp"

namespace silentdiff {

/// `Build.VERSION_CODES` constant name -> API level.
class VersionCodes {
 public:
  /// Levels 1 (BASE) through 29 (Q).
  static VersionCodes builtin();
  /// CSV `name,level`; a header row starting with `name` is skipped.
  static VersionCodes parse_csv(std::string_view text);
  static VersionCodes load_csv(const std::filesystem::path& path);

  /// Entries of `other` override or extend this table.
  void merge(const VersionCodes& other);
  std::optional<int> level(std::string_view name) const;
  const std::map<std::string, int, std::less<>>& entries() const noexcept { return table_; }

 private:
  std::map<std::string, int, std::less<>> table_;
};

enum class Comparison { Less, LessEqual, Greater, GreaterEqual, Equal, NotEqual };
std::string_view to_string(Comparison c);
std::optional<Comparison> parse_comparison(std::string_view text);

enum class Branch { Then, Else };
std::string_view to_string(Branch b);

/// `SDK_INT <op> level`, always oriented with SDK_INT on the left.
struct GuardInfo {
  Comparison comparison = Comparison::Less;
  int level = 0;
  Branch branch = Branch::Then;
  int guard_line = 0;
  /// Token index range [span_begin, span_end] of the branch holding the
  /// call, over the comment-free token stream.
  std::size_t span_begin = 0;
  std::size_t span_end = 0;

  bool operator==(const GuardInfo& o) const {
    return comparison == o.comparison && level == o.level && branch == o.branch &&
           guard_line == o.guard_line;
  }
};

/// Walks the `if`/`else` constructs enclosing `call_index` (an index into the
/// comment-free token stream) from the innermost outwards and returns the
/// first one whose condition compares SDK_INT with an integer literal or a
/// VERSION_CODES constant.
std::optional<GuardInfo> detect_guard(const std::vector<Token>& tokens, std::size_t call_index,
                                      const VersionCodes& codes);

enum class MatchConfidence { NameAndArity, Qualified };
std::string_view to_string(MatchConfidence c);

struct UsageFinding {
  MethodIdentity pasem;
  std::string client;       // client name
  std::string client_file;  // path relative to the client root
  int call_line = 0;
  std::size_t call_index = 0;  // token index in the comment-free stream
  MatchConfidence confidence = MatchConfidence::NameAndArity;
  std::optional<GuardInfo> guard;
};

struct CallSite {
  std::size_t name_index = 0;
  std::size_t arity = 0;
  /// Last identifier of the receiver expression (`Foo` in `a.Foo.m()`), if any.
  std::string receiver;
};

/// Finds `name(args)` call sites in a comment-free token stream, skipping
/// declarations.
std::vector<CallSite> find_call_sites(const std::vector<Token>& tokens);

/// Matches the call sites of one source text against the targets.
std::vector<UsageFinding> scan_source(std::string_view client, std::string_view file,
                                      std::string_view text,
                                      const std::vector<MethodIdentity>& pasems,
                                      const VersionCodes& codes);

struct ScanResult {
  std::vector<UsageFinding> findings;  // sorted by (file, line, index, identity)
  std::vector<Diagnostic> diagnostics;
};

ScanResult scan_call_sites(const std::filesystem::path& client_root, std::string_view client,
                           const std::vector<MethodIdentity>& pasems, const VersionCodes& codes,
                           std::string_view suffix = kDefaultSourceSuffix);

struct ClientSummary {
  std::string client;
  int used = 0;         // distinct PASEMs with at least one call site
  int protected_ = 0;   // distinct PASEMs with at least one guarded call site
  int unprotected = 0;  // used - protected_
  int findings = 0;
  int protected_findings = 0;
  int unprotected_findings = 0;
};

struct UsageSummary {
  std::vector<ClientSummary> clients;  // in the order given
  int total_findings = 0;
  int protected_findings = 0;
  int unprotected_findings = 0;
  int clients_using = 0;
  double client_usage_fraction = 0.0;
  int distinct_pasems_used = 0;
  double pasem_coverage_fraction = 0.0;
  std::map<MethodIdentity, std::set<int>> guard_levels;
  /// PASEMs guarded with more than one distinct level.
  std::vector<MethodIdentity> inconsistent_guard_levels;
};

UsageSummary aggregate_usage(const std::vector<UsageFinding>& findings,
                             const std::vector<std::string>& clients, std::size_t pasem_count);

/// Guarded call sites per PASEM, descending by count then identity,
/// truncated to top_k.
std::vector<std::pair<MethodIdentity, int>> rank_protected(const std::vector<UsageFinding>& findings,
                                                           std::size_t top_k = 10);

}  // namespace silentdiff
