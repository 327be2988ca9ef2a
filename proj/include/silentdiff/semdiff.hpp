#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "silentdiff/extract.hpp"
#include "silentdiff/lexer.hpp"

namespace silentdiff {

enum class ChangeClass { FormattingOnly, LikelyRefactoring, SemanticCandidate, Uncertain };

std::string_view to_string(ChangeClass c);
std::optional<ChangeClass> parse_change_class(std::string_view text);

/// Modifier set together with the doc comment's `@hide` marker.
struct ModifierState {
  ModifierSet modifiers;
  bool hide = false;

  bool operator==(const ModifierState&) const = default;
  /// e.g. "public static hide"
  std::string label() const;
};

struct ModifierTransition {
  ModifierState from;
  ModifierState to;
  bool operator==(const ModifierTransition&) const = default;
};

/// Returns the transition when modifiers or the hide flag differ.
std::optional<ModifierTransition> diff_modifiers(const MethodRecord& old_record,
                                                 const MethodRecord& new_record);

struct SemEntry {
  MethodIdentity identity;
  std::string old_version;
  std::string new_version;
  MethodRecord old_record;
  MethodRecord new_record;
  std::optional<ModifierTransition> modifier_transition;
  ChangeClass change_class = ChangeClass::Uncertain;
  bool is_pasem = false;
};

/// Identities present in both snapshots whose (nonempty) doc comments are
/// equal and whose bodies differ under the chosen comparison mode. Sorted by
/// identity. Throws Error when both snapshots carry the same label.
std::vector<SemEntry> detect_sems(const ApiSnapshot& old_snapshot,
                                  const ApiSnapshot& new_snapshot, bool strict);

/// True when the comments of two records differ under the given mode.
bool comments_differ(const MethodRecord& a, const MethodRecord& b, bool strict);
/// True when the bodies differ under the given mode (presence counts).
bool bodies_differ(const MethodRecord& a, const MethodRecord& b, bool strict);

/// Heuristic triage label for a changed body; absent bodies are nullopt.
/// First matching rule wins: formatting-only, body presence change,
/// qualifier-prefix or consistent rename, statement/block delta, otherwise
/// uncertain. Throws std::invalid_argument when nothing changed.
ChangeClass classify_change(const std::optional<std::string>& old_raw_body,
                            const std::optional<std::string>& new_raw_body);

/// Token-level building blocks of classify_change, exposed for testing.
bool is_qualifier_only_edit(const std::vector<Token>& old_tokens,
                            const std::vector<Token>& new_tokens);
bool is_consistent_rename(const std::vector<Token>& old_tokens,
                          const std::vector<Token>& new_tokens, std::size_t max_renames = 3);
bool edits_structural_tokens(const std::vector<Token>& old_tokens,
                             const std::vector<Token>& new_tokens);

/// Census grid: access level x {plain, static, final, abstract, hide, native}.
enum class SubModifier { Plain, Static, Final, Abstract, Hide, Native };
inline constexpr std::array<Access, 4> kCensusAccessOrder = {Access::Public, Access::Default,
                                                            Access::Protected, Access::Private};
inline constexpr std::array<SubModifier, 6> kCensusSubOrder = {
    SubModifier::Plain,    SubModifier::Static, SubModifier::Final,
    SubModifier::Abstract, SubModifier::Hide,   SubModifier::Native};

std::string_view to_string(SubModifier s);

struct ModifierCensus {
  std::pair<std::string, std::string> version_pair;
  /// counts[access][sub], indexed by the enum values.
  std::array<std::array<int, 6>, 4> counts{};
  /// Each entry counted once by its access level.
  std::array<int, 4> entries_per_access{};

  int at(Access a, SubModifier s) const {
    return counts[static_cast<std::size_t>(a)][static_cast<std::size_t>(s)];
  }
  int total_entries() const;
};

/// Multi-counts every applicable sub-modifier of the old record; "plain" only
/// when none applies. Throws Error when entries span several version pairs.
ModifierCensus census_modifiers(const std::vector<SemEntry>& entries);

}  // namespace silentdiff
