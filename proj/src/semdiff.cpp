#include "silentdiff/semdiff.hpp"

#include <numeric>

namespace silentdiff {

std::string_view to_string(ChangeClass c) {
  switch (c) {
    case ChangeClass::FormattingOnly: return "formatting-only";
    case ChangeClass::LikelyRefactoring: return "likely-refactoring";
    case ChangeClass::SemanticCandidate: return "semantic-candidate";
    case ChangeClass::Uncertain: return "uncertain";
  }
  return "uncertain";
}

std::optional<ChangeClass> parse_change_class(std::string_view text) {
  for (auto c : {ChangeClass::FormattingOnly, ChangeClass::LikelyRefactoring,
                 ChangeClass::SemanticCandidate, ChangeClass::Uncertain}) {
    if (to_string(c) == text) return c;
  }
  return std::nullopt;
}

std::string_view to_string(SubModifier s) {
  switch (s) {
    case SubModifier::Plain: return "-";
    case SubModifier::Static: return "static";
    case SubModifier::Final: return "final";
    case SubModifier::Abstract: return "abstract";
    case SubModifier::Hide: return "hide";
    case SubModifier::Native: return "native";
  }
  return "-";
}

std::string ModifierState::label() const {
  std::string out = modifiers.label();
  if (hide) out += " hide";
  return out;
}

std::optional<ModifierTransition> diff_modifiers(const MethodRecord& old_record,
                                                 const MethodRecord& new_record) {
  ModifierState from{old_record.modifiers, old_record.hide};
  ModifierState to{new_record.modifiers, new_record.hide};
  if (from == to) return std::nullopt;
  return ModifierTransition{from, to};
}

bool comments_differ(const MethodRecord& a, const MethodRecord& b, bool strict) {
  if (strict) {
    return normalize_comment(a.raw_doc_comment, true) != normalize_comment(b.raw_doc_comment, true);
  }
  return a.doc_comment != b.doc_comment;
}

bool bodies_differ(const MethodRecord& a, const MethodRecord& b, bool strict) {
  if (a.raw_body.has_value() != b.raw_body.has_value()) return true;
  if (!a.raw_body) return false;
  if (strict) return normalize_body(*a.raw_body, true) != normalize_body(*b.raw_body, true);
  return a.body != b.body;
}

std::vector<SemEntry> detect_sems(const ApiSnapshot& old_snapshot, const ApiSnapshot& new_snapshot,
                                  bool strict) {
  if (old_snapshot.descriptor.label == new_snapshot.descriptor.label) {
    throw Error("cannot compare snapshot '" + old_snapshot.descriptor.label + "' with itself");
  }
  std::vector<SemEntry> out;
  // Both maps are ordered by identity, so a merge-join yields sorted output.
  auto it_old = old_snapshot.methods.begin();
  auto it_new = new_snapshot.methods.begin();
  while (it_old != old_snapshot.methods.end() && it_new != new_snapshot.methods.end()) {
    if (it_old->first < it_new->first) {
      ++it_old;
      continue;
    }
    if (it_new->first < it_old->first) {
      ++it_new;
      continue;
    }
    const MethodRecord& a = it_old->second;
    const MethodRecord& b = it_new->second;
    ++it_old;
    ++it_new;
    if (!a.has_doc() || !b.has_doc()) continue;
    if (comments_differ(a, b, strict)) continue;
    if (!bodies_differ(a, b, strict)) continue;

    SemEntry e;
    e.identity = a.identity;
    e.old_version = old_snapshot.descriptor.label;
    e.new_version = new_snapshot.descriptor.label;
    e.old_record = a;
    e.new_record = b;
    e.modifier_transition = diff_modifiers(a, b);
    e.change_class = classify_change(a.raw_body, b.raw_body);
    e.is_pasem = b.modifiers.access == Access::Public;
    out.push_back(std::move(e));
  }
  return out;
}

int ModifierCensus::total_entries() const {
  return std::accumulate(entries_per_access.begin(), entries_per_access.end(), 0);
}

ModifierCensus census_modifiers(const std::vector<SemEntry>& entries) {
  ModifierCensus census;
  if (entries.empty()) return census;
  census.version_pair = {entries.front().old_version, entries.front().new_version};
  for (const auto& e : entries) {
    if (e.old_version != census.version_pair.first ||
        e.new_version != census.version_pair.second) {
      throw Error("census over mixed version pairs: " + census.version_pair.first + "->" +
                  census.version_pair.second + " and " + e.old_version + "->" + e.new_version);
    }
    const auto& m = e.old_record.modifiers;
    auto& row = census.counts[static_cast<std::size_t>(m.access)];
    ++census.entries_per_access[static_cast<std::size_t>(m.access)];
    bool any = false;
    auto bump = [&](bool flag, SubModifier s) {
      if (!flag) return;
      ++row[static_cast<std::size_t>(s)];
      any = true;
    };
    bump(m.is_static, SubModifier::Static);
    bump(m.is_final, SubModifier::Final);
    bump(m.is_abstract, SubModifier::Abstract);
    bump(e.old_record.hide, SubModifier::Hide);
    bump(m.is_native, SubModifier::Native);
    if (!any) ++row[static_cast<std::size_t>(SubModifier::Plain)];
  }
  return census;
}

}  // namespace silentdiff
