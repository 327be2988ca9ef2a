#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "silentdiff/corpus.hpp"
#include "silentdiff/error.hpp"

namespace silentdiff {

/// Signature key shared by the same method across releases. Parameter and
/// return types are whitespace-free and generic-erased; the return type is
/// empty for constructors.
struct MethodIdentity {
  std::string qualified_class;
  std::string method_name;
  std::vector<std::string> param_types;
  std::string return_type;

  auto operator<=>(const MethodIdentity&) const = default;
  bool operator==(const MethodIdentity&) const = default;

  std::size_t arity() const noexcept { return param_types.size(); }
  std::string simple_class_name() const;
  /// `pkg.Class: ret name(T1,T2)`, the layout used in rankings and CSVs.
  std::string display() const;
};

enum class Access { Public, Protected, Private, Default };

std::string_view to_string(Access access);

/// Modifier set of a method: exactly one access level plus optional
/// static/final/abstract/native.
struct ModifierSet {
  Access access = Access::Default;
  bool is_static = false;
  bool is_final = false;
  bool is_abstract = false;
  bool is_native = false;

  bool operator==(const ModifierSet&) const = default;
  /// Canonical label, e.g. "public static" or "default".
  std::string label() const;
};

struct LineSpan {
  int start = 0;
  int end = 0;
  bool operator==(const LineSpan&) const = default;
};

struct MethodRecord {
  MethodIdentity identity;
  ModifierSet modifiers;
  bool hide = false;
  std::string doc_comment;      // loose-normalized
  std::string raw_doc_comment;  // exact source text, empty when undocumented
  std::optional<std::string> body;      // loose-normalized token text
  std::optional<std::string> raw_body;  // exact text from `{` to `}`
  std::string file;
  LineSpan lines;

  bool has_doc() const noexcept { return !raw_doc_comment.empty(); }
  bool operator==(const MethodRecord&) const = default;
};

/// Extracts every method and constructor declared in a named class,
/// interface, enum, record or annotation type of one source file. Throws
/// ParseError for tokenizer failures and unbalanced brackets.
std::vector<MethodRecord> extract_methods(std::string_view file, std::string_view text);

/// strict: line endings canonicalized only. Otherwise the `/** */`
/// delimiters and `*` gutter are stripped, horizontal whitespace collapsed and
/// surrounding blank lines dropped. Input without delimiters is treated as
/// already-normalized text, which makes loose normalization idempotent.
std::string normalize_comment(std::string_view raw, bool strict);

/// strict: line endings canonicalized only. Otherwise the comment-free token
/// texts joined by single spaces.
std::string normalize_body(std::string_view raw, bool strict);

bool has_hide_tag(std::string_view raw_doc_comment);

struct ApiSnapshot {
  SnapshotDescriptor descriptor;
  std::map<MethodIdentity, MethodRecord> methods;
  std::vector<Diagnostic> diagnostics;
  /// Files that made it into the snapshot, in listing order.
  std::vector<std::string> files;
};

/// Parses the listed files (in parallel when workers > 1) and merges the
/// records in listing order; the first occurrence of an identity wins.
ApiSnapshot build_snapshot(const SnapshotDescriptor& descriptor, const SourceListing& listing,
                           unsigned workers = 0);

}  // namespace silentdiff
