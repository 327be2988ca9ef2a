#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "silentdiff/error.hpp"

namespace silentdiff {

/// Ordered list of relative path prefixes selecting the API-relevant part of a
/// source tree. Matching is a plain string prefix test on `/`-separated paths.
class Whitelist {
 public:
  Whitelist() = default;
  explicit Whitelist(std::vector<std::string> entries);

  const std::vector<std::string>& entries() const noexcept { return entries_; }
  bool matches(std::string_view relative_path) const noexcept;

  /// Android framework layout used when no whitelist file is supplied.
  static Whitelist android_default();

 private:
  std::vector<std::string> entries_;
};

/// Parses the whitelist text format: one prefix per line, `#` comment lines
/// and blank lines ignored. Throws Error on empty, duplicate or malformed input.
Whitelist parse_whitelist(std::string_view text);
Whitelist load_whitelist(const std::filesystem::path& path);

struct SnapshotDescriptor {
  std::string label;
  std::optional<int> api_level;
  std::filesystem::path root;
};

/// Reads `label<TAB>api_level<TAB>root` lines. Relative roots resolve against
/// the manifest's directory; an empty or `-` api_level means "unknown".
std::vector<SnapshotDescriptor> parse_manifest(std::string_view text,
                                               const std::filesystem::path& base_dir);
std::vector<SnapshotDescriptor> load_manifest(const std::filesystem::path& path);

/// Checks label uniqueness and, when every snapshot has an api_level, strict
/// ordering by it.
void validate_descriptors(const std::vector<SnapshotDescriptor>& snapshots);

struct SourceListing {
  /// Root-relative, `/`-separated, sorted lexicographically.
  std::vector<std::string> files;
  std::vector<Diagnostic> diagnostics;
};

inline constexpr std::string_view kDefaultSourceSuffix = ".java";

/// Lists regular files under the snapshot root that match the whitelist and
/// the suffix. Symbolic links are never followed.
SourceListing enumerate_sources(const SnapshotDescriptor& descriptor,
                                const Whitelist& whitelist,
                                std::string_view suffix = kDefaultSourceSuffix);

/// Same walk without a whitelist, used for client trees.
SourceListing enumerate_all_sources(const std::filesystem::path& root,
                                    std::string_view suffix = kDefaultSourceSuffix);

std::string read_text_file(const std::filesystem::path& path);

}  // namespace silentdiff
