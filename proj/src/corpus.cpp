#include "silentdiff/corpus.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>
#include <system_error>

namespace fs = std::filesystem;

namespace silentdiff {
namespace {

std::string_view trim(std::string_view s) {
  const auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; };
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto nl = text.find('\n', start);
    if (nl == std::string_view::npos) {
      if (start < text.size()) lines.push_back(text.substr(start));
      break;
    }
    lines.push_back(text.substr(start, nl - start));
    start = nl + 1;
  }
  return lines;
}

bool has_dotdot_segment(std::string_view path) {
  std::size_t start = 0;
  while (start <= path.size()) {
    auto slash = path.find('/', start);
    auto seg = path.substr(start, slash == std::string_view::npos ? path.npos : slash - start);
    if (seg == "..") return true;
    if (slash == std::string_view::npos) break;
    start = slash + 1;
  }
  return false;
}

std::string generic_relative(const fs::path& path, const fs::path& root) {
  return path.lexically_relative(root).generic_string();
}

bool ends_with(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

template <typename Accept>
SourceListing walk(const fs::path& root, std::string_view suffix, Accept accept) {
  std::error_code ec;
  if (!fs::is_directory(root, ec)) {
    throw Error("snapshot root is not a directory: " + root.string());
  }
  SourceListing listing;
  fs::recursive_directory_iterator it(root, fs::directory_options::none, ec);
  if (ec) throw Error("cannot read directory " + root.string() + ": " + ec.message());
  for (const fs::recursive_directory_iterator end; it != end; it.increment(ec)) {
    if (ec) throw Error("cannot read directory under " + root.string() + ": " + ec.message());
    const auto& entry = *it;
    if (entry.is_symlink(ec)) {
      if (entry.is_directory(ec)) it.disable_recursion_pending();
      continue;
    }
    if (!entry.is_regular_file(ec)) continue;
    std::string rel = generic_relative(entry.path(), root);
    if (!ends_with(rel, suffix) || !accept(rel)) continue;
    std::ifstream probe(entry.path(), std::ios::binary);
    if (!probe) {
      listing.diagnostics.push_back({rel, "unreadable file"});
      continue;
    }
    listing.files.push_back(std::move(rel));
  }
  if (ec) throw Error("cannot read directory under " + root.string() + ": " + ec.message());
  std::sort(listing.files.begin(), listing.files.end());
  return listing;
}

}  // namespace

Whitelist::Whitelist(std::vector<std::string> entries) : entries_(std::move(entries)) {}

bool Whitelist::matches(std::string_view relative_path) const noexcept {
  return std::any_of(entries_.begin(), entries_.end(), [&](const std::string& prefix) {
    return relative_path.substr(0, prefix.size()) == prefix;
  });
}

Whitelist Whitelist::android_default() {
  return Whitelist({
      "core/java/",
      "drm/java/",
      "graphics/java/",
      "keystore/java/",
      "location/java/",
      "media/java/",
      "opengl/java/",
      "rs/java/",
      "sax/java/",
      "telecomm/java/",
      "telephony/java/",
      "wifi/java/",
  });
}

Whitelist parse_whitelist(std::string_view text) {
  std::vector<std::string> entries;
  std::set<std::string, std::less<>> seen;
  const auto lines = split_lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const auto line_no = std::to_string(i + 1);
    std::string_view line = trim(lines[i]);
    if (line.empty() || line.front() == '#') continue;
    std::string entry(line);
    std::replace(entry.begin(), entry.end(), '\\', '/');
    if (entry.front() == '/') throw Error("absolute path in whitelist at line " + line_no);
    if (has_dotdot_segment(entry)) throw Error("'..' segment in whitelist at line " + line_no);
    if (!seen.insert(entry).second) throw Error("duplicate entry at line " + line_no);
    entries.push_back(std::move(entry));
  }
  if (entries.empty()) throw Error("whitelist is empty");
  return Whitelist(std::move(entries));
}

Whitelist load_whitelist(const fs::path& path) { return parse_whitelist(read_text_file(path)); }

std::vector<SnapshotDescriptor> parse_manifest(std::string_view text, const fs::path& base_dir) {
  std::vector<SnapshotDescriptor> out;
  const auto lines = split_lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    std::string_view line = trim(lines[i]);
    if (line.empty() || line.front() == '#') continue;
    const auto where = " at manifest line " + std::to_string(i + 1);
    auto tab1 = line.find('\t');
    auto tab2 = tab1 == line.npos ? line.npos : line.find('\t', tab1 + 1);
    if (tab2 == line.npos || line.find('\t', tab2 + 1) != line.npos) {
      throw Error("expected label<TAB>api_level<TAB>root" + where);
    }
    SnapshotDescriptor d;
    d.label = std::string(trim(line.substr(0, tab1)));
    auto level = trim(line.substr(tab1 + 1, tab2 - tab1 - 1));
    auto root = trim(line.substr(tab2 + 1));
    if (d.label.empty()) throw Error("empty label" + where);
    if (root.empty()) throw Error("empty root" + where);
    if (!level.empty() && level != "-") {
      int value = 0;
      auto [ptr, ec] = std::from_chars(level.data(), level.data() + level.size(), value);
      if (ec != std::errc{} || ptr != level.data() + level.size() || value < 1) {
        throw Error("invalid api_level '" + std::string(level) + "'" + where);
      }
      d.api_level = value;
    }
    fs::path root_path{std::string(root)};
    d.root = root_path.is_absolute() ? root_path : (base_dir / root_path).lexically_normal();
    out.push_back(std::move(d));
  }
  if (out.empty()) throw Error("manifest lists no snapshots");
  validate_descriptors(out);
  return out;
}

std::vector<SnapshotDescriptor> load_manifest(const fs::path& path) {
  return parse_manifest(read_text_file(path), path.parent_path());
}

void validate_descriptors(const std::vector<SnapshotDescriptor>& snapshots) {
  std::set<std::string, std::less<>> labels;
  for (const auto& d : snapshots) {
    if (d.label.empty()) throw Error("snapshot label is empty");
    if (!labels.insert(d.label).second) throw Error("duplicate snapshot label '" + d.label + "'");
  }
  const bool all_levels = std::all_of(snapshots.begin(), snapshots.end(),
                                      [](const auto& d) { return d.api_level.has_value(); });
  if (!all_levels) return;
  for (std::size_t i = 1; i < snapshots.size(); ++i) {
    if (*snapshots[i].api_level <= *snapshots[i - 1].api_level) {
      throw Error("snapshots are not strictly ordered by api_level at '" + snapshots[i].label + "'");
    }
  }
}

SourceListing enumerate_sources(const SnapshotDescriptor& descriptor, const Whitelist& whitelist,
                                std::string_view suffix) {
  return walk(descriptor.root, suffix, [&](const std::string& rel) { return whitelist.matches(rel); });
}

SourceListing enumerate_all_sources(const fs::path& root, std::string_view suffix) {
  return walk(root, suffix, [](const std::string&) { return true; });
}

std::string read_text_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return std::move(buf).str();
}

}  // namespace silentdiff
