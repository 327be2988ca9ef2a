#include <algorithm>
#include <atomic>
#include <thread>

#include "silentdiff/extract.hpp"

namespace silentdiff {
namespace {

struct FileResult {
  std::vector<MethodRecord> records;
  std::optional<Diagnostic> diagnostic;
};

FileResult extract_file(const SnapshotDescriptor& descriptor, const std::string& rel) {
  FileResult result;
  std::string text;
  try {
    text = read_text_file(descriptor.root / rel);
  } catch (const Error& e) {
    result.diagnostic = Diagnostic{rel, "unreadable file"};
    return result;
  }
  try {
    result.records = extract_methods(rel, text);
  } catch (const ParseError& e) {
    result.diagnostic = Diagnostic{rel, e.what()};
  }
  return result;
}

}  // namespace

ApiSnapshot build_snapshot(const SnapshotDescriptor& descriptor, const SourceListing& listing,
                           unsigned workers) {
  const auto& files = listing.files;
  std::vector<FileResult> results(files.size());
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(files.size(), 1)));

  if (workers <= 1) {
    for (std::size_t i = 0; i < files.size(); ++i) results[i] = extract_file(descriptor, files[i]);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < files.size(); i = next++) {
          results[i] = extract_file(descriptor, files[i]);
        }
      });
    }
  }

  // Single-threaded merge in listing order keeps "first occurrence wins"
  // deterministic.
  ApiSnapshot snap;
  snap.descriptor = descriptor;
  snap.diagnostics = listing.diagnostics;
  for (std::size_t i = 0; i < files.size(); ++i) {
    auto& r = results[i];
    if (r.diagnostic) {
      snap.diagnostics.push_back(std::move(*r.diagnostic));
      continue;
    }
    snap.files.push_back(files[i]);
    for (auto& rec : r.records) {
      auto [it, inserted] = snap.methods.try_emplace(rec.identity, rec);
      if (!inserted) {
        snap.diagnostics.push_back(
            {files[i], "duplicate method " + rec.identity.display() + " (first seen in " +
                           it->second.file + ")"});
      }
    }
  }
  return snap;
}

}  // namespace silentdiff
