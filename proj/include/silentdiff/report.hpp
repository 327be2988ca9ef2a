#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "silentdiff/evolution.hpp"
#include "silentdiff/extract.hpp"
#include "silentdiff/semdiff.hpp"
#include "silentdiff/stats.hpp"
#include "silentdiff/usage.hpp"

// Serializers for every report the CLI writes. All of them are pure
// functions of their input, so reruns over the same input are byte-identical.
namespace silentdiff::report {

/// Snapshot dump: one record per line in identity order, with a content hash
/// in place of the body.
std::string snapshot_jsonl(const ApiSnapshot& snapshot, bool strict = false);

/// Lossless snapshot cache: a header line (files, diagnostics) followed by
/// complete records.
std::string snapshot_cache(const ApiSnapshot& snapshot);
ApiSnapshot parse_snapshot_cache(std::string_view text, const SnapshotDescriptor& descriptor);

/// One line per diagnostic, tagged with the snapshot or client it came from.
std::string diagnostics_jsonl(std::string_view scope, const std::vector<Diagnostic>& diagnostics);

/// Hash of the body normalized for the given mode, or "" when the method
/// has none.
std::string body_hash(const MethodRecord& record, bool strict = false);

std::string sems_jsonl(const std::vector<SemEntry>& entries, bool strict = false);

/// The fields of a SEM report line needed to pick scan targets.
struct SemReportRow {
  MethodIdentity identity;
  std::string old_version;
  std::string new_version;
  bool is_pasem = false;
};
/// Throws Error naming the line of the first malformed entry.
std::vector<SemReportRow> parse_sems_jsonl(std::string_view text);

/// Columns identity, change_class, old_body, new_body over the raw bodies.
std::string triage_csv(const std::vector<SemEntry>& entries);

/// Access x sub-modifier grid, one row per version pair.
std::string census_csv(const std::vector<ModifierCensus>& censuses);

std::string chains_jsonl(const std::vector<EvolutionChain>& chains);
std::string histogram_csv(const std::map<int, int>& histogram);
std::string transitions_csv(const TransitionGraph& graph);

std::string findings_jsonl(const std::vector<UsageFinding>& findings);
std::string usage_summary_json(const UsageSummary& summary);
std::string ranking_csv(const std::vector<std::pair<MethodIdentity, int>>& ranking);

struct MetricResult {
  std::string metric;
  PermutationTest test;
};
std::string stats_json(const std::vector<MetricResult>& results);
/// Whitespace-separated columns `label metric y` for gnuplot.
std::string gnuplot_dat(const MetricTable& table, std::size_t metric);

/// Quotes a CSV field and escapes backslash, newline and carriage return.
std::string csv_field(std::string_view text);

/// Writes through a temporary sibling and renames it into place.
void write_file(const std::filesystem::path& path, std::string_view content);

}  // namespace silentdiff::report
