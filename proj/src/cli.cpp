#include "silentdiff/cli.hpp"

#include <chrono>
#include <ctime>
#include <iomanip>
#include <ostream>
#include <set>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "silentdiff/corpus.hpp"
#include "silentdiff/evolution.hpp"
#include "silentdiff/extract.hpp"
#include "silentdiff/hash.hpp"
#include "silentdiff/report.hpp"
#include "silentdiff/semdiff.hpp"
#include "silentdiff/stats.hpp"
#include "silentdiff/usage.hpp"

namespace silentdiff::cli {

namespace fs = std::filesystem;

namespace {

struct RunConfig {
  std::string manifest;
  std::string whitelist;
  bool strict = false;
  std::string out_dir = "silentdiff-out";
  std::string suffix = std::string(kDefaultSourceSuffix);
  std::string codes_table;
  std::size_t top = 10;
  bool no_cache = false;
};

class Runner {
 public:
  Runner(RunConfig config, std::ostream& out, std::ostream& err)
      : cfg_(std::move(config)), out_(out), err_(err), out_dir_(cfg_.out_dir) {}

  int extract();
  int diff(const std::string& old_label, const std::string& new_label);
  int chain();
  int scan(const std::string& client_root, const std::string& sem_report, bool client_subdirs);
  int stats(const std::string& csv_path);

  void write_meta(const std::string& command, const std::vector<std::string>& args) const;

 private:
  std::vector<SnapshotDescriptor> descriptors() const;
  Whitelist whitelist() const;
  ApiSnapshot load_snapshot(const SnapshotDescriptor& d, const Whitelist& wl) const;
  const SnapshotDescriptor& find(const std::vector<SnapshotDescriptor>& all,
                                 const std::string& label) const;
  void write(const std::string& name, std::string_view content) const {
    report::write_file(out_dir_ / name, content);
  }

  RunConfig cfg_;
  std::ostream& out_;
  std::ostream& err_;
  fs::path out_dir_;
};

// Labels and metric names become file names.
void check_file_component(const std::string& name, const char* what) {
  if (name.empty() || name == "." || name == ".." ||
      name.find_first_of("/\\") != std::string::npos) {
    throw Error(std::string(what) + " '" + name + "' cannot be used as a file name");
  }
}

std::vector<SnapshotDescriptor> Runner::descriptors() const {
  if (cfg_.manifest.empty()) throw Error("--manifest is required");
  auto all = load_manifest(cfg_.manifest);
  for (const auto& d : all) {
    check_file_component(d.label, "snapshot label");
    if (!fs::is_directory(d.root)) {
      throw Error("snapshot root is not a directory: " + d.root.string());
    }
  }
  return all;
}

Whitelist Runner::whitelist() const {
  return cfg_.whitelist.empty() ? Whitelist::android_default() : load_whitelist(cfg_.whitelist);
}

const SnapshotDescriptor& Runner::find(const std::vector<SnapshotDescriptor>& all,
                                       const std::string& label) const {
  for (const auto& d : all) {
    if (d.label == label) return d;
  }
  throw Error("unknown snapshot label '" + label + "'");
}

ApiSnapshot Runner::load_snapshot(const SnapshotDescriptor& d, const Whitelist& wl) const {
  auto listing = enumerate_sources(d, wl, cfg_.suffix);
  if (cfg_.no_cache) return build_snapshot(d, listing);

  Fnv1a key;
  for (const auto& entry : wl.entries()) key.update(entry).update("\n");
  key.update(cfg_.strict ? "strict\n" : "loose\n").update(cfg_.suffix).update("\n");
  for (const auto& file : listing.files) {
    key.update(file).update(std::string_view("\0", 1));
    try {
      key.update(content_hash(read_text_file(d.root / file)));
    } catch (const Error&) {
      key.update("unreadable");
    }
  }
  for (const auto& diag : listing.diagnostics) key.update(diag.file).update(diag.message);

  const auto cache_path = out_dir_ / "cache" / (key.hex() + ".jsonl");
  if (fs::is_regular_file(cache_path)) {
    try {
      return report::parse_snapshot_cache(read_text_file(cache_path), d);
    } catch (const Error& e) {
      err_ << "warning: ignoring " << cache_path.string() << ": " << e.what() << '\n';
    }
  }
  auto snapshot = build_snapshot(d, listing);
  report::write_file(cache_path, report::snapshot_cache(snapshot));
  return snapshot;
}

int Runner::extract() {
  const auto all = descriptors();
  const auto wl = whitelist();
  std::string diagnostics;
  bool any = false;
  for (const auto& d : all) {
    auto snapshot = load_snapshot(d, wl);
    write("snapshots/" + d.label + ".jsonl", report::snapshot_jsonl(snapshot, cfg_.strict));
    diagnostics += report::diagnostics_jsonl(d.label, snapshot.diagnostics);
    any = any || !snapshot.diagnostics.empty();
    out_ << d.label << ": " << snapshot.methods.size() << " methods from "
         << snapshot.files.size() << " files";
    if (!snapshot.diagnostics.empty()) out_ << ", " << snapshot.diagnostics.size() << " diagnostics";
    out_ << '\n';
  }
  write("diagnostics.jsonl", diagnostics);
  return any ? kExitDiagnostics : kExitClean;
}

int Runner::diff(const std::string& old_label, const std::string& new_label) {
  const auto all = descriptors();
  const auto wl = whitelist();
  const auto old_snapshot = load_snapshot(find(all, old_label), wl);
  const auto new_snapshot = load_snapshot(find(all, new_label), wl);
  const auto sems = detect_sems(old_snapshot, new_snapshot, cfg_.strict);

  const std::string tag = old_label + "_" + new_label;
  write("sems_" + tag + ".jsonl", report::sems_jsonl(sems, cfg_.strict));
  write("census_" + tag + ".csv", report::census_csv({census_modifiers(sems)}));
  write("triage_" + tag + ".csv", report::triage_csv(sems));
  write("diagnostics_" + tag + ".jsonl",
        report::diagnostics_jsonl(old_label, old_snapshot.diagnostics) +
            report::diagnostics_jsonl(new_label, new_snapshot.diagnostics));

  const auto pasems = std::count_if(sems.begin(), sems.end(), [](const auto& e) { return e.is_pasem; });
  out_ << "SEMs: " << sems.size() << ", PASEMs: " << pasems << '\n';
  const bool any = !old_snapshot.diagnostics.empty() || !new_snapshot.diagnostics.empty();
  return any ? kExitDiagnostics : kExitClean;
}

int Runner::chain() {
  const auto all = descriptors();
  if (all.size() < 2) throw Error("chain needs at least two snapshots");
  const auto wl = whitelist();
  std::vector<ApiSnapshot> snapshots;
  std::string diagnostics;
  bool any = false;
  for (const auto& d : all) {
    snapshots.push_back(load_snapshot(d, wl));
    diagnostics += report::diagnostics_jsonl(d.label, snapshots.back().diagnostics);
    any = any || !snapshots.back().diagnostics.empty();
  }
  const auto analysis = build_chain_analysis(snapshots, cfg_.strict);

  std::vector<SemEntry> all_sems;
  std::vector<ModifierCensus> censuses;
  for (std::size_t p = 0; p < analysis.sems_per_pair.size(); ++p) {
    const auto& sems = analysis.sems_per_pair[p];
    auto census = census_modifiers(sems);
    census.version_pair = {all[p].label, all[p + 1].label};
    censuses.push_back(census);
    all_sems.insert(all_sems.end(), sems.begin(), sems.end());
  }
  const auto late = late_doc_updates(analysis.chains);
  const auto graph = transition_graph(all_sems);

  write("chains.jsonl", report::chains_jsonl(analysis.chains));
  write("histogram_sem.csv", report::histogram_csv(update_histogram(analysis.chains, false)));
  write("histogram_pasem.csv", report::histogram_csv(update_histogram(analysis.chains, true)));
  write("late_doc_updates.jsonl", report::chains_jsonl(late));
  write("transitions.csv", report::transitions_csv(graph));
  write("census_all.csv", report::census_csv(censuses));
  write("sems_all.jsonl", report::sems_jsonl(all_sems, cfg_.strict));
  write("diagnostics_chain.jsonl", diagnostics);

  const auto pasems =
      std::count_if(all_sems.begin(), all_sems.end(), [](const auto& e) { return e.is_pasem; });
  out_ << "SEMs: " << all_sems.size() << ", PASEMs: " << pasems
       << ", chains: " << analysis.chains.size() << ", late doc updates: " << late.size()
       << ", transitions: " << graph.edges.size() << '\n';
  return any ? kExitDiagnostics : kExitClean;
}

int Runner::scan(const std::string& client_root, const std::string& sem_report,
                 bool client_subdirs) {
  if (!fs::is_regular_file(sem_report)) throw Error("SEM report not found: " + sem_report);
  const auto rows = report::parse_sems_jsonl(read_text_file(sem_report));
  std::set<MethodIdentity> targets;
  for (const auto& row : rows) {
    if (row.is_pasem) targets.insert(row.identity);
  }
  const std::vector<MethodIdentity> pasems(targets.begin(), targets.end());

  auto codes = VersionCodes::builtin();
  if (!cfg_.codes_table.empty()) codes.merge(VersionCodes::load_csv(cfg_.codes_table));

  const fs::path root(client_root);
  if (!fs::is_directory(root)) throw Error("client root is not a directory: " + client_root);
  std::vector<std::pair<std::string, fs::path>> clients;
  if (client_subdirs) {
    for (const auto& entry : fs::directory_iterator(root)) {
      if (entry.is_directory() && !entry.is_symlink()) {
        clients.emplace_back(entry.path().filename().generic_string(), entry.path());
      }
    }
    std::sort(clients.begin(), clients.end());
  } else {
    auto name = fs::weakly_canonical(root).filename().generic_string();
    clients.emplace_back(name.empty() ? std::string("client") : name, root);
  }

  std::vector<UsageFinding> findings;
  std::vector<std::string> names;
  std::string diagnostics;
  bool any = false;
  for (const auto& [name, path] : clients) {
    auto result = scan_call_sites(path, name, pasems, codes, cfg_.suffix);
    findings.insert(findings.end(), result.findings.begin(), result.findings.end());
    names.push_back(name);
    diagnostics += report::diagnostics_jsonl(name, result.diagnostics);
    any = any || !result.diagnostics.empty();
  }
  const auto summary = aggregate_usage(findings, names, pasems.size());
  write("findings.jsonl", report::findings_jsonl(findings));
  write("usage_summary.json", report::usage_summary_json(summary));
  write("protected_ranking.csv", report::ranking_csv(rank_protected(findings, cfg_.top)));
  write("diagnostics_scan.jsonl", diagnostics);

  out_ << "findings: " << summary.total_findings << ", protected: " << summary.protected_findings
       << ", unprotected: " << summary.unprotected_findings << ", clients using: "
       << summary.clients_using << "/" << summary.clients.size() << '\n';
  return any ? kExitDiagnostics : kExitClean;
}

int Runner::stats(const std::string& csv_path) {
  const auto table = parse_metric_csv(read_text_file(csv_path));
  std::vector<report::MetricResult> results;
  for (std::size_t k = 0; k < table.metric_names.size(); ++k) {
    check_file_component(table.metric_names[k], "metric name");
    try {
      results.push_back({table.metric_names[k], permutation_test(table.metrics[k], table.y)});
    } catch (const Error& e) {
      throw Error(table.metric_names[k] + ": " + e.what());
    }
  }
  const auto json = report::stats_json(results);
  write("stats.json", json);
  for (std::size_t k = 0; k < table.metric_names.size(); ++k) {
    write("stats_" + table.metric_names[k] + ".dat", report::gnuplot_dat(table, k));
  }
  out_ << json;
  return kExitClean;
}

void Runner::write_meta(const std::string& command, const std::vector<std::string>& args) const {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream stamp;
  stamp << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  nlohmann::ordered_json meta{{"command", command},
                              {"args", args},
                              {"finished_at", stamp.str()},
                              {"strict", cfg_.strict},
                              {"suffix", cfg_.suffix}};
  report::write_file(out_dir_ / (command + ".meta.json"), meta.dump(2) + "\n");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finds methods whose body changed while their doc comment did not.", "silentdiff"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  app.add_option("--manifest", cfg.manifest, "snapshot manifest (label<TAB>api_level<TAB>root)");
  app.add_option("--whitelist", cfg.whitelist, "path-prefix whitelist (default: Android layout)");
  app.add_flag("--strict", cfg.strict, "compare comments and bodies as literal text");
  app.add_option("--out", cfg.out_dir, "output directory")->capture_default_str();
  app.add_option("--suffix", cfg.suffix, "source file suffix")->capture_default_str();
  app.add_option("--codes-table", cfg.codes_table, "extra VERSION_CODES CSV (name,level)");
  app.add_option("--top", cfg.top, "ranking length")->check(CLI::PositiveNumber)->capture_default_str();
  app.add_flag("--no-cache", cfg.no_cache, "always re-extract snapshots");

  auto* extract = app.add_subcommand("extract", "dump the methods of every snapshot");
  auto* diff = app.add_subcommand("diff", "report SEMs between two snapshots");
  std::string old_label, new_label;
  diff->add_option("old", old_label, "older snapshot label")->required();
  diff->add_option("new", new_label, "newer snapshot label")->required();
  auto* chain = app.add_subcommand("chain", "follow SEMs across every adjacent snapshot pair");
  auto* scan = app.add_subcommand("scan", "find calls to PASEMs in client sources");
  std::string client_root, sem_report;
  bool client_subdirs = false;
  scan->add_option("client_root", client_root, "client source tree")->required();
  scan->add_option("sem_report", sem_report, "SEM report (JSON Lines)")->required();
  scan->add_flag("--clients-dir", client_subdirs, "treat each subdirectory as one client");
  auto* stats = app.add_subcommand("stats", "correlate SEM counts with release metrics");
  std::string csv_path;
  stats->add_option("metrics_csv", csv_path, "CSV with columns pair,<metric>...,<sem count>")
      ->required();

  std::vector<const char*> argv{"silentdiff"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitClean : kExitFatal;
  }

  Runner runner(cfg, out, err);
  try {
    fs::create_directories(cfg.out_dir);
    int code = kExitClean;
    std::string command;
    if (extract->parsed()) {
      command = "extract";
      code = runner.extract();
    } else if (diff->parsed()) {
      command = "diff";
      code = runner.diff(old_label, new_label);
    } else if (chain->parsed()) {
      command = "chain";
      code = runner.chain();
    } else if (scan->parsed()) {
      command = "scan";
      code = runner.scan(client_root, sem_report, client_subdirs);
    } else if (stats->parsed()) {
      command = "stats";
      code = runner.stats(csv_path);
    }
    runner.write_meta(command, args);
    if (code == kExitDiagnostics) err << "completed with diagnostics\n";
    return code;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFatal;
  }
}

}  // namespace silentdiff::cli
