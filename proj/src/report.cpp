#include "silentdiff/report.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "silentdiff/hash.hpp"

namespace silentdiff::report {

using Json = nlohmann::ordered_json;

namespace {

Json identity_json(const MethodIdentity& id) {
  return Json{{"qualified_class", id.qualified_class},
              {"method_name", id.method_name},
              {"param_types", id.param_types},
              {"return_type", id.return_type}};
}

MethodIdentity identity_from_json(const Json& j) {
  MethodIdentity id;
  id.qualified_class = j.at("qualified_class").get<std::string>();
  id.method_name = j.at("method_name").get<std::string>();
  id.param_types = j.at("param_types").get<std::vector<std::string>>();
  id.return_type = j.at("return_type").get<std::string>();
  return id;
}

Json lines_json(const LineSpan& span) { return Json::array({span.start, span.end}); }

Json optional_string(const std::optional<std::string>& s) {
  return s ? Json(*s) : Json(nullptr);
}

std::optional<std::string> optional_from_json(const Json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<std::string>();
}

Access access_from_string(const std::string& s) {
  for (Access a : {Access::Public, Access::Protected, Access::Private, Access::Default}) {
    if (to_string(a) == s) return a;
  }
  throw Error("unknown access level '" + s + "'");
}

Json modifiers_json(const ModifierSet& m) {
  return Json{{"access", to_string(m.access)},
              {"static", m.is_static},
              {"final", m.is_final},
              {"abstract", m.is_abstract},
              {"native", m.is_native}};
}

ModifierSet modifiers_from_json(const Json& j) {
  ModifierSet m;
  m.access = access_from_string(j.at("access").get<std::string>());
  m.is_static = j.at("static").get<bool>();
  m.is_final = j.at("final").get<bool>();
  m.is_abstract = j.at("abstract").get<bool>();
  m.is_native = j.at("native").get<bool>();
  return m;
}

Json diagnostic_json(const Diagnostic& d) {
  return Json{{"file", d.file}, {"message", d.message}};
}

void append_line(std::string& out, const Json& j) {
  out += j.dump();
  out += '\n';
}

}  // namespace

std::string body_hash(const MethodRecord& record, bool strict) {
  if (strict) {
    return record.raw_body ? content_hash(normalize_body(*record.raw_body, true)) : std::string();
  }
  return record.body ? content_hash(*record.body) : std::string();
}

std::string snapshot_jsonl(const ApiSnapshot& snapshot, bool strict) {
  std::string out;
  for (const auto& [id, r] : snapshot.methods) {
    append_line(out, Json{{"identity", identity_json(id)},
                          {"modifiers", r.modifiers.label()},
                          {"hide", r.hide},
                          {"doc_comment", r.doc_comment},
                          {"body_hash", body_hash(r, strict)},
                          {"file", r.file},
                          {"start_line", r.lines.start},
                          {"end_line", r.lines.end}});
  }
  return out;
}

std::string snapshot_cache(const ApiSnapshot& snapshot) {
  std::string out;
  Json diags = Json::array();
  for (const auto& d : snapshot.diagnostics) diags.push_back(diagnostic_json(d));
  append_line(out, Json{{"files", snapshot.files}, {"diagnostics", diags}});
  for (const auto& [id, r] : snapshot.methods) {
    append_line(out, Json{{"identity", identity_json(id)},
                          {"modifiers", modifiers_json(r.modifiers)},
                          {"hide", r.hide},
                          {"doc_comment", r.doc_comment},
                          {"raw_doc_comment", r.raw_doc_comment},
                          {"body", optional_string(r.body)},
                          {"raw_body", optional_string(r.raw_body)},
                          {"file", r.file},
                          {"lines", lines_json(r.lines)}});
  }
  return out;
}

ApiSnapshot parse_snapshot_cache(std::string_view text, const SnapshotDescriptor& descriptor) {
  ApiSnapshot snapshot;
  snapshot.descriptor = descriptor;
  std::istringstream in{std::string(text)};
  std::string line;
  bool header = true;
  try {
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      auto j = Json::parse(line);
      if (header) {
        snapshot.files = j.at("files").get<std::vector<std::string>>();
        for (const auto& d : j.at("diagnostics")) {
          snapshot.diagnostics.push_back(
              {d.at("file").get<std::string>(), d.at("message").get<std::string>()});
        }
        header = false;
        continue;
      }
      MethodRecord r;
      r.identity = identity_from_json(j.at("identity"));
      r.modifiers = modifiers_from_json(j.at("modifiers"));
      r.hide = j.at("hide").get<bool>();
      r.doc_comment = j.at("doc_comment").get<std::string>();
      r.raw_doc_comment = j.at("raw_doc_comment").get<std::string>();
      r.body = optional_from_json(j.at("body"));
      r.raw_body = optional_from_json(j.at("raw_body"));
      r.file = j.at("file").get<std::string>();
      r.lines = {j.at("lines").at(0).get<int>(), j.at("lines").at(1).get<int>()};
      auto key = r.identity;
      snapshot.methods.emplace(std::move(key), std::move(r));
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("corrupt snapshot cache: ") + e.what());
  }
  if (header) throw Error("corrupt snapshot cache: missing header");
  return snapshot;
}

std::string diagnostics_jsonl(std::string_view scope, const std::vector<Diagnostic>& diagnostics) {
  std::string out;
  for (const auto& d : diagnostics) {
    append_line(out, Json{{"scope", scope}, {"file", d.file}, {"message", d.message}});
  }
  return out;
}

std::string sems_jsonl(const std::vector<SemEntry>& entries, bool strict) {
  std::string out;
  for (const auto& e : entries) {
    const ModifierState old_state{e.old_record.modifiers, e.old_record.hide};
    const ModifierState new_state{e.new_record.modifiers, e.new_record.hide};
    append_line(out, Json{{"identity", identity_json(e.identity)},
                          {"old_version", e.old_version},
                          {"new_version", e.new_version},
                          {"change_class", to_string(e.change_class)},
                          {"is_pasem", e.is_pasem},
                          {"modifier_old", old_state.label()},
                          {"modifier_new", new_state.label()},
                          {"old_body_hash", body_hash(e.old_record, strict)},
                          {"new_body_hash", body_hash(e.new_record, strict)},
                          {"old_file", e.old_record.file},
                          {"new_file", e.new_record.file},
                          {"old_lines", lines_json(e.old_record.lines)},
                          {"new_lines", lines_json(e.new_record.lines)}});
  }
  return out;
}

std::vector<SemReportRow> parse_sems_jsonl(std::string_view text) {
  std::vector<SemReportRow> rows;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    try {
      auto j = Json::parse(line);
      SemReportRow row;
      row.identity = identity_from_json(j.at("identity"));
      row.old_version = j.at("old_version").get<std::string>();
      row.new_version = j.at("new_version").get<std::string>();
      row.is_pasem = j.at("is_pasem").get<bool>();
      rows.push_back(std::move(row));
    } catch (const nlohmann::json::exception& e) {
      throw Error("SEM report line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return rows;
}

std::string csv_field(std::string_view text) {
  std::string out = "\"";
  for (char c : text) {
    switch (c) {
      case '"': out += "\"\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      default: out += c;
    }
  }
  out += '"';
  return out;
}

std::string triage_csv(const std::vector<SemEntry>& entries) {
  std::string out = "identity,change_class,old_body,new_body\n";
  for (const auto& e : entries) {
    out += csv_field(e.identity.display());
    out += ',';
    out += to_string(e.change_class);
    out += ',';
    out += csv_field(e.old_record.raw_body.value_or(""));
    out += ',';
    out += csv_field(e.new_record.raw_body.value_or(""));
    out += '\n';
  }
  return out;
}

std::string census_csv(const std::vector<ModifierCensus>& censuses) {
  std::string out = "old_version,new_version";
  for (Access a : kCensusAccessOrder) {
    for (SubModifier s : kCensusSubOrder) {
      out += ',';
      out += to_string(a);
      out += ':';
      out += to_string(s);
    }
  }
  out += ",entries\n";
  for (const auto& c : censuses) {
    out += c.version_pair.first;
    out += ',';
    out += c.version_pair.second;
    for (Access a : kCensusAccessOrder) {
      for (SubModifier s : kCensusSubOrder) {
        out += ',';
        out += std::to_string(c.at(a, s));
      }
    }
    out += ',';
    out += std::to_string(c.total_entries());
    out += '\n';
  }
  return out;
}

std::string chains_jsonl(const std::vector<EvolutionChain>& chains) {
  std::string out;
  for (const auto& c : chains) {
    Json events = Json::array();
    for (const auto& e : c.events) {
      Json kinds = Json::array();
      for (auto k : e.kinds) kinds.push_back(to_string(k));
      events.push_back(
          Json{{"old_version", e.old_version}, {"new_version", e.new_version}, {"kinds", kinds}});
    }
    append_line(out, Json{{"identity", identity_json(c.identity)},
                          {"silent_update_count", c.silent_update_count},
                          {"late_doc_update", c.late_doc_update},
                          {"gapped", c.gapped},
                          {"latest_is_pasem", c.latest_is_pasem},
                          {"events", events}});
  }
  return out;
}

std::string histogram_csv(const std::map<int, int>& histogram) {
  std::string out = "updates,methods\n";
  for (const auto& [updates, methods] : histogram) {
    out += std::to_string(updates) + "," + std::to_string(methods) + "\n";
  }
  return out;
}

std::string transitions_csv(const TransitionGraph& graph) {
  std::string out = "src,dst,weight\n";
  for (const auto& [edge, weight] : graph.sorted_edges()) {
    out += edge.first + "," + edge.second + "," + std::to_string(weight) + "\n";
  }
  return out;
}

std::string findings_jsonl(const std::vector<UsageFinding>& findings) {
  std::string out;
  for (const auto& f : findings) {
    Json guard = nullptr;
    if (f.guard) {
      guard = Json{{"comparison", to_string(f.guard->comparison)},
                   {"level", f.guard->level},
                   {"branch", to_string(f.guard->branch)},
                   {"guard_line", f.guard->guard_line}};
    }
    append_line(out, Json{{"identity", identity_json(f.pasem)},
                          {"client", f.client},
                          {"file", f.client_file},
                          {"call_line", f.call_line},
                          {"confidence", to_string(f.confidence)},
                          {"guard", guard}});
  }
  return out;
}

std::string usage_summary_json(const UsageSummary& s) {
  Json clients = Json::array();
  for (const auto& c : s.clients) {
    clients.push_back(Json{{"client", c.client},
                           {"used", c.used},
                           {"protected", c.protected_},
                           {"unprotected", c.unprotected},
                           {"findings", c.findings},
                           {"protected_findings", c.protected_findings},
                           {"unprotected_findings", c.unprotected_findings}});
  }
  Json levels = Json::array();
  for (const auto& [id, set] : s.guard_levels) {
    levels.push_back(Json{{"identity", identity_json(id)}, {"levels", set}});
  }
  Json inconsistent = Json::array();
  for (const auto& id : s.inconsistent_guard_levels) inconsistent.push_back(identity_json(id));
  Json j{{"clients", clients},
         {"total_findings", s.total_findings},
         {"protected_findings", s.protected_findings},
         {"unprotected_findings", s.unprotected_findings},
         {"clients_using", s.clients_using},
         {"client_usage_fraction", s.client_usage_fraction},
         {"distinct_pasems_used", s.distinct_pasems_used},
         {"pasem_coverage_fraction", s.pasem_coverage_fraction},
         {"guard_levels", levels},
         {"inconsistent_guard_levels", inconsistent}};
  return j.dump(2) + "\n";
}

std::string ranking_csv(const std::vector<std::pair<MethodIdentity, int>>& ranking) {
  std::string out = "rank,identity,protected_count\n";
  int rank = 0;
  for (const auto& [id, count] : ranking) {
    out += std::to_string(++rank) + "," + csv_field(id.display()) + "," + std::to_string(count) +
           "\n";
  }
  return out;
}

std::string stats_json(const std::vector<MetricResult>& results) {
  Json j = Json::object();
  for (const auto& r : results) {
    j[r.metric] = Json{{"r", r.test.r},
                       {"p", r.test.p},
                       {"n", r.test.n},
                       {"method", to_string(r.test.method)}};
  }
  return j.dump(2) + "\n";
}

std::string gnuplot_dat(const MetricTable& table, std::size_t metric) {
  std::ostringstream out;
  out.precision(17);
  out << "# pair " << table.metric_names.at(metric) << ' ' << table.y_name << '\n';
  for (std::size_t i = 0; i < table.labels.size(); ++i) {
    out << '"' << table.labels[i] << "\" " << table.metrics[metric][i] << ' ' << table.y[i]
        << '\n';
  }
  return out.str();
}

void write_file(const std::filesystem::path& path, std::string_view content) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write " + path.string());
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw Error("cannot write " + path.string());
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace silentdiff::report
