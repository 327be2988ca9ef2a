#include "silentdiff/evolution.hpp"

#include <algorithm>
#include <set>

namespace silentdiff {

std::string_view to_string(EventKind kind) {
  switch (kind) {
    case EventKind::SilentBodyChange: return "silent-body-change";
    case EventKind::CommentChange: return "comment-change";
    case EventKind::ModifierChange: return "modifier-change";
  }
  return "";
}

namespace {

bool has_kind(const ChainEvent& e, EventKind k) {
  return std::find(e.kinds.begin(), e.kinds.end(), k) != e.kinds.end();
}

bool comment_changed(const MethodRecord& a, const MethodRecord& b, bool strict) {
  if (!a.has_doc() && !b.has_doc()) return false;
  if (a.has_doc() != b.has_doc()) return true;
  return comments_differ(a, b, strict);
}

void finish_chain(EvolutionChain& chain) {
  chain.silent_update_count = 0;
  chain.late_doc_update = false;
  bool silent_seen = false;
  std::size_t first_silent_pair = 0;
  for (const auto& e : chain.events) {
    if (has_kind(e, EventKind::SilentBodyChange)) {
      if (!silent_seen) first_silent_pair = e.pair_index;
      silent_seen = true;
      ++chain.silent_update_count;
    }
    if (silent_seen && has_kind(e, EventKind::CommentChange) && e.pair_index > first_silent_pair) {
      chain.late_doc_update = true;
    }
  }
}

}  // namespace

ChainAnalysis build_chain_analysis(const std::vector<ApiSnapshot>& snapshots, bool strict) {
  if (snapshots.size() < 2) throw Error("evolution analysis needs at least two snapshots");
  ChainAnalysis result;
  const std::size_t pairs = snapshots.size() - 1;

  std::map<MethodIdentity, std::vector<std::size_t>> sem_pairs;  // identity -> pair indices
  std::map<MethodIdentity, bool> latest_pasem;
  for (std::size_t p = 0; p < pairs; ++p) {
    result.sems_per_pair.push_back(detect_sems(snapshots[p], snapshots[p + 1], strict));
    for (const auto& e : result.sems_per_pair.back()) {
      sem_pairs[e.identity].push_back(p);
      latest_pasem[e.identity] = e.is_pasem;
    }
  }

  for (const auto& [identity, silent_at] : sem_pairs) {
    // Presence runs over the snapshot list.
    std::vector<std::pair<std::size_t, std::size_t>> runs;  // [first, last] snapshot index
    for (std::size_t s = 0; s < snapshots.size(); ++s) {
      if (!snapshots[s].methods.count(identity)) continue;
      if (!runs.empty() && runs.back().second + 1 == s) {
        runs.back().second = s;
      } else {
        runs.emplace_back(s, s);
      }
    }
    const bool gapped = runs.size() > 1;
    for (auto [first, last] : runs) {
      EvolutionChain chain;
      chain.identity = identity;
      chain.gapped = gapped;
      chain.latest_is_pasem = latest_pasem[identity];
      for (std::size_t p = first; p < last; ++p) {
        const auto& a = snapshots[p].methods.at(identity);
        const auto& b = snapshots[p + 1].methods.at(identity);
        ChainEvent ev{snapshots[p].descriptor.label, snapshots[p + 1].descriptor.label, p, {}};
        if (std::binary_search(silent_at.begin(), silent_at.end(), p)) {
          ev.kinds.push_back(EventKind::SilentBodyChange);
        }
        if (comment_changed(a, b, strict)) ev.kinds.push_back(EventKind::CommentChange);
        if (diff_modifiers(a, b)) ev.kinds.push_back(EventKind::ModifierChange);
        if (!ev.kinds.empty()) chain.events.push_back(std::move(ev));
      }
      if (chain.events.empty()) continue;
      finish_chain(chain);
      result.chains.push_back(std::move(chain));
    }
  }
  return result;
}

std::vector<EvolutionChain> build_chains(const std::vector<ApiSnapshot>& snapshots, bool strict) {
  return build_chain_analysis(snapshots, strict).chains;
}

std::map<int, int> update_histogram(const std::vector<EvolutionChain>& chains, bool pasem_only) {
  std::map<MethodIdentity, int> per_identity;
  for (const auto& c : chains) {
    if (pasem_only && !c.latest_is_pasem) continue;
    per_identity[c.identity] += c.silent_update_count;
  }
  std::map<int, int> histogram;
  for (const auto& [identity, count] : per_identity) {
    if (count >= 1) ++histogram[count];
  }
  return histogram;
}

std::vector<EvolutionChain> late_doc_updates(const std::vector<EvolutionChain>& chains) {
  std::vector<EvolutionChain> out;
  std::copy_if(chains.begin(), chains.end(), std::back_inserter(out),
               [](const EvolutionChain& c) { return c.late_doc_update; });
  std::stable_sort(out.begin(), out.end(),
                   [](const auto& a, const auto& b) { return a.identity < b.identity; });
  return out;
}

int TransitionGraph::total_weight() const {
  int total = 0;
  for (const auto& [edge, w] : edges) total += w;
  return total;
}

std::vector<std::pair<std::pair<std::string, std::string>, int>> TransitionGraph::sorted_edges()
    const {
  std::vector<std::pair<std::pair<std::string, std::string>, int>> out(edges.begin(), edges.end());
  std::stable_sort(out.begin(), out.end(),
                   [](const auto& a, const auto& b) { return a.second > b.second; });
  return out;
}

TransitionGraph transition_graph(const std::vector<SemEntry>& entries) {
  TransitionGraph graph;
  std::set<std::string> nodes;
  for (const auto& e : entries) {
    if (!e.modifier_transition) continue;
    auto src = e.modifier_transition->from.label();
    auto dst = e.modifier_transition->to.label();
    nodes.insert(src);
    nodes.insert(dst);
    ++graph.edges[{src, dst}];
  }
  graph.nodes.assign(nodes.begin(), nodes.end());
  return graph;
}

}  // namespace silentdiff
