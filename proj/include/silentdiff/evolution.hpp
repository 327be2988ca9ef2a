#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "silentdiff/semdiff.hpp"

namespace silentdiff {

enum class EventKind { SilentBodyChange, CommentChange, ModifierChange };
std::string_view to_string(EventKind kind);

struct ChainEvent {
  std::string old_version;
  std::string new_version;
  std::size_t pair_index = 0;  // position of the adjacent pair in release order
  std::vector<EventKind> kinds;  // sorted, unique
};

/// Event timeline for one identity over a run of consecutive snapshots in
/// which it is present. An identity missing from an intermediate snapshot
/// yields one chain per run, all flagged `gapped`.
struct EvolutionChain {
  MethodIdentity identity;
  std::vector<ChainEvent> events;
  int silent_update_count = 0;
  bool late_doc_update = false;
  bool gapped = false;
  /// is_pasem of the most recent SemEntry of this identity (across all runs).
  bool latest_is_pasem = false;
};

struct ChainAnalysis {
  std::vector<EvolutionChain> chains;
  /// SEMs of every adjacent pair, in release order.
  std::vector<std::vector<SemEntry>> sems_per_pair;
};

/// Runs SEM detection over every adjacent pair and folds the results into
/// per-identity chains, sorted by identity. Throws Error for fewer than two
/// snapshots.
ChainAnalysis build_chain_analysis(const std::vector<ApiSnapshot>& snapshots, bool strict);
std::vector<EvolutionChain> build_chains(const std::vector<ApiSnapshot>& snapshots, bool strict);

/// update count -> number of distinct identities. Chains of one identity are
/// summed first so every silently-evolved identity is counted once.
std::map<int, int> update_histogram(const std::vector<EvolutionChain>& chains, bool pasem_only);

std::vector<EvolutionChain> late_doc_updates(const std::vector<EvolutionChain>& chains);

struct TransitionGraph {
  std::vector<std::string> nodes;  // sorted
  std::map<std::pair<std::string, std::string>, int> edges;

  int total_weight() const;
  /// Edges ordered by weight descending, then (src, dst).
  std::vector<std::pair<std::pair<std::string, std::string>, int>> sorted_edges() const;
};

TransitionGraph transition_graph(const std::vector<SemEntry>& entries);

}  // namespace silentdiff
