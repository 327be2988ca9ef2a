#include <gtest/gtest.h>

#include "silentdiff/evolution.hpp"

namespace silentdiff {
namespace {

MethodRecord rec(const std::string& name, const std::string& doc, std::optional<std::string> body,
                 ModifierSet mods = {Access::Public}) {
  MethodRecord r;
  r.identity = {"p.C", name, {}, "void"};
  r.modifiers = mods;
  r.raw_doc_comment = doc;
  r.doc_comment = normalize_comment(doc, false);
  if (body) {
    r.raw_body = body;
    r.body = normalize_body(*body, false);
  }
  return r;
}

ApiSnapshot snap(const std::string& label, std::vector<MethodRecord> recs) {
  ApiSnapshot s;
  s.descriptor.label = label;
  for (auto& r : recs) s.methods.emplace(r.identity, std::move(r));
  return s;
}

TEST(Chains, RepeatedSilentUpdates) {
  auto chains = build_chains({snap("v1", {rec("m", "/** d */", "{ a(); }")}),
                              snap("v2", {rec("m", "/** d */", "{ b(); }")}),
                              snap("v3", {rec("m", "/** d */", "{ c(); }")})},
                             false);
  ASSERT_EQ(chains.size(), 1u);
  EXPECT_EQ(chains[0].silent_update_count, 2);
  EXPECT_FALSE(chains[0].late_doc_update);
  EXPECT_FALSE(chains[0].gapped);
  ASSERT_EQ(chains[0].events.size(), 2u);
  EXPECT_EQ(chains[0].events[1].pair_index, 1u);
}

TEST(Chains, LateDocUpdate) {
  auto chains = build_chains({snap("v1", {rec("m", "/** d */", "{ a(); }")}),
                              snap("v2", {rec("m", "/** d */", "{ b(); }")}),
                              snap("v3", {rec("m", "/** new d */", "{ b(); }")})},
                             false);
  ASSERT_EQ(chains.size(), 1u);
  EXPECT_TRUE(chains[0].late_doc_update);
  EXPECT_EQ(late_doc_updates(chains).size(), 1u);
}

TEST(Chains, SamePairCommentChangeIsNotLate) {
  auto chains = build_chains({snap("v1", {rec("m", "/** d */", "{ a(); }"), rec("n", "/** d */", "{ a(); }")}),
                              snap("v2", {rec("m", "/** d */", "{ b(); }"), rec("n", "/** e */", "{ b(); }")})},
                             false);
  ASSERT_EQ(chains.size(), 1u);
  EXPECT_EQ(chains[0].identity.method_name, "m");
  EXPECT_TRUE(late_doc_updates(chains).empty());
}

TEST(Chains, GapSplitsChain) {
  auto chains = build_chains({snap("v1", {rec("m", "/** d */", "{ a(); }")}),
                              snap("v2", {rec("m", "/** d */", "{ b(); }")}),
                              snap("v3", {}),
                              snap("v4", {rec("m", "/** d */", "{ c(); }")}),
                              snap("v5", {rec("m", "/** d */", "{ d(); }")})},
                             false);
  ASSERT_EQ(chains.size(), 2u);
  EXPECT_TRUE(chains[0].gapped && chains[1].gapped);
  EXPECT_EQ(chains[0].silent_update_count, 1);
  EXPECT_EQ(chains[1].silent_update_count, 1);
  // Counted once per identity.
  EXPECT_EQ(update_histogram(chains, false), (std::map<int, int>{{2, 1}}));
}

TEST(Chains, FewerThanTwoSnapshotsThrows) {
  EXPECT_THROW(build_chains({snap("v1", {})}, false), Error);
  EXPECT_THROW(build_chains({}, false), Error);
}

TEST(Histogram, Buckets) {
  std::vector<EvolutionChain> chains(3);
  const int counts[] = {1, 1, 2};
  for (int i = 0; i < 3; ++i) {
    chains[i].identity = {"p.C", "m" + std::to_string(i), {}, "void"};
    chains[i].silent_update_count = counts[i];
    chains[i].latest_is_pasem = i != 0;
  }
  EXPECT_EQ(update_histogram(chains, false), (std::map<int, int>{{1, 2}, {2, 1}}));
  EXPECT_EQ(update_histogram(chains, true), (std::map<int, int>{{1, 1}, {2, 1}}));
  EXPECT_TRUE(update_histogram({}, false).empty());
}

TEST(Histogram, WeightedSumMatchesEvents) {
  std::vector<ApiSnapshot> snaps;
  for (int v = 0; v < 5; ++v) {
    std::vector<MethodRecord> recs;
    for (int m = 0; m < 6; ++m) {
      // Method m changes its body every (m+1)-th release.
      recs.push_back(rec("m" + std::to_string(m), "/** d */",
                         "{ v" + std::to_string(v / (m + 1)) + "(); }"));
    }
    snaps.push_back(snap("v" + std::to_string(v), recs));
  }
  auto chains = build_chains(snaps, false);
  int events = 0;
  for (const auto& c : chains) {
    for (const auto& e : c.events) {
      events += std::count(e.kinds.begin(), e.kinds.end(), EventKind::SilentBodyChange);
    }
  }
  int weighted = 0;
  for (auto [bucket, n] : update_histogram(chains, false)) weighted += bucket * n;
  EXPECT_EQ(weighted, events);
  EXPECT_EQ(events, 4 + 2 + 1 + 1);
}

TEST(Transitions, AbstractAndNativeConversions) {
  SemEntry a, b, c;
  a.modifier_transition = ModifierTransition{{{Access::Public}, false}, {{Access::Public, false, false, true}, false}};
  b.modifier_transition = ModifierTransition{{{Access::Public, false, false, false, true}, false}, {{Access::Public}, false}};
  auto g = transition_graph({a, b, c, a});
  EXPECT_EQ(g.total_weight(), 3);
  auto edges = g.sorted_edges();
  ASSERT_EQ(edges.size(), 2u);
  EXPECT_EQ(edges[0].first, (std::pair<std::string, std::string>{"public", "public abstract"}));
  EXPECT_EQ(edges[0].second, 2);
  EXPECT_EQ(edges[1].first, (std::pair<std::string, std::string>{"public native", "public"}));
  EXPECT_EQ(g.nodes, (std::vector<std::string>{"public", "public abstract", "public native"}));
}

}  // namespace
}  // namespace silentdiff
