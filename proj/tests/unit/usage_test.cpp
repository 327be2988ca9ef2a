#include <gtest/gtest.h>

#include "silentdiff/usage.hpp"
#include "support/test_support.hpp"

namespace silentdiff {
namespace {

const MethodIdentity kSqlType{"android.database.DatabaseUtils", "getSqlStatementType", {"String"}, "int"};
const MethodIdentity kWriteToParcel{"android.text.TextUtils", "writeToParcel",
                                    {"CharSequence", "Parcel", "int"}, "void"};
const MethodIdentity kHeight{"android.graphics.Picture", "getHeight", {}, "int"};

std::vector<UsageFinding> scan(const std::string& body, const std::vector<MethodIdentity>& targets) {
  return scan_source("app", "A.java", "class A {\nvoid run() {\n" + body + "\n}\n}", targets,
                     VersionCodes::builtin());
}

TEST(Scan, ReceiverVariableIsNameAndArity) {
  auto f = scan("utils.getSqlStatementType(sql);", {kSqlType});
  ASSERT_EQ(f.size(), 1u);
  EXPECT_EQ(f[0].confidence, MatchConfidence::NameAndArity);
  EXPECT_EQ(f[0].call_line, 3);
  EXPECT_EQ(f[0].pasem, kSqlType);
  EXPECT_FALSE(f[0].guard.has_value());
}

TEST(Scan, ClassReceiverIsQualified) {
  auto f = scan("TextUtils.writeToParcel(cs, p, 0);", {kWriteToParcel});
  ASSERT_EQ(f.size(), 1u);
  EXPECT_EQ(f[0].confidence, MatchConfidence::Qualified);
}

TEST(Scan, NoMatch) {
  EXPECT_TRUE(scan("foo.bar(1);", {kSqlType}).empty());
  // Wrong arity.
  EXPECT_TRUE(scan("utils.getSqlStatementType(a, b);", {kSqlType}).empty());
  // Mentions in comments and strings.
  EXPECT_TRUE(scan("// getSqlStatementType(x)\nString s = \"getSqlStatementType(x)\";", {kSqlType}).empty());
}

TEST(Scan, DeclarationsAreNotCalls) {
  auto f = scan_source("app", "A.java",
                       "class A { public int getHeight() { return 1; } int x() { return getHeight(); } }",
                       {kHeight}, VersionCodes::builtin());
  ASSERT_EQ(f.size(), 1u);
}

TEST(Scan, NestedArgumentsCountOnce) {
  auto f = scan("TextUtils.writeToParcel(f(a, b), new Parcel(), g(h(1), 2));", {kWriteToParcel});
  ASSERT_EQ(f.size(), 1u);
}

TEST(Scan, GuardAttached) {
  auto f = scan("if (Build.VERSION.SDK_INT < 28) { utils.getSqlStatementType(sql); }", {kSqlType});
  ASSERT_EQ(f.size(), 1u);
  ASSERT_TRUE(f[0].guard.has_value());
  EXPECT_EQ(f[0].guard->level, 28);
}

TEST(CallSites, Arity) {
  auto toks = strip_comments(tokenize_source("class A { void r() { a(); b(1); c(x, y(2, 3)); } }"));
  auto sites = find_call_sites(toks);
  std::vector<std::size_t> arities;
  for (const auto& s : sites) arities.push_back(s.arity);
  EXPECT_EQ(arities, (std::vector<std::size_t>{0, 1, 2, 2}));
}

UsageFinding finding(const MethodIdentity& id, const std::string& client, bool guarded,
                     int level = 28) {
  UsageFinding f;
  f.pasem = id;
  f.client = client;
  f.client_file = "A.java";
  if (guarded) {
    GuardInfo g;
    g.level = level;
    f.guard = g;
  }
  return f;
}

TEST(Aggregate, OneClientExample) {
  std::vector<UsageFinding> f = {finding(kSqlType, "c", true), finding(kSqlType, "c", false),
                                 finding(kWriteToParcel, "c", false), finding(kHeight, "c", false)};
  auto s = aggregate_usage(f, {"c"}, 10);
  ASSERT_EQ(s.clients.size(), 1u);
  EXPECT_EQ(s.clients[0].used, 3);
  EXPECT_EQ(s.clients[0].protected_, 1);
  EXPECT_EQ(s.clients[0].unprotected, 2);
  EXPECT_EQ(s.total_findings, 4);
  EXPECT_EQ(s.protected_findings + s.unprotected_findings, s.total_findings);
  EXPECT_DOUBLE_EQ(s.pasem_coverage_fraction, 0.3);
}

TEST(Aggregate, ClientsWithoutFindings) {
  auto s = aggregate_usage({finding(kSqlType, "a", true)}, {"a", "b"}, 1);
  EXPECT_EQ(s.clients_using, 1);
  EXPECT_DOUBLE_EQ(s.client_usage_fraction, 0.5);
  EXPECT_EQ(s.clients[1].client, "b");
  EXPECT_EQ(s.clients[1].used, 0);
  auto empty = aggregate_usage({}, {}, 0);
  EXPECT_EQ(empty.total_findings, 0);
  EXPECT_DOUBLE_EQ(empty.client_usage_fraction, 0.0);
}

TEST(Aggregate, InconsistentGuardLevels) {
  auto s = aggregate_usage({finding(kSqlType, "a", true, 27), finding(kSqlType, "b", true, 28),
                            finding(kHeight, "a", true, 21), finding(kHeight, "b", true, 21)},
                           {"a", "b"}, 2);
  EXPECT_EQ(s.inconsistent_guard_levels, std::vector<MethodIdentity>{kSqlType});
  EXPECT_EQ(s.guard_levels.at(kSqlType), (std::set<int>{27, 28}));
}

TEST(Rank, OrderAndTruncation) {
  std::vector<UsageFinding> f;
  for (int i = 0; i < 5; ++i) f.push_back(finding(kSqlType, "a", true));
  for (int i = 0; i < 5; ++i) f.push_back(finding(kHeight, "a", true));
  for (int i = 0; i < 2; ++i) f.push_back(finding(kWriteToParcel, "a", true));
  f.push_back(finding(kWriteToParcel, "a", false));
  auto r = rank_protected(f, 10);
  ASSERT_EQ(r.size(), 3u);
  // Ties fall back to identity order.
  EXPECT_EQ(r[0], (std::pair<MethodIdentity, int>{kSqlType, 5}));
  EXPECT_EQ(r[1], (std::pair<MethodIdentity, int>{kHeight, 5}));
  EXPECT_EQ(r[2], (std::pair<MethodIdentity, int>{kWriteToParcel, 2}));
  EXPECT_EQ(rank_protected(f, 1).size(), 1u);
  EXPECT_TRUE(rank_protected({finding(kSqlType, "a", false)}, 10).empty());
}

TEST(ScanCallSites, GuardFixture) {
  auto r = scan_call_sites(testing::fixture("guards/app"), "app", {kSqlType, kHeight},
                           VersionCodes::builtin());
  EXPECT_TRUE(r.diagnostics.empty());
  ASSERT_EQ(r.findings.size(), 3u);
  int guarded = 0;
  for (const auto& f : r.findings) {
    guarded += f.guard.has_value();
    if (f.guard) {
      EXPECT_LE(f.guard->guard_line, f.call_line);
    }
  }
  EXPECT_EQ(guarded, 2);
}

TEST(ScanCallSites, MalformedFileIsDiagnosed) {
  testing::TempDir tmp("scan");
  testing::spit(tmp / "Ok.java", "class Ok { void r() { p.getHeight(); } }");
  testing::spit(tmp / "Bad.java", "class Bad { void r() { p.getHeight(; } }");
  auto r = scan_call_sites(tmp.path(), "c", {kHeight}, VersionCodes::builtin());
  EXPECT_EQ(r.findings.size(), 1u);
  ASSERT_EQ(r.diagnostics.size(), 1u);
  EXPECT_EQ(r.diagnostics[0].file, "Bad.java");
}

}  // namespace
}  // namespace silentdiff
