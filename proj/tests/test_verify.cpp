#include "linkage_lab/verify.hpp"

#include <gtest/gtest.h>

#include <cstdlib>

using namespace linkage_lab;

namespace {

struct ThreadsEnv {
  explicit ThreadsEnv(const char* v) { setenv("LINKAGELAB_THREADS", v, 1); }
  ~ThreadsEnv() { unsetenv("LINKAGELAB_THREADS"); }
};

}  // namespace

TEST(Verify, ThreadCountFromEnvironment) {
  {
    ThreadsEnv env("3");
    EXPECT_EQ(thread_count(), 3u);
  }
  {
    ThreadsEnv env("zero");
    EXPECT_GE(thread_count(), 1u);
  }
  {
    ThreadsEnv env("-2");
    EXPECT_GE(thread_count(), 1u);
  }
}

TEST(Verify, EscapingExceptionBecomesFailure) {
  auto r = run_instances(
      "demo", 3,
      [](std::size_t i) {
        if (i == 1) throw std::runtime_error("boom");
        CheckReport c;
        c.pass();
        return c;
      },
      [](std::size_t i) { return "case " + std::to_string(i); });
  EXPECT_EQ(r.instances, 3);
  EXPECT_EQ(r.passes, 2);
  ASSERT_EQ(r.failures.size(), 1u);
  EXPECT_NE(r.failures[0].find("case 1"), std::string::npos);
  EXPECT_NE(r.failures[0].find("boom"), std::string::npos);
  EXPECT_FALSE(r.ok());
}

TEST(Verify, PropAffGridCounts) {
  auto r = verify_prop_aff(PropAffGrid{});
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.instances, 44);
  PropAffGrid g;
  g.types = {"A2", "B2", "G2"};
  EXPECT_EQ(verify_prop_aff(g).instances, 33);
}

TEST(Verify, SmallGridsPass) {
  StrongLinkageGrid sl;
  sl.types = {"A1"};
  sl.ells = {5};
  sl.box_factor = 1;
  EXPECT_TRUE(verify_strong_linkage(sl).ok());

  BwbGrid b;
  b.box = 4;
  auto br = verify_bwb(b);
  EXPECT_TRUE(br.ok());
  EXPECT_EQ(br.instances, 81);

  auto cr = verify_characters(CharacterGrid{});
  EXPECT_TRUE(cr.ok()) << (cr.failures.empty() ? "" : cr.failures.front());

  auto st = verify_stabilization(StabilizationGrid{});
  EXPECT_TRUE(st.ok());
  EXPECT_EQ(st.instances, 4);

  TriangleGrid t;
  t.instances = {{"A1", 5}};
  t.max_length = 2;
  EXPECT_TRUE(verify_triangle(t).ok());

  QuantumGrid q;
  q.max_abs_n = 4;
  q.max_t = 4;
  q.max_d = 2;
  q.pascal_max_n = 4;
  EXPECT_TRUE(verify_quantum(q).ok());

  AlcoveGrid a;
  a.wall_ells = {5};
  a.max_length = 3;
  a.max_height = 2;
  EXPECT_TRUE(verify_alcove(a).ok());
}

TEST(Verify, StabilizationFrozenValueMismatchIsReported) {
  StabilizationGrid g;
  g.cases = {{"A1", "[0]", "[-4]", 3, std::nullopt}};
  auto r = verify_stabilization(g);
  EXPECT_FALSE(r.ok());
  EXPECT_EQ(r.failures.size(), 1u);
}

TEST(Verify, ReportsDoNotDependOnThreadCount) {
  TriangleGrid t;
  t.max_length = 3;
  CheckReport one, many;
  {
    ThreadsEnv env("1");
    one = verify_triangle(t);
  }
  {
    ThreadsEnv env("5");
    many = verify_triangle(t);
  }
  EXPECT_EQ(one.instances, many.instances);
  EXPECT_EQ(one.passes, many.passes);
  EXPECT_EQ(one.failures, many.failures);
  EXPECT_EQ(one.stats, many.stats);
}
