#include <gtest/gtest.h>

#include "pjp/error.hpp"
#include "pjp/verify.hpp"

using namespace pjp;

TEST(Verify, DefaultKSet) {
  auto ks = default_kset();
  ASSERT_EQ(ks.size(), 6u);
  EXPECT_EQ(ks[0], ratio(1, 2));
  EXPECT_EQ(ks[3], ratio(5, 3));
  for (const auto& k : ks) {
    EXPECT_GT(k, 0);
    EXPECT_LE(k, 3);
  }
  EXPECT_EQ(default_kset(), ks);
  EXPECT_NE(default_kset(kVerifySeed + 1), ks);
}

TEST(Verify, Suites) {
  EXPECT_EQ(suite_criteria("all").size(), 11u);
  EXPECT_EQ(suite_criteria("operators"), (std::vector<int>{7, 8}));
  EXPECT_EQ(suite_criteria("3,1"), (std::vector<int>{3, 1}));
  EXPECT_THROW(suite_criteria("12"), Error);
  EXPECT_THROW(suite_criteria("x"), Error);
  EXPECT_THROW(suite_criteria(""), Error);
}

TEST(Verify, CasesKeepOrder) {
  std::vector<std::function<CaseResult()>> tasks;
  for (int i = 0; i < 40; ++i) tasks.push_back([i] { return CaseResult{std::to_string(i), i % 3 != 0, {}}; });
  auto a = run_cases(tasks, 1), b = run_cases(tasks, 5);
  ASSERT_EQ(a.size(), 40u);
  for (size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].name, std::to_string(i));
    EXPECT_EQ(b[i].name, a[i].name);
    EXPECT_EQ(b[i].pass, a[i].pass);
  }
}

TEST(Verify, SmallCriteria) {
  VerifyOptions o;
  o.box = 2;
  o.kset = {Rational(1)};
  EXPECT_TRUE(run_criterion(1, o).pass());
  EXPECT_TRUE(run_criterion(2, o).pass());
  auto r8 = run_criterion(8, o);
  EXPECT_FALSE(r8.pass());
  EXPECT_NE(r8.summary().find("(2/3) Id"), std::string::npos);
  o.kset = {Rational(-1)};
  EXPECT_THROW(run_criterion(6, o), Error);
}
