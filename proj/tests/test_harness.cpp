#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <cstring>
#include <set>

#include "fraclap/error.hpp"
#include "fraclap/harness.hpp"

using namespace fraclap;

TEST(Registry, NamesAreUniqueAndFindable) {
  std::set<std::string> names;
  for (const ExperimentInfo& e : experiments()) {
    EXPECT_TRUE(names.insert(e.name).second) << e.name;
    EXPECT_EQ(find_experiment(e.name), &e);
    EXPECT_FALSE(e.summary.empty());
  }
  EXPECT_EQ(names.size(), 14u);
  EXPECT_TRUE(names.count("exp_ball_identity"));
  EXPECT_TRUE(names.count("exp_lapsdeltas"));
  EXPECT_EQ(find_experiment("exp_missing"), nullptr);
}

TEST(Report, VerdictFollowsTolerances) {
  ExperimentReport r;
  EXPECT_EQ(r.verdict(), Verdict::Pass);
  EXPECT_TRUE(check(r, {}, "a", 1.0, "<=", 0.5));
  r.warn("drifted");
  EXPECT_EQ(r.verdict(), Verdict::Warn);
  EXPECT_FALSE(check(r, {{"b", 0.1}}, "b", 1.0, "<=", 0.5));
  EXPECT_EQ(r.verdict(), Verdict::Fail);
  EXPECT_EQ(r.find_tolerance("a")->source, "default");
  EXPECT_EQ(r.find_tolerance("b")->source, "config");
  EXPECT_DOUBLE_EQ(r.find_tolerance("b")->value, 0.1);
  EXPECT_THROW(check(r, {}, "c", 1.0, "~", 0.0), InvalidArgument);
  EXPECT_STREQ(to_string(Verdict::Warn), "WARN");
}

TEST(Report, Comparators) {
  ExperimentReport r;
  EXPECT_TRUE(check(r, {}, "lt", 1.0, "<", 0.99));
  EXPECT_FALSE(check(r, {}, "lt_eq", 1.0, "<", 1.0));
  EXPECT_TRUE(check(r, {}, "ge", 1.0, ">=", 1.0));
  EXPECT_FALSE(check(r, {}, "gt", 1.0, ">", 1.0));
  EXPECT_FALSE(check(r, {}, "nan", 1.0, "<=", std::nan("")));
}

class EveryExperiment : public ::testing::TestWithParam<std::string> {};

TEST_P(EveryExperiment, DeclaresThresholdsAndSeries) {
  const ExperimentInfo* e = find_experiment(GetParam());
  ASSERT_NE(e, nullptr);
  const ExperimentReport a = e->run({});
  EXPECT_EQ(a.name, e->name);
  EXPECT_FALSE(a.tolerances.empty());
  EXPECT_FALSE(a.series.empty());
  for (const Series& s : a.series) {
    EXPECT_FALSE(s.x.empty()) << s.label;
    EXPECT_EQ(s.x.size(), s.y.size()) << s.label;
  }
  const bool all_passed =
      std::all_of(a.tolerances.begin(), a.tolerances.end(), [](const Tolerance& t) { return t.passed; });
  EXPECT_EQ(a.verdict() == Verdict::Fail, !all_passed);
  for (const Tolerance& t : a.tolerances) {
    EXPECT_TRUE(t.comparator == "<=" || t.comparator == "<" || t.comparator == ">=" || t.comparator == ">");
    EXPECT_EQ(t.source, "default");
  }
}

TEST_P(EveryExperiment, Deterministic) {
  const ExperimentInfo* e = find_experiment(GetParam());
  const ExperimentReport a = e->run({});
  const ExperimentReport b = e->run({});
  ASSERT_EQ(a.metrics.size(), b.metrics.size());
  for (std::size_t i = 0; i < a.metrics.size(); ++i) {
    EXPECT_EQ(a.metrics[i].first, b.metrics[i].first);
    EXPECT_EQ(std::memcmp(&a.metrics[i].second, &b.metrics[i].second, sizeof(double)), 0) << a.metrics[i].first;
  }
}

INSTANTIATE_TEST_SUITE_P(Registry, EveryExperiment, [] {
  std::vector<std::string> names;
  for (const auto& e : experiments()) names.push_back(e.name);
  return ::testing::ValuesIn(names);
}(), [](const auto& info) { return info.param; });

TEST(Experiments, ToleranceOverrideIsRecorded) {
  ExperimentConfig cfg;
  cfg.tolerances["max_deviation"] = 1e-30;
  const ExperimentReport r = exp_ball_identity(cfg);
  const Tolerance* t = r.find_tolerance("max_deviation");
  ASSERT_NE(t, nullptr);
  EXPECT_EQ(t->source, "config");
  EXPECT_FALSE(t->passed);
  EXPECT_EQ(r.verdict(), Verdict::Fail);
}

TEST(Experiments, ParametersReachTheReport) {
  ExperimentConfig cfg;
  cfg.s = 0.75;
  const ExperimentReport r = exp_ball_identity(cfg);
  EXPECT_EQ(std::get<double>(r.params.front().second), 0.75);
  EXPECT_EQ(r.verdict(), Verdict::Pass);
}

TEST(Experiments, OneDimensionalOnlyRejectsN2) {
  ExperimentConfig cfg;
  cfg.n = 2;
  EXPECT_THROW((void)exp_lapsdeltas(cfg), InvalidArgument);
  EXPECT_THROW((void)exp_solver_convergence(cfg), InvalidArgument);
  cfg.n = 3;
  EXPECT_THROW((void)exp_ball_identity(cfg), InvalidArgument);
}

TEST(Experiments, InvalidOrder) {
  ExperimentConfig cfg;
  cfg.s = 1.5;
  EXPECT_THROW((void)exp_ball_identity(cfg), InvalidArgument);
}

TEST(Experiments, CoarseGridRejected) {
  ExperimentConfig cfg;
  cfg.N = 32;
  EXPECT_THROW((void)exp_boundary_behavior(cfg), GridTooCoarse);
  EXPECT_THROW((void)exp_solver_convergence(cfg), InvalidArgument);
}

TEST(Experiments, RichardsonDirection) {
  // Quotient sup at N and N/2 against the closed form.
  const ExperimentReport r = exp_boundary_behavior({});
  EXPECT_TRUE(r.warnings.empty());
  EXPECT_LT(std::abs(r.find_metric("quotient_sup_ratio") - 1.0), 0.05);
}
