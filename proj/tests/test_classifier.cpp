#include <algorithm>

#include "entaxiom/classifier.hpp"
#include "test_support.hpp"

using namespace entaxiom;

namespace {

std::vector<Label> labels(const std::vector<ClassificationRecord>& records) {
  std::vector<Label> out;
  for (const auto& r : records) out.push_back(r.label);
  return out;
}

}  // namespace

TEST(AssignLabel, Precedence) {
  EXPECT_EQ(assign_label(true, true, true, true, true), Label::shannon_equivalent);
  EXPECT_EQ(assign_label(true, true, true, true, false), Label::upper);
  EXPECT_EQ(assign_label(true, false, true, true, false), Label::upper);
  EXPECT_EQ(assign_label(false, true, true, true, false), Label::lower);
  EXPECT_EQ(assign_label(false, false, true, true, false), Label::weak_both);
  EXPECT_EQ(assign_label(false, false, true, false, false), Label::weak_upper);
  EXPECT_EQ(assign_label(false, false, false, true, false), Label::weak_lower);
  EXPECT_EQ(assign_label(false, false, false, false, true), Label::none);
}

TEST(Satisfies, StrongerLabelsMeetWeakerClaims) {
  EXPECT_TRUE(satisfies(Label::upper, GoldClaim::upper));
  EXPECT_FALSE(satisfies(Label::shannon_equivalent, GoldClaim::upper));
  EXPECT_TRUE(satisfies(Label::upper, GoldClaim::weak_upper));
  EXPECT_TRUE(satisfies(Label::weak_both, GoldClaim::weak_upper));
  EXPECT_FALSE(satisfies(Label::lower, GoldClaim::weak_upper));
  EXPECT_TRUE(satisfies(Label::lower, GoldClaim::weak_lower));
  EXPECT_FALSE(satisfies(Label::upper, GoldClaim::weak_both));
  EXPECT_TRUE(satisfies(Label::none, GoldClaim::not_strong));
  EXPECT_TRUE(satisfies(Label::weak_upper, GoldClaim::not_strong));
  EXPECT_FALSE(satisfies(Label::lower, GoldClaim::not_strong));
  EXPECT_FALSE(satisfies(Label::none, GoldClaim::weak_lower));
}

TEST(GoldTable, RangesAreDisjointWithinFamily) {
  const auto rows = gold_table();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = i + 1; j < rows.size(); ++j) {
      if (rows[i].family != rows[j].family) continue;
      for (double x : {0.01, 0.5, 0.99, 1.0, 1.01, 2.0, 100.0}) {
        EXPECT_FALSE(rows[i].range.contains(x) && rows[j].range.contains(x))
            << to_string(rows[i].family) << " " << x;
      }
    }
  }
  EXPECT_EQ(gold_lookup({Family::power_log_eq19, 1.0})->claim, GoldClaim::shannon_equivalent);
  EXPECT_FALSE(gold_lookup({Family::tsallis, 1.0}).has_value());
}

TEST(DefaultGrid, EndpointOnlyWhereClaimed) {
  EXPECT_EQ(default_grid(Family::tsallis).size(), 7u);
  const auto g = default_grid(Family::weighted_log_eq20);
  EXPECT_EQ(g.size(), 8u);
  EXPECT_TRUE(std::is_sorted(g.begin(), g.end()));
  EXPECT_EQ(default_grid(Family::shannon), std::vector<double>{1.0});
}

TEST(Classify, SinglePoints) {
  const CheckConfig cfg;
  const auto t = classify({Family::tsallis, 2.0}, cfg);
  EXPECT_EQ(t.label, Label::upper);
  EXPECT_EQ(t.agrees_with_paper, true);
  const auto r = classify({Family::renyi, 0.5}, cfg);
  EXPECT_EQ(r.label, Label::weak_both);
  EXPECT_EQ(r.agrees_with_paper, true);
  EXPECT_EQ(classify({Family::power_log_eq19, 1.0}, cfg).label, Label::shannon_equivalent);
  EXPECT_EQ(classify({Family::tsallis, 1.0}, cfg).label, Label::shannon_equivalent);
  EXPECT_EQ(classify({Family::shannon, 1.0, 3.0}, cfg).label, Label::shannon_equivalent);
}

TEST(Classify, TsallisDefaultGrid) {
  const auto grid = default_grid(Family::tsallis);
  const auto records = sweep(Family::tsallis, grid, CheckConfig{});
  EXPECT_EQ(labels(records),
            (std::vector<Label>{Label::lower, Label::lower, Label::lower, Label::upper,
                                Label::upper, Label::upper, Label::upper}));
  for (const auto& r : records) {
    EXPECT_TRUE(r.subsumption_consistent);
    EXPECT_EQ(r.agrees_with_paper, true);
  }
}

TEST(Classify, LandsbergVedralAndAbe) {
  const std::vector<double> lv_grid = {0.5, 2.0};
  EXPECT_EQ(labels(sweep(Family::landsberg_vedral, lv_grid, CheckConfig{})),
            (std::vector<Label>{Label::weak_upper, Label::weak_lower}));

  const auto abe = classify({Family::abe, 2.0}, CheckConfig{});
  EXPECT_EQ(abe.label, Label::none);
  EXPECT_EQ(abe.agrees_with_paper, true);
  std::size_t strong_witnesses = 0;
  for (Suite s : {Suite::upper, Suite::lower}) {
    for (const SuiteVerdict& sv : abe.suite(s)->verdicts) {
      if (sv.verdict.status != Status::counterexample) continue;
      ++strong_witnesses;
      EXPECT_NEAR(reverify(sv.verdict).margin, sv.verdict.witness->measurement.margin, 1e-12);
    }
  }
  EXPECT_GE(strong_witnesses, 2u);
}

TEST(Classify, AsPrintedHybridDisagrees) {
  const std::vector<double> grid = {2.0};
  const auto records = sweep(Family::hybrid_eq10, grid, CheckConfig{}, Eq10Variant::as_printed);
  ASSERT_EQ(records.size(), 1u);
  EXPECT_EQ(records[0].agrees_with_paper, false);
  bool evidence = false;
  for (const SuiteVerdict& sv : records[0].suite(Suite::upper)->verdicts) {
    if ((sv.verdict.axiom == AxiomId::maximum ||
         sv.verdict.axiom == AxiomId::extremal_monotonicity) &&
        sv.verdict.status == Status::counterexample) {
      evidence = true;
    }
  }
  EXPECT_TRUE(evidence);
  const GoldSummary summary = gold_report(records);
  EXPECT_FALSE(summary.success());
  EXPECT_EQ(summary.disagreements, std::vector<std::size_t>{0});
}

TEST(Classify, UpperImpliesWeakUpperAwayFromPole) {
  CheckConfig cfg;
  cfg.trials = 2000;
  for (Family f : kAllFamilies) {
    for (double b : {0.5, 0.75, 1.5, 3.0}) {
      const auto r = classify({f, b}, cfg);
      EXPECT_TRUE(r.subsumption_consistent) << r.spec.label();
      if (r.label == Label::upper) {
        EXPECT_TRUE(run_suite(r.spec, Suite::weak_upper, cfg).passed) << r.spec.label();
      }
      if (r.label == Label::lower) {
        EXPECT_TRUE(run_suite(r.spec, Suite::weak_lower, cfg).passed) << r.spec.label();
      }
    }
  }
}

TEST(Classify, SameInputsSameLabel) {
  CheckConfig cfg;
  cfg.trials = 1000;
  const EntropySpec spec{Family::landsberg_vedral, 0.75};
  EXPECT_EQ(classify(spec, cfg).label, classify(spec, cfg).label);
}

TEST(Sweep, InvalidPointIsRecorded) {
  const std::vector<double> grid = {-1.0, 2.0};
  CheckConfig cfg;
  cfg.trials = 200;
  const auto records = sweep(Family::renyi, grid, cfg);
  ASSERT_EQ(records.size(), 2u);
  EXPECT_TRUE(records[0].error.has_value());
  EXPECT_FALSE(records[1].error.has_value());
  const GoldSummary s = gold_report(records);
  EXPECT_EQ(s.errors, std::vector<std::size_t>{0});
  EXPECT_TRUE(s.success());
}

TEST(GoldReport, EmptyIsSuccess) {
  const GoldSummary s = gold_report({});
  EXPECT_TRUE(s.success());
  EXPECT_TRUE(s.per_family.empty());
}
