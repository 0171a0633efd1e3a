#include <gtest/gtest.h>

#include <sstream>

#include "reskp/algorithms.hpp"
#include "reskp/errors.hpp"
#include "reskp/harness.hpp"
#include "test_util.hpp"

namespace reskp {
namespace {

using test::q;

std::string csv(const std::vector<RatioRecord>& records) {
  std::ostringstream out;
  write_curve(out, records);
  return out.str();
}

TEST(MeasureRatio, Examples) {
  const Alpha half(q(1, 2));
  const RatioRecord r =
      measure_ratio(*make_policy_alg2(half), validate_instance({q(3, 10), q(7, 20)}, "ex"));
  EXPECT_EQ(r.ratio, Ratio(q(13, 10)));
  EXPECT_EQ(r.policy, "threshold-2a");
  EXPECT_EQ(r.opponent, "ex");
  EXPECT_EQ(r.alpha, q(1, 2));

  EXPECT_EQ(measure_ratio(*make_policy_alg2(half), Instance{}).ratio, Ratio(Rational(1)));
  const RatioRecord none =
      measure_ratio(*make_policy_reject_all(half), validate_instance({q(1, 2)}), "baseline");
  EXPECT_TRUE(none.ratio.is_infinite());
  EXPECT_EQ(none.policy, "baseline");
}

TEST(RandomInstance, Deterministic) {
  const Instance a = random_instance(12, 99);
  const Instance b = random_instance(12, 99);
  EXPECT_EQ(a.items, b.items);
  EXPECT_NE(a.items, random_instance(12, 100).items);
  for (const auto& x : a.items) {
    EXPECT_TRUE(is_valid_size(x));
    EXPECT_EQ(Integer(1000) % x.get_den(), 0);
  }
  EXPECT_EQ(random_instance(3, 1, 2).items.size(), 3u);
  EXPECT_THROW(random_instance(3, 1, 1), ParameterOutOfRange);
}

TEST(Sweep, CountsRecordsAndSkips) {
  SweepSpec spec;
  spec.start = q(1, 10);
  spec.end = q(9, 10);
  spec.step = q(1, 10);
  spec.adversaries = {"four-item"};
  EXPECT_EQ(sweep_grid(spec).size(), 9u);
  const SweepResult r = sweep(spec);
  EXPECT_EQ(r.records.size(), 7u);
  ASSERT_EQ(r.skips.size(), 2u);
  EXPECT_EQ(r.skips[0].alpha, q(1, 10));
  EXPECT_EQ(r.skips[1].alpha, q(1, 5));
  EXPECT_EQ(r.skips[0].opponent, "four-item");
  EXPECT_TRUE(r.traces.empty());
}

TEST(Sweep, ThreadCountDoesNotChangeOutput) {
  SweepSpec spec;
  spec.start = q(1, 20);
  spec.end = q(19, 20);
  spec.step = q(1, 20);
  spec.policies = {"auto", "threshold-2a", "alg1"};
  spec.adversaries = {"nonrejecting", "chain"};
  spec.instances_per_cell = 3;
  spec.max_instance_size = 8;
  const std::string single = csv(sweep(spec).records);
  spec.threads = 4;
  EXPECT_EQ(csv(sweep(spec).records), single);
  spec.seed = 2;
  EXPECT_NE(csv(sweep(spec).records), single);
}

TEST(Sweep, KeepsTraces) {
  SweepSpec spec;
  spec.start = spec.end = q(1, 2);
  spec.policies = {"threshold-1a"};
  spec.instances_per_cell = 5;
  spec.keep_traces = true;
  const SweepResult r = sweep(spec);
  EXPECT_EQ(r.records.size(), 5u);
  EXPECT_EQ(r.traces.size(), 5u);
  EXPECT_EQ(r.records.front().opponent, "random-0000");
}

TEST(Sweep, Validation) {
  SweepSpec spec;
  spec.start = 0;
  EXPECT_THROW(sweep(spec), ParameterOutOfRange);
  spec.start = q(1, 2);
  spec.end = q(1, 4);
  EXPECT_THROW(sweep(spec), ParameterOutOfRange);
  spec.end = q(3, 4);
  spec.step = 0;
  EXPECT_THROW(sweep(spec), ParameterOutOfRange);
  spec.step = q(1, 4);
  spec.policies = {"greedy"};
  EXPECT_THROW(sweep(spec), ParseError);
  spec.policies = {"auto"};
  spec.adversaries = {"sneaky"};
  EXPECT_THROW(sweep(spec), ParseError);
}

Trace reserving_trace() {
  // At alpha 1/2 the threshold is 2/5; R climbs to 7/10 without a trigger.
  return run_on_instance(*make_policy_alg2(Alpha(q(1, 2))),
                         validate_instance({q(39, 100), q(1, 5), q(1, 10), q(1, 100)}, "climb"))
      .trace;
}

const VerificationReport* find(const std::vector<VerificationReport>& reports,
                               const std::string& check) {
  for (const auto& r : reports) {
    if (r.check == check) return &r;
  }
  return nullptr;
}

TEST(VerifyLemmas, PassingTrace) {
  const Trace trace = reserving_trace();
  ASSERT_FALSE(trace.trigger_index().has_value());
  EXPECT_EQ(trace.final_state.reserved_total, q(7, 10));
  const auto reports = verify_lemmas({trace});
  for (const char* check : {"nonrejection", "lemma-2", "lemma-3", "lemma-5"}) {
    const auto* r = find(reports, check);
    ASSERT_NE(r, nullptr) << check;
    EXPECT_TRUE(r->pass) << to_string(*r);
  }
  EXPECT_EQ(find(reports, "lemma-9"), nullptr);
}

TEST(VerifyLemmas, SyntheticViolation) {
  Trace trace = reserving_trace();
  trace.steps[3].after.reserved_total = q(9, 10);
  const auto reports = verify_lemmas({trace});
  const auto* r = find(reports, "lemma-2");
  ASSERT_NE(r, nullptr);
  EXPECT_FALSE(r->pass);
  EXPECT_EQ(r->step, std::optional<std::size_t>(4));
  EXPECT_EQ(r->reserved_total, q(9, 10));
  EXPECT_EQ(r->alpha, q(1, 2));
  EXPECT_EQ(to_string(*r).rfind("FAIL lemma-2", 0), 0u);
  EXPECT_NE(to_string(*r).find("R=9/10"), std::string::npos);
}

TEST(VerifyLemmas, RejectionIsReported) {
  Trace trace = reserving_trace();
  trace.steps[1].action = Reject{};
  const auto* r = find(verify_lemmas({trace}), "nonrejection");
  ASSERT_NE(r, nullptr);
  EXPECT_FALSE(r->pass);
  EXPECT_EQ(r->step, std::optional<std::size_t>(2));
}

TEST(VerifyLemmas, OtherPoliciesIgnored) {
  const Trace trace = run_on_instance(*make_policy_alg1(Alpha(q(1, 5))),
                                      validate_instance({q(1, 2)}))
                          .trace;
  EXPECT_TRUE(verify_lemmas({trace}).empty());
}

TEST(VerifyLemmas, ThresholdOneMinusAlpha) {
  const Trace trace = run_on_instance(*make_policy_alg3(Alpha(q(7, 10))),
                                      validate_instance({q(1, 4), q(1, 10), q(1, 4)}))
                          .trace;
  const auto reports = verify_lemmas({trace});
  const auto* r = find(reports, "lemma-9");
  ASSERT_NE(r, nullptr);
  EXPECT_TRUE(r->pass);
  EXPECT_EQ(find(reports, "lemma-2"), nullptr);
}

TEST(SortedPrefix, Example) {
  const auto policy = make_policy_alg2(Alpha(q(1, 2)));
  const Instance instance = validate_instance({q(1, 10), q(1, 4), q(1, 2)}, "abc");
  EXPECT_EQ(run_on_instance(*policy, instance).outcome.gain, q(27, 40));
  const VerificationReport r = sorted_prefix_check(*policy, instance);
  EXPECT_TRUE(r.pass) << r.detail;
  EXPECT_EQ(r.step, std::optional<std::size_t>(3));
}

TEST(SortedPrefix, NotApplicable) {
  const Alpha alpha(q(1, 5));
  EXPECT_THROW(sorted_prefix_check(*make_policy_alg1(alpha), validate_instance({q(1, 2)})),
               NotApplicable);
  EXPECT_THROW(sorted_prefix_check(*make_policy_alg2(alpha), validate_instance({q(1, 100)})),
               NotApplicable);
}

TEST(SortedPrefix, Suite) {
  const auto reports = sorted_prefix_suite({q(3, 10), q(1, 2), q(7, 10)}, 25, 5);
  EXPECT_EQ(reports.size(), 25u);
  for (const auto& r : reports) {
    EXPECT_TRUE(r.pass) << to_string(r);
    EXPECT_GE(*r.step, 3u);
  }
  EXPECT_TRUE(sorted_prefix_suite({}, 5, 1).empty());
}

// auto vs four-item over the default grid: linear 2+a between sqrt2-1 and
// phi-1, 1/(1-a) beyond, rising in between.
TEST(Curve, SegmentsOfTheAutoCurve) {
  SweepSpec spec;
  spec.adversaries = {"four-item"};
  const SweepResult r = sweep(spec);
  std::optional<Rational> previous;
  for (const auto& record : r.records) {
    ASSERT_FALSE(record.ratio.is_infinite());
    const Rational& a = record.alpha;
    const Rational& ratio = record.ratio.value();
    if (a > q(42, 100) && a < q(61, 100)) EXPECT_EQ(ratio, 2 + a);
    if (a > q(62, 100)) EXPECT_EQ(ratio, 1 / (1 - a));
    if (previous) EXPECT_GT(ratio, *previous) << to_fraction_string(a);
    previous = ratio;
  }
}

TEST(Curve, HeaderOnly) {
  EXPECT_EQ(csv({}),
            "alpha,policy,opponent,gain,opt,ratio,alpha_decimal,gain_decimal,opt_decimal,"
            "ratio_decimal\n");
}

TEST(Curve, Records) {
  const std::vector<RatioRecord> records = {
      {q(1, 2), "threshold-2a", "four-item", q(2, 5), 1, Ratio(q(5, 2))},
      {q(1, 3), "reject-all", "odd,name", 0, q(1, 2), Ratio::infinity()},
  };
  std::istringstream lines(csv(records));
  std::string header, first, second;
  std::getline(lines, header);
  std::getline(lines, first);
  std::getline(lines, second);
  EXPECT_EQ(first, "1/2,threshold-2a,four-item,2/5,1/1,5/2,0.5,0.4,1,2.5");
  EXPECT_EQ(second, "1/3,reject-all,\"odd,name\",0/1,1/2,inf,0.333333333333333,0,0.5,inf");
}

TEST(Curve, Gnuplot) {
  const std::vector<RatioRecord> records = {
      {q(1, 2), "threshold-2a", "four-item", q(2, 5), 1, Ratio(q(5, 2))},
      {q(1, 2), "threshold-2a", "random-0000", q(2, 5), q(2, 5), Ratio(Rational(1))},
  };
  std::ostringstream out;
  write_gnuplot_script(out, "curve.csv", records);
  const std::string script = out.str();
  EXPECT_NE(script.find("set datafile separator ','"), std::string::npos);
  EXPECT_NE(script.find("'curve.csv' using 7:"), std::string::npos);
  EXPECT_NE(script.find("title 'threshold-2a vs four-item'"), std::string::npos);
  EXPECT_EQ(script.find("random-0000"), std::string::npos);
}

}  // namespace
}  // namespace reskp
