#include <gtest/gtest.h>

#include "reskp/algorithms.hpp"
#include "reskp/errors.hpp"
#include "reskp/model.hpp"
#include "reskp/run.hpp"
#include "test_util.hpp"

namespace reskp {
namespace {

using test::q;

TEST(Alpha, Range) {
  EXPECT_NO_THROW(Alpha(q(0, 1)));
  EXPECT_NO_THROW(Alpha(q(1, 1)));
  EXPECT_THROW(Alpha(q(-1, 10)), AlphaOutOfRange);
  EXPECT_THROW(Alpha(q(11, 10)), AlphaOutOfRange);
}

TEST(ValidateInstance, Examples) {
  EXPECT_EQ(validate_instance({q(1, 2), q(3, 4)}).size(), 2u);
  EXPECT_TRUE(validate_instance({}).empty());
  try {
    validate_instance({q(1, 2), q(3, 2)});
    FAIL() << "expected SizeOutOfRange";
  } catch (const SizeOutOfRange& e) {
    EXPECT_EQ(e.index(), 1u);
  }
  EXPECT_THROW(validate_instance({q(3, 2)}), SizeOutOfRange);
  EXPECT_THROW(validate_instance({q(0, 1)}), SizeOutOfRange);
  EXPECT_THROW(validate_instance({q(-1, 2)}), SizeOutOfRange);
  EXPECT_NO_THROW(validate_instance({q(1, 1)}));
}

TEST(ApplyAction, Reserve) {
  const RunState s = apply_action(RunState{}, q(2, 5), Reserve{});
  EXPECT_EQ(s.packed_total, 0);
  EXPECT_EQ(s.reserved_total, q(2, 5));
  EXPECT_EQ(s.reserved, std::vector<Size>{q(2, 5)});
  EXPECT_EQ(s.step, 1u);
}

TEST(ApplyAction, PackOverflowThrows) {
  RunState s;
  s.packed_total = q(4, 5);
  EXPECT_THROW(apply_action(s, q(1, 2), PackItem{}), CapacityExceeded);
  const RunState ok = apply_action(s, q(1, 5), PackItem{});
  EXPECT_EQ(ok.packed_total, 1);
  EXPECT_FALSE(ok.stopped);
}

TEST(ApplyAction, FinalizeMovesSelection) {
  RunState s;
  s.reserved = {q(3, 10)};
  s.reserved_total = q(3, 10);
  s.step = 1;
  const RunState f = apply_action(s, q(7, 20), Finalize{{q(3, 10), q(7, 20)}});
  EXPECT_EQ(f.packed_total, q(13, 20));
  EXPECT_TRUE(f.stopped);
  EXPECT_EQ(f.reserved_total, q(3, 10));
  EXPECT_EQ(final_gain(f.packed_total, f.reserved_total, Alpha(q(1, 2))), q(1, 2));
}

TEST(ApplyAction, Errors) {
  RunState s;
  s.reserved = {q(3, 10)};
  s.reserved_total = q(3, 10);
  EXPECT_THROW(apply_action(s, q(1, 2), Finalize{{q(1, 5)}}), InvalidSelection);
  EXPECT_THROW(apply_action(s, q(1, 2), Finalize{{q(3, 10), q(3, 10)}}), InvalidSelection);
  EXPECT_THROW(apply_action(s, q(9, 10), Finalize{{q(3, 10), q(9, 10)}}), CapacityExceeded);
  s.stopped = true;
  EXPECT_THROW(apply_action(s, q(1, 2), Reject{}), AlreadyStopped);
  EXPECT_THROW(apply_final_selection(s, {}), AlreadyStopped);
}

TEST(ApplyAction, RejectOnlyAdvancesStep) {
  RunState s;
  s.reserved = {q(1, 4)};
  s.reserved_total = q(1, 4);
  const RunState r = apply_action(s, q(1, 2), Reject{});
  RunState expected = s;
  expected.step = 1;
  EXPECT_EQ(r, expected);
}

TEST(FinalGain, Examples) {
  EXPECT_EQ(final_gain(q(13, 20), q(3, 10), Alpha(q(1, 2))), q(1, 2));
  EXPECT_EQ(final_gain(q(3, 7), 0, Alpha(q(9, 10))), q(3, 7));
  EXPECT_EQ(final_gain(0, q(2, 5), Alpha(q(1, 2))), q(-1, 5));
}

TEST(Ratio, Conventions) {
  EXPECT_EQ(competitive_ratio(0, 0), Ratio(Rational(1)));
  EXPECT_TRUE(competitive_ratio(1, 0).is_infinite());
  EXPECT_TRUE(competitive_ratio(1, q(-1, 5)).is_infinite());
  EXPECT_EQ(competitive_ratio(q(13, 20), q(1, 2)).value(), q(13, 10));
  EXPECT_EQ(Ratio::infinity().to_fraction_string(), "inf");
  EXPECT_TRUE(ratio_less(Ratio(Rational(2)), Ratio::infinity()));
  EXPECT_FALSE(ratio_less(Ratio::infinity(), Ratio::infinity()));
}

TEST(RunOnInstance, ThresholdExample) {
  const Alpha alpha(q(1, 2));
  const auto result = run_on_instance(*make_policy_alg2(alpha), validate_instance({q(3, 10), q(7, 20)}));
  EXPECT_EQ(result.outcome.gain, q(1, 2));
  EXPECT_EQ(result.outcome.packed_total, q(13, 20));
  EXPECT_EQ(result.trace.trigger_index(), 2u);
}

TEST(RunOnInstance, EmptyInstance) {
  const auto result = run_on_instance(*select_policy(Alpha(q(1, 3))), Instance{});
  EXPECT_EQ(result.outcome.gain, 0);
  EXPECT_TRUE(result.trace.steps.empty());
}

TEST(RunOnInstance, Algorithm3Example) {
  const Alpha alpha(q(7, 10));
  const auto result =
      run_on_instance(*make_policy_alg3(alpha), validate_instance({q(1, 4), q(1, 10), q(1, 4)}));
  ASSERT_EQ(result.trace.steps.size(), 3u);
  EXPECT_TRUE(std::holds_alternative<Reserve>(result.trace.steps[0].action));
  EXPECT_TRUE(std::holds_alternative<Reserve>(result.trace.steps[1].action));
  EXPECT_TRUE(std::holds_alternative<Finalize>(result.trace.steps[2].action));
  EXPECT_EQ(result.outcome.packed_total, q(3, 5));
  EXPECT_EQ(result.outcome.reserved_total, q(7, 20));
  EXPECT_EQ(result.outcome.gain, q(71, 200));
}

class FaultyPolicy final : public Policy {
 public:
  FaultyPolicy() : Policy("faulty", PolicyConfig{Alpha(q(1, 2)), PolicyKind::kCustom, {}, {}, {}}) {}
  StepAction decide(const RunState&, const Size&) const override { return PackItem{}; }
  std::vector<Size> final_selection(const RunState&) const override { return {}; }
};

TEST(RunOnInstance, CapacityViolationIsPolicyFault) {
  EXPECT_THROW(run_on_instance(FaultyPolicy(), validate_instance({q(3, 5), q(3, 5)})), PolicyFault);
}

class GreedyEndPolicy final : public Policy {
 public:
  GreedyEndPolicy() : Policy("hoarder", PolicyConfig{Alpha(q(1, 4)), PolicyKind::kCustom, {}, {}, {}}) {}
  StepAction decide(const RunState&, const Size&) const override { return Reserve{}; }
  std::vector<Size> final_selection(const RunState& s) const override { return s.reserved; }
};

TEST(RunOnInstance, OverfullFinalSelectionIsPolicyFault) {
  EXPECT_THROW(run_on_instance(GreedyEndPolicy(), validate_instance({q(3, 5), q(3, 5)})), PolicyFault);
}

TEST(Runner, ItemsAfterStopAreIgnored) {
  const Alpha alpha(q(1, 2));
  const auto policy = make_policy_alg2(alpha);
  Runner runner(*policy);
  EXPECT_TRUE(runner.offer(q(1, 2)).has_value());
  EXPECT_TRUE(runner.stopped());
  EXPECT_FALSE(runner.offer(1).has_value());
  runner.finish();
  EXPECT_EQ(runner.trace().instance.size(), 2u);
  EXPECT_EQ(runner.trace().steps.size(), 1u);
  EXPECT_FALSE(runner.trace().final_selection.has_value());
  EXPECT_THROW(runner.offer(q(1, 2)), AlreadyStopped);
}

// Property: every trace replays exactly, keeps the accounting identities and
// never packs or reserves a rejected item.
TEST(RunProperties, ReplayAndAccounting) {
  test::Gen gen(20240601);
  const std::vector<std::string> names = {"alg1", "threshold-2a", "threshold-1a", "take-first-fit",
                                          "reject-all"};
  for (int round = 0; round < 400; ++round) {
    const Alpha alpha(q(static_cast<long>(1 + gen.below(99)), 100));
    const std::string& name = names[gen.below(names.size())];
    if (!policy_defined_at(name, alpha)) continue;
    const auto policy = make_policy(name, alpha);
    const Instance instance = validate_instance(gen.sizes(1 + gen.below(12), 50));
    const auto result = run_on_instance(*policy, instance);
    const Trace& trace = result.trace;
    ASSERT_TRUE(replay_matches(trace));
    EXPECT_LE(trace.steps.size(), instance.size());

    Rational previous_r = 0;
    for (const auto& step : trace.steps) {
      EXPECT_EQ(step.after.reserved_total, sum(step.after.reserved));
      EXPECT_EQ(step.after.packed_total, sum(step.after.packed));
      EXPECT_LE(step.after.packed_total, 1);
      EXPECT_GE(step.after.reserved_total, previous_r);
      previous_r = step.after.reserved_total;
    }
    for (std::size_t i = 0; i < trace.steps.size(); ++i) {
      if (!std::holds_alternative<Reject>(trace.steps[i].action)) continue;
      // The rejected copy must not show up: counts of that size never exceed
      // the copies presented and not rejected before the end.
      const Size& x = trace.steps[i].item;
      std::size_t available = 0;
      for (std::size_t j = 0; j < trace.steps.size(); ++j) {
        if (trace.steps[j].item == x && !std::holds_alternative<Reject>(trace.steps[j].action)) {
          ++available;
        }
      }
      std::size_t used = 0;
      for (const auto& y : trace.final_state.packed) used += y == x;
      for (const auto& y : trace.final_state.reserved) used += y == x;
      EXPECT_LE(used, 2 * available);
      std::size_t packed_copies = 0;
      for (const auto& y : trace.final_state.packed) packed_copies += y == x;
      EXPECT_LE(packed_copies, available);
    }
    EXPECT_EQ(result.outcome.gain,
              final_gain(trace.final_state.packed_total, trace.final_state.reserved_total, alpha));
  }
}

TEST(Replay, DetectsTampering) {
  const Alpha alpha(q(1, 2));
  auto result = run_on_instance(*make_policy_alg2(alpha), validate_instance({q(3, 10), q(7, 20)}));
  ASSERT_TRUE(replay_matches(result.trace));
  result.trace.steps[0].after.reserved_total = q(1, 3);
  EXPECT_FALSE(replay_matches(result.trace));
}

}  // namespace
}  // namespace reskp
