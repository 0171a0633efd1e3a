#include "reskp/adversaries.hpp"
#include "reskp/errors.hpp"
#include "reskp/oracle.hpp"

namespace reskp {

DuelResult duel(const Policy& policy, const Adversary& adversary) {
  Runner runner(policy, adversary.name());
  History history;
  while (auto item = adversary.next(history)) {
    if (history.size() >= adversary.horizon()) {
      throw Error(adversary.name() + " adversary exceeded its horizon of " +
                  std::to_string(adversary.horizon()) + " items");
    }
    auto action = runner.offer(*item);
    history.push_back({*item, std::move(action)});
  }
  runner.finish();

  DuelResult result;
  result.trace = runner.trace();
  result.instance = result.trace.instance;
  result.outcome = runner.outcome();
  result.gain = result.outcome.gain;
  result.opt = opt_gain(result.instance);
  result.ratio = competitive_ratio(result.opt, result.gain);
  if (adversary.name() == "nonrejecting") {
    for (const auto& step : result.trace.steps) {
      if (std::holds_alternative<Reject>(step.action)) {
        result.note = "policy rejected an item; the nonrejecting strategy ended the sequence";
        break;
      }
    }
  }
  return result;
}

Ratio four_item_bound(const std::vector<Rational>& sizes, const Alpha& alpha) {
  const Rational& a = alpha.value();
  Ratio best = Ratio::infinity();
  auto consider = [&](const Rational& num, const Rational& den) {
    if (den <= 0) return;
    const Ratio r(num / den);
    if (ratio_less(r, best)) best = r;
  };
  Rational before = 0;  // sum of the sizes preceding x_i
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    consider(Rational(1), sizes[i] - a * before);
    if (i > 0) consider(sizes[i], sizes[i - 1] - a * before);
    before += sizes[i];
  }
  if (!sizes.empty()) consider(sizes.back(), sizes.back() - a * before);
  return best;
}

std::optional<RatioValue> four_item_bound(const std::vector<Real>& sizes, const Alpha& alpha) {
  const Real a(alpha.value());
  std::optional<Real> best;
  auto consider = [&](const Real& num, const Real& den) {
    if (compare(den, Real(0)) <= 0) return;
    const Real r = num / den;
    if (!best || compare(r, *best) < 0) best = r;
  };
  Real before(0);
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    consider(Real(1), sizes[i] - a * before);
    if (i > 0) consider(sizes[i], sizes[i - 1] - a * before);
    before = before + sizes[i];
  }
  if (!sizes.empty()) consider(sizes.back(), sizes.back() - a * before);
  if (!best) return std::nullopt;
  return RatioValue(*best);
}

ScriptedPolicy::ScriptedPolicy(const Alpha& alpha, std::vector<StepAction> script)
    : Policy("scripted", PolicyConfig{alpha, PolicyKind::kCustom, {}, {}, {}}),
      script_(std::move(script)) {}

StepAction ScriptedPolicy::decide(const RunState& state, const Size&) const {
  if (state.step < script_.size()) return script_[state.step];
  return Reject{};
}

std::vector<Size> ScriptedPolicy::final_selection(const RunState& state) const {
  return popt(state.reserved, state.remaining_capacity()).selection;
}

ExhaustiveResult exhaustive_four_item_check(const Alpha& alpha, const Rational& epsilon,
                                            unsigned depth) {
  const Adversary adversary = four_item_adversary(alpha, epsilon);
  const AdversaryParams& p = adversary.params();
  std::vector<Rational> sizes = {*p.s};
  if (p.t) sizes.push_back(*p.t);
  if (p.u) sizes.push_back(*p.u);

  ExhaustiveResult result;
  result.bound_rounded = four_item_bound(sizes, alpha);
  result.bound_ideal = four_item_bound(four_item_ideal_sizes(alpha, epsilon).sizes, alpha);

  std::size_t count = 1;
  for (unsigned i = 0; i < depth; ++i) count *= 3;
  for (std::size_t code = 0; code < count; ++code) {
    std::vector<StepAction> script;
    std::size_t rest = code;
    for (unsigned i = 0; i < depth; ++i) {
      switch (rest % 3) {
        case 0: script.emplace_back(PackItem{}); break;
        case 1: script.emplace_back(Reject{}); break;
        default: script.emplace_back(Reserve{}); break;
      }
      rest /= 3;
    }
    const ScriptedPolicy policy(alpha, script);
    DuelResult played;
    try {
      played = duel(policy, adversary);
    } catch (const PolicyFault&) {
      ++result.scripts_invalid;
      continue;
    }
    ++result.scripts_played;
    if (ratio_less(played.ratio, result.min_ratio)) {
      result.min_ratio = played.ratio;
      result.best_script = std::move(script);
    }
  }
  return result;
}

}  // namespace reskp
