#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "reskp/run.hpp"

namespace reskp {

// One presented item and the policy's answer; nullopt when the policy had
// already stopped and the item was ignored.
struct HistoryEntry {
  Size item;
  std::optional<StepAction> action;
};
using History = std::vector<HistoryEntry>;

struct AdversaryParams {
  Alpha alpha;
  Rational delta{0};    // chain
  Rational epsilon{0};  // four-item, nonrejecting
  // Four-item tree sizes after rounding, s < t < u < 1 and s + t > 1.
  std::optional<Rational> s;
  std::optional<Rational> t;
  std::optional<Rational> u;
};

// An adaptive item source. next() is a pure function of the history and
// returns nullopt to end the sequence.
class Adversary {
 public:
  using NextFn = std::function<std::optional<Size>(const History&)>;

  Adversary(std::string name, AdversaryParams params, std::size_t horizon, NextFn next)
      : name_(std::move(name)), params_(std::move(params)), horizon_(horizon),
        next_(std::move(next)) {}

  std::optional<Size> next(const History& history) const { return next_(history); }
  const std::string& name() const { return name_; }
  const AdversaryParams& params() const { return params_; }
  // Upper bound on the number of items ever presented.
  std::size_t horizon() const { return horizon_; }

 private:
  std::string name_;
  AdversaryParams params_;
  std::size_t horizon_;
  NextFn next_;
};

// Bait items 1/2 + delta^i while the policy reserves, until alpha times the
// reserved total reaches 1/2. A packed bait is answered by an item of size
// 1; a rejected bait in round i >= 2 by 1/2 - delta^i; a rejected first bait
// ends the sequence. Requires alpha > 0 and 0 < delta <= 1/100
// (DeltaOutOfRange).
Adversary chain_adversary(const Alpha& alpha, const Rational& delta);

// Lower validity bound of the four-item strategy (exclusive).
inline Rational four_item_alpha_floor() { return Rational(9, 40); }

// Exact (unrounded) sizes of the four-item strategy.
struct FourItemIdeal {
  std::vector<Real> sizes;  // s, then t and u where the range uses them
};
FourItemIdeal four_item_ideal_sizes(const Alpha& alpha, const Rational& epsilon);

// Presents s, t, u in turn while the policy reserves; a rejection ends the
// sequence, a pack or finalize is answered by an item of size 1. Requires
// 9/40 < alpha < 1 and 0 < epsilon < 1/1000 (ParameterOutOfRange).
Adversary four_item_adversary(const Alpha& alpha, const Rational& epsilon);

// First 1/(2+a); while the policy reserves, further items (1+a)/(2+a)+eps
// until the best continuation ratio reaches 2+a-10eps. A take is answered by
// an item of size 1; a rejection ends the sequence. Requires 0 < alpha <= 1
// and 0 < epsilon < 1/1000.
Adversary nonrejecting_adversary(const Alpha& alpha, const Rational& epsilon);

// "chain", "four-item", "nonrejecting". Throws ParseError for other names.
Adversary make_adversary(std::string_view name, const Alpha& alpha, const Rational& epsilon,
                         const Rational& delta);
const std::vector<std::string>& adversary_names();
bool adversary_defined_at(std::string_view name, const Alpha& alpha);

// Crossing of 1/(u - a(s+t)) (exact s, t, u without eps) with the middle
// ratio piece, about 0.2241: below it the four-item tree no longer forces the
// optimal ratio. Enclosure of width <= 10^-30.
const Interval& alpha0();

struct DuelResult {
  Instance instance;  // the realized sequence, including ignored items
  Trace trace;
  Outcome outcome;
  Rational gain;
  Rational opt;
  Ratio ratio;
  std::string note;  // set when the play left the adversary's intended tree
};

// Plays the policy against the adversary until the adversary ends the
// sequence. Throws PolicyFault for illegal policy actions and Error if the
// adversary exceeds its horizon.
DuelResult duel(const Policy& policy, const Adversary& adversary);

// Min over the leaves of the four-item game tree played on increasing sizes
// x_1 < ... < x_m (pairwise sums above 1):
//   take x_i          1 / (x_i - a sum_{j<i} x_j)
//   reject x_1        +inf
//   reject x_i, i>=2  x_i / (x_{i-1} - a sum_{j<i} x_j)
//   reserve all       x_m / (x_m - a sum_j x_j)
// with nonpositive denominators counting as +inf.
Ratio four_item_bound(const std::vector<Rational>& sizes, const Alpha& alpha);
// The same expression over exact reals; nullopt when every leaf is +inf.
std::optional<RatioValue> four_item_bound(const std::vector<Real>& sizes, const Alpha& alpha);

// Replays a fixed decision list; decisions beyond the list are Reject.
// PackItem is only legal when the item fits (otherwise the runner reports a
// PolicyFault).
class ScriptedPolicy final : public Policy {
 public:
  ScriptedPolicy(const Alpha& alpha, std::vector<StepAction> script);
  StepAction decide(const RunState& state, const Size& item) const override;
  std::vector<Size> final_selection(const RunState& state) const override;

 private:
  std::vector<StepAction> script_;
};

struct ExhaustiveResult {
  Ratio min_ratio = Ratio::infinity();
  std::vector<StepAction> best_script;
  std::size_t scripts_played = 0;
  std::size_t scripts_invalid = 0;  // scripts packing an item that cannot fit
  Ratio bound_rounded = Ratio::infinity();   // four_item_bound on the played sizes
  std::optional<RatioValue> bound_ideal;     // four_item_bound on the exact sizes
};

// Plays every sequence of depth decisions from {pack, reject, reserve}
// against four_item_adversary(alpha, epsilon) and records the best ratio.
ExhaustiveResult exhaustive_four_item_check(const Alpha& alpha, const Rational& epsilon,
                                            unsigned depth = 4);

}  // namespace reskp
