#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "reskp/rational.hpp"

namespace reskp {

// Item size as a fraction of the knapsack capacity. Validity (0 < x <= 1) is
// established by validate_instance and re-checked wherever sizes enter from
// outside (adversaries, instance files).
using Size = Rational;

// Reservation factor, 0 <= alpha <= 1.
class Alpha {
 public:
  Alpha() = default;
  // Throws AlphaOutOfRange.
  explicit Alpha(Rational value);
  const Rational& value() const { return value_; }
  // 1 - alpha
  Rational complement() const { return 1 - value_; }

 private:
  Rational value_{0};
};

struct Instance {
  std::string id;
  std::vector<Size> items;

  std::size_t size() const { return items.size(); }
  bool empty() const { return items.empty(); }
};

bool is_valid_size(const Rational& x);

// Throws SizeOutOfRange carrying the index of the first bad size.
Instance validate_instance(std::vector<Rational> sizes, std::string id = {});

struct PackItem {};
struct Reject {};
struct Reserve {};
// Packs `selection` (a sub-multiset of the reserved items plus the current
// item) and stops the run; later items are ignored.
struct Finalize {
  std::vector<Size> selection;
};

using StepAction = std::variant<PackItem, Reject, Reserve, Finalize>;

bool operator==(const StepAction& a, const StepAction& b);
// "pack", "reject", "reserve" or "finalize".
std::string action_name(const StepAction& action);
bool is_take(const StepAction& action);  // PackItem or Finalize

struct RunState {
  std::size_t step = 0;  // number of items decided so far
  Rational packed_total{0};
  std::vector<Size> packed;
  std::vector<Size> reserved;
  Rational reserved_total{0};
  bool stopped = false;

  Rational remaining_capacity() const { return 1 - packed_total; }
  bool operator==(const RunState& other) const = default;
};

struct Outcome {
  Rational packed_total;
  Rational reserved_total;
  Rational gain;
};

// Applies one decision on the current item. Throws AlreadyStopped,
// CapacityExceeded, InvalidSelection.
RunState apply_action(const RunState& state, const Size& item, const StepAction& action);

// End-of-sequence packing: moves `selection` (a sub-multiset of the reserved
// items) into the knapsack and stops. Throws like apply_action.
RunState apply_final_selection(const RunState& state, const std::vector<Size>& selection);

// t - alpha * R; may be negative.
Rational final_gain(const Rational& packed_total, const Rational& reserved_total,
                    const Alpha& alpha);

Outcome outcome_of(const RunState& state, const Alpha& alpha);

// True iff `part` is a sub-multiset of `pool`.
bool is_submultiset(std::vector<Size> part, std::vector<Size> pool);

Rational sum(const std::vector<Size>& items);

// A competitive ratio: a rational or +infinity.
class Ratio {
 public:
  Ratio() = default;  // +infinity
  explicit Ratio(Rational value) : value_(std::move(value)) {}
  static Ratio infinity() { return Ratio(); }

  bool is_infinite() const { return !value_.has_value(); }
  // Precondition: !is_infinite().
  const Rational& value() const { return *value_; }

  std::string to_fraction_string() const;           // "p/q" or "inf"
  std::string to_decimal_string(int digits = 15) const;  // decimal or "inf"

  bool operator==(const Ratio& other) const = default;

 private:
  std::optional<Rational> value_;
};

// opt / gain when gain > 0, +infinity otherwise. The empty instance
// (opt = gain = 0) has ratio 1.
Ratio competitive_ratio(const Rational& opt, const Rational& gain);

// Ordering with +infinity as the largest element.
bool ratio_less(const Ratio& a, const Ratio& b);

}  // namespace reskp
