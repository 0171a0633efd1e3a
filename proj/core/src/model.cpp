#include "reskp/model.hpp"

#include <algorithm>
#include <utility>

#include "reskp/errors.hpp"

namespace reskp {

Alpha::Alpha(Rational value) : value_(std::move(value)) {
  if (value_ < 0 || value_ > 1) {
    throw AlphaOutOfRange("reservation factor " + to_fraction_string(value_) +
                          " outside [0, 1]");
  }
}

bool is_valid_size(const Rational& x) { return x > 0 && x <= 1; }

Instance validate_instance(std::vector<Rational> sizes, std::string id) {
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    if (!is_valid_size(sizes[i])) throw SizeOutOfRange(i);
  }
  return Instance{std::move(id), std::move(sizes)};
}

bool operator==(const StepAction& a, const StepAction& b) {
  if (a.index() != b.index()) return false;
  if (const auto* fa = std::get_if<Finalize>(&a)) {
    return fa->selection == std::get<Finalize>(b).selection;
  }
  return true;
}

std::string action_name(const StepAction& action) {
  switch (action.index()) {
    case 0: return "pack";
    case 1: return "reject";
    case 2: return "reserve";
    default: return "finalize";
  }
}

bool is_take(const StepAction& action) {
  return std::holds_alternative<PackItem>(action) || std::holds_alternative<Finalize>(action);
}

Rational sum(const std::vector<Size>& items) {
  Rational total = 0;
  for (const auto& x : items) total += x;
  return total;
}

bool is_submultiset(std::vector<Size> part, std::vector<Size> pool) {
  std::sort(part.begin(), part.end());
  std::sort(pool.begin(), pool.end());
  return std::includes(pool.begin(), pool.end(), part.begin(), part.end());
}

namespace {

void pack_selection(RunState& next, const std::vector<Size>& selection) {
  const Rational total = next.packed_total + sum(selection);
  if (total > 1) {
    throw CapacityExceeded("packing would fill the knapsack to " + to_fraction_string(total));
  }
  next.packed_total = total;
  next.packed.insert(next.packed.end(), selection.begin(), selection.end());
  next.stopped = true;
}

}  // namespace

RunState apply_action(const RunState& state, const Size& item, const StepAction& action) {
  if (state.stopped) throw AlreadyStopped("run already finalized");
  RunState next = state;
  ++next.step;
  std::visit(
      [&](const auto& a) {
        using A = std::decay_t<decltype(a)>;
        if constexpr (std::is_same_v<A, PackItem>) {
          if (next.packed_total + item > 1) {
            throw CapacityExceeded("item " + to_fraction_string(item) + " does not fit");
          }
          next.packed_total += item;
          next.packed.push_back(item);
        } else if constexpr (std::is_same_v<A, Reserve>) {
          next.reserved.push_back(item);
          next.reserved_total += item;
        } else if constexpr (std::is_same_v<A, Finalize>) {
          std::vector<Size> pool = state.reserved;
          pool.push_back(item);
          if (!is_submultiset(a.selection, pool)) {
            throw InvalidSelection("finalize selection is not drawn from reserved items and the current item");
          }
          pack_selection(next, a.selection);
        }
      },
      action);
  return next;
}

RunState apply_final_selection(const RunState& state, const std::vector<Size>& selection) {
  if (state.stopped) throw AlreadyStopped("run already finalized");
  if (!is_submultiset(selection, state.reserved)) {
    throw InvalidSelection("final selection is not drawn from reserved items");
  }
  RunState next = state;
  pack_selection(next, selection);
  return next;
}

Rational final_gain(const Rational& packed_total, const Rational& reserved_total,
                    const Alpha& alpha) {
  return packed_total - alpha.value() * reserved_total;
}

Outcome outcome_of(const RunState& state, const Alpha& alpha) {
  return {state.packed_total, state.reserved_total,
          final_gain(state.packed_total, state.reserved_total, alpha)};
}

std::string Ratio::to_fraction_string() const {
  return is_infinite() ? "inf" : reskp::to_fraction_string(*value_);
}

std::string Ratio::to_decimal_string(int digits) const {
  return is_infinite() ? "inf" : reskp::to_decimal_string(*value_, digits);
}

Ratio competitive_ratio(const Rational& opt, const Rational& gain) {
  if (opt == 0 && gain == 0) return Ratio(Rational(1));
  if (gain <= 0) return Ratio::infinity();
  return Ratio(opt / gain);
}

bool ratio_less(const Ratio& a, const Ratio& b) {
  if (a.is_infinite()) return false;
  if (b.is_infinite()) return true;
  return a.value() < b.value();
}

}  // namespace reskp
