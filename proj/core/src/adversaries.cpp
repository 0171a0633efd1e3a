#include "reskp/adversaries.hpp"

#include "reskp/algorithms.hpp"
#include "reskp/errors.hpp"

namespace reskp {
namespace {

constexpr int kRoundingDigits = 30;

Rational round_real(const Real& x) {
  const Interval enclosure = x.enclose(kRoundingDigits + 10);
  return round_to_grid(enclosure.midpoint(), pow10_integer(kRoundingDigits));
}

void require_epsilon(const Rational& epsilon, const char* who) {
  if (epsilon <= 0 || epsilon >= Rational(1, 1000)) {
    throw ParameterOutOfRange(std::string(who) + " requires 0 < epsilon < 1/1000, got " +
                              to_fraction_string(epsilon));
  }
}

// Index of the first non-Reserve answer, or history.size() if the policy
// reserved everything so far.
std::size_t first_non_reserve(const History& history) {
  for (std::size_t i = 0; i < history.size(); ++i) {
    const auto& a = history[i].action;
    if (!a || !std::holds_alternative<Reserve>(*a)) return i;
  }
  return history.size();
}

bool answered_with_reject(const HistoryEntry& entry) {
  return entry.action && std::holds_alternative<Reject>(*entry.action);
}

}  // namespace

Adversary chain_adversary(const Alpha& alpha, const Rational& delta) {
  if (delta <= 0 || delta > Rational(1, 100)) {
    throw DeltaOutOfRange("chain adversary requires 0 < delta <= 1/100, got " +
                          to_fraction_string(delta));
  }
  if (alpha.value() <= 0) throw ParameterOutOfRange("chain adversary requires alpha > 0");

  // Rounds played when the policy reserves every bait.
  std::size_t rounds = 0;
  Rational reserved = 0;
  while (alpha.value() * reserved < Rational(1, 2)) {
    ++rounds;
    reserved += Rational(1, 2) + pow(delta, static_cast<unsigned>(rounds));
  }

  AdversaryParams params;
  params.alpha = alpha;
  params.delta = delta;
  const Rational a = alpha.value();
  auto next = [a, delta](const History& history) -> std::optional<Size> {
    const std::size_t n = history.size();
    if (n == 0) return Rational(1, 2) + delta;
    const std::size_t k = first_non_reserve(history);
    if (k < n) {
      // Round k+1 was answered; its reply is the last item.
      if (k + 1 < n) return std::nullopt;
      if (answered_with_reject(history[k])) {
        if (k == 0) return std::nullopt;
        return Rational(1, 2) - pow(delta, static_cast<unsigned>(k + 1));
      }
      return Rational(1);
    }
    Rational reserved_total = 0;
    for (const auto& e : history) reserved_total += e.item;
    if (a * reserved_total >= Rational(1, 2)) return std::nullopt;
    return Rational(1, 2) + pow(delta, static_cast<unsigned>(n + 1));
  };
  return Adversary("chain", std::move(params), rounds + 1, std::move(next));
}

FourItemIdeal four_item_ideal_sizes(const Alpha& alpha, const Rational& epsilon) {
  const Rational& a = alpha.value();
  if (a <= four_item_alpha_floor() || a >= 1) {
    throw ParameterOutOfRange("four-item adversary requires 9/40 < alpha < 1, got " +
                              to_fraction_string(a));
  }
  const Real ar(a);
  FourItemIdeal ideal;
  if (a < sqrt2_minus_1_value()) {
    const Real q = Real::sqrt(Real(5) - Real(4) * ar);
    const Real s0 = Real(2) / (Real(3) + q);
    const Real t = Real(1) - s0;  // equals (q - 1 + 2a) / (2(1 + a))
    const Real u = (ar + Real::sqrt(Real(4) * (t - ar) + ar * ar)) / Real(2);
    ideal.sizes = {s0 + Real(epsilon), t, u};
  } else if (a < golden_ratio_minus_1_value()) {
    const Rational s = 1 / (2 + a);
    ideal.sizes = {Real(s), Real(Rational(1 - s + epsilon))};
  } else {
    ideal.sizes = {Real(Rational(1 - a))};
  }
  return ideal;
}

Adversary four_item_adversary(const Alpha& alpha, const Rational& epsilon) {
  require_epsilon(epsilon, "four-item adversary");
  const FourItemIdeal ideal = four_item_ideal_sizes(alpha, epsilon);
  const Rational& a = alpha.value();

  std::vector<Rational> sizes;
  if (ideal.sizes.size() == 3) {
    // Round s0 first and derive t from it so that s + t = 1 + eps stays exact.
    const Real q = Real::sqrt(Real(5) - Real(4) * Real(a));
    const Rational s0 = round_real(Real(2) / (Real(3) + q));
    const Rational t = 1 - s0;
    const Rational u =
        round_real((Real(a) + Real::sqrt(Real(Rational(4 * (t - a) + a * a)))) / Real(2));
    sizes = {s0 + epsilon, t, u};
  } else {
    for (const auto& x : ideal.sizes) sizes.push_back(*x.exact_value());
  }

  for (std::size_t i = 0; i < sizes.size(); ++i) {
    const bool increasing = i == 0 ? sizes[i] > 0 : sizes[i] > sizes[i - 1];
    if (!increasing || sizes[i] >= 1) {
      throw ParameterOutOfRange("four-item sizes violate 0 < s < t < u < 1 at alpha " +
                                to_fraction_string(a));
    }
  }
  if (sizes.size() >= 2 && sizes[0] + sizes[1] <= 1) {
    throw ParameterOutOfRange("four-item sizes violate s + t > 1 at alpha " +
                              to_fraction_string(a));
  }

  AdversaryParams params;
  params.alpha = alpha;
  params.epsilon = epsilon;
  params.s = sizes[0];
  if (sizes.size() > 1) params.t = sizes[1];
  if (sizes.size() > 2) params.u = sizes[2];

  const std::size_t horizon = sizes.size() + 1;
  auto next = [sizes = std::move(sizes)](const History& history) -> std::optional<Size> {
    const std::size_t n = history.size();
    const std::size_t k = first_non_reserve(history);
    if (k < n) {
      if (k + 1 < n || answered_with_reject(history[k])) return std::nullopt;
      return Rational(1);
    }
    if (n < sizes.size()) return sizes[n];
    return std::nullopt;
  };
  return Adversary("four-item", std::move(params), horizon, std::move(next));
}

Adversary nonrejecting_adversary(const Alpha& alpha, const Rational& epsilon) {
  require_epsilon(epsilon, "nonrejecting adversary");
  const Rational& a = alpha.value();
  if (a <= 0) throw ParameterOutOfRange("nonrejecting adversary requires alpha > 0");

  const Rational first = 1 / (2 + a);
  const Rational repeat = (1 + a) / (2 + a) + epsilon;
  const Rational target = 2 + a - 10 * epsilon;

  // Ending after n all-reserved items leaves the policy the gain repeat - aR
  // against an optimum of repeat.
  auto enough = [a, repeat, target](const Rational& reserved_total) {
    const Rational gain = repeat - a * reserved_total;
    return gain <= 0 || repeat / gain >= target;
  };
  std::size_t presented = 2;
  Rational reserved = first + repeat;
  while (!enough(reserved)) {
    ++presented;
    reserved += repeat;
  }

  AdversaryParams params;
  params.alpha = alpha;
  params.epsilon = epsilon;
  auto next = [first, repeat, enough](const History& history) -> std::optional<Size> {
    const std::size_t n = history.size();
    if (n == 0) return first;
    const std::size_t k = first_non_reserve(history);
    if (k < n) {
      if (k + 1 < n || answered_with_reject(history[k])) return std::nullopt;
      return Rational(1);
    }
    if (n >= 2) {
      Rational reserved_total = 0;
      for (const auto& e : history) reserved_total += e.item;
      if (enough(reserved_total)) return std::nullopt;
    }
    return repeat;
  };
  return Adversary("nonrejecting", std::move(params), presented + 1, std::move(next));
}

const std::vector<std::string>& adversary_names() {
  static const std::vector<std::string> names = {"chain", "four-item", "nonrejecting"};
  return names;
}

bool adversary_defined_at(std::string_view name, const Alpha& alpha) {
  const Rational& a = alpha.value();
  if (name == "chain") return a > 0;
  if (name == "four-item") return a > four_item_alpha_floor() && a < 1;
  if (name == "nonrejecting") return a > 0;
  return false;
}

Adversary make_adversary(std::string_view name, const Alpha& alpha, const Rational& epsilon,
                         const Rational& delta) {
  if (name == "chain") return chain_adversary(alpha, delta);
  if (name == "four-item") return four_item_adversary(alpha, epsilon);
  if (name == "nonrejecting") return nonrejecting_adversary(alpha, epsilon);
  throw ParseError("unknown adversary '" + std::string(name) + "'");
}

const Interval& alpha0() {
  static const Interval value = [] {
    // Sign of 1/(u - a) - piece(a) for the exact tree at a (s + t = 1).
    auto sign_at = [](const Rational& a) {
      const Real ar(a);
      const Real q = Real::sqrt(Real(5) - Real(4) * ar);
      const Real t = Real(1) - Real(2) / (Real(3) + q);
      const Real u = (ar + Real::sqrt(Real(4) * (t - ar) + ar * ar)) / Real(2);
      return compare(Real(1) / (u - ar), quadratic_ratio_piece(ar), 40);
    };
    Rational lo(1, 5);
    Rational hi(1, 4);
    const auto lo_sign = sign_at(lo);
    const Rational width = pow10(-kRoundingDigits);
    while (hi - lo > width) {
      const Rational mid = (lo + hi) / 2;
      if (sign_at(mid) == lo_sign) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    return Interval{lo, hi};
  }();
  return value;
}

}  // namespace reskp
