#include "reskp/algorithms.hpp"

#include <algorithm>
#include <utility>

#include "reskp/errors.hpp"
#include "reskp/oracle.hpp"

namespace reskp {
namespace {

void require_open_unit(const Alpha& alpha, const char* what) {
  if (alpha.value() <= 0 || alpha.value() >= 1) {
    throw OutOfDomain(std::string(what) + " requires 0 < alpha < 1, got " +
                      to_fraction_string(alpha.value()));
  }
}

Finalize finalize_best(const RunState& state, const Size& item) {
  std::vector<Size> pool = state.reserved;
  pool.push_back(item);
  return Finalize{popt(pool, state.remaining_capacity()).selection};
}

std::vector<Size> best_reserved(const RunState& state) {
  return popt(state.reserved, state.remaining_capacity()).selection;
}

class Alg1Policy final : public Policy {
 public:
  Alg1Policy(const Alpha& alpha, int digits)
      : Policy("alg1", make_config(alpha, digits)),
        inv_rho_(Real(1) / config().rho->real(), digits),
        one_minus_mu_(Real(1) - config().mu->real(), digits) {}

  StepAction decide(const RunState& state, const Size& x) const override {
    const Rational& a = alpha().value();
    const Rational& reserved = state.reserved_total;
    if (Rational(x + reserved * (1 - a)) < inv_rho_) return Reserve{};
    if (x + reserved <= state.remaining_capacity()) return finalize_best(state, x);
    const bool all_small = std::all_of(state.reserved.begin(), state.reserved.end(),
                                       [&](const Size& r) { return r <= one_minus_mu_; });
    Finalize best = finalize_best(state, x);
    if (all_small) return best;
    if (Rational(sum(best.selection) - a * reserved) >= inv_rho_) return best;
    return Reject{};
  }

  std::vector<Size> final_selection(const RunState& state) const override {
    return best_reserved(state);
  }

 private:
  static PolicyConfig make_config(const Alpha& alpha, int digits) {
    PolicyConfig config;
    config.alpha = alpha;
    config.kind = PolicyKind::kAlg1;
    const Real rho = Real::max(Real(2), quadratic_ratio_piece(Real(alpha.value())));
    config.rho = RatioValue(rho, digits);
    config.mu = RatioValue(Real(1) / (rho * Real(alpha.complement())), digits);
    return config;
  }

  RatioValue inv_rho_;
  RatioValue one_minus_mu_;
};

class ThresholdPolicy final : public Policy {
 public:
  ThresholdPolicy(const Alpha& alpha, RatioValue threshold, std::string name)
      : Policy(std::move(name), make_config(alpha, std::move(threshold))) {}

  StepAction decide(const RunState& state, const Size& x) const override {
    const Rational level = x + alpha().complement() * state.reserved_total;
    if (level >= *config().threshold) return finalize_best(state, x);
    return Reserve{};
  }

  std::vector<Size> final_selection(const RunState& state) const override {
    return best_reserved(state);
  }

 private:
  static PolicyConfig make_config(const Alpha& alpha, RatioValue threshold) {
    if (threshold.upper() <= 0 || threshold.lower() > 1) {
      throw OutOfDomain("threshold must lie in (0, 1]");
    }
    PolicyConfig config;
    config.alpha = alpha;
    config.kind = PolicyKind::kThreshold;
    config.threshold = std::move(threshold);
    return config;
  }
};

class TakeFirstFitPolicy final : public Policy {
 public:
  explicit TakeFirstFitPolicy(const Alpha& alpha)
      : Policy("take-first-fit", PolicyConfig{alpha, PolicyKind::kTakeFirstFit, {}, {}, {}}) {}

  StepAction decide(const RunState& state, const Size& x) const override {
    if (x <= state.remaining_capacity()) return PackItem{};
    return Reject{};
  }
  std::vector<Size> final_selection(const RunState& state) const override {
    return best_reserved(state);
  }
};

class RejectAllPolicy final : public Policy {
 public:
  explicit RejectAllPolicy(const Alpha& alpha)
      : Policy("reject-all", PolicyConfig{alpha, PolicyKind::kRejectAll, {}, {}, {}}) {}

  StepAction decide(const RunState&, const Size&) const override { return Reject{}; }
  std::vector<Size> final_selection(const RunState&) const override { return {}; }
};

}  // namespace

Real quadratic_ratio_piece(const Real& alpha) {
  return (Real(1) + Real::sqrt(Real(5) - Real(4) * alpha)) / (Real(2) * (Real(1) - alpha));
}

Real rho_star_real(const Alpha& alpha) {
  require_open_unit(alpha, "rho_star");
  const Rational& a = alpha.value();
  if (a <= Rational(1, 4)) return Real(2);
  if (a < sqrt2_minus_1_value()) return quadratic_ratio_piece(Real(a));
  if (a < golden_ratio_minus_1_value()) return Real(Rational(2 + a));
  return Real(Rational(1 / (1 - a)));
}

RatioValue rho_star(const Alpha& alpha, int digits) {
  return RatioValue(rho_star_real(alpha), digits);
}

PolicyPtr make_policy_alg1(const Alpha& alpha, int digits) {
  if (alpha.value() <= 0 || !(alpha.value() < sqrt2_minus_1_value())) {
    throw OutOfDomain("alg1 requires 0 < alpha < sqrt(2)-1, got " +
                      to_fraction_string(alpha.value()));
  }
  return std::make_shared<Alg1Policy>(alpha, digits);
}

PolicyPtr make_policy_threshold(const Alpha& alpha, RatioValue threshold, std::string name) {
  return std::make_shared<ThresholdPolicy>(alpha, std::move(threshold), std::move(name));
}

PolicyPtr make_policy_alg2(const Alpha& alpha) {
  return make_policy_threshold(alpha, RatioValue(Rational(1 / (2 + alpha.value()))),
                               "threshold-2a");
}

PolicyPtr make_policy_alg3(const Alpha& alpha) {
  if (alpha.value() >= 1) throw OutOfDomain("threshold-1a requires alpha < 1");
  return make_policy_threshold(alpha, RatioValue(alpha.complement()), "threshold-1a");
}

PolicyPtr make_policy_take_first_fit(const Alpha& alpha) {
  return std::make_shared<TakeFirstFitPolicy>(alpha);
}

PolicyPtr make_policy_reject_all(const Alpha& alpha) {
  return std::make_shared<RejectAllPolicy>(alpha);
}

PolicyPtr select_policy(const Alpha& alpha, int digits) {
  require_open_unit(alpha, "select_policy");
  const Rational& a = alpha.value();
  if (a < sqrt2_minus_1_value()) return make_policy_alg1(alpha, digits);
  if (a < golden_ratio_minus_1_value()) return make_policy_alg2(alpha);
  return make_policy_alg3(alpha);
}

const std::vector<std::string>& policy_names() {
  static const std::vector<std::string> names = {
      "alg1", "auto", "reject-all", "take-first-fit", "threshold-1a", "threshold-2a"};
  return names;
}

const std::vector<std::string>& catalog_policy_names() {
  static const std::vector<std::string> names = {
      "alg1", "reject-all", "take-first-fit", "threshold-1a", "threshold-2a"};
  return names;
}

bool policy_defined_at(std::string_view name, const Alpha& alpha) {
  const Rational& a = alpha.value();
  if (name == "take-first-fit" || name == "reject-all") return true;
  if (a <= 0 || a >= 1) return false;
  if (name == "alg1") return a < sqrt2_minus_1_value();
  return name == "auto" || name == "threshold-2a" || name == "threshold-1a";
}

PolicyPtr make_policy(std::string_view name, const Alpha& alpha, int digits) {
  if (name == "alg1") return make_policy_alg1(alpha, digits);
  if (name == "auto") return select_policy(alpha, digits);
  if (name == "take-first-fit") return make_policy_take_first_fit(alpha);
  if (name == "reject-all") return make_policy_reject_all(alpha);
  if (name == "threshold-2a" || name == "threshold-1a") {
    require_open_unit(alpha, "threshold policies");
    return name == "threshold-2a" ? make_policy_alg2(alpha) : make_policy_alg3(alpha);
  }
  throw ParseError("unknown policy '" + std::string(name) + "'");
}

Rational small_item_threshold(const Alpha& alpha) {
  const Rational& a = alpha.value();
  if (a <= 0 || a > golden_ratio_minus_1_value()) {
    throw OutOfDomain("item classification requires 0 < alpha <= phi-1");
  }
  return (1 - a - a * a) / ((2 + a) * (1 - a));
}

ItemClass classify_item(const Size& size, const Alpha& alpha) {
  return size < small_item_threshold(alpha) ? ItemClass::kSmall : ItemClass::kLarge;
}

const RatioValue& alpha4() {
  static const RatioValue value(
      Real::polynomial_root({Rational(1), Rational(-2), Rational(-1), Rational(1)},
                            Rational(44, 100), Rational(45, 100)));
  return value;
}

const RatioValue& sqrt2_minus_1_value() {
  static const RatioValue value(sqrt2_minus_1());
  return value;
}

const RatioValue& golden_ratio_minus_1_value() {
  static const RatioValue value(golden_ratio_minus_1());
  return value;
}

}  // namespace reskp
