#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "reskp/run.hpp"

namespace reskp {

// (1 + sqrt(5 - 4a)) / (2 (1 - a)), the middle piece of the optimal ratio.
Real quadratic_ratio_piece(const Real& alpha);

// Optimal competitive ratio for 0 < alpha < 1:
//   2                          on (0, 1/4]
//   (1 + sqrt(5-4a))/(2(1-a))  on (1/4, sqrt2-1]
//   2 + a                      on (sqrt2-1, phi-1)
//   1/(1-a)                    on [phi-1, 1)
// Throws OutOfDomain outside (0, 1).
RatioValue rho_star(const Alpha& alpha, int digits = kDefaultPrecisionDigits);
Real rho_star_real(const Alpha& alpha);

// Algorithm 1 (may reject); requires 0 < alpha < sqrt2-1.
PolicyPtr make_policy_alg1(const Alpha& alpha, int digits = kDefaultPrecisionDigits);

// Finalizes popt(reserved + {x}) as soon as x + (1-a)R >= threshold, reserves
// otherwise; never rejects. Requires 0 < threshold <= 1.
PolicyPtr make_policy_threshold(const Alpha& alpha, RatioValue threshold, std::string name);
PolicyPtr make_policy_alg2(const Alpha& alpha);  // threshold 1/(2+a)
PolicyPtr make_policy_alg3(const Alpha& alpha);  // threshold 1-a

// Baselines: pack whenever the item fits; reject everything.
PolicyPtr make_policy_take_first_fit(const Alpha& alpha);
PolicyPtr make_policy_reject_all(const Alpha& alpha);

// Algorithm 1 for a <= sqrt2-1, Algorithm 2 below phi-1, Algorithm 3 from
// phi-1 on.
PolicyPtr select_policy(const Alpha& alpha, int digits = kDefaultPrecisionDigits);

// CLI names: alg1, threshold-2a, threshold-1a, auto, take-first-fit,
// reject-all. Throws ParseError for an unknown name and OutOfDomain when the
// policy is undefined at alpha.
PolicyPtr make_policy(std::string_view name, const Alpha& alpha,
                      int digits = kDefaultPrecisionDigits);
const std::vector<std::string>& policy_names();
// The five fixed policies (everything but "auto").
const std::vector<std::string>& catalog_policy_names();
bool policy_defined_at(std::string_view name, const Alpha& alpha);

enum class ItemClass { kSmall, kLarge };

// (1 - a - a^2) / ((2 + a)(1 - a)); requires 0 < a <= phi-1.
Rational small_item_threshold(const Alpha& alpha);
ItemClass classify_item(const Size& size, const Alpha& alpha);

// Positive root of 1 - 2a - a^2 + a^3 (about 0.445).
const RatioValue& alpha4();
const RatioValue& sqrt2_minus_1_value();
const RatioValue& golden_ratio_minus_1_value();

}  // namespace reskp
