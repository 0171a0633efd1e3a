#pragma once

#include <cstddef>
#include <vector>

#include "reskp/model.hpp"

namespace reskp {

inline constexpr std::size_t kDefaultExhaustiveLimit = 30;
inline constexpr std::size_t kBruteForceLimit = 20;

struct Packing {
  std::vector<Size> selection;  // sorted ascending
  Rational total{0};
};

// Largest-total sub-multiset of `items` with total <= capacity. Among optimal
// selections the lexicographically smallest ascending-sorted one is returned.
// Throws InputTooLarge when items.size() > limit.
Packing popt(const std::vector<Size>& items, const Rational& capacity = 1,
             std::size_t limit = kDefaultExhaustiveLimit);

// Same contract as popt by plain enumeration of all subsets. Independent
// cross-check for popt; throws InputTooLarge above kBruteForceLimit items.
Packing brute_force_popt(const std::vector<Size>& items, const Rational& capacity = 1);

// Offline optimum over all items of the instance (OPT pays no reservation).
// Items larger than 1/2 are mutually exclusive, so only the items of size
// <= 1/2 are searched exhaustively; long adversarial sequences made mostly
// of such large items stay cheap.
Rational opt_gain(const Instance& instance, std::size_t limit = kDefaultExhaustiveLimit);

}  // namespace reskp
