#include "reskp/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <string>

#include "reskp/errors.hpp"

namespace reskp {
namespace {

void check_limit(std::size_t n, std::size_t limit, const char* who) {
  if (n > limit) {
    throw InputTooLarge(std::string(who) + ": " + std::to_string(n) +
                        " items exceed the exhaustive limit of " + std::to_string(limit));
  }
}

// Depth-first branch and bound over items sorted descending.
class BestTotal {
 public:
  BestTotal(std::vector<Size> items, Rational capacity) : cap_(std::move(capacity)) {
    for (auto& x : items) {
      if (x <= cap_) items_.push_back(std::move(x));
    }
    std::sort(items_.begin(), items_.end(), std::greater<>());
    suffix_.assign(items_.size() + 1, Rational(0));
    for (std::size_t i = items_.size(); i-- > 0;) suffix_[i] = suffix_[i + 1] + items_[i];
  }

  Rational solve() {
    if (suffix_[0] <= cap_) return suffix_[0];
    search(0, Rational(0));
    return best_;
  }

 private:
  void search(std::size_t i, const Rational& current) {
    if (current > best_) best_ = current;
    if (best_ == cap_ || i == items_.size()) return;
    if (current + suffix_[i] <= best_) return;
    const Rational with = current + items_[i];
    if (with <= cap_) {
      search(i + 1, with);
      if (best_ == cap_) return;
    }
    search(i + 1, current);
  }

  Rational cap_;
  std::vector<Size> items_;
  std::vector<Rational> suffix_;
  Rational best_{0};
};

// Finds the lexicographically smallest ascending selection with total exactly
// `target`: an include-first search over ascending items visits selections in
// lexicographic order.
class SmallestSelection {
 public:
  explicit SmallestSelection(std::vector<Size> items) : items_(std::move(items)) {
    std::sort(items_.begin(), items_.end());
    suffix_.assign(items_.size() + 1, Rational(0));
    for (std::size_t i = items_.size(); i-- > 0;) suffix_[i] = suffix_[i + 1] + items_[i];
  }

  std::vector<Size> find(const Rational& target) {
    chosen_.clear();
    if (!search(0, target)) throw Error("internal: optimal total not reachable");
    return chosen_;
  }

 private:
  bool search(std::size_t i, const Rational& need) {
    if (need == 0) return true;
    if (i == items_.size() || suffix_[i] < need || items_[i] > need) return false;
    chosen_.push_back(items_[i]);
    if (search(i + 1, need - items_[i])) return true;
    chosen_.pop_back();
    std::size_t j = i;
    while (j < items_.size() && items_[j] == items_[i]) ++j;
    return search(j, need);
  }

  std::vector<Size> items_;
  std::vector<Rational> suffix_;
  std::vector<Size> chosen_;
};

}  // namespace

Packing popt(const std::vector<Size>& items, const Rational& capacity, std::size_t limit) {
  check_limit(items.size(), limit, "popt");
  Packing result;
  if (capacity <= 0) return result;
  result.total = BestTotal(items, capacity).solve();
  if (result.total > 0) result.selection = SmallestSelection(items).find(result.total);
  return result;
}

Packing brute_force_popt(const std::vector<Size>& items, const Rational& capacity) {
  check_limit(items.size(), kBruteForceLimit, "brute_force_popt");
  std::vector<Size> sorted = items;
  std::sort(sorted.begin(), sorted.end());
  const std::size_t n = sorted.size();

  // Work on integer multiples of a common denominator.
  Integer common = capacity.get_den();
  for (const auto& x : sorted) mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), x.get_den().get_mpz_t());
  std::vector<Integer> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = sorted[i].get_num() * (common / sorted[i].get_den());
  const Integer cap = capacity.get_num() * (common / capacity.get_den());

  // True iff the ascending selection of mask a precedes that of mask b.
  auto lex_less = [&](std::uint64_t a, std::uint64_t b) {
    std::size_t i = 0;
    std::size_t j = 0;
    while (true) {
      while (i < n && !((a >> i) & 1U)) ++i;
      while (j < n && !((b >> j) & 1U)) ++j;
      if (i == n || j == n) return i == n && j != n;
      if (v[i] != v[j]) return v[i] < v[j];
      ++i;
      ++j;
    }
  };

  Integer best = 0;
  std::uint64_t best_mask = 0;
  Integer current = 0;
  std::uint64_t mask = 0;
  const std::uint64_t count = std::uint64_t{1} << n;
  for (std::uint64_t k = 1; k < count; ++k) {
    const auto bit = static_cast<std::size_t>(__builtin_ctzll(k));  // Gray code step
    mask ^= std::uint64_t{1} << bit;
    if ((mask >> bit) & 1U) {
      current += v[bit];
    } else {
      current -= v[bit];
    }
    if (current > cap) continue;
    if (current > best || (current == best && best > 0 && lex_less(mask, best_mask))) {
      best = current;
      best_mask = mask;
    }
  }

  Packing result;
  for (std::size_t i = 0; i < n; ++i) {
    if ((best_mask >> i) & 1U) result.selection.push_back(sorted[i]);
  }
  result.total = Rational(best, common);
  result.total.canonicalize();
  return result;
}

Rational opt_gain(const Instance& instance, std::size_t limit) {
  std::vector<Size> small;
  std::vector<Size> large;
  for (const auto& x : instance.items) {
    if (x * 2 <= 1) {
      small.push_back(x);
    } else {
      large.push_back(x);
    }
  }
  std::sort(large.begin(), large.end(), std::greater<>());
  large.erase(std::unique(large.begin(), large.end()), large.end());

  check_limit(small.size(), limit, "opt_gain");
  Rational best = BestTotal(small, Rational(1)).solve();
  for (const auto& x : large) {
    if (best == 1) break;
    const Rational candidate = x + BestTotal(small, 1 - x).solve();
    if (candidate > best) best = candidate;
  }
  return best;
}

}  // namespace reskp
