#include "reskp/harness.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <iterator>
#include <limits>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include "reskp/algorithms.hpp"
#include "reskp/errors.hpp"
#include "reskp/oracle.hpp"

namespace reskp {
namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Uniform in [0, bound) by rejection; std::uniform_int_distribution is not
// reproducible across standard libraries.
std::uint64_t uniform_below(std::mt19937_64& gen, std::uint64_t bound) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x = gen();
  while (x >= limit) x = gen();
  return x % bound;
}

std::string instance_label(std::size_t index, std::size_t count) {
  std::string digits = std::to_string(index);
  const std::size_t width = std::max<std::size_t>(4, std::to_string(count).size());
  if (digits.size() < width) digits.insert(0, width - digits.size(), '0');
  return "random-" + digits;
}

std::string subject_of(const Trace& trace) {
  return trace.policy_name + " on " + (trace.instance.id.empty() ? "<anon>" : trace.instance.id) +
         " at alpha " + to_fraction_string(trace.config.alpha.value());
}

struct CellOutput {
  std::vector<RatioRecord> records;
  std::vector<SkipRecord> skips;
  std::vector<Trace> traces;
};

struct Opponent {
  std::string name;
  bool is_adversary;
  std::size_t instance_index;
};

CellOutput run_cell(const SweepSpec& spec, std::size_t alpha_index, const Rational& a,
                    const std::vector<std::string>& policies,
                    const std::vector<Opponent>& opponents) {
  CellOutput out;
  const Alpha alpha(a);

  std::vector<Instance> instances;
  const std::uint64_t cell_seed = splitmix64(spec.seed ^ splitmix64(alpha_index + 1));
  for (std::size_t j = 0; j < spec.instances_per_cell; ++j) {
    const std::uint64_t seed = splitmix64(cell_seed + j);
    std::mt19937_64 gen(seed);
    const std::size_t n = 1 + uniform_below(gen, spec.max_instance_size);
    instances.push_back(random_instance(n, gen(), spec.max_denominator,
                                        instance_label(j, spec.instances_per_cell)));
  }

  for (const auto& policy_name : policies) {
    PolicyPtr policy;
    std::string policy_problem;
    if (!policy_defined_at(policy_name, alpha)) {
      policy_problem = "policy undefined at this alpha";
    } else {
      policy = make_policy(policy_name, alpha, spec.precision_digits);
    }
    for (const auto& opponent : opponents) {
      if (!policy) {
        out.skips.push_back({a, policy_name, opponent.name, policy_problem});
        continue;
      }
      if (!opponent.is_adversary) {
        const Instance& instance = instances[opponent.instance_index];
        RunResult run = run_on_instance(*policy, instance);
        const Rational opt = opt_gain(instance);
        out.records.push_back({a, policy_name, opponent.name, run.outcome.gain, opt,
                               competitive_ratio(opt, run.outcome.gain)});
        if (spec.keep_traces) out.traces.push_back(std::move(run.trace));
        continue;
      }
      if (!adversary_defined_at(opponent.name, alpha)) {
        out.skips.push_back({a, policy_name, opponent.name, "adversary undefined at this alpha"});
        continue;
      }
      std::optional<Adversary> adversary;
      try {
        adversary = make_adversary(opponent.name, alpha, spec.epsilon, spec.delta);
      } catch (const ParameterOutOfRange& e) {
        out.skips.push_back({a, policy_name, opponent.name, e.what()});
        continue;
      }
      DuelResult result = duel(*policy, *adversary);
      out.records.push_back(
          {a, policy_name, opponent.name, result.gain, result.opt, result.ratio});
      if (spec.keep_traces) out.traces.push_back(std::move(result.trace));
    }
  }
  return out;
}

}  // namespace

RatioRecord measure_ratio(const Policy& policy, const Instance& instance,
                          std::string policy_label) {
  const RunResult run = run_on_instance(policy, instance);
  const Rational opt = opt_gain(instance);
  return {policy.alpha().value(),
          policy_label.empty() ? policy.name() : std::move(policy_label),
          instance.id,
          run.outcome.gain,
          opt,
          competitive_ratio(opt, run.outcome.gain)};
}

Instance random_instance(std::size_t n, std::uint64_t seed, std::uint64_t max_denominator,
                         std::string id) {
  if (max_denominator < 2) throw ParameterOutOfRange("max_denominator must be at least 2");
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(n), static_cast<std::uint32_t>(max_denominator),
                    static_cast<std::uint32_t>(max_denominator >> 32)};
  std::mt19937_64 gen(seq);
  Instance instance;
  instance.id = std::move(id);
  instance.items.reserve(n);
  const Integer d(std::to_string(max_denominator));
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint64_t k = 1 + uniform_below(gen, max_denominator);
    Rational x(Integer(std::to_string(k)), d);
    x.canonicalize();
    instance.items.push_back(std::move(x));
  }
  return instance;
}

void validate_sweep_spec(const SweepSpec& spec) {
  if (!(spec.start > 0 && spec.start <= spec.end && spec.end < 1)) {
    throw ParameterOutOfRange("sweep grid requires 0 < start <= end < 1");
  }
  if (spec.step <= 0) throw ParameterOutOfRange("sweep step must be positive");
  if (spec.max_instance_size == 0 && spec.instances_per_cell > 0) {
    throw ParameterOutOfRange("random instances need max_instance_size >= 1");
  }
}

std::vector<Rational> sweep_grid(const SweepSpec& spec) {
  validate_sweep_spec(spec);
  std::vector<Rational> grid;
  for (Rational a = spec.start; a <= spec.end; a += spec.step) grid.push_back(a);
  return grid;
}

SweepResult sweep(const SweepSpec& spec) {
  const std::vector<Rational> grid = sweep_grid(spec);
  const std::set<std::string> policy_set(spec.policies.begin(), spec.policies.end());
  const std::vector<std::string> policies(policy_set.begin(), policy_set.end());
  for (const auto& name : policies) {
    const auto& known = policy_names();
    if (std::find(known.begin(), known.end(), name) == known.end()) {
      throw ParseError("unknown policy '" + name + "'");
    }
  }

  std::vector<Opponent> opponents;
  const std::set<std::string> adversary_set(spec.adversaries.begin(), spec.adversaries.end());
  for (const auto& name : adversary_set) {
    const auto& known = adversary_names();
    if (std::find(known.begin(), known.end(), name) == known.end()) {
      throw ParseError("unknown adversary '" + name + "'");
    }
    opponents.push_back({name, true, 0});
  }
  for (std::size_t j = 0; j < spec.instances_per_cell; ++j) {
    opponents.push_back({instance_label(j, spec.instances_per_cell), false, j});
  }

  std::vector<CellOutput> cells(grid.size());
  std::vector<std::exception_ptr> errors(grid.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < grid.size(); i = next++) {
      try {
        cells[i] = run_cell(spec, i, grid[i], policies, opponents);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const unsigned threads = std::max(1U, std::min<unsigned>(spec.threads, grid.size()));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  SweepResult result;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (errors[i]) std::rethrow_exception(errors[i]);
    auto& cell = cells[i];
    std::move(cell.records.begin(), cell.records.end(), std::back_inserter(result.records));
    std::move(cell.skips.begin(), cell.skips.end(), std::back_inserter(result.skips));
    std::move(cell.traces.begin(), cell.traces.end(), std::back_inserter(result.traces));
  }
  return result;
}

std::string to_string(const VerificationReport& r) {
  std::ostringstream out;
  out << (r.pass ? "PASS " : "FAIL ") << r.check << " | " << r.subject;
  if (!r.pass) {
    out << " | step " << (r.step ? std::to_string(*r.step) : std::string("end"))
        << " R=" << to_fraction_string(r.reserved_total)
        << " t=" << to_fraction_string(r.packed_total)
        << " alpha=" << to_fraction_string(r.alpha);
  }
  if (!r.detail.empty()) out << " | " << r.detail;
  return out.str();
}

std::vector<VerificationReport> verify_lemmas(const std::vector<Trace>& traces) {
  std::vector<VerificationReport> reports;
  for (const auto& trace : traces) {
    const PolicyConfig& config = trace.config;
    if (config.kind != PolicyKind::kThreshold || !config.threshold ||
        !config.threshold->is_exact()) {
      continue;
    }
    const Rational a = config.alpha.value();
    const Rational& threshold = config.threshold->lower();
    const bool is_alg2 = threshold == 1 / (2 + a);
    const bool is_alg3 = threshold == 1 - a;
    const std::string subject = subject_of(trace);

    auto report = [&](std::string check) {
      VerificationReport r;
      r.check = std::move(check);
      r.subject = subject;
      r.alpha = a;
      r.reserved_total = trace.final_state.reserved_total;
      r.packed_total = trace.final_state.packed_total;
      return r;
    };
    auto fail_at = [&](VerificationReport& r, std::size_t index, std::string detail) {
      r.pass = false;
      r.step = index + 1;
      r.reserved_total = trace.steps[index].after.reserved_total;
      r.packed_total = trace.steps[index].after.packed_total;
      r.detail = std::move(detail);
    };

    {
      VerificationReport r = report("nonrejection");
      for (std::size_t i = 0; i < trace.steps.size(); ++i) {
        if (std::holds_alternative<Reject>(trace.steps[i].action)) {
          fail_at(r, i, "threshold policy rejected an item");
          break;
        }
      }
      reports.push_back(std::move(r));
    }

    if (is_alg2 && a < 1) {
      const Rational bound = 1 / ((2 + a) * (1 - a));
      VerificationReport r = report("lemma-2");
      for (std::size_t i = 0; i < trace.steps.size(); ++i) {
        if (trace.steps[i].after.reserved_total >= bound) {
          fail_at(r, i, "R reached " + to_fraction_string(bound));
          break;
        }
      }
      reports.push_back(std::move(r));

      VerificationReport min_pack = report("lemma-3");
      if (trace.final_state.packed_total >= bound) {
        const Rational gain = outcome_of(trace.final_state, config.alpha).gain;
        const Ratio ratio = competitive_ratio(opt_gain(trace.instance), gain);
        if (ratio.is_infinite() || ratio.value() > 2 + a) {
          min_pack.pass = false;
          min_pack.detail = "packed " + to_fraction_string(trace.final_state.packed_total) +
                            " but ratio " + ratio.to_fraction_string() + " exceeds 2+alpha";
        }
      } else {
        min_pack.detail = "premise not met";
      }
      reports.push_back(std::move(min_pack));

      if (a > 0 && a <= Rational(1, 2)) {
        const std::size_t limit = a <= alpha4() ? 1 : 2;
        VerificationReport r5 = report("lemma-5");
        std::size_t large = 0;
        for (std::size_t i = 0; i < trace.steps.size(); ++i) {
          const auto& step = trace.steps[i];
          if (!std::holds_alternative<Reserve>(step.action)) continue;
          if (classify_item(step.item, config.alpha) == ItemClass::kLarge) ++large;
          if (large > limit) {
            fail_at(r5, i, std::to_string(large) + " large items reserved, limit " +
                               std::to_string(limit));
            break;
          }
        }
        reports.push_back(std::move(r5));
      }
    }

    if (is_alg3) {
      VerificationReport r = report("lemma-9");
      for (std::size_t i = 0; i < trace.steps.size(); ++i) {
        if (trace.steps[i].after.reserved_total > 1) {
          fail_at(r, i, "R exceeded 1");
          break;
        }
      }
      reports.push_back(std::move(r));
    }
  }
  return reports;
}

VerificationReport sorted_prefix_check(const Policy& policy, const Instance& instance) {
  if (policy.config().kind != PolicyKind::kThreshold) {
    throw NotApplicable("sorted-prefix check needs a threshold policy");
  }
  const RunResult original = run_on_instance(policy, instance);
  const auto trigger = original.trace.trigger_index();
  if (!trigger) throw NotApplicable("policy never triggers on " + instance.id);

  Instance sorted = instance;
  sorted.id = instance.id + "-sorted";
  std::sort(sorted.items.begin(), sorted.items.begin() + static_cast<std::ptrdiff_t>(*trigger - 1),
            std::greater<>());
  const RunResult rearranged = run_on_instance(policy, sorted);
  const auto trigger2 = rearranged.trace.trigger_index();

  VerificationReport r;
  r.check = "sorted-prefix";
  r.subject = subject_of(original.trace);
  r.alpha = policy.alpha().value();
  r.reserved_total = original.outcome.reserved_total;
  r.packed_total = original.outcome.packed_total;
  r.step = trigger;
  r.pass = trigger2 == trigger && rearranged.outcome.gain == original.outcome.gain;
  r.detail = "trigger " + std::to_string(*trigger) + " vs " +
             (trigger2 ? std::to_string(*trigger2) : std::string("none")) + ", gain " +
             to_fraction_string(original.outcome.gain) + " vs " +
             to_fraction_string(rearranged.outcome.gain);
  return r;
}

std::vector<VerificationReport> sorted_prefix_suite(const std::vector<Rational>& grid,
                                                    std::size_t count, std::uint64_t seed,
                                                    std::size_t max_items,
                                                    std::uint64_t max_denominator) {
  std::vector<VerificationReport> reports;
  if (grid.empty() || count == 0) return reports;
  const std::size_t max_attempts = 1000 * count;
  for (std::size_t j = 0; j < max_attempts && reports.size() < count; ++j) {
    const Alpha alpha(grid[j % grid.size()]);
    const PolicyPtr policy =
        (j / grid.size()) % 2 == 0 ? make_policy_alg2(alpha) : make_policy_alg3(alpha);
    std::mt19937_64 gen(splitmix64(seed + j));
    const std::size_t n = 1 + uniform_below(gen, max_items);
    const Instance instance =
        random_instance(n, gen(), max_denominator, "prefix-" + std::to_string(j));
    const auto trigger = run_on_instance(*policy, instance).trace.trigger_index();
    if (!trigger || *trigger < 3) continue;
    reports.push_back(sorted_prefix_check(*policy, instance));
  }
  return reports;
}

}  // namespace reskp
