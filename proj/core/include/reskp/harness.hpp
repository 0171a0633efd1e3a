#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "reskp/adversaries.hpp"
#include "reskp/run.hpp"

namespace reskp {

struct RatioRecord {
  Rational alpha;
  std::string policy;
  std::string opponent;  // adversary name or instance id
  Rational gain;
  Rational opt;
  Ratio ratio;
};

RatioRecord measure_ratio(const Policy& policy, const Instance& instance,
                          std::string policy_label = {});

// n sizes drawn uniformly from {1/d, 2/d, ..., d/d}; a pure function of
// (n, seed, d).
Instance random_instance(std::size_t n, std::uint64_t seed, std::uint64_t max_denominator = 1000,
                         std::string id = {});

struct SweepSpec {
  Rational start{1, 100};
  Rational end{99, 100};
  Rational step{1, 100};
  std::vector<std::string> policies{"auto"};
  std::vector<std::string> adversaries;
  std::uint64_t seed = 1;
  std::size_t instances_per_cell = 0;
  std::size_t max_instance_size = 15;  // each random instance has 1..max items
  std::uint64_t max_denominator = 1000;
  Rational epsilon{1, 1000000};
  Rational delta{1, 1000};
  int precision_digits = kDefaultPrecisionDigits;
  unsigned threads = 1;
  bool keep_traces = false;
};

// Throws ParameterOutOfRange unless 0 < start <= end < 1 and step > 0.
void validate_sweep_spec(const SweepSpec& spec);
// start, start + step, ... up to end.
std::vector<Rational> sweep_grid(const SweepSpec& spec);

struct SkipRecord {
  Rational alpha;
  std::string policy;
  std::string opponent;
  std::string reason;
};

struct SweepResult {
  std::vector<RatioRecord> records;  // sorted by alpha, policy, opponent
  std::vector<SkipRecord> skips;     // same order
  std::vector<Trace> traces;         // filled when spec.keep_traces
};

// Every grid alpha x policy x (adversaries + random instances). Cells may run
// on several threads; the merged output does not depend on it.
SweepResult sweep(const SweepSpec& spec);

struct VerificationReport {
  std::string check;
  std::string subject;  // trace or instance reference
  bool pass = true;
  // Witness of a failure: the violating step (1-based), R, t and alpha.
  std::optional<std::size_t> step;
  Rational reserved_total;
  Rational packed_total;
  Rational alpha;
  std::string detail;
};

std::string to_string(const VerificationReport& report);

// Applies every lemma check relevant to each trace's policy:
//   lemma-2          threshold 1/(2+a): R < 1/((2+a)(1-a)) at every step
//   lemma-9          threshold 1-a: R <= 1 at every step
//   lemma-5          threshold 1/(2+a), a <= 1/2: at most one large reserved
//                    item for a <= alpha4, at most two otherwise
//   lemma-3          threshold 1/(2+a): packing at least 1/((2+a)(1-a))
//                    implies ratio <= 2+a
//   nonrejection     threshold policies never reject
// Traces of other policies produce no reports.
std::vector<VerificationReport> verify_lemmas(const std::vector<Trace>& traces);

// Runs a threshold policy on the instance and on the instance whose items
// before the trigger are sorted in decreasing order; passes when both runs
// trigger at the same index with the same gain. Throws NotApplicable when
// the policy is not a threshold policy or never triggers.
VerificationReport sorted_prefix_check(const Policy& policy, const Instance& instance);

// Runs sorted_prefix_check for the two threshold policies on seeded random
// instances across the grid until `count` instances with a nontrivial prefix
// (trigger index >= 3) have been checked. Instances are drawn like sweep's.
std::vector<VerificationReport> sorted_prefix_suite(const std::vector<Rational>& grid,
                                                    std::size_t count, std::uint64_t seed,
                                                    std::size_t max_items = 15,
                                                    std::uint64_t max_denominator = 1000);

// CSV with header
//   alpha,policy,opponent,gain,opt,ratio,alpha_decimal,gain_decimal,opt_decimal,ratio_decimal
// Fractions are "p/q", decimals have 15 significant digits, an infinite
// ratio is written "inf".
void write_curve(std::ostream& out, const std::vector<RatioRecord>& records);
void emit_curve(const std::vector<RatioRecord>& records, const std::string& path);

// gnuplot script plotting ratio over alpha from a curve CSV, one line per
// (policy, opponent) pair.
void write_gnuplot_script(std::ostream& out, const std::string& csv_path,
                          const std::vector<RatioRecord>& records);

}  // namespace reskp
