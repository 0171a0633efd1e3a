#include "commands.hpp"

#include <fstream>
#include <map>
#include <ostream>

#include "reskp/adversaries.hpp"
#include "reskp/algorithms.hpp"
#include "reskp/errors.hpp"
#include "reskp/harness.hpp"
#include "reskp/instance_io.hpp"
#include "reskp/oracle.hpp"

namespace reskp::cli {
namespace {

Alpha require_alpha(const GlobalOptions& global) {
  if (!global.alpha) throw ParameterOutOfRange("--alpha is required");
  return Alpha(parse_rational(*global.alpha));
}

std::string selection_string(const std::vector<Size>& items) {
  std::string s = "{";
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i > 0) s += ", ";
    s += to_fraction_string(items[i]);
  }
  return s + "}";
}

void print_trace(std::ostream& out, const Trace& trace) {
  out << "step  item  action  R  t\n";
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    const auto& step = trace.steps[i];
    out << i + 1 << "  " << to_fraction_string(step.item) << "  " << action_name(step.action);
    if (const auto* f = std::get_if<Finalize>(&step.action)) out << ' ' << selection_string(f->selection);
    out << "  " << to_fraction_string(step.after.reserved_total) << "  "
        << to_fraction_string(step.after.packed_total) << '\n';
  }
  const std::size_t ignored = trace.instance.size() - trace.steps.size();
  if (ignored > 0) out << ignored << " item(s) presented after the stop were ignored\n";
  if (trace.final_selection) out << "end: pack " << selection_string(*trace.final_selection) << '\n';
}

void print_result(std::ostream& out, const Rational& gain, const Rational& opt,
                  const Ratio& ratio) {
  out << "gain " << to_fraction_string(gain) << " (" << to_decimal_string(gain) << ")\n"
      << "opt " << to_fraction_string(opt) << " (" << to_decimal_string(opt) << ")\n"
      << "ratio " << ratio.to_fraction_string() << " (" << ratio.to_decimal_string() << ")\n";
}

template <typename Fn>
void with_output(const std::optional<std::string>& path, std::ostream& fallback, Fn&& fn) {
  if (!path) {
    fn(fallback);
    return;
  }
  std::ofstream file(*path, std::ios::binary);
  if (!file) throw Error("cannot write " + *path);
  fn(file);
  file.flush();
  if (!file) throw Error("write failed: " + *path);
}

}  // namespace

int run_command(const GlobalOptions& global, const std::string& instance_path, std::ostream& out) {
  const Alpha alpha = require_alpha(global);
  const Instance instance = load_instance(instance_path);
  const PolicyPtr policy = make_policy(global.policy, alpha, global.precision);
  const RunResult run = run_on_instance(*policy, instance);
  const Rational opt = opt_gain(instance);
  out << "policy " << policy->name() << " alpha " << to_fraction_string(alpha.value())
      << " instance " << instance.id << " (" << instance.size() << " items)\n";
  print_trace(out, run.trace);
  print_result(out, run.outcome.gain, opt, competitive_ratio(opt, run.outcome.gain));
  return kExitOk;
}

int duel_command(const GlobalOptions& global, std::ostream& out) {
  const Alpha alpha = require_alpha(global);
  if (!global.adversary) throw ParameterOutOfRange("--adversary is required");
  const PolicyPtr policy = make_policy(global.policy, alpha, global.precision);
  const Adversary adversary = make_adversary(*global.adversary, alpha,
                                             parse_rational(global.epsilon),
                                             parse_rational(global.delta));
  const DuelResult result = duel(*policy, adversary);
  out << "policy " << policy->name() << " vs " << adversary.name() << " alpha "
      << to_fraction_string(alpha.value()) << '\n';
  print_trace(out, result.trace);
  print_result(out, result.gain, result.opt, result.ratio);
  if (!result.note.empty()) out << "note: " << result.note << '\n';
  return kExitOk;
}

int sweep_command(const GlobalOptions& global, const SweepOptions& options, std::ostream& out,
                  std::ostream& log) {
  SweepSpec spec;
  spec.start = parse_rational(options.grid.from);
  spec.end = parse_rational(options.grid.to);
  spec.step = parse_rational(options.grid.step);
  spec.policies = options.policies.empty() ? std::vector<std::string>{global.policy}
                                           : options.policies;
  spec.adversaries = options.adversaries;
  if (spec.adversaries.empty() && global.adversary) spec.adversaries = {*global.adversary};
  spec.seed = global.seed;
  spec.instances_per_cell = options.instances;
  spec.max_instance_size = options.max_items;
  spec.max_denominator = options.max_denominator;
  spec.epsilon = parse_rational(global.epsilon);
  spec.delta = parse_rational(global.delta);
  spec.precision_digits = global.precision;
  spec.threads = options.threads;

  const SweepResult result = sweep(spec);
  with_output(global.out, out, [&](std::ostream& o) { write_curve(o, result.records); });
  if (options.gnuplot) {
    std::ofstream script(*options.gnuplot);
    if (!script) throw Error("cannot write " + *options.gnuplot);
    write_gnuplot_script(script, global.out.value_or("curve.csv"), result.records);
  }
  log << result.records.size() << " records, " << result.skips.size() << " skipped\n";
  std::map<std::string, std::size_t> reasons;
  for (const auto& skip : result.skips) ++reasons[skip.policy + " vs " + skip.opponent + ": " + skip.reason];
  for (const auto& [reason, n] : reasons) log << "  skipped " << n << " x " << reason << '\n';
  return kExitOk;
}

int verify_command(const GlobalOptions& global, const VerifyOptions& options, std::ostream& out) {
  SweepSpec spec;
  if (global.alpha) {
    spec.start = spec.end = parse_rational(*global.alpha);
  } else {
    spec.start = parse_rational(options.grid.from);
    spec.end = parse_rational(options.grid.to);
    spec.step = parse_rational(options.grid.step);
  }
  spec.policies = {"auto", "threshold-1a", "threshold-2a"};
  spec.adversaries = adversary_names();
  spec.seed = global.seed;
  spec.instances_per_cell = options.instances;
  spec.epsilon = parse_rational(global.epsilon);
  spec.delta = parse_rational(global.delta);
  spec.precision_digits = global.precision;
  spec.threads = options.threads;
  spec.keep_traces = true;

  const SweepResult result = sweep(spec);
  std::vector<VerificationReport> reports = verify_lemmas(result.traces);
  const auto prefix = sorted_prefix_suite(sweep_grid(spec), options.prefix_instances, global.seed);
  reports.insert(reports.end(), prefix.begin(), prefix.end());

  std::map<std::string, std::pair<std::size_t, std::size_t>> tally;  // checked, failed
  bool all_pass = true;
  for (const auto& r : reports) {
    auto& [checked, failed] = tally[r.check];
    ++checked;
    if (!r.pass) {
      ++failed;
      all_pass = false;
    }
    if (!r.pass || options.verbose) out << to_string(r) << '\n';
  }
  for (const auto& [check, counts] : tally) {
    out << check << ": " << counts.first << " checked, " << counts.second << " failed\n";
  }
  out << result.traces.size() << " traces verified\n";
  return all_pass ? kExitOk : kExitFailure;
}

int gen_command(const GlobalOptions& global, const GenOptions& options, std::ostream& out) {
  const Instance instance =
      random_instance(options.n, global.seed, options.max_denominator, "random");
  const std::string comment = "random instance n=" + std::to_string(options.n) +
                              " seed=" + std::to_string(global.seed) +
                              " d=" + std::to_string(options.max_denominator);
  with_output(global.out, out, [&](std::ostream& o) { write_instance(o, instance, comment); });
  return kExitOk;
}

}  // namespace reskp::cli
