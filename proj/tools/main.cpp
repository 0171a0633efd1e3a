// reskp: online knapsack with reservation costs, from the command line.
//
//   reskp run FILE --policy alg1 --alpha 1/5
//   reskp duel --policy auto --adversary four-item --alpha 3/10 --epsilon 1/1000000
//   reskp sweep --policies auto --adversaries four-item --out curve.csv
//   reskp verify --instances 20
//   reskp gen --n 12 --seed 7 --out inst.txt
//
// Exit codes: 0 success, 1 verification failure or runtime error, 2 usage
// error (bad flags, unparsable or out-of-range parameters, bad input files).

#include <CLI11.hpp>

#include <iostream>

#include "commands.hpp"
#include "reskp/errors.hpp"

namespace {

using namespace reskp;

bool is_usage_error(const Error& e) {
  return dynamic_cast<const ParseError*>(&e) || dynamic_cast<const SizeOutOfRange*>(&e) ||
         dynamic_cast<const AlphaOutOfRange*>(&e) || dynamic_cast<const DeltaOutOfRange*>(&e) ||
         dynamic_cast<const ParameterOutOfRange*>(&e) || dynamic_cast<const OutOfDomain*>(&e);
}

void add_grid_options(CLI::App* cmd, cli::GridOptions& grid) {
  cmd->add_option("--from", grid.from, "first alpha of the grid (p/q or decimal)")
      ->capture_default_str();
  cmd->add_option("--to", grid.to, "last alpha of the grid")->capture_default_str();
  cmd->add_option("--step", grid.step, "grid step")->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Online simple knapsack with reservation costs: policies, adversaries, sweeps"};
  app.fallthrough();
  app.require_subcommand(1);

  cli::GlobalOptions global;
  app.add_option("--alpha", global.alpha, "reservation factor, p/q or decimal");
  app.add_option("--policy", global.policy,
                 "alg1, threshold-2a, threshold-1a, auto, take-first-fit, reject-all")
      ->capture_default_str();
  app.add_option("--adversary", global.adversary, "chain, four-item, nonrejecting");
  app.add_option("--epsilon", global.epsilon, "adversary epsilon")->capture_default_str();
  app.add_option("--delta", global.delta, "chain adversary delta")->capture_default_str();
  app.add_option("--seed", global.seed, "random seed")->capture_default_str();
  app.add_option("--out", global.out, "output path (default: stdout)");
  app.add_option("--precision", global.precision, "enclosure width exponent")
      ->check(CLI::Range(10, 200))
      ->capture_default_str();

  std::string instance_path;
  auto* run = app.add_subcommand("run", "run a policy on an instance file");
  run->add_option("file", instance_path, "instance file")->required();

  auto* duel = app.add_subcommand("duel", "play a policy against an adversary");

  cli::SweepOptions sweep_options;
  auto* sweep = app.add_subcommand("sweep", "alpha-grid experiment, CSV output");
  add_grid_options(sweep, sweep_options.grid);
  sweep->add_option("--policies", sweep_options.policies, "policies (default: --policy)")
      ->delimiter(',');
  sweep->add_option("--adversaries", sweep_options.adversaries, "adversaries")->delimiter(',');
  sweep->add_option("--instances", sweep_options.instances, "random instances per alpha")
      ->capture_default_str();
  sweep->add_option("--max-items", sweep_options.max_items, "largest random instance")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sweep->add_option("--max-denominator", sweep_options.max_denominator,
                    "random sizes are k/d for this d")
      ->check(CLI::Range(2, 1000000000))
      ->capture_default_str();
  sweep->add_option("--threads", sweep_options.threads, "worker threads")
      ->check(CLI::Range(1, 256))
      ->capture_default_str();
  sweep->add_option("--gnuplot", sweep_options.gnuplot, "also write a gnuplot script here");

  cli::VerifyOptions verify_options;
  auto* verify = app.add_subcommand("verify", "lemma suite over generated traces");
  add_grid_options(verify, verify_options.grid);
  verify->add_option("--instances", verify_options.instances, "random instances per alpha")
      ->capture_default_str();
  verify->add_option("--prefix-instances", verify_options.prefix_instances,
                     "triggering instances for the sorted-prefix check")
      ->capture_default_str();
  verify->add_option("--threads", verify_options.threads, "worker threads")
      ->check(CLI::Range(1, 256))
      ->capture_default_str();
  verify->add_flag("--verbose", verify_options.verbose, "print passing reports too");

  cli::GenOptions gen_options;
  auto* gen = app.add_subcommand("gen", "write a random instance file");
  gen->add_option("--n", gen_options.n, "number of items")->capture_default_str();
  gen->add_option("--max-denominator", gen_options.max_denominator, "sizes are k/d for this d")
      ->check(CLI::Range(2, 1000000000))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? cli::kExitOk : cli::kExitUsage;
  }

  try {
    if (*run) return cli::run_command(global, instance_path, std::cout);
    if (*duel) return cli::duel_command(global, std::cout);
    if (*sweep) return cli::sweep_command(global, sweep_options, std::cout, std::cerr);
    if (*verify) return cli::verify_command(global, verify_options, std::cout);
    if (*gen) return cli::gen_command(global, gen_options, std::cout);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return is_usage_error(e) ? cli::kExitUsage : cli::kExitFailure;
  }
  return cli::kExitUsage;
}
