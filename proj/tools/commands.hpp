#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "reskp/rational.hpp"
#include "reskp/real.hpp"

namespace reskp::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

// Flags shared by all subcommands, still in textual form.
struct GlobalOptions {
  std::optional<std::string> alpha;
  std::string policy = "auto";
  std::optional<std::string> adversary;
  std::string epsilon = "1/1000000";
  std::string delta = "1/1000";
  std::uint64_t seed = 1;
  std::optional<std::string> out;
  int precision = kDefaultPrecisionDigits;
};

struct GridOptions {
  std::string from = "1/100";
  std::string to = "99/100";
  std::string step = "1/100";
};

struct SweepOptions {
  GridOptions grid;
  std::vector<std::string> policies;
  std::vector<std::string> adversaries;
  std::size_t instances = 0;
  std::size_t max_items = 15;
  std::uint64_t max_denominator = 1000;
  unsigned threads = 1;
  std::optional<std::string> gnuplot;
};

struct VerifyOptions {
  GridOptions grid;
  std::size_t instances = 20;
  std::size_t prefix_instances = 200;
  unsigned threads = 1;
  bool verbose = false;
};

struct GenOptions {
  std::size_t n = 10;
  std::uint64_t max_denominator = 1000;
};

// Each command returns a process exit code. Library errors caused by bad
// input propagate as reskp::Error and are mapped by the caller.
int run_command(const GlobalOptions& global, const std::string& instance_path, std::ostream& out);
int duel_command(const GlobalOptions& global, std::ostream& out);
int sweep_command(const GlobalOptions& global, const SweepOptions& options, std::ostream& out,
                  std::ostream& log);
int verify_command(const GlobalOptions& global, const VerifyOptions& options, std::ostream& out);
int gen_command(const GlobalOptions& global, const GenOptions& options, std::ostream& out);

}  // namespace reskp::cli
