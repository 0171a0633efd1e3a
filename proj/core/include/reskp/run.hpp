#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "reskp/model.hpp"
#include "reskp/real.hpp"

namespace reskp {

enum class PolicyKind { kAlg1, kThreshold, kTakeFirstFit, kRejectAll, kCustom };

std::string kind_name(PolicyKind kind);

struct PolicyConfig {
  Alpha alpha;
  PolicyKind kind = PolicyKind::kCustom;
  std::optional<RatioValue> rho;        // Alg1
  std::optional<RatioValue> mu;         // Alg1: 1 / (rho (1 - alpha))
  std::optional<RatioValue> threshold;  // threshold policies
};

// An online decision rule. Implementations are immutable; decide() and
// final_selection() are deterministic functions of their arguments.
class Policy {
 public:
  Policy(std::string name, PolicyConfig config)
      : name_(std::move(name)), config_(std::move(config)) {}
  virtual ~Policy() = default;

  // Decision for `item` given the state before it. Only called while the run
  // is not stopped.
  virtual StepAction decide(const RunState& state, const Size& item) const = 0;

  // Sub-multiset of state.reserved to pack when the sequence ends without a
  // Finalize. Must fit the remaining capacity.
  virtual std::vector<Size> final_selection(const RunState& state) const = 0;

  const std::string& name() const { return name_; }
  const PolicyConfig& config() const { return config_; }
  const Alpha& alpha() const { return config_.alpha; }

 private:
  std::string name_;
  PolicyConfig config_;
};

using PolicyPtr = std::shared_ptr<const Policy>;

struct TraceStep {
  Size item;
  StepAction action;
  RunState after;
};

struct Trace {
  Instance instance;  // every presented item, including ignored ones
  std::string policy_name;
  PolicyConfig config;
  std::vector<TraceStep> steps;  // one per decided item
  std::optional<std::vector<Size>> final_selection;  // set iff no Finalize happened
  RunState final_state;

  // 1-based index of the Finalize step, if any.
  std::optional<std::size_t> trigger_index() const;
};

struct RunResult {
  Trace trace;
  Outcome outcome;
};

// Drives a policy item by item. Shared by run_on_instance and the duel engine.
class Runner {
 public:
  Runner(const Policy& policy, std::string instance_id = {});

  // Presents the next item. Returns the policy's action, or nullopt when the
  // run has already stopped (the item is recorded but ignored). Throws
  // PolicyFault for an illegal action and SizeOutOfRange for a bad item.
  std::optional<StepAction> offer(const Size& item);

  // Ends the sequence: asks for the final selection unless stopped.
  // Idempotent.
  void finish();

  bool stopped() const { return state_.stopped; }
  const RunState& state() const { return state_; }
  const Trace& trace() const { return trace_; }
  Outcome outcome() const { return outcome_of(state_, policy_.alpha()); }

 private:
  const Policy& policy_;
  RunState state_;
  Trace trace_;
  bool finished_ = false;
};

// Feeds the instance to the policy in order, honoring Finalize, and lets the
// policy pack reserved items at the end. CapacityExceeded and
// InvalidSelection surface as PolicyFault.
RunResult run_on_instance(const Policy& policy, const Instance& instance);

// Recomputes every state of `trace` through apply_action and reports whether
// all of them (and the final state) match the recorded ones.
bool replay_matches(const Trace& trace);

}  // namespace reskp
