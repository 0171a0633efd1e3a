#include "reskp/run.hpp"

#include "reskp/errors.hpp"

namespace reskp {

std::string kind_name(PolicyKind kind) {
  switch (kind) {
    case PolicyKind::kAlg1: return "alg1";
    case PolicyKind::kThreshold: return "threshold";
    case PolicyKind::kTakeFirstFit: return "take-first-fit";
    case PolicyKind::kRejectAll: return "reject-all";
    case PolicyKind::kCustom: break;
  }
  return "custom";
}

std::optional<std::size_t> Trace::trigger_index() const {
  for (std::size_t i = 0; i < steps.size(); ++i) {
    if (std::holds_alternative<Finalize>(steps[i].action)) return i + 1;
  }
  return std::nullopt;
}

Runner::Runner(const Policy& policy, std::string instance_id) : policy_(policy) {
  trace_.instance.id = std::move(instance_id);
  trace_.policy_name = policy.name();
  trace_.config = policy.config();
}

std::optional<StepAction> Runner::offer(const Size& item) {
  if (finished_) throw AlreadyStopped("sequence already ended");
  if (!is_valid_size(item)) throw SizeOutOfRange(trace_.instance.items.size());
  trace_.instance.items.push_back(item);
  if (state_.stopped) return std::nullopt;

  StepAction action = policy_.decide(state_, item);
  try {
    state_ = apply_action(state_, item, action);
  } catch (const CapacityExceeded& e) {
    throw PolicyFault(policy_.name() + ": " + e.what());
  } catch (const InvalidSelection& e) {
    throw PolicyFault(policy_.name() + ": " + e.what());
  }
  trace_.steps.push_back({item, action, state_});
  trace_.final_state = state_;
  return action;
}

void Runner::finish() {
  if (finished_) return;
  finished_ = true;
  if (!state_.stopped) {
    std::vector<Size> selection = policy_.final_selection(state_);
    try {
      state_ = apply_final_selection(state_, selection);
    } catch (const CapacityExceeded& e) {
      throw PolicyFault(policy_.name() + ": " + e.what());
    } catch (const InvalidSelection& e) {
      throw PolicyFault(policy_.name() + ": " + e.what());
    }
    trace_.final_selection = std::move(selection);
  }
  trace_.final_state = state_;
}

RunResult run_on_instance(const Policy& policy, const Instance& instance) {
  Runner runner(policy, instance.id);
  for (const auto& item : instance.items) runner.offer(item);
  runner.finish();
  return {runner.trace(), runner.outcome()};
}

bool replay_matches(const Trace& trace) {
  RunState state;
  for (const auto& step : trace.steps) {
    try {
      state = apply_action(state, step.item, step.action);
    } catch (const Error&) {
      return false;
    }
    if (!(state == step.after)) return false;
  }
  if (trace.final_selection) {
    try {
      state = apply_final_selection(state, *trace.final_selection);
    } catch (const Error&) {
      return false;
    }
  }
  return state == trace.final_state;
}

}  // namespace reskp
