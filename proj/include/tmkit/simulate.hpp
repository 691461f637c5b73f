#pragma once

#include "tmkit/core.hpp"
#include "tmkit/quantum.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace tmkit {

enum class HaltReason { NoRule, HaltState, StepLimit, ProbHalt };

std::string halt_reason_name(HaltReason r);

/// One trace entry: the configuration at time t and, unless this is the
/// final entry, the rule applied from it.
struct TraceStep {
    CConfig config;
    std::optional<Rule> rule;
    bool operator==(const TraceStep&) const = default;
};

/// Execution record: steps[i+1] is always steps[i].config advanced by
/// steps[i].rule; the last step carries no rule.
struct Trace {
    std::vector<TraceStep> steps;
    HaltReason halted = HaltReason::StepLimit;
    const CConfig& final_config() const { return steps.back().config; }
    bool operator==(const Trace&) const = default;
};

struct StepOutcome {
    std::optional<CConfig> next;    // set on a successful step
    std::optional<Rule> rule;       // the rule that fired
    std::optional<HaltReason> halt; // set when the machine halts instead
};

/// Applies a configuration's rule: write, move, switch state. Halts with
/// halt-state on a declared halt state and no-rule on an empty row. Throws
/// ContractError naming the row if more than one rule applies.
StepOutcome step_deterministic(const Machine& m, const CConfig& c);

/// Applies a deterministic configuration and returns the new configuration
/// directly; throws ContractError if the machine halts instead.
CConfig apply_rule(const CConfig& c, const Rule& r);

Trace run_deterministic(const Machine& m, CConfig c0, int max_steps);

/// The unique predecessor of c under a reversible machine: undo the move,
/// check the written symbol, restore the read symbol and source state.
/// Throws ContractError when c has no predecessor.
CConfig step_backward(const Machine& m, const CConfig& c);

/// Seed for reproducible probabilistic runs: identical seed, machine and
/// input yield an identical trace.
struct Seed {
    std::uint64_t value = 0;
};

/// The n-th output (0-based) of SplitMix64 seeded with `seed`. Stateless, so
/// per-step draws are independent of how earlier steps were computed.
std::uint64_t split_draw(std::uint64_t seed, std::uint64_t n);

/**
 * Seeded probabilistic run. At step t the uniform draw u = split_draw(seed,t)
 * is compared as the exact rational u/2^64 against the cumulative rule
 * weights of the current row (rules in canonical order); the run halts with
 * prob-halt when the draw lands in the row's deficit 1 - rowsum.
 */
Trace run_probabilistic(const Machine& m, CConfig c0, int max_steps, Seed seed);

/// Born read-out: configuration -> |amplitude|^2, summing to exactly 1.
/// Throws ContractError (reporting the norm) when psi is not a unit vector.
std::map<QConfig, QReal> born_distribution(const StateVector& psi);

} // namespace tmkit
