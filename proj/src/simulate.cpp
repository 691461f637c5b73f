#include "tmkit/simulate.hpp"

#include "tmkit/classify.hpp"

#include <algorithm>

namespace tmkit {

std::string halt_reason_name(HaltReason r) {
    switch (r) {
        case HaltReason::NoRule: return "no-rule";
        case HaltReason::HaltState: return "halt-state";
        case HaltReason::StepLimit: return "step-limit";
        case HaltReason::ProbHalt: return "prob-halt";
    }
    return "?";
}

namespace {

std::vector<const Rule*> row_rules(const Machine& m, const CConfig& c) {
    std::vector<const Rule*> out;
    const Bit scanned = c.tape.get(c.head);
    for (const Rule& r : m.rules)
        if (r.from == c.proc.index && r.read == scanned) out.push_back(&r);
    std::sort(out.begin(), out.end(), [](const Rule* a, const Rule* b) { return rule_less(*a, *b); });
    return out;
}

} // namespace

CConfig apply_rule(const CConfig& c, const Rule& r) {
    return CConfig{c.head + delta_of(r.move), StateId{r.to}, c.tape.with(c.head, r.write)};
}

StepOutcome step_deterministic(const Machine& m, const CConfig& c) {
    if (m.halt.count(c.proc.index)) return {std::nullopt, std::nullopt, HaltReason::HaltState};
    const auto rules = row_rules(m, c);
    if (rules.empty()) return {std::nullopt, std::nullopt, HaltReason::NoRule};
    if (rules.size() > 1)
        throw ContractError("determinism violated: several rules apply at row " +
                            m.row_name(RowKey{c.proc.index, c.tape.get(c.head)}));
    return {apply_rule(c, *rules[0]), *rules[0], std::nullopt};
}

Trace run_deterministic(const Machine& m, CConfig c0, int max_steps) {
    if (max_steps < 0) throw ContractError("run_deterministic: max_steps must be >= 0");
    Trace trace;
    CConfig c = std::move(c0);
    for (int t = 0; t < max_steps; ++t) {
        StepOutcome out = step_deterministic(m, c);
        if (out.halt) {
            trace.steps.push_back(TraceStep{std::move(c), std::nullopt});
            trace.halted = *out.halt;
            return trace;
        }
        trace.steps.push_back(TraceStep{std::move(c), out.rule});
        c = std::move(*out.next);
    }
    trace.steps.push_back(TraceStep{std::move(c), std::nullopt});
    trace.halted = HaltReason::StepLimit;
    return trace;
}

CConfig step_backward(const Machine& m, const CConfig& c) {
    if (!is_reversible(m).ok) throw ContractError("step_backward requires a reversible machine");
    std::optional<CConfig> pred;
    for (const Rule& r : m.rules) {
        if (r.to != c.proc.index) continue;
        const std::int64_t src_head = c.head - delta_of(r.move);
        if (c.tape.get(src_head) != r.write) continue;
        CConfig candidate{src_head, StateId{r.from}, c.tape.with(src_head, r.read)};
        // The candidate must actually step to c (its own row must fire this rule).
        if (m.halt.count(candidate.proc.index)) continue;
        if (pred && !(candidate == *pred))
            throw ContractError("two distinct predecessors found; machine is not reversible here");
        pred = std::move(candidate);
    }
    if (!pred)
        throw ContractError("configuration has no predecessor (not in the image of the step map)");
    return *pred;
}

std::uint64_t split_draw(std::uint64_t seed, std::uint64_t n) {
    // SplitMix64 (Steele, Lea, Flood 2014); output n+1 of the stream.
    std::uint64_t z = seed + (n + 1) * 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

Trace run_probabilistic(const Machine& m, CConfig c0, int max_steps, Seed seed) {
    if (max_steps < 0) throw ContractError("run_probabilistic: max_steps must be >= 0");
    if (!is_probabilistic(m).ok)
        throw ContractError("run_probabilistic requires a probabilistic machine");
    // u/2^64 as an exact rational, compared against cumulative row weights.
    const Rational two64 = Rational(Int(1) << 64);

    Trace trace;
    CConfig c = std::move(c0);
    for (int t = 0; t < max_steps; ++t) {
        if (m.halt.count(c.proc.index)) {
            trace.steps.push_back(TraceStep{std::move(c), std::nullopt});
            trace.halted = HaltReason::HaltState;
            return trace;
        }
        const auto rules = row_rules(m, c);
        const QReal draw(Rational(Int(split_draw(seed.value, static_cast<std::uint64_t>(t)))) /
                         two64);
        QReal cumulative(0);
        const Rule* chosen = nullptr;
        for (const Rule* r : rules) {
            cumulative = cumulative + r->weight.re();
            if (draw < cumulative) {
                chosen = r;
                break;
            }
        }
        if (!chosen) { // the draw landed in the row's halting deficit
            trace.steps.push_back(TraceStep{std::move(c), std::nullopt});
            trace.halted = HaltReason::ProbHalt;
            return trace;
        }
        trace.steps.push_back(TraceStep{c, *chosen});
        c = apply_rule(c, *chosen);
    }
    trace.steps.push_back(TraceStep{std::move(c), std::nullopt});
    trace.halted = HaltReason::StepLimit;
    return trace;
}

std::map<QConfig, QReal> born_distribution(const StateVector& psi) {
    const QReal n2 = psi.norm2();
    if (!(n2 == QReal(1)))
        throw ContractError("born_distribution requires a unit vector; norm^2 = " + qreal_text(n2));
    std::map<QConfig, QReal> out;
    for (const auto& [c, amp] : psi.amps()) out.emplace(c, amp.abs2());
    return out;
}

} // namespace tmkit
