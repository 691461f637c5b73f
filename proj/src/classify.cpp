#include "tmkit/classify.hpp"

#include <algorithm>

namespace tmkit {

std::map<RowKey, QReal> row_sums(const Machine& m) {
    std::map<RowKey, QReal> sums;
    const auto n = static_cast<std::uint32_t>(m.proc_count());
    for (std::uint32_t p = 0; p < n; ++p)
        for (Bit s : {Bit{0}, Bit{1}}) sums[RowKey{p, s}] = QReal(0);
    for (const Rule& r : m.rules) {
        if (!r.weight.is_real())
            throw ContractError("row_sums: complex weight on rule " + m.rule_text(r));
        sums[RowKey{r.from, r.read}] = sums[RowKey{r.from, r.read}] + r.weight.re();
    }
    return sums;
}

namespace {

void require_zero_one_weights(const Machine& m) {
    for (const Rule& r : m.rules)
        if (!(r.weight == Scalar(1)))
            throw ContractError("weights must be 0/1 for this check; rule " + m.rule_text(r) +
                                " has weight " + scalar_text(r.weight));
}

} // namespace

DeterminismVerdict is_deterministic(const Machine& m) {
    require_zero_one_weights(m);
    for (const auto& [row, sum] : row_sums(m))
        if (!(sum == QReal(0) || sum == QReal(1))) return {false, RowSum{row, sum}};
    return {true, std::nullopt};
}

TotalityVerdict is_total(const Machine& m) {
    if (!is_deterministic(m).ok) throw ContractError("is_total requires a deterministic machine");
    for (const auto& [row, sum] : row_sums(m))
        if (sum == QReal(0)) return {false, row};
    return {true, std::nullopt};
}

ReversibilityVerdict is_reversible(const Machine& m) {
    if (!is_deterministic(m).ok)
        throw ContractError("is_reversible requires a deterministic machine");
    // Group rules by target state; within a group demand one direction and
    // pairwise distinct written symbols.
    std::map<std::uint32_t, std::vector<const Rule*>> by_target;
    for (const Rule& r : m.rules) by_target[r.to].push_back(&r);
    for (auto& [to, rules] : by_target) {
        for (std::size_t i = 0; i < rules.size(); ++i) {
            for (std::size_t j = i + 1; j < rules.size(); ++j) {
                const Rule& a = *rules[i];
                const Rule& b = *rules[j];
                if (a.move != b.move || a.write == b.write)
                    return {false, std::pair{RowKey{a.from, a.read}, RowKey{b.from, b.read}}};
            }
        }
    }
    return {true, std::nullopt};
}

ReversibilityVerdict is_reversible_literal_sum(const Machine& m) {
    if (!is_deterministic(m).ok)
        throw ContractError("is_reversible_literal_sum requires a deterministic machine");
    const auto sums = row_sums(m);
    for (auto i = sums.begin(); i != sums.end(); ++i) {
        for (auto j = std::next(i); j != sums.end(); ++j) {
            const QReal combined = i->second + j->second;
            if (!(combined == QReal(0) || combined == QReal(1)))
                return {false, std::pair{i->first, j->first}};
        }
    }
    return {true, std::nullopt};
}

ProbabilismVerdict is_probabilistic(const Machine& m) {
    for (const Rule& r : m.rules) {
        if (!r.weight.is_real())
            throw ContractError("probabilistic weights must be real; rule " + m.rule_text(r));
        if (r.weight.re().sign() < 0)
            throw ContractError("probabilistic weights must be nonnegative; rule " + m.rule_text(r));
    }
    ProbabilismVerdict v{true, std::nullopt, {}};
    for (const auto& [row, sum] : row_sums(m)) {
        if (sum > QReal(1)) {
            v.ok = false;
            if (!v.witness) v.witness = RowSum{row, sum};
        } else if (sum < QReal(1)) {
            v.substochastic.push_back(RowSum{row, sum});
        }
    }
    return v;
}

} // namespace tmkit
