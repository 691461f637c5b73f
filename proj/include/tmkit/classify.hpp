#pragma once

#include "tmkit/core.hpp"

#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace tmkit {

/// A table row together with its weight sum.
struct RowSum {
    RowKey row;
    QReal sum;
};

/// Exact weight sum of every (state, symbol) row, including empty rows.
std::map<RowKey, QReal> row_sums(const Machine& m);

struct DeterminismVerdict {
    bool ok = false;
    std::optional<RowSum> witness; // violating row when !ok
};

/// Every row sums to 0 or 1. Requires all weights to be exactly 0/1
/// (stored rules therefore weight 1); throws ContractError otherwise,
/// naming the offending rule.
DeterminismVerdict is_deterministic(const Machine& m);

struct TotalityVerdict {
    bool ok = false;
    std::optional<RowKey> missing; // a row with sum 0 when !ok
};

/// No row sums to 0 (so together with determinism, every row fires exactly
/// one rule). Precondition: is_deterministic(m).
TotalityVerdict is_total(const Machine& m);

struct ReversibilityVerdict {
    bool ok = false;
    std::optional<std::pair<RowKey, RowKey>> witness; // colliding rows when !ok
};

/**
 * Reversibility of a deterministic table: the one-step configuration map is
 * injective. Operationally, any two distinct rules entering the same state
 * must move the same direction and write different symbols; otherwise two
 * distinct configurations can step to the same successor.
 * Precondition: is_deterministic(m).
 */
ReversibilityVerdict is_reversible(const Machine& m);

/**
 * The literal summed reading of the reversibility condition: for every pair
 * of distinct rows, the two row sums combined must lie in {0,1}. Any total
 * machine has two rows summing to 1 each, so this rejects every total
 * deterministic machine; it exists to document that fact, not for use.
 * Precondition: is_deterministic(m).
 */
ReversibilityVerdict is_reversible_literal_sum(const Machine& m);

struct ProbabilismVerdict {
    bool ok = false;
    std::optional<RowSum> witness;     // row with sum > 1 when !ok
    std::vector<RowSum> substochastic; // rows with 0 < deficit (sum < 1); legal, flagged
};

/// Every row sum lies in [0, 1]. Requires all weights real and nonnegative;
/// throws ContractError otherwise, naming the offending rule.
ProbabilismVerdict is_probabilistic(const Machine& m);

} // namespace tmkit
