#pragma once

#include "tmkit/quantum.hpp"
#include "tmkit/simulate.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace tmkit {

constexpr std::size_t kDefaultWindowCap = 1'000'000;

/**
 * All configurations with head in [-L, L] and tape support in [-L, L], in
 * canonical order. `procs` is the processor domain (all StateIds of a
 * classical machine, or all 2^k patterns). Throws SizeError with the exact
 * count when (2L+1) * |procs| * 2^(2L+1) exceeds the cap.
 */
template <class P>
std::vector<Config<P>> enumerate_window(const std::vector<P>& procs, Window w,
                                        std::size_t cap = kDefaultWindowCap);

std::vector<StateId> classical_proc_domain(const Machine& m);
std::vector<ProcState> quantum_proc_domain(int k);

/**
 * The evolution operator materialized on a finite window. Columns are the
 * interior configurations (head in [-L+1, L-1], whose one-step images cannot
 * leave the window); rows are all window configurations. Entries come from
 * the matrix-element formula, stored sparse per column.
 */
struct TruncatedMatrix {
    Window window;
    int qubits = 0;
    std::vector<QConfig> domain;   // interior configurations, canonical order
    std::vector<QConfig> codomain; // all window configurations, canonical order
    // cols[c] = sorted (row index, entry) pairs with nonzero entries
    std::vector<std::vector<std::pair<std::size_t, Scalar>>> cols;
};

TruncatedMatrix build_truncated_matrix(const QDelta& d, Window w,
                                       std::size_t cap = kDefaultWindowCap);

struct UnitarityReport {
    bool ok = false;
    std::size_t columns = 0;
    std::vector<std::pair<std::size_t, QReal>> norm_defects;              // (col, norm^2)
    std::vector<std::tuple<std::size_t, std::size_t, Scalar>> inner_defects; // (col, col, <a|b>)
};

/// Exact column orthonormality: every column norm^2 = 1 and every distinct
/// column pair has inner product 0.
UnitarityReport check_matrix_unitary(const TruncatedMatrix& M);

/// Same check with a floating tolerance on each defect magnitude.
UnitarityReport check_matrix_unitary(const TruncatedMatrix& M, double tol);

struct InjectivityVerdict {
    bool ok = false;
    std::optional<std::pair<CConfig, CConfig>> witness; // two preimages of one image
};

/// Ground truth for reversibility: steps every interior window configuration
/// of a deterministic machine and reports the first pair mapping to the same
/// successor. Precondition: is_deterministic(m).
InjectivityVerdict brute_injectivity(const Machine& m, Window w,
                                     std::size_t cap = kDefaultWindowCap);

/// Debug dump: a header naming L, k and the ordering version, then one
/// `row col scalar` line per nonzero entry.
std::string dump_matrix(const TruncatedMatrix& M);

} // namespace tmkit
