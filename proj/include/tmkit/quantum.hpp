#pragma once

#include "tmkit/classify.hpp"
#include "tmkit/core.hpp"

#include <complex>
#include <map>
#include <span>
#include <vector>

namespace tmkit {

/**
 * QDelta: the local transition function of a quantum machine. Maps quintuples
 * (n, read, write, move, n') over length-k processor patterns to exact
 * amplitudes; absent quintuples are 0 and explicit zeros are never stored.
 */
class QDelta {
  public:
    struct Edge {
        Bit write = 0;
        Dir move = Dir::None;
        std::uint32_t to = 0;
        Scalar amp;
    };

    explicit QDelta(int qubits);

    /// Builds the table of a quantum-kind machine. Throws on other kinds.
    static QDelta from_machine(const Machine& m);

    int qubits() const { return k_; }
    std::uint32_t proc_count() const { return std::uint32_t{1} << k_; }

    /// Inserts or overwrites one quintuple; a zero amplitude erases it.
    void set(std::uint32_t n, Bit read, Bit write, Dir move, std::uint32_t to, Scalar amp);

    /// Stored amplitude or 0. Throws ContractError on pattern-width mismatch.
    Scalar lookup(ProcState n, Bit read, Bit write, Dir move, ProcState to) const;

    /// All transitions out of row (n, read), in canonical (write, move, to) order.
    std::span<const Edge> row(std::uint32_t n, Bit read) const;

    ProcState proc(std::uint32_t bits) const {
        return ProcState{bits, static_cast<std::uint8_t>(k_)};
    }

    /// Presents the table as a quantum-kind Machine (for serialization).
    Machine to_machine(const std::string& name) const;

  private:
    int k_;
    std::vector<std::vector<Edge>> rows_; // indexed by n*2 + read
};

/**
 * StateVector: a finitely-supported map from configurations to exact
 * amplitudes; zero amplitudes are pruned so equality is structural.
 */
class StateVector {
  public:
    StateVector() = default;

    static StateVector basis(QConfig c) {
        StateVector v;
        v.amps_[std::move(c)] = Scalar(1);
        return v;
    }

    /// Accumulates into one amplitude, pruning exact zeros.
    void add(const QConfig& c, const Scalar& amp);

    Scalar coeff(const QConfig& c) const;
    QReal norm2() const;
    std::size_t support_size() const { return amps_.size(); }
    const std::map<QConfig, Scalar>& amps() const { return amps_; }

    bool operator==(const StateVector&) const = default;

  private:
    std::map<QConfig, Scalar> amps_;
};

/// <a|b> = sum over configurations of conj(a) * b, exact.
Scalar inner_product(const StateVector& a, const StateVector& b);

/// One-step evolution: the linear extension of
/// U|x,n,m> = sum delta(n, m_x, w, d, n') |x+d, n', m[x := w]>.
StateVector apply_step(const QDelta& d, const StateVector& psi);

/// t-fold apply_step, t >= 1.
StateVector evolve(const QDelta& d, StateVector psi, int t);

/// <to|U|from>: zero unless the heads differ by at most one cell and the
/// tapes agree away from the source head; otherwise the single table entry
/// delta(from.proc, m_x, to tape at x, to.head - from.head, to.proc).
Scalar matrix_element(const QDelta& d, const QConfig& from, const QConfig& to);

struct NormalizationReport {
    bool ok = false;
    std::vector<RowSum> rows;       // all 2^k * 2 rows with their |amp|^2 sums
    std::vector<RowSum> violations; // rows whose sum differs from 1
};

/// Row normalization: for every (n, read), the amplitude mass
/// sum |delta(n, read, ., ., .)|^2 must equal exactly 1.
NormalizationReport check_normalization(const QDelta& d);

struct PairViolation {
    QConfig a, b;
    Scalar inner;
};

struct OrthogonalityReport {
    bool ok = false;
    std::vector<PairViolation> violations;
    std::size_t pairs_checked = 0;
};

/**
 * Pairwise orthogonality of one-step images: for all distinct window
 * configurations whose images can overlap (heads within distance 2, tapes
 * equal outside the two scanned cells), <U c1, U c2> must be exactly 0.
 * Other pairs are orthogonal term by term and are not enumerated. The window
 * only bounds the enumeration; the verdict is window-independent for L >= 2.
 */
OrthogonalityReport check_orthogonality(const QDelta& d, Window w);

struct WellFormedness {
    bool normalized = false;
    bool orthogonal = false;
    NormalizationReport norm;
    OrthogonalityReport orth;
    bool ok() const { return normalized && orthogonal; }
};

/// Both local conditions; together they are equivalent to unitarity of the
/// induced evolution operator.
WellFormedness well_formed(const QDelta& d, Window w);

struct LiftResult {
    QDelta delta;
    std::vector<ProcState> encoding; // state index -> processor pattern
};

/**
 * Embeds a total deterministic reversible machine into a quantum table:
 * k = ceil(log2 |Q|) (at least 1), each rule becomes amplitude 1 at its
 * encoded quintuple, and every unused pattern gets identity self-loops so
 * all rows stay normalized. Throws ContractError naming the failing
 * classifier when a precondition does not hold.
 */
LiftResult lift_reversible(const Machine& m);

/// The encoded image of a classical configuration under a lift.
QConfig encode_config(const CConfig& c, const LiftResult& lift);

// ---------------------------------------------------------------------------
// Floating backend: amplitudes as complex<double>. Evolution prunes
// amplitudes below the tolerance and accounts the discarded mass.
// ---------------------------------------------------------------------------

class FloatStateVector {
  public:
    FloatStateVector() = default;

    static FloatStateVector basis(QConfig c) {
        FloatStateVector v;
        v.amps_[std::move(c)] = {1.0, 0.0};
        return v;
    }
    static FloatStateVector from_exact(const StateVector& v);

    void add(const QConfig& c, std::complex<double> amp);
    double norm2() const;
    double pruned_mass() const { return pruned_mass_; }
    const std::map<QConfig, std::complex<double>>& amps() const { return amps_; }

    friend FloatStateVector apply_step(const QDelta& d, const FloatStateVector& psi,
                                       double prune_tol);

  private:
    std::map<QConfig, std::complex<double>> amps_;
    double pruned_mass_ = 0.0;
};

FloatStateVector apply_step(const QDelta& d, const FloatStateVector& psi,
                            double prune_tol = 1e-12);
FloatStateVector evolve(const QDelta& d, FloatStateVector psi, int t,
                        double prune_tol = 1e-12);

} // namespace tmkit
