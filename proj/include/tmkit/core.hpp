#pragma once

#include "tmkit/error.hpp"
#include "tmkit/scalar.hpp"

#include <compare>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

namespace tmkit {

/// Tape/alphabet symbol. The alphabet is fixed to {0, 1}.
using Bit = std::uint8_t;

/// Head movement, serialized as L / N / R.
enum class Dir : int { Left = -1, None = 0, Right = 1 };

inline int delta_of(Dir d) { return static_cast<int>(d); }
char dir_char(Dir d);

/// Processor state of a classical machine: an index into the declared state list.
struct StateId {
    std::uint32_t index = 0;
    auto operator<=>(const StateId&) const = default;
};

/// Processor state of a quantum machine: a fixed-width bit pattern, one bit
/// per declared qubit. `bits` is read MSB-first when rendered as a string,
/// so ProcState{0b01, 2} prints as "01".
struct ProcState {
    std::uint32_t bits = 0;
    std::uint8_t width = 1;
    auto operator<=>(const ProcState&) const = default;
    std::string to_string() const;
};

inline std::uint32_t ordinal(StateId s) { return s.index; }
inline std::uint32_t ordinal(ProcState p) { return p.bits; }

/**
 * Tape: a two-way infinite binary tape with default symbol 0, stored
 * canonically as the sorted positions of its 1-cells. Equal contents always
 * have identical representation, so tape equality is vector equality.
 */
class Tape {
  public:
    Tape() = default;
    explicit Tape(std::vector<std::int64_t> ones);

    Bit get(std::int64_t x) const;
    /// Value-semantics write: returns the tape with cell x set to s.
    [[nodiscard]] Tape with(std::int64_t x, Bit s) const;

    const std::vector<std::int64_t>& ones() const { return ones_; }
    bool empty() const { return ones_.empty(); }

    /// True when every 1-cell lies within [-L, L].
    bool support_within(std::int64_t lo, std::int64_t hi) const;

    auto operator<=>(const Tape&) const = default;

  private:
    std::vector<std::int64_t> ones_; // sorted, unique
};

/// True when both tapes agree on every cell except possibly `ignore`.
bool tapes_equal_ignoring(const Tape& a, const Tape& b, std::int64_t ignore);

/// Truncation bound: tape support and head confined to [-L, L].
struct Window {
    int L = 2;
};

/// A machine configuration: head position, processor state, tape contents.
/// P is StateId for classical machines and ProcState for quantum ones.
template <class P>
struct Config {
    std::int64_t head = 0;
    P proc{};
    Tape tape;
    auto operator<=>(const Config&) const = default;
};

using CConfig = Config<StateId>;
using QConfig = Config<ProcState>;

/// Is the configuration inside the window (head and tape support in [-L, L])?
template <class P>
bool in_window(const Config<P>& c, Window w) {
    return c.head >= -w.L && c.head <= w.L && c.tape.support_within(-w.L, w.L);
}

/// Window tape cells packed into an integer, cell -L as the least significant bit.
std::uint64_t window_bits(const Tape& t, Window w);

/// Total order on window configurations: lexicographic on
/// (head, processor ordinal, window tape bits). Throws ContractError when a
/// configuration lies outside the window.
template <class P>
std::strong_ordering canonical_cmp(const Config<P>& x, const Config<P>& y, Window w) {
    if (!in_window(x, w) || !in_window(y, w))
        throw ContractError("canonical_cmp: configuration outside window L=" + std::to_string(w.L));
    if (auto c = x.head <=> y.head; c != 0) return c;
    if (auto c = ordinal(x.proc) <=> ordinal(y.proc); c != 0) return c;
    return window_bits(x.tape, w) <=> window_bits(y.tape, w);
}

enum class Kind { Deterministic, Reversible, Probabilistic, Quantum };

std::string kind_name(Kind k);

/// One transition-table entry. `from` / `to` hold the state index for
/// classical machines or the processor bit pattern for quantum ones.
struct Rule {
    std::uint32_t from = 0;
    Bit read = 0;
    Bit write = 0;
    Dir move = Dir::None;
    std::uint32_t to = 0;
    Scalar weight{1};

    bool operator==(const Rule&) const = default;
};

/// Sort key used for canonical rule order: (from, read, write, move, to).
bool rule_less(const Rule& a, const Rule& b);

/// A (state, scanned symbol) table row.
struct RowKey {
    std::uint32_t proc = 0;
    Bit read = 0;
    auto operator<=>(const RowKey&) const = default;
};

/**
 * Machine: a named transition table plus its state space declaration.
 * Classical kinds declare named states; the quantum kind declares a qubit
 * count k and uses length-k bit patterns as processor states. The rule table
 * is a sparse presentation of the transition function: absent quintuples
 * carry weight 0.
 */
struct Machine {
    std::string name;
    Kind kind = Kind::Deterministic;
    std::vector<std::string> states; // classical kinds
    int qubits = 0;                  // quantum kind
    std::vector<Rule> rules;
    std::uint32_t start = 0;
    std::set<std::uint32_t> halt; // classical kinds only

    bool is_quantum() const { return kind == Kind::Quantum; }
    std::size_t proc_count() const;
    std::string proc_name(std::uint32_t p) const;
    std::string row_name(const RowKey& row) const;
    std::string rule_text(const Rule& r) const;

    bool operator==(const Machine&) const = default;
};

/// True if every rule references declared states / length-k patterns and no
/// two rules share a quintuple key. Fills *why on failure.
bool machine_well_declared(const Machine& m, std::string* why = nullptr);

} // namespace tmkit
