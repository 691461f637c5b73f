#include "tmkit/core.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace tmkit {

char dir_char(Dir d) {
    switch (d) {
        case Dir::Left: return 'L';
        case Dir::None: return 'N';
        case Dir::Right: return 'R';
    }
    return '?';
}

std::string ProcState::to_string() const {
    std::string s(width, '0');
    for (int i = 0; i < width; ++i)
        if (bits >> (width - 1 - i) & 1) s[i] = '1';
    return s;
}

Tape::Tape(std::vector<std::int64_t> ones) : ones_(std::move(ones)) {
    std::sort(ones_.begin(), ones_.end());
    ones_.erase(std::unique(ones_.begin(), ones_.end()), ones_.end());
}

Bit Tape::get(std::int64_t x) const {
    return std::binary_search(ones_.begin(), ones_.end(), x) ? 1 : 0;
}

Tape Tape::with(std::int64_t x, Bit s) const {
    Tape out = *this;
    auto it = std::lower_bound(out.ones_.begin(), out.ones_.end(), x);
    const bool present = it != out.ones_.end() && *it == x;
    if (s == 0 && present) out.ones_.erase(it);
    if (s == 1 && !present) out.ones_.insert(it, x);
    return out;
}

bool Tape::support_within(std::int64_t lo, std::int64_t hi) const {
    return ones_.empty() || (ones_.front() >= lo && ones_.back() <= hi);
}

bool tapes_equal_ignoring(const Tape& a, const Tape& b, std::int64_t ignore) {
    auto ia = a.ones().begin(), ea = a.ones().end();
    auto ib = b.ones().begin(), eb = b.ones().end();
    while (ia != ea || ib != eb) {
        if (ia != ea && *ia == ignore) {
            ++ia;
            continue;
        }
        if (ib != eb && *ib == ignore) {
            ++ib;
            continue;
        }
        if (ia == ea || ib == eb || *ia != *ib) return false;
        ++ia;
        ++ib;
    }
    return true;
}

std::uint64_t window_bits(const Tape& t, Window w) {
    std::uint64_t out = 0;
    for (std::int64_t x : t.ones()) {
        if (x < -w.L || x > w.L) throw ContractError("window_bits: tape support outside window");
        out |= std::uint64_t{1} << (x + w.L);
    }
    return out;
}

std::string kind_name(Kind k) {
    switch (k) {
        case Kind::Deterministic: return "deterministic";
        case Kind::Reversible: return "reversible";
        case Kind::Probabilistic: return "probabilistic";
        case Kind::Quantum: return "quantum";
    }
    return "?";
}

bool rule_less(const Rule& a, const Rule& b) {
    return std::tuple(a.from, a.read, a.write, delta_of(a.move), a.to) <
           std::tuple(b.from, b.read, b.write, delta_of(b.move), b.to);
}

std::size_t Machine::proc_count() const {
    return is_quantum() ? std::size_t{1} << qubits : states.size();
}

std::string Machine::proc_name(std::uint32_t p) const {
    if (is_quantum()) return ProcState{p, static_cast<std::uint8_t>(qubits)}.to_string();
    if (p < states.size()) return states[p];
    return "<state#" + std::to_string(p) + ">";
}

std::string Machine::row_name(const RowKey& row) const {
    return "(" + proc_name(row.proc) + ", " + std::to_string(int(row.read)) + ")";
}

std::string Machine::rule_text(const Rule& r) const {
    std::string out = proc_name(r.from) + " " + std::to_string(int(r.read)) + " -> " +
                      std::to_string(int(r.write)) + " " + std::string(1, dir_char(r.move)) + " " +
                      proc_name(r.to);
    if (!(r.weight == Scalar(1))) out += " : " + scalar_text(r.weight);
    return out;
}

bool machine_well_declared(const Machine& m, std::string* why) {
    const auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    const std::size_t n = m.proc_count();
    if (n == 0) return fail("machine declares no states");
    if (m.start >= n) return fail("start state out of range");
    for (std::uint32_t h : m.halt)
        if (h >= n) return fail("halt state out of range");
    if (m.is_quantum() && !m.halt.empty()) return fail("halt set on a quantum machine");
    std::map<std::tuple<std::uint32_t, Bit, Bit, int, std::uint32_t>, bool> seen;
    for (const Rule& r : m.rules) {
        if (r.from >= n || r.to >= n) return fail("rule references an undeclared state");
        if (r.read > 1 || r.write > 1) return fail("rule symbol outside the binary alphabet");
        if (r.weight.is_zero()) return fail("zero-weight rule stored; zero rules must be absent");
        auto key = std::tuple(r.from, r.read, r.write, delta_of(r.move), r.to);
        if (!seen.emplace(key, true).second)
            return fail("duplicate rule for quintuple " + m.rule_text(r));
    }
    return true;
}

} // namespace tmkit
