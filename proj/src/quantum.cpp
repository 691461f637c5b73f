#include "tmkit/quantum.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

namespace tmkit {

QDelta::QDelta(int qubits) : k_(qubits) {
    if (qubits < 1 || qubits > 16) throw ContractError("qubit count must be in [1, 16]");
    rows_.resize(std::size_t{2} << k_);
}

QDelta QDelta::from_machine(const Machine& m) {
    if (!m.is_quantum()) throw ContractError("from_machine: machine kind is not quantum");
    QDelta d(m.qubits);
    for (const Rule& r : m.rules) d.set(r.from, r.read, r.write, r.move, r.to, r.weight);
    return d;
}

void QDelta::set(std::uint32_t n, Bit read, Bit write, Dir move, std::uint32_t to, Scalar amp) {
    if (n >= proc_count() || to >= proc_count())
        throw ContractError("QDelta::set: pattern out of range for k=" + std::to_string(k_));
    auto& row = rows_[n * 2 + read];
    auto it = std::find_if(row.begin(), row.end(), [&](const Edge& e) {
        return e.write == write && e.move == move && e.to == to;
    });
    if (amp.is_zero()) {
        if (it != row.end()) row.erase(it);
        return;
    }
    if (it != row.end()) {
        it->amp = std::move(amp);
        return;
    }
    Edge e{write, move, to, std::move(amp)};
    auto pos = std::find_if(row.begin(), row.end(), [&](const Edge& x) {
        return std::tuple(x.write, delta_of(x.move), x.to) >
               std::tuple(e.write, delta_of(e.move), e.to);
    });
    row.insert(pos, std::move(e));
}

Scalar QDelta::lookup(ProcState n, Bit read, Bit write, Dir move, ProcState to) const {
    if (n.width != k_ || to.width != k_)
        throw ContractError("QDelta::lookup: pattern width mismatch (k=" + std::to_string(k_) + ")");
    for (const Edge& e : row(n.bits, read))
        if (e.write == write && e.move == move && e.to == to.bits) return e.amp;
    return Scalar(0);
}

std::span<const QDelta::Edge> QDelta::row(std::uint32_t n, Bit read) const {
    if (n >= proc_count()) throw ContractError("QDelta::row: pattern out of range");
    return rows_[n * 2 + read];
}

Machine QDelta::to_machine(const std::string& name) const {
    Machine m;
    m.name = name;
    m.kind = Kind::Quantum;
    m.qubits = k_;
    for (std::uint32_t n = 0; n < proc_count(); ++n)
        for (Bit s : {Bit{0}, Bit{1}})
            for (const Edge& e : row(n, s)) m.rules.push_back(Rule{n, s, e.write, e.move, e.to, e.amp});
    std::sort(m.rules.begin(), m.rules.end(), rule_less);
    return m;
}

void StateVector::add(const QConfig& c, const Scalar& amp) {
    auto it = amps_.find(c);
    if (it == amps_.end()) {
        if (!amp.is_zero()) amps_.emplace(c, amp);
        return;
    }
    it->second = it->second + amp;
    if (it->second.is_zero()) amps_.erase(it);
}

Scalar StateVector::coeff(const QConfig& c) const {
    auto it = amps_.find(c);
    return it == amps_.end() ? Scalar(0) : it->second;
}

QReal StateVector::norm2() const {
    QReal total(0);
    for (const auto& [c, amp] : amps_) total = total + amp.abs2();
    return total;
}

Scalar inner_product(const StateVector& a, const StateVector& b) {
    Scalar total(0);
    auto ia = a.amps().begin();
    auto ib = b.amps().begin();
    while (ia != a.amps().end() && ib != b.amps().end()) {
        if (ia->first < ib->first) {
            ++ia;
        } else if (ib->first < ia->first) {
            ++ib;
        } else {
            total = total + ia->second.conj() * ib->second;
            ++ia;
            ++ib;
        }
    }
    return total;
}

StateVector apply_step(const QDelta& d, const StateVector& psi) {
    StateVector out;
    for (const auto& [c, amp] : psi.amps()) {
        const Bit scanned = c.tape.get(c.head);
        for (const QDelta::Edge& e : d.row(c.proc.bits, scanned)) {
            QConfig next{c.head + delta_of(e.move), d.proc(e.to), c.tape.with(c.head, e.write)};
            out.add(next, amp * e.amp);
        }
    }
    return out;
}

StateVector evolve(const QDelta& d, StateVector psi, int t) {
    if (t < 1) throw ContractError("evolve: step count must be >= 1");
    for (int i = 0; i < t; ++i) psi = apply_step(d, psi);
    return psi;
}

Scalar matrix_element(const QDelta& d, const QConfig& from, const QConfig& to) {
    const std::int64_t dh = to.head - from.head;
    if (dh < -1 || dh > 1) return Scalar(0);
    if (!tapes_equal_ignoring(from.tape, to.tape, from.head)) return Scalar(0);
    return d.lookup(from.proc, from.tape.get(from.head), to.tape.get(from.head),
                    static_cast<Dir>(dh), to.proc);
}

NormalizationReport check_normalization(const QDelta& d) {
    NormalizationReport rep;
    rep.ok = true;
    for (std::uint32_t n = 0; n < d.proc_count(); ++n) {
        for (Bit s : {Bit{0}, Bit{1}}) {
            QReal sum(0);
            for (const QDelta::Edge& e : d.row(n, s)) sum = sum + e.amp.abs2();
            rep.rows.push_back(RowSum{RowKey{n, s}, sum});
            if (!(sum == QReal(1))) {
                rep.ok = false;
                rep.violations.push_back(RowSum{RowKey{n, s}, sum});
            }
        }
    }
    return rep;
}

OrthogonalityReport check_orthogonality(const QDelta& d, Window w) {
    if (w.L < 2) throw ContractError("check_orthogonality: window must have L >= 2");
    OrthogonalityReport rep;
    rep.ok = true;

    // Enumerate window configurations c1 in canonical order, caching images.
    // Candidate partners c2 share the tape off the two scanned cells and sit
    // at head distance <= 2; pairs are visited once (c2 strictly after c1).
    std::map<QConfig, StateVector> images;
    const auto image = [&](const QConfig& c) -> const StateVector& {
        auto it = images.find(c);
        if (it == images.end()) it = images.emplace(c, apply_step(d, StateVector::basis(c))).first;
        return it->second;
    };

    const std::uint32_t procs = d.proc_count();
    const std::uint64_t tapes = std::uint64_t{1} << (2 * w.L + 1);
    for (std::int64_t h1 = -w.L; h1 <= w.L; ++h1) {
        for (std::uint32_t n1 = 0; n1 < procs; ++n1) {
            for (std::uint64_t t1 = 0; t1 < tapes; ++t1) {
                std::vector<std::int64_t> ones;
                for (int i = 0; i <= 2 * w.L; ++i)
                    if (t1 >> i & 1) ones.push_back(i - w.L);
                const QConfig c1{h1, d.proc(n1), Tape(std::move(ones))};

                for (std::int64_t h2 = h1; h2 <= std::min<std::int64_t>(h1 + 2, w.L); ++h2) {
                    for (std::uint32_t n2 = 0; n2 < procs; ++n2) {
                        // c2's tape may differ from c1's only at the scanned cells.
                        for (Bit u : {Bit{0}, Bit{1}}) {
                            for (Bit v : {Bit{0}, Bit{1}}) {
                                Tape t2 = c1.tape.with(h1, u);
                                if (h2 != h1) t2 = t2.with(h2, v);
                                const QConfig c2{h2, d.proc(n2), std::move(t2)};
                                if (c1 < c2) {
                                    ++rep.pairs_checked;
                                    const Scalar ip = inner_product(image(c1), image(c2));
                                    if (!ip.is_zero()) {
                                        rep.ok = false;
                                        if (rep.violations.size() < 16)
                                            rep.violations.push_back(PairViolation{c1, c2, ip});
                                    }
                                }
                                if (h2 == h1) break; // single scanned cell, v is unused
                            }
                        }
                    }
                }
            }
        }
    }
    return rep;
}

WellFormedness well_formed(const QDelta& d, Window w) {
    WellFormedness wf;
    wf.norm = check_normalization(d);
    wf.orth = check_orthogonality(d, w);
    wf.normalized = wf.norm.ok;
    wf.orthogonal = wf.orth.ok;
    return wf;
}

LiftResult lift_reversible(const Machine& m) {
    if (!is_deterministic(m).ok) throw ContractError("lift requires is_deterministic");
    if (!is_total(m).ok) throw ContractError("lift requires is_total");
    if (!is_reversible(m).ok) throw ContractError("lift requires is_reversible");

    const auto n_states = static_cast<std::uint32_t>(m.proc_count());
    int k = 1;
    while ((std::uint32_t{1} << k) < n_states) ++k;

    QDelta d(k);
    for (const Rule& r : m.rules) d.set(r.from, r.read, r.write, r.move, r.to, Scalar(1));
    for (std::uint32_t u = n_states; u < (std::uint32_t{1} << k); ++u)
        for (Bit s : {Bit{0}, Bit{1}}) d.set(u, s, s, Dir::None, u, Scalar(1));

    LiftResult out{std::move(d), {}};
    out.encoding.reserve(n_states);
    for (std::uint32_t q = 0; q < n_states; ++q)
        out.encoding.push_back(ProcState{q, static_cast<std::uint8_t>(k)});
    return out;
}

QConfig encode_config(const CConfig& c, const LiftResult& lift) {
    if (c.proc.index >= lift.encoding.size())
        throw ContractError("encode_config: state index outside the encoded machine");
    return QConfig{c.head, lift.encoding[c.proc.index], c.tape};
}

FloatStateVector FloatStateVector::from_exact(const StateVector& v) {
    FloatStateVector out;
    for (const auto& [c, amp] : v.amps()) out.amps_[c] = amp.to_complex();
    return out;
}

void FloatStateVector::add(const QConfig& c, std::complex<double> amp) {
    amps_[c] += amp;
}

double FloatStateVector::norm2() const {
    double total = 0;
    for (const auto& [c, amp] : amps_) total += std::norm(amp);
    return total;
}

FloatStateVector apply_step(const QDelta& d, const FloatStateVector& psi, double prune_tol) {
    FloatStateVector out;
    out.pruned_mass_ = psi.pruned_mass_;
    for (const auto& [c, amp] : psi.amps_) {
        const Bit scanned = c.tape.get(c.head);
        for (const QDelta::Edge& e : d.row(c.proc.bits, scanned)) {
            QConfig next{c.head + delta_of(e.move), d.proc(e.to), c.tape.with(c.head, e.write)};
            out.amps_[next] += amp * e.amp.to_complex();
        }
    }
    for (auto it = out.amps_.begin(); it != out.amps_.end();) {
        if (std::abs(it->second) < prune_tol) {
            out.pruned_mass_ += std::norm(it->second);
            it = out.amps_.erase(it);
        } else {
            ++it;
        }
    }
    return out;
}

FloatStateVector evolve(const QDelta& d, FloatStateVector psi, int t, double prune_tol) {
    if (t < 1) throw ContractError("evolve: step count must be >= 1");
    for (int i = 0; i < t; ++i) psi = apply_step(d, psi, prune_tol);
    return psi;
}

} // namespace tmkit
