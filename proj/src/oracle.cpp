#include "tmkit/oracle.hpp"

#include "tmkit/classify.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

namespace tmkit {

template <class P>
std::vector<Config<P>> enumerate_window(const std::vector<P>& procs, Window w, std::size_t cap) {
    if (w.L < 1) throw ContractError("enumerate_window: window must have L >= 1");
    if (w.L > 28) throw ContractError("enumerate_window: window too wide to index");
    const std::size_t heads = 2 * w.L + 1;
    const std::size_t tapes = std::size_t{1} << (2 * w.L + 1);
    const std::size_t count = heads * procs.size() * tapes;
    if (count > cap)
        throw SizeError("enumerate_window: " + std::to_string(count) +
                        " configurations exceed the cap of " + std::to_string(cap));

    std::vector<Config<P>> out;
    out.reserve(count);
    // Ascending (head, proc ordinal, window bits) is exactly canonical order.
    for (std::int64_t h = -w.L; h <= w.L; ++h) {
        for (const P& p : procs) {
            for (std::size_t t = 0; t < tapes; ++t) {
                std::vector<std::int64_t> ones;
                for (int i = 0; i <= 2 * w.L; ++i)
                    if (t >> i & 1) ones.push_back(i - w.L);
                out.push_back(Config<P>{h, p, Tape(std::move(ones))});
            }
        }
    }
    return out;
}

template std::vector<CConfig> enumerate_window(const std::vector<StateId>&, Window, std::size_t);
template std::vector<QConfig> enumerate_window(const std::vector<ProcState>&, Window, std::size_t);

std::vector<StateId> classical_proc_domain(const Machine& m) {
    if (m.is_quantum()) throw ContractError("classical_proc_domain: machine is quantum");
    std::vector<StateId> out;
    for (std::uint32_t i = 0; i < m.proc_count(); ++i) out.push_back(StateId{i});
    return out;
}

std::vector<ProcState> quantum_proc_domain(int k) {
    std::vector<ProcState> out;
    for (std::uint32_t n = 0; n < (std::uint32_t{1} << k); ++n)
        out.push_back(ProcState{n, static_cast<std::uint8_t>(k)});
    return out;
}

TruncatedMatrix build_truncated_matrix(const QDelta& d, Window w, std::size_t cap) {
    TruncatedMatrix M;
    M.window = w;
    M.qubits = d.qubits();
    const auto procs = quantum_proc_domain(d.qubits());
    M.codomain = enumerate_window(procs, w, cap);
    for (const QConfig& c : M.codomain)
        if (c.head > -w.L && c.head < w.L) M.domain.push_back(c);

    const auto row_index = [&](const QConfig& c) -> std::size_t {
        auto it = std::lower_bound(M.codomain.begin(), M.codomain.end(), c);
        if (it == M.codomain.end() || !(*it == c))
            throw Error("build_truncated_matrix: image configuration left the window");
        return static_cast<std::size_t>(it - M.codomain.begin());
    };

    M.cols.resize(M.domain.size());
    for (std::size_t ci = 0; ci < M.domain.size(); ++ci) {
        const QConfig& from = M.domain[ci];
        // Candidate targets: head moves at most one cell, tape changes only
        // under the source head. Everything else is zero by construction.
        for (Bit wbit : {Bit{0}, Bit{1}}) {
            const Tape to_tape = from.tape.with(from.head, wbit);
            for (int dh = -1; dh <= 1; ++dh) {
                for (const ProcState& np : procs) {
                    const QConfig to{from.head + dh, np, to_tape};
                    const Scalar entry = matrix_element(d, from, to);
                    if (!entry.is_zero()) M.cols[ci].emplace_back(row_index(to), entry);
                }
            }
        }
        std::sort(M.cols[ci].begin(), M.cols[ci].end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
    }
    return M;
}

namespace {

UnitarityReport check_unitary_impl(const TruncatedMatrix& M, const double* tol) {
    UnitarityReport rep;
    rep.ok = true;
    rep.columns = M.cols.size();

    const auto norm_bad = [&](const QReal& n2) {
        if (tol) return std::abs(n2.to_double() - 1.0) > *tol;
        return !(n2 == QReal(1));
    };
    const auto inner_bad = [&](const Scalar& ip) {
        if (tol) return std::abs(ip.to_complex()) > *tol;
        return !ip.is_zero();
    };

    for (std::size_t c = 0; c < M.cols.size(); ++c) {
        QReal n2(0);
        for (const auto& [r, v] : M.cols[c]) n2 = n2 + v.abs2();
        if (norm_bad(n2)) {
            rep.ok = false;
            rep.norm_defects.emplace_back(c, n2);
        }
    }

    // Row-grouped accumulation: only column pairs sharing a nonzero row can
    // have a nonzero inner product.
    std::map<std::size_t, std::vector<std::pair<std::size_t, const Scalar*>>> by_row;
    for (std::size_t c = 0; c < M.cols.size(); ++c)
        for (const auto& [r, v] : M.cols[c]) by_row[r].emplace_back(c, &v);

    std::map<std::pair<std::size_t, std::size_t>, Scalar> inners;
    for (const auto& [r, hits] : by_row) {
        for (std::size_t i = 0; i < hits.size(); ++i) {
            for (std::size_t j = i + 1; j < hits.size(); ++j) {
                auto key = std::pair(hits[i].first, hits[j].first);
                inners[key] = inners[key] + hits[i].second->conj() * *hits[j].second;
            }
        }
    }
    for (const auto& [key, ip] : inners) {
        if (inner_bad(ip)) {
            rep.ok = false;
            rep.inner_defects.emplace_back(key.first, key.second, ip);
        }
    }
    return rep;
}

} // namespace

UnitarityReport check_matrix_unitary(const TruncatedMatrix& M) {
    return check_unitary_impl(M, nullptr);
}

UnitarityReport check_matrix_unitary(const TruncatedMatrix& M, double tol) {
    if (tol <= 0) throw ContractError("check_matrix_unitary: tolerance must be positive");
    return check_unitary_impl(M, &tol);
}

InjectivityVerdict brute_injectivity(const Machine& m, Window w, std::size_t cap) {
    if (!is_deterministic(m).ok)
        throw ContractError("brute_injectivity requires a deterministic machine");
    const auto all = enumerate_window(classical_proc_domain(m), w, cap);
    std::map<CConfig, CConfig> preimage;
    for (const CConfig& c : all) {
        if (c.head <= -w.L || c.head >= w.L) continue; // interior heads only
        StepOutcome out = step_deterministic(m, c);
        if (!out.next) continue;
        auto [it, inserted] = preimage.emplace(*out.next, c);
        if (!inserted) return {false, std::pair{it->second, c}};
    }
    return {true, std::nullopt};
}

std::string dump_matrix(const TruncatedMatrix& M) {
    std::ostringstream os;
    os << "# truncated evolution matrix: L=" << M.window.L << " k=" << M.qubits
       << " ordering=head-proc-tapebits/v1 rows=" << M.codomain.size()
       << " cols=" << M.domain.size() << "\n";
    for (std::size_t c = 0; c < M.cols.size(); ++c)
        for (const auto& [r, v] : M.cols[c]) os << r << " " << c << " " << scalar_text(v) << "\n";
    return os.str();
}

} // namespace tmkit
