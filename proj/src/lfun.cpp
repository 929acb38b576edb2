#include "ffvar/lfun.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <thread>

namespace ffvar {

std::vector<std::vector<WeightedEntry>> weighted_entries_curve(const ResidueGroup& group,
                                                               const TraceTable& table,
                                                               int n_max) {
    if (n_max > table.n_max) throw resource_error("trace table does not cover the requested degree");
    std::vector<std::vector<WeightedEntry>> out(n_max + 1);
    std::vector<std::uint64_t> logs;
    for (int n = 1; n <= n_max; ++n) {
        for (const TraceEntry& e : table.by_degree[n]) {
            if (!group.unit_logs(e.pi, logs)) continue;
            for (size_t j = 0; j < logs.size(); ++j) {
                std::uint64_t ord = group.factors()[j].order;
                logs[j] = static_cast<std::uint64_t>(
                    (static_cast<unsigned __int128>(logs[j]) * e.m) % ord);
            }
            out[n].push_back(WeightedEntry{logs, static_cast<long long>(e.d) * e.a});
        }
    }
    return out;
}

std::vector<WeightedEntry> weighted_entries_classical(const Fq& fq,
                                                      const ResidueGroup& group, int n) {
    FqExt ext(fq, n);
    if (!ext.has_tables()) throw resource_error("degree exceeds the log-table limit");
    std::vector<WeightedEntry> out;
    std::vector<std::uint64_t> logs;
    for (const PrimePower& pp : prime_powers_of_degree(fq, ext)) {
        if (!group.unit_logs(pp.pi, logs)) continue;
        for (size_t j = 0; j < logs.size(); ++j) {
            std::uint64_t ord = group.factors()[j].order;
            logs[j] = static_cast<std::uint64_t>(
                (static_cast<unsigned __int128>(logs[j]) * pp.m) % ord);
        }
        out.push_back(WeightedEntry{logs, pp.d});
    }
    return out;
}

cplx bn_of_character(const Character& chi, const std::vector<WeightedEntry>& entries) {
    cplx sum = 0;
    for (const WeightedEntry& e : entries)
        sum += double(e.weight) * chi_on_logs(chi, e.logs);
    return sum;
}

std::vector<cplx> newton_to_polynomial(const std::vector<cplx>& b) {
    int R = static_cast<int>(b.size());
    std::vector<cplx> e(R + 1);
    e[0] = 1.0;
    for (int k = 1; k <= R; ++k) {
        cplx sum = 0;
        for (int i = 1; i <= k; ++i)
            sum += (i % 2 ? 1.0 : -1.0) * e[k - i] * (-b[i - 1]);
        e[k] = sum / double(k);
    }
    for (int k = 0; k <= R; ++k)
        if (k % 2) e[k] = -e[k];  // c_k = (-1)^k e_k
    return e;
}

std::vector<cplx> extract_roots(const std::vector<cplx>& coeffs) {
    int R = static_cast<int>(coeffs.size()) - 1;
    while (R > 0 && std::abs(coeffs[R]) == 0.0) --R;
    if (R == 0) return {};
    // inverse roots are the zeros of P(z) = sum_k c_k z^{R-k}, monic in z
    std::vector<cplx> p(R + 1);
    for (int k = 0; k <= R; ++k) p[k] = coeffs[R - k] / coeffs[0];
    Eigen::MatrixXcd comp = Eigen::MatrixXcd::Zero(R, R);
    for (int i = 1; i < R; ++i) comp(i, i - 1) = 1.0;
    for (int i = 0; i < R; ++i) comp(i, R - 1) = -p[i];
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(comp, /*computeEigenvectors=*/false);
    if (solver.info() != Eigen::Success)
        throw numerical_error("companion-matrix eigensolve did not converge");
    std::vector<cplx> roots(R);
    for (int i = 0; i < R; ++i) {
        cplx z = solver.eigenvalues()(i);
        // one Newton step on P(z) = sum_k p[k] z^k
        cplx val = 0, der = 0;
        for (int k = R; k >= 0; --k) {
            der = der * z + val;
            val = val * z + p[k];
        }
        if (std::abs(der) > 1e-12) z -= val / der;
        roots[i] = z;
    }
    std::sort(roots.begin(), roots.end(), [](const cplx& a, const cplx& b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    return roots;
}

Purity classify_roots(const std::vector<cplx>& roots, double q, int w) {
    double scale = std::pow(q, (1.0 + w) / 2.0);
    bool heavy = false, mixed = false;
    for (const cplx& g : roots) {
        double rel = (std::abs(g) - scale) / scale;
        if (rel > 1e-4) heavy = true;
        else if (rel < -1e-4) mixed = true;
    }
    if (heavy) return Purity::heavy;
    return mixed ? Purity::mixed : Purity::good;
}

std::vector<cplx> theta_class(const std::vector<cplx>& roots, Purity cls, double q, int w) {
    if (cls != Purity::good)
        throw invariant_error("theta class requested for a non-good character");
    (void)q;
    (void)w;
    std::vector<cplx> eig(roots.size());
    for (size_t i = 0; i < roots.size(); ++i) eig[i] = roots[i] / std::abs(roots[i]);
    return eig;
}

LPolynomial lfun_for_character(const Character& chi,
                               const std::vector<std::vector<WeightedEntry>>& entries,
                               int R, double q, int w) {
    LPolynomial L;
    L.chi_index = chi.index;
    L.b.resize(R);
    for (int n = 1; n <= R; ++n) L.b[n - 1] = bn_of_character(chi, entries[n]);
    L.coeffs = newton_to_polynomial(L.b);
    L.roots = extract_roots(L.coeffs);
    L.cls = classify_roots(L.roots, q, w);
    if (L.cls == Purity::good) L.theta = theta_class(L.roots, L.cls, q, w);
    return L;
}

std::vector<LPolynomial> lfun_all_characters(const ResidueGroup& group,
                                             const std::vector<std::vector<WeightedEntry>>& entries,
                                             int R, int w, int threads) {
    std::uint64_t phi = group.phi();
    std::vector<LPolynomial> out(phi);
    double q = double(group.fq().size());
    auto work = [&](std::uint64_t lo, std::uint64_t hi) {
        for (std::uint64_t i = lo; i < hi; ++i)
            out[i] = lfun_for_character(character_at(group, i), entries, R, q, w);
    };
    if (threads <= 1 || phi < 2) {
        work(0, phi);
    } else {
        unsigned nt = std::min<std::uint64_t>(threads, phi);
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < nt; ++t) {
            std::uint64_t lo = phi * t / nt, hi = phi * (t + 1) / nt;
            pool.emplace_back(work, lo, hi);
        }
        for (auto& th : pool) th.join();
    }
    return out;
}

}  // namespace ffvar
