#include "ffvar/curve.hpp"

#include <cmath>
#include <cstdlib>

#include "ffvar/dft.hpp"

namespace ffvar {

CurveFamily make_curve_family(const Fq& fq, int genus, Poly f) {
    poly_trim(fq, f);
    if (genus < 1) throw config_error("genus must be >= 1");
    if (poly_deg(f) != 2 * genus || !poly_is_monic(fq, f))
        throw config_error("f must be monic of degree 2*genus");
    if (!f.empty() && f[0] != fq.zero())
        throw config_error("normalization requires f(0) = 0");
    if (!poly_is_squarefree(fq, f))
        throw config_error("f must be square-free");
    return CurveFamily{genus, f, f, 1};
}

CurveFamily legendre_curve(const Fq& fq) {
    // f = x^2 - x
    return make_curve_family(fq, 1, Poly{fq.zero(), fq.neg(fq.one()), fq.one()});
}

CurveFamily genus2_curve(const Fq& fq) {
    Poly base = poly_mul(fq, Poly{fq.zero(), fq.one()},
                         Poly{fq.neg(fq.one()), fq.one()});  // x(x-1)
    for (elem c = 0; c < fq.size(); ++c) {
        Poly quad{c, fq.one(), fq.one()};  // x^2 + x + c
        Poly f = poly_mul(fq, base, quad);
        if (poly_is_squarefree(fq, f)) return make_curve_family(fq, 2, f);
    }
    throw invariant_error("no square-free genus-2 member found");
}

long long a_trace_naive(const CurveFamily& curve, const FqExt& ext, elem t0) {
    long long sum = 0;
    for (elem x = 0; x < ext.size(); ++x) {
        elem fx = poly_eval_ext(ext, curve.f, x);
        sum += ext.quadratic_character(ext.mul(fx, ext.sub(x, t0)));
    }
    return -sum;
}

std::vector<long long> a_trace_batch(const CurveFamily& curve, const FqExt& ext,
                                     bool use_dft, std::uint64_t budget) {
    std::uint64_t n = ext.size();
    if (n > budget) throw resource_error("batch trace exceeds the memory budget");
    std::vector<long long> out(n);
    if (!use_dft) {
        // direct summation, still one pass per t0 over precomputed chi_2(f(x))
        std::vector<int> g(n), h(n);
        for (elem x = 0; x < n; ++x) {
            g[x] = ext.quadratic_character(poly_eval_ext(ext, curve.f, x));
            h[x] = ext.quadratic_character(x);
        }
        for (elem t0 = 0; t0 < n; ++t0) {
            long long sum = 0;
            for (elem x = 0; x < n; ++x)
                if (g[x] != 0) sum += g[x] * h[ext.sub(x, t0)];
            out[t0] = -sum;
        }
        return out;
    }
    std::vector<double> g(n), h(n);
    for (elem x = 0; x < n; ++x) {
        g[x] = ext.quadratic_character(poly_eval_ext(ext, curve.f, x));
        h[x] = ext.quadratic_character(x);
    }
    std::vector<double> corr =
        additive_correlation(g, h, ext.characteristic(), ext.digits());
    for (elem t0 = 0; t0 < n; ++t0) {
        double v = -corr[t0];
        long long r = std::llround(v);
        if (std::abs(v - double(r)) > 1e-3)
            throw numerical_error("DFT trace residual exceeds the rounding threshold");
        out[t0] = r;
    }
    return out;
}

namespace {

void check_weil_bound(const CurveFamily& curve, const Fq& fq, int total_degree, long long a) {
    double bound = 2.0 * curve.genus * std::pow(double(fq.size()), total_degree / 2.0);
    if (std::abs(double(a)) > bound + 1e-6)
        throw invariant_error("trace violates the Weil bound");
}

}  // namespace

TraceTable build_trace_table(const Fq& fq, const CurveFamily& curve, int n_max,
                             std::uint64_t budget) {
    TraceTable table;
    table.n_max = n_max;
    table.by_degree.resize(n_max + 1);
    table.provenance.resize(n_max + 1, TraceMode::naive);
    for (int n = 1; n <= n_max; ++n) {
        FqExt ext(fq, n);
        if (!ext.has_tables())
            throw resource_error("trace table degree exceeds the log-table limit");
        bool use_dft = ext.size() > 2048;
        table.provenance[n] = use_dft ? TraceMode::dft : TraceMode::naive;
        std::vector<long long> a = a_trace_batch(curve, ext, use_dft, budget);

        long long total = 0;
        for (elem t0 = 0; t0 < ext.size(); ++t0) total += a[t0];
        if (total != 0)
            throw invariant_error("master oracle failed: sum of Lambda_rho over M_n is nonzero");

        auto pps = prime_powers_of_degree(fq, ext);
        auto& entries = table.by_degree[n];
        entries.reserve(pps.size());
        for (auto& pp : pps) {
            // the trace must be constant on the Galois orbit
            elem t = pp.root;
            for (int i = 0; i < pp.d; ++i) {
                if (a[t] != a[pp.root])
                    throw invariant_error("trace not constant on a Frobenius orbit");
                t = ext.frobenius(t);
            }
            check_weil_bound(curve, fq, n, a[pp.root]);
            entries.push_back(TraceEntry{pp.root, std::move(pp.pi), pp.d, pp.m, a[pp.root]});
        }
    }
    return table;
}

long long von_mangoldt(const Fq& fq, const CurveFamily& curve, const Poly& f) {
    Poly pi;
    int m = 0;
    if (!prime_power_decompose(fq, f, pi, m)) return 0;
    int d = poly_deg(pi);
    FqExt ext(fq, d * m);
    elem t0 = embed_root(ext, pi);
    long long a = a_trace_naive(curve, ext, t0);
    check_weil_bound(curve, fq, d * m, a);
    return static_cast<long long>(d) * a;
}

EulerFactor euler_factor(const Fq& fq, const CurveFamily& curve, const Poly& pi) {
    if (!poly_is_monic(fq, pi) || !poly_is_irreducible(fq, pi))
        throw config_error("Euler factor requires a monic irreducible prime");
    int d = poly_deg(pi);
    int r = 2 * curve.genus;
    std::vector<long long> traces(r);
    for (int m = 1; m <= r; ++m) {
        FqExt ext(fq, d * m);
        elem t0 = embed_root(ext, pi);
        traces[m - 1] = a_trace_naive(curve, ext, t0);
        check_weil_bound(curve, fq, d * m, traces[m - 1]);
    }
    // Newton's identities: p_m = a_{pi,m}, c_k = (-1)^k e_k
    std::vector<double> e(r + 1, 0.0);
    e[0] = 1.0;
    for (int k = 1; k <= r; ++k) {
        double sum = 0.0;
        for (int i = 1; i <= k; ++i)
            sum += (i % 2 ? 1.0 : -1.0) * e[k - i] * double(traces[i - 1]);
        e[k] = sum / double(k);
    }
    std::vector<long long> coeffs(r + 1);
    for (int k = 0; k <= r; ++k) {
        double c = (k % 2 ? -1.0 : 1.0) * e[k];
        coeffs[k] = std::llround(c);
        if (std::abs(c - double(coeffs[k])) > 1e-4)
            throw invariant_error("Euler factor has a non-integral coefficient");
    }
    bool bad = poly_is_zero(poly_mod(fq, curve.s, pi));
    int degree = r;
    if (bad) {
        if (coeffs.back() != 0)
            throw invariant_error("Euler factor at a bad prime has full degree");
        coeffs.pop_back();
        degree = r - 1;
    }
    return EulerFactor{pi, degree, std::move(coeffs), std::move(traces)};
}

ReductionProfile reduction_profile(const Fq& fq, const CurveFamily& curve, const Poly& Q) {
    if (!poly_is_monic(fq, Q) || poly_deg(Q) < 1)
        throw config_error("Q must be monic non-constant");
    if (!poly_is_squarefree(fq, Q))
        throw config_error("Q must be square-free");
    int g = curve.genus;
    ReductionProfile prof;
    prof.deg_gcd = poly_deg(poly_gcd(fq, Q, curve.s));
    prof.R = 2 * g * poly_deg(Q) - prof.deg_gcd;
    prof.drop_infinity = 2 * g;
    // deg L(T, rho) = dr(rho) + swan(rho) - 2 dim(V); the finite bad places
    // contribute deg(s) in total and infinity contributes 2g, swan = 0.
    prof.deg_L_complete = poly_deg(curve.s) + 2 * g - 2 * (2 * g);
    for (auto& [pi, mult] : poly_factor(fq, curve.s)) {
        if (mult != 1) throw invariant_error("conductor is not square-free");
        prof.bad_places.push_back(ReductionPlace{pi, g - 1, 1, 0, 1});
    }
    return prof;
}

}  // namespace ffvar
