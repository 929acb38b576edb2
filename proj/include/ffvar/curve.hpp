#pragma once

// The hyperelliptic family y^2 = f(x)(x - t) over GF(q)(t): Frobenius traces
// via quadratic-character sums, Euler factors, the von Mangoldt function of
// the associated representation, and per-prime reduction data.

#include <cstdint>
#include <vector>

#include "ffvar/extension.hpp"
#include "ffvar/primepowers.hpp"

namespace ffvar {

struct CurveFamily {
    int genus;   // g >= 1
    Poly f;      // monic square-free, deg 2g, f(0) = 0, coefficients in GF(q)
    Poly s;      // conductor f(t); same coefficient vector, variable renamed
    int weight;  // 1 for the family
};

// Validates the normalization: f monic square-free of degree 2*genus with
// f(0) = 0.
CurveFamily make_curve_family(const Fq& fq, int genus, Poly f);

// y^2 = x(x-1)(x-t), genus 1.
CurveFamily legendre_curve(const Fq& fq);

// f = x(x-1)(x^2+x+c), genus 2, with the smallest c in canonical order making
// f square-free.
CurveFamily genus2_curve(const Fq& fq);

// a(t0) = -sum_{x in GF(q^D)} chi_2(f(x)(x - t0)), computed by direct
// summation.  For t0 with squarefree f(x)(x-t0) this is the Frobenius trace
// of the smooth fiber over GF(q^D).
long long a_trace_naive(const CurveFamily& curve, const FqExt& ext, elem t0);

// a(t0) for every t0 in GF(q^D) at once.  use_dft selects the additive
// correlation fast path; either path returns exact integers (the DFT output
// is rounded with a hard residual check).
std::vector<long long> a_trace_batch(const CurveFamily& curve, const FqExt& ext,
                                     bool use_dft, std::uint64_t budget = 100'000'000);

enum class TraceMode { naive, dft };

struct TraceEntry {
    elem root;    // canonical orbit representative in GF(q^n)
    Poly pi;      // monic irreducible, deg d
    int d;
    int m;        // total degree n = d*m
    long long a;  // a_{pi,m}
};

// Traces for every prime power of total degree 1..n_max.  Construction
// enforces the Weil bound, orbit-constancy of the trace, and the master
// oracle sum_{f in M_n} Lambda_rho(f) = 0 for every degree.
struct TraceTable {
    int n_max = 0;
    std::vector<std::vector<TraceEntry>> by_degree;  // index n, [0] unused
    std::vector<TraceMode> provenance;               // per degree
};

TraceTable build_trace_table(const Fq& fq, const CurveFamily& curve, int n_max,
                             std::uint64_t budget = 100'000'000);

// Lambda_rho(f) = d * a_{pi,m} if f = pi^m with deg(pi) = d, else 0.
long long von_mangoldt(const Fq& fq, const CurveFamily& curve, const Poly& f);

struct EulerFactor {
    Poly pi;
    int degree;                    // 2g if pi does not divide s, else 2g-1
    std::vector<long long> coeffs; // c_0..c_degree, c_0 = 1
    std::vector<long long> traces; // a_{pi,1}..a_{pi,2g}
};

// det(1 - T Frob | V^I) at pi, reconstructed from the power sums a_{pi,m}
// by Newton's identities.
EulerFactor euler_factor(const Fq& fq, const CurveFamily& curve, const Poly& pi);

struct ReductionPlace {
    Poly pi;
    int good_dim, mult_dim, add_dim;  // (g,0,0) / (g-1,1,0) / (0,0,g) at infinity
    int drop;                         // 0 / 1 / 2g
};

struct ReductionProfile {
    int R;               // deg L_C(T, rho tensor chi) = 2g*deg(Q) - deg(gcd(Q,s))
    int deg_gcd;         // deg gcd(Q, s)
    int deg_L_complete;  // predicted deg L(T, rho); 0 for the family
    int drop_infinity;   // 2g
    std::vector<ReductionPlace> bad_places;  // finite primes dividing s
};

ReductionProfile reduction_profile(const Fq& fq, const CurveFamily& curve, const Poly& Q);

}  // namespace ffvar
