#include <doctest.h>

#include <cmath>

#include "ffvar/curve.hpp"

using namespace ffvar;

TEST_CASE("legendre family normalization") {
    Fq fq = make_fq(3, 1);
    CurveFamily c = legendre_curve(fq);
    CHECK(c.genus == 1);
    CHECK(c.weight == 1);
    CHECK(c.f == Poly{0, 2, 1});  // x^2 - x over GF(3)
    CHECK(c.s == c.f);
}

TEST_CASE("genus-2 family is square-free") {
    for (auto [p, e] : {std::pair{3u, 1}, {5u, 1}}) {
        Fq fq = make_fq(p, e);
        CurveFamily c = genus2_curve(fq);
        CHECK(c.genus == 2);
        CHECK(poly_deg(c.f) == 4);
        CHECK(poly_is_squarefree(fq, c.f));
        CHECK(poly_eval(fq, c.f, fq.zero()) == fq.zero());
    }
}

TEST_CASE("frozen Legendre traces over GF(3)") {
    Fq fq = make_fq(3, 1);
    CurveFamily c = legendre_curve(fq);
    FqExt ext(fq, 1);
    CHECK(a_trace_naive(c, ext, 0) == -1);
    CHECK(a_trace_naive(c, ext, 1) == 1);
    CHECK(a_trace_naive(c, ext, 2) == 0);
}

TEST_CASE("dft batch equals naive batch") {
    for (auto [p, e, D] : {std::tuple{3u, 1, 1}, {3u, 1, 2}, {3u, 1, 3},
                           {5u, 1, 2}, {3u, 2, 2}}) {
        Fq fq = make_fq(p, e);
        CurveFamily c = legendre_curve(fq);
        FqExt ext(fq, D);
        CHECK(a_trace_batch(c, ext, true) == a_trace_batch(c, ext, false));
    }
    // genus 2 as well
    Fq f5 = make_fq(5, 1);
    CurveFamily g2 = genus2_curve(f5);
    FqExt ext(f5, 2);
    CHECK(a_trace_batch(g2, ext, true) == a_trace_batch(g2, ext, false));
}

TEST_CASE("traces sum to zero over every line") {
    // the global oracle behind the trace-table build, checked explicitly
    for (auto [p, D] : {std::pair{3u, 1}, {3u, 2}, {5u, 1}, {7u, 1}}) {
        Fq fq = make_fq(p, 1);
        CurveFamily c = legendre_curve(fq);
        FqExt ext(fq, D);
        long long total = 0;
        for (long long a : a_trace_batch(c, ext, false)) total += a;
        CHECK(total == 0);
    }
}

TEST_CASE("trace table obeys the Weil bound and covers all prime powers") {
    Fq fq = make_fq(3, 1);
    CurveFamily c = legendre_curve(fq);
    TraceTable table = build_trace_table(fq, c, 4);
    for (int n = 1; n <= 4; ++n) {
        double lambda_count = 0;
        for (const TraceEntry& e : table.by_degree[n]) {
            CHECK(e.d * e.m == n);
            CHECK(std::abs(double(e.a)) <=
                  2 * c.genus * std::pow(double(fq.size()), n / 2.0) + 1e-9);
            lambda_count += e.d;
        }
        CHECK(lambda_count == std::pow(3.0, n));  // orbits cover GF(q^n)
    }
}

TEST_CASE("von Mangoldt vanishes off prime powers") {
    Fq fq = make_fq(3, 1);
    CurveFamily c = legendre_curve(fq);
    CHECK(von_mangoldt(fq, c, poly_mul(fq, Poly{0, 1}, Poly{1, 1})) == 0);
    // at pi = t: a = -1, weight d*a = -1
    CHECK(von_mangoldt(fq, c, Poly{0, 1}) == -1);
}

TEST_CASE("frozen Euler factors over GF(3)") {
    Fq fq = make_fq(3, 1);
    CurveFamily c = legendre_curve(fq);
    EulerFactor bad0 = euler_factor(fq, c, Poly{0, 1});
    CHECK(bad0.degree == 1);
    CHECK(bad0.coeffs == std::vector<long long>{1, 1});
    EulerFactor bad1 = euler_factor(fq, c, Poly{2, 1});
    CHECK(bad1.coeffs == std::vector<long long>{1, -1});
    EulerFactor good = euler_factor(fq, c, Poly{1, 1});
    CHECK(good.degree == 2);
    CHECK(good.coeffs == std::vector<long long>{1, 0, 3});
}

TEST_CASE("euler factor inverse roots have weight-one absolute value") {
    Fq fq = make_fq(5, 1);
    CurveFamily c = legendre_curve(fq);
    for_each_monic(fq, 2, [&](const Poly& pi) {
        if (!poly_is_irreducible(fq, pi)) return;
        EulerFactor ef = euler_factor(fq, c, pi);
        if (ef.degree < 2) return;  // bad prime
        // 1 + c1 T + c2 T^2 with |roots| = q^(d/2): c2 = q^d, |c1| <= 2 q^(d/2)
        CHECK(ef.coeffs[2] == 25);
        CHECK(std::abs(double(ef.coeffs[1])) <= 2 * 5.0 + 1e-9);
    });
}

TEST_CASE("reduction profile degree bookkeeping") {
    Fq fq = make_fq(3, 1);
    CurveFamily c = legendre_curve(fq);
    Poly Q{0, 1, 0, 1};  // t(t^2+1), gcd with s = t(t-1) is t
    ReductionProfile prof = reduction_profile(fq, c, Q);
    CHECK(prof.R == 5);
    CHECK(prof.deg_gcd == 1);
    CHECK(prof.drop_infinity == 2);
    CHECK(prof.bad_places.size() == 2);  // t and t-1 divide s
}
