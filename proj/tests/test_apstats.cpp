#include <doctest.h>

#include <cmath>

#include "ffvar/apstats.hpp"

using namespace ffvar;

TEST_CASE("progression sums total the global von Mangoldt sum") {
    Fq fq = make_fq(3, 1);
    CurveFamily curve = legendre_curve(fq);
    Poly Q{0, 1, 0, 1};
    ResidueGroup group(fq, Q);
    TraceTable table = build_trace_table(fq, curve, 3);
    for (int n = 1; n <= 3; ++n) {
        ProgressionSums sums = progression_sums_curve(group, table, n);
        long long from_buckets = 0;
        for (std::uint64_t idx : sums.unit_indices) from_buckets += sums.by_residue[idx];
        long long direct = 0;
        for (const TraceEntry& e : table.by_degree[n]) {
            Poly f = poly_powmod(fq, e.pi, e.m, Q);
            std::vector<std::uint64_t> l;
            if (group.unit_logs(f, l)) direct += (long long)e.d * e.a;
        }
        CHECK(from_buckets == direct);
    }
}

TEST_CASE("spectral identity and exact mean, curve case") {
    // assemble_report throws if either identity fails; also pin values here
    Fq fq = make_fq(3, 1);
    CurveFamily curve = legendre_curve(fq);
    Poly Q{0, 1, 0, 1};
    ResidueGroup group(fq, Q);
    ReductionProfile prof = reduction_profile(fq, curve, Q);
    TraceTable table = build_trace_table(fq, curve, 4);
    for (int n = 1; n <= 4; ++n) {
        VarianceReport r = variance_report_curve(group, table, n, prof.R);
        CHECK(r.phi == 16);
        CHECK(std::abs(r.variance_brute - r.variance_spectral) <=
              1e-8 * std::max(1.0, r.variance_brute));
        CHECK(r.prediction == double(std::min(n, 5)));
        CHECK(r.mean == double(r.mean_numerator) / 16.0);
    }
}

TEST_CASE("spectral identity, classical case") {
    for (auto [p, e] : {std::pair{3u, 1}, {5u, 1}}) {
        Fq fq = make_fq(p, e);
        ResidueGroup group(fq, Poly{0, 1, 0, 1});
        for (int n = 1; n <= 4; ++n) {
            VarianceReport r = variance_report_classical(fq, group, n);
            // classical mean: sum_{f in M_n coprime to Q} Lambda(f) / phi
            CHECK(r.mean_numerator >= 0);
            CHECK(r.prediction == double(poly_deg(group.modulus()) - 1));
        }
    }
}

TEST_CASE("classical progression sums recover the prime polynomial theorem") {
    Fq fq = make_fq(3, 1);
    Poly Q{0, 1, 0, 1};
    ResidueGroup group(fq, Q);
    for (int n = 2; n <= 4; ++n) {
        ProgressionSums sums = progression_sums_classical(fq, group, n);
        long long units_total = 0;
        for (std::uint64_t idx : sums.unit_indices) units_total += sums.by_residue[idx];
        // units_total + contributions of pi | Q equals q^n
        long long bad = 0;
        for (const auto& fac : group.factors()) {
            if (n % fac.d == 0) bad += fac.d;  // pi^{n/d} lands on a non-unit
        }
        CHECK(units_total + bad == (long long)std::pow(3.0, n));
    }
}

TEST_CASE("normalized variance scaling") {
    Fq fq = make_fq(3, 1);
    ResidueGroup group(fq, Poly{0, 1, 0, 1});
    // phi * Var / q^{n(1+w)}
    CHECK(normalized_variance(group, 81.0 / 16.0, 1, 1) == doctest::Approx(9.0));
    CHECK(normalized_variance(group, 1.0, 2, 0) == doctest::Approx(16.0 / 9.0));
}
