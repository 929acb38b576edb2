#include <doctest.h>

#include <random>

#include "ffvar/extension.hpp"
#include "ffvar/primepowers.hpp"

using namespace ffvar;

namespace {

template <class F>
void check_axioms(const F& fld, std::mt19937_64& rng, int trials) {
    std::uniform_int_distribution<elem> pick(0, fld.size() - 1);
    for (int i = 0; i < trials; ++i) {
        elem a = pick(rng), b = pick(rng), c = pick(rng);
        CHECK(fld.add(a, b) == fld.add(b, a));
        CHECK(fld.add(a, fld.add(b, c)) == fld.add(fld.add(a, b), c));
        CHECK(fld.mul(a, b) == fld.mul(b, a));
        CHECK(fld.mul(a, fld.mul(b, c)) == fld.mul(fld.mul(a, b), c));
        CHECK(fld.mul(a, fld.add(b, c)) == fld.add(fld.mul(a, b), fld.mul(a, c)));
        CHECK(fld.add(a, fld.neg(a)) == fld.zero());
        CHECK(fld.mul(a, fld.one()) == a);
        if (a != fld.zero()) CHECK(fld.mul(a, fld.inv(a)) == fld.one());
    }
}

std::uint64_t mobius_irreducible_count(std::uint64_t q, int d) {
    long long total = 0;
    for (int e = 1; e <= d; ++e) {
        if (d % e) continue;
        int mu = 1;
        for (const auto& [p, mult] : factor_integer(std::uint64_t(e))) {
            (void)p;
            if (mult > 1) { mu = 0; break; }
            mu = -mu;
        }
        if (!mu) continue;
        long long qe = 1;
        for (int i = 0; i < d / e; ++i) qe *= (long long)q;
        total += mu * qe;
    }
    return std::uint64_t(total) / d;
}

}  // namespace

TEST_CASE("prime field and extension axioms") {
    std::mt19937_64 rng(1);
    check_axioms(PrimeField(13), rng, 500);
    check_axioms(make_fq(3, 2), rng, 500);
    check_axioms(make_fq(5, 3), rng, 500);
    Fq f3 = make_fq(3, 1);
    check_axioms(FqExt(f3, 4), rng, 500);
}

TEST_CASE("slow-path arithmetic agrees with tables") {
    Fq fq = make_fq(3, 2);
    FqExt with(fq, 3, true), without(fq, 3, false);
    REQUIRE(with.has_tables());
    REQUIRE(!without.has_tables());
    std::mt19937_64 rng(2);
    std::uniform_int_distribution<elem> pick(0, with.size() - 1);
    for (int i = 0; i < 300; ++i) {
        elem a = pick(rng), b = pick(rng);
        CHECK(with.mul(a, b) == without.mul(a, b));
        CHECK(with.pow(a, 1 + i) == without.pow(a, 1 + i));
        if (a) CHECK(with.inv(a) == without.inv(a));
        CHECK(with.quadratic_character(a) == without.quadratic_character(a));
    }
}

TEST_CASE("irreducible counts match the Mobius formula") {
    for (auto [p, e, dmax] : {std::tuple{3u, 1, 6}, {5u, 1, 4}, {3u, 2, 3}, {7u, 1, 3}}) {
        Fq fq = make_fq(p, e);
        for (int d = 1; d <= dmax; ++d) {
            std::uint64_t count = 0;
            for_each_monic(fq, d, [&](const Poly& f) {
                if (poly_is_irreducible(fq, f)) ++count;
            });
            CHECK(count == mobius_irreducible_count(fq.size(), d));
        }
    }
}

TEST_CASE("polynomial division and gcd invariants") {
    Fq fq = make_fq(5, 1);
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<elem> pick(0, 4);
    for (int i = 0; i < 200; ++i) {
        Poly a(1 + rng() % 7), b(1 + rng() % 5);
        for (auto& c : a) c = pick(rng);
        for (auto& c : b) c = pick(rng);
        poly_trim(fq, a);
        poly_trim(fq, b);
        if (poly_is_zero(b)) continue;
        Poly q, r;
        poly_divmod(fq, a, b, q, r);
        CHECK(poly_deg(r) < poly_deg(b));
        CHECK(poly_add(fq, poly_mul(fq, q, b), r) == a);
        Poly g = poly_gcd(fq, a, b);
        if (!poly_is_zero(g)) {
            CHECK(poly_divides(fq, g, a));
            CHECK(poly_divides(fq, g, b));
        }
    }
}

TEST_CASE("quadratic character is multiplicative with (q-1)/2 squares") {
    for (auto [p, e] : {std::pair{3u, 3}, {5u, 2}, {13u, 1}}) {
        Fq fq = make_fq(p, e);
        long long squares = 0;
        for (elem a = 1; a < fq.size(); ++a)
            if (fq.quadratic_character(a) == 1) ++squares;
        CHECK(squares == (long long)(fq.size() - 1) / 2);
        std::mt19937_64 rng(4);
        std::uniform_int_distribution<elem> pick(0, fq.size() - 1);
        for (int i = 0; i < 500; ++i) {
            elem a = pick(rng), b = pick(rng);
            CHECK(fq.quadratic_character(fq.mul(a, b)) ==
                  fq.quadratic_character(a) * fq.quadratic_character(b));
        }
    }
}

TEST_CASE("embedded roots vanish and generate the right subfield") {
    Fq fq = make_fq(3, 1);
    FqExt ext(fq, 6);
    for (int d : {1, 2, 3, 6}) {
        Poly pi = first_irreducible(fq, d);
        elem r = embed_root(ext, pi);
        CHECK(poly_eval_ext(ext, pi, r) == ext.zero());
        // the orbit of r under Frobenius has size d
        elem x = r;
        int orbit = 0;
        do {
            x = ext.frobenius(x);
            ++orbit;
        } while (x != r);
        CHECK(orbit == d);
    }
}

TEST_CASE("prime powers of degree n partition by orbit") {
    Fq fq = make_fq(3, 1);
    for (int n : {1, 2, 3, 4, 6}) {
        FqExt ext(fq, n);
        auto pps = prime_powers_of_degree(fq, ext);
        std::uint64_t covered = 0, lambda = 0;
        for (const auto& pp : pps) {
            CHECK(pp.d * pp.m == n);
            CHECK(poly_is_irreducible(fq, pp.pi));
            CHECK(poly_eval_ext(ext, pp.pi, pp.root) == ext.zero());
            covered += std::uint64_t(pp.d);
            lambda += std::uint64_t(pp.d);
        }
        // every element of GF(q^n) lies in exactly one orbit
        CHECK(covered == ext.size());
        CHECK(lambda == classical_lambda_total(fq, n));
    }
}

TEST_CASE("prime power decomposition round-trips") {
    Fq fq = make_fq(3, 1);
    Poly pi = first_irreducible(fq, 2);
    Poly f = poly_mul(fq, pi, pi);
    Poly out;
    int m = 0;
    REQUIRE(prime_power_decompose(fq, f, out, m));
    CHECK(out == pi);
    CHECK(m == 2);
    // t*(t+1) is not a prime power
    Poly g = poly_mul(fq, Poly{0, 1}, Poly{1, 1});
    CHECK(!prime_power_decompose(fq, g, out, m));
}
