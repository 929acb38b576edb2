#include <doctest.h>

#include <cmath>

#include "ffvar/dirichlet.hpp"

using namespace ffvar;

namespace {

// all unit residues with their per-factor logs
std::vector<std::vector<std::uint64_t>> all_unit_logs(const ResidueGroup& g) {
    std::uint64_t buckets = 1;
    for (int i = 0; i < poly_deg(g.modulus()); ++i) buckets *= g.fq().size();
    std::vector<std::vector<std::uint64_t>> out;
    for (std::uint64_t idx = 0; idx < buckets; ++idx) {
        std::vector<std::uint64_t> l;
        if (g.unit_logs(g.residue_poly(idx), l)) out.push_back(std::move(l));
    }
    return out;
}

}  // namespace

TEST_CASE("residue group sizes") {
    Fq fq = make_fq(3, 1);
    ResidueGroup g(fq, Poly{0, 1, 0, 1});  // t * (t^2+1)
    CHECK(g.phi() == 16);                  // (3-1)*(9-1)
    CHECK(g.factors().size() == 2);
    CHECK(g.exponent_lcm() == 8);
    CHECK(all_unit_logs(g).size() == 16);
}

TEST_CASE("character orthogonality both ways") {
    for (auto Q : {Poly{0, 1, 0, 1}, Poly{0, 2, 1}}) {  // phi = 16 and 2
        Fq fq = make_fq(3, 1);
        ResidueGroup g(fq, Q);
        auto logs = all_unit_logs(g);
        REQUIRE(logs.size() == g.phi());
        for (std::uint64_t ci = 0; ci < g.phi(); ++ci) {
            Character chi = character_at(g, ci);
            cplx s = 0;
            for (const auto& l : logs) s += chi_on_logs(chi, l);
            cplx want = ci == 0 ? cplx(double(g.phi())) : cplx(0);
            CHECK(std::abs(s - want) < 1e-10);
        }
        for (const auto& l : logs) {
            cplx s = 0;
            for (std::uint64_t ci = 0; ci < g.phi(); ++ci)
                s += chi_on_logs(character_at(g, ci), l);
            bool is_identity = l == std::vector<std::uint64_t>(l.size(), 0);
            cplx want = is_identity ? cplx(double(g.phi())) : cplx(0);
            CHECK(std::abs(s - want) < 1e-10);
        }
    }
}

TEST_CASE("characters are multiplicative") {
    Fq fq = make_fq(5, 1);
    ResidueGroup g(fq, Poly{0, 2, 1});  // t(t+2)
    std::vector<Poly> units;
    for (std::uint64_t idx = 0; idx < 25; ++idx)
        if (g.is_unit_index(idx)) units.push_back(g.residue_poly(idx));
    for (std::uint64_t ci = 0; ci < g.phi(); ++ci) {
        Character chi = character_at(g, ci);
        for (size_t i = 0; i < units.size(); i += 3)
            for (size_t j = 0; j < units.size(); j += 3) {
                Poly prod = poly_mod(fq, poly_mul(fq, units[i], units[j]), g.modulus());
                CHECK(std::abs(chi_zero(chi, prod) -
                               chi_zero(chi, units[i]) * chi_zero(chi, units[j])) < 1e-10);
            }
    }
}

TEST_CASE("conjugate character inverts values") {
    Fq fq = make_fq(3, 1);
    ResidueGroup g(fq, Poly{0, 1, 0, 1});
    auto logs = all_unit_logs(g);
    for (std::uint64_t ci = 0; ci < g.phi(); ++ci) {
        Character chi = character_at(g, ci);
        Character bar = conjugate_character(chi);
        for (const auto& l : logs)
            CHECK(std::abs(chi_on_logs(bar, l) - std::conj(chi_on_logs(chi, l))) < 1e-12);
    }
}

TEST_CASE("extension by zero vanishes on non-units") {
    Fq fq = make_fq(3, 1);
    ResidueGroup g(fq, Poly{0, 1, 0, 1});
    Character chi = character_at(g, 3);
    CHECK(chi_zero(chi, Poly{0, 1}) == cplx(0));          // t | Q
    CHECK(std::abs(chi_zero(chi, Poly{1})) > 0.5);        // unit
}

TEST_CASE("trivial character is identically one on units") {
    Fq fq = make_fq(3, 1);
    ResidueGroup g(fq, Poly{0, 1, 0, 1});
    Character chi0 = character_at(g, 0);
    CHECK(chi0.is_trivial());
    for (const auto& l : all_unit_logs(g))
        CHECK(std::abs(chi_on_logs(chi0, l) - cplx(1)) < 1e-15);
}
