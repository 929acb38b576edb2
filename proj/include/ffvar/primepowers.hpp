#pragma once

// Enumeration of monic prime powers pi^m of a fixed total degree n over GF(q)
// through Frobenius orbits of GF(q^n): each orbit of size d corresponds to one
// monic irreducible pi of degree d | n, paired with the exponent m = n/d.

#include <cstdint>
#include <vector>

#include "ffvar/extension.hpp"

namespace ffvar {

struct PrimePower {
    elem root;  // canonical (smallest) orbit representative in GF(q^n)
    Poly pi;    // monic irreducible over GF(q)
    int d;      // deg(pi)
    int m;      // total degree = d * m
};

// All prime powers of degree n = ext.degree(), ordered by ascending
// representative index.  Requires the extension field to have log tables.
std::vector<PrimePower> prime_powers_of_degree(const Fq& fq, const FqExt& ext);

// sum_{f in M_n} Lambda_classical(f), computed by Frobenius-orbit counting
// over GF(q^d) for each d | n.  Works beyond the log-table limit via the
// linearity of x -> x^q over GF(q).
std::uint64_t classical_lambda_total(const Fq& fq, int n);

}  // namespace ffvar
