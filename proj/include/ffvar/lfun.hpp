#pragma once

// Twisted partial L-functions: cohomological traces b_n(rho (x) chi) from the
// von Mangoldt sums, polynomial reconstruction by Newton's identities, root
// extraction, the good/mixed/heavy trichotomy, and unitarized theta classes.

#include <complex>
#include <cstdint>
#include <vector>

#include "ffvar/curve.hpp"
#include "ffvar/dirichlet.hpp"

namespace ffvar {

// One prime power pi^m of a fixed total degree, prepared for fast character
// evaluation: its per-factor discrete logs (already multiplied by m) and its
// von Mangoldt weight.  Entries with gcd(pi, Q) != 1 are dropped at
// construction, matching the extension by zero.
struct WeightedEntry {
    std::vector<std::uint64_t> logs;
    long long weight;  // d * a_{pi,m} (curve) or d (classical)
};

// Degrees 1..n_max of curve entries, from a populated trace table.
std::vector<std::vector<WeightedEntry>> weighted_entries_curve(const ResidueGroup& group,
                                                               const TraceTable& table,
                                                               int n_max);

// Classical von Mangoldt entries (weight d) at a single degree n.
std::vector<WeightedEntry> weighted_entries_classical(const Fq& fq,
                                                      const ResidueGroup& group, int n);

// b_n = sum over entries of chi0(pi^m) * weight.
cplx bn_of_character(const Character& chi, const std::vector<WeightedEntry>& entries);

enum class Purity { good, mixed, heavy };

struct LPolynomial {
    std::uint64_t chi_index = 0;
    std::vector<cplx> b;       // b_1..b_R
    std::vector<cplx> coeffs;  // c_0..c_R with c_0 = 1
    std::vector<cplx> roots;   // inverse roots gamma_1..gamma_R
    Purity cls = Purity::good;
    std::vector<cplx> theta;   // unit-circle eigenvalues; empty unless good
};

// Newton's identities with power sums p_n = -b_n; returns c_0..c_R.
std::vector<cplx> newton_to_polynomial(const std::vector<cplx>& b);

// Inverse roots of sum c_k T^k via a companion-matrix eigensolve, one Newton
// step of refinement each, sorted deterministically.
std::vector<cplx> extract_roots(const std::vector<cplx>& coeffs);

// good: all |gamma| within 1e-4 relative of q^{(1+w)/2}; heavy: some root
// above that scale; mixed otherwise.
Purity classify_roots(const std::vector<cplx>& roots, double q, int w);

// gamma / q^{(1+w)/2}, projected onto the unit circle.  Contract violation if
// the classification is not good.
std::vector<cplx> theta_class(const std::vector<cplx>& roots, Purity cls, double q, int w);

// Full pipeline for one character.
LPolynomial lfun_for_character(const Character& chi,
                               const std::vector<std::vector<WeightedEntry>>& entries,
                               int R, double q, int w);

// All phi(Q) characters, in index order; parallel over characters.
std::vector<LPolynomial> lfun_all_characters(const ResidueGroup& group,
                                             const std::vector<std::vector<WeightedEntry>>& entries,
                                             int R, int w, int threads = 1);

}  // namespace ffvar
