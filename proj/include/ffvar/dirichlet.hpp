#pragma once

// The unit group (GF(q)[t]/Q)^x for square-free Q and its dual group of
// Dirichlet characters, evaluated into the complex numbers through per-factor
// discrete logarithms.

#include <complex>
#include <cstdint>
#include <vector>

#include "ffvar/extension.hpp"

namespace ffvar {

using cplx = std::complex<double>;

class ResidueGroup {
public:
    struct Factor {
        Poly pi;
        int d;
        FqExt field;          // GF(q)[t]/pi with log tables
        std::uint64_t order;  // q^d - 1
    };

    ResidueGroup(const Fq& fq, Poly Q);

    const Fq& fq() const { return *fq_; }
    const Poly& modulus() const { return Q_; }
    const std::vector<Factor>& factors() const { return factors_; }
    std::uint64_t phi() const { return phi_; }
    std::uint64_t exponent_lcm() const { return lcm_; }

    // residue of f in the j-th factor field, as an element index
    elem reduce(const Poly& f, size_t j) const;

    // per-factor discrete logs of f; false if gcd(f, Q) != 1
    bool unit_logs(const Poly& f, std::vector<std::uint64_t>& out) const;

    // index of (f mod Q) in [0, q^deg(Q)), base-q positional encoding
    std::uint64_t residue_index(const Poly& f) const;
    Poly residue_poly(std::uint64_t index) const;
    bool is_unit_index(std::uint64_t index) const;

    // exp(2*pi*i * k / exponent_lcm())
    cplx root_of_unity(std::uint64_t k) const;

private:
    const Fq* fq_;
    Poly Q_;
    std::vector<Factor> factors_;
    std::uint64_t phi_ = 1;
    std::uint64_t lcm_ = 1;
    std::vector<cplx> roots_;  // cached when the exponent lcm is small
};

// A character is an exponent tuple against the per-factor generators; the
// trivial character is index 0, and enumeration by index runs the first
// factor's exponent fastest.
struct Character {
    const ResidueGroup* group;
    std::uint64_t index;
    std::vector<std::uint64_t> exponents;  // k_j < order_j

    bool is_trivial() const { return index == 0; }
};

Character character_at(const ResidueGroup& group, std::uint64_t index);
Character conjugate_character(const Character& chi);

// chi evaluated from precomputed per-factor unit logs.
cplx chi_on_logs(const Character& chi, const std::vector<std::uint64_t>& logs);

// Extension by zero: chi(f mod Q) if gcd(f, Q) = 1, else exactly 0.
cplx chi_zero(const Character& chi, const Poly& f);

}  // namespace ffvar
