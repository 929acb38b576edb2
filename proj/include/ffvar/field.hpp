#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "ffvar/errors.hpp"

namespace ffvar {

// Field elements are stored as integer indices.  For GF(p) the index is the
// residue itself; for an extension of degree k over a base field of size s the
// index is the base-s positional encoding of the coefficient vector
// (c_0, ..., c_{k-1}), low coefficient in the low digit.  Because the encoding
// is positional at every level, an element of GF(p^e)^D flattens to a base-p
// digit vector of length e*D and addition is digit-wise mod p.
//
// The canonical total order on field elements is the index order; it is used
// for every deterministic tie-break (orbit representatives, modulus search,
// root embedding).
using elem = std::uint64_t;

// Trial-division factorization, (prime, multiplicity) pairs in ascending order.
std::vector<std::pair<std::uint64_t, int>> factor_integer(std::uint64_t n);

bool is_prime_u64(std::uint64_t n);

class PrimeField {
public:
    explicit PrimeField(std::uint32_t p) : p_(p) {
        if (p < 2 || !is_prime_u64(p)) throw config_error("characteristic must be prime");
    }

    std::uint64_t size() const { return p_; }
    std::uint32_t characteristic() const { return static_cast<std::uint32_t>(p_); }
    int digits() const { return 1; }

    elem zero() const { return 0; }
    elem one() const { return 1; }

    elem add(elem a, elem b) const {
        elem s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    elem sub(elem a, elem b) const { return a >= b ? a - b : a + p_ - b; }
    elem neg(elem a) const { return a == 0 ? 0 : p_ - a; }
    elem mul(elem a, elem b) const { return (a * b) % p_; }

    elem pow(elem a, std::uint64_t k) const {
        elem r = 1;
        a %= p_;
        while (k) {
            if (k & 1) r = mul(r, a);
            a = mul(a, a);
            k >>= 1;
        }
        return r;
    }

    elem inv(elem a) const {
        if (a == 0) throw invariant_error("inverse of zero");
        return pow(a, p_ - 2);
    }

    elem from_int(long long v) const {
        long long m = static_cast<long long>(p_);
        long long r = v % m;
        if (r < 0) r += m;
        return static_cast<elem>(r);
    }

private:
    std::uint64_t p_;
};

}  // namespace ffvar
