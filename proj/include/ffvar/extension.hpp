#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "ffvar/field.hpp"
#include "ffvar/poly.hpp"

namespace ffvar {

// Extension field of degree `degree` over `Base`, represented in the
// polynomial basis of a monic irreducible modulus.  The base field is held by
// value; contexts are immutable once constructed, so sharing across threads
// is safe.
//
// Discrete-log tables are built eagerly for fields up to kTableLimit
// elements; larger fields fall back to square-and-multiply arithmetic.
template <class Base>
class FieldExt {
public:
    static constexpr std::uint64_t kTableLimit = 10'000'000;

    // Default modulus: the first monic irreducible of the given degree in
    // canonical order.
    FieldExt(Base base, int degree, bool want_tables = true)
        : FieldExt(base, degree, first_irreducible(base, degree), want_tables) {}

    FieldExt(Base base, int degree, Poly modulus, bool want_tables = true)
        : base_(std::move(base)), degree_(degree), modulus_(std::move(modulus)) {
        if (degree_ < 1) throw config_error("extension degree must be >= 1");
        bs_ = base_.size();
        size_ = 1;
        for (int i = 0; i < degree_; ++i) {
            if (size_ > (std::uint64_t(1) << 62) / bs_) throw resource_error("field too large");
            size_ *= bs_;
        }
        if (poly_deg(modulus_) != degree_ || !poly_is_monic(base_, modulus_))
            throw config_error("modulus must be monic of the extension degree");
        if (!poly_is_irreducible(base_, modulus_))
            throw config_error("modulus must be irreducible");
        modulus_.resize(degree_ + 1, base_.zero());  // keep padded for reduction
        modulus_[degree_] = base_.one();
        if (want_tables && size_ <= kTableLimit) build_tables_();
    }

    const Base& base() const { return base_; }
    int degree() const { return degree_; }
    const Poly& modulus() const { return modulus_; }
    std::uint64_t size() const { return size_; }
    std::uint32_t characteristic() const { return base_.characteristic(); }
    int digits() const { return degree_ * base_.digits(); }
    bool has_tables() const { return !exp_.empty(); }

    elem zero() const { return 0; }
    elem one() const { return 1; }

    void decode(elem x, elem* out) const {
        for (int i = 0; i < degree_; ++i) {
            out[i] = x % bs_;
            x /= bs_;
        }
    }
    elem encode(const elem* digits) const {
        elem x = 0;
        for (int i = degree_ - 1; i >= 0; --i) x = x * bs_ + digits[i];
        return x;
    }
    // The constant embedding Base -> this field is index-preserving.
    elem from_base(elem c) const { return c; }

    elem add(elem a, elem b) const {
        elem r = 0, m = 1;
        for (int i = 0; i < degree_; ++i) {
            r += base_.add(a % bs_, b % bs_) * m;
            a /= bs_;
            b /= bs_;
            m *= bs_;
        }
        return r;
    }
    elem sub(elem a, elem b) const {
        elem r = 0, m = 1;
        for (int i = 0; i < degree_; ++i) {
            r += base_.sub(a % bs_, b % bs_) * m;
            a /= bs_;
            b /= bs_;
            m *= bs_;
        }
        return r;
    }
    elem neg(elem a) const {
        elem r = 0, m = 1;
        for (int i = 0; i < degree_; ++i) {
            r += base_.neg(a % bs_) * m;
            a /= bs_;
            m *= bs_;
        }
        return r;
    }

    elem mul(elem a, elem b) const {
        if (a == 0 || b == 0) return 0;
        if (has_tables()) {
            std::uint64_t ord = size_ - 1;
            std::uint64_t s = std::uint64_t(log_[a]) + log_[b];
            if (s >= ord) s -= ord;
            return exp_[s];
        }
        return mul_slow_(a, b);
    }

    elem pow(elem a, std::uint64_t k) const {
        if (a == 0) return k == 0 ? one() : 0;
        if (has_tables()) {
            std::uint64_t ord = size_ - 1;
            return exp_[static_cast<std::uint64_t>(
                (static_cast<unsigned __int128>(log_[a]) * k) % ord)];
        }
        elem r = 1;
        while (k) {
            if (k & 1) r = mul_slow_(r, a);
            a = mul_slow_(a, a);
            k >>= 1;
        }
        return r;
    }

    elem inv(elem a) const {
        if (a == 0) throw invariant_error("inverse of zero");
        if (has_tables()) {
            std::uint64_t ord = size_ - 1;
            std::uint64_t l = log_[a];
            return exp_[l == 0 ? 0 : ord - l];
        }
        return pow(a, size_ - 2);
    }

    // chi_2: +1 on nonzero squares, -1 on non-squares, 0 at zero.  Odd
    // characteristic only.
    int quadratic_character(elem a) const {
        if (a == 0) return 0;
        if (has_tables()) return (log_[a] & 1) ? -1 : 1;
        return pow(a, (size_ - 1) / 2) == one() ? 1 : -1;
    }

    std::uint64_t log(elem a) const {
        if (a == 0) throw invariant_error("log of zero");
        if (!has_tables()) throw resource_error("log table not built for this field size");
        return log_[a];
    }

    elem generator() const {
        if (gen_ == 0) gen_ = find_generator_();
        return gen_;
    }

    // x -> x^s for s = |Base|, the Frobenius relative to the base field.
    elem frobenius(elem x) const { return pow(x, bs_); }

private:
    elem mul_slow_(elem a, elem b) const {
        // schoolbook product of digit vectors, reduced by the modulus
        elem da[32], db[32], acc[64];
        int n = degree_;
        decode(a, da);
        decode(b, db);
        for (int i = 0; i < 2 * n; ++i) acc[i] = 0;
        for (int i = 0; i < n; ++i) {
            if (da[i] == 0) continue;
            for (int j = 0; j < n; ++j)
                acc[i + j] = base_.add(acc[i + j], base_.mul(da[i], db[j]));
        }
        for (int k = 2 * n - 2; k >= n; --k) {
            elem c = acc[k];
            if (c == 0) continue;
            acc[k] = 0;
            for (int j = 0; j < n; ++j)
                acc[k - n + j] = base_.sub(acc[k - n + j], base_.mul(c, modulus_[j]));
        }
        return encode(acc);
    }

    void build_tables_() {
        std::uint64_t ord = size_ - 1;
        elem g = find_generator_();
        gen_ = g;
        exp_.assign(ord, 0);
        log_.assign(size_, 0);
        elem x = 1;
        for (std::uint64_t k = 0; k < ord; ++k) {
            exp_[k] = static_cast<std::uint32_t>(x);
            log_[x] = static_cast<std::uint32_t>(k);
            x = mul_slow_(x, g);
        }
        if (x != 1) throw invariant_error("generator order mismatch while building tables");
    }

    elem find_generator_() const {
        std::uint64_t ord = size_ - 1;
        auto fac = factor_integer(ord);
        for (elem cand = 1; cand < size_; ++cand) {
            bool ok = true;
            for (const auto& [ell, mult] : fac) {
                (void)mult;
                elem t = 1, a = cand;
                std::uint64_t k = ord / ell;
                while (k) {
                    if (k & 1) t = mul_slow_(t, a);
                    a = mul_slow_(a, a);
                    k >>= 1;
                }
                if (t == one()) {
                    ok = false;
                    break;
                }
            }
            if (ok) return cand;
        }
        throw invariant_error("no multiplicative generator found");
    }

    Base base_;
    int degree_ = 0;
    Poly modulus_;
    std::uint64_t bs_ = 0;
    std::uint64_t size_ = 0;
    mutable elem gen_ = 0;
    std::vector<std::uint32_t> exp_;
    std::vector<std::uint32_t> log_;
};

using Fq = FieldExt<PrimeField>;  // GF(p^e), the coefficient field
using FqExt = FieldExt<Fq>;       // GF(q^D), built directly over GF(q)

// GF(p^e) with the default (first-in-order) modulus.
inline Fq make_fq(std::uint32_t p, int e) {
    if (p == 2) throw config_error("odd characteristic required");
    if (e < 1) throw config_error("extension degree must be >= 1");
    return Fq(PrimeField(p), e);
}

// Deterministic root of an irreducible pi (over the base of `ext`) inside
// `ext`: the smallest element in canonical order.  Requires deg(pi) | D.
template <class E>
elem embed_root(const E& ext, const Poly& pi) {
    int d = poly_deg(pi);
    if (d < 1) throw config_error("cannot embed a constant polynomial");
    if (ext.degree() % d != 0)
        throw config_error("polynomial degree does not divide the extension degree");
    for (elem x = 0; x < ext.size(); ++x)
        if (poly_eval_ext(ext, pi, x) == ext.zero()) return x;
    throw invariant_error("irreducible polynomial has no root in the extension field");
}

}  // namespace ffvar
