#pragma once

// Dense univariate polynomial arithmetic over a generic field context F.
// A polynomial is a coefficient vector, low degree first, with no trailing
// zeros; the zero polynomial is the empty vector and has degree -1.

#include <algorithm>
#include <cstdint>
#include <vector>

#include "ffvar/field.hpp"

namespace ffvar {

using Poly = std::vector<elem>;

inline int poly_deg(const Poly& f) { return static_cast<int>(f.size()) - 1; }
inline bool poly_is_zero(const Poly& f) { return f.empty(); }

template <class F>
void poly_trim(const F& fld, Poly& f) {
    while (!f.empty() && f.back() == fld.zero()) f.pop_back();
}

template <class F>
bool poly_is_monic(const F& fld, const Poly& f) {
    return !f.empty() && f.back() == fld.one();
}

template <class F>
Poly poly_from_ints(const F& fld, const std::vector<long long>& cs) {
    Poly f;
    f.reserve(cs.size());
    for (long long c : cs) {
        // integers embed through the prime subfield
        long long r = c % static_cast<long long>(fld.characteristic());
        if (r < 0) r += fld.characteristic();
        elem x = fld.zero();
        for (long long i = 0; i < r; ++i) x = fld.add(x, fld.one());
        f.push_back(x);
    }
    poly_trim(fld, f);
    return f;
}

template <class F>
Poly poly_add(const F& fld, const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()), fld.zero());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] = fld.add(r[i], b[i]);
    poly_trim(fld, r);
    return r;
}

template <class F>
Poly poly_sub(const F& fld, const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()), fld.zero());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] = fld.sub(r[i], b[i]);
    poly_trim(fld, r);
    return r;
}

template <class F>
Poly poly_scale(const F& fld, const Poly& a, elem c) {
    if (c == fld.zero()) return {};
    Poly r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = fld.mul(a[i], c);
    return r;
}

template <class F>
Poly poly_mul(const F& fld, const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, fld.zero());
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == fld.zero()) continue;
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = fld.add(r[i + j], fld.mul(a[i], b[j]));
    }
    return r;
}

template <class F>
void poly_divmod(const F& fld, const Poly& a, const Poly& b, Poly& quo, Poly& rem) {
    if (b.empty()) throw invariant_error("polynomial division by zero");
    rem = a;
    quo.assign(a.size() > b.size() - 1 ? a.size() - b.size() + 1 : 0, fld.zero());
    elem lead_inv = fld.inv(b.back());
    for (int k = poly_deg(rem) - poly_deg(b); k >= 0; --k) {
        elem c = fld.mul(rem[k + poly_deg(b)], lead_inv);
        if (c == fld.zero()) continue;
        quo[k] = c;
        for (size_t j = 0; j < b.size(); ++j)
            rem[k + j] = fld.sub(rem[k + j], fld.mul(c, b[j]));
    }
    poly_trim(fld, quo);
    poly_trim(fld, rem);
}

template <class F>
Poly poly_mod(const F& fld, const Poly& a, const Poly& b) {
    Poly q, r;
    poly_divmod(fld, a, b, q, r);
    return r;
}

template <class F>
bool poly_divides(const F& fld, const Poly& d, const Poly& a) {
    return poly_is_zero(poly_mod(fld, a, d));
}

template <class F>
Poly poly_monic(const F& fld, const Poly& a) {
    if (a.empty() || a.back() == fld.one()) return a;
    return poly_scale(fld, a, fld.inv(a.back()));
}

template <class F>
Poly poly_gcd(const F& fld, Poly a, Poly b) {
    while (!b.empty()) {
        Poly r = poly_mod(fld, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return poly_monic(fld, a);
}

template <class F>
Poly poly_derivative(const F& fld, const Poly& a) {
    Poly r;
    for (size_t i = 1; i < a.size(); ++i) {
        elem c = fld.zero();
        for (size_t k = 0; k < i % fld.characteristic(); ++k) c = fld.add(c, a[i]);
        r.push_back(c);
    }
    poly_trim(fld, r);
    return r;
}

template <class F>
bool poly_is_squarefree(const F& fld, const Poly& a) {
    if (poly_deg(a) <= 0) return true;
    Poly d = poly_derivative(fld, a);
    if (poly_is_zero(d)) return false;  // a is a p-th power
    return poly_deg(poly_gcd(fld, a, d)) == 0;
}

template <class F>
Poly poly_mulmod(const F& fld, const Poly& a, const Poly& b, const Poly& m) {
    return poly_mod(fld, poly_mul(fld, a, b), m);
}

template <class F>
Poly poly_powmod(const F& fld, Poly a, std::uint64_t k, const Poly& m) {
    Poly r{fld.one()};
    a = poly_mod(fld, a, m);
    while (k) {
        if (k & 1) r = poly_mulmod(fld, r, a, m);
        a = poly_mulmod(fld, a, a, m);
        k >>= 1;
    }
    return r;
}

template <class F>
elem poly_eval(const F& fld, const Poly& a, elem x) {
    elem r = fld.zero();
    for (size_t i = a.size(); i-- > 0;) r = fld.add(fld.mul(r, x), a[i]);
    return r;
}

// Evaluate a polynomial with base-field coefficients at a point of an
// extension field E of that base (the constant embedding is index-preserving).
template <class E>
elem poly_eval_ext(const E& ext, const Poly& a, elem x) {
    elem r = ext.zero();
    for (size_t i = a.size(); i-- > 0;) r = ext.add(ext.mul(r, x), ext.from_base(a[i]));
    return r;
}

// Rabin irreducibility test: f monic of degree d >= 1 is irreducible iff
// t^{s^d} = t (mod f) and gcd(t^{s^{d/l}} - t, f) = 1 for every prime l | d,
// where s = |F|.
template <class F>
bool poly_is_irreducible(const F& fld, const Poly& f) {
    int d = poly_deg(f);
    if (d < 1 || !poly_is_monic(fld, f))
        throw config_error("irreducibility test requires a monic non-constant polynomial");
    if (d == 1) return true;
    const Poly t{fld.zero(), fld.one()};
    Poly h = t;  // h = t^{s^k} mod f after k steps
    std::vector<Poly> at_step(d + 1);
    for (int k = 1; k <= d; ++k) {
        h = poly_powmod(fld, h, fld.size(), f);
        at_step[k] = h;
    }
    if (!poly_is_zero(poly_sub(fld, at_step[d], poly_mod(fld, t, f)))) return false;
    for (const auto& [ell, _] : factor_integer(static_cast<std::uint64_t>(d))) {
        Poly g = poly_gcd(fld, poly_sub(fld, at_step[d / ell], t), f);
        if (poly_deg(g) != 0) return false;
    }
    return true;
}

// Monic polynomials of degree n in canonical order: the non-leading
// coefficient vector (c_0, ..., c_{n-1}) runs through element indices with
// c_0 fastest, i.e. in increasing value of the base-|F| encoding.
template <class F, class Fn>
void for_each_monic(const F& fld, int n, Fn&& fn) {
    if (n < 0) throw config_error("degree must be >= 0");
    if (n == 0) {
        fn(Poly{fld.one()});
        return;
    }
    Poly f(n + 1, fld.zero());
    f.back() = fld.one();
    std::uint64_t s = fld.size();
    while (true) {
        Poly g = f;
        poly_trim(fld, g);
        fn(g);
        int i = 0;
        while (i < n && f[i] == s - 1) f[i++] = 0;
        if (i == n) break;
        ++f[i];
    }
}

template <class F>
std::vector<Poly> enumerate_monic(const F& fld, int n) {
    std::vector<Poly> out;
    for_each_monic(fld, n, [&](const Poly& f) { out.push_back(f); });
    return out;
}

// First monic irreducible of degree n in the canonical order.
template <class F>
Poly first_irreducible(const F& fld, int n) {
    if (n < 1) throw config_error("degree must be >= 1");
    Poly f(n + 1, fld.zero());
    f.back() = fld.one();
    std::uint64_t s = fld.size();
    while (true) {
        if (poly_is_irreducible(fld, f)) return f;
        int i = 0;
        while (i < n && f[i] == s - 1) f[i++] = 0;
        if (i == n) break;
        ++f[i];
    }
    throw invariant_error("no irreducible polynomial found");
}

// f = pi^m with pi monic irreducible, if such a factorization exists.
// The smallest-degree monic divisor of f is necessarily irreducible, so trial
// division in canonical order finds pi directly.
template <class F>
bool prime_power_decompose(const F& fld, const Poly& f, Poly& pi, int& m) {
    int n = poly_deg(f);
    if (n < 1 || !poly_is_monic(fld, f))
        throw config_error("prime-power decomposition requires a monic non-constant polynomial");
    Poly divisor;
    for (int d = 1; d <= n / 2 && divisor.empty(); ++d) {
        for_each_monic(fld, d, [&](const Poly& g) {
            if (divisor.empty() && poly_divides(fld, g, f)) divisor = g;
        });
    }
    if (divisor.empty()) {  // f itself is irreducible
        pi = f;
        m = 1;
        return true;
    }
    if (n % poly_deg(divisor) != 0) return false;
    Poly rest = f;
    int count = 0;
    while (!poly_is_zero(rest) && poly_deg(rest) > 0) {
        Poly q, r;
        poly_divmod(fld, rest, divisor, q, r);
        if (!poly_is_zero(r)) return false;
        ++count;
        rest = std::move(q);
    }
    if (poly_deg(rest) != 0 || rest[0] != fld.one()) return false;
    pi = divisor;
    m = count;
    return true;
}

// Full factorization by repeated extraction of the smallest monic divisor
// (which is always irreducible).  Desk-scale degrees only.
template <class F>
std::vector<std::pair<Poly, int>> poly_factor(const F& fld, Poly f) {
    if (poly_deg(f) < 1 || !poly_is_monic(fld, f))
        throw config_error("factorization requires a monic non-constant polynomial");
    std::vector<std::pair<Poly, int>> out;
    while (poly_deg(f) > 0) {
        Poly pi;
        for (int d = 1; d <= poly_deg(f) / 2 && pi.empty(); ++d) {
            for_each_monic(fld, d, [&](const Poly& g) {
                if (pi.empty() && poly_divides(fld, g, f)) pi = g;
            });
        }
        if (pi.empty()) pi = f;
        int mult = 0;
        Poly q, r;
        while (true) {
            poly_divmod(fld, f, pi, q, r);
            if (!poly_is_zero(r)) break;
            f = q;
            ++mult;
        }
        out.emplace_back(std::move(pi), mult);
    }
    return out;
}

}  // namespace ffvar
