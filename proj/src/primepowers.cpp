#include "ffvar/primepowers.hpp"

#include <cstdint>

namespace ffvar {

std::vector<PrimePower> prime_powers_of_degree(const Fq& fq, const FqExt& ext) {
    int n = ext.degree();
    std::uint64_t size = ext.size();
    std::vector<bool> visited(size, false);
    std::vector<PrimePower> out;
    std::vector<elem> orbit;
    for (elem t0 = 0; t0 < size; ++t0) {
        if (visited[t0]) continue;
        orbit.clear();
        elem t = t0;
        do {
            visited[t] = true;
            orbit.push_back(t);
            t = ext.frobenius(t);
        } while (t != t0);
        int d = static_cast<int>(orbit.size());
        if (n % d != 0)
            throw invariant_error("frobenius orbit size does not divide the extension degree");
        // minimal polynomial: product of (T - conjugate) over the orbit
        Poly mp{ext.one()};
        for (elem c : orbit) mp = poly_mul(ext, mp, Poly{ext.neg(c), ext.one()});
        Poly pi(mp.size());
        for (size_t i = 0; i < mp.size(); ++i) {
            if (mp[i] >= fq.size())
                throw invariant_error("minimal polynomial has a non-rational coefficient");
            pi[i] = mp[i];
        }
        out.push_back(PrimePower{t0, std::move(pi), d, n / d});
    }
    return out;
}

namespace {

// Frobenius x -> x^q as a GF(q)-linear map on GF(q^D), applied through flat
// per-digit multiplication tables so it stays cheap without field log tables.
struct LinearFrobenius {
    explicit LinearFrobenius(const FqExt& ext)
        : q(ext.base().size()), deg(ext.degree()) {
        const Fq& fq = ext.base();
        mul_tab.assign(q * q, 0);
        add_tab.assign(q * q, 0);
        for (std::uint64_t a = 0; a < q; ++a)
            for (std::uint64_t b = 0; b < q; ++b) {
                mul_tab[a * q + b] = static_cast<std::uint32_t>(fq.mul(a, b));
                add_tab[a * q + b] = static_cast<std::uint32_t>(fq.add(a, b));
            }
        basis_img.assign(deg * deg, 0);
        std::vector<elem> digits(deg);
        for (int i = 0; i < deg; ++i) {
            elem ti = 1;
            for (int k = 0; k < i; ++k) ti *= q;  // index of t^i
            elem img = ext.pow(ti, q);
            ext.decode(img, digits.data());
            for (int j = 0; j < deg; ++j)
                basis_img[i * deg + j] = static_cast<std::uint32_t>(digits[j]);
        }
    }

    elem apply(elem x) const {
        std::uint32_t acc[32] = {0};
        for (int i = 0; i < deg; ++i) {
            std::uint64_t c = x % q;
            x /= q;
            if (c == 0) continue;
            const std::uint32_t* row = basis_img.data() + i * deg;
            const std::uint32_t* mrow = mul_tab.data() + c * q;
            for (int j = 0; j < deg; ++j)
                acc[j] = add_tab[std::uint64_t(acc[j]) * q + mrow[row[j]]];
        }
        elem r = 0;
        for (int j = deg - 1; j >= 0; --j) r = r * q + acc[j];
        return r;
    }

    std::uint64_t q;
    int deg;
    std::vector<std::uint32_t> mul_tab, add_tab, basis_img;
};

std::uint64_t count_irreducibles_by_orbits(const Fq& fq, int d) {
    if (d == 1) return fq.size();
    FqExt ext(fq, d, /*want_tables=*/false);
    LinearFrobenius frob(ext);
    std::uint64_t size = ext.size();
    std::vector<bool> visited(size, false);
    std::uint64_t count = 0;
    for (elem t0 = 0; t0 < size; ++t0) {
        if (visited[t0]) continue;
        int len = 0;
        elem t = t0;
        do {
            visited[t] = true;
            ++len;
            t = frob.apply(t);
        } while (t != t0);
        if (len == d) ++count;
    }
    return count;
}

}  // namespace

std::uint64_t classical_lambda_total(const Fq& fq, int n) {
    if (n < 1) throw config_error("degree must be >= 1");
    std::uint64_t total = 0;
    for (int d = 1; d <= n; ++d)
        if (n % d == 0) total += std::uint64_t(d) * count_irreducibles_by_orbits(fq, d);
    return total;
}

}  // namespace ffvar
