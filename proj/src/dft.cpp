#include "ffvar/dft.hpp"

#include <cmath>
#include <numbers>

#include "ffvar/errors.hpp"

namespace ffvar {

void group_dft(std::vector<cplx>& a, std::uint32_t p, int k, bool inverse) {
    std::uint64_t n = 1;
    for (int i = 0; i < k; ++i) n *= p;
    if (a.size() != n) throw invariant_error("dft: array size is not p^k");

    // p x p kernel matrix
    std::vector<cplx> w(p * p);
    double sign = inverse ? 1.0 : -1.0;
    for (std::uint32_t j = 0; j < p; ++j)
        for (std::uint32_t i = 0; i < p; ++i) {
            double ang = sign * 2.0 * std::numbers::pi * double(std::uint64_t(i) * j % p) / double(p);
            w[j * p + i] = {std::cos(ang), std::sin(ang)};
        }

    std::vector<cplx> buf(p);
    std::uint64_t stride = 1;
    for (int axis = 0; axis < k; ++axis) {
        std::uint64_t block = stride * p;
        for (std::uint64_t b = 0; b < n; b += block) {
            for (std::uint64_t off = 0; off < stride; ++off) {
                cplx* line = a.data() + b + off;
                for (std::uint32_t i = 0; i < p; ++i) buf[i] = line[i * stride];
                for (std::uint32_t j = 0; j < p; ++j) {
                    cplx s = 0;
                    const cplx* row = w.data() + std::uint64_t(j) * p;
                    for (std::uint32_t i = 0; i < p; ++i) s += row[i] * buf[i];
                    line[j * stride] = s;
                }
            }
        }
        stride = block;
    }
    if (inverse) {
        double scale = 1.0 / double(n);
        for (auto& x : a) x *= scale;
    }
}

std::vector<double> additive_correlation(const std::vector<double>& g,
                                         const std::vector<double>& h,
                                         std::uint32_t p, int k) {
    std::vector<cplx> gh(g.begin(), g.end());
    std::vector<cplx> hh(h.begin(), h.end());
    group_dft(gh, p, k, false);
    group_dft(hh, p, k, false);
    for (size_t i = 0; i < gh.size(); ++i) gh[i] *= std::conj(hh[i]);
    group_dft(gh, p, k, true);
    std::vector<double> out(gh.size());
    for (size_t i = 0; i < gh.size(); ++i) out[i] = gh[i].real();
    return out;
}

}  // namespace ffvar
