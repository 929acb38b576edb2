#pragma once

// Discrete Fourier transform over the additive group (Z/p)^k and the
// cross-correlation it enables.  Array index i encodes the group element with
// base-p digits of i as coordinates, matching the field element encoding.

#include <complex>
#include <cstdint>
#include <vector>

namespace ffvar {

using cplx = std::complex<double>;

// In-place DFT of an array of length p^k along all k axes.  forward uses the
// kernel exp(-2*pi*i*<w,x>/p); inverse the conjugate kernel with the 1/p^k
// normalization folded in.
void group_dft(std::vector<cplx>& a, std::uint32_t p, int k, bool inverse);

// c(t) = sum_x g(x) * h(x - t) for real-valued g, h on (Z/p)^k.
std::vector<double> additive_correlation(const std::vector<double>& g,
                                         const std::vector<double>& h,
                                         std::uint32_t p, int k);

}  // namespace ffvar
