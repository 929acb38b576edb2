#pragma once

// Haar-distributed unitary matrices and Monte Carlo estimates of the trace
// moments E|Tr(theta^n)|^2 = min{n, R}, plus the equidistribution diagnostic
// comparing empirical theta classes against the Haar references.

#include <complex>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

namespace ffvar {

// Complex Ginibre matrix orthonormalized by QR with the R-factor diagonal
// rotated to positive real, which yields Haar measure.  Deterministic given
// the seed.
Eigen::MatrixXcd sample_haar(int dim, std::uint64_t seed);

struct MomentEstimate {
    int dim = 0;
    int n = 0;
    std::uint64_t samples = 0;
    double estimate = 0;
    double std_error = 0;
    double prediction = 0;  // min{n, dim}
};

// E|Tr theta^n|^2 over `samples` Haar draws for every n in 1..n_max, sharing
// the eigendecompositions across n; compensated accumulation.
std::vector<MomentEstimate> trace_moments(int dim, int n_max, std::uint64_t samples,
                                          std::uint64_t seed, int threads = 1);

struct EquidistributionRow {
    int n = 0;
    std::complex<double> mean_trace;     // Haar reference 0
    double mean_abs_sq = 0;              // Haar reference min{n, R}
    double haar_abs_sq = 0;
    double deviation = 0;                // |mean_abs_sq - haar_abs_sq|
};

// Empirical trace moments of the theta classes of the good characters.
std::vector<EquidistributionRow> equidistribution_report(
    const std::vector<std::vector<std::complex<double>>>& theta_classes, int max_n);

}  // namespace ffvar
