#pragma once

// Sums in arithmetic progressions S_{n,Q}(A), their mean and variance by
// brute force and through the character-sum (spectral) identity, and the
// normalization compared against the min{n, R} prediction.

#include <cstdint>
#include <vector>

#include "ffvar/lfun.hpp"

namespace ffvar {

struct ProgressionSums {
    int n = 0;
    // S_{n,Q}(A) indexed by residue index mod Q; non-unit residues receive no
    // contributions and are excluded from the statistics.
    std::vector<long long> by_residue;
    std::vector<std::uint64_t> unit_indices;
};

ProgressionSums progression_sums_curve(const ResidueGroup& group, const TraceTable& table,
                                       int n);
ProgressionSums progression_sums_classical(const Fq& fq, const ResidueGroup& group, int n);

struct MeanVariance {
    double mean;
    double variance;
    long long total;  // exact sum over units, = phi(Q) * mean
};

MeanVariance mean_variance(const ResidueGroup& group, const ProgressionSums& sums);

// (1/phi^2) sum_{chi != chi_0} |b_n(chi)|^2 from per-character sums in
// character-index order (index 0 is the trivial character).
double spectral_variance(const ResidueGroup& group, const std::vector<cplx>& bn_by_character);

// phi(Q) * Var / q^{n(1+w)}
double normalized_variance(const ResidueGroup& group, double variance, int n, int w);

struct VarianceReport {
    int n = 0;
    std::uint64_t phi = 0;
    double mean = 0;
    long long mean_numerator = 0;  // phi * mean, exact
    double variance_brute = 0;
    double variance_spectral = 0;
    double normalized = 0;
    double prediction = 0;  // min{n, R} (curve, w = 1); deg(Q) - 1 scale for classical
};

// Full per-n report for the curve family; checks the spectral identity to
// 1e-8 relative and the exact mean formula, aborting on mismatch.
VarianceReport variance_report_curve(const ResidueGroup& group, const TraceTable& table,
                                     int n, int R);

// Classical von Mangoldt analogue (w = 0); prediction follows the
// q^n (deg Q - 1) regime.
VarianceReport variance_report_classical(const Fq& fq, const ResidueGroup& group, int n);

}  // namespace ffvar
