#include "ffvar/apstats.hpp"

#include <cmath>

namespace ffvar {

namespace {

ProgressionSums bucket_entries(const ResidueGroup& group, int n,
                               const std::vector<std::pair<Poly, long long>>& prime_powers) {
    const Fq& fq = group.fq();
    ProgressionSums out;
    out.n = n;
    std::uint64_t buckets = 1;
    for (int i = 0; i < poly_deg(group.modulus()); ++i) buckets *= fq.size();
    out.by_residue.assign(buckets, 0);
    for (const auto& [f, weight] : prime_powers) {
        std::uint64_t idx = group.residue_index(f);
        if (!group.is_unit_index(idx)) continue;
        out.by_residue[idx] += weight;
    }
    for (std::uint64_t idx = 0; idx < buckets; ++idx)
        if (group.is_unit_index(idx)) out.unit_indices.push_back(idx);
    return out;
}

}  // namespace

ProgressionSums progression_sums_curve(const ResidueGroup& group, const TraceTable& table,
                                       int n) {
    if (n > table.n_max) throw resource_error("trace table does not cover the requested degree");
    const Fq& fq = group.fq();
    std::vector<std::pair<Poly, long long>> pps;
    for (const TraceEntry& e : table.by_degree[n]) {
        Poly f = poly_powmod(fq, e.pi, e.m, group.modulus());
        pps.emplace_back(std::move(f), static_cast<long long>(e.d) * e.a);
    }
    return bucket_entries(group, n, pps);
}

ProgressionSums progression_sums_classical(const Fq& fq, const ResidueGroup& group, int n) {
    FqExt ext(fq, n);
    if (!ext.has_tables()) throw resource_error("degree exceeds the log-table limit");
    std::vector<std::pair<Poly, long long>> pps;
    for (const PrimePower& pp : prime_powers_of_degree(fq, ext)) {
        Poly f = poly_powmod(fq, pp.pi, pp.m, group.modulus());
        pps.emplace_back(std::move(f), pp.d);
    }
    return bucket_entries(group, n, pps);
}

MeanVariance mean_variance(const ResidueGroup& group, const ProgressionSums& sums) {
    std::uint64_t phi = group.phi();
    if (sums.unit_indices.size() != phi)
        throw invariant_error("unit count does not match phi(Q)");
    long long total = 0;
    for (std::uint64_t idx : sums.unit_indices) total += sums.by_residue[idx];
    double mean = double(total) / double(phi);
    double var = 0;
    for (std::uint64_t idx : sums.unit_indices) {
        double d = double(sums.by_residue[idx]) - mean;
        var += d * d;
    }
    var /= double(phi);
    return MeanVariance{mean, var, total};
}

double spectral_variance(const ResidueGroup& group, const std::vector<cplx>& bn_by_character) {
    if (bn_by_character.size() != group.phi())
        throw invariant_error("need one b_n per character");
    double sum = 0;
    for (size_t i = 1; i < bn_by_character.size(); ++i)
        sum += std::norm(bn_by_character[i]);
    return sum / (double(group.phi()) * double(group.phi()));
}

double normalized_variance(const ResidueGroup& group, double variance, int n, int w) {
    double qn = std::pow(double(group.fq().size()), double(n) * (1 + w));
    return double(group.phi()) * variance / qn;
}

namespace {

VarianceReport assemble_report(const ResidueGroup& group, const ProgressionSums& sums,
                               const std::vector<cplx>& bn, int n, int w, double prediction) {
    MeanVariance mv = mean_variance(group, sums);
    VarianceReport rep;
    rep.n = n;
    rep.phi = group.phi();
    rep.mean = mv.mean;
    rep.mean_numerator = mv.total;
    rep.variance_brute = mv.variance;
    rep.variance_spectral = spectral_variance(group, bn);
    rep.normalized = normalized_variance(group, mv.variance, n, w);
    rep.prediction = prediction;

    // phi * E_A must equal b_n(chi_0) exactly after rounding
    long long b0 = std::llround(bn[0].real());
    if (std::abs(bn[0].real() - double(b0)) > 1e-6 || std::abs(bn[0].imag()) > 1e-6 ||
        b0 != mv.total)
        throw invariant_error("mean formula failed: phi * E_A != b_n(trivial character)");

    double scale = std::max({1.0, rep.variance_brute, rep.variance_spectral});
    if (std::abs(rep.variance_brute - rep.variance_spectral) / scale > 1e-8)
        throw invariant_error("spectral identity failed beyond 1e-8 relative");
    return rep;
}

}  // namespace

VarianceReport variance_report_curve(const ResidueGroup& group, const TraceTable& table,
                                     int n, int R) {
    ProgressionSums sums = progression_sums_curve(group, table, n);
    auto entries = weighted_entries_curve(group, table, n);
    std::vector<cplx> bn(group.phi());
    for (std::uint64_t i = 0; i < group.phi(); ++i)
        bn[i] = bn_of_character(character_at(group, i), entries[n]);
    return assemble_report(group, sums, bn, n, /*w=*/1, double(std::min(n, R)));
}

VarianceReport variance_report_classical(const Fq& fq, const ResidueGroup& group, int n) {
    ProgressionSums sums = progression_sums_classical(fq, group, n);
    auto entries = weighted_entries_classical(fq, group, n);
    std::vector<cplx> bn(group.phi());
    for (std::uint64_t i = 0; i < group.phi(); ++i)
        bn[i] = bn_of_character(character_at(group, i), entries);
    return assemble_report(group, sums, bn, n, /*w=*/0, double(poly_deg(group.modulus()) - 1));
}

}  // namespace ffvar
