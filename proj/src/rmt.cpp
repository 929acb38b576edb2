#include "ffvar/rmt.hpp"

#include <cmath>
#include <random>
#include <thread>

#include "ffvar/errors.hpp"

namespace ffvar {

namespace {

Eigen::MatrixXcd sample_haar_rng(int dim, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    Eigen::MatrixXcd z(dim, dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
            z(i, j) = std::complex<double>(gauss(rng), gauss(rng)) / std::sqrt(2.0);
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(z);
    Eigen::MatrixXcd q = qr.householderQ();
    Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int j = 0; j < dim; ++j) {
        std::complex<double> d = r(j, j);
        double a = std::abs(d);
        q.col(j) *= (a == 0.0 ? 1.0 : d / a);
    }
    return q;
}

struct Kahan {
    double sum = 0, c = 0;
    void add(double x) {
        double y = x - c;
        double t = sum + y;
        c = (t - sum) - y;
        sum = t;
    }
};

}  // namespace

Eigen::MatrixXcd sample_haar(int dim, std::uint64_t seed) {
    if (dim < 1) throw config_error("dimension must be >= 1");
    std::mt19937_64 rng(seed);
    return sample_haar_rng(dim, rng);
}

std::vector<MomentEstimate> trace_moments(int dim, int n_max, std::uint64_t samples,
                                          std::uint64_t seed, int threads) {
    if (dim < 1 || n_max < 1 || samples < 1) throw config_error("invalid moment parameters");
    unsigned nt = threads < 1 ? 1 : static_cast<unsigned>(threads);
    if (nt > samples) nt = static_cast<unsigned>(samples);

    // per-thread accumulators, merged in thread order
    std::vector<std::vector<Kahan>> acc(nt, std::vector<Kahan>(n_max));
    std::vector<std::vector<Kahan>> acc_sq(nt, std::vector<Kahan>(n_max));

    auto work = [&](unsigned t, std::uint64_t count) {
        // split the seed into independent streams
        std::mt19937_64 rng(seed ^ (0x9e3779b97f4a7c15ull * (t + 1)));
        for (std::uint64_t i = 0; i < count; ++i) {
            Eigen::MatrixXcd u = sample_haar_rng(dim, rng);
            Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(u, false);
            if (es.info() != Eigen::Success) throw numerical_error("unitary eigensolve failed");
            Eigen::VectorXcd lam = es.eigenvalues();
            Eigen::VectorXcd pw = Eigen::VectorXcd::Ones(dim);
            for (int n = 1; n <= n_max; ++n) {
                for (int k = 0; k < dim; ++k) pw(k) *= lam(k);
                double v = std::norm(pw.sum());
                acc[t][n - 1].add(v);
                acc_sq[t][n - 1].add(v * v);
            }
        }
    };

    std::vector<std::thread> pool;
    for (unsigned t = 0; t < nt; ++t) {
        std::uint64_t count = samples / nt + (t < samples % nt ? 1 : 0);
        pool.emplace_back(work, t, count);
    }
    for (auto& th : pool) th.join();

    std::vector<MomentEstimate> out(n_max);
    for (int n = 1; n <= n_max; ++n) {
        Kahan sum, sum_sq;
        for (unsigned t = 0; t < nt; ++t) {
            sum.add(acc[t][n - 1].sum);
            sum_sq.add(acc_sq[t][n - 1].sum);
        }
        double mean = sum.sum / double(samples);
        double var = sum_sq.sum / double(samples) - mean * mean;
        if (var < 0) var = 0;
        out[n - 1] = MomentEstimate{dim, n, samples, mean,
                                    std::sqrt(var / double(samples)),
                                    double(std::min(n, dim))};
    }
    return out;
}

std::vector<EquidistributionRow> equidistribution_report(
    const std::vector<std::vector<std::complex<double>>>& theta_classes, int max_n) {
    if (theta_classes.empty())
        throw invariant_error("equidistribution report needs at least one good character");
    size_t count = theta_classes.size();
    int dim = static_cast<int>(theta_classes.front().size());
    std::vector<EquidistributionRow> out(max_n);
    std::vector<std::vector<std::complex<double>>> pw = theta_classes;
    for (int n = 1; n <= max_n; ++n) {
        std::complex<double> mean_tr = 0;
        Kahan mean_sq;
        for (size_t c = 0; c < count; ++c) {
            if (n > 1)
                for (size_t k = 0; k < pw[c].size(); ++k) pw[c][k] *= theta_classes[c][k];
            std::complex<double> tr = 0;
            for (const auto& ev : pw[c]) tr += ev;
            mean_tr += tr;
            mean_sq.add(std::norm(tr));
        }
        EquidistributionRow row;
        row.n = n;
        row.mean_trace = mean_tr / double(count);
        row.mean_abs_sq = mean_sq.sum / double(count);
        row.haar_abs_sq = double(std::min(n, dim));
        row.deviation = std::abs(row.mean_abs_sq - row.haar_abs_sq);
        out[n - 1] = row;
    }
    return out;
}

}  // namespace ffvar
