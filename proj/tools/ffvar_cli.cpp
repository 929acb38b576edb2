// ffvar command-line driver.  Exit codes: 0 success, 1 invariant failure,
// 2 configuration error, 3 resource budget exceeded.

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ffvar/experiment.hpp"

int main(int argc, char** argv) {
    CLI::App app{"function-field L-functions, progression variance, and matrix moments"};
    app.require_subcommand(1);

    std::string config_path;
    std::uint32_t q = 0;
    ffvar::ExperimentConfig cfg;
    std::string curve_type, out, q_pattern;
    std::vector<long long> q_coeffs;
    int n_min = -1, n_max = -1, pattern_degree = -1, rmt_dim = -1, rmt_n_max = -1;
    int threads = -1;
    long long seed = -1, rmt_samples = -1;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--config", config_path, "JSON config file");
        sub->add_option("--q", q, "field size (prime power, odd characteristic)");
        sub->add_option("--curve", curve_type, "legendre | genus2 | classical | custom");
        sub->add_option("--Q", q_coeffs, "modulus coefficients, low degree first");
        sub->add_option("--pattern", q_pattern, "modulus pattern (t_times_irreducible)");
        sub->add_option("--pattern-degree", pattern_degree, "degree of the pattern irreducible");
        sub->add_option("--n-min", n_min, "smallest degree n");
        sub->add_option("--n-max", n_max, "largest degree n");
        sub->add_option("--out", out, "output prefix for <out>.csv and <out>.json");
        sub->add_option("--seed", seed, "random seed");
        sub->add_option("--threads", threads, "worker threads");
        sub->add_option("--dim", rmt_dim, "matrix dimension R");
        sub->add_option("--rmt-n-max", rmt_n_max, "largest trace power");
        sub->add_option("--samples", rmt_samples, "Monte Carlo sample count");
    };

    for (const char* kind : {"euler", "lfun", "variance", "sweep", "rmt", "selftest"})
        add_common(app.add_subcommand(kind));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;  // --help is success; anything else is a config error
    }

    try {
        if (!config_path.empty()) cfg = ffvar::load_config_file(config_path);
    } catch (const std::exception& ex) {
        std::cerr << ex.what() << "\n";
        return 2;
    }
    cfg.kind = app.get_subcommands().front()->get_name();
    if (q != 0) {
        // split q into p^e
        std::uint32_t p = 2;
        while (q % p) ++p;
        std::uint32_t m = q;
        int e = 0;
        while (m % p == 0) m /= p, ++e;
        if (m != 1) {
            std::cerr << "config error: --q must be a prime power\n";
            return 2;
        }
        cfg.p = p;
        cfg.e = e;
    }
    if (!curve_type.empty()) cfg.curve = curve_type;
    if (!q_coeffs.empty()) cfg.q_coeffs = q_coeffs;
    if (!q_pattern.empty()) {
        cfg.q_pattern = q_pattern;
        cfg.q_coeffs.clear();
    }
    if (pattern_degree >= 0) cfg.pattern_degree = pattern_degree;
    if (n_min >= 0) cfg.n_min = n_min;
    if (n_max >= 0) cfg.n_max = n_max;
    if (!out.empty()) cfg.out = out;
    if (seed >= 0) cfg.seed = std::uint64_t(seed);
    if (threads >= 1) cfg.threads = threads;
    if (rmt_dim >= 1) cfg.rmt_dim = rmt_dim;
    if (rmt_n_max >= 1) cfg.rmt_n_max = rmt_n_max;
    if (rmt_samples >= 1) cfg.rmt_samples = std::uint64_t(rmt_samples);

    return ffvar::run_experiment(cfg, std::cout);
}
