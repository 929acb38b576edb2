#pragma once

// Experiment orchestration: configuration, the experiment kinds exposed by
// the CLI, and CSV/JSON report emission.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "ffvar/apstats.hpp"
#include "ffvar/curve.hpp"
#include "ffvar/rmt.hpp"

namespace ffvar {

inline constexpr const char* kVersion = "0.1.0";

struct ExperimentConfig {
    std::string kind;  // euler | lfun | variance | sweep | rmt | selftest

    std::uint32_t p = 3;
    int e = 1;

    // legendre | genus2 | classical | custom (custom uses genus + f_coeffs)
    std::string curve = "legendre";
    int genus = 1;
    std::vector<long long> f_coeffs;

    // explicit Q (coefficients, low degree first) or a pattern
    std::vector<long long> q_coeffs;
    std::string q_pattern;  // "t_times_irreducible"
    int pattern_degree = 2;
    std::uint64_t pattern_seed = 1;

    int n_min = 1;
    int n_max = 3;

    std::vector<std::uint32_t> sweep_q = {3, 5, 7, 9, 11, 13};

    int rmt_dim = 5;
    int rmt_n_max = 12;
    std::uint64_t rmt_samples = 100000;

    std::string out = "ffvar_report";
    std::uint64_t seed = 1;
    int threads = 1;
    std::uint64_t budget = 100'000'000;
    bool theorem_mode = true;  // enforce gcd(Q, s) = t for variance/sweep
};

ExperimentConfig load_config_file(const std::string& path);

// Q = t * pi with pi the first irreducible of the given degree, coprime to s,
// in seeded pseudorandom order.
Poly q_from_pattern(const Fq& fq, const CurveFamily& curve, int degree, std::uint64_t seed);

CurveFamily curve_from_config(const Fq& fq, const ExperimentConfig& cfg);
Poly q_from_config(const Fq& fq, const CurveFamily& curve, const ExperimentConfig& cfg);

// Runs the configured experiment, writing <out>.csv and <out>.json.
// Returns a process exit code (0 ok, 1 invariant failure, 2 config error,
// 3 resource budget exceeded).
int run_experiment(const ExperimentConfig& cfg, std::ostream& log);

// The cross-module oracle battery behind the selftest kind; prints one line
// per check, returns true when all pass.
bool run_selftest(std::ostream& log);

std::string poly_to_string(const Fq& fq, const Poly& f, const std::string& var = "t");

}  // namespace ffvar
