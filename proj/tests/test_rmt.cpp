#include <doctest.h>

#include <cmath>

#include "ffvar/rmt.hpp"

using namespace ffvar;

TEST_CASE("sampled matrices are unitary and deterministic per seed") {
    for (int dim : {1, 3, 6}) {
        Eigen::MatrixXcd u = sample_haar(dim, 42);
        Eigen::MatrixXcd err = u.adjoint() * u - Eigen::MatrixXcd::Identity(dim, dim);
        CHECK(err.cwiseAbs().maxCoeff() < 1e-10);
        Eigen::MatrixXcd u2 = sample_haar(dim, 42);
        CHECK((u - u2).cwiseAbs().maxCoeff() == 0.0);
        Eigen::MatrixXcd u3 = sample_haar(dim, 43);
        CHECK((u - u3).cwiseAbs().maxCoeff() > 1e-6);
    }
}

TEST_CASE("dimension one moments are exactly one") {
    for (const auto& m : trace_moments(1, 5, 500, 9)) {
        CHECK(m.estimate == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(m.prediction == 1.0);
    }
}

TEST_CASE("moment estimates near min(n, R)") {
    auto ms = trace_moments(3, 5, 20000, 11, 2);
    for (const auto& m : ms) {
        CHECK(m.prediction == double(std::min(m.n, 3)));
        CHECK(std::abs(m.estimate - m.prediction) <= 5.0 * m.std_error);
    }
}

TEST_CASE("thread split reproduces single-thread totals per seed") {
    auto a = trace_moments(2, 3, 4000, 5, 2);
    auto b = trace_moments(2, 3, 4000, 5, 2);
    for (size_t i = 0; i < a.size(); ++i) CHECK(a[i].estimate == b[i].estimate);
}

TEST_CASE("equidistribution rows against explicit classes") {
    // two "characters" whose theta eigenvalues are 4th roots of unity rotations
    std::vector<std::vector<std::complex<double>>> classes = {
        {{0, 1}, {0, -1}},
        {{1, 0}, {-1, 0}},
    };
    auto rows = equidistribution_report(classes, 2);
    REQUIRE(rows.size() == 2);
    // n=1: traces are 0 for both
    CHECK(rows[0].mean_abs_sq == doctest::Approx(0.0));
    // n=2: first squares to {-1,-1} (trace -2), second to {1,1} (trace 2)
    CHECK(rows[1].mean_abs_sq == doctest::Approx(4.0));
    CHECK(rows[1].haar_abs_sq == 2.0);
    CHECK_THROWS(equidistribution_report({}, 3));
}
