#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <complex>

#include "confock/grid.hpp"

using namespace confock;

TEST_CASE("make_grid basics and preconditions") {
    const FrequencyGrid g = make_grid(4, 0.5);
    CHECK(g.omega == std::vector<double>{0.5, 1.0, 1.5, 2.0});
    CHECK(g.d_nu == doctest::Approx(0.5 / (2.0 * M_PI)));

    const FrequencyGrid big = make_grid(64, 0.125);
    CHECK(big.omega_at(64) == doctest::Approx(8.0));

    CHECK_THROWS_AS(make_grid(1, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(make_grid(16, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(make_grid(16, -1.0), std::invalid_argument);
}

TEST_CASE("central rows and interior range") {
    const FrequencyGrid g = make_grid(16, 0.5);
    const DerivativeStencil st = derivative_matrix(g, 2);
    CHECK(st.interior_lo == 2);
    CHECK(st.interior_hi == 15);
    const int j = 8;
    CHECK(st.full(j - 1, j - 2) == doctest::Approx(-1.0 / (2.0 * 0.5)));
    CHECK(st.full(j - 1, j - 1) == 0.0);
    CHECK(st.full(j - 1, j) == doctest::Approx(1.0 / (2.0 * 0.5)));

    CHECK_THROWS_AS(derivative_matrix(g, 3), std::invalid_argument);
}

TEST_CASE("generator is antisymmetric, full matrix exact on polynomials") {
    for (int p : {2, 4}) {
        const FrequencyGrid g = make_grid(24, 0.25);
        const DerivativeStencil st = derivative_matrix(g, p);
        CHECK((st.gen + st.gen.transpose()).norm() == doctest::Approx(0.0).epsilon(1e-15));
        // gen == full on the interior rows
        for (int j = st.interior_lo; j <= st.interior_hi; ++j)
            CHECK((st.gen.row(j - 1) - st.full.row(j - 1)).norm() == 0.0);

        Eigen::VectorXcd w(g.modes), w2(g.modes);
        for (int j = 1; j <= g.modes; ++j) {
            w[j - 1] = g.omega_at(j);
            w2[j - 1] = g.omega_at(j) * g.omega_at(j);
        }
        const Eigen::VectorXcd dw = st.apply(w);
        for (int j = 1; j <= g.modes; ++j)
            CHECK(std::abs(dw[j - 1] - 1.0) < 1e-12);  // one-sided rows included
        const Eigen::VectorXcd dw2 = st.apply(w2);
        for (int j = st.interior_lo; j <= st.interior_hi; ++j)
            CHECK(std::abs(dw2[j - 1] - 2.0 * g.omega_at(j)) < 1e-10);
    }
}

TEST_CASE("refinement halves the error at rate 2^p on oscillatory samples") {
    const double u0 = 0.9;
    for (int p : {2, 4}) {
        auto max_err = [&](int modes, double h) {
            const FrequencyGrid g = make_grid(modes, h);
            const DerivativeStencil st = derivative_matrix(g, p);
            Eigen::VectorXcd f(modes);
            for (int j = 1; j <= modes; ++j)
                f[j - 1] = std::exp(std::complex<double>(0.0, g.omega_at(j) * u0));
            const Eigen::VectorXcd df = st.apply(f);
            double e = 0.0;
            for (int j = st.interior_lo; j <= st.interior_hi; ++j)
                e = std::max(e, std::abs(df[j - 1] - std::complex<double>(0.0, u0) * f[j - 1]));
            return e;
        };
        const double e1 = max_err(32, 0.25);
        const double e2 = max_err(64, 0.125);
        const double rate = std::log2(e1 / e2);
        CHECK(rate > p - 0.3);
        CHECK(rate < p + 0.3);
    }
}
