#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "confock/confmap.hpp"

using namespace confock;

TEST_CASE("map constructors validate their parameters") {
    CHECK(make_map_homographic(1.0, 2.0, 0.0, 1.0, -5.0, 5.0).f(1.0) == doctest::Approx(3.0));
    CHECK_THROWS_AS(make_map_homographic(2.0, 0.0, 0.0, 1.0, -5.0, 5.0), std::invalid_argument);
    CHECK_THROWS_AS(make_map_homographic(1.0, 0.0, 1.0, 1.0, -5.0, 5.0),
                    std::invalid_argument);  // pole at -1 inside domain
    const ConformalMap ok = make_map_homographic(1.0, 0.0, 0.5, 1.0, 0.0, 1.0);
    CHECK(ok.fprime(0.5) > 0.0);

    const ConformalMap r = make_map_rindler(2.0, -10.0, 10.0);
    CHECK(r.f(0.0) == doctest::Approx(-0.5));
    CHECK(r.fprime(-1.0) > r.fprime(1.0));
    CHECK_THROWS_AS(make_map_rindler(-1.0, 0.0, 1.0), std::invalid_argument);

    CHECK_THROWS_AS(make_map_poly(3, 0.5, -10.0, 10.0), std::invalid_argument);  // not monotonic

    const ConformalMap t = parse_map_spec("translation:b=1.5");
    CHECK(t.kind == MapKind::Translation);
    CHECK(t.f(0.0) == doctest::Approx(1.5));
    CHECK_THROWS_AS(parse_map_spec("unknown:x=1"), std::invalid_argument);
}

TEST_CASE("window: flat core, smooth tapers, recorded weight") {
    const WindowedDomain w{-10.0, 10.0, 3.0, 3.0};
    CHECK(w.weight(0.0) == 1.0);
    CHECK(w.weight(-6.9) == 1.0);
    CHECK(w.weight(-10.0) == 0.0);
    CHECK(w.weight(11.0) == 0.0);
    CHECK(w.weight(-8.5) > 0.0);
    CHECK(w.weight(-8.5) < 1.0);
    CHECK(w.integral() == doctest::Approx(17.0).epsilon(0.02));
}

TEST_CASE("identity and translation contracts") {
    std::vector<double> freqs;
    for (int j = 0; j < 10; ++j) freqs.push_back(0.6 + 0.3 * j);
    const WindowedDomain window{-160.0, 160.0, 50.0, 50.0};

    const BogoliubovPair id =
        bogoliubov(make_map_identity(window.lo, window.hi), freqs, freqs, window, {});
    const double u = id.unit_scale();
    for (int i = 0; i < 10; ++i) {
        CHECK(std::abs(id.alpha(i, i)) * u == doctest::Approx(1.0).epsilon(1e-8));
        for (int k = 0; k < 10; ++k) {
            if (k != i) CHECK(std::abs(id.alpha(i, k)) * u < 1e-7);
            CHECK(std::abs(id.beta(i, k)) * u < 1e-8);
            CHECK(id.beta_err(i, k) * u < 1e-6);
        }
    }

    const double b = 0.8;
    const BogoliubovPair tr =
        bogoliubov(make_map_translation(b, window.lo, window.hi), freqs, freqs, window, {});
    for (int i = 0; i < 10; ++i) {
        CHECK(std::abs(std::remainder(std::arg(tr.alpha(i, i)) - freqs[i] * b, 2.0 * M_PI)) <
              1e-8);
        for (int k = 0; k < 10; ++k) CHECK(std::abs(tr.beta(i, k)) * u < 1e-8);
    }
}

TEST_CASE("dilation: beta suppressed, alpha on the shifted band") {
    std::vector<double> freqs;
    for (int j = 1; j <= 12; ++j) freqs.push_back(0.5 * j);
    const WindowedDomain window{-160.0, 160.0, 50.0, 50.0};
    const BogoliubovPair dl = bogoliubov(make_map_dilation(std::log(2.0), window.lo, window.hi),
                                         freqs, freqs, window, {});
    const double u = dl.unit_scale();
    for (int i = 0; i < 12; ++i)
        for (int k = 0; k < 12; ++k) {
            CHECK(std::abs(dl.beta(i, k)) * u < 1e-8);
            const bool on_band = std::abs(freqs[k] - 2.0 * freqs[i]) < 1e-12;
            if (on_band)
                CHECK(std::abs(dl.alpha(i, k)) * u > 0.5);
            else
                CHECK(std::abs(dl.alpha(i, k)) * u < 1e-5);
        }
}

TEST_CASE("exponential map reproduces the closed-form thermal overlap") {
    const double a = 1.0;
    std::vector<double> win = {0.1, 0.25, 0.5, 0.8};
    std::vector<double> wout = {0.9, 1.7};
    const WindowedDomain rw{-6.0, 520.0, 2.5, 470.0};
    QuadratureSpec rq;
    rq.oversample = 14.0;
    const BogoliubovPair rp = bogoliubov(make_map_rindler(a, rw.lo, rw.hi), win, wout, rw, rq);
    for (int i = 0; i < int(wout.size()); ++i)
        for (int k = 0; k < int(win.size()); ++k) {
            const double planck = 1.0 / std::expm1(2.0 * M_PI * win[k] / a);
            const double b2 = std::norm(rp.beta(i, k)) * 2.0 * M_PI * a * wout[i];
            CHECK(b2 == doctest::Approx(planck).epsilon(0.05));
            const double na = std::norm(rp.alpha(i, k)) - std::norm(rp.beta(i, k));
            CHECK(na * 2.0 * M_PI * a * wout[i] == doctest::Approx(1.0).epsilon(0.05));
        }
}

TEST_CASE("perturbation scaling separates the invariant and non-invariant directions") {
    std::vector<double> pf;
    for (int j = 0; j < 8; ++j) pf.push_back(0.25 + 0.22 * j);
    const WindowedDomain pw{-8.0, 8.0, 4.0, 4.0};

    // eps = 0 gives beta = 0 identically in the deviation formulation
    const Eigen::MatrixXcd b0 = bogoliubov_beta_deviation(
        make_map_poly(2, 0.0, pw.lo, pw.hi), pf, pf, pw, {});
    CHECK(b0.norm() == 0.0);

    const ScalingResult s2 = perturbation_scaling(2, {1e-3, 3e-3, 1e-2}, pf, pf, pw, {});
    CHECK(s2.slope > 1.9);
    const ScalingResult s3 = perturbation_scaling(3, {1e-4, 3e-4, 1e-3}, pf, pf, pw, {});
    CHECK(s3.slope == doctest::Approx(1.0).epsilon(0.2));

    CHECK_THROWS_AS(perturbation_scaling(3, {0.5}, pf, pf, pw, QuadratureSpec{}),
                    std::invalid_argument);  // non-monotonic for requested eps
}
