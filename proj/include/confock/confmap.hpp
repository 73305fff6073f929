#ifndef CONFOCK_CONFMAP_HPP
#define CONFOCK_CONFMAP_HPP

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "confock/grid.hpp"

namespace confock {

using cplx = std::complex<double>;

enum class MapKind { Identity, Translation, Dilation, Homographic, PolyPerturbation, Rindler };

/// Monotonic coordinate map ubar = f(u) on one light-cone variable.
struct ConformalMap {
    MapKind kind = MapKind::Identity;
    double shift = 0.0;     // translation: f = u + shift
    double rapidity = 0.0;  // dilation: f = e^rapidity * u
    double ha = 1.0, hb = 0.0, hc = 0.0, hd = 1.0;  // homographic (ha u + hb)/(hc u + hd)
    int poly_k = 0;
    double poly_eps = 0.0;  // f = u + eps u^k
    double accel = 0.0;     // rindler: f = -(1/accel) e^{-accel u}
    double u_min = -1.0, u_max = 1.0;

    double f(double u) const;
    double fprime(double u) const;
    std::string describe() const;
};

ConformalMap make_map_identity(double u_min, double u_max);
ConformalMap make_map_translation(double b, double u_min, double u_max);
ConformalMap make_map_dilation(double rapidity, double u_min, double u_max);
ConformalMap make_map_homographic(double a, double b, double c, double d, double u_min,
                                  double u_max);
ConformalMap make_map_poly(int k, double eps, double u_min, double u_max);
ConformalMap make_map_rindler(double accel, double u_min, double u_max);
/// Parse "translation:b=1.5", "dilation:lambda=0.7", "homographic:a=..,b=..,c=..,d=..",
/// "poly:k=3,eps=1e-3", "rindler:a=1.0", with optional umin=..,umax=..
ConformalMap parse_map_spec(const std::string& spec);

/// Smooth compactly supported window: flat core, Planck tapers of widths
/// taper_lo / taper_hi at the ends.
struct WindowedDomain {
    double lo = -1.0, hi = 1.0;
    double taper_lo = 0.2, taper_hi = 0.2;
    double weight(double u) const;
    double integral(int samples = 20001) const;
};

struct QuadratureSpec {
    double oversample = 12.0;  // nodes per phase cycle
    int min_nodes = 4000;
    int max_nodes = 2000000;
};

/// alpha/beta overlap matrices over (out-frequency x in-frequency), with the
/// integrand windowed by `window`. Entries are continuum-normalized overlap
/// densities; unit_scale() maps alpha to ~identity for the identity map.
struct BogoliubovPair {
    Eigen::MatrixXcd alpha, beta;
    Eigen::MatrixXd alpha_err, beta_err;  // Richardson estimates per entry
    WindowedDomain window;
    double window_weight = 0.0;
    int nodes = 0;
    std::string rule = "simpson";
    double unit_scale() const { return 2.0 * M_PI / window_weight; }
};

BogoliubovPair bogoliubov(const ConformalMap& map, const std::vector<double>& omega_in,
                          const std::vector<double>& omega_out, const WindowedDomain& window,
                          const QuadratureSpec& quad = {});

/// beta of the map deviation against the identity: the integrand difference is
/// compactly supported, so the identity map gives beta = 0 identically. The
/// deviation (f(u) - u) is switched on by the window.
Eigen::MatrixXcd bogoliubov_beta_deviation(const ConformalMap& map,
                                           const std::vector<double>& omega_in,
                                           const std::vector<double>& omega_out,
                                           const WindowedDomain& window,
                                           const QuadratureSpec& quad = {});

struct ScalingResult {
    std::vector<double> eps;
    std::vector<double> beta_norm;
    double slope = 0.0;
};

ScalingResult perturbation_scaling(int k, const std::vector<double>& eps_list,
                                   const std::vector<double>& omega_in,
                                   const std::vector<double>& omega_out,
                                   const WindowedDomain& window, const QuadratureSpec& quad = {});

double fit_loglog_slope(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace confock

#endif
