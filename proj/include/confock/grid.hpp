#ifndef CONFOCK_GRID_HPP
#define CONFOCK_GRID_HPP

#include <Eigen/Dense>
#include <stdexcept>
#include <vector>

namespace confock {

/// Physical constants of the engine. c is fixed at 1 by the choice of units.
struct Constants {
    double hbar = 1.0;

    void validate() const {
        if (!(hbar > 0.0)) throw std::invalid_argument("Constants: hbar must be positive");
    }
};

/// Uniform positive-frequency lattice omega_j = j * d_omega, j = 1..modes.
///
/// The continuum <-> lattice dictionary used everywhere:
///   a_omega        <-> a_j / sqrt(d_nu)
///   2pi delta(w-w') <-> delta_jk / d_nu
///   delta(w+w') over signed indices <-> delta_{m,-m'} / d_omega
///   int dw/2pi f   <-> sum_j d_nu f(omega_j)
///   theta(w)       <-> j >= 1
struct FrequencyGrid {
    int modes = 0;
    double d_omega = 0.0;
    double d_nu = 0.0;  // d_omega / 2pi, the spectral measure weight
    std::vector<double> omega;  // omega[j-1] = j * d_omega

    double omega_at(int j) const { return omega[j - 1]; }  // 1-based
    bool same_lattice(const FrequencyGrid& o) const {
        return modes == o.modes && d_omega == o.d_omega;
    }
};

FrequencyGrid make_grid(int modes, double d_omega);

/// Banded first-derivative stencil in frequency.
///
/// `full` carries one-sided rows at the edges (exact on linears everywhere,
/// used for scalar profiles). `gen` is the antisymmetric generator: central
/// coefficients on every row, truncated at the grid edges. gen == full on
/// interiorRange = [interior_lo, interior_hi]; operator constructions (m, m_w,
/// delta') use gen so that hermiticity is exact.
struct DerivativeStencil {
    int order = 2;       // accuracy order p in {2,4}
    int half_width = 1;  // s = p/2
    int modes = 0;
    double d_omega = 0.0;
    Eigen::MatrixXd full;
    Eigen::MatrixXd gen;
    int interior_lo = 0;  // 1-based inclusive
    int interior_hi = 0;

    bool interior(int j) const { return j >= interior_lo && j <= interior_hi; }

    Eigen::VectorXcd apply(const Eigen::VectorXcd& f) const { return full * f; }
    Eigen::VectorXcd apply_gen(const Eigen::VectorXcd& f) const { return gen * f; }
};

DerivativeStencil derivative_matrix(const FrequencyGrid& grid, int order);

}  // namespace confock

#endif
