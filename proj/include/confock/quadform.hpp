#ifndef CONFOCK_QUADFORM_HPP
#define CONFOCK_QUADFORM_HPP

#include <Eigen/Dense>
#include <complex>

#include "confock/grid.hpp"

namespace confock {

using cplx = std::complex<double>;

/// Linear combination of mode operators, coefficients over (a_1..a_M, a+_1..a+_M)
/// in continuum normalization (a_omega = a_j / sqrt(d_nu)).
struct FieldVector {
    Eigen::VectorXcd a_part;
    Eigen::VectorXcd adag_part;

    static FieldVector zero(int modes) {
        FieldVector v;
        v.a_part = Eigen::VectorXcd::Zero(modes);
        v.adag_part = Eigen::VectorXcd::Zero(modes);
        return v;
    }
};

/// Quadratic form in mode operators, closed under commutation.
///
/// Operator content (discrete ops, unit CCR):
///   Q = (1/d_nu) [ sum_jk A_jk sym(a+_j a_k) + Bc_jk a+_j a+_k + Ba_jk a_j a_k ]
///       + scalar part fixed by the vacuum functional <Q>_vac = tr(A)/2 + c.
///
/// sym(a+_j a_k) = (a+_j a_k + a_k a+_j)/2. Hermitian forms satisfy A = A+,
/// Bc = conj(Ba), c real. A non-hermitian family obeys T[-m] = T[m]+.
struct QuadraticForm {
    int modes = 0;
    double d_omega = 0.0;
    double d_nu = 0.0;
    Eigen::MatrixXcd coeff_sym;     // A
    Eigen::MatrixXcd pair_create;   // Bc, symmetric
    Eigen::MatrixXcd pair_annih;    // Ba, symmetric
    cplx scalar{0.0, 0.0};          // c, vacuum-functional units
    bool support_clipped = false;   // convolution dropped out-of-range index pairs
    int clip_margin = 0;            // entries within this many modes of an edge may be affected

    static QuadraticForm zero(const FrequencyGrid& g);

    bool same_lattice(const QuadraticForm& o) const {
        return modes == o.modes && d_omega == o.d_omega;
    }
    QuadraticForm adjoint() const;
    double hermiticity_defect() const;  // relative, 0 for exactly hermitian forms

    QuadraticForm& operator+=(const QuadraticForm& o);
    QuadraticForm& operator*=(cplx z);
};

QuadraticForm qf_T_omega(const FrequencyGrid& grid, const Constants& consts, int m);
QuadraticForm qf_T_k(const FrequencyGrid& grid, const Constants& consts,
                     const DerivativeStencil& stencil, int k);
QuadraticForm qf_commutator(const QuadraticForm& q1, const QuadraticForm& q2);
cplx qf_vacuum_expectation(const QuadraticForm& q);
FieldVector qf_act_on_field(const QuadraticForm& q, const FieldVector& v);
double qf_pair_norm(const QuadraticForm& q);

/// Iterated central-difference weights for the k-th derivative at 0 over the
/// signed index range [-k*s, k*s]; weights include the 1/d_omega^k factor.
std::vector<std::pair<int, double>> derivative_weights(const DerivativeStencil& stencil, int k);

}  // namespace confock

#endif
