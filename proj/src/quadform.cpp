#include "confock/quadform.hpp"

#include <cmath>

namespace confock {

QuadraticForm QuadraticForm::zero(const FrequencyGrid& g) {
    QuadraticForm q;
    q.modes = g.modes;
    q.d_omega = g.d_omega;
    q.d_nu = g.d_nu;
    q.coeff_sym = Eigen::MatrixXcd::Zero(g.modes, g.modes);
    q.pair_create = Eigen::MatrixXcd::Zero(g.modes, g.modes);
    q.pair_annih = Eigen::MatrixXcd::Zero(g.modes, g.modes);
    return q;
}

QuadraticForm QuadraticForm::adjoint() const {
    QuadraticForm q = *this;
    q.coeff_sym = coeff_sym.adjoint();
    q.pair_create = pair_annih.conjugate();
    q.pair_annih = pair_create.conjugate();
    q.scalar = std::conj(scalar);
    return q;
}

double QuadraticForm::hermiticity_defect() const {
    double num = (coeff_sym - coeff_sym.adjoint().eval()).norm() +
                 (pair_create - pair_annih.conjugate()).norm() + std::abs(scalar.imag());
    double den = coeff_sym.norm() + pair_create.norm() + pair_annih.norm() + std::abs(scalar);
    return den > 0.0 ? num / den : 0.0;
}

QuadraticForm& QuadraticForm::operator+=(const QuadraticForm& o) {
    if (!same_lattice(o)) throw std::invalid_argument("QuadraticForm: grid mismatch");
    coeff_sym += o.coeff_sym;
    pair_create += o.pair_create;
    pair_annih += o.pair_annih;
    scalar += o.scalar;
    support_clipped = support_clipped || o.support_clipped;
    clip_margin = std::max(clip_margin, o.clip_margin);
    return *this;
}

QuadraticForm& QuadraticForm::operator*=(cplx z) {
    coeff_sym *= z;
    pair_create *= z;
    pair_annih *= z;
    scalar *= z;
    return *this;
}

// T[m]: discrete convolution sum_l d_nu w_l (w_m + w_l) phi[-w_l] phi[w_m + w_l]
// over signed l, index pairs outside the lattice dropped.
QuadraticForm qf_T_omega(const FrequencyGrid& grid, const Constants& consts, int m) {
    consts.validate();
    QuadraticForm q = QuadraticForm::zero(grid);
    const int M = grid.modes;
    const double hb = consts.hbar;

    for (int l = -M; l <= M; ++l) {
        if (l == 0) continue;
        const int t = m + l;
        if (t == 0) continue;  // prefactor omega_t vanishes there anyway
        if (t < -M || t > M) {
            q.support_clipped = true;
            continue;
        }
        const int I = std::abs(l);
        const int J = std::abs(t);
        const double sign = (l > 0 ? 1.0 : -1.0) * (t > 0 ? 1.0 : -1.0);
        // stored units carry one factor d_nu (see QuadraticForm docs)
        const double coef =
            grid.d_nu * sign * 0.5 * hb * std::sqrt(grid.omega_at(I) * grid.omega_at(J));

        if (l > 0 && t > 0) {
            q.coeff_sym(I - 1, J - 1) += coef;  // a+_I a_J
        } else if (l < 0 && t < 0) {
            q.coeff_sym(J - 1, I - 1) += coef;  // a_I a+_J = sym(a+_J a_I) + scalar (dropped)
        } else if (l < 0 && t > 0) {
            q.pair_annih(I - 1, J - 1) += coef;  // a_I a_J
        } else {
            q.pair_create(I - 1, J - 1) += coef;  // a+_I a+_J
        }
    }
    q.clip_margin = std::abs(m);
    return q;
}

std::vector<std::pair<int, double>> derivative_weights(const DerivativeStencil& stencil, int k) {
    // compact central weights of accuracy order p for the k-th derivative
    std::vector<std::pair<int, double>> w;
    if (stencil.order == 2) {
        switch (k) {
            case 0: w = {{0, 1.0}}; break;
            case 1: w = {{-1, -0.5}, {1, 0.5}}; break;
            case 2: w = {{-1, 1.0}, {0, -2.0}, {1, 1.0}}; break;
            case 3: w = {{-2, -0.5}, {-1, 1.0}, {1, -1.0}, {2, 0.5}}; break;
            default: throw std::invalid_argument("derivative_weights: k must be in 0..3");
        }
    } else {
        switch (k) {
            case 0: w = {{0, 1.0}}; break;
            case 1:
                w = {{-2, 1.0 / 12}, {-1, -8.0 / 12}, {1, 8.0 / 12}, {2, -1.0 / 12}};
                break;
            case 2:
                w = {{-2, -1.0 / 12}, {-1, 16.0 / 12}, {0, -30.0 / 12}, {1, 16.0 / 12},
                     {2, -1.0 / 12}};
                break;
            case 3:
                w = {{-3, 1.0 / 8}, {-2, -1.0}, {-1, 13.0 / 8},
                     {1, -13.0 / 8}, {2, 1.0},  {3, -1.0 / 8}};
                break;
            default: throw std::invalid_argument("derivative_weights: k must be in 0..3");
        }
    }
    const double scale = std::pow(stencil.d_omega, -k);
    for (auto& [m, c] : w) c *= scale;
    return w;
}

QuadraticForm qf_T_k(const FrequencyGrid& grid, const Constants& consts,
                     const DerivativeStencil& stencil, int k) {
    if (k < 0 || k > 3) throw std::invalid_argument("qf_T_k: k must be in 0..3");
    const auto weights = derivative_weights(stencil, k);
    for (auto [m, w] : weights)
        if (std::abs(m) > 2 * grid.modes - 2)
            throw std::invalid_argument("qf_T_k: stencil width exceeds available m-range");

    const cplx mik = std::pow(cplx(0.0, -1.0), k);
    QuadraticForm acc = QuadraticForm::zero(grid);
    for (auto [m, w] : weights) {
        QuadraticForm t = qf_T_omega(grid, consts, m);
        t *= cplx(w, 0.0);
        acc += t;
    }
    acc *= mik;
    return acc;
}

// Commutator at coefficient level. With W = [[2 Ba, A^T], [A, 2 Bc]] and
// Omega0 = [[0, I], [-I, 0]], the result is K = (W1 Omega0 W2 - W2 Omega0 W1)/d_nu;
// the scalar piece (1/d_nu - 1) tr(A')/2 keeps the vacuum functional equal to the
// true vacuum value of the realized commutator.
QuadraticForm qf_commutator(const QuadraticForm& q1, const QuadraticForm& q2) {
    if (!q1.same_lattice(q2)) throw std::invalid_argument("qf_commutator: grid mismatch");
    const int M = q1.modes;

    auto assemble = [M](const QuadraticForm& q) {
        Eigen::MatrixXcd W(2 * M, 2 * M);
        W.topLeftCorner(M, M) = 2.0 * q.pair_annih;
        W.topRightCorner(M, M) = q.coeff_sym.transpose();
        W.bottomLeftCorner(M, M) = q.coeff_sym;
        W.bottomRightCorner(M, M) = 2.0 * q.pair_create;
        return W;
    };
    auto omega_mul = [M](const Eigen::MatrixXcd& W) {
        // Omega0 * W
        Eigen::MatrixXcd R(2 * M, 2 * M);
        R.topRows(M) = W.bottomRows(M);
        R.bottomRows(M) = -W.topRows(M);
        return R;
    };

    const Eigen::MatrixXcd W1 = assemble(q1);
    const Eigen::MatrixXcd W2 = assemble(q2);
    Eigen::MatrixXcd K = (W1 * omega_mul(W2) - W2 * omega_mul(W1)) / q1.d_nu;

    QuadraticForm r;
    r.modes = M;
    r.d_omega = q1.d_omega;
    r.d_nu = q1.d_nu;
    r.coeff_sym = K.bottomLeftCorner(M, M);
    r.pair_annih = 0.5 * K.topLeftCorner(M, M);
    r.pair_create = 0.5 * K.bottomRightCorner(M, M);
    r.scalar = (1.0 / q1.d_nu - 1.0) * 0.5 * r.coeff_sym.trace();
    r.support_clipped = q1.support_clipped || q2.support_clipped;
    r.clip_margin = q1.clip_margin + q2.clip_margin;
    return r;
}

cplx qf_vacuum_expectation(const QuadraticForm& q) {
    return 0.5 * q.coeff_sym.trace() + q.scalar;
}

FieldVector qf_act_on_field(const QuadraticForm& q, const FieldVector& v) {
    if (v.a_part.size() != q.modes) throw std::invalid_argument("qf_act_on_field: grid mismatch");
    FieldVector r = FieldVector::zero(q.modes);
    const double inv = 1.0 / q.d_nu;
    r.a_part = inv * (-q.coeff_sym.transpose() * v.a_part + 2.0 * q.pair_annih * v.adag_part);
    r.adag_part = inv * (q.coeff_sym * v.adag_part - 2.0 * q.pair_create * v.a_part);
    return r;
}

double qf_pair_norm(const QuadraticForm& q) { return q.pair_create.norm(); }

}  // namespace confock
