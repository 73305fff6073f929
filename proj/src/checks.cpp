#include "confock/checks.hpp"

#include <cmath>

namespace confock {

CheckRecord make_record(std::string id, std::string ref, double computed, double expected,
                        double tol_rel, double floor) {
    CheckRecord r;
    r.check_id = std::move(id);
    r.ref = std::move(ref);
    r.computed = {computed};
    r.expected = {expected};
    r.abs_err = std::abs(computed - expected);
    r.rel_err = r.abs_err / std::max(std::abs(expected), floor);
    r.pass = r.rel_err <= tol_rel;
    return r;
}

CheckRecord bound_record(std::string id, std::string ref, double value, double bound) {
    CheckRecord r;
    r.check_id = std::move(id);
    r.ref = std::move(ref);
    r.computed = {value};
    r.expected = {bound};
    r.abs_err = value;
    r.rel_err = bound > 0.0 ? value / bound : value;
    r.pass = value <= bound;
    return r;
}

ChecksContext make_context(int modes, double d_omega, int n_max, int order, double u0,
                           double sigma_u, double omega_c, std::int64_t dim_cap) {
    ChecksContext cx;
    cx.grid = make_grid(modes, d_omega);
    cx.stencil = derivative_matrix(cx.grid, order);
    cx.basis = build_basis(cx.grid, n_max, dim_cap);
    cx.packet = gaussian_packet(cx.grid, u0, sigma_u, omega_c, 2 * cx.stencil.half_width);
    return cx;
}

std::vector<double> number_profile(const FockBasis& basis, const FieldState& psi) {
    std::vector<double> prof(basis.modes, 0.0);
    for (int i = 0; i < basis.dim(); ++i) {
        const double w = std::norm(psi.amp[i]);
        if (w == 0.0) continue;
        for (int j = 0; j < basis.modes; ++j) prof[j] += w * double(basis.states[i][j]);
    }
    for (double& p : prof) p /= basis.d_nu;
    return prof;
}

std::vector<double> mdensity_profile(const FockBasis& basis, const DerivativeStencil& st,
                                     const FieldState& psi) {
    const Eigen::MatrixXcd rho = one_body_density(basis, psi);
    std::vector<double> prof(basis.modes, 0.0);
    for (int l = 0; l < basis.modes; ++l) {
        double s = 0.0;
        for (int r = 0; r < basis.modes; ++r)
            if (st.gen(l, r) != 0.0) s += st.gen(l, r) * std::imag(rho(l, r));
        prof[l] = s / basis.d_nu;
    }
    return prof;
}

std::vector<double> commutator_number_profile(const FockBasis& basis, const Constants& consts,
                                              const CsrMatrix& op, const FieldState& psi) {
    const std::vector<cplx> t = op.apply(psi.amp);
    std::vector<double> prof(basis.modes, 0.0);
    // <[op, N_j]> = 2i Im <op psi | N_j psi> for hermitian op
    for (int i = 0; i < basis.dim(); ++i) {
        const cplx z = std::conj(t[i]) * psi.amp[i];
        if (z == cplx(0.0, 0.0)) continue;
        for (int j = 0; j < basis.modes; ++j)
            prof[j] += 2.0 * std::imag(z) * double(basis.states[i][j]);
    }
    for (double& p : prof) p /= consts.hbar * basis.d_nu;
    return prof;
}

double profile_rel_l2(const std::vector<double>& lhs, const std::vector<double>& rhs,
                      const DerivativeStencil& st, int margin) {
    const int lo = st.interior_lo + margin;
    const int hi = st.interior_hi - margin;
    double num = 0.0, den = 0.0;
    for (int j = lo; j <= hi; ++j) {
        num += (lhs[j - 1] - rhs[j - 1]) * (lhs[j - 1] - rhs[j - 1]);
        den += rhs[j - 1] * rhs[j - 1];
    }
    if (den == 0.0) return std::sqrt(num);
    return std::sqrt(num / den);
}

namespace {

std::vector<double> stencil_of_weighted(const DerivativeStencil& st,
                                        const std::vector<double>& weight,
                                        const std::vector<double>& prof) {
    Eigen::VectorXcd v(st.modes);
    for (int j = 0; j < st.modes; ++j) v[j] = weight[j] * prof[j];
    const Eigen::VectorXcd d = st.gen * v;
    std::vector<double> out(st.modes);
    for (int j = 0; j < st.modes; ++j) out[j] = d[j].real();
    return out;
}

}  // namespace

RedistributionResult number_redistribution_check(const ChecksContext& cx, const FieldState& psi) {
    RedistributionResult res;
    const auto& b = cx.basis;
    std::vector<double> wgt(b.modes);
    for (int j = 1; j <= b.modes; ++j) wgt[j - 1] = cx.grid.omega_at(j);

    const FockOperator t0 = realize(qf_T_k(cx.grid, cx.consts, cx.stencil, 0), b);
    const FockOperator t1 = realize(qf_T_k(cx.grid, cx.consts, cx.stencil, 1), b);
    const FockOperator t2 = realize(qf_T_k(cx.grid, cx.consts, cx.stencil, 2), b);

    res.translation_norm = commutator(t0.mat, number_density(b, b.modes / 2).mat).frob_norm();

    const std::vector<double> nprof = number_profile(b, psi);
    const std::vector<double> mprof = mdensity_profile(b, cx.stencil, psi);

    const std::vector<double> lhs1 = commutator_number_profile(b, cx.consts, t1.mat, psi);
    const std::vector<double> rhs1 = stencil_of_weighted(cx.stencil, wgt, nprof);
    res.err_boost = profile_rel_l2(lhs1, rhs1, cx.stencil, cx.stencil.half_width);

    const std::vector<double> lhs2 = commutator_number_profile(b, cx.consts, t2.mat, psi);
    std::vector<double> rhs2 = stencil_of_weighted(cx.stencil, wgt, mprof);
    for (double& x : rhs2) x *= 2.0;
    res.err_accel = profile_rel_l2(lhs2, rhs2, cx.stencil, cx.stencil.half_width);
    return res;
}

CanonicalResult canonical_checks(const ChecksContext& cx) {
    CanonicalResult res;
    const auto& b = cx.basis;
    const double hb = cx.consts.hbar;

    const FockOperator t0 = realize(qf_T_k(cx.grid, cx.consts, cx.stencil, 0), b);
    const FockOperator m = m_total(b, cx.stencil);
    const CsrMatrix comm = commutator(t0.mat, m.mat);

    // CCR closed form: [T_0, m] = -i hbar sum_jl (w_j - w_l) S_jl a+_j a_l
    Eigen::MatrixXcd h(b.modes, b.modes);
    for (int j = 0; j < b.modes; ++j)
        for (int l = 0; l < b.modes; ++l)
            h(j, l) = cplx(0.0, -hb) * (cx.grid.omega_at(j + 1) - cx.grid.omega_at(l + 1)) *
                      cx.stencil.gen(j, l);
    const CsrMatrix closed = one_body_op(b, h);
    res.closed_form_defect =
        spadd(comm, closed, {1.0, 0.0}, {-1.0, 0.0}).frob_norm() / closed.frob_norm();

    const FieldState f = one_particle_state(b, cx.packet);
    {
        std::vector<cplx> lhs = comm.apply(f.amp);
        std::vector<cplx> rhs = occupation_total(b).apply(f.amp);
        for (cplx& z : rhs) z *= cplx(0.0, hb);
        double num = 0.0, den = 0.0;
        for (size_t i = 0; i < lhs.size(); ++i) {
            num += std::norm(lhs[i] - rhs[i]);
            den += std::norm(rhs[i]);
        }
        res.literal_residual = std::sqrt(num / den);
    }

    {
        const Eigen::MatrixXcd rho = one_body_density(b, f);
        const std::vector<double> nprof = number_profile(b, f);
        std::vector<double> lhs(b.modes, 0.0);
        for (int j = 0; j < b.modes; ++j) {
            double s = 0.0;
            for (int l = 0; l < b.modes; ++l)
                if (cx.stencil.gen(j, l) != 0.0)
                    s += cx.stencil.gen(j, l) *
                         (cx.grid.omega_at(l + 1) - cx.grid.omega_at(j + 1)) *
                         std::real(rho(l, j));
            lhs[j] = s / b.d_nu;
        }
        res.density_conv_err = profile_rel_l2(lhs, nprof, cx.stencil, cx.stencil.half_width);
    }

    const cplx z = expectation(comm, f.amp) / cplx(0.0, hb);
    res.sector_canonical_err = std::abs(z - cplx(1.0, 0.0));
    return res;
}

MnCommutatorResult mn_commutator_check(const ChecksContext& cx, const FieldState& psi) {
    MnCommutatorResult res;
    const auto& b = cx.basis;
    const int jc = (cx.stencil.interior_lo + cx.stencil.interior_hi) / 2;

    const FockOperator mj = m_density(b, cx.stencil, jc);
    for (int k = std::max(1, jc - cx.stencil.half_width);
         k <= std::min(b.modes, jc + cx.stencil.half_width); ++k) {
        const CsrMatrix comm = commutator(mj.mat, number_density(b, k).mat);
        Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(b.modes, b.modes);
        const cplx pref = cplx(0.0, 0.5) / (b.d_nu * b.d_nu);
        for (int l = 1; l <= b.modes; ++l) {
            const double S = cx.stencil.gen(jc - 1, l - 1);
            if (S == 0.0) continue;
            const double delta = (jc == k ? 1.0 : 0.0) - (l == k ? 1.0 : 0.0);
            if (delta == 0.0) continue;
            h(l - 1, jc - 1) += pref * S * delta;
            h(jc - 1, l - 1) += pref * S * delta;
        }
        const CsrMatrix closed = one_body_op(b, h);
        const double scale = std::max(closed.frob_norm(), 1e-300);
        res.exact_defect = std::max(
            res.exact_defect,
            spadd(comm, closed, {1.0, 0.0}, {-1.0, 0.0}).frob_norm() / scale);
    }

    {
        const int k = jc + cx.stencil.half_width + 1;
        res.disjoint_norm = commutator(mj.mat, number_density(b, k).mat).frob_norm();
    }

    // smooth-packet pairing against -i <n_w> phi'(w)
    {
        const double wc = cx.grid.omega_at(b.modes / 2);
        const double sw = 0.18 * cx.grid.omega_at(b.modes);
        auto phi = [&](double w) { return std::exp(-(w - wc) * (w - wc) / (2.0 * sw * sw)); };
        auto phip = [&](double w) { return -(w - wc) / (sw * sw) * phi(w); };

        const std::vector<double> nprof = number_profile(b, psi);
        double num = 0.0, den = 0.0;
        const int span = 2;
        for (int j = jc - span; j <= jc + span; ++j) {
            const FockOperator mjx = m_density(b, cx.stencil, j);
            const std::vector<cplx> t = mjx.mat.apply(psi.amp);
            cplx pairing = 0.0;
            for (int i = 0; i < b.dim(); ++i) {
                const cplx z = std::conj(t[i]) * psi.amp[i];
                if (z == cplx(0.0, 0.0)) continue;
                double acc = 0.0;
                for (int k = 0; k < b.modes; ++k)
                    acc += double(b.states[i][k]) * phi(cx.grid.omega_at(k + 1));
                pairing += 2.0 * cplx(0.0, std::imag(z)) * acc;
            }
            pairing /= b.d_nu;  // N_k -> n_w[k], then sum_k d_nu cancels
            const cplx target = cplx(0.0, -1.0) * nprof[j - 1] * phip(cx.grid.omega_at(j));
            num += std::norm(pairing - target);
            den += std::norm(target);
        }
        res.continuum_err = std::sqrt(num / den);
    }
    return res;
}

NewtonWignerResult newton_wigner_checks(const ChecksContext& cx) {
    NewtonWignerResult res;
    const auto& b = cx.basis;
    const int M = b.modes;
    const FockOperator m = m_total(b, cx.stencil);
    const FieldState f = one_particle_state(b, cx.packet);

    {
        // m|f> has 1-particle amplitudes -i (S g), g the state amplitudes
        Eigen::VectorXcd g(M);
        std::vector<std::uint8_t> s(M, 0);
        for (int j = 1; j <= M; ++j) {
            s[j - 1] = 1;
            g[j - 1] = f.amp[b.find(s)];
            s[j - 1] = 0;
        }
        const Eigen::VectorXcd dg = cplx(0.0, -1.0) * (cx.stencil.gen * g);
        const std::vector<cplx> mf = m.mat.apply(f.amp);
        double num = 0.0, den = 0.0;
        for (int j = 1; j <= M; ++j) {
            s[j - 1] = 1;
            const cplx got = mf[b.find(s)];
            num += std::norm(got - dg[j - 1]);
            den += std::norm(dg[j - 1]);
            s[j - 1] = 0;
        }
        res.amplitude_defect = std::sqrt(num / den);
    }

    const int jc = (cx.stencil.interior_lo + cx.stencil.interior_hi) / 2;
    const FockOperator mj = m_density(b, cx.stencil, jc);
    const FockOperator nmn = normal_mn(b, cx.stencil, jc);
    const CsrMatrix nj = number_density(b, jc).mat;
    {
        CsrMatrix lhs = anticommutator(m.mat, nj);
        lhs.scale(0.5);
        const CsrMatrix rhs = spadd(mj.mat, nmn.mat);
        res.halfanticomm_defect =
            spadd(lhs, rhs, {1.0, 0.0}, {-1.0, 0.0}).frob_norm() / rhs.frob_norm();
    }
    {
        const CsrMatrix p01 = sector_projector(b, 0, 1);
        res.quartic_on_one = spmm(nmn.mat, p01).frob_norm() / std::max(nmn.mat.frob_norm(), 1e-300);
    }
    {
        const CsrMatrix p1 = sector_projector(b, 1, 1);
        CsrMatrix lhs = anticommutator(m.mat, nj);
        lhs.scale(0.5);
        const CsrMatrix diff = spadd(lhs, mj.mat, {1.0, 0.0}, {-1.0, 0.0});
        const CsrMatrix restr = spmm(p1, spmm(diff, p1));
        res.sector_reduction =
            restr.frob_norm() / std::max(spmm(p1, spmm(mj.mat, p1)).frob_norm(), 1e-300);
    }
    {
        // naive per-mode sandwich sqrt(n_j) m sqrt(n_j), for the record
        std::vector<cplx> d(b.dim());
        for (int i = 0; i < b.dim(); ++i)
            d[i] = std::sqrt(double(b.states[i][jc - 1]) / b.d_nu);
        const CsrMatrix sq = CsrMatrix::diagonal(d);
        const CsrMatrix sandwich = spmm(sq, spmm(m.mat, sq));
        const CsrMatrix p1 = sector_projector(b, 1, 1);
        const CsrMatrix diff = spadd(sandwich, mj.mat, {1.0, 0.0}, {-1.0, 0.0});
        res.sandwich_defect = spmm(p1, spmm(diff, p1)).frob_norm() /
                              std::max(spmm(p1, spmm(mj.mat, p1)).frob_norm(), 1e-300);
    }
    {
        // u-representation on the periodic grid u_q
        const double h = cx.grid.d_omega;
        const double du = 2.0 * M_PI / (M * h);
        Eigen::VectorXcd g(M);
        for (int j = 0; j < M; ++j) g[j] = cx.packet.f[j];
        const Eigen::VectorXcd dg = cplx(0.0, -1.0) * (cx.stencil.gen * g);

        double num_mult = 0.0, den_mult = 0.0, num_alias = 0.0, den_alias = 0.0, bound_num = 0.0;
        for (int q = 0; q < M; ++q) {
            const double u = (q - M / 2) * du;
            cplx ft = 0.0, dft = 0.0;
            for (int j = 1; j <= M; ++j) {
                const cplx ph = std::exp(cplx(0.0, -cx.grid.omega_at(j) * u));
                ft += cx.grid.d_nu * g[j - 1] * ph;
                dft += cx.grid.d_nu * dg[j - 1] * ph;
            }
            double mult = 0.0;  // 2 sum_r c_r sin(r h u)
            if (cx.stencil.order == 2) {
                mult = std::sin(h * u) / h;
            } else {
                mult = (8.0 * std::sin(h * u) - std::sin(2.0 * h * u)) / (6.0 * h);
            }
            num_mult += std::norm(dft - mult * ft);
            den_mult += std::norm(mult * ft);
            num_alias += std::norm(dft - u * ft);
            den_alias += std::norm(u * ft);
            bound_num += std::norm((mult - u) * ft);
        }
        res.urep_multiplier_defect = std::sqrt(num_mult / den_mult);
        res.urep_alias_err = std::sqrt(num_alias / den_alias);
        res.urep_alias_bound = std::sqrt(bound_num / den_alias) + res.urep_multiplier_defect;
    }
    return res;
}

PhaseRouteResult phase_route_checks(const ChecksContext& cx, PhaseConvention conv, int pb_s) {
    PhaseRouteResult res;
    const auto& b = cx.basis;
    const PhaseOperatorSet ph = phase_operators(b, conv, pb_s);
    const CsrMatrix ident = CsrMatrix::identity(b.dim());
    const int jc = (cx.stencil.interior_lo + cx.stencil.interior_hi) / 2;

    if (conv == PhaseConvention::SusskindGlogower) {
        const CsrMatrix safe = sector_projector(b, 0, b.n_max - 1);
        const CsrMatrix ee = spmm(ph.e[jc - 1], ph.e[jc - 1].dagger());
        res.sg_ee_dagger =
            spmm(safe, spmm(spadd(ee, ident, {1.0, 0.0}, {-1.0, 0.0}), safe)).frob_norm();
        const CsrMatrix expected = spadd(ident, ph.vac_proj[jc - 1], {1.0, 0.0}, {-1.0, 0.0});
        res.sg_edagger_e = spadd(spmm(ph.e[jc - 1].dagger(), ph.e[jc - 1]), expected, {1.0, 0.0},
                                 {-1.0, 0.0})
                               .frob_norm();
    } else {
        // wrap-safe block for mode jc: sum of other occupations <= n_max - s
        std::vector<cplx> d(b.dim(), cplx(0.0, 0.0));
        for (int i = 0; i < b.dim(); ++i)
            if (b.total_occ(i) - b.states[i][jc - 1] <= b.n_max - ph.pb_s) d[i] = 1.0;
        const CsrMatrix block = CsrMatrix::diagonal(d);
        auto defect = [&](const CsrMatrix& prod) {
            return spmm(block, spmm(spadd(prod, ident, {1.0, 0.0}, {-1.0, 0.0}), block))
                .frob_norm();
        };
        res.pb_unitarity = std::max(defect(spmm(ph.e[jc - 1], ph.e[jc - 1].dagger())),
                                    defect(spmm(ph.e[jc - 1].dagger(), ph.e[jc - 1])));
    }

    res.cross_mode_comm = commutator(ph.e[jc - 1], ph.e[jc - 2]).frob_norm();

    {
        const CsrMatrix a = annihilation_op(b, jc);
        std::vector<cplx> d(b.dim());
        for (int i = 0; i < b.dim(); ++i) d[i] = std::sqrt(double(b.states[i][jc - 1]));
        const CsrMatrix esq = spmm(ph.e[jc - 1], CsrMatrix::diagonal(d));
        res.polar_defect =
            spadd(a, esq, {1.0, 0.0}, {-1.0, 0.0}).frob_norm() / std::max(a.frob_norm(), 1e-300);
    }

    const FieldState f1 = one_particle_state(b, cx.packet);
    res.est_err_1p =
        std::abs(std::real(phase_time_estimate(ph, b, cx.stencil, jc, f1)) - cx.packet.u0);

    double coh_gap = 0.0;
    {
        const FieldState fc = coherent_like_state(b, cx.packet, 0.8);
        res.est_err_coh =
            std::abs(std::real(phase_time_estimate(ph, b, cx.stencil, jc, fc)) - cx.packet.u0);
        const std::vector<double> nprof = number_profile(b, fc);
        const std::vector<double> mprof = mdensity_profile(b, cx.stencil, fc);
        const double route_a = mprof[jc - 1] / nprof[jc - 1];
        const double route_b = std::real(phase_time_estimate(ph, b, cx.stencil, jc, fc));
        coh_gap = std::abs(route_a - route_b);
    }
    res.mphases_route_gap = coh_gap;
    return res;
}

DopplerResult doppler_experiment(const ChecksContext& cx, double eps) {
    DopplerResult res;
    const auto& b = cx.basis;

    const FockOperator t1 = realize(qf_T_k(cx.grid, cx.consts, cx.stencil, 1), b);
    const FockOperator t2 = realize(qf_T_k(cx.grid, cx.consts, cx.stencil, 2), b);
    const FockOperator m = m_total(b, cx.stencil);

    std::vector<double> wgt(b.modes);
    for (int j = 1; j <= b.modes; ++j) wgt[j - 1] = cx.grid.omega_at(j);

    const FieldState f = one_particle_state(b, cx.packet);
    const std::vector<double> nprof = number_profile(b, f);

    std::vector<double> lhs2 = commutator_number_profile(b, cx.consts, t2.mat, f);
    for (double& x : lhs2) x *= eps;
    std::vector<double> u0n(b.modes);
    for (int j = 0; j < b.modes; ++j) u0n[j] = cx.packet.u0 * nprof[j];
    std::vector<double> pred = stencil_of_weighted(cx.stencil, wgt, u0n);
    for (double& x : pred) x *= 2.0 * eps;
    res.rel_l2 = profile_rel_l2(lhs2, pred, cx.stencil, cx.stencil.half_width);
    {
        double s = 0.0;
        const int lo = cx.stencil.interior_lo + cx.stencil.half_width;
        const int hi = cx.stencil.interior_hi - cx.stencil.half_width;
        for (int j = lo; j <= hi; ++j) s += lhs2[j - 1] * lhs2[j - 1];
        res.signal_scale = std::sqrt(s);
    }

    res.m_expect = std::real(expectation(m.mat, f.amp));

    std::vector<double> lhs1 = commutator_number_profile(b, cx.consts, t1.mat, f);
    const std::vector<double> pred1 = stencil_of_weighted(cx.stencil, wgt, nprof);
    res.boost_rel_l2 = profile_rel_l2(lhs1, pred1, cx.stencil, cx.stencil.half_width);

    {
        OnePacket centered = gaussian_packet(
            cx.grid, 0.0, cx.packet.sigma_u,
            cx.grid.omega_at(b.modes / 2), 2 * cx.stencil.half_width);
        const FieldState f0 = one_particle_state(b, centered);
        std::vector<double> l0 = commutator_number_profile(b, cx.consts, t2.mat, f0);
        double s = 0.0;
        const int lo = cx.stencil.interior_lo + cx.stencil.half_width;
        const int hi = cx.stencil.interior_hi - cx.stencil.half_width;
        for (int j = lo; j <= hi; ++j) s += eps * l0[j - 1] * eps * l0[j - 1];
        res.centered_residual = std::sqrt(s);
    }
    return res;
}

}  // namespace confock
