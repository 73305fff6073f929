#include "confock/dual.hpp"

namespace confock {

CsrMatrix kron(const CsrMatrix& a, const CsrMatrix& b) {
    CsrMatrix m = CsrMatrix::zero(a.rows * b.rows, a.cols * b.cols);
    m.colind.reserve(size_t(a.nnz()) * size_t(b.nnz()));
    m.vals.reserve(size_t(a.nnz()) * size_t(b.nnz()));
    for (int ra = 0; ra < a.rows; ++ra)
        for (int rb = 0; rb < b.rows; ++rb) {
            const int row = ra * b.rows + rb;
            for (std::int64_t ka = a.rowptr[ra]; ka < a.rowptr[ra + 1]; ++ka)
                for (std::int64_t kb = b.rowptr[rb]; kb < b.rowptr[rb + 1]; ++kb) {
                    m.colind.push_back(a.colind[ka] * b.cols + b.colind[kb]);
                    m.vals.push_back(a.vals[ka] * b.vals[kb]);
                }
            m.rowptr[row + 1] = std::int64_t(m.vals.size());
        }
    return m;
}

std::vector<cplx> kron_state(const std::vector<cplx>& a, const std::vector<cplx>& b) {
    std::vector<cplx> out(a.size() * b.size());
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) out[i * b.size() + j] = a[i] * b[j];
    return out;
}

DualSector build_dual_sector(const FrequencyGrid& grid, const Constants& consts,
                             const DerivativeStencil& st, int n_max, std::int64_t dim_cap) {
    DualSector ds;
    ds.phi = build_basis(grid, n_max, dim_cap, Sector::Phi);
    ds.psi = build_basis(grid, n_max, dim_cap, Sector::Psi);
    const std::int64_t dim = std::int64_t(ds.phi.dim()) * ds.psi.dim();
    if (dim > dim_cap) throw std::invalid_argument("build_dual_sector: dimension cap exceeded");

    const FockOperator t0p = realize(qf_T_omega(grid, consts, 0), ds.phi);
    const FockOperator t0q = realize(qf_T_omega(grid, consts, 0), ds.psi);
    const CsrMatrix ip = CsrMatrix::identity(ds.phi.dim());
    const CsrMatrix iq = CsrMatrix::identity(ds.psi.dim());

    ds.energy = spadd(kron(t0p.mat, iq), kron(ip, t0q.mat));
    ds.momentum = spadd(kron(t0p.mat, iq), kron(ip, t0q.mat), {1.0, 0.0}, {-1.0, 0.0});

    const FockOperator mp = m_total(ds.phi, st);
    const FockOperator mq = m_total(ds.psi, st);
    ds.tau_total = spadd(kron(mp.mat, iq), kron(ip, mq.mat), {0.5, 0.0}, {0.5, 0.0});
    ds.xi_total = spadd(kron(ip, mq.mat), kron(mp.mat, iq), {0.5, 0.0}, {-0.5, 0.0});

    ds.number_total =
        spadd(kron(occupation_total(ds.phi), iq), kron(ip, occupation_total(ds.psi)));

    // [E, tau]/(i hbar) = (smoothed n_phi + smoothed n_psi)/2, CCR-exact
    Eigen::MatrixXcd h(grid.modes, grid.modes);
    for (int j = 0; j < grid.modes; ++j)
        for (int l = 0; l < grid.modes; ++l)
            h(j, l) = -(grid.omega_at(j + 1) - grid.omega_at(l + 1)) * st.gen(j, l);
    const CsrMatrix half_p = one_body_op(ds.phi, 0.5 * h);
    const CsrMatrix half_q = one_body_op(ds.psi, 0.5 * h);
    ds.smoothed_half_sum = spadd(kron(half_p, iq), kron(ip, half_q));

    ds.e_vacuum = std::real(qf_vacuum_expectation(qf_T_omega(grid, consts, 0))) * 2.0;
    return ds;
}

CsrMatrix tau_density(const DualSector& ds, const DerivativeStencil& st, int j) {
    const CsrMatrix u = kron(m_density(ds.phi, st, j).mat, CsrMatrix::identity(ds.psi.dim()));
    const CsrMatrix v = kron(CsrMatrix::identity(ds.phi.dim()), m_density(ds.psi, st, j).mat);
    return spadd(u, v, {0.5, 0.0}, {0.5, 0.0});
}

CsrMatrix xi_density(const DualSector& ds, const DerivativeStencil& st, int j) {
    const CsrMatrix u = kron(m_density(ds.phi, st, j).mat, CsrMatrix::identity(ds.psi.dim()));
    const CsrMatrix v = kron(CsrMatrix::identity(ds.phi.dim()), m_density(ds.psi, st, j).mat);
    return spadd(v, u, {0.5, 0.0}, {-0.5, 0.0});
}

}  // namespace confock
