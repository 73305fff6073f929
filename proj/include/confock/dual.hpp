#ifndef CONFOCK_DUAL_HPP
#define CONFOCK_DUAL_HPP

#include "confock/fock.hpp"

namespace confock {

/// Two counterpropagating sectors on a product basis. Energy/momentum are
/// E = T0_phi x 1 + 1 x T0_psi and P = T0_phi x 1 - 1 x T0_psi; the time and
/// space densities combine the per-sector position densities U, V as
/// tau = (U + V)/2, xi = (V - U)/2.
struct DualSector {
    FockBasis phi;
    FockBasis psi;
    CsrMatrix energy;    // E
    CsrMatrix momentum;  // P
    CsrMatrix tau_total;
    CsrMatrix xi_total;
    CsrMatrix number_total;        // n_phi + n_psi (integer spectrum)
    CsrMatrix smoothed_half_sum;   // closed form of [E, tau]/(i hbar)
    double e_vacuum = 0.0;
};

CsrMatrix kron(const CsrMatrix& a, const CsrMatrix& b);
std::vector<cplx> kron_state(const std::vector<cplx>& a, const std::vector<cplx>& b);

DualSector build_dual_sector(const FrequencyGrid& grid, const Constants& consts,
                             const DerivativeStencil& st, int n_max,
                             std::int64_t dim_cap = 200000);

CsrMatrix tau_density(const DualSector& ds, const DerivativeStencil& st, int j);
CsrMatrix xi_density(const DualSector& ds, const DerivativeStencil& st, int j);

}  // namespace confock

#endif
