#ifndef CONFOCK_PHASE_HPP
#define CONFOCK_PHASE_HPP

#include "confock/fock.hpp"

namespace confock {

enum class PhaseConvention { SusskindGlogower, PeggBarnett };

/// Exponential-phase operators per mode, a_j = e_j sqrt(N_j) exactly.
///
/// Susskind-Glogower: e = sum_n |n><n+1|, so e e+ = 1 and e+ e = 1 - Pi_0
/// (alpha = 1). Pegg-Barnett(s): the cyclic unitary on the (s+1)-dim mode
/// space (alpha = 0); on the total-occupation-truncated basis its wrap term
/// is exact only where sum_{k != j} n_k <= n_max - s.
struct PhaseOperatorSet {
    PhaseConvention convention = PhaseConvention::SusskindGlogower;
    int pb_s = 0;  // Pegg-Barnett cutoff (per-mode dimension s+1)
    int modes = 0;
    double d_nu = 0.0;
    std::vector<CsrMatrix> e;         // lowering-phase operator per mode
    std::vector<CsrMatrix> vac_proj;  // Pi_j, projector onto n_j = 0

    double alpha() const { return convention == PhaseConvention::SusskindGlogower ? 1.0 : 0.0; }
};

PhaseOperatorSet phase_operators(const FockBasis& basis, PhaseConvention conv, int pb_s = 0);

/// delta'_j = -i (sum_l S_jl e_l) e+_j : stencil frequency derivative of the
/// phase family. Hermitian only up to O(d_omega^p) away from the per-mode
/// vacuum; the defect is reported, not asserted.
FockOperator delta_prime(const PhaseOperatorSet& ph, const FockBasis& basis,
                         const DerivativeStencil& st, int j);

/// Conditioned phase-time estimate <psi|delta'_j|psi> / <psi|1 - Pi_j|psi>.
cplx phase_time_estimate(const PhaseOperatorSet& ph, const FockBasis& basis,
                         const DerivativeStencil& st, int j, const FieldState& psi);

}  // namespace confock

#endif
