#ifndef CONFOCK_CHECKS_HPP
#define CONFOCK_CHECKS_HPP

#include <optional>
#include <string>

#include "confock/fock.hpp"
#include "confock/phase.hpp"

namespace confock {

/// One verification record, as emitted in the JSON report.
struct CheckRecord {
    std::string check_id;
    std::string ref = "plumbing";
    std::vector<double> computed;
    std::vector<double> expected;
    double abs_err = 0.0;
    double rel_err = 0.0;
    std::optional<double> slope;
    bool pass = false;
    double runtime_ms = 0.0;
};

CheckRecord make_record(std::string id, std::string ref, double computed, double expected,
                        double tol_rel, double floor = 1e-300);
CheckRecord bound_record(std::string id, std::string ref, double value, double bound);

/// Everything the per-configuration checks need.
struct ChecksContext {
    Constants consts;
    FrequencyGrid grid;
    DerivativeStencil stencil;
    FockBasis basis;
    OnePacket packet;
};

ChecksContext make_context(int modes, double d_omega, int n_max, int order, double u0,
                           double sigma_u, double omega_c, std::int64_t dim_cap = 200000);

// spectral profiles on a state
std::vector<double> number_profile(const FockBasis& basis, const FieldState& psi);  // <n_w[j]>
std::vector<double> mdensity_profile(const FockBasis& basis, const DerivativeStencil& st,
                                     const FieldState& psi);  // <m_w[j]>

/// (1/i hbar) <psi|[op, n_w[j]]|psi> for all j, given hermitian op.
std::vector<double> commutator_number_profile(const FockBasis& basis, const Constants& consts,
                                              const CsrMatrix& op, const FieldState& psi);

/// Relative L2 distance of two profiles over the interior modes.
double profile_rel_l2(const std::vector<double>& lhs, const std::vector<double>& rhs,
                      const DerivativeStencil& st, int margin);

struct RedistributionResult {
    double err_boost = 0.0;         // k=1 vs d/dw (w n_w)
    double err_accel = 0.0;         // k=2 vs 2 d/dw (w m_w)
    double translation_norm = 0.0;  // ||[T_0, n_w]||, exactly zero
};
RedistributionResult number_redistribution_check(const ChecksContext& cx, const FieldState& psi);

struct CanonicalResult {
    double closed_form_defect = 0.0;   // [T_0,m] vs CCR closed form, relative
    double literal_residual = 0.0;     // ||([T_0,m] - i hbar n)|f>|| / ||i hbar n|f>||
    double density_conv_err = 0.0;     // <[T_0,m_w[j]]>/i hbar vs <n_w[j]>, rel L2
    double sector_canonical_err = 0.0;  // |<f|[T_0,m]|f>/(i hbar) - 1| on n=1 packet
};
CanonicalResult canonical_checks(const ChecksContext& cx);

struct MnCommutatorResult {
    double exact_defect = 0.0;     // closed discrete form vs sparse commutator
    double disjoint_norm = 0.0;    // ||[m_w[j], n_w[k]]|| for |j-k| > stencil width
    double continuum_err = 0.0;    // smooth-packet pairing vs -i n_w phi'
};
MnCommutatorResult mn_commutator_check(const ChecksContext& cx, const FieldState& psi);

struct NewtonWignerResult {
    double amplitude_defect = 0.0;     // m|f> vs -i (S f) amplitudes
    double halfanticomm_defect = 0.0;  // 1/2{m,n_w} - m_w - :m n_w: operator norm, relative
    double quartic_on_one = 0.0;       // ||:m n_w: P_{n<=1}||
    double sector_reduction = 0.0;     // P1 (1/2{m,n_w} - m_w) P1 norm
    double sandwich_defect = 0.0;      // naive sqrt(n) m sqrt(n) vs m_w on the sector (informational)
    double urep_multiplier_defect = 0.0;  // DFT of -i(Sf) vs sin-multiplier, exact
    double urep_alias_err = 0.0;          // vs u f(u), bounded by documented aliasing bound
    double urep_alias_bound = 0.0;
};
NewtonWignerResult newton_wigner_checks(const ChecksContext& cx);

struct PhaseRouteResult {
    double sg_ee_dagger = 0.0;      // ||e e+ - 1|| on the safe block
    double sg_edagger_e = 0.0;      // ||e+ e - (1 - Pi)||
    double pb_unitarity = 0.0;      // on the wrap-safe block
    double cross_mode_comm = 0.0;   // ||[e_j, e_k]||
    double polar_defect = 0.0;      // a = e sqrt(N) exact
    double est_err_1p = 0.0;        // phase-time estimate vs u0, 1-particle packet
    double est_err_coh = 0.0;       // same on coherent-like state
    double mphases_route_gap = 0.0; // (maaC)-route position vs phase-route position
};
PhaseRouteResult phase_route_checks(const ChecksContext& cx, PhaseConvention conv, int pb_s);

struct DopplerResult {
    double rel_l2 = 0.0;        // epsilon [T_2, n_w] vs Doppler prediction
    double m_expect = 0.0;      // <m> on the packet
    double boost_rel_l2 = 0.0;  // same experiment against [T_1, n_w]
    double centered_residual = 0.0;  // u0 = 0 packet, absolute scale of the T_2 shift
    double signal_scale = 0.0;
};
DopplerResult doppler_experiment(const ChecksContext& cx, double eps);

}  // namespace confock

#endif
