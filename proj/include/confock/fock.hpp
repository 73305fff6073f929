#ifndef CONFOCK_FOCK_HPP
#define CONFOCK_FOCK_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "confock/grid.hpp"
#include "confock/quadform.hpp"
#include "confock/sparse.hpp"

namespace confock {

enum class Sector { Phi, Psi };

/// Truncated multimode occupation basis: all (n_1..n_M) with sum n_j <= n_max,
/// enumerated in lexicographic order (vacuum first). Dimension C(M+n_max, n_max).
struct FockBasis {
    int modes = 0;
    double d_omega = 0.0;
    double d_nu = 0.0;
    int n_max = 0;
    Sector sector = Sector::Phi;
    std::vector<std::vector<std::uint8_t>> states;
    std::map<std::vector<std::uint8_t>, int> index;

    int dim() const { return int(states.size()); }
    int find(const std::vector<std::uint8_t>& s) const {
        auto it = index.find(s);
        return it == index.end() ? -1 : it->second;
    }
    int total_occ(int idx) const {
        int t = 0;
        for (auto n : states[idx]) t += n;
        return t;
    }
    bool same_lattice(const FrequencyGrid& g) const {
        return modes == g.modes && d_omega == g.d_omega;
    }
};

FockBasis build_basis(const FrequencyGrid& grid, int n_max, std::int64_t dim_cap = 200000,
                      Sector sector = Sector::Phi);

/// Sparse operator tagged with its identity and an (asserted) hermiticity flag.
struct FockOperator {
    CsrMatrix mat;
    std::string label;
    std::string ref = "plumbing";
    bool hermitian_flag = false;

    double hermiticity_defect() const {
        double n = mat.frob_norm();
        return n > 0.0 ? spadd(mat, mat.dagger(), {1.0, 0.0}, {-1.0, 0.0}).frob_norm() / n : 0.0;
    }
};

/// Amplitude vector over a FockBasis.
struct FieldState {
    std::vector<cplx> amp;
    double norm() const { return vec_norm(amp); }
    void normalize();
};

/// One-particle spectral packet: amplitudes f_j over positive modes with
/// sum_j d_nu |f_j|^2 = 1. Center/spread are derived from the amplitudes.
struct OnePacket {
    Eigen::VectorXcd f;
    double u0 = 0.0;
    double sigma_u = 0.0;
};

// mode operators (discrete, unit CCR)
CsrMatrix annihilation_op(const FockBasis& basis, int j);  // 1-based mode index
CsrMatrix creation_op(const FockBasis& basis, int j);
CsrMatrix occupation_op(const FockBasis& basis, int j);   // N_j
CsrMatrix occupation_total(const FockBasis& basis);       // sum_j N_j

// spectral number density and total number, dictionary-normalized
FockOperator number_density(const FockBasis& basis, int j);  // n_w[j] = N_j / d_nu
FockOperator number_total(const FockBasis& basis);           // sum_j N_j (integer spectrum)

FockOperator realize(const QuadraticForm& q, const FockBasis& basis);

// position-type operators built from the antisymmetric generator of the stencil
FockOperator m_density(const FockBasis& basis, const DerivativeStencil& st, int j);
FockOperator m_total(const FockBasis& basis, const DerivativeStencil& st);
/// Normal-ordered quartic :m n_w[j]: = a+_j m a_j / d_nu.
FockOperator normal_mn(const FockBasis& basis, const DerivativeStencil& st, int j);

// packets and states
OnePacket gaussian_packet(const FrequencyGrid& grid, double u0, double sigma_u, double omega_c,
                          int guard_modes, double boundary_amp_tol = 1e-4);
FieldState one_particle_state(const FockBasis& basis, const OnePacket& packet);
FieldState two_particle_state(const FockBasis& basis, const OnePacket& packet);
/// Truncated coherent-like state of the packet mode with amplitude alpha.
FieldState coherent_like_state(const FockBasis& basis, const OnePacket& packet, double alpha);
FieldState vacuum_state(const FockBasis& basis);

/// Realize a linear field object on the basis: sum_j (x_j a_j + y_j a+_j)/sqrt(d_nu).
CsrMatrix realize_field_vector(const FieldVector& v, const FockBasis& basis);

/// sum_jl H_jl a+_j a_l over discrete mode operators.
CsrMatrix one_body_op(const FockBasis& basis, const Eigen::MatrixXcd& h);

/// One-body density matrix rho_rl = <psi| a+_r a_l |psi> (discrete operators).
Eigen::MatrixXcd one_body_density(const FockBasis& basis, const FieldState& psi);

/// Projector onto the total-occupation sectors with sum n <= cap (truncation-safe block).
CsrMatrix sector_projector(const FockBasis& basis, int occ_min, int occ_max);

}  // namespace confock

#endif
