#include "confock/phase.hpp"

namespace confock {

PhaseOperatorSet phase_operators(const FockBasis& basis, PhaseConvention conv, int pb_s) {
    PhaseOperatorSet ph;
    ph.convention = conv;
    ph.modes = basis.modes;
    ph.d_nu = basis.d_nu;
    if (conv == PhaseConvention::PeggBarnett) {
        if (pb_s < 1 || pb_s > basis.n_max)
            throw std::invalid_argument("phase_operators: Pegg-Barnett needs 1 <= s <= n_max");
        ph.pb_s = pb_s;
    }

    ph.e.reserve(basis.modes);
    ph.vac_proj.reserve(basis.modes);
    std::vector<std::uint8_t> tmp;
    for (int j = 1; j <= basis.modes; ++j) {
        std::vector<std::tuple<int, int, cplx>> trips;
        std::vector<cplx> proj(basis.dim(), cplx(0.0, 0.0));
        for (int c = 0; c < basis.dim(); ++c) {
            const auto& s = basis.states[c];
            if (s[j - 1] == 0) proj[c] = 1.0;
            if (s[j - 1] > 0) {
                // |n-1><n| with unit weight
                tmp = s;
                tmp[j - 1]--;
                trips.emplace_back(basis.find(tmp), c, cplx(1.0, 0.0));
            } else if (conv == PhaseConvention::PeggBarnett) {
                // wrap term |s><0|; dropped where the cap cuts it off
                tmp = s;
                tmp[j - 1] = std::uint8_t(ph.pb_s);
                const int r = basis.find(tmp);
                if (r >= 0) trips.emplace_back(r, c, cplx(1.0, 0.0));
            }
        }
        ph.e.push_back(CsrMatrix::from_triplets(basis.dim(), basis.dim(), std::move(trips)));
        ph.vac_proj.push_back(CsrMatrix::diagonal(proj));
    }
    return ph;
}

FockOperator delta_prime(const PhaseOperatorSet& ph, const FockBasis& basis,
                         const DerivativeStencil& st, int j) {
    if (!st.interior(j)) throw std::invalid_argument("delta_prime: mode outside interiorRange");
    CsrMatrix eprime = CsrMatrix::zero(basis.dim(), basis.dim());
    for (int l = 1; l <= basis.modes; ++l) {
        const double S = st.gen(j - 1, l - 1);
        if (S == 0.0) continue;
        eprime = spadd(eprime, ph.e[l - 1], {1.0, 0.0}, {S, 0.0});
    }
    CsrMatrix out = spmm(eprime, ph.e[j - 1].dagger());
    out.scale(cplx(0.0, -1.0));
    FockOperator op;
    op.mat = std::move(out);
    op.label = "delta'[" + std::to_string(j) + "]";
    op.ref = "phase-time";
    op.hermitian_flag = false;
    return op;
}

cplx phase_time_estimate(const PhaseOperatorSet& ph, const FockBasis& basis,
                         const DerivativeStencil& st, int j, const FieldState& psi) {
    FockOperator dp = delta_prime(ph, basis, st, j);
    const cplx num = expectation(dp.mat, psi.amp);
    CsrMatrix one_minus_pi =
        spadd(CsrMatrix::identity(basis.dim()), ph.vac_proj[j - 1], {1.0, 0.0}, {-1.0, 0.0});
    const cplx den = expectation(one_minus_pi, psi.amp);
    if (std::abs(den) < 1e-300) throw std::runtime_error("phase_time_estimate: empty mode");
    return num / den;
}

}  // namespace confock
