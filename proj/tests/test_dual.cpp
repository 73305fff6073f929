#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "confock/dual.hpp"

using namespace confock;

TEST_CASE("kron agrees with dense tensor product") {
    std::vector<std::tuple<int, int, cplx>> ta = {{0, 1, {1.0, 0.5}}, {1, 0, {2.0, 0.0}}};
    std::vector<std::tuple<int, int, cplx>> tb = {{0, 0, {1.0, 0.0}}, {1, 1, {0.0, 1.0}}};
    const CsrMatrix a = CsrMatrix::from_triplets(2, 2, std::move(ta));
    const CsrMatrix b = CsrMatrix::from_triplets(2, 2, std::move(tb));
    const CsrMatrix k = kron(a, b);
    CHECK(k.rows == 4);
    CHECK(k.entry(0, 2) == cplx(1.0, 0.5));
    CHECK(k.entry(1, 3) == cplx(1.0, 0.5) * cplx(0.0, 1.0));
    CHECK(k.entry(2, 0) == cplx(2.0, 0.0));
}

TEST_CASE("light-cone operators: vacuum energy, momentum eigenvalue, canonical pairs") {
    const FrequencyGrid g = make_grid(12, 0.4);
    const Constants consts{1.0};
    const DerivativeStencil st = derivative_matrix(g, 2);
    const DualSector ds = build_dual_sector(g, consts, st, 2);

    const FieldState vp = vacuum_state(ds.phi), vq = vacuum_state(ds.psi);
    const std::vector<cplx> vac = kron_state(vp.amp, vq.amp);
    CHECK(std::real(expectation(ds.energy, vac)) == doctest::Approx(ds.e_vacuum).epsilon(1e-12));
    CHECK(std::abs(expectation(ds.momentum, vac)) < 1e-12);

    // P on a phi-sector one-particle state gives +hbar w_j; on psi it flips sign
    const int j = 6;
    std::vector<std::uint8_t> s(12, 0);
    s[j - 1] = 1;
    std::vector<cplx> one_phi(ds.phi.dim(), cplx(0, 0)), one_psi(ds.psi.dim(), cplx(0, 0));
    one_phi[ds.phi.find(s)] = 1.0;
    one_psi[ds.psi.find(s)] = 1.0;
    CHECK(std::real(expectation(ds.momentum, kron_state(one_phi, vq.amp))) ==
          doctest::Approx(g.omega_at(j)));
    CHECK(std::real(expectation(ds.momentum, kron_state(vp.amp, one_psi))) ==
          doctest::Approx(-g.omega_at(j)));

    // closed-form commutators: [E, tau] = i hbar (smoothed half-sum), [P, xi] = -i hbar (same)
    {
        CsrMatrix rhs = ds.smoothed_half_sum;
        rhs.scale(cplx(0.0, 1.0));
        CHECK(spadd(commutator(ds.energy, ds.tau_total), rhs, {1.0, 0.0}, {-1.0, 0.0})
                  .frob_norm() < 1e-12 * rhs.frob_norm());
        CsrMatrix rhs2 = ds.smoothed_half_sum;
        rhs2.scale(cplx(0.0, -1.0));
        CHECK(spadd(commutator(ds.momentum, ds.xi_total), rhs2, {1.0, 0.0}, {-1.0, 0.0})
                  .frob_norm() < 1e-12 * rhs2.frob_norm());
    }

    // canonical value on the doubly excited packet sector
    const OnePacket pk = gaussian_packet(g, 0.9, 1.1, g.omega_at(6), 2 * st.half_width);
    const FieldState fp = one_particle_state(ds.phi, pk);
    const FieldState fq = one_particle_state(ds.psi, pk);
    const std::vector<cplx> prod = kron_state(fp.amp, fq.amp);
    CHECK(std::real(expectation(commutator(ds.energy, ds.tau_total), prod) / cplx(0.0, 1.0)) ==
          doctest::Approx(1.0).epsilon(0.08));
    CHECK(std::real(expectation(commutator(ds.momentum, ds.xi_total), prod) / cplx(0.0, -1.0)) ==
          doctest::Approx(1.0).epsilon(0.08));

    // hermiticity across the family
    for (const CsrMatrix* op : {&ds.energy, &ds.momentum, &ds.tau_total, &ds.xi_total})
        CHECK(spadd(*op, op->dagger(), {1.0, 0.0}, {-1.0, 0.0}).frob_norm() <
              1e-12 * op->frob_norm());
    const CsrMatrix td = tau_density(ds, st, 6);
    CHECK(spadd(td, td.dagger(), {1.0, 0.0}, {-1.0, 0.0}).frob_norm() < 1e-12 * td.frob_norm());
}
