#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "confock/fock.hpp"
#include "oracle.hpp"

using namespace confock;

namespace {
const Constants kConsts{1.0};
}

TEST_CASE("basis enumeration: dimension, order, index maps") {
    const FrequencyGrid g = make_grid(16, 0.5);
    const FockBasis b = build_basis(g, 4);
    CHECK(b.dim() == 4845);  // C(20, 4)
    CHECK(b.total_occ(0) == 0);
    for (int i = 0; i < b.dim(); ++i) CHECK(b.find(b.states[i]) == i);
    for (int i = 1; i < b.dim(); ++i) CHECK(b.states[i - 1] < b.states[i]);  // lex order

    const FockBasis b0 = build_basis(g, 0);
    CHECK(b0.dim() == 1);

    CHECK_THROWS_AS(build_basis(g, 8, 1000), std::invalid_argument);  // cap exceeded

    // independent enumerator agrees
    const oracle::DenseBasis ob = oracle::dense_basis(5, 3);
    const FrequencyGrid g5 = make_grid(5, 0.5);
    CHECK(build_basis(g5, 3).dim() == int(ob.states.size()));
}

TEST_CASE("mode operators: CCR under truncation, vacuum, occupation") {
    const FrequencyGrid g = make_grid(6, 0.5);
    const FockBasis b = build_basis(g, 3);
    const CsrMatrix safe = sector_projector(b, 0, 2);
    for (int j : {1, 3})
        for (int k : {1, 4}) {
            CsrMatrix comm = commutator(annihilation_op(b, j), creation_op(b, k));
            if (j == k)
                comm = spadd(comm, CsrMatrix::identity(b.dim()), {1.0, 0.0}, {-1.0, 0.0});
            CHECK(spmm(safe, spmm(comm, safe)).frob_norm() < 1e-13);
        }
    // top sector has the documented defect: [a, a+] != 1 there
    {
        const CsrMatrix comm = commutator(annihilation_op(b, 2), creation_op(b, 2));
        const CsrMatrix diff =
            spadd(comm, CsrMatrix::identity(b.dim()), {1.0, 0.0}, {-1.0, 0.0});
        CHECK(diff.frob_norm() > 1.0);
    }

    const FieldState vac = vacuum_state(b);
    for (int j = 1; j <= 6; ++j)
        CHECK(vec_norm(annihilation_op(b, j).apply(vac.amp)) == 0.0);

    // N_j on a+_1 a+_3 |vac>
    std::vector<std::uint8_t> s(6, 0);
    s[0] = 1;
    s[2] = 1;
    const int idx = b.find(s);
    for (int j = 1; j <= 6; ++j) {
        std::vector<cplx> e(b.dim(), cplx(0.0, 0.0));
        e[idx] = 1.0;
        const cplx n = expectation(occupation_op(b, j), e);
        CHECK(std::abs(n - cplx((j == 1 || j == 3) ? 1.0 : 0.0, 0.0)) < 1e-14);
        const cplx ntot = expectation(occupation_total(b), e);
        CHECK(std::abs(ntot - cplx(2.0, 0.0)) < 1e-14);
    }
}

TEST_CASE("number densities commute and scale by the measure") {
    const FrequencyGrid g = make_grid(8, 0.5);
    const FockBasis b = build_basis(g, 3);
    for (int j : {1, 4})
        for (int k : {2, 7})
            CHECK(commutator(number_density(b, j).mat, number_density(b, k).mat).frob_norm() ==
                  0.0);
    const FockOperator nj = number_density(b, 4);
    const CsrMatrix njm = occupation_op(b, 4);
    CHECK(spadd(nj.mat, njm, {1.0, 0.0}, {-1.0 / g.d_nu, 0.0}).frob_norm() < 1e-13);
}

TEST_CASE("realize: scalars, hermiticity, vacuum eigenvalue, dense oracle") {
    const FrequencyGrid g = make_grid(4, 0.5);
    const FockBasis b = build_basis(g, 3);

    QuadraticForm sc = QuadraticForm::zero(g);
    sc.scalar = cplx(1.25, 0.0);
    const FockOperator rs = realize(sc, b);
    CHECK(spadd(rs.mat, CsrMatrix::identity(b.dim(), {1.25, 0.0}), {1.0, 0.0}, {-1.0, 0.0})
              .frob_norm() < 1e-14);

    const QuadraticForm t0 = qf_T_omega(g, kConsts, 0);
    const FockOperator r0 = realize(t0, b);
    CHECK(r0.hermitian_flag);
    CHECK(r0.hermiticity_defect() < 1e-14);
    const FieldState vac = vacuum_state(b);
    CHECK(std::abs(expectation(r0.mat, vac.amp) - qf_vacuum_expectation(t0)) < 1e-13);

    // full matrix vs the independent dense build, a few forms
    const oracle::DenseBasis ob = oracle::dense_basis(4, 3);
    for (int m : {0, 1, -2}) {
        const QuadraticForm q = qf_T_omega(g, kConsts, m);
        const oracle::Mat ref =
            oracle::realize_dense(ob, q.d_nu, q.coeff_sym, q.pair_create, q.pair_annih, q.scalar);
        const CsrMatrix got = realize(q, b).mat;
        double worst = 0.0;
        for (int r = 0; r < b.dim(); ++r)
            for (int c = 0; c < b.dim(); ++c) worst = std::max(worst, std::abs(got.entry(r, c) - ref(r, c)));
        CHECK(worst < 1e-12);
    }
}

TEST_CASE("grid mismatch is rejected") {
    const FrequencyGrid g = make_grid(8, 0.5);
    const FrequencyGrid g2 = make_grid(8, 0.25);
    const FockBasis b = build_basis(g, 2);
    CHECK_THROWS_AS(realize(qf_T_omega(g2, kConsts, 0), b), std::invalid_argument);
}

TEST_CASE("one- and two-particle packet states are normalized and sector-pure") {
    const FrequencyGrid g = make_grid(16, 0.5);
    const FockBasis b = build_basis(g, 2);
    const DerivativeStencil st = derivative_matrix(g, 2);
    const OnePacket pk = gaussian_packet(g, 1.0, 1.0, g.omega_at(8), 2 * st.half_width);
    double nrm = 0.0;
    for (int j = 0; j < 16; ++j) nrm += g.d_nu * std::norm(pk.f[j]);
    CHECK(nrm == doctest::Approx(1.0));

    const FieldState f1 = one_particle_state(b, pk);
    CHECK(f1.norm() == doctest::Approx(1.0));
    CHECK(std::abs(expectation(occupation_total(b), f1.amp) - cplx(1.0, 0.0)) < 1e-12);

    const FieldState f2 = two_particle_state(b, pk);
    CHECK(f2.norm() == doctest::Approx(1.0));
    CHECK(std::abs(expectation(occupation_total(b), f2.amp) - cplx(2.0, 0.0)) < 1e-12);

    // packets touching the edge are rejected
    CHECK_THROWS_AS(gaussian_packet(g, 1.0, 1.0, g.omega_at(1), 2), std::invalid_argument);
}

TEST_CASE("one-body density matrix matches direct expectations") {
    const FrequencyGrid g = make_grid(8, 0.5);
    const FockBasis b = build_basis(g, 2);
    const DerivativeStencil st = derivative_matrix(g, 2);
    const OnePacket pk = gaussian_packet(g, 0.7, 1.3, g.omega_at(4), 2 * st.half_width);
    const FieldState f = coherent_like_state(b, pk, 0.7);
    const Eigen::MatrixXcd rho = one_body_density(b, f);
    for (int r : {2, 4})
        for (int l : {3, 4}) {
            const CsrMatrix op = spmm(creation_op(b, r), annihilation_op(b, l));
            CHECK(std::abs(rho(r - 1, l - 1) - expectation(op, f.amp)) < 1e-12);
        }
}
