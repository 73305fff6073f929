#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "confock/quadform.hpp"
#include "oracle.hpp"

using namespace confock;

namespace {
const Constants kConsts{1.0};

oracle::Mat realize_oracle(const oracle::DenseBasis& b, const QuadraticForm& q) {
    return oracle::realize_dense(b, q.d_nu, q.coeff_sym, q.pair_create, q.pair_annih, q.scalar);
}
}  // namespace

TEST_CASE("T[0] is diagonal with measure-weighted coefficients") {
    const FrequencyGrid g = make_grid(8, 0.5);
    const QuadraticForm t0 = qf_T_omega(g, kConsts, 0);
    for (int j = 1; j <= 8; ++j)
        CHECK(std::abs(t0.coeff_sym(j - 1, j - 1) - cplx(g.d_nu * g.omega_at(j), 0.0)) < 1e-15);
    CHECK(qf_pair_norm(t0) == 0.0);
    CHECK(t0.pair_annih.norm() == 0.0);
    CHECK(t0.hermiticity_defect() < 1e-15);
}

TEST_CASE("pair support of T[m] sits on frequency pairs summing to |w_m|") {
    const FrequencyGrid g = make_grid(6, 0.5);
    const QuadraticForm tm = qf_T_omega(g, kConsts, -3);
    for (int i = 1; i <= 6; ++i)
        for (int j = 1; j <= 6; ++j) {
            const bool on = (i + j == 3);
            if (on)
                CHECK(std::abs(tm.pair_create(i - 1, j - 1)) > 1e-12);
            else
                CHECK(std::abs(tm.pair_create(i - 1, j - 1)) == 0.0);
        }
    // positive m puts the same support in the annihilation block instead
    const QuadraticForm tp = qf_T_omega(g, kConsts, 3);
    CHECK(qf_pair_norm(tp) == 0.0);
    CHECK(tp.pair_annih.norm() > 1e-12);
    // adjoint pairing T[-m] = T[m]^+
    const QuadraticForm adj = tp.adjoint();
    CHECK((adj.coeff_sym - tm.coeff_sym).norm() < 1e-14);
    CHECK((adj.pair_create - tm.pair_create).norm() < 1e-14);
}

TEST_CASE("vacuum functional is half-trace plus scalar") {
    const FrequencyGrid g = make_grid(4, 0.5);
    QuadraticForm q = QuadraticForm::zero(g);
    q.coeff_sym = Eigen::MatrixXcd::Zero(4, 4);
    for (int j = 0; j < 4; ++j) q.coeff_sym(j, j) = 2.0 * (j + 1);
    CHECK(std::abs(qf_vacuum_expectation(q) - cplx(10.0, 0.0)) < 1e-15);
    q.scalar = cplx(0.5, 0.0);
    CHECK(std::abs(qf_vacuum_expectation(q) - cplx(10.5, 0.0)) < 1e-15);
}

TEST_CASE("commutator matches dense brute force, including the scalar part") {
    const FrequencyGrid g = make_grid(4, 0.5);
    const oracle::DenseBasis b = oracle::dense_basis(4, 4);
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    for (int trial = 0; trial < 8; ++trial) {
        auto rand_form = [&] {
            QuadraticForm q = QuadraticForm::zero(g);
            for (int i = 0; i < 4; ++i)
                for (int j = 0; j < 4; ++j) {
                    q.coeff_sym(i, j) = cplx(dist(rng), dist(rng));
                    q.pair_create(i, j) = cplx(dist(rng), dist(rng));
                    q.pair_annih(i, j) = cplx(dist(rng), dist(rng));
                }
            q.pair_create = ((q.pair_create + q.pair_create.transpose()) / 2.0).eval();
            q.pair_annih = ((q.pair_annih + q.pair_annih.transpose()) / 2.0).eval();
            q.scalar = cplx(dist(rng), 0.0);
            return q;
        };
        const QuadraticForm q1 = rand_form();
        const QuadraticForm q2 = rand_form();
        const oracle::Mat lhs =
            realize_oracle(b, q1) * realize_oracle(b, q2) - realize_oracle(b, q2) * realize_oracle(b, q1);
        const oracle::Mat rhs = realize_oracle(b, qf_commutator(q1, q2));
        // exact on the truncation-safe block (two quanta of headroom)
        for (int r = 0; r < int(b.states.size()); ++r)
            for (int c = 0; c < int(b.states.size()); ++c) {
                int tr = 0, tc = 0;
                for (int v : b.states[r]) tr += v;
                for (int v : b.states[c]) tc += v;
                if (tr <= b.n_max - 2 && tc <= b.n_max - 2)
                    CHECK(std::abs(lhs(r, c) - rhs(r, c)) < 1e-10 * std::max(1.0, rhs.cwiseAbs().maxCoeff()));
            }
    }
}

TEST_CASE("number form against pair form reproduces the ladder commutator") {
    // [a+a, aa] = -2 aa; with d_omega = 2pi the measure weight is 1 and the
    // stored coefficients match the bare ladder algebra
    const FrequencyGrid g = make_grid(4, 2.0 * M_PI);
    CHECK(g.d_nu == doctest::Approx(1.0));
    QuadraticForm number = QuadraticForm::zero(g);
    number.coeff_sym(0, 0) = 1.0;   // sym(a+_1 a_1)
    number.scalar = cplx(-0.5, 0);  // vacuum functional zero: a plain number operator
    QuadraticForm pair = QuadraticForm::zero(g);
    pair.pair_annih(0, 0) = 1.0;  // a_1 a_1
    const QuadraticForm c = qf_commutator(number, pair);
    CHECK(std::abs(c.pair_annih(0, 0) - cplx(-2.0, 0.0)) < 1e-14);
    CHECK(c.pair_create.norm() == 0.0);
    CHECK(c.coeff_sym.norm() == 0.0);
    CHECK(std::abs(c.scalar) < 1e-14);
    // self-commutator vanishes
    const QuadraticForm self = qf_commutator(pair, pair);
    CHECK(self.coeff_sym.norm() + self.pair_create.norm() + self.pair_annih.norm() +
              std::abs(self.scalar) ==
          0.0);
}

TEST_CASE("central term of the generator algebra is exact at finite spacing") {
    const FrequencyGrid g = make_grid(24, 0.25);
    for (int m : {1, 2, 5, 11, 20}) {
        const cplx v = qf_vacuum_expectation(
            qf_commutator(qf_T_omega(g, kConsts, m), qf_T_omega(g, kConsts, -m)));
        const double expect = g.d_omega * g.d_omega * (double(m) * m * m - m) / 12.0;
        CHECK(std::abs(v - cplx(expect, 0.0)) < 1e-12 * std::max(1.0, expect));
    }
    // ratio form approaches 1/12 for interior m
    const int m = 16;
    const cplx v = qf_vacuum_expectation(
        qf_commutator(qf_T_omega(g, kConsts, m), qf_T_omega(g, kConsts, -m)));
    const double w = g.omega_at(m);
    CHECK(g.d_omega * std::real(v) / (w * w * w) ==
          doctest::Approx(1.0 / 12.0).epsilon(1.0 / (m * m) + 1e-9));
}

TEST_CASE("generator closure and hermiticity") {
    const FrequencyGrid g = make_grid(20, 0.4);
    const DerivativeStencil st = derivative_matrix(g, 2);
    std::vector<QuadraticForm> tk;
    for (int k = 0; k <= 3; ++k) tk.push_back(qf_T_k(g, kConsts, st, k));

    for (int k = 0; k <= 3; ++k) CHECK(tk[k].hermiticity_defect() < 1e-13);
    CHECK((tk[0].coeff_sym - qf_T_omega(g, kConsts, 0).coeff_sym).norm() == 0.0);

    // [T_1, T_2] = i hbar T_2 away from clipped entries
    const QuadraticForm c = qf_commutator(tk[1], tk[2]);
    QuadraticForm rhs = tk[2];
    rhs *= cplx(0.0, 1.0);
    const int margin = 5;
    double err = 0.0, scale = 0.0;
    for (int i = margin; i < g.modes - margin; ++i)
        for (int j = margin; j < g.modes - margin; ++j) {
            err = std::max({err, std::abs(c.coeff_sym(i, j) - rhs.coeff_sym(i, j)),
                            std::abs(c.pair_create(i, j) - rhs.pair_create(i, j)),
                            std::abs(c.pair_annih(i, j) - rhs.pair_annih(i, j))});
            scale = std::max(scale, std::abs(rhs.coeff_sym(i, j)));
        }
    CHECK(err < 1e-12 * scale);

    // deviations appear only near the clipped edges
    double edge_dev = 0.0;
    for (int i = 0; i < g.modes; ++i)
        for (int j = 0; j < g.modes; ++j)
            if (std::abs(c.coeff_sym(i, j) - rhs.coeff_sym(i, j)) > 1e-10 * scale)
                edge_dev = std::max(
                    edge_dev, double(std::min({i + 1, j + 1, g.modes - i, g.modes - j})));
    CHECK(edge_dev <= margin);
}

TEST_CASE("pair norm dichotomy at the generator level") {
    const FrequencyGrid g = make_grid(16, 0.5);
    const DerivativeStencil st = derivative_matrix(g, 2);
    for (int k = 0; k <= 2; ++k) {
        const QuadraticForm t = qf_T_k(g, kConsts, st, k);
        CHECK(qf_pair_norm(t) <= 1e-12 * t.coeff_sym.norm());
    }
    const QuadraticForm t3 = qf_T_k(g, kConsts, st, 3);
    CHECK(qf_pair_norm(t3) > 1e-6 * t3.coeff_sym.norm());
}

TEST_CASE("field action: energy weights modes, general m shifts them") {
    const FrequencyGrid g = make_grid(8, 0.5);
    FieldVector v = FieldVector::zero(8);
    v.a_part[2] = 1.0;  // a at mode 3
    const FieldVector r = qf_act_on_field(qf_T_omega(g, kConsts, 0), v);
    CHECK(std::abs(r.a_part[2] + g.omega_at(3)) < 1e-14);
    CHECK(r.adag_part.norm() == 0.0);

    // scalars commute
    QuadraticForm sc = QuadraticForm::zero(g);
    sc.scalar = cplx(2.5, -0.5);
    const FieldVector rz = qf_act_on_field(sc, v);
    CHECK(rz.a_part.norm() + rz.adag_part.norm() == 0.0);

    // against the dense oracle: [T[m], phi_j] realized on a small basis
    const oracle::DenseBasis b = oracle::dense_basis(4, 3);
    const FrequencyGrid g4 = make_grid(4, 0.5);
    const QuadraticForm tm = qf_T_omega(g4, kConsts, 1);
    FieldVector w = FieldVector::zero(4);
    w.a_part[1] = cplx(0.3, 0.1);
    w.adag_part[2] = cplx(-0.2, 0.4);
    const FieldVector rw = qf_act_on_field(tm, w);
    const oracle::Mat tm_d = realize_oracle(b, tm);
    auto field_dense = [&](const FieldVector& fv) {
        oracle::Mat out = oracle::Mat::Zero(b.states.size(), b.states.size());
        const double s = 1.0 / std::sqrt(g4.d_nu);
        for (int j = 1; j <= 4; ++j) {
            const oracle::Mat a = oracle::lowering(b, j);
            out += fv.a_part[j - 1] * s * a + fv.adag_part[j - 1] * s * a.adjoint();
        }
        return out;
    };
    const oracle::Mat lhs = tm_d * field_dense(w) - field_dense(w) * tm_d;
    const oracle::Mat rhs = field_dense(rw);
    // exact on the one-quantum headroom block
    for (int r2 = 0; r2 < int(b.states.size()); ++r2)
        for (int c2 = 0; c2 < int(b.states.size()); ++c2) {
            int tr = 0, tc = 0;
            for (int x : b.states[r2]) tr += x;
            for (int x : b.states[c2]) tc += x;
            if (tr <= b.n_max - 1 && tc <= b.n_max - 1)
                CHECK(std::abs(lhs(r2, c2) - rhs(r2, c2)) <
                      1e-11 * std::max(1.0, rhs.cwiseAbs().maxCoeff()));
        }
}

TEST_CASE("grid mismatch and range preconditions are rejected") {
    const FrequencyGrid g1 = make_grid(8, 0.5);
    const FrequencyGrid g2 = make_grid(8, 0.25);
    CHECK_THROWS_AS(qf_commutator(qf_T_omega(g1, kConsts, 0), qf_T_omega(g2, kConsts, 0)),
                    std::invalid_argument);
    const DerivativeStencil st = derivative_matrix(g1, 2);
    CHECK_THROWS_AS(qf_T_k(g1, kConsts, st, 5), std::invalid_argument);
}
