#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <Eigen/Dense>
#include <random>

#include "confock/sparse.hpp"

using namespace confock;

namespace {

CsrMatrix random_sparse(int rows, int cols, double fill, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> val(-1.0, 1.0);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::vector<std::tuple<int, int, cplx>> trips;
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
            if (coin(rng) < fill) trips.emplace_back(r, c, cplx(val(rng), val(rng)));
    return CsrMatrix::from_triplets(rows, cols, std::move(trips));
}

Eigen::MatrixXcd dense(const CsrMatrix& m) {
    Eigen::MatrixXcd d = Eigen::MatrixXcd::Zero(m.rows, m.cols);
    for (int r = 0; r < m.rows; ++r)
        for (std::int64_t k = m.rowptr[r]; k < m.rowptr[r + 1]; ++k)
            d(r, m.colind[k]) += m.vals[k];
    return d;
}

}  // namespace

TEST_CASE("triplet assembly sums duplicates and sorts columns") {
    std::vector<std::tuple<int, int, cplx>> trips = {
        {1, 2, {1.0, 0.0}}, {0, 1, {2.0, 0.0}}, {1, 2, {0.5, -1.0}}, {1, 0, {3.0, 0.0}}};
    const CsrMatrix m = CsrMatrix::from_triplets(3, 3, std::move(trips));
    CHECK(m.nnz() == 3);
    CHECK(m.entry(1, 2) == cplx(1.5, -1.0));
    CHECK(m.entry(1, 0) == cplx(3.0, 0.0));
    CHECK(m.entry(2, 2) == cplx(0.0, 0.0));
    for (int r = 0; r < m.rows; ++r)
        for (std::int64_t k = m.rowptr[r] + 1; k < m.rowptr[r + 1]; ++k)
            CHECK(m.colind[k - 1] < m.colind[k]);
}

TEST_CASE("serial and OpenMP products agree bit for bit with dense reference") {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 6; ++trial) {
        const int n = 40 + 15 * trial;
        const CsrMatrix a = random_sparse(n, n, 0.08, rng);
        const CsrMatrix b = random_sparse(n, n, 0.08, rng);
        const CsrMatrix s = spmm_serial(a, b);
        const CsrMatrix o = spmm_omp(a, b);
        REQUIRE(s.nnz() == o.nnz());
        CHECK(spadd(s, o, {1.0, 0.0}, {-1.0, 0.0}).max_abs() == 0.0);  // identical row sums
        const Eigen::MatrixXcd ref = dense(a) * dense(b);
        CHECK((dense(s) - ref).cwiseAbs().maxCoeff() < 1e-13 * std::max(1.0, ref.cwiseAbs().maxCoeff()));
    }
}

TEST_CASE("dagger, add, trace, norms") {
    std::mt19937_64 rng(7);
    const CsrMatrix a = random_sparse(30, 30, 0.1, rng);
    const CsrMatrix b = random_sparse(30, 30, 0.1, rng);
    CHECK((dense(a.dagger()) - dense(a).adjoint()).norm() < 1e-14);
    CHECK((dense(spadd(a, b, {2.0, 0.0}, {0.0, -1.0})) -
           (2.0 * dense(a) - cplx(0.0, 1.0) * dense(b)))
              .norm() < 1e-13);
    CHECK(std::abs(a.trace() - dense(a).trace()) < 1e-13);
    CHECK(a.frob_norm() == doctest::Approx(dense(a).norm()));
}

TEST_CASE("commutator and anticommutator against dense") {
    std::mt19937_64 rng(3);
    const CsrMatrix a = random_sparse(25, 25, 0.15, rng);
    const CsrMatrix b = random_sparse(25, 25, 0.15, rng);
    const Eigen::MatrixXcd da = dense(a), db = dense(b);
    CHECK((dense(commutator(a, b)) - (da * db - db * da)).norm() < 1e-12);
    CHECK((dense(anticommutator(a, b)) - (da * db + db * da)).norm() < 1e-12);
}

TEST_CASE("apply and expectation") {
    std::mt19937_64 rng(11);
    const CsrMatrix a = random_sparse(20, 20, 0.2, rng);
    std::vector<cplx> x(20);
    std::uniform_real_distribution<double> val(-1.0, 1.0);
    for (auto& v : x) v = cplx(val(rng), val(rng));
    const std::vector<cplx> y = a.apply(x);
    Eigen::VectorXcd xe(20);
    for (int i = 0; i < 20; ++i) xe[i] = x[i];
    const Eigen::VectorXcd ye = dense(a) * xe;
    for (int i = 0; i < 20; ++i) CHECK(std::abs(y[i] - ye[i]) < 1e-13);
    const cplx e = expectation(a, x);
    CHECK(std::abs(e - xe.dot(ye)) < 1e-12);
}
