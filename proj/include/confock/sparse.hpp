#ifndef CONFOCK_SPARSE_HPP
#define CONFOCK_SPARSE_HPP

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace confock {

using cplx = std::complex<double>;

/// Compressed-sparse-row complex matrix. Column indices are sorted within each
/// row. Products accumulate row-wise, so results do not depend on the thread
/// count.
struct CsrMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<std::int64_t> rowptr;  // size rows+1
    std::vector<int> colind;
    std::vector<cplx> vals;

    static CsrMatrix zero(int r, int c);
    static CsrMatrix identity(int n, cplx scale = cplx(1.0, 0.0));
    static CsrMatrix diagonal(const std::vector<cplx>& d);
    /// Build from unsorted triplets; duplicates are summed, exact zeros kept.
    static CsrMatrix from_triplets(int r, int c,
                                   std::vector<std::tuple<int, int, cplx>>&& trips);

    std::int64_t nnz() const { return std::int64_t(vals.size()); }
    CsrMatrix dagger() const;
    double frob_norm() const;
    double max_abs() const;
    cplx trace() const;
    void scale(cplx z);
    void prune(double abs_tol);

    std::vector<cplx> apply(const std::vector<cplx>& x) const;
    cplx entry(int r, int c) const;
};

CsrMatrix spadd(const CsrMatrix& a, const CsrMatrix& b, cplx alpha = {1.0, 0.0},
                cplx beta = {1.0, 0.0});

/// Sparse product kernels. The serial variant is the reference; the OpenMP
/// variant parallelizes over rows and must agree bit-for-bit.
CsrMatrix spmm_serial(const CsrMatrix& a, const CsrMatrix& b);
CsrMatrix spmm_omp(const CsrMatrix& a, const CsrMatrix& b);
CsrMatrix spmm(const CsrMatrix& a, const CsrMatrix& b);  // dispatches to omp build

CsrMatrix commutator(const CsrMatrix& a, const CsrMatrix& b);
CsrMatrix anticommutator(const CsrMatrix& a, const CsrMatrix& b);

cplx dot(const std::vector<cplx>& x, const std::vector<cplx>& y);  // <x|y>
cplx expectation(const CsrMatrix& op, const std::vector<cplx>& psi);
double vec_norm(const std::vector<cplx>& x);

}  // namespace confock

#endif
