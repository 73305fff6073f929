#include "confock/sparse.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <tuple>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace confock {

CsrMatrix CsrMatrix::zero(int r, int c) {
    CsrMatrix m;
    m.rows = r;
    m.cols = c;
    m.rowptr.assign(r + 1, 0);
    return m;
}

CsrMatrix CsrMatrix::identity(int n, cplx scale) {
    CsrMatrix m;
    m.rows = m.cols = n;
    m.rowptr.resize(n + 1);
    m.colind.resize(n);
    m.vals.resize(n);
    for (int i = 0; i < n; ++i) {
        m.rowptr[i] = i;
        m.colind[i] = i;
        m.vals[i] = scale;
    }
    m.rowptr[n] = n;
    return m;
}

CsrMatrix CsrMatrix::diagonal(const std::vector<cplx>& d) {
    CsrMatrix m = identity(int(d.size()));
    m.vals = d;
    return m;
}

CsrMatrix CsrMatrix::from_triplets(int r, int c,
                                   std::vector<std::tuple<int, int, cplx>>&& trips) {
    std::sort(trips.begin(), trips.end(), [](const auto& x, const auto& y) {
        if (std::get<0>(x) != std::get<0>(y)) return std::get<0>(x) < std::get<0>(y);
        return std::get<1>(x) < std::get<1>(y);
    });
    CsrMatrix m;
    m.rows = r;
    m.cols = c;
    m.rowptr.assign(r + 1, 0);
    for (size_t i = 0; i < trips.size();) {
        size_t j = i + 1;
        cplx sum = std::get<2>(trips[i]);
        while (j < trips.size() && std::get<0>(trips[j]) == std::get<0>(trips[i]) &&
               std::get<1>(trips[j]) == std::get<1>(trips[i])) {
            sum += std::get<2>(trips[j]);
            ++j;
        }
        m.colind.push_back(std::get<1>(trips[i]));
        m.vals.push_back(sum);
        m.rowptr[std::get<0>(trips[i]) + 1]++;
        i = j;
    }
    for (int i = 0; i < r; ++i) m.rowptr[i + 1] += m.rowptr[i];
    return m;
}

CsrMatrix CsrMatrix::dagger() const {
    CsrMatrix t;
    t.rows = cols;
    t.cols = rows;
    t.rowptr.assign(cols + 1, 0);
    for (int c : colind) t.rowptr[c + 1]++;
    for (int i = 0; i < cols; ++i) t.rowptr[i + 1] += t.rowptr[i];
    t.colind.resize(vals.size());
    t.vals.resize(vals.size());
    std::vector<std::int64_t> next(t.rowptr.begin(), t.rowptr.end() - 1);
    for (int r = 0; r < rows; ++r)
        for (std::int64_t k = rowptr[r]; k < rowptr[r + 1]; ++k) {
            std::int64_t pos = next[colind[k]]++;
            t.colind[pos] = r;
            t.vals[pos] = std::conj(vals[k]);
        }
    return t;
}

double CsrMatrix::frob_norm() const {
    double s = 0.0;
    for (const cplx& v : vals) s += std::norm(v);
    return std::sqrt(s);
}

double CsrMatrix::max_abs() const {
    double s = 0.0;
    for (const cplx& v : vals) s = std::max(s, std::abs(v));
    return s;
}

cplx CsrMatrix::trace() const {
    cplx s = 0.0;
    for (int r = 0; r < rows; ++r)
        for (std::int64_t k = rowptr[r]; k < rowptr[r + 1]; ++k)
            if (colind[k] == r) s += vals[k];
    return s;
}

void CsrMatrix::scale(cplx z) {
    for (cplx& v : vals) v *= z;
}

void CsrMatrix::prune(double abs_tol) {
    CsrMatrix out = zero(rows, cols);
    out.colind.reserve(colind.size());
    out.vals.reserve(vals.size());
    for (int r = 0; r < rows; ++r) {
        for (std::int64_t k = rowptr[r]; k < rowptr[r + 1]; ++k)
            if (std::abs(vals[k]) > abs_tol) {
                out.colind.push_back(colind[k]);
                out.vals.push_back(vals[k]);
            }
        out.rowptr[r + 1] = std::int64_t(out.vals.size());
    }
    *this = std::move(out);
}

std::vector<cplx> CsrMatrix::apply(const std::vector<cplx>& x) const {
    if (int(x.size()) != cols) throw std::invalid_argument("CsrMatrix::apply: size mismatch");
    std::vector<cplx> y(rows, cplx(0.0, 0.0));
#pragma omp parallel for schedule(static)
    for (int r = 0; r < rows; ++r) {
        cplx s = 0.0;
        for (std::int64_t k = rowptr[r]; k < rowptr[r + 1]; ++k) s += vals[k] * x[colind[k]];
        y[r] = s;
    }
    return y;
}

cplx CsrMatrix::entry(int r, int c) const {
    for (std::int64_t k = rowptr[r]; k < rowptr[r + 1]; ++k)
        if (colind[k] == c) return vals[k];
    return cplx(0.0, 0.0);
}

CsrMatrix spadd(const CsrMatrix& a, const CsrMatrix& b, cplx alpha, cplx beta) {
    if (a.rows != b.rows || a.cols != b.cols)
        throw std::invalid_argument("spadd: shape mismatch");
    CsrMatrix m = CsrMatrix::zero(a.rows, a.cols);
    m.colind.reserve(a.colind.size() + b.colind.size());
    m.vals.reserve(a.vals.size() + b.vals.size());
    for (int r = 0; r < a.rows; ++r) {
        std::int64_t i = a.rowptr[r], j = b.rowptr[r];
        while (i < a.rowptr[r + 1] || j < b.rowptr[r + 1]) {
            int ca = i < a.rowptr[r + 1] ? a.colind[i] : a.cols;
            int cb = j < b.rowptr[r + 1] ? b.colind[j] : b.cols;
            if (ca < cb) {
                m.colind.push_back(ca);
                m.vals.push_back(alpha * a.vals[i++]);
            } else if (cb < ca) {
                m.colind.push_back(cb);
                m.vals.push_back(beta * b.vals[j++]);
            } else {
                m.colind.push_back(ca);
                m.vals.push_back(alpha * a.vals[i++] + beta * b.vals[j++]);
            }
        }
        m.rowptr[r + 1] = std::int64_t(m.vals.size());
    }
    return m;
}

namespace {

// one row of A*B into a scratch accumulator; returns touched columns sorted
inline void product_row(const CsrMatrix& a, const CsrMatrix& b, int r,
                        std::vector<cplx>& acc, std::vector<int>& touched) {
    touched.clear();
    for (std::int64_t k = a.rowptr[r]; k < a.rowptr[r + 1]; ++k) {
        const cplx av = a.vals[k];
        const int arc = a.colind[k];
        for (std::int64_t l = b.rowptr[arc]; l < b.rowptr[arc + 1]; ++l) {
            const int c = b.colind[l];
            if (acc[c] == cplx(0.0, 0.0)) touched.push_back(c);
            acc[c] += av * b.vals[l];
        }
    }
    std::sort(touched.begin(), touched.end());
}

}  // namespace

CsrMatrix spmm_serial(const CsrMatrix& a, const CsrMatrix& b) {
    if (a.cols != b.rows) throw std::invalid_argument("spmm: shape mismatch");
    CsrMatrix m = CsrMatrix::zero(a.rows, b.cols);
    std::vector<cplx> acc(b.cols, cplx(0.0, 0.0));
    std::vector<int> touched;
    for (int r = 0; r < a.rows; ++r) {
        product_row(a, b, r, acc, touched);
        for (int c : touched) {
            m.colind.push_back(c);
            m.vals.push_back(acc[c]);
            acc[c] = cplx(0.0, 0.0);
        }
        m.rowptr[r + 1] = std::int64_t(m.vals.size());
    }
    return m;
}

CsrMatrix spmm_omp(const CsrMatrix& a, const CsrMatrix& b) {
    if (a.cols != b.rows) throw std::invalid_argument("spmm: shape mismatch");
    CsrMatrix m = CsrMatrix::zero(a.rows, b.cols);

    // pass 1: per-row structure and values into thread-local buffers
    std::vector<std::vector<int>> row_cols(a.rows);
    std::vector<std::vector<cplx>> row_vals(a.rows);
#pragma omp parallel
    {
        std::vector<cplx> acc(b.cols, cplx(0.0, 0.0));
        std::vector<int> touched;
#pragma omp for schedule(dynamic, 16)
        for (int r = 0; r < a.rows; ++r) {
            product_row(a, b, r, acc, touched);
            row_cols[r].assign(touched.begin(), touched.end());
            row_vals[r].resize(touched.size());
            for (size_t i = 0; i < touched.size(); ++i) {
                row_vals[r][i] = acc[touched[i]];
                acc[touched[i]] = cplx(0.0, 0.0);
            }
        }
    }
    for (int r = 0; r < a.rows; ++r) m.rowptr[r + 1] = m.rowptr[r] + std::int64_t(row_cols[r].size());
    m.colind.resize(m.rowptr[a.rows]);
    m.vals.resize(m.rowptr[a.rows]);
#pragma omp parallel for schedule(static)
    for (int r = 0; r < a.rows; ++r) {
        std::copy(row_cols[r].begin(), row_cols[r].end(), m.colind.begin() + m.rowptr[r]);
        std::copy(row_vals[r].begin(), row_vals[r].end(), m.vals.begin() + m.rowptr[r]);
    }
    return m;
}

CsrMatrix spmm(const CsrMatrix& a, const CsrMatrix& b) {
#ifdef _OPENMP
    return spmm_omp(a, b);
#else
    return spmm_serial(a, b);
#endif
}

CsrMatrix commutator(const CsrMatrix& a, const CsrMatrix& b) {
    return spadd(spmm(a, b), spmm(b, a), {1.0, 0.0}, {-1.0, 0.0});
}

CsrMatrix anticommutator(const CsrMatrix& a, const CsrMatrix& b) {
    return spadd(spmm(a, b), spmm(b, a));
}

cplx dot(const std::vector<cplx>& x, const std::vector<cplx>& y) {
    if (x.size() != y.size()) throw std::invalid_argument("dot: size mismatch");
    cplx s = 0.0;
    for (size_t i = 0; i < x.size(); ++i) s += std::conj(x[i]) * y[i];
    return s;
}

cplx expectation(const CsrMatrix& op, const std::vector<cplx>& psi) {
    return dot(psi, op.apply(psi));
}

double vec_norm(const std::vector<cplx>& x) {
    double s = 0.0;
    for (const cplx& v : x) s += std::norm(v);
    return std::sqrt(s);
}

}  // namespace confock
