// Test-only brute-force reference: dense Fock matrices built on an
// independently coded basis walk (odometer enumeration, dense Eigen algebra).
// Deliberately shares no code with the production sparse path.

#ifndef CONFOCK_TESTS_ORACLE_HPP
#define CONFOCK_TESTS_ORACLE_HPP

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <random>
#include <vector>

namespace oracle {

using cplx = std::complex<double>;
using Mat = Eigen::MatrixXcd;

struct DenseBasis {
    int modes;
    int n_max;
    std::vector<std::vector<int>> states;
    std::map<std::vector<int>, int> lookup;
};

inline DenseBasis dense_basis(int modes, int n_max) {
    DenseBasis b;
    b.modes = modes;
    b.n_max = n_max;
    std::vector<int> s(modes, 0);
    // odometer walk over all occupation tuples with total <= n_max
    while (true) {
        int total = 0;
        for (int v : s) total += v;
        if (total <= n_max) b.states.push_back(s);
        int pos = modes - 1;
        while (pos >= 0) {
            if (++s[pos] <= n_max) break;
            s[pos] = 0;
            --pos;
        }
        if (pos < 0) break;
    }
    std::sort(b.states.begin(), b.states.end());
    for (int i = 0; i < int(b.states.size()); ++i) b.lookup[b.states[i]] = i;
    return b;
}

inline Mat lowering(const DenseBasis& b, int mode /*1-based*/) {
    const int d = int(b.states.size());
    Mat a = Mat::Zero(d, d);
    for (int c = 0; c < d; ++c) {
        std::vector<int> s = b.states[c];
        if (s[mode - 1] == 0) continue;
        const double amp = std::sqrt(double(s[mode - 1]));
        s[mode - 1] -= 1;
        a(b.lookup.at(s), c) = amp;
    }
    return a;
}

/// Dense realization of a quadratic form given its stored coefficient blocks
/// (continuum normalization, d_nu scaling as in the production convention).
inline Mat realize_dense(const DenseBasis& b, double d_nu, const Eigen::MatrixXcd& A,
                         const Eigen::MatrixXcd& Bc, const Eigen::MatrixXcd& Ba, cplx c) {
    const int d = int(b.states.size());
    Mat out = Mat::Zero(d, d);
    std::vector<Mat> a(b.modes), ad(b.modes);
    for (int j = 1; j <= b.modes; ++j) {
        a[j - 1] = lowering(b, j);
        ad[j - 1] = a[j - 1].adjoint();
    }
    for (int p = 0; p < b.modes; ++p)
        for (int k = 0; k < b.modes; ++k) {
            if (A(p, k) != cplx(0, 0)) out += (A(p, k) / d_nu) * (ad[p] * a[k]);
            if (Bc(p, k) != cplx(0, 0)) out += (Bc(p, k) / d_nu) * (ad[p] * ad[k]);
            if (Ba(p, k) != cplx(0, 0)) out += (Ba(p, k) / d_nu) * (a[p] * a[k]);
        }
    const cplx vac = 0.5 * A.trace() + c;
    out += vac * Mat::Identity(d, d);
    return out;
}

}  // namespace oracle

#endif
