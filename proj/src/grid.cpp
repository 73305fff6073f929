#include "confock/grid.hpp"

#include <cmath>

namespace confock {

FrequencyGrid make_grid(int modes, double d_omega) {
    if (modes < 4) throw std::invalid_argument("make_grid: need modes >= 4");
    if (!(d_omega > 0.0)) throw std::invalid_argument("make_grid: d_omega must be positive");
    FrequencyGrid g;
    g.modes = modes;
    g.d_omega = d_omega;
    g.d_nu = d_omega / (2.0 * M_PI);
    g.omega.resize(modes);
    for (int j = 1; j <= modes; ++j) g.omega[j - 1] = j * d_omega;
    return g;
}

DerivativeStencil derivative_matrix(const FrequencyGrid& grid, int order) {
    if (order != 2 && order != 4)
        throw std::invalid_argument("derivative_matrix: order must be 2 or 4");
    const int m = grid.modes;
    const double h = grid.d_omega;
    const int s = order / 2;
    if (m < order + 1)
        throw std::invalid_argument("derivative_matrix: grid too small for stencil width");

    DerivativeStencil st;
    st.order = order;
    st.half_width = s;
    st.modes = m;
    st.d_omega = h;
    st.interior_lo = s + 1;
    st.interior_hi = m - s;
    st.full = Eigen::MatrixXd::Zero(m, m);
    st.gen = Eigen::MatrixXd::Zero(m, m);

    // central coefficients c_r for f'(x) ~ sum_r c_r (f(x+r) - f(x-r))
    std::vector<double> c(s + 1, 0.0);
    if (order == 2) {
        c[1] = 1.0 / (2.0 * h);
    } else {
        c[1] = 8.0 / (12.0 * h);
        c[2] = -1.0 / (12.0 * h);
    }

    for (int i = 0; i < m; ++i)
        for (int r = 1; r <= s; ++r) {
            if (i + r < m) st.gen(i, i + r) = c[r];
            if (i - r >= 0) st.gen(i, i - r) = -c[r];
        }

    st.full = st.gen;
    // one-sided rows at the edges, same accuracy order
    if (order == 2) {
        st.full.row(0).setZero();
        st.full(0, 0) = -3.0 / (2.0 * h);
        st.full(0, 1) = 4.0 / (2.0 * h);
        st.full(0, 2) = -1.0 / (2.0 * h);
        st.full.row(m - 1).setZero();
        st.full(m - 1, m - 3) = 1.0 / (2.0 * h);
        st.full(m - 1, m - 2) = -4.0 / (2.0 * h);
        st.full(m - 1, m - 1) = 3.0 / (2.0 * h);
    } else {
        const double w0[5] = {-25.0, 48.0, -36.0, 16.0, -3.0};
        const double w1[5] = {-3.0, -10.0, 18.0, -6.0, 1.0};
        st.full.row(0).setZero();
        st.full.row(1).setZero();
        st.full.row(m - 1).setZero();
        st.full.row(m - 2).setZero();
        for (int k = 0; k < 5; ++k) {
            st.full(0, k) = w0[k] / (12.0 * h);
            st.full(1, k) = w1[k] / (12.0 * h);
            st.full(m - 1, m - 1 - k) = -w0[k] / (12.0 * h);
            st.full(m - 2, m - 1 - k) = -w1[k] / (12.0 * h);
        }
    }
    return st;
}

}  // namespace confock
