#include "confock/fock.hpp"

#include <cmath>
#include <numeric>

namespace confock {

namespace {

void enumerate_states(int modes, int n_max, int mode, int used,
                      std::vector<std::uint8_t>& cur,
                      std::vector<std::vector<std::uint8_t>>& out) {
    if (mode == modes) {
        out.push_back(cur);
        return;
    }
    for (int n = 0; n <= n_max - used; ++n) {
        cur[mode] = std::uint8_t(n);
        enumerate_states(modes, n_max, mode + 1, used + n, cur, out);
    }
    cur[mode] = 0;
}

std::int64_t binom(int n, int k) {
    std::int64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace

FockBasis build_basis(const FrequencyGrid& grid, int n_max, std::int64_t dim_cap, Sector sector) {
    if (n_max < 0) throw std::invalid_argument("build_basis: n_max must be >= 0");
    const std::int64_t dim = binom(grid.modes + n_max, n_max);
    if (dim > dim_cap) throw std::invalid_argument("build_basis: dimension cap exceeded");

    FockBasis b;
    b.modes = grid.modes;
    b.d_omega = grid.d_omega;
    b.d_nu = grid.d_nu;
    b.n_max = n_max;
    b.sector = sector;
    b.states.reserve(size_t(dim));
    std::vector<std::uint8_t> cur(grid.modes, 0);
    enumerate_states(grid.modes, n_max, 0, 0, cur, b.states);
    for (int i = 0; i < int(b.states.size()); ++i) b.index[b.states[i]] = i;
    return b;
}

void FieldState::normalize() {
    double n = norm();
    if (n == 0.0) throw std::runtime_error("FieldState: cannot normalize zero state");
    for (cplx& a : amp) a /= n;
}

CsrMatrix annihilation_op(const FockBasis& basis, int j) {
    if (j < 1 || j > basis.modes) throw std::invalid_argument("annihilation_op: bad mode");
    std::vector<std::tuple<int, int, cplx>> trips;
    std::vector<std::uint8_t> tmp;
    for (int c = 0; c < basis.dim(); ++c) {
        const auto& s = basis.states[c];
        if (s[j - 1] == 0) continue;
        tmp = s;
        tmp[j - 1]--;
        const int r = basis.find(tmp);
        trips.emplace_back(r, c, cplx(std::sqrt(double(s[j - 1])), 0.0));
    }
    return CsrMatrix::from_triplets(basis.dim(), basis.dim(), std::move(trips));
}

CsrMatrix creation_op(const FockBasis& basis, int j) { return annihilation_op(basis, j).dagger(); }

CsrMatrix occupation_op(const FockBasis& basis, int j) {
    std::vector<cplx> d(basis.dim());
    for (int i = 0; i < basis.dim(); ++i) d[i] = double(basis.states[i][j - 1]);
    return CsrMatrix::diagonal(d);
}

CsrMatrix occupation_total(const FockBasis& basis) {
    std::vector<cplx> d(basis.dim());
    for (int i = 0; i < basis.dim(); ++i) d[i] = double(basis.total_occ(i));
    return CsrMatrix::diagonal(d);
}

FockOperator number_density(const FockBasis& basis, int j) {
    FockOperator op;
    op.mat = occupation_op(basis, j);
    op.mat.scale(1.0 / basis.d_nu);
    op.label = "n_w[" + std::to_string(j) + "]";
    op.ref = "number-density";
    op.hermitian_flag = true;
    return op;
}

FockOperator number_total(const FockBasis& basis) {
    FockOperator op;
    op.mat = occupation_total(basis);
    op.label = "n";
    op.ref = "total-number";
    op.hermitian_flag = true;
    return op;
}

FockOperator realize(const QuadraticForm& q, const FockBasis& basis) {
    if (q.modes != basis.modes || q.d_omega != basis.d_omega)
        throw std::invalid_argument("realize: grid mismatch");
    const int M = basis.modes;
    const int dim = basis.dim();
    const double inv = 1.0 / basis.d_nu;

    // nonzero coefficient lists
    struct Term {
        int p, k;
        cplx w;
    };
    std::vector<Term> tsym, tcre, tann;
    for (int p = 0; p < M; ++p)
        for (int k = 0; k < M; ++k) {
            if (q.coeff_sym(p, k) != cplx(0.0, 0.0)) tsym.push_back({p, k, q.coeff_sym(p, k) * inv});
            if (q.pair_create(p, k) != cplx(0.0, 0.0))
                tcre.push_back({p, k, q.pair_create(p, k) * inv});
            if (q.pair_annih(p, k) != cplx(0.0, 0.0))
                tann.push_back({p, k, q.pair_annih(p, k) * inv});
        }

    std::vector<std::vector<std::tuple<int, int, cplx>>> per_col(dim);
#pragma omp parallel
    {
        std::vector<std::uint8_t> tmp;
#pragma omp for schedule(dynamic, 64)
        for (int c = 0; c < dim; ++c) {
            auto& out = per_col[c];
            const auto& s = basis.states[c];
            const int occ = basis.total_occ(c);
            // a+_p a_k, normal ordered part of the symmetrized content
            for (const Term& t : tsym) {
                if (s[t.k] == 0) continue;
                tmp = s;
                double amp = std::sqrt(double(tmp[t.k]));
                tmp[t.k]--;
                amp *= std::sqrt(double(tmp[t.p] + 1));
                tmp[t.p]++;
                const int r = basis.find(tmp);
                if (r >= 0) out.emplace_back(r, c, t.w * amp);
            }
            // a+_p a+_k
            if (occ + 2 <= basis.n_max)
                for (const Term& t : tcre) {
                    tmp = s;
                    double amp = std::sqrt(double(tmp[t.k] + 1));
                    tmp[t.k]++;
                    amp *= std::sqrt(double(tmp[t.p] + 1));
                    tmp[t.p]++;
                    const int r = basis.find(tmp);
                    if (r >= 0) out.emplace_back(r, c, t.w * amp);
                }
            // a_p a_k
            for (const Term& t : tann) {
                if (s[t.k] == 0) continue;
                tmp = s;
                double amp = std::sqrt(double(tmp[t.k]));
                tmp[t.k]--;
                if (tmp[t.p] == 0) continue;
                amp *= std::sqrt(double(tmp[t.p]));
                tmp[t.p]--;
                const int r = basis.find(tmp);
                if (r >= 0) out.emplace_back(r, c, t.w * amp);
            }
        }
    }

    std::vector<std::tuple<int, int, cplx>> trips;
    std::int64_t total = 0;
    for (auto& v : per_col) total += std::int64_t(v.size());
    trips.reserve(size_t(total + dim));
    for (auto& v : per_col)
        for (auto& t : v) trips.push_back(t);

    const cplx c0 = qf_vacuum_expectation(q);
    if (c0 != cplx(0.0, 0.0))
        for (int i = 0; i < dim; ++i) trips.emplace_back(i, i, c0);

    FockOperator op;
    op.mat = CsrMatrix::from_triplets(dim, dim, std::move(trips));
    op.label = "realized-form";
    op.hermitian_flag = q.hermiticity_defect() < 1e-12;
    return op;
}

FockOperator m_density(const FockBasis& basis, const DerivativeStencil& st, int j) {
    if (!st.interior(j)) throw std::invalid_argument("m_density: mode outside interiorRange");
    if (st.modes != basis.modes) throw std::invalid_argument("m_density: grid mismatch");
    // (i/2) sum_l S_jl (a+_l a_j - a+_j a_l) / d_nu
    std::vector<std::tuple<int, int, cplx>> trips;
    std::vector<std::uint8_t> tmp;
    const cplx half_i = cplx(0.0, 0.5) / basis.d_nu;
    for (int l = 1; l <= basis.modes; ++l) {
        const double S = st.gen(j - 1, l - 1);
        if (S == 0.0) continue;
        for (int c = 0; c < basis.dim(); ++c) {
            const auto& s = basis.states[c];
            // a+_l a_j
            if (s[j - 1] > 0) {
                tmp = s;
                double amp = std::sqrt(double(tmp[j - 1]));
                tmp[j - 1]--;
                amp *= std::sqrt(double(tmp[l - 1] + 1));
                tmp[l - 1]++;
                trips.emplace_back(basis.find(tmp), c, half_i * S * amp);
            }
            // -a+_j a_l
            if (s[l - 1] > 0) {
                tmp = s;
                double amp = std::sqrt(double(tmp[l - 1]));
                tmp[l - 1]--;
                amp *= std::sqrt(double(tmp[j - 1] + 1));
                tmp[j - 1]++;
                trips.emplace_back(basis.find(tmp), c, -half_i * S * amp);
            }
        }
    }
    FockOperator op;
    op.mat = CsrMatrix::from_triplets(basis.dim(), basis.dim(), std::move(trips));
    op.label = "m_w[" + std::to_string(j) + "]";
    op.ref = "position-density";
    op.hermitian_flag = true;
    return op;
}

FockOperator m_total(const FockBasis& basis, const DerivativeStencil& st) {
    if (st.modes != basis.modes) throw std::invalid_argument("m_total: grid mismatch");
    // -i a+ S a over the antisymmetric generator
    std::vector<std::tuple<int, int, cplx>> trips;
    std::vector<std::uint8_t> tmp;
    for (int p = 1; p <= basis.modes; ++p)
        for (int l = 1; l <= basis.modes; ++l) {
            const double S = st.gen(p - 1, l - 1);
            if (S == 0.0) continue;
            const cplx w = cplx(0.0, -1.0) * S;
            for (int c = 0; c < basis.dim(); ++c) {
                const auto& s = basis.states[c];
                if (s[l - 1] == 0) continue;
                tmp = s;
                double amp = std::sqrt(double(tmp[l - 1]));
                tmp[l - 1]--;
                amp *= std::sqrt(double(tmp[p - 1] + 1));
                tmp[p - 1]++;
                trips.emplace_back(basis.find(tmp), c, w * amp);
            }
        }
    FockOperator op;
    op.mat = CsrMatrix::from_triplets(basis.dim(), basis.dim(), std::move(trips));
    op.label = "m";
    op.ref = "position-total";
    op.hermitian_flag = true;
    return op;
}

FockOperator normal_mn(const FockBasis& basis, const DerivativeStencil& st, int j) {
    FockOperator m = m_total(basis, st);
    CsrMatrix aj = annihilation_op(basis, j);
    CsrMatrix out = spmm(aj.dagger(), spmm(m.mat, aj));
    out.scale(1.0 / basis.d_nu);
    FockOperator op;
    op.mat = std::move(out);
    op.label = ":m n_w[" + std::to_string(j) + "]:";
    op.ref = "normal-ordered-mn";
    op.hermitian_flag = true;
    return op;
}

OnePacket gaussian_packet(const FrequencyGrid& grid, double u0, double sigma_u, double omega_c,
                          int guard_modes, double boundary_amp_tol) {
    if (!(sigma_u > 0.0)) throw std::invalid_argument("gaussian_packet: sigma_u must be positive");
    const double sigma_w = 1.0 / (2.0 * sigma_u);
    OnePacket p;
    p.f.resize(grid.modes);
    for (int j = 1; j <= grid.modes; ++j) {
        const double w = grid.omega_at(j);
        const double env = std::exp(-(w - omega_c) * (w - omega_c) / (4.0 * sigma_w * sigma_w));
        p.f[j - 1] = env * std::exp(cplx(0.0, w * u0));
    }
    double nrm = 0.0;
    for (int j = 0; j < grid.modes; ++j) nrm += grid.d_nu * std::norm(p.f[j]);
    p.f /= std::sqrt(nrm);

    double fmax = p.f.cwiseAbs().maxCoeff();
    for (int j = 1; j <= grid.modes; ++j) {
        const bool edge = (j <= guard_modes) || (j > grid.modes - guard_modes);
        if (edge && std::abs(p.f[j - 1]) > boundary_amp_tol * fmax)
            throw std::invalid_argument("gaussian_packet: packet support touches boundary modes");
    }
    p.u0 = u0;
    p.sigma_u = sigma_u;
    return p;
}

FieldState one_particle_state(const FockBasis& basis, const OnePacket& packet) {
    FieldState st;
    st.amp.assign(basis.dim(), cplx(0.0, 0.0));
    std::vector<std::uint8_t> s(basis.modes, 0);
    const double scale = std::sqrt(basis.d_nu);  // |f> = sum_j d_nu f_j a+_{w_j}|vac>, unit norm
    for (int j = 1; j <= basis.modes; ++j) {
        s[j - 1] = 1;
        const int idx = basis.find(s);
        if (idx >= 0) st.amp[idx] = packet.f[j - 1] * scale;
        s[j - 1] = 0;
    }
    st.normalize();
    return st;
}

FieldState two_particle_state(const FockBasis& basis, const OnePacket& packet) {
    if (basis.n_max < 2) throw std::invalid_argument("two_particle_state: n_max < 2");
    FieldState st;
    st.amp.assign(basis.dim(), cplx(0.0, 0.0));
    std::vector<std::uint8_t> s(basis.modes, 0);
    for (int j = 1; j <= basis.modes; ++j)
        for (int k = j; k <= basis.modes; ++k) {
            s[j - 1]++;
            s[k - 1]++;
            const int idx = basis.find(s);
            if (idx >= 0) {
                // relative weights of (a+_f)^2 |vac>: 2 f_j f_k off-diagonal, sqrt(2) f_j^2 on
                cplx amp = packet.f[j - 1] * packet.f[k - 1];
                amp *= (j == k) ? std::sqrt(2.0) : 2.0;
                st.amp[idx] += amp;
            }
            s[j - 1]--;
            s[k - 1]--;
        }
    st.normalize();
    return st;
}

FieldState coherent_like_state(const FockBasis& basis, const OnePacket& packet, double alpha) {
    // exp(alpha a+_f)|vac> truncated at n_max, a+_f = sqrt(d_nu) sum f_j a+_j
    FieldState st;
    st.amp.assign(basis.dim(), cplx(0.0, 0.0));
    st.amp[basis.find(std::vector<std::uint8_t>(basis.modes, 0))] = 1.0;

    std::vector<cplx> layer = st.amp;
    std::vector<std::uint8_t> tmp;
    for (int n = 1; n <= basis.n_max; ++n) {
        std::vector<cplx> next(basis.dim(), cplx(0.0, 0.0));
        for (int c = 0; c < basis.dim(); ++c) {
            if (layer[c] == cplx(0.0, 0.0)) continue;
            const auto& s = basis.states[c];
            for (int j = 1; j <= basis.modes; ++j) {
                if (packet.f[j - 1] == cplx(0.0, 0.0)) continue;
                tmp = s;
                if (basis.total_occ(c) + 1 > basis.n_max) continue;
                const double amp = std::sqrt(double(tmp[j - 1] + 1));
                tmp[j - 1]++;
                const int r = basis.find(tmp);
                if (r >= 0)
                    next[r] += layer[c] * alpha * std::sqrt(basis.d_nu) * packet.f[j - 1] * amp /
                               double(n);
            }
        }
        for (int i = 0; i < basis.dim(); ++i) st.amp[i] += next[i];
        layer = std::move(next);
    }
    st.normalize();
    return st;
}

FieldState vacuum_state(const FockBasis& basis) {
    FieldState st;
    st.amp.assign(basis.dim(), cplx(0.0, 0.0));
    st.amp[basis.find(std::vector<std::uint8_t>(basis.modes, 0))] = 1.0;
    return st;
}

CsrMatrix realize_field_vector(const FieldVector& v, const FockBasis& basis) {
    const double scale = 1.0 / std::sqrt(basis.d_nu);
    CsrMatrix acc = CsrMatrix::zero(basis.dim(), basis.dim());
    for (int j = 1; j <= basis.modes; ++j) {
        if (v.a_part[j - 1] != cplx(0.0, 0.0)) {
            CsrMatrix a = annihilation_op(basis, j);
            a.scale(v.a_part[j - 1] * scale);
            acc = spadd(acc, a);
        }
        if (v.adag_part[j - 1] != cplx(0.0, 0.0)) {
            CsrMatrix ad = creation_op(basis, j);
            ad.scale(v.adag_part[j - 1] * scale);
            acc = spadd(acc, ad);
        }
    }
    return acc;
}

CsrMatrix one_body_op(const FockBasis& basis, const Eigen::MatrixXcd& h) {
    if (h.rows() != basis.modes || h.cols() != basis.modes)
        throw std::invalid_argument("one_body_op: shape mismatch");
    const int dim = basis.dim();
    std::vector<std::vector<std::tuple<int, int, cplx>>> per_col(dim);
#pragma omp parallel
    {
        std::vector<std::uint8_t> tmp;
#pragma omp for schedule(dynamic, 64)
        for (int c = 0; c < dim; ++c) {
            const auto& s = basis.states[c];
            for (int l = 0; l < basis.modes; ++l) {
                if (s[l] == 0) continue;
                for (int p = 0; p < basis.modes; ++p) {
                    if (h(p, l) == cplx(0.0, 0.0)) continue;
                    tmp = s;
                    double amp = std::sqrt(double(tmp[l]));
                    tmp[l]--;
                    amp *= std::sqrt(double(tmp[p] + 1));
                    tmp[p]++;
                    per_col[c].emplace_back(basis.find(tmp), c, h(p, l) * amp);
                }
            }
        }
    }
    std::vector<std::tuple<int, int, cplx>> trips;
    for (auto& v : per_col)
        for (auto& t : v) trips.push_back(t);
    return CsrMatrix::from_triplets(dim, dim, std::move(trips));
}

Eigen::MatrixXcd one_body_density(const FockBasis& basis, const FieldState& psi) {
    const int M = basis.modes;
    std::vector<std::vector<cplx>> lowered(M);
    for (int l = 1; l <= M; ++l) lowered[l - 1] = annihilation_op(basis, l).apply(psi.amp);
    Eigen::MatrixXcd rho(M, M);
    for (int r = 0; r < M; ++r)
        for (int l = 0; l < M; ++l) rho(r, l) = dot(lowered[r], lowered[l]);
    return rho;
}

CsrMatrix sector_projector(const FockBasis& basis, int occ_min, int occ_max) {
    std::vector<cplx> d(basis.dim(), cplx(0.0, 0.0));
    for (int i = 0; i < basis.dim(); ++i) {
        const int t = basis.total_occ(i);
        if (t >= occ_min && t <= occ_max) d[i] = 1.0;
    }
    return CsrMatrix::diagonal(d);
}

}  // namespace confock
