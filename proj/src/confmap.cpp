#include "confock/confmap.hpp"

#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>

namespace confock {

double ConformalMap::f(double u) const {
    switch (kind) {
        case MapKind::Identity: return u;
        case MapKind::Translation: return u + shift;
        case MapKind::Dilation: return std::exp(rapidity) * u;
        case MapKind::Homographic: return (ha * u + hb) / (hc * u + hd);
        case MapKind::PolyPerturbation: return u + poly_eps * std::pow(u, poly_k);
        case MapKind::Rindler: return -std::exp(-accel * u) / accel;
    }
    return u;
}

double ConformalMap::fprime(double u) const {
    switch (kind) {
        case MapKind::Identity: return 1.0;
        case MapKind::Translation: return 1.0;
        case MapKind::Dilation: return std::exp(rapidity);
        case MapKind::Homographic: {
            const double den = hc * u + hd;
            return 1.0 / (den * den);  // ad - bc = 1
        }
        case MapKind::PolyPerturbation:
            return 1.0 + poly_eps * poly_k * std::pow(u, poly_k - 1);
        case MapKind::Rindler: return std::exp(-accel * u);
    }
    return 1.0;
}

std::string ConformalMap::describe() const {
    std::ostringstream os;
    switch (kind) {
        case MapKind::Identity: os << "identity"; break;
        case MapKind::Translation: os << "translation(b=" << shift << ")"; break;
        case MapKind::Dilation: os << "dilation(lambda=" << rapidity << ")"; break;
        case MapKind::Homographic:
            os << "homographic(" << ha << "," << hb << "," << hc << "," << hd << ")";
            break;
        case MapKind::PolyPerturbation:
            os << "poly(k=" << poly_k << ",eps=" << poly_eps << ")";
            break;
        case MapKind::Rindler: os << "rindler(a=" << accel << ")"; break;
    }
    return os.str();
}

namespace {

void check_monotonic(const ConformalMap& m) {
    const int samples = 4096;
    for (int i = 0; i <= samples; ++i) {
        const double u = m.u_min + (m.u_max - m.u_min) * i / samples;
        if (!(m.fprime(u) > 0.0))
            throw std::invalid_argument("make_map: map not strictly monotonic on domain");
    }
}

}  // namespace

ConformalMap make_map_identity(double u_min, double u_max) {
    ConformalMap m;
    m.kind = MapKind::Identity;
    m.u_min = u_min;
    m.u_max = u_max;
    return m;
}

ConformalMap make_map_translation(double b, double u_min, double u_max) {
    ConformalMap m;
    m.kind = MapKind::Translation;
    m.shift = b;
    m.u_min = u_min;
    m.u_max = u_max;
    return m;
}

ConformalMap make_map_dilation(double rapidity, double u_min, double u_max) {
    ConformalMap m;
    m.kind = MapKind::Dilation;
    m.rapidity = rapidity;
    m.u_min = u_min;
    m.u_max = u_max;
    return m;
}

ConformalMap make_map_homographic(double a, double b, double c, double d, double u_min,
                                  double u_max) {
    if (std::abs(a * d - b * c - 1.0) > 1e-9)
        throw std::invalid_argument("make_map: homographic map needs ad - bc = 1");
    ConformalMap m;
    m.kind = MapKind::Homographic;
    m.ha = a;
    m.hb = b;
    m.hc = c;
    m.hd = d;
    m.u_min = u_min;
    m.u_max = u_max;
    if (c != 0.0) {
        const double pole = -d / c;
        if (pole >= u_min && pole <= u_max)
            throw std::invalid_argument("make_map: homographic singular point inside domain");
    }
    check_monotonic(m);
    return m;
}

ConformalMap make_map_poly(int k, double eps, double u_min, double u_max) {
    if (k < 2 || k > 6) throw std::invalid_argument("make_map: poly degree must be in 2..6");
    ConformalMap m;
    m.kind = MapKind::PolyPerturbation;
    m.poly_k = k;
    m.poly_eps = eps;
    m.u_min = u_min;
    m.u_max = u_max;
    check_monotonic(m);
    return m;
}

ConformalMap make_map_rindler(double accel, double u_min, double u_max) {
    if (!(accel > 0.0)) throw std::invalid_argument("make_map: rindler needs accel > 0");
    ConformalMap m;
    m.kind = MapKind::Rindler;
    m.accel = accel;
    m.u_min = u_min;
    m.u_max = u_max;
    return m;
}

ConformalMap parse_map_spec(const std::string& spec) {
    const auto colon = spec.find(':');
    const std::string name = spec.substr(0, colon);
    std::map<std::string, double> kv;
    if (colon != std::string::npos) {
        std::stringstream ss(spec.substr(colon + 1));
        std::string item;
        while (std::getline(ss, item, ',')) {
            const auto eq = item.find('=');
            if (eq == std::string::npos)
                throw std::invalid_argument("parse_map_spec: expected key=value, got " + item);
            kv[item.substr(0, eq)] = std::stod(item.substr(eq + 1));
        }
    }
    auto get = [&](const std::string& key, double dflt) {
        auto it = kv.find(key);
        return it == kv.end() ? dflt : it->second;
    };
    const double lo = get("umin", -200.0), hi = get("umax", 200.0);
    if (name == "identity") return make_map_identity(lo, hi);
    if (name == "translation") return make_map_translation(get("b", 1.0), lo, hi);
    if (name == "dilation") return make_map_dilation(get("lambda", std::log(2.0)), lo, hi);
    if (name == "homographic")
        return make_map_homographic(get("a", 1.0), get("b", 0.0), get("c", 0.0), get("d", 1.0),
                                    lo, hi);
    if (name == "poly")
        return make_map_poly(int(get("k", 3)), get("eps", 1e-3), get("umin", -12.0),
                             get("umax", 12.0));
    if (name == "rindler") return make_map_rindler(get("a", 1.0), get("umin", -8.0), get("umax", 160.0));
    throw std::invalid_argument("parse_map_spec: unknown map kind " + name);
}

namespace {

// Planck taper: 0 at x=0, 1 at x=1, all derivatives vanish at both ends.
double planck_step(double x) {
    if (x <= 0.0) return 0.0;
    if (x >= 1.0) return 1.0;
    const double z = 1.0 / x - 1.0 / (1.0 - x);
    return 1.0 / (1.0 + std::exp(z));
}

}  // namespace

double WindowedDomain::weight(double u) const {
    if (u <= lo || u >= hi) return 0.0;
    double w = 1.0;
    if (u < lo + taper_lo) w *= planck_step((u - lo) / taper_lo);
    if (u > hi - taper_hi) w *= planck_step((hi - u) / taper_hi);
    return w;
}

double WindowedDomain::integral(int samples) const {
    double s = 0.0;
    const double du = (hi - lo) / (samples - 1);
    for (int i = 0; i < samples; ++i) {
        const double u = lo + i * du;
        const double w = weight(u);
        s += (i == 0 || i == samples - 1) ? 0.5 * w : w;
    }
    return s * du;
}

namespace {

// composite Simpson over n intervals (n even), also returns the half-resolution value
struct SimpsonResult {
    cplx full;
    cplx half;
};

template <typename F>
SimpsonResult simpson(F&& fn, double lo, double hi, int n) {
    if (n % 2) ++n;
    if (n % 4) n += 2;  // so the half-resolution pass is also Simpson
    const double du = (hi - lo) / n;
    cplx s_full = fn(lo) + fn(hi);
    cplx s_half = s_full;
    for (int i = 1; i < n; ++i) {
        const cplx v = fn(lo + i * du);
        s_full += v * ((i % 2) ? 4.0 : 2.0);
        if (i % 2 == 0) s_half += v * ((i % 4) ? 4.0 : 2.0);
    }
    SimpsonResult r;
    r.full = s_full * du / 3.0;
    r.half = s_half * (2.0 * du) / 3.0;
    return r;
}

double fprime_max(const ConformalMap& map, const WindowedDomain& w) {
    double fp_max = 0.0;
    for (int i = 0; i <= 512; ++i) {
        const double u = w.lo + (w.hi - w.lo) * i / 512.0;
        fp_max = std::max(fp_max, std::abs(map.fprime(u)));
    }
    return fp_max;
}

int phase_nodes(double fp_max, const WindowedDomain& w, double omega_in, double omega_out,
                const QuadratureSpec& q) {
    const double cycles = (omega_in + omega_out * fp_max) * (w.hi - w.lo) / (2.0 * M_PI);
    const double n = q.oversample * cycles;
    return int(std::min(double(q.max_nodes), std::max(double(q.min_nodes), n)));
}

}  // namespace

BogoliubovPair bogoliubov(const ConformalMap& map, const std::vector<double>& omega_in,
                          const std::vector<double>& omega_out, const WindowedDomain& window,
                          const QuadratureSpec& quad) {
    BogoliubovPair out;
    const int no = int(omega_out.size());
    const int ni = int(omega_in.size());
    out.alpha.resize(no, ni);
    out.beta.resize(no, ni);
    out.alpha_err.resize(no, ni);
    out.beta_err.resize(no, ni);
    out.window = window;
    out.window_weight = window.integral();

    const double fp_max = fprime_max(map, window);

#pragma omp parallel for collapse(2) schedule(dynamic)
    for (int i = 0; i < no; ++i)
        for (int k = 0; k < ni; ++k) {
            const double wo = omega_out[i];
            const double wi = omega_in[k];
            const int n = phase_nodes(fp_max, window, wi, wo, quad);
            const double pref = 1.0 / (4.0 * M_PI * std::sqrt(wi * wo));
            auto ifn = [&](double u) {
                const double wgt = window.weight(u);
                if (wgt == 0.0) return std::pair<cplx, cplx>{0.0, 0.0};
                const double fu = map.f(u);
                const double fp = map.fprime(u);
                const cplx ea = wgt * std::exp(cplx(0.0, wo * fu - wi * u));
                const cplx eb = wgt * std::exp(cplx(0.0, wo * fu + wi * u));
                return std::pair<cplx, cplx>{(wi + wo * fp) * ea, (wi - wo * fp) * eb};
            };
            auto fa = [&](double u) { return ifn(u).first; };
            auto fb = [&](double u) { return ifn(u).second; };
            const SimpsonResult ra = simpson(fa, window.lo, window.hi, n);
            const SimpsonResult rb = simpson(fb, window.lo, window.hi, n);
            out.alpha(i, k) = pref * ra.full;
            out.beta(i, k) = pref * rb.full;
            out.alpha_err(i, k) = pref * std::abs(ra.full - ra.half);
            out.beta_err(i, k) = pref * std::abs(rb.full - rb.half);
        }
    out.nodes = phase_nodes(fp_max, window, omega_in.empty() ? 0.0 : omega_in.back(),
                            omega_out.empty() ? 0.0 : omega_out.back(), quad);
    return out;
}

Eigen::MatrixXcd bogoliubov_beta_deviation(const ConformalMap& map,
                                           const std::vector<double>& omega_in,
                                           const std::vector<double>& omega_out,
                                           const WindowedDomain& window,
                                           const QuadratureSpec& quad) {
    const int no = int(omega_out.size());
    const int ni = int(omega_in.size());
    Eigen::MatrixXcd beta(no, ni);

    // windowed map F(u) = u + w(u) (f(u) - u); monotonicity of the blend
    auto F = [&](double u) { return u + window.weight(u) * (map.f(u) - u); };
    auto Fp_num = [&](double u) {
        const double h = 1e-6 * std::max(1.0, std::abs(u));
        return (F(u + h) - F(u - h)) / (2.0 * h);
    };
    for (int i = 0; i <= 4096; ++i) {
        const double u = window.lo + (window.hi - window.lo) * i / 4096.0;
        if (!(Fp_num(u) > 0.0))
            throw std::invalid_argument("bogoliubov_beta_deviation: windowed map not monotonic");
    }

    const double fp_max = std::max(1.0, fprime_max(map, window));

#pragma omp parallel for collapse(2) schedule(dynamic)
    for (int i = 0; i < no; ++i)
        for (int k = 0; k < ni; ++k) {
            const double wo = omega_out[i];
            const double wi = omega_in[k];
            const int n = phase_nodes(fp_max, window, wi, wo, quad);
            const double pref = 1.0 / (4.0 * M_PI * std::sqrt(wi * wo));
            auto fb = [&](double u) {
                const double fu = F(u);
                const double fp = Fp_num(u);
                const cplx dev = (wi - wo * fp) * std::exp(cplx(0.0, wo * fu)) -
                                 (wi - wo) * std::exp(cplx(0.0, wo * u));
                return dev * std::exp(cplx(0.0, wi * u));
            };
            beta(i, k) = pref * simpson(fb, window.lo, window.hi, n).full;
        }
    return beta;
}

ScalingResult perturbation_scaling(int k, const std::vector<double>& eps_list,
                                   const std::vector<double>& omega_in,
                                   const std::vector<double>& omega_out,
                                   const WindowedDomain& window, const QuadratureSpec& quad) {
    ScalingResult res;
    for (double eps : eps_list) {
        const ConformalMap m = make_map_poly(k, eps, window.lo, window.hi);
        const Eigen::MatrixXcd beta =
            bogoliubov_beta_deviation(m, omega_in, omega_out, window, quad);
        res.eps.push_back(eps);
        res.beta_norm.push_back(beta.norm());
    }
    res.slope = fit_loglog_slope(res.eps, res.beta_norm);
    return res;
}

double fit_loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 2)
        throw std::invalid_argument("fit_loglog_slope: need >= 2 points");
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const int n = int(x.size());
    for (int i = 0; i < n; ++i) {
        const double lx = std::log(x[i]);
        const double ly = std::log(std::max(y[i], 1e-300));
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace confock
