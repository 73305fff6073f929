// Acceptance gate: runs every contract at its pinned tolerance and prints one
// PASS/FAIL line per criterion. Exit status is the number of failed criteria.

#include <chrono>
#include <cstdio>
#include <random>

#include "confock/suites.hpp"
#include "oracle.hpp"

using namespace confock;

namespace {

struct Criterion {
    std::string name;
    std::vector<CheckRecord> records;
    double seconds = 0.0;
    double time_limit = 0.0;  // 0 = none
    std::vector<std::string> notes;

    bool pass() const {
        for (const auto& r : records)
            if (!r.pass) return false;
        if (time_limit > 0.0 && seconds > time_limit) return false;
        return true;
    }
};

void print_criterion(const Criterion& c) {
    std::printf("%s %s (%.1f s%s)\n", c.pass() ? "PASS" : "FAIL", c.name.c_str(), c.seconds,
                c.time_limit > 0.0 ? (", limit " + std::to_string(int(c.time_limit)) + " s").c_str()
                                   : "");
    for (const auto& r : c.records)
        if (!r.pass)
            std::printf("     FAIL %-45s measured %.3e  required %.3e\n", r.check_id.c_str(),
                        r.computed.empty() ? r.abs_err : r.computed[0],
                        r.expected.empty() ? 0.0 : r.expected[0]);
    for (const auto& n : c.notes) std::printf("     note: %s\n", n.c_str());
}

template <typename F>
Criterion timed(std::string name, double limit, F&& body) {
    Criterion c;
    c.name = std::move(name);
    c.time_limit = limit;
    const auto t0 = std::chrono::steady_clock::now();
    body(c);
    c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return c;
}

void merge(Criterion& c, std::vector<CheckRecord> recs, const std::string& prefix_filter = "") {
    for (auto& r : recs) {
        if (!prefix_filter.empty() && r.check_id.rfind(prefix_filter, 0) != 0) continue;
        c.records.push_back(std::move(r));
    }
}

}  // namespace

int main() {
    SuiteConfig cfg;  // desk scale: modes=16, d_omega=0.5, n_max=4, p=2
    std::vector<Criterion> criteria;

    criteria.push_back(timed("criterion-1 exact-identity suite", 0.0, [&](Criterion& c) {
        merge(c, suite_fock(cfg));
        merge(c, suite_phase(cfg));
        merge(c, suite_position(cfg));
        merge(c, suite_dichotomy(cfg), "dichotomy/number-invariant");
        merge(c, suite_dual(cfg), "dual/hermiticity");
        // the literal integrated canonical commutator, as stated
        ChecksContext cx = make_context(cfg.modes, cfg.d_omega, 2, cfg.stencil_order,
                                        cfg.packet_u0, cfg.packet_sigma_u, 4.0);
        const CanonicalResult cr = canonical_checks(cx);
        c.records.push_back(bound_record("accept1/energy-time-integrated-literal",
                                         "canonical-energy-time", cr.literal_residual, 1e-12));
        if (cr.literal_residual > 1e-12) {
            c.notes.push_back(
                "the integrated energy-time commutator cannot equal i*hbar*n at machine "
                "precision on any finite frequency lattice: with a diagonal energy, the "
                "commutator with a quadratic position has identically vanishing diagonal "
                "coefficients (equivalently, a trace obstruction on invariant sectors).");
            c.notes.push_back(
                "what does hold exactly is the CCR closed form [T_0,m] = i*hbar*(stencil-"
                "smoothed number), verified at 1e-15 above; the stated continuum form is "
                "recovered at slope 2 in criterion 4.");
        }
    }));

    criteria.push_back(timed("criterion-2 dichotomy suite", 10.0, [&](Criterion& c) {
        merge(c, suite_dichotomy(cfg));
    }));

    criteria.push_back(timed("criterion-3 central charge", 60.0, [&](Criterion& c) {
        merge(c, suite_central(cfg));
    }));

    criteria.push_back(timed("criterion-4 convergence suite", 0.0, [&](Criterion& c) {
        merge(c, suite_convergence(cfg));
    }));

    criteria.push_back(timed("criterion-5 bogoliubov suite", 120.0, [&](Criterion& c) {
        merge(c, suite_bogoliubov(cfg));
    }));

    criteria.push_back(timed("criterion-6 doppler demo", 30.0, [&](Criterion& c) {
        merge(c, suite_doppler(cfg));
    }));

    criteria.push_back(timed("criterion-7 oracle equivalence", 0.0, [&](Criterion& c) {
        merge(c, suite_oracle(cfg));
        // independent dense brute force on a sample subset
        const FrequencyGrid g = make_grid(4, 0.5);
        std::mt19937_64 rng(cfg.seed);
        std::uniform_real_distribution<double> dist(-1.0, 1.0);
        double worst = 0.0;
        for (int sample = 0; sample < 20; ++sample) {
            const int n_max = 2 + sample % 3;
            const oracle::DenseBasis ob = oracle::dense_basis(4, n_max);
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
                q.scalar = cplx(dist(rng), dist(rng));
                return q;
            };
            const QuadraticForm q1 = rand_form();
            const QuadraticForm q2 = rand_form();
            auto dense = [&](const QuadraticForm& q) {
                return oracle::realize_dense(ob, q.d_nu, q.coeff_sym, q.pair_create,
                                             q.pair_annih, q.scalar);
            };
            const oracle::Mat lhs = dense(q1) * dense(q2) - dense(q2) * dense(q1);
            const oracle::Mat rhs = dense(qf_commutator(q1, q2));
            const double scale = std::max(1.0, rhs.cwiseAbs().maxCoeff());
            for (int r = 0; r < int(ob.states.size()); ++r)
                for (int cc = 0; cc < int(ob.states.size()); ++cc) {
                    int tr = 0, tc = 0;
                    for (int v : ob.states[r]) tr += v;
                    for (int v : ob.states[cc]) tc += v;
                    if (tr <= n_max - 2 && tc <= n_max - 2)
                        worst = std::max(worst, std::abs(lhs(r, cc) - rhs(r, cc)) / scale);
                }
        }
        c.records.push_back(bound_record("accept7/dense-brute-force", "generator-algebra",
                                         worst, 1e-10));
    }));

    int failed = 0;
    std::printf("acceptance suite: %s\n", version_string().c_str());
    for (const auto& c : criteria) {
        print_criterion(c);
        failed += c.pass() ? 0 : 1;
    }
    std::printf("%zu criteria, %d failed\n", criteria.size(), failed);
    return failed;
}
