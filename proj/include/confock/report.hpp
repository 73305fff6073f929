#ifndef CONFOCK_REPORT_HPP
#define CONFOCK_REPORT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "confock/checks.hpp"

namespace confock {

/// Run configuration; parsed from "key = value" text, '#' comments.
struct SuiteConfig {
    int modes = 16;
    double d_omega = 0.5;
    int n_max = 4;
    int stencil_order = 2;
    std::string phase_convention = "sg";  // "sg" or "pb"
    int pb_s = 2;
    double hbar = 1.0;

    double packet_u0 = 1.5;
    double packet_sigma_u = 1.0;
    double packet_omega_c = 0.0;  // 0 -> middle of the grid
    double doppler_eps = 1e-3;

    double tol_exact_rel = 1e-12;
    double slope_min = 1.7;
    double slope_max = 2.3;
    double quad_abs_tol = 1e-8;

    std::vector<int> sweep_modes = {16, 32, 64};
    double sweep_omega_max = 8.0;  // refinement at fixed Omega_max

    std::vector<std::string> suites;  // empty -> all
    std::string out_dir = ".";
    std::uint64_t seed = 20260811;
    std::int64_t dim_cap = 200000;

    void validate() const;
    std::string canonical_text() const;
};

SuiteConfig parse_config_text(const std::string& text);
SuiteConfig parse_config_file(const std::string& path);
std::uint64_t fnv1a_hash(const std::string& s);

struct VerificationReport {
    std::vector<CheckRecord> records;
    std::string version;
    std::string config_hash;
    std::uint64_t seed = 0;
    double total_ms = 0.0;
    int threads = 1;

    bool all_pass() const;
    /// Deterministic given config+seed apart from the runtime fields.
    std::string to_json() const;
};

void write_text_file(const std::string& path, const std::string& content);

struct SweepRow {
    std::string check_id;
    int modes = 0;
    double d_omega = 0.0;
    double error = 0.0;
    double slope = 0.0;  // fitted over the whole sweep for this check
};
std::string sweep_csv(const std::vector<SweepRow>& rows);

}  // namespace confock

#endif
