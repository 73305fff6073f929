#ifndef CONFOCK_SUITES_HPP
#define CONFOCK_SUITES_HPP

#include "confock/report.hpp"

namespace confock {

std::string version_string();

std::vector<CheckRecord> suite_grid(const SuiteConfig& cfg);
std::vector<CheckRecord> suite_quadform(const SuiteConfig& cfg);
std::vector<CheckRecord> suite_dichotomy(const SuiteConfig& cfg);
std::vector<CheckRecord> suite_central(const SuiteConfig& cfg);
std::vector<CheckRecord> suite_fock(const SuiteConfig& cfg);
std::vector<CheckRecord> suite_phase(const SuiteConfig& cfg);
std::vector<CheckRecord> suite_position(const SuiteConfig& cfg);
std::vector<CheckRecord> suite_dual(const SuiteConfig& cfg);
std::vector<CheckRecord> suite_convergence(const SuiteConfig& cfg);
std::vector<CheckRecord> suite_bogoliubov(const SuiteConfig& cfg);
std::vector<CheckRecord> suite_doppler(const SuiteConfig& cfg);
std::vector<CheckRecord> suite_oracle(const SuiteConfig& cfg);

/// Convergence sweeps as CSV rows (error vs d_omega with fitted slope).
std::vector<SweepRow> converge(const SuiteConfig& cfg);

VerificationReport run_suite(const SuiteConfig& cfg);

}  // namespace confock

#endif
