// Command-line front end: verification suites, convergence sweeps, Bogoliubov
// tables and the wavepacket Doppler experiment.

#include <cstdlib>
#include <filesystem>
#include <iostream>

#include "CLI11.hpp"
#include "confock/confmap.hpp"
#include "confock/suites.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

void apply_thread_env() {
#ifdef _OPENMP
    if (const char* env = std::getenv("CONFOCK_THREADS")) {
        const int n = std::atoi(env);
        if (n > 0) omp_set_num_threads(n);
    }
#endif
}

confock::SuiteConfig load_config(const std::string& path) {
    if (path.empty()) return confock::SuiteConfig{};
    return confock::parse_config_file(path);
}

void print_summary(const confock::VerificationReport& rep) {
    int passed = 0;
    for (const auto& r : rep.records) {
        std::cout << (r.pass ? "PASS " : "FAIL ") << r.check_id << "  rel_err=" << r.rel_err;
        if (r.slope) std::cout << "  slope=" << *r.slope;
        std::cout << "\n";
        passed += r.pass ? 1 : 0;
    }
    std::cout << passed << "/" << rep.records.size() << " checks passed ("
              << rep.total_ms / 1000.0 << " s)\n";
}

}  // namespace

int main(int argc, char** argv) {
    apply_thread_env();
    CLI::App app{"confock: conformal transformations of a discretized massless field"};
    app.require_subcommand(1);

    std::string config_path, out_dir_cli;
    std::vector<std::string> suites_cli;

    auto* verify = app.add_subcommand("verify", "run verification suites");
    verify->add_option("--config", config_path, "config file");
    verify->add_option("--suite", suites_cli, "suite selection (repeatable)");
    verify->add_option("--out", out_dir_cli, "output directory");

    auto* conv = app.add_subcommand("converge", "run refinement sweeps, emit CSV");
    std::string sweep_arg;
    conv->add_option("--config", config_path, "config file");
    conv->add_option("--sweep", sweep_arg, "comma-separated mode counts, e.g. 16,32,64");
    conv->add_option("--out", out_dir_cli, "output directory");

    auto* bog = app.add_subcommand("bogoliubov", "alpha/beta magnitude tables for a map");
    std::string map_spec = "rindler:a=1.0";
    std::string bog_out = "bogoliubov.csv";
    bog->add_option("--map", map_spec, "map spec, e.g. translation:b=1.5 or rindler:a=1.0");
    bog->add_option("--out", bog_out, "CSV output path");

    auto* dop = app.add_subcommand("doppler", "wavepacket Doppler experiment");
    double u0 = 1.5, sigma = 1.0, eps = 1e-3;
    dop->add_option("--u0", u0, "packet center");
    dop->add_option("--sigma", sigma, "packet spread in u");
    dop->add_option("--eps", eps, "perturbation strength");
    dop->add_option("--config", config_path, "config file");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*verify) {
            confock::SuiteConfig cfg = load_config(config_path);
            if (!suites_cli.empty()) cfg.suites = suites_cli;
            if (!out_dir_cli.empty()) cfg.out_dir = out_dir_cli;
            const confock::VerificationReport rep = confock::run_suite(cfg);
            std::filesystem::create_directories(cfg.out_dir);
            const std::string path = cfg.out_dir + "/report.json";
            confock::write_text_file(path, rep.to_json());
            print_summary(rep);
            std::cout << "report written to " << path << "\n";
            return rep.all_pass() ? 0 : 1;
        }
        if (*conv) {
            confock::SuiteConfig cfg = load_config(config_path);
            if (!out_dir_cli.empty()) cfg.out_dir = out_dir_cli;
            if (!sweep_arg.empty()) {
                cfg.sweep_modes.clear();
                std::stringstream ss(sweep_arg);
                std::string item;
                while (std::getline(ss, item, ',')) cfg.sweep_modes.push_back(std::stoi(item));
            }
            cfg.validate();
            const auto rows = confock::converge(cfg);
            std::filesystem::create_directories(cfg.out_dir);
            const std::string path = cfg.out_dir + "/converge.csv";
            confock::write_text_file(path, confock::sweep_csv(rows));
            std::cout << confock::sweep_csv(rows);
            std::cout << "sweep written to " << path << "\n";
            return 0;
        }
        if (*bog) {
            const confock::ConformalMap map = confock::parse_map_spec(map_spec);
            std::vector<double> freqs;
            for (int j = 0; j < 24; ++j) freqs.push_back(0.5 + 0.25 * j);
            confock::WindowedDomain window{map.u_min, map.u_max, 0.0, 0.0};
            const double span = map.u_max - map.u_min;
            window.taper_lo = (map.kind == confock::MapKind::Rindler) ? 0.02 * span : 0.27 * span;
            window.taper_hi = (map.kind == confock::MapKind::Rindler) ? 0.9 * span : 0.27 * span;
            if (map.kind == confock::MapKind::Rindler)
                for (auto& w : freqs) w *= 0.25;  // reach the thermal decade
            const confock::BogoliubovPair bp =
                confock::bogoliubov(map, freqs, freqs, window, {});
            std::ostringstream os;
            os.precision(10);
            os << "# map=" << map.describe() << " window=[" << window.lo << "," << window.hi
               << "] tapers=(" << window.taper_lo << "," << window.taper_hi
               << ") nodes<=" << bp.nodes << "\n";
            os << "omega_bar,omega,abs_alpha,abs_beta,alpha_err,beta_err\n";
            for (int i = 0; i < bp.alpha.rows(); ++i)
                for (int k = 0; k < bp.alpha.cols(); ++k)
                    os << freqs[i] << "," << freqs[k] << "," << std::abs(bp.alpha(i, k)) << ","
                       << std::abs(bp.beta(i, k)) << "," << bp.alpha_err(i, k) << ","
                       << bp.beta_err(i, k) << "\n";
            confock::write_text_file(bog_out, os.str());
            std::cout << "alpha/beta table written to " << bog_out << "\n";
            return 0;
        }
        if (*dop) {
            confock::SuiteConfig cfg = load_config(config_path);
            cfg.packet_u0 = u0;
            cfg.packet_sigma_u = sigma;
            cfg.doppler_eps = eps;
            cfg.suites = {"doppler"};
            const confock::VerificationReport rep = confock::run_suite(cfg);
            print_summary(rep);
            return rep.all_pass() ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
