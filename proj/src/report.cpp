#include "confock/report.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace confock {

void SuiteConfig::validate() const {
    if (modes < 4) throw std::invalid_argument("config: modes must be >= 4");
    if (!(d_omega > 0.0)) throw std::invalid_argument("config: d_omega must be positive");
    if (n_max < 0) throw std::invalid_argument("config: n_max must be >= 0");
    if (stencil_order != 2 && stencil_order != 4)
        throw std::invalid_argument("config: stencil_order must be 2 or 4");
    if (phase_convention != "sg" && phase_convention != "pb")
        throw std::invalid_argument("config: phase_convention must be sg or pb");
    if (!(tol_exact_rel > 0.0) || !(quad_abs_tol > 0.0))
        throw std::invalid_argument("config: tolerances must be positive");
    if (!(slope_min < slope_max)) throw std::invalid_argument("config: bad slope window");
    for (size_t i = 1; i < sweep_modes.size(); ++i)
        if (sweep_modes[i] <= sweep_modes[i - 1])
            throw std::invalid_argument("config: sweep schedule must be strictly refining");
}

std::string SuiteConfig::canonical_text() const {
    std::ostringstream os;
    os.precision(17);
    os << "modes=" << modes << ";d_omega=" << d_omega << ";n_max=" << n_max
       << ";stencil_order=" << stencil_order << ";phase=" << phase_convention << ";pb_s=" << pb_s
       << ";hbar=" << hbar << ";u0=" << packet_u0 << ";sigma_u=" << packet_sigma_u
       << ";omega_c=" << packet_omega_c << ";eps=" << doppler_eps << ";tol=" << tol_exact_rel
       << ";slopes=" << slope_min << "," << slope_max << ";quad=" << quad_abs_tol << ";sweep=";
    for (int m : sweep_modes) os << m << ",";
    os << ";omega_max=" << sweep_omega_max << ";seed=" << seed << ";suites=";
    for (const auto& s : suites) os << s << ",";
    return os.str();
}

SuiteConfig parse_config_text(const std::string& text) {
    SuiteConfig cfg;
    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    auto trim = [](std::string s) {
        const char* ws = " \t\r\n";
        const auto b = s.find_first_not_of(ws);
        if (b == std::string::npos) return std::string();
        const auto e = s.find_last_not_of(ws);
        return s.substr(b, e - b + 1);
    };
    while (std::getline(is, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config parse error at line " + std::to_string(lineno) +
                                        ": expected key = value");
        const std::string key = trim(line.substr(0, eq));
        const std::string val = trim(line.substr(eq + 1));
        auto as_list = [&](auto push) {
            std::stringstream ss(val);
            std::string item;
            while (std::getline(ss, item, ',')) {
                item = trim(item);
                if (!item.empty()) push(item);
            }
        };
        try {
            if (key == "modes") cfg.modes = std::stoi(val);
            else if (key == "d_omega") cfg.d_omega = std::stod(val);
            else if (key == "n_max") cfg.n_max = std::stoi(val);
            else if (key == "stencil_order") cfg.stencil_order = std::stoi(val);
            else if (key == "phase_convention") cfg.phase_convention = val;
            else if (key == "pb_s") cfg.pb_s = std::stoi(val);
            else if (key == "hbar") cfg.hbar = std::stod(val);
            else if (key == "packet_u0") cfg.packet_u0 = std::stod(val);
            else if (key == "packet_sigma_u") cfg.packet_sigma_u = std::stod(val);
            else if (key == "packet_omega_c") cfg.packet_omega_c = std::stod(val);
            else if (key == "doppler_eps") cfg.doppler_eps = std::stod(val);
            else if (key == "tol_exact_rel") cfg.tol_exact_rel = std::stod(val);
            else if (key == "slope_min") cfg.slope_min = std::stod(val);
            else if (key == "slope_max") cfg.slope_max = std::stod(val);
            else if (key == "quad_abs_tol") cfg.quad_abs_tol = std::stod(val);
            else if (key == "sweep_modes") {
                cfg.sweep_modes.clear();
                as_list([&](const std::string& s) { cfg.sweep_modes.push_back(std::stoi(s)); });
            } else if (key == "sweep_omega_max") cfg.sweep_omega_max = std::stod(val);
            else if (key == "suites") {
                cfg.suites.clear();
                as_list([&](const std::string& s) { cfg.suites.push_back(s); });
            } else if (key == "out_dir") cfg.out_dir = val;
            else if (key == "seed") cfg.seed = std::stoull(val);
            else if (key == "dim_cap") cfg.dim_cap = std::stoll(val);
            else
                throw std::invalid_argument("unknown key '" + key + "'");
        } catch (const std::invalid_argument& e) {
            throw std::invalid_argument("config parse error at line " + std::to_string(lineno) +
                                        ": " + e.what());
        }
    }
    cfg.validate();
    return cfg;
}

SuiteConfig parse_config_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::invalid_argument("config: cannot open " + path);
    std::stringstream ss;
    ss << f.rdbuf();
    return parse_config_text(ss.str());
}

std::uint64_t fnv1a_hash(const std::string& s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

bool VerificationReport::all_pass() const {
    for (const auto& r : records)
        if (!r.pass) return false;
    return true;
}

std::string VerificationReport::to_json() const {
    nlohmann::ordered_json j;
    j["schema"] = "confock-report-v1";
    j["environment"] = {{"version", version}, {"config_hash", config_hash}, {"seed", seed}};
    j["runtime"] = {{"total_ms", total_ms}, {"threads", threads}};
    j["records"] = nlohmann::ordered_json::array();
    for (const auto& r : records) {
        nlohmann::ordered_json rec;
        rec["check_id"] = r.check_id;
        rec["paper_ref"] = r.ref;
        rec["computed"] = r.computed;
        rec["expected"] = r.expected;
        rec["abs_err"] = r.abs_err;
        rec["rel_err"] = r.rel_err;
        if (r.slope)
            rec["slope"] = *r.slope;
        else
            rec["slope"] = nullptr;
        rec["pass"] = r.pass;
        rec["runtime_ms"] = r.runtime_ms;
        j["records"].push_back(rec);
    }
    return j.dump(2) + "\n";
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot write " + path);
    f << content;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
    std::ostringstream os;
    os.precision(12);
    os << "check_id,modes,d_omega,error,slope\n";
    for (const auto& r : rows)
        os << r.check_id << "," << r.modes << "," << r.d_omega << "," << r.error << ","
           << r.slope << "\n";
    return os.str();
}

}  // namespace confock
