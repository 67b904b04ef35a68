// SPDX-License-Identifier: Apache-2.0
//
// isac-perf  Performance analysis toolkit for secure MIMO ISAC downlinks
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "isac/config.hpp"

#include <cmath>
#include <complex>
#include <fstream>
#include <map>
#include <sstream>

namespace isac {

namespace {

std::vector<double> linear_grid(double lo, double hi, int points) {
    std::vector<double> grid(points);
    for (int i = 0; i < points; ++i)
        grid[i] = lo + (hi - lo) * static_cast<double>(i) / (points - 1);
    return grid;
}

std::vector<double> log_grid(double lo, double hi, int points) {
    std::vector<double> grid(points);
    const double llo = std::log(lo), lhi = std::log(hi);
    for (int i = 0; i < points; ++i)
        grid[i] =
            std::exp(llo + (lhi - llo) * static_cast<double>(i) / (points - 1));
    return grid;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

double to_double(std::string_view key, std::string_view value) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(std::string(value), &pos);
        if (pos != value.size()) throw std::invalid_argument("trailing chars");
        return v;
    } catch (const std::exception&) {
        throw ConfigError("config: bad numeric value for '" + std::string(key) +
                          "': '" + std::string(value) + "'");
    }
}

std::int64_t to_int(std::string_view key, std::string_view value) {
    const double v = to_double(key, value);
    if (v != std::floor(v))
        throw ConfigError("config: expected integer for '" + std::string(key) + "'");
    return static_cast<std::int64_t>(v);
}

std::vector<double> to_list(std::string_view key, std::string_view value) {
    std::vector<double> out;
    std::string item;
    std::stringstream ss{std::string(value)};
    while (std::getline(ss, item, ',')) {
        out.push_back(to_double(key, trim(item)));
    }
    if (out.empty())
        throw ConfigError("config: empty list for '" + std::string(key) + "'");
    return out;
}

}  // namespace

ExperimentConfig::ExperimentConfig() {
    tau_grid = linear_grid(0.05, 1.0, 20);
    eps_grid = log_grid(0.5, 5000.0, 40);
}

void ExperimentConfig::validate() const {
    try {
        params.validate();
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
    if (trials < 1) throw ConfigError("config: trials must be >= 1");
    auto check_grid = [](const std::vector<double>& g, const char* name) {
        if (g.size() < 2)
            throw ConfigError(std::string("config: ") + name +
                              " needs at least 2 points");
        for (std::size_t i = 1; i < g.size(); ++i)
            if (!(g[i] > g[i - 1]))
                throw ConfigError(std::string("config: ") + name +
                                  " must be strictly increasing");
    };
    check_grid(tau_grid, "tau grid");
    check_grid(eps_grid, "eps grid");
    if (tau_grid.front() < 0.0 || tau_grid.back() > 1.0)
        throw ConfigError("config: tau grid must lie in [0, 1]");
    if (eps_grid.front() <= 0.0)
        throw ConfigError("config: eps grid must be positive");
}

std::string_view mode_name(AveragingMode mode) {
    return mode == AveragingMode::verbatim ? "paper-verbatim" : "exact-truncation";
}

AveragingMode mode_from_name(std::string_view name) {
    if (name == "paper-verbatim") return AveragingMode::verbatim;
    if (name == "exact-truncation") return AveragingMode::exact_truncation;
    throw ConfigError("config: unknown averaging mode '" + std::string(name) +
                      "' (use paper-verbatim or exact-truncation)");
}

ExperimentConfig parse_config_text(std::string_view text) {
    ExperimentConfig cfg;
    std::map<std::string, std::string, std::less<>> kv;

    std::size_t line_no = 0;
    std::stringstream stream{std::string(text)};
    std::string line;
    while (std::getline(stream, line)) {
        ++line_no;
        std::string_view sv = line;
        if (const auto hash = sv.find('#'); hash != std::string_view::npos)
            sv = sv.substr(0, hash);
        sv = trim(sv);
        if (sv.empty()) continue;
        const auto eq = sv.find('=');
        if (eq == std::string_view::npos)
            throw ConfigError("config: line " + std::to_string(line_no) +
                              " is not 'key = value'");
        const std::string key{trim(sv.substr(0, eq))};
        const std::string value{trim(sv.substr(eq + 1))};
        if (key.empty() || value.empty())
            throw ConfigError("config: line " + std::to_string(line_no) +
                              " has an empty key or value");
        if (!kv.emplace(key, value).second)
            throw ConfigError("config: duplicate key '" + key + "'");
    }

    std::map<std::string, double> gain_mag{
        {"c1", std::abs(cfg.params.c1)},
        {"c2", std::abs(cfg.params.c2)},
        {"c3", std::abs(cfg.params.c3)},
        {"c4", std::abs(cfg.params.c4)}};
    std::map<std::string, double> gain_phase{
        {"c1", 0.0}, {"c2", 0.0}, {"c3", 0.0}, {"c4", 0.0}};

    struct GridSpec {
        double lo, hi;
        std::int64_t points;
        bool seen = false;
    };
    GridSpec tau_spec{cfg.tau_grid.front(), cfg.tau_grid.back(),
                      static_cast<std::int64_t>(cfg.tau_grid.size())};
    GridSpec eps_spec{cfg.eps_grid.front(), cfg.eps_grid.back(),
                      static_cast<std::int64_t>(cfg.eps_grid.size())};
    bool tau_list = false, eps_list = false;

    for (const auto& [key, value] : kv) {
        if (key == "n_tx") cfg.params.n_tx = static_cast<int>(to_int(key, value));
        else if (key == "m_rx") cfg.params.m_rx = static_cast<int>(to_int(key, value));
        else if (key == "n_eav") cfg.params.n_eav = static_cast<int>(to_int(key, value));
        else if (key == "frame_len") cfg.params.frame_len = static_cast<int>(to_int(key, value));
        else if (key == "power") cfg.params.power = to_double(key, value);
        else if (key == "tau") cfg.params.tau = to_double(key, value);
        else if (key == "sigma_u") cfg.params.sigma_u = to_double(key, value);
        else if (key == "sigma_r") cfg.params.sigma_r = to_double(key, value);
        else if (key == "c1" || key == "c2" || key == "c3" || key == "c4")
            gain_mag[key] = to_double(key, value);
        else if (key == "c1_phase" || key == "c2_phase" || key == "c3_phase" ||
                 key == "c4_phase")
            gain_phase[key.substr(0, 2)] = to_double(key, value);
        else if (key == "alpha_mag") cfg.params.alpha_mag = to_double(key, value);
        else if (key == "phase_alpha") cfg.params.phase_alpha = to_double(key, value);
        else if (key == "phase_beta") cfg.params.phase_beta = to_double(key, value);
        else if (key == "delta") cfg.params.delta = to_double(key, value);
        else if (key == "seed") cfg.seed = static_cast<std::uint64_t>(to_int(key, value));
        else if (key == "trials") cfg.trials = static_cast<std::size_t>(to_int(key, value));
        else if (key == "mean_trials") cfg.mean_trials = static_cast<std::size_t>(to_int(key, value));
        else if (key == "clt_samples") cfg.clt_samples = static_cast<std::size_t>(to_int(key, value));
        else if (key == "quad_samples") cfg.quad_samples = static_cast<std::size_t>(to_int(key, value));
        else if (key == "averaging_mode") cfg.mode = mode_from_name(value);
        else if (key == "sweep_var") {
            if (value == "tau") cfg.sweep_var = SweepVar::tau;
            else if (value == "epsilon") cfg.sweep_var = SweepVar::epsilon;
            else throw ConfigError("config: sweep_var must be tau or epsilon");
        }
        else if (key == "out") cfg.out_path = value;
        else if (key == "tau_grid") { cfg.tau_grid = to_list(key, value); tau_list = true; }
        else if (key == "eps_grid") { cfg.eps_grid = to_list(key, value); eps_list = true; }
        else if (key == "tau_grid_min") { tau_spec.lo = to_double(key, value); tau_spec.seen = true; }
        else if (key == "tau_grid_max") { tau_spec.hi = to_double(key, value); tau_spec.seen = true; }
        else if (key == "tau_grid_points") { tau_spec.points = to_int(key, value); tau_spec.seen = true; }
        else if (key == "eps_grid_min") { eps_spec.lo = to_double(key, value); eps_spec.seen = true; }
        else if (key == "eps_grid_max") { eps_spec.hi = to_double(key, value); eps_spec.seen = true; }
        else if (key == "eps_grid_points") { eps_spec.points = to_int(key, value); eps_spec.seen = true; }
        else throw ConfigError("config: unknown key '" + key + "'");
    }

    cfg.params.c1 = std::polar(gain_mag["c1"], gain_phase["c1"]);
    cfg.params.c2 = std::polar(gain_mag["c2"], gain_phase["c2"]);
    cfg.params.c3 = std::polar(gain_mag["c3"], gain_phase["c3"]);
    cfg.params.c4 = std::polar(gain_mag["c4"], gain_phase["c4"]);

    if (tau_spec.seen && !tau_list) {
        if (tau_spec.points < 2) throw ConfigError("config: tau_grid_points must be >= 2");
        cfg.tau_grid = linear_grid(tau_spec.lo, tau_spec.hi,
                                   static_cast<int>(tau_spec.points));
    }
    if (eps_spec.seen && !eps_list) {
        if (eps_spec.points < 2) throw ConfigError("config: eps_grid_points must be >= 2");
        if (!(eps_spec.lo > 0.0)) throw ConfigError("config: eps_grid_min must be positive");
        cfg.eps_grid = log_grid(eps_spec.lo, eps_spec.hi,
                                static_cast<int>(eps_spec.points));
    }

    cfg.validate();
    return cfg;
}

ExperimentConfig load_config(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("config: cannot open '" + path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_config_text(buffer.str());
}

}  // namespace isac
