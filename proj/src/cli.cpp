#include "arstat/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "arstat/error.hpp"
#include "arstat/kernels.hpp"

namespace arstat {

namespace {

constexpr std::pair<const char*, Command> kCommands[] = {
    {"build", Command::build},         {"verify", Command::verify},
    {"spectrum", Command::spectrum},   {"coherent", Command::coherent},
    {"measure-check", Command::measure_check}, {"robertson", Command::robertson},
};

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string single_row_csv(const std::vector<std::pair<std::string, std::string>>& cells) {
    std::string head, row;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) {
            head += ',';
            row += ',';
        }
        head += cells[i].first;
        row += cells[i].second;
    }
    return head + "\n" + row + "\n";
}

std::string omega_cell(const std::vector<cplx>& omega) {
    std::string s;
    for (std::size_t i = 0; i < omega.size(); ++i) {
        if (i) s += ';';
        s += format_double(omega[i].real()) + (omega[i].imag() < 0 ? "" : "+") + format_double(omega[i].imag()) + "i";
    }
    return s;
}

RepSpec with_cap(RepSpec spec, int cap) {
    spec.n_max = cap;
    spec.validate();
    return spec;
}

void require_bosonic(const RunConfig& c) {
    if (!c.spec.bosonic()) throw ConfigError(std::string(to_string(c.command)) + " requires s=+1");
    if (c.omega.size() != static_cast<std::size_t>(c.spec.r))
        throw ConfigError("\"omega\" must list one complex value per mode");
}

int coherent_cap(const RunConfig& c) { return c.degree_cap.value_or(c.spec.n_max.value_or(40)); }

RunResult run_build(const RunConfig& c) {
    const Representation rep(c.spec);
    RunResult res;
    if (c.format == Format::csv) {
        res.report = basis_csv(rep.basis());
        return res;
    }
    json ops = json::array();
    for (int i = 0; i < rep.modes(); ++i) {
        const std::string m = std::to_string(i + 1);
        ops.push_back({{"name", "a-" + m}, {"nnz", rep.lowering(i).nnz()}});
        ops.push_back({{"name", "a+" + m}, {"nnz", rep.raising(i).nnz()}});
        ops.push_back({{"name", "h" + m}, {"nnz", rep.mode_hamiltonian(i).nnz()}});
    }
    json basis = json::array();
    for (const auto& n : rep.basis()) basis.push_back(n.values());
    json j;
    j["spec"] = to_json(c.spec);
    j["k0"] = c.spec.k0();
    j["dimension"] = rep.dim();
    j["zero_point"] = rep.zero_point();
    j["literal_zero_point"] = rep.literal_zero_point();
    j["mode_hamiltonian_offset"] = mode_hamiltonian_offset(c.spec);
    j["operators"] = ops;
    j["basis"] = basis;
    res.report = dump(j);
    return res;
}

std::vector<ResidualReport> bose_limit_reports(const RunConfig& c) {
    // Single excitation in mode 1, k doubled three times.
    MultiIndex n(static_cast<std::size_t>(c.spec.r));
    n[0] = 1;
    if (!admissible(c.spec, n) || n.total() > c.spec.max_total()) return {};
    const auto pts = check_bose_limit(c.spec, {c.spec.k, 2 * c.spec.k, 4 * c.spec.k, 8 * c.spec.k}, n, 0);
    double worst = 0.0;
    for (std::size_t j = 1; j < pts.size(); ++j) {
        if (pts[j - 1].deviation == 0.0) {
            worst = std::max(worst, pts[j].deviation == 0.0 ? 0.0 : 1.0);
            continue;
        }
        const double ratio = pts[j].deviation / pts[j - 1].deviation;
        worst = std::max(worst, std::abs(ratio - 0.5) / 0.5);
    }
    return {{"bose_limit[a-1]", worst, Subspace::full, c.tol("bose_ratio")}};
}

RunResult run_verify(const RunConfig& c) {
    const Representation rep(c.spec);
    auto reports = run_verification(rep, {c.tol("exact"), c.tol("interior")});
    for (auto& b : bose_limit_reports(c)) reports.push_back(std::move(b));

    RunResult res;
    for (const auto& r : reports)
        if (!r.pass()) res.failures.push_back(r.relation_id);
    res.status = res.failures.empty() ? 0 : 1;
    if (c.format == Format::csv) {
        res.report = verification_csv(reports);
    } else {
        json arr = json::array();
        for (const auto& r : reports) arr.push_back(to_json(r));
        res.report = dump(arr);
    }
    return res;
}

RunResult run_spectrum(const RunConfig& c) {
    const Representation rep(c.spec);
    const auto check = check_spectrum(rep, {c.tol("exact"), c.tol("interior")});
    RunResult res;
    if (!check.pass()) res.failures.push_back(check.relation_id);
    res.status = res.failures.empty() ? 0 : 1;
    res.report = c.format == Format::csv ? spectrum_csv(rep) : dump(spectrum_json(rep));
    return res;
}

RunResult run_coherent(const RunConfig& c) {
    require_bosonic(c);
    const int cap = coherent_cap(c);
    const CoherentState cs = coherent_state(c.omega, c.spec.k, cap, c.tol("coherent_tail"));
    const Representation rep(with_cap(c.spec, cap));
    const auto psi = embed(cs, rep.basis());

    RunResult res;
    std::vector<double> residuals, bounds;
    for (int i = 0; i < rep.modes(); ++i) {
        auto diff = rep.lowering(i).apply(psi);
        for (std::size_t j = 0; j < diff.size(); ++j) diff[j] -= cs.omega[static_cast<std::size_t>(i)] * psi[j];
        residuals.push_back(kernels::norm(diff));
        bounds.push_back(cs.residual_bound(i));
        if (residuals.back() > bounds.back()) res.failures.push_back("eigenstate[a-" + std::to_string(i + 1) + "]");
    }
    res.status = res.failures.empty() ? 0 : 1;
    if (c.format == Format::csv) {
        res.report = single_row_csv({{"omega", omega_cell(cs.omega)},
                                     {"k", std::to_string(cs.k)},
                                     {"degree_cap", std::to_string(cs.degree_cap)},
                                     {"norm_sq", format_double(cs.norm_sq)},
                                     {"tail_bound", format_double(cs.tail_bound)}});
    } else {
        json j = to_json(cs);
        j["eigen_residuals"] = residuals;
        j["residual_bounds"] = bounds;
        j["pass"] = res.failures.empty();
        res.report = dump(j);
    }
    return res;
}

RunResult run_measure(const RunConfig& c) {
    MomentConfig mc;
    mc.r_cut = c.r_cut;
    mc.tail_tol = c.tol("moment_tail");
    const auto reports = moment_batch(c.spec.k, c.spec.r, c.moment_max_total, mc);
    RunResult res;
    for (const auto& m : reports)
        if (!(m.rel_error <= c.tol("moment"))) res.failures.push_back("moment" + m.n.to_string());
    res.status = res.failures.empty() ? 0 : 1;
    if (c.format == Format::csv) {
        res.report = moments_csv(reports);
    } else {
        json arr = json::array();
        for (const auto& m : reports) arr.push_back(to_json(m));
        res.report = dump(arr);
    }
    return res;
}

RunResult run_robertson(const RunConfig& c) {
    require_bosonic(c);
    const int cap = coherent_cap(c);
    const CoherentState cs = coherent_state(c.omega, c.spec.k, cap, c.tol("coherent_tail"));
    const Representation rep(with_cap(c.spec, cap));
    const auto report = saturation_check(rep, cs, {c.tol("robertson_block"), c.tol("robertson_gap")});

    RunResult res;
    if (!report.pass()) res.failures.push_back(std::string("robertson[") + to_string(report.status) + "]");
    res.status = res.failures.empty() ? 0 : 1;
    if (c.format == Format::csv) {
        res.report = single_row_csv({{"omega", omega_cell(report.omega)},
                                     {"det_sigma", format_double(report.det_sigma)},
                                     {"det_c", format_double(report.det_c)},
                                     {"rel_gap", format_double(report.rel_gap)},
                                     {"block_residual", format_double(report.blocks.max())},
                                     {"status", to_string(report.status)}});
    } else {
        res.report = dump(to_json(report));
    }
    return res;
}

}  // namespace

std::optional<Command> parse_command(std::string_view name) {
    for (const auto& [n, c] : kCommands)
        if (name == n) return c;
    return std::nullopt;
}

const char* to_string(Command c) noexcept {
    for (const auto& [n, cmd] : kCommands)
        if (cmd == c) return n;
    return "?";
}

std::map<std::string, double> default_tolerances() {
    return {{"exact", 1e-12},         {"interior", 1e-10},        {"moment", 1e-6},
            {"moment_tail", 1e-12},   {"coherent_tail", 1e-12},   {"robertson_block", 1e-8},
            {"robertson_gap", 1e-8},  {"bose_ratio", 0.2}};
}

double RunConfig::tol(const std::string& name) const {
    auto it = tolerances.find(name);
    if (it == tolerances.end()) throw ConfigError("unknown tolerance \"" + name + "\"");
    return it->second;
}

RunConfig make_run_config(Command command, const json& config, std::optional<std::string> output_path,
                          std::optional<Format> format, const std::vector<std::string>& tol_overrides) {
    RunConfig c;
    c.command = command;
    c.spec = spec_from_json(config);
    c.output_path = std::move(output_path);
    c.format = format.value_or(command == Command::spectrum || command == Command::measure_check ? Format::csv
                                                                                                 : Format::json);

    auto set_tol = [&c](const std::string& name, double value) {
        if (!c.tolerances.contains(name)) throw ConfigError("unknown tolerance \"" + name + "\"");
        if (!(value > 0.0) || !std::isfinite(value)) throw ConfigError("tolerance \"" + name + "\" must be positive");
        c.tolerances[name] = value;
    };
    if (config.contains("tolerances")) {
        const auto& t = config.at("tolerances");
        if (!t.is_object()) throw ConfigError("\"tolerances\" must be an object");
        for (const auto& [name, value] : t.items()) {
            if (!value.is_number()) throw ConfigError("tolerance \"" + name + "\" must be a number");
            set_tol(name, value.get<double>());
        }
    }
    for (const auto& o : tol_overrides) {
        const auto eq = o.find('=');
        if (eq == std::string::npos) throw ConfigError("--tol expects name=value, got \"" + o + "\"");
        double value = 0.0;
        try {
            std::size_t used = 0;
            value = std::stod(o.substr(eq + 1), &used);
            if (used != o.size() - eq - 1) throw std::invalid_argument("trailing characters");
        } catch (const std::exception&) {
            throw ConfigError("--tol value is not a number: \"" + o + "\"");
        }
        set_tol(o.substr(0, eq), value);
    }

    if (config.contains("omega")) c.omega = omega_from_json(config.at("omega"));
    if (config.contains("degree_cap")) {
        if (!config.at("degree_cap").is_number_integer() || config.at("degree_cap").get<int>() < 1)
            throw ConfigError("\"degree_cap\" must be a positive integer");
        c.degree_cap = config.at("degree_cap").get<int>();
    }
    if (config.contains("moment_max_total")) {
        if (!config.at("moment_max_total").is_number_integer() || config.at("moment_max_total").get<int>() < 0)
            throw ConfigError("\"moment_max_total\" must be a non-negative integer");
        c.moment_max_total = config.at("moment_max_total").get<int>();
    }
    if (config.contains("r_cut") && !config.at("r_cut").is_null()) {
        if (!config.at("r_cut").is_number() || !(config.at("r_cut").get<double>() > 0.0))
            throw ConfigError("\"r_cut\" must be a positive number");
        c.r_cut = config.at("r_cut").get<double>();
    }
    if ((command == Command::coherent || command == Command::robertson) && c.omega.empty())
        throw ConfigError(std::string(to_string(command)) + " requires \"omega\" in the config");
    return c;
}

RunResult execute(const RunConfig& config) {
    switch (config.command) {
        case Command::build: return run_build(config);
        case Command::verify: return run_verify(config);
        case Command::spectrum: return run_spectrum(config);
        case Command::coherent: return run_coherent(config);
        case Command::measure_check: return run_measure(config);
        case Command::robertson: return run_robertson(config);
    }
    throw ConfigError("unknown command");
}

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Fock representations of generalized A_r statistics: build, verify, analyse"};
    app.require_subcommand(1);

    std::string config_path;
    std::optional<std::string> out_path;
    std::string format_name;
    std::vector<std::string> tols;

    for (const auto& [name, cmd] : kCommands) {
        auto* sub = app.add_subcommand(name);
        sub->add_option("--config", config_path, "JSON config (representation spec plus command inputs)")->required();
        sub->add_option("--out", out_path, "report path; stdout when omitted");
        sub->add_option("--format", format_name, "json or csv")->check(CLI::IsMember({"json", "csv"}));
        sub->add_option("--tol", tols, "tolerance override name=value (repeatable)");
    }

    std::vector<std::string> argv_storage = args;
    std::reverse(argv_storage.begin(), argv_storage.end());  // CLI11 consumes a reversed vector
    try {
        app.parse(argv_storage);
    } catch (const CLI::ParseError& e) {
        std::ostringstream o, eo;
        const int code = app.exit(e, o, eo);
        out << o.str();
        err << eo.str();
        return code == 0 ? 0 : 2;
    }

    Command command = Command::build;
    for (const auto* sub : app.get_subcommands()) command = *parse_command(sub->get_name());

    try {
        std::ifstream in(config_path);
        if (!in) throw ConfigError("cannot read config file " + config_path);
        json doc;
        try {
            doc = json::parse(in);
        } catch (const json::parse_error& e) {
            throw ConfigError(std::string("malformed JSON config: ") + e.what());
        }
        std::optional<Format> fmt;
        if (!format_name.empty()) fmt = format_name == "csv" ? Format::csv : Format::json;
        const RunConfig cfg = make_run_config(command, doc, out_path, fmt, tols);
        const RunResult res = execute(cfg);

        if (cfg.output_path)
            write_atomically(*cfg.output_path, res.report);
        else
            out << res.report;
        if (res.status != 0) {
            err << "failed checks:";
            for (const auto& f : res.failures) err << ' ' << f;
            err << '\n';
        }
        return res.status;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
}

}  // namespace arstat
