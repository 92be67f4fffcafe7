#include "arstat/report.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "arstat/error.hpp"

namespace arstat {

namespace {

int require_int(const json& j, const char* key) {
    if (!j.contains(key)) throw ConfigError(std::string("missing field \"") + key + "\"");
    const auto& v = j.at(key);
    if (!v.is_number_integer()) throw ConfigError(std::string("field \"") + key + "\" must be an integer");
    return v.get<int>();
}

std::optional<int> optional_int(const json& j, const char* key) {
    if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
    if (!j.at(key).is_number_integer()) throw ConfigError(std::string("field \"") + key + "\" must be an integer");
    return j.at(key).get<int>();
}

}  // namespace

RepSpec spec_from_json(const json& j) {
    if (!j.is_object()) throw ConfigError("representation spec must be a JSON object");
    RepSpec spec;
    spec.r = require_int(j, "r");
    spec.k = require_int(j, "k");
    if (j.contains("epsilon") && !j.at("epsilon").is_null()) {
        if (!j.at("epsilon").is_number()) throw ConfigError("field \"epsilon\" must be a number or null");
        spec.epsilon = j.at("epsilon").get<double>();
    }
    if (j.contains("s")) {
        spec.s = require_int(j, "s");
    } else if (spec.epsilon) {
        spec.s = sign_from_epsilon(*spec.epsilon);
    } else {
        throw ConfigError("missing field \"s\"");
    }
    if (j.contains("energies") && !j.at("energies").is_null()) {
        const auto& e = j.at("energies");
        if (!e.is_array()) throw ConfigError("field \"energies\" must be an array");
        for (const auto& v : e) {
            if (!v.is_number()) throw ConfigError("mode energies must be numbers");
            spec.energies.push_back(v.get<double>());
        }
    } else if (spec.r > 0) {
        spec.energies.assign(static_cast<std::size_t>(spec.r), 1.0);
    }
    spec.n_max = optional_int(j, "n_max");
    spec.validate();
    return spec;
}

json to_json(const RepSpec& spec) {
    json j;
    j["r"] = spec.r;
    j["s"] = spec.s;
    j["k"] = spec.k;
    j["epsilon"] = spec.epsilon ? json(*spec.epsilon) : json(nullptr);
    j["energies"] = spec.energies;
    j["n_max"] = spec.n_max ? json(*spec.n_max) : json(nullptr);
    return j;
}

json to_json(const ResidualReport& r) {
    return {{"relation_id", r.relation_id},
            {"max_residual", r.max_residual},
            {"subspace", to_string(r.subspace)},
            {"pass", r.pass()},
            {"tolerance", r.tolerance}};
}

json omega_to_json(const std::vector<cplx>& omega) {
    json arr = json::array();
    for (const auto& w : omega) arr.push_back({w.real(), w.imag()});
    return arr;
}

std::vector<cplx> omega_from_json(const json& j) {
    if (!j.is_array()) throw ConfigError("\"omega\" must be an array of [re, im] pairs");
    std::vector<cplx> out;
    for (const auto& w : j) {
        if (w.is_number()) {
            out.emplace_back(w.get<double>(), 0.0);
        } else if (w.is_array() && w.size() == 2 && w[0].is_number() && w[1].is_number()) {
            out.emplace_back(w[0].get<double>(), w[1].get<double>());
        } else {
            throw ConfigError("\"omega\" entries must be numbers or [re, im] pairs");
        }
    }
    return out;
}

json to_json(const CoherentState& cs) {
    return {{"omega", omega_to_json(cs.omega)},
            {"k", cs.k},
            {"degree_cap", cs.degree_cap},
            {"norm_sq", cs.norm_sq},
            {"tail_bound", cs.tail_bound}};
}

json to_json(const MomentReport& m) {
    return {{"k", m.k},         {"n", m.n.values()},         {"lhs", m.lhs},
            {"rhs", m.rhs},     {"rel_error", m.rel_error},  {"quad_nodes", m.quad_nodes},
            {"r_cut", m.r_cut}, {"tail_bound", m.tail_bound}};
}

json to_json(const RobertsonReport& r) {
    return {{"omega", omega_to_json(r.omega)},
            {"det_sigma", r.det_sigma},
            {"det_c", r.det_c},
            {"rel_gap", r.rel_gap},
            {"block_residuals",
             {{"lowering", r.blocks.lowering},
              {"raising", r.blocks.raising},
              {"upper", r.blocks.upper},
              {"lower", r.blocks.lower}}},
            {"status", to_string(r.status)},
            {"pass", r.pass()}};
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string verification_csv(const std::vector<ResidualReport>& reports) {
    std::ostringstream out;
    out << "relation_id,max_residual,subspace,pass,tolerance\n";
    for (const auto& r : reports)
        out << r.relation_id << ',' << format_double(r.max_residual) << ',' << to_string(r.subspace) << ','
            << (r.pass() ? "true" : "false") << ',' << format_double(r.tolerance) << '\n';
    return out.str();
}

std::string spectrum_csv(const Representation& rep) {
    std::ostringstream out;
    for (int i = 0; i < rep.modes(); ++i) out << "n_" << i + 1 << ',';
    out << "energy\n";
    const auto diag = rep.hamiltonian().diagonal_values();
    for (std::size_t j = 0; j < rep.dim(); ++j) {
        for (int v : rep.basis()[j].values()) out << v << ',';
        out << format_double(diag[j].real()) << '\n';
    }
    return out.str();
}

json spectrum_json(const Representation& rep) {
    json rows = json::array();
    const auto diag = rep.hamiltonian().diagonal_values();
    for (std::size_t j = 0; j < rep.dim(); ++j) rows.push_back({{"n", rep.basis()[j].values()}, {"energy", diag[j].real()}});
    return rows;
}

std::string moments_csv(const std::vector<MomentReport>& reports) {
    std::ostringstream out;
    out << "k,";
    const std::size_t r = reports.empty() ? 0 : reports.front().n.modes();
    for (std::size_t i = 0; i < r; ++i) out << "n_" << i + 1 << ',';
    out << "lhs,rhs,rel_error,quad_nodes\n";
    for (const auto& m : reports) {
        out << m.k << ',';
        for (int v : m.n.values()) out << v << ',';
        out << format_double(m.lhs) << ',' << format_double(m.rhs) << ',' << format_double(m.rel_error) << ','
            << m.quad_nodes << '\n';
    }
    return out.str();
}

std::string basis_csv(const FockBasis& basis) {
    std::ostringstream out;
    out << "index";
    for (int i = 0; i < basis.modes(); ++i) out << ",n_" << i + 1;
    out << '\n';
    for (std::size_t j = 0; j < basis.size(); ++j) {
        out << j;
        for (int v : basis[j].values()) out << ',' << v;
        out << '\n';
    }
    return out.str();
}

void write_atomically(const std::string& path, const std::string& content) {
    namespace fs = std::filesystem;
    const fs::path target(path);
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw Error("cannot open " + tmp.string() + " for writing");
        out << content;
        out.flush();
        if (!out) throw Error("failed writing " + tmp.string());
    }
    fs::rename(tmp, target);
}

}  // namespace arstat
