// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 iff
// every criterion passes.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "arstat/algebra.hpp"
#include "arstat/bargmann.hpp"
#include "arstat/kernels.hpp"
#include "arstat/measure.hpp"
#include "arstat/quadrature.hpp"
#include "arstat/robertson.hpp"
#include "arstat/special.hpp"

using namespace arstat;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
    double worst = 0.0;

    void require(bool ok, const std::string& what) {
        if (!ok && pass) detail = what;
        pass = pass && ok;
    }
};

double worst_of(const std::vector<ResidualReport>& reports) {
    double w = 0.0;
    for (const auto& r : reports) w = std::max(w, r.max_residual);
    return w;
}

Outcome algebraic_identities() {
    Outcome o;
    for (int s : {-1, 1})
        for (int r = 1; r <= 3; ++r)
            for (int k = s < 0 ? 1 : 2; k <= 5; ++k) {
                const auto spec = s < 0 ? make_spec(r, s, k) : make_spec(r, s, k, 8);
                const Representation rep(spec);
                const Tolerances tol;
                const double limit = s < 0 ? tol.exact : tol.interior;
                std::vector<ResidualReport> all = check_same_sign_commutators(rep, tol);
                for (auto&& v : check_triple_relations(rep, tol)) all.push_back(v);
                for (auto&& v : check_heisenberg(rep, tol)) all.push_back(v);
                for (const auto& rr : all) {
                    o.worst = std::max(o.worst, rr.max_residual);
                    o.require(rr.pass() && rr.tolerance == limit,
                              rr.relation_id + " r=" + std::to_string(r) + " s=" + std::to_string(s) +
                                  " k=" + std::to_string(k));
                }
            }
    return o;
}

Outcome exclusion_and_dimension() {
    Outcome o;
    for (int r = 1; r <= 4; ++r)
        for (int k = 1; k <= 6; ++k) {
            const Representation rep(make_spec(r, -1, k));
            const std::string at = " r=" + std::to_string(r) + " k=" + std::to_string(k);
            o.require(rep.dim() == exclusion_dimension(r, k), "dimension" + at);
            const auto ex = check_exclusion(rep, true);
            o.worst = std::max(o.worst, worst_of(ex));
            o.require(!ex.empty() && worst_of(ex) == 0.0, "exclusion" + at);
        }
    return o;
}

Outcome spectrum() {
    Outcome o;
    std::mt19937 gen(314159);
    std::uniform_real_distribution<double> u(0.05, 10.0);
    for (int trial = 0; trial < 10; ++trial) {
        const int r = 1 + trial % 3;
        std::vector<double> e(static_cast<std::size_t>(r));
        for (auto& x : e) x = u(gen);
        const auto spec = trial % 2 ? make_spec(r, -1, 2 + trial % 4, std::nullopt, e) : make_spec(r, 1, 2 + trial % 3, 8, e);
        const Representation rep(spec);
        o.require(rep.hamiltonian().is_diagonal(), "H not diagonal");
        const auto d = rep.hamiltonian().diagonal_values();
        for (std::size_t j = 0; j < rep.dim(); ++j) {
            const double want = rep.energy(rep.basis()[j]);
            const double err = std::abs(d[j] - want) / std::max(want, 1.0);
            o.worst = std::max(o.worst, err);
            o.require(err <= 1e-12, "eigenvalue " + rep.basis()[j].to_string());
        }
    }
    return o;
}

Outcome bose_limit() {
    Outcome o;
    const auto pts = check_bose_limit(make_spec(1, -1, 4), {4, 8, 16, 32}, MultiIndex{1}, 0);
    for (std::size_t j = 1; j < pts.size(); ++j) {
        const double ratio = pts[j].deviation / pts[j - 1].deviation;
        const double off = std::abs(ratio - 0.5) / 0.5;
        o.worst = std::max(o.worst, off);
        o.require(off <= 0.2, "ratio at k=" + std::to_string(pts[j].k));
    }
    return o;
}

double largest(const PolynomialState& p) {
    double m = 0.0;
    for (const auto& [n, c] : p.terms()) m = std::max(m, std::abs(c));
    return m;
}

Outcome bargmann_intertwining() {
    Outcome o;
    for (int r = 1; r <= 3; ++r)
        for (int k = 2; k <= 5; ++k) {
            const Representation rep(make_spec(r, 1, k, 10));
            for (std::size_t j = 0; j < rep.dim(); ++j) {
                std::vector<cplx> v(rep.dim());
                v[j] = 1.0;
                const auto p = to_bargmann(v, rep.basis(), k);
                for (int i = 0; i < r; ++i) {
                    const auto lo_mat = to_bargmann(rep.lowering(i).apply(v), rep.basis(), k);
                    const auto lo_diff = apply_lowering_diff(p, i, k);
                    const auto n_mat = to_bargmann(rep.number(i).apply(v), rep.basis(), k);
                    const auto n_diff = apply_number_diff(p, i);
                    const double e1 = lo_diff.empty() ? max_difference(lo_mat, lo_diff)
                                                      : max_difference(lo_mat, lo_diff) / largest(lo_diff);
                    const double e2 = n_diff.empty() ? max_difference(n_mat, n_diff)
                                                     : max_difference(n_mat, n_diff) / largest(n_diff);
                    o.worst = std::max({o.worst, e1, e2});
                    o.require(e1 <= 1e-12 && e2 <= 1e-12, "monomial " + rep.basis()[j].to_string());
                }
            }
        }
    return o;
}

Outcome moment_identity() {
    Outcome o;
    for (int r = 1; r <= 2; ++r)
        for (int k = 1; k <= 4; ++k)
            for (const auto& m : moment_batch(k, r, 5)) {
                o.worst = std::max(o.worst, m.rel_error);
                o.require(m.rel_error <= 1e-6, "k=" + std::to_string(k) + " n=" + m.n.to_string());
            }
    const auto base = moment_check(1, MultiIndex{0});
    o.require(std::abs(base.lhs - 1.0) <= 1e-8, "(r=1,k=1,n=0)");
    return o;
}

// |w| <= 1 grid shared by the coherent-state criteria.
std::vector<std::vector<cplx>> omega_grid(int r) {
    std::vector<cplx> points{0.0};
    for (double mod : {0.25, 0.5, 0.75, 1.0})
        for (int ph = 0; ph < 6; ++ph) points.push_back(std::polar(mod, ph * std::numbers::pi / 3.0 + 0.1));
    std::vector<std::vector<cplx>> grid;
    if (r == 1) {
        for (auto p : points) grid.push_back({p});
    } else {
        for (std::size_t a = 0; a < points.size(); a += 3)
            for (std::size_t b = 1; b < points.size(); b += 4) grid.push_back({points[a], points[b]});
    }
    return grid;
}

Outcome coherent_eigenstates() {
    Outcome o;
    for (int r = 1; r <= 2; ++r)
        for (int k = 2; k <= 3; ++k) {
            const Representation rep(make_spec(r, 1, k, 40));
            for (const auto& w : omega_grid(r)) {
                const auto cs = coherent_state(w, k, 40);
                o.require(cs.tail_bound <= 1e-10, "tail bound");
                const auto psi = embed(cs, rep.basis());
                for (int i = 0; i < r; ++i) {
                    auto d = rep.lowering(i).apply(psi);
                    for (std::size_t j = 0; j < d.size(); ++j) d[j] -= w[static_cast<std::size_t>(i)] * psi[j];
                    const double res = kernels::norm(d);
                    o.worst = std::max(o.worst, res);
                    o.require(res <= cs.residual_bound(i), "residual r=" + std::to_string(r) + " k=" + std::to_string(k));
                }
            }
        }
    return o;
}

Outcome robertson_saturation() {
    Outcome o;
    const RobertsonTolerances tol{1e-8, 1e-8};
    for (int r = 1; r <= 2; ++r)
        for (int k = 2; k <= 3; ++k) {
            const Representation rep(make_spec(r, 1, k, 40));
            for (const auto& w : omega_grid(r)) {
                const auto report = saturation_check(rep, coherent_state(w, k, 40), tol);
                o.worst = std::max({o.worst, report.rel_gap, report.blocks.max()});
                o.require(report.pass() && std::abs(report.det_sigma - report.det_c) <= 1e-8 * std::abs(report.det_c),
                          "coherent r=" + std::to_string(r) + " k=" + std::to_string(k));
            }
            // Excited basis states are the non-saturation witness.
            for (const auto& n : rep.basis()) {
                if (n.is_vacuum() || n.total() > 3) continue;
                std::vector<cplx> v(rep.dim());
                v[rep.basis().at(n)] = 1.0;
                const auto report = robertson_report(rep, v, tol);
                o.require(report.rel_gap >= 0.1, "witness " + n.to_string());
            }
        }
    std::mt19937 gen(2718);
    std::normal_distribution<double> g;
    const Representation rep(make_spec(2, 1, 2, 6));
    for (int t = 0; t < 100; ++t) {
        std::vector<cplx> v(rep.dim());
        for (auto& x : v) x = {g(gen), g(gen)};
        const double nv = kernels::norm(v);
        for (auto& x : v) x /= nv;
        const auto report = robertson_report(rep, v, tol);
        o.require(report.det_sigma >= report.det_c - 1e-9 * std::max(1.0, std::abs(report.det_c)),
                  "inequality on random state " + std::to_string(t));
    }
    return o;
}

Outcome special_functions() {
    Outcome o;
    for (int n = 0; n <= 10; ++n)
        for (double x : {1e-3, 0.1, 1.0, 2.0, 5.0, 20.0, 50.0}) {
            double sum = 0.0;
            for (int j = 0; j <= n; ++j)
                sum += std::exp(std::lgamma(n + j + 1.0) - std::lgamma(j + 1.0) - std::lgamma(n - j + 1.0)) /
                       std::pow(2.0 * x, j);
            const double want = std::sqrt(std::numbers::pi / (2.0 * x)) * std::exp(-x) * sum;
            const double err = std::abs(bessel_k(n + 0.5, x) - want) / want;
            o.worst = std::max(o.worst, err);
            o.require(err <= 1e-10, "K_" + std::to_string(n) + ".5");
        }
    auto f = [](double t) { return t * bessel_k(0.0, t); };
    const double integral = quad::parallel::integrate(f, 0.0, 1.0).value + quad::parallel::integrate(f, 1.0, 60.0).value;
    o.worst = std::max(o.worst, std::abs(integral - 1.0));
    o.require(std::abs(integral - 1.0) <= 1e-10, "int t K_0(t) dt");
    return o;
}

}  // namespace

int main() {
    struct Criterion {
        const char* name;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria{
        {"algebraic identity suite", algebraic_identities},
        {"exclusion and dimension", exclusion_and_dimension},
        {"spectrum", spectrum},
        {"Bose limit", bose_limit},
        {"Bargmann intertwining", bargmann_intertwining},
        {"moment identity", moment_identity},
        {"coherent eigenstate property", coherent_eigenstates},
        {"Robertson saturation", robertson_saturation},
        {"special functions", special_functions},
    };

    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].run();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("[%s] %zu. %s (worst %.3g, %.2fs)%s%s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].name,
                    o.worst, secs, o.pass ? "" : ": ", o.detail.c_str());
        failed += o.pass ? 0 : 1;
    }
    return failed == 0 ? 0 : 1;
}
