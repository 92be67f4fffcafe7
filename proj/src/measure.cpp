#include "arstat/measure.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "arstat/error.hpp"
#include "arstat/fock.hpp"
#include "arstat/special.hpp"

namespace arstat {

namespace {

void check_kr(int k, int r) {
    if (k < 1) throw InvalidParameter("measure needs k >= 1");
    if (r < 1) throw InvalidParameter("measure needs r >= 1");
}

double log_kernel_prefactor(int k, int r) {
    return std::log(2.0) - r * std::log(std::numbers::pi) - log_factorial(k - 1);
}

// Power of R multiplying K_{k-r}(2R) in kernel * R^{2n+2r-1}.
int radial_power(int k, int r, const MultiIndex& n) { return k + r + 2 * n.total() - 1; }

}  // namespace

double measure_kernel(int k, int r, double radius) {
    check_kr(k, r);
    if (!(radius > 0.0)) throw DomainError("measure kernel requires R > 0");
    const int order = std::abs(k - r);
    return std::exp(log_kernel_prefactor(k, r) + (k - r) * std::log(radius)) * bessel_k(order, 2.0 * radius);
}

double measure_kernel(int k, std::span<const double> rho) {
    double r2 = 0.0;
    for (double v : rho) r2 += v * v;
    return measure_kernel(k, static_cast<int>(rho.size()), std::sqrt(r2));
}

double moment_rhs(int k, const MultiIndex& n) {
    if (k < 1) throw InvalidParameter("measure needs k >= 1");
    double s = log_factorial(k - 1 + n.total()) - log_factorial(k - 1);
    for (int v : n.values()) s += log_factorial(v);
    return std::exp(s);
}

double sphere_moment_factor(const MultiIndex& n) {
    const int r = static_cast<int>(n.modes());
    double s = -(r - 1) * std::log(2.0) - log_factorial(n.total() + r - 1);
    for (int v : n.values()) s += log_factorial(v);
    return std::exp(s);
}

double default_r_cut(int k, const MultiIndex& n) { return std::max(20.0, k + 5.0 * n.total()); }

double moment_tail_bound(int k, const MultiIndex& n, double r_cut) {
    const int r = static_cast<int>(n.modes());
    check_kr(k, r);
    const int p = radial_power(k, r, n);
    const double x = 2.0 * r_cut;
    // int_{Rc}^inf R^p e^{-2R} dR = p!/2^{p+1} e^{-x} sum_{j<=p} x^j/j!, and
    // K_nu(2R) <= e^{x} K_nu(x) e^{-2R} for R >= Rc.
    double series = 0.0, term = 1.0;
    for (int j = 0; j <= p; ++j) {
        if (j > 0) term *= x / j;
        series += term;
    }
    const double log_tail = log_kernel_prefactor(k, r) + std::log(bessel_k_scaled(std::abs(k - r), x)) - x +
                            log_factorial(p) - (p + 1) * std::log(2.0) + std::log(series) +
                            r * std::log(2.0 * std::numbers::pi) + std::log(sphere_moment_factor(n));
    return std::exp(log_tail) / moment_rhs(k, n);
}

MomentReport moment_check(int k, const MultiIndex& n, const MomentConfig& cfg) {
    const int r = static_cast<int>(n.modes());
    check_kr(k, r);
    for (int v : n.values())
        if (v < 0) throw DomainError("negative exponent in " + n.to_string());

    MomentReport rep;
    rep.k = k;
    rep.n = n;
    rep.r_cut = cfg.r_cut.value_or(default_r_cut(k, n));
    rep.tail_bound = moment_tail_bound(k, n, rep.r_cut);
    // An implicit cutoff widens in steps of 5 until the tail fits.
    while (!cfg.r_cut && !(rep.tail_bound <= cfg.tail_tol) && rep.r_cut < 1e4) {
        rep.r_cut += 5.0;
        rep.tail_bound = moment_tail_bound(k, n, rep.r_cut);
    }
    if (!(rep.tail_bound <= cfg.tail_tol)) {
        double suggested = rep.r_cut;
        while (moment_tail_bound(k, n, suggested) > cfg.tail_tol && suggested < 1e4) suggested += 5.0;
        std::ostringstream msg;
        msg << "radial cutoff " << rep.r_cut << " leaves a tail of " << rep.tail_bound << " for n=" << n.to_string()
            << "; use r_cut >= " << suggested;
        throw QuadratureDomainError(msg.str(), suggested);
    }

    const int power = 2 * n.total() + 2 * r - 1;
    auto integrand = [k, r, power](double radius) {
        return measure_kernel(k, r, radius) * std::pow(radius, power);
    };
    const quad::Result q = quad::parallel::integrate(integrand, 0.0, rep.r_cut, cfg.quad);

    rep.lhs = std::pow(2.0 * std::numbers::pi, r) * sphere_moment_factor(n) * q.value;
    rep.rhs = moment_rhs(k, n);
    rep.rel_error = std::abs(rep.lhs - rep.rhs) / rep.rhs;
    rep.quad_nodes = q.nodes;
    return rep;
}

std::vector<MomentReport> moment_batch(int k, int r, int max_total, const MomentConfig& cfg) {
    const FockBasis indices(r, max_total);
    std::vector<MomentReport> out;
    out.reserve(indices.size());
    for (const auto& n : indices) out.push_back(moment_check(k, n, cfg));
    return out;
}

cplx overlap_integral(const PolynomialState& a, const PolynomialState& b, int k, const MomentConfig& cfg) {
    if (a.modes() != b.modes()) throw DomainError("polynomials in different numbers of variables");
    cplx sum = 0.0;
    for (const auto& [n, ca] : a.terms()) {
        const cplx cb = b.coefficient(n);
        if (cb == cplx(0.0)) continue;
        sum += std::conj(ca) * cb * moment_check(k, n, cfg).lhs;
    }
    return sum;
}

}  // namespace arstat
