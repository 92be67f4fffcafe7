#pragma once

#include <optional>
#include <span>
#include <vector>

#include "arstat/bargmann.hpp"
#include "arstat/multi_index.hpp"
#include "arstat/quadrature.hpp"

namespace arstat {

/// K(k;R) = 2 / (pi^r (k-1)!) R^{k-r} K_{k-r}(2R), the isotropic weight of
/// the Bargmann inner product. Throws DomainError for R <= 0.
double measure_kernel(int k, int r, double radius);
/// Same kernel evaluated at moduli rho_1..rho_r (R^2 = sum rho_i^2).
double measure_kernel(int k, std::span<const double> rho);

struct MomentConfig {
    std::optional<double> r_cut;  // default max(20, k + 5 n_tot), widened until the tail fits
    double tail_tol = 1e-12;      // allowed radial tail beyond r_cut, relative to the moment
    quad::Config quad{};
};

struct MomentReport {
    int k = 0;
    MultiIndex n;
    double lhs = 0.0;  // quadrature value of (2 pi)^r int K rho^{2n+1} d rho
    double rhs = 0.0;  // n_1! ... n_r! (k-1+n_tot)! / (k-1)!
    double rel_error = 0.0;
    int quad_nodes = 0;
    double r_cut = 0.0;
    double tail_bound = 0.0;  // relative to rhs
};

/// n_1! ... n_r! (k-1+n_tot)! / (k-1)!
double moment_rhs(int k, const MultiIndex& n);

/// Angular factor: integral of prod rho_i^{2n_i+1} over the positive part of
/// the unit sphere in R^r, prod n_i! / (2^{r-1} (n_tot+r-1)!).
double sphere_moment_factor(const MultiIndex& n);

double default_r_cut(int k, const MultiIndex& n);

/// Upper bound on (2 pi)^r times the radial integral beyond r_cut, relative
/// to the moment. Uses e^x K_nu(x) decreasing in x and the closed-form
/// incomplete Gamma integral of R^p e^{-2R}.
double moment_tail_bound(int k, const MultiIndex& n, double r_cut);

/// Radial-reduced quadrature of the moment integral. Throws
/// QuadratureDomainError (with a suggested cutoff) if the tail beyond the
/// cutoff exceeds cfg.tail_tol.
MomentReport moment_check(int k, const MultiIndex& n, const MomentConfig& cfg = {});

/// Every multi-index with n_tot <= max_total for r modes, in basis order.
std::vector<MomentReport> moment_batch(int k, int r, int max_total, const MomentConfig& cfg = {});

/// <a|b> = int d^2w K(k;|w|) conj(a(w)) b(w). Angular integrals are done
/// analytically, so only matching monomials contribute, each weighted by
/// its quadrature moment.
cplx overlap_integral(const PolynomialState& a, const PolynomialState& b, int k, const MomentConfig& cfg = {});

}  // namespace arstat
