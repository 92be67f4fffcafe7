#pragma once

namespace arstat {

/// log(n!) for n >= 0. Values below 1024 come from a table built once.
double log_factorial(int n);

/// Modified Bessel function of the second kind K_nu(x) for real nu and
/// x > 0 (K_{-nu} = K_nu). Throws DomainError for x <= 0.
///
/// The fractional part mu of nu (|mu| <= 1/2) is handled by Temme's series
/// for x < 2 and Steed's continued fraction for x >= 2; integer steps use
/// the upward recurrence K_{m+1} = K_{m-1} + (2m/x) K_m, which is stable.
double bessel_k(double nu, double x);

/// e^x K_nu(x), same algorithm without the exponential underflow.
double bessel_k_scaled(double nu, double x);

}  // namespace arstat
