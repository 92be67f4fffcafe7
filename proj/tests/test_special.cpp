#include <doctest.h>

#include <cmath>
#include <numbers>

#include "arstat/error.hpp"
#include "arstat/quadrature.hpp"
#include "arstat/special.hpp"

using namespace arstat;

namespace {

// K_{n+1/2}(x) = sqrt(pi/(2x)) e^{-x} sum_j (n+j)! / (j! (n-j)! (2x)^j)
double half_integer_k(int n, double x) {
    double sum = 0.0;
    for (int j = 0; j <= n; ++j)
        sum += std::exp(std::lgamma(n + j + 1.0) - std::lgamma(j + 1.0) - std::lgamma(n - j + 1.0)) /
               std::pow(2.0 * x, j);
    return std::sqrt(std::numbers::pi / (2.0 * x)) * std::exp(-x) * sum;
}

// K_nu(x) = int_0^inf exp(-x cosh t) cosh(nu t) dt by the trapezoid rule,
// which converges geometrically for this analytic, doubly decaying integrand.
double integral_k(double nu, double x) {
    const double h = 1.0 / 64.0;
    double sum = 0.5 * std::exp(-x);
    for (int j = 1;; ++j) {
        const double t = j * h;
        const double term = std::exp(-x * std::cosh(t) + nu * t) * 0.5 * (1.0 + std::exp(-2.0 * nu * t));
        sum += term;
        if (term < 1e-18 * sum && t > 1.0) break;
    }
    return h * sum;
}

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

}  // namespace

TEST_CASE("K_{1/2}(1)") {
    CHECK(bessel_k(0.5, 1.0) == doctest::Approx(std::sqrt(std::numbers::pi / 2.0) * std::exp(-1.0)).epsilon(1e-14));
    CHECK(bessel_k(0.5, 1.0) == doctest::Approx(0.46107).epsilon(1e-5));
}

TEST_CASE("half-integer closed forms") {
    for (int n = 0; n <= 12; ++n)
        for (double x : {1e-3, 0.01, 0.3, 1.0, 1.999, 2.0, 2.5, 7.0, 20.0, 50.0}) {
            INFO("nu=" << n + 0.5 << " x=" << x);
            CHECK(rel(bessel_k(n + 0.5, x), half_integer_k(n, x)) <= 1e-10);
        }
}

TEST_CASE("integral representation") {
    for (double nu : {0.0, 0.25, 1.0, 2.0, 3.7, 6.0})
        for (double x : {0.05, 0.5, 1.5, 2.5, 10.0, 30.0}) {
            INFO("nu=" << nu << " x=" << x);
            CHECK(rel(bessel_k(nu, x), integral_k(nu, x)) <= 1e-10);
        }
}

TEST_CASE("agreement with the standard library over the contract range") {
    for (double nu = 0.0; nu <= 30.0; nu += 0.37)
        for (double lx = -3.0; lx <= std::log10(50.0); lx += 0.11) {
            const double x = std::pow(10.0, lx);
            const double ref = std::cyl_bessel_k(nu, x);
            if (!std::isfinite(ref) || ref == 0.0) continue;
            INFO("nu=" << nu << " x=" << x);
            CHECK(rel(bessel_k(nu, x), ref) <= 1e-10);
        }
}

TEST_CASE("integer orders including the logarithmic case") {
    for (int n = 0; n <= 30; ++n)
        for (double x : {1e-3, 0.1, 1.0, 2.0, 5.0, 50.0}) {
            const double ref = std::cyl_bessel_k(double(n), x);
            if (!std::isfinite(ref)) continue;
            CHECK(rel(bessel_k(n, x), ref) <= 1e-10);
        }
}

TEST_CASE("negative order is reflected") {
    CHECK(bessel_k(-2.5, 1.3) == bessel_k(2.5, 1.3));
    CHECK(bessel_k(-3.0, 0.7) == bessel_k(3.0, 0.7));
}

TEST_CASE("recurrence K_{nu+1} = K_{nu-1} + (2 nu / x) K_nu") {
    for (double nu : {0.3, 1.0, 4.5, 9.0})
        for (double x : {0.2, 1.9, 2.1, 12.0})
            CHECK(rel(bessel_k(nu + 1, x), bessel_k(nu - 1, x) + 2.0 * nu / x * bessel_k(nu, x)) <= 1e-12);
}

TEST_CASE("x K_0(x) integrates to one") {
    auto f = [](double t) { return t * bessel_k(0.0, t); };
    const auto head = quad::parallel::integrate(f, 0.0, 1.0);
    const auto tail = quad::parallel::integrate(f, 1.0, 60.0);
    CHECK(std::abs(head.value + tail.value - 1.0) <= 1e-10);
}

TEST_CASE("large-argument decay") {
    // Leading correction (4 nu^2 - 1)/(8x) stays below 1e-2 for nu <= 1.
    for (double nu : {0.0, 0.5, 1.0}) {
        const double x = 50.0;
        CHECK(std::abs(bessel_k(nu, x) * std::sqrt(2.0 * x / std::numbers::pi) * std::exp(x) - 1.0) <= 1e-2);
    }
    for (double nu : {0.0, 3.0, 17.5})
        for (double x : {0.5, 3.0, 40.0, 700.0})
            if (bessel_k(nu, x) > 0.0) CHECK(rel(bessel_k_scaled(nu, x), std::exp(x) * bessel_k(nu, x)) <= 1e-12);
    CHECK(bessel_k_scaled(0.0, 1e4) == doctest::Approx(std::sqrt(std::numbers::pi / 2e4)).epsilon(1e-4));
}

TEST_CASE("domain errors") {
    CHECK_THROWS_AS(bessel_k(0.0, 0.0), DomainError);
    CHECK_THROWS_AS(bessel_k(1.0, -1.0), DomainError);
    CHECK_THROWS_AS(bessel_k(std::nan(""), 1.0), DomainError);
}

TEST_CASE("log factorial") {
    CHECK(log_factorial(0) == 0.0);
    CHECK(log_factorial(1) == 0.0);
    CHECK(log_factorial(5) == doctest::Approx(std::log(120.0)).epsilon(1e-15));
    CHECK(log_factorial(2000) == doctest::Approx(std::lgamma(2001.0)).epsilon(1e-15));
    CHECK_THROWS(log_factorial(-1));
}
