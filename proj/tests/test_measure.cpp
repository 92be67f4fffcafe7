#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "arstat/bargmann.hpp"
#include "arstat/error.hpp"
#include "arstat/kernels.hpp"
#include "arstat/measure.hpp"
#include "arstat/quadrature.hpp"

using namespace arstat;

namespace {

constexpr double pi = std::numbers::pi;

// Nested 2-d quadrature of (2 pi)^2 int int K rho_1^{2n_1+1} rho_2^{2n_2+1},
// with the library's kernel replaced by the standard-library Bessel K.
double nested_moment(int k, int n1, int n2) {
    const double fact = std::tgamma(double(k));
    auto kernel = [k, fact](double r) {
        return 2.0 / (pi * pi * fact) * std::pow(r, k - 2) * std::cyl_bessel_k(std::abs(k - 2), 2.0 * r);
    };
    const double cut = 25.0;
    auto outer = [&](double r1) {
        auto inner = [&](double r2) {
            const double rr = std::hypot(r1, r2);
            return rr == 0.0 ? 0.0 : kernel(rr) * std::pow(r2, 2 * n2 + 1);
        };
        return quad::serial::integrate(inner, 0.0, cut).value * std::pow(r1, 2 * n1 + 1);
    };
    quad::Config cfg;
    cfg.initial_panels = 16;
    cfg.rel_tol = 1e-10;
    return 4.0 * pi * pi * quad::serial::integrate(outer, 0.0, cut, cfg).value;
}

}  // namespace

TEST_CASE("kernel examples") {
    for (double rho : {0.1, 0.5, 1.0, 3.0})
        CHECK(measure_kernel(1, 1, rho) == doctest::Approx(2.0 / pi * std::cyl_bessel_k(0.0, 2.0 * rho)).epsilon(1e-12));
    CHECK(std::abs(measure_kernel(2, 1, 1.0) - 2.0 / pi * std::cyl_bessel_k(1.0, 2.0)) <=
          1e-10 * std::cyl_bessel_k(1.0, 2.0));
    for (int k = 1; k <= 6; ++k)
        for (int r = 1; r <= 3; ++r)
            for (double R : {1e-3, 0.4, 2.0, 9.0}) CHECK(measure_kernel(k, r, R) > 0.0);
    CHECK_THROWS_AS(measure_kernel(2, 1, 0.0), DomainError);
    CHECK_THROWS_AS(measure_kernel(2, 1, -1.0), DomainError);
}

TEST_CASE("kernel depends only on the radius") {
    const std::vector<double> a{0.6, 0.8}, b{1.0, 0.0}, c{0.0, 1.0};
    CHECK(measure_kernel(3, a) == doctest::Approx(measure_kernel(3, b)).epsilon(1e-14));
    CHECK(measure_kernel(3, c) == doctest::Approx(measure_kernel(3, 2, 1.0)).epsilon(1e-14));
}

TEST_CASE("moment examples") {
    const auto a = moment_check(1, MultiIndex{0});
    CHECK(a.rhs == 1.0);
    CHECK(std::abs(a.lhs - 1.0) <= 1e-8);

    const auto b = moment_check(2, MultiIndex{1});
    CHECK(b.rhs == doctest::Approx(2.0));
    CHECK(b.rel_error <= 1e-8);

    const auto c = moment_check(2, MultiIndex{1, 0});
    CHECK(c.rhs == doctest::Approx(2.0));
    CHECK(c.rel_error <= 1e-6);
    CHECK(c.quad_nodes > 0);
}

TEST_CASE("radial reduction agrees with nested two-dimensional quadrature") {
    for (auto [k, n1, n2] : {std::tuple{2, 1, 0}, std::tuple{3, 0, 0}, std::tuple{2, 1, 2}}) {
        const double nested = nested_moment(k, n1, n2);
        const auto m = moment_check(k, MultiIndex{n1, n2});
        CHECK(std::abs(nested - m.lhs) <= 1e-6 * m.rhs);
    }
}

TEST_CASE("moment identity over the acceptance grid") {
    for (int r = 1; r <= 2; ++r)
        for (int k = 1; k <= 4; ++k)
            for (const auto& m : moment_batch(k, r, 5)) {
                INFO("k=" << k << " n=" << m.n.to_string());
                CHECK(m.rel_error <= 1e-6);
                CHECK(m.rel_error == doctest::Approx(std::abs(m.lhs - m.rhs) / m.rhs));
                CHECK(m.tail_bound <= 1e-12);
            }
}

TEST_CASE("sphere factor") {
    CHECK(sphere_moment_factor(MultiIndex{3}) == 1.0);
    // Quarter circle: int_0^{pi/2} cos^{2a+1} sin^{2b+1} = a! b! / (2 (a+b+1)!)
    CHECK(sphere_moment_factor(MultiIndex{1, 2}) == doctest::Approx(1.0 * 2.0 / (2.0 * 24.0)));
    CHECK(moment_rhs(3, MultiIndex{1, 2}) == doctest::Approx(1.0 * 2.0 * 120.0 / 2.0));
}

TEST_CASE("default cutoff and tail bound") {
    CHECK(default_r_cut(2, MultiIndex{0}) == 20.0);
    CHECK(default_r_cut(4, MultiIndex{3, 2}) == 29.0);
    const MultiIndex n{2};
    CHECK(moment_tail_bound(2, n, 30.0) < moment_tail_bound(2, n, 20.0));
    // Bound dominates the actual tail.
    auto f = [](double R) { return measure_kernel(2, 1, R) * std::pow(R, 5); };
    const double actual = 2.0 * pi * quad::serial::integrate(f, 15.0, 60.0).value / moment_rhs(2, n);
    CHECK(moment_tail_bound(2, n, 15.0) >= actual);
}

TEST_CASE("explicit cutoff that is too short is a quadrature-domain error") {
    MomentConfig cfg;
    cfg.r_cut = 5.0;
    try {
        moment_check(2, MultiIndex{3}, cfg);
        FAIL("expected QuadratureDomainError");
    } catch (const QuadratureDomainError& e) {
        CHECK(e.suggested_r_cut() > 5.0);
        cfg.r_cut = e.suggested_r_cut();
        CHECK(moment_check(2, MultiIndex{3}, cfg).rel_error <= 1e-6);
    }
}

TEST_CASE("basis monomials are orthonormal under the measure") {
    for (int k = 2; k <= 4; ++k) {
        const FockBasis basis(1, 4);
        for (std::size_t a = 0; a < basis.size(); ++a)
            for (std::size_t b = 0; b < basis.size(); ++b) {
                std::vector<cplx> u(basis.size()), v(basis.size());
                u[a] = 1.0;
                v[b] = 1.0;
                const cplx o = overlap_integral(to_bargmann(u, basis, k), to_bargmann(v, basis, k), k);
                if (a == b)
                    CHECK(std::abs(o - 1.0) <= 1e-8);
                else
                    CHECK(std::abs(o) == 0.0);
            }
    }
}

TEST_CASE("measure overlap reproduces the Fock inner product") {
    std::mt19937 gen(42);
    std::normal_distribution<double> g;
    for (int r = 1; r <= 2; ++r) {
        const FockBasis basis(r, 2);
        for (int trial = 0; trial < 5; ++trial) {
            std::vector<cplx> u(basis.size()), v(basis.size());
            for (auto& x : u) x = {g(gen), g(gen)};
            for (auto& x : v) x = {g(gen), g(gen)};
            const int k = 2 + trial % 3;
            const cplx want = kernels::inner_product(u, v);
            const cplx got = overlap_integral(to_bargmann(u, basis, k), to_bargmann(v, basis, k), k);
            CHECK(std::abs(got - want) <= 1e-7 * std::max(1.0, std::abs(want)));
        }
    }
}
