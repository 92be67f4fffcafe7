#include <doctest.h>

#include <cmath>
#include <numbers>

#include "arstat/quadrature.hpp"

using namespace arstat;

TEST_CASE("Kronrod rule integrates polynomials of degree 23 exactly") {
    for (int p = 0; p <= 23; ++p) {
        auto f = [p](double x) { return std::pow(x, p); };
        const auto r = quad::gauss_kronrod_15(f, 0.0, 1.0);
        CHECK(r.kronrod == doctest::Approx(1.0 / (p + 1)).epsilon(1e-14));
    }
}

TEST_CASE("embedded Gauss rule integrates polynomials of degree 13 exactly") {
    for (int p = 0; p <= 13; ++p) {
        auto f = [p](double x) { return std::pow(x, p); };
        CHECK(quad::gauss_kronrod_15(f, -1.0, 2.0).gauss ==
              doctest::Approx((std::pow(2.0, p + 1) - std::pow(-1.0, p + 1)) / (p + 1)).epsilon(1e-13));
    }
}

TEST_CASE("adaptive integration of smooth and peaked integrands") {
    auto gauss = [](double x) { return std::exp(-x * x); };
    const auto r = quad::parallel::integrate(gauss, -10.0, 10.0);
    CHECK(r.value == doctest::Approx(std::sqrt(std::numbers::pi)).epsilon(1e-14));

    auto log_sing = [](double x) { return x > 0.0 ? std::log(x) : 0.0; };
    CHECK(quad::parallel::integrate(log_sing, 0.0, 1.0).value == doctest::Approx(-1.0).epsilon(1e-12));

    auto lorentz = [](double x) { return 1e-3 / (x * x + 1e-6); };
    CHECK(quad::parallel::integrate(lorentz, -1.0, 1.0).value ==
          doctest::Approx(2.0 * std::atan(1e3)).epsilon(1e-12));
}

TEST_CASE("serial and parallel integration agree bitwise") {
    auto f = [](double x) { return std::sin(7.0 * x) * std::exp(-x); };
    const auto a = quad::serial::integrate(f, 0.0, 30.0);
    const auto b = quad::parallel::integrate(f, 0.0, 30.0);
    CHECK(a.value == b.value);
    CHECK(a.error == b.error);
    CHECK(a.nodes == b.nodes);
    CHECK(a.value == doctest::Approx(7.0 / 50.0).epsilon(1e-13));
}

TEST_CASE("degenerate interval is rejected") {
    auto f = [](double) { return 1.0; };
    CHECK_THROWS(quad::serial::integrate(f, 2.0, 2.0));
}
