#pragma once

#include <functional>

// Adaptive Gauss-Kronrod (7/15) quadrature over a fixed partition of the
// interval. Panels are refined independently by bisection; the per-panel
// results are summed in panel order, so `serial` and `parallel` agree
// bitwise. The integrand must be safe to call concurrently.
namespace arstat::quad {

struct Config {
    int initial_panels = 32;
    double rel_tol = 1e-13;  // relative to the coarse absolute integral
    int max_depth = 48;
};

struct Result {
    double value = 0.0;
    double error = 0.0;  // sum of accepted |K15 - G7| estimates
    int nodes = 0;       // integrand evaluations
};

using Integrand = std::function<double(double)>;

namespace serial {
Result integrate(const Integrand& f, double a, double b, const Config& cfg = {});
}

namespace parallel {
Result integrate(const Integrand& f, double a, double b, const Config& cfg = {});
}

/// One 15-point Kronrod rule on [a, b]; exposed for tests.
struct RuleResult {
    double kronrod;
    double gauss;
    double abs_integral;  // integral of |f| under the Kronrod rule
};
RuleResult gauss_kronrod_15(const Integrand& f, double a, double b);

}  // namespace arstat::quad
