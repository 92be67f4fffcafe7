#include "arstat/quadrature.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <vector>

#include "arstat/error.hpp"

namespace arstat::quad {

namespace {

// Kronrod abscissae (positive half) and weights; Gauss weights belong to the
// odd-indexed abscissae xgk[1], xgk[3], xgk[5] and the centre.
constexpr std::array<double, 8> xgk{0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
                                    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
                                    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
                                    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> wgk{0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
                                    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
                                    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
                                    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> wg{0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
                                   0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct PanelResult {
    double value = 0.0;
    double error = 0.0;
    int nodes = 0;
};

void refine(const Integrand& f, double a, double b, const RuleResult& rule, double threshold_per_width,
            int depth, const Config& cfg, PanelResult& acc) {
    const double err = std::abs(rule.kronrod - rule.gauss);
    const double width = b - a;
    const double roundoff = 50.0 * std::numeric_limits<double>::epsilon() * rule.abs_integral;
    if (err <= threshold_per_width * width || err <= roundoff || depth >= cfg.max_depth) {
        acc.value += rule.kronrod;
        acc.error += err;
        return;
    }
    const double mid = 0.5 * (a + b);
    const RuleResult left = gauss_kronrod_15(f, a, mid);
    const RuleResult right = gauss_kronrod_15(f, mid, b);
    acc.nodes += 30;
    refine(f, a, mid, left, threshold_per_width, depth + 1, cfg, acc);
    refine(f, mid, b, right, threshold_per_width, depth + 1, cfg, acc);
}

template <bool Parallel>
Result integrate_impl(const Integrand& f, double a, double b, const Config& cfg) {
    if (!(b > a)) throw DomainError("quadrature interval must satisfy a < b");
    if (cfg.initial_panels < 1 || !(cfg.rel_tol > 0.0)) throw InvalidParameter("invalid quadrature config");

    const int n = cfg.initial_panels;
    const double h = (b - a) / n;
    auto edge = [&](int j) { return j == n ? b : a + j * h; };

    std::vector<RuleResult> coarse(static_cast<std::size_t>(n));
#pragma omp parallel for schedule(dynamic) if (Parallel)
    for (int j = 0; j < n; ++j) coarse[static_cast<std::size_t>(j)] = gauss_kronrod_15(f, edge(j), edge(j + 1));

    double scale = 0.0;
    for (const auto& c : coarse) scale += c.abs_integral;
    const double threshold_per_width = cfg.rel_tol * scale / (b - a);

    std::vector<PanelResult> panels(static_cast<std::size_t>(n));
#pragma omp parallel for schedule(dynamic) if (Parallel)
    for (int j = 0; j < n; ++j) {
        auto& p = panels[static_cast<std::size_t>(j)];
        p.nodes = 15;
        refine(f, edge(j), edge(j + 1), coarse[static_cast<std::size_t>(j)], threshold_per_width, 0, cfg, p);
    }

    Result out;
    for (const auto& p : panels) {
        out.value += p.value;
        out.error += p.error;
        out.nodes += p.nodes;
    }
    return out;
}

}  // namespace

RuleResult gauss_kronrod_15(const Integrand& f, double a, double b) {
    const double centre = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double fc = f(centre);
    double kronrod = wgk[7] * fc;
    double gauss = wg[3] * fc;
    double abs_sum = wgk[7] * std::abs(fc);
    for (std::size_t j = 0; j < 7; ++j) {
        const double dx = half * xgk[j];
        const double f1 = f(centre - dx);
        const double f2 = f(centre + dx);
        kronrod += wgk[j] * (f1 + f2);
        abs_sum += wgk[j] * (std::abs(f1) + std::abs(f2));
        if (j % 2 == 1) gauss += wg[j / 2] * (f1 + f2);
    }
    return {kronrod * half, gauss * half, abs_sum * half};
}

namespace serial {
Result integrate(const Integrand& f, double a, double b, const Config& cfg) {
    return integrate_impl<false>(f, a, b, cfg);
}
}  // namespace serial

namespace parallel {
Result integrate(const Integrand& f, double a, double b, const Config& cfg) {
    return integrate_impl<true>(f, a, b, cfg);
}
}  // namespace parallel

}  // namespace arstat::quad
