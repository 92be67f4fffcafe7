#include "arstat/special.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>

#include "arstat/error.hpp"

namespace arstat {

namespace {

constexpr double kEps = 1e-16;

// Even-power Taylor coefficients of
//   gam1(mu) = (1/Gamma(1-mu) - 1/Gamma(1+mu)) / (2 mu)
//   gam2(mu) = (1/Gamma(1-mu) + 1/Gamma(1+mu)) / 2
// in mu^2, generated at 40 digits.
constexpr std::array<double, 15> kGam1{
    -0.57721566490153286061,   0.042002635034095235529,  0.042197734555544336748,
    -0.0072189432466630995424, 0.00021524167411495097282, 0.000020134854780788238656,
    -1.1330272319816958824e-6, -6.1160951044814158179e-9, 1.1812745704870201446e-9,
    -7.782263439905071254e-12, -5.100370287454475979e-13, 5.3481225394230179824e-15,
    1.1812593016974587695e-16, -1.4123806553180317816e-18, -1.7144063219273374334e-20};
constexpr std::array<double, 16> kGam2{
    1.0,                       -0.65587807152025388108,   0.1665386113822914895,
    -0.0096219715278769735621, -0.0011651675918590651121, 0.00012805028238811618615,
    -1.2504934821426706573e-6, -2.0563384169776071035e-7, 5.0020076444692229301e-9,
    1.0434267116911005105e-10, -3.6968056186422057082e-12, -2.0583260535665067832e-14,
    1.2267786282382607902e-15, 1.1866922547516003326e-18, -2.2987456844353702066e-19,
    1.3373517304936931149e-22};

template <std::size_t N>
double even_series(const std::array<double, N>& c, double mu) {
    const double m2 = mu * mu;
    double s = 0.0;
    for (std::size_t j = N; j-- > 0;) s = s * m2 + c[j];
    return s;
}

struct KPair {
    double k_mu;   // e^x K_mu(x) when scaled
    double k_mu1;  // e^x K_{mu+1}(x) when scaled
};

// Temme's series, valid for x <= 2 and |mu| <= 1/2.
KPair temme_series(double mu, double x) {
    const double x2 = 0.5 * x;
    const double pimu = std::numbers::pi * mu;
    const double fact = std::abs(pimu) < kEps ? 1.0 : pimu / std::sin(pimu);
    double d = -std::log(x2);
    double e = mu * d;
    const double fact2 = std::abs(e) < kEps ? 1.0 : std::sinh(e) / e;
    const double gam1 = even_series(kGam1, mu);
    const double gam2 = even_series(kGam2, mu);
    const double gampl = gam2 - mu * gam1;  // 1/Gamma(1+mu)
    const double gammi = gam2 + mu * gam1;  // 1/Gamma(1-mu)

    double ff = fact * (gam1 * std::cosh(e) + gam2 * fact2 * d);
    double sum = ff;
    e = std::exp(e);
    double p = 0.5 * e / gampl;
    double q = 0.5 / (e * gammi);
    double c = 1.0;
    d = x2 * x2;
    double sum1 = p;
    for (int i = 1; i < 500; ++i) {
        ff = (i * ff + p + q) / (i * static_cast<double>(i) - mu * mu);
        c *= d / i;
        p /= i - mu;
        q /= i + mu;
        const double del = c * ff;
        sum += del;
        const double del1 = c * (p - i * ff);
        sum1 += del1;
        if (std::abs(del) < std::abs(sum) * kEps) break;
    }
    return {sum, sum1 * 2.0 / x};
}

// Steed's continued fraction CF2, valid for x >= 2; returns scaled values.
KPair steed_cf2_scaled(double mu, double x) {
    double b = 2.0 * (1.0 + x);
    double d = 1.0 / b;
    double h = d, delh = d;
    double q1 = 0.0, q2 = 1.0;
    const double a1 = 0.25 - mu * mu;
    double q = a1, c = a1;
    double a = -a1;
    double s = 1.0 + q * delh;
    for (int i = 1; i < 10000; ++i) {
        a -= 2 * i;
        c = -a * c / (i + 1.0);
        const double qnew = (q1 - b * q2) / a;
        q1 = q2;
        q2 = qnew;
        q += c * qnew;
        b += 2.0;
        d = 1.0 / (b + a * d);
        delh = (b * d - 1.0) * delh;
        h += delh;
        const double dels = q * delh;
        s += dels;
        if (std::abs(dels / s) < kEps) break;
    }
    h = a1 * h;
    const double k_mu = std::sqrt(std::numbers::pi / (2.0 * x)) / s;
    return {k_mu, k_mu * (mu + x + 0.5 - h) / x};
}

double bessel_k_impl(double nu, double x, bool scaled) {
    if (!(x > 0.0)) throw DomainError("bessel_k requires x > 0");
    if (!std::isfinite(nu)) throw DomainError("bessel_k requires a finite order");
    nu = std::abs(nu);
    const int steps = static_cast<int>(nu + 0.5);
    const double mu = nu - steps;

    KPair pair;
    if (x < 2.0) {
        pair = temme_series(mu, x);
        if (scaled) {
            const double ex = std::exp(x);
            pair.k_mu *= ex;
            pair.k_mu1 *= ex;
        }
    } else {
        pair = steed_cf2_scaled(mu, x);
        if (!scaled) {
            const double emx = std::exp(-x);
            pair.k_mu *= emx;
            pair.k_mu1 *= emx;
        }
    }

    double km = pair.k_mu, kp = pair.k_mu1;
    for (int i = 1; i <= steps; ++i) {
        const double next = (mu + i) * (2.0 / x) * kp + km;
        km = kp;
        kp = next;
    }
    return km;
}

struct LogFactorialTable {
    std::array<double, 1024> values{};
    LogFactorialTable() {
        values[0] = 0.0;
        for (std::size_t n = 1; n < values.size(); ++n) values[n] = std::lgamma(static_cast<double>(n) + 1.0);
    }
};

}  // namespace

double log_factorial(int n) {
    if (n < 0) throw DomainError("log_factorial of a negative integer");
    static const LogFactorialTable table;
    if (static_cast<std::size_t>(n) < table.values.size()) return table.values[static_cast<std::size_t>(n)];
    return std::lgamma(static_cast<double>(n) + 1.0);
}

double bessel_k(double nu, double x) { return bessel_k_impl(nu, x, false); }

double bessel_k_scaled(double nu, double x) { return bessel_k_impl(nu, x, true); }

}  // namespace arstat
