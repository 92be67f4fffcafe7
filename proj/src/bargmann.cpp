#include "arstat/bargmann.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "arstat/error.hpp"
#include "arstat/special.hpp"

namespace arstat {

namespace {

void require_bosonic_k(int k) {
    if (k < 2) throw InvalidParameter("the analytic realization needs k >= 2");
}

void check_mode(int modes, int i) {
    if (i < 0 || i >= modes) throw DomainError("mode index " + std::to_string(i) + " out of range");
}

}  // namespace

PolynomialState::PolynomialState(int modes, int degree_cap) : modes_(modes), degree_cap_(degree_cap) {
    if (modes < 1) throw InvalidParameter("polynomial needs at least one variable");
    if (degree_cap < 0) throw InvalidParameter("degree cap must be non-negative");
}

cplx PolynomialState::coefficient(const MultiIndex& n) const {
    auto it = terms_.find(n);
    return it == terms_.end() ? cplx(0.0) : it->second;
}

void PolynomialState::add(const MultiIndex& n, cplx c) {
    if (n.modes() != static_cast<std::size_t>(modes_)) throw DomainError("monomial has the wrong number of variables");
    if (c == cplx(0.0)) return;
    if (n.total() > degree_cap_)
        throw TruncationError("monomial " + n.to_string() + " exceeds degree cap " + std::to_string(degree_cap_),
                              n.total());
    auto [it, inserted] = terms_.try_emplace(n, c);
    if (!inserted) {
        it->second += c;
        if (it->second == cplx(0.0)) terms_.erase(it);
    }
}

PolynomialState PolynomialState::derivative(int i) const {
    check_mode(modes_, i);
    const auto m = static_cast<std::size_t>(i);
    PolynomialState out(modes_, degree_cap_);
    for (const auto& [n, c] : terms_)
        if (n[m] > 0) out.add(n.lowered(m), static_cast<double>(n[m]) * c);
    return out;
}

PolynomialState PolynomialState::times_variable(int i) const {
    check_mode(modes_, i);
    const auto m = static_cast<std::size_t>(i);
    PolynomialState out(modes_, degree_cap_ + 1);
    for (const auto& [n, c] : terms_) out.add(n.raised(m), c);
    return out;
}

cplx PolynomialState::evaluate(std::span<const cplx> omega) const {
    if (omega.size() != static_cast<std::size_t>(modes_)) throw DomainError("point has the wrong dimension");
    cplx sum = 0.0;
    for (const auto& [n, c] : terms_) {
        cplx mono = 1.0;
        for (std::size_t j = 0; j < n.modes(); ++j) mono *= std::pow(omega[j], n[j]);
        sum += c * mono;
    }
    return sum;
}

PolynomialState& PolynomialState::operator*=(cplx c) {
    if (c == cplx(0.0)) {
        terms_.clear();
        return *this;
    }
    for (auto& [n, v] : terms_) v *= c;
    return *this;
}

PolynomialState operator+(const PolynomialState& a, const PolynomialState& b) {
    if (a.modes_ != b.modes_) throw DomainError("polynomials in different numbers of variables");
    PolynomialState out(a.modes_, std::max(a.degree_cap_, b.degree_cap_));
    out.terms_ = a.terms_;
    for (const auto& [n, c] : b.terms_) out.add(n, c);
    return out;
}

PolynomialState operator-(const PolynomialState& a, const PolynomialState& b) {
    PolynomialState neg = b;
    neg *= -1.0;
    return a + neg;
}

PolynomialState PolynomialState::with_cap(int degree_cap) const {
    PolynomialState out(modes_, degree_cap);
    for (const auto& [n, c] : terms_) out.add(n, c);
    return out;
}

double max_difference(const PolynomialState& a, const PolynomialState& b) {
    double m = 0.0;
    for (const auto& [n, c] : (a - b).terms_) m = std::max(m, std::abs(c));
    return m;
}

double log_bargmann_coefficient(int k, const MultiIndex& n) {
    require_bosonic_k(k);
    double s = log_factorial(k - 1) - log_factorial(k - 1 + n.total());
    for (int v : n.values()) {
        if (v < 0) throw DomainError("negative exponent in " + n.to_string());
        s -= log_factorial(v);
    }
    return 0.5 * s;
}

double bargmann_coefficient(int k, const MultiIndex& n) { return std::exp(log_bargmann_coefficient(k, n)); }

PolynomialState to_bargmann(std::span<const cplx> state, const FockBasis& basis, int k) {
    if (state.size() != basis.size()) throw DomainError("state length does not match the basis");
    PolynomialState poly(basis.modes(), basis.max_total());
    for (std::size_t j = 0; j < basis.size(); ++j)
        if (state[j] != cplx(0.0)) poly.add(basis[j], state[j] * bargmann_coefficient(k, basis[j]));
    return poly;
}

std::vector<cplx> from_bargmann(const PolynomialState& poly, const FockBasis& basis, int k) {
    if (poly.modes() != basis.modes()) throw DomainError("polynomial and basis differ in mode count");
    std::vector<cplx> state(basis.size());
    for (const auto& [n, c] : poly.terms()) {
        auto idx = basis.index_of(n);
        if (!idx)
            throw TruncationError("monomial " + n.to_string() + " lies outside a basis of cap " +
                                      std::to_string(basis.max_total()),
                                  n.total());
        state[*idx] = c / bargmann_coefficient(k, n);
    }
    return state;
}

PolynomialState apply_number_diff(const PolynomialState& poly, int i) {
    return poly.derivative(i).times_variable(i).with_cap(poly.degree_cap());
}

PolynomialState apply_raising_mul(const PolynomialState& poly, int i) { return poly.times_variable(i); }

PolynomialState apply_lowering_diff(const PolynomialState& poly, int i, int k) {
    require_bosonic_k(k);
    check_mode(poly.modes(), i);
    const PolynomialState d = poly.derivative(i);
    PolynomialState out = static_cast<double>(k) * d;
    out = out + d.derivative(i).times_variable(i);

    PolynomialState euler_others(poly.modes(), poly.degree_cap());
    for (int j = 0; j < poly.modes(); ++j)
        if (j != i) euler_others = euler_others + poly.derivative(j).times_variable(j);
    out = out + euler_others.derivative(i);
    return out.with_cap(poly.degree_cap());
}

double coherent_shell_weight(double radius_sq, int k, int shell) {
    if (shell == 0) return 1.0;
    if (radius_sq == 0.0) return 0.0;
    return std::exp(log_factorial(k - 1) + shell * std::log(radius_sq) - log_factorial(shell) -
                    log_factorial(k - 1 + shell));
}

double coherent_tail(double radius_sq, int k, int degree_cap) {
    if (radius_sq == 0.0) return 0.0;
    // t_{N+1}/t_N = R^2 / ((N+1)(k+N)) decreases with N.
    const double q = radius_sq / ((degree_cap + 2.0) * (k + degree_cap + 1.0));
    if (q >= 1.0) return std::numeric_limits<double>::infinity();
    return coherent_shell_weight(radius_sq, k, degree_cap + 1) / (1.0 - q);
}

namespace {

double radius_sq_of(std::span<const cplx> omega) {
    double s = 0.0;
    for (const auto& w : omega) s += std::norm(w);
    return s;
}

double kept_weight(double radius_sq, int k, int cap) {
    double s = 0.0;
    for (int n = 0; n <= cap; ++n) s += coherent_shell_weight(radius_sq, k, n);
    return s;
}

}  // namespace

int suggest_degree_cap(std::span<const cplx> omega, int k, double tail_tol) {
    const double r2 = radius_sq_of(omega);
    for (int cap = 0; cap < 100000; ++cap)
        if (coherent_tail(r2, k, cap) <= tail_tol * kept_weight(r2, k, cap)) return cap;
    throw TruncationError("no degree cap meets the tail tolerance", -1);
}

CoherentState coherent_state(std::span<const cplx> omega, int k, int degree_cap, double tail_tol) {
    require_bosonic_k(k);
    if (omega.empty()) throw InvalidParameter("coherent state needs at least one mode");
    if (degree_cap < 1) throw InvalidParameter("degree cap must be positive");

    const double r2 = radius_sq_of(omega);
    const double kept = kept_weight(r2, k, degree_cap);
    const double tail = coherent_tail(r2, k, degree_cap) / kept;
    if (!(tail <= tail_tol)) {
        const int cap = suggest_degree_cap(omega, k, tail_tol);
        throw TruncationError("degree cap " + std::to_string(degree_cap) + " leaves a relative tail above " +
                                  std::to_string(tail_tol) + "; use degree_cap >= " + std::to_string(cap),
                              cap);
    }

    CoherentState cs;
    cs.omega.assign(omega.begin(), omega.end());
    cs.k = k;
    cs.degree_cap = degree_cap;
    cs.basis = FockBasis(static_cast<int>(omega.size()), degree_cap);
    cs.coeffs.resize(cs.basis.size());
    cs.log_moduli.resize(cs.basis.size());

    std::vector<double> log_abs(omega.size()), phase(omega.size());
    for (std::size_t j = 0; j < omega.size(); ++j) {
        log_abs[j] = omega[j] == cplx(0.0) ? -std::numeric_limits<double>::infinity() : std::log(std::abs(omega[j]));
        phase[j] = std::arg(omega[j]);
    }

    double sum = 0.0;
    for (std::size_t idx = 0; idx < cs.basis.size(); ++idx) {
        const MultiIndex& n = cs.basis[idx];
        double lm = log_bargmann_coefficient(k, n);
        double ph = 0.0;
        bool vanishes = false;
        for (std::size_t j = 0; j < n.modes(); ++j) {
            if (n[j] == 0) continue;
            if (omega[j] == cplx(0.0)) {
                vanishes = true;
                break;
            }
            lm += n[j] * log_abs[j];
            ph += n[j] * phase[j];
        }
        cs.log_moduli[idx] = vanishes ? -std::numeric_limits<double>::infinity() : lm;
        cs.coeffs[idx] = vanishes ? cplx(0.0) : std::polar(std::exp(lm), ph);
        sum += std::norm(cs.coeffs[idx]);
    }
    const double inv = 1.0 / std::sqrt(sum);
    for (auto& c : cs.coeffs) c *= inv;

    cs.truncated_norm_sq = kept;
    cs.tail_bound = tail;
    // Untruncated normalization: continue the shell series to convergence.
    double full = kept;
    for (int n = degree_cap + 1; n < degree_cap + 100000; ++n) {
        const double t = coherent_shell_weight(r2, k, n);
        full += t;
        if (t <= std::numeric_limits<double>::epsilon() * 1e-3 * full && n > degree_cap + 1 + r2) break;
    }
    cs.norm_sq = full;
    return cs;
}

double CoherentState::residual_bound(int i) const {
    check_mode(static_cast<int>(omega.size()), i);
    const double w = std::abs(omega[static_cast<std::size_t>(i)]);
    const double r2 = [&] {
        double s = 0.0;
        for (const auto& o : omega) s += std::norm(o);
        return s;
    }();
    // Top shell: a_i^- cannot reach it from the dropped shell above.
    const double truncation = w * std::sqrt(coherent_shell_weight(r2, k, degree_cap) / truncated_norm_sq);

    // Rounding: each component is a product of an exp(log-modulus), a phase
    // and a square root, compared against w_i times its neighbour.
    constexpr double eps = std::numeric_limits<double>::epsilon();
    double rounding_sq = 0.0;
    for (std::size_t idx = 0; idx < basis.size(); ++idx) {
        if (coeffs[idx] == cplx(0.0)) continue;
        const double c = eps * (16.0 + 4.0 * std::abs(log_moduli[idx]) + 8.0 * (basis[idx].total() + 1));
        rounding_sq += std::pow(c * std::abs(coeffs[idx]) * std::max(w, 1.0), 2);
    }
    return truncation + std::sqrt(rounding_sq);
}

std::vector<cplx> embed(const CoherentState& cs, const FockBasis& basis) {
    if (basis.modes() != cs.basis.modes() || basis.max_total() < cs.basis.max_total())
        throw DomainError("target basis does not contain the coherent-state basis");
    std::vector<cplx> out(basis.size());
    std::copy(cs.coeffs.begin(), cs.coeffs.end(), out.begin());
    return out;
}

}  // namespace arstat
