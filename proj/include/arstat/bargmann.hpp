#pragma once

#include <map>
#include <span>
#include <vector>

#include "arstat/fock.hpp"
#include "arstat/multi_index.hpp"
#include "arstat/sparse_operator.hpp"

namespace arstat {

/// A polynomial in r complex variables stored as a monomial coefficient
/// table. Zero coefficients are never stored and no monomial may exceed
/// `degree_cap` in total degree.
class PolynomialState {
public:
    PolynomialState(int modes, int degree_cap);

    int modes() const noexcept { return modes_; }
    int degree_cap() const noexcept { return degree_cap_; }
    bool empty() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }
    const std::map<MultiIndex, cplx>& terms() const noexcept { return terms_; }

    cplx coefficient(const MultiIndex& n) const;
    /// Throws TruncationError above the degree cap.
    void add(const MultiIndex& n, cplx c);

    /// d/dw_i
    PolynomialState derivative(int i) const;
    /// w_i * p, with the cap raised by one.
    PolynomialState times_variable(int i) const;
    cplx evaluate(std::span<const cplx> omega) const;

    PolynomialState& operator*=(cplx c);
    friend PolynomialState operator+(const PolynomialState& a, const PolynomialState& b);
    friend PolynomialState operator-(const PolynomialState& a, const PolynomialState& b);
    friend PolynomialState operator*(cplx c, PolynomialState p) { return p *= c; }

    PolynomialState with_cap(int degree_cap) const;

    /// Largest coefficient modulus of a - b.
    friend double max_difference(const PolynomialState& a, const PolynomialState& b);

private:
    int modes_;
    int degree_cap_;
    std::map<MultiIndex, cplx> terms_;
};

/// C_{k;n} = sqrt((k-1)! / (n_1! ... n_r! (k-1+n_tot)!)), evaluated in log
/// space. Requires k >= 2.
double bargmann_coefficient(int k, const MultiIndex& n);
double log_bargmann_coefficient(int k, const MultiIndex& n);

/// Fock coefficients psi_n become the monomial coefficients psi_n C_{k;n}.
PolynomialState to_bargmann(std::span<const cplx> state, const FockBasis& basis, int k);
/// Inverse of to_bargmann; throws TruncationError when a monomial lies
/// outside the basis.
std::vector<cplx> from_bargmann(const PolynomialState& poly, const FockBasis& basis, int k);

/// N_i realized as w_i d/dw_i.
PolynomialState apply_number_diff(const PolynomialState& poly, int i);
/// a_i^+ realized as multiplication by w_i.
PolynomialState apply_raising_mul(const PolynomialState& poly, int i);
/// a_i^- realized as k d/dw_i + w_i d^2/dw_i^2 + (d/dw_i) sum_{j != i} w_j d/dw_j,
/// applied term by term in that operator order.
PolynomialState apply_lowering_diff(const PolynomialState& poly, int i, int k);

/// Eigenstate of every a_i^- with eigenvalue omega_i, cut at total degree
/// `degree_cap` and renormalized on the kept space.
struct CoherentState {
    std::vector<cplx> omega;
    int k = 2;
    int degree_cap = 0;
    FockBasis basis{1, 0};
    std::vector<cplx> coeffs;         // unit norm, ordered as `basis`
    std::vector<double> log_moduli;   // log |C_{k;n} w^n| before renormalization
    double norm_sq = 1.0;             // untruncated sum_n C_{k;n}^2 |w^n|^2
    double truncated_norm_sq = 1.0;   // the same sum over the kept shells
    double tail_bound = 0.0;          // bound on the dropped shells relative to truncated_norm_sq

    /// Upper bound on || a_i^- |w> - w_i |w> || in a representation cut at
    /// degree_cap: the top-shell truncation term plus a floating-point
    /// allowance for the coefficient table.
    double residual_bound(int i) const;
};

/// Shell weight t_N = (k-1)! R^{2N} / (N! (k-1+N)!) with R^2 = sum |w_i|^2;
/// the coherent normalization is the sum of t_N over N.
double coherent_shell_weight(double radius_sq, int k, int shell);
/// Geometric bound on sum_{N > cap} t_N; infinite when the ratio test has not
/// yet kicked in.
double coherent_tail(double radius_sq, int k, int degree_cap);
/// Smallest cap whose relative tail is below `tail_tol`.
int suggest_degree_cap(std::span<const cplx> omega, int k, double tail_tol);

/// Throws TruncationError (with a suggested cap) if the dropped tail exceeds
/// `tail_tol` relative to the kept norm.
CoherentState coherent_state(std::span<const cplx> omega, int k, int degree_cap, double tail_tol = 1e-12);

/// Coherent coefficients laid out along `basis`, which must contain the
/// coherent state's own basis as a prefix.
std::vector<cplx> embed(const CoherentState& cs, const FockBasis& basis);

}  // namespace arstat
