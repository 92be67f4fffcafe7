#pragma once

#include <span>
#include <vector>

#include <Eigen/Dense>

#include "arstat/bargmann.hpp"
#include "arstat/fock.hpp"

namespace arstat {

/// X_i = (a_i^+ + a_i^-)/2 and X_{i+r} = i (a_i^+ - a_i^-)/2, i = 0..r-1.
std::vector<SparseOperator> quadrature_operators(const Representation& rep);
/// A = (a_1^-, ..., a_r^-, a_1^+, ..., a_r^+).
std::vector<SparseOperator> ladder_operators(const Representation& rep);
/// U with X = U A: U = 1/2 [[1, 1], [-i, i]] in r x r blocks.
Eigen::MatrixXcd quadrature_transform(int r);

/// 1/2 <O_a O_b + O_b O_a> - <O_a><O_b> for arbitrary operators.
Eigen::MatrixXcd complex_dispersion(std::span<const SparseOperator> ops, std::span<const cplx> state);
/// -(i/2) <[O_a, O_b]> for arbitrary operators.
Eigen::MatrixXcd complex_commutator(std::span<const SparseOperator> ops, std::span<const cplx> state);

/// Dispersion matrix of hermitian observables: real symmetric.
Eigen::MatrixXd dispersion_matrix(std::span<const SparseOperator> ops, std::span<const cplx> state);
/// Mean-commutator matrix of hermitian observables: real antisymmetric.
Eigen::MatrixXd commutator_matrix(std::span<const SparseOperator> ops, std::span<const cplx> state);

/// Block relations on the A-side matrices; all vanish on coherent states.
struct BlockResiduals {
    double lowering = 0.0;   // max |sigma_ij|, |C_ij|
    double raising = 0.0;    // max |sigma_{i+r,j+r}|, |C_{i+r,j+r}|
    double upper = 0.0;      // max |sigma_{i,j+r} - i C_{i,j+r}|
    double lower = 0.0;      // max |sigma_{i+r,j} + i C_{i+r,j}|
    double max() const noexcept;
};

enum class RobertsonStatus { pass, fail, inconclusive };
const char* to_string(RobertsonStatus s) noexcept;

struct RobertsonTolerances {
    double block = 1e-8;
    double gap = 1e-8;
};

struct RobertsonReport {
    std::vector<cplx> omega;  // empty for states that are not coherent
    double det_sigma = 0.0;
    double det_c = 0.0;
    double rel_gap = 0.0;  // |det sigma - det C| / max(|det C|, 1e-300)
    BlockResiduals blocks;
    RobertsonStatus status = RobertsonStatus::fail;

    bool pass() const noexcept { return status == RobertsonStatus::pass; }
};

/// Robertson data for an arbitrary normalized state; status is pass when
/// the state saturates the relation within `tol`.
RobertsonReport robertson_report(const Representation& rep, std::span<const cplx> state,
                                 const RobertsonTolerances& tol = {});

/// Saturation test for a coherent state embedded in a bosonic
/// representation. Inconclusive when its truncation bounds exceed `tol`.
RobertsonReport saturation_check(const Representation& rep, const CoherentState& cs,
                                 const RobertsonTolerances& tol = {});

}  // namespace arstat
