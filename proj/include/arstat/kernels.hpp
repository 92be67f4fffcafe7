#pragma once

#include <span>

#include "arstat/sparse_operator.hpp"

// Data-parallel kernels behind SparseOperator and the quadrature routines.
// `serial` is the reference implementation; `parallel` is the OpenMP version
// used by the library. Both visit entries in the same order and reduce in the
// same order, so results are bitwise identical for any thread count.
namespace arstat::kernels {

namespace serial {

SparseOperator multiply(const SparseOperator& a, const SparseOperator& b);
void apply(const SparseOperator& a, std::span<const cplx> x, std::span<cplx> y);
cplx expectation(const SparseOperator& a, std::span<const cplx> psi);

}  // namespace serial

namespace parallel {

SparseOperator multiply(const SparseOperator& a, const SparseOperator& b);
void apply(const SparseOperator& a, std::span<const cplx> x, std::span<cplx> y);
cplx expectation(const SparseOperator& a, std::span<const cplx> psi);

}  // namespace parallel

/// <psi|phi> with conjugation on the left argument.
cplx inner_product(std::span<const cplx> psi, std::span<const cplx> phi);
double norm(std::span<const cplx> psi);

}  // namespace arstat::kernels
