#include "arstat/kernels.hpp"

#include <algorithm>
#include <cmath>

#include <omp.h>

#include "arstat/error.hpp"

namespace arstat::kernels {

namespace {

void check_product_dims(const SparseOperator& a, const SparseOperator& b) {
    if (a.dim() != b.dim()) throw DomainError("operator dimensions differ");
}

// Gustavson's row-by-row product for one output row. `acc` and `mark` are
// scratch arrays of length dim owned by the calling thread.
void product_row(const SparseOperator& a, const SparseOperator& b, std::size_t row,
                 std::vector<cplx>& acc, std::vector<char>& mark, std::vector<std::size_t>& cols_out,
                 std::vector<cplx>& vals_out) {
    auto arp = a.row_ptr();
    auto acol = a.col_index();
    auto aval = a.values();
    auto brp = b.row_ptr();
    auto bcol = b.col_index();
    auto bval = b.values();

    std::vector<std::size_t> touched;
    for (std::size_t p = arp[row]; p < arp[row + 1]; ++p) {
        const std::size_t mid = acol[p];
        for (std::size_t q = brp[mid]; q < brp[mid + 1]; ++q) {
            const std::size_t c = bcol[q];
            if (!mark[c]) {
                mark[c] = 1;
                acc[c] = 0.0;
                touched.push_back(c);
            }
            acc[c] += aval[p] * bval[q];
        }
    }
    std::sort(touched.begin(), touched.end());
    cols_out.clear();
    vals_out.clear();
    for (auto c : touched) {
        if (acc[c] != cplx(0.0)) {
            cols_out.push_back(c);
            vals_out.push_back(acc[c]);
        }
        mark[c] = 0;
    }
}

SparseOperator assemble(std::size_t dim, const std::vector<std::vector<std::size_t>>& cols,
                        const std::vector<std::vector<cplx>>& vals) {
    std::vector<std::size_t> row_ptr(dim + 1, 0);
    for (std::size_t r = 0; r < dim; ++r) row_ptr[r + 1] = row_ptr[r] + cols[r].size();
    std::vector<std::size_t> col;
    std::vector<cplx> val;
    col.reserve(row_ptr[dim]);
    val.reserve(row_ptr[dim]);
    for (std::size_t r = 0; r < dim; ++r) {
        col.insert(col.end(), cols[r].begin(), cols[r].end());
        val.insert(val.end(), vals[r].begin(), vals[r].end());
    }
    return SparseOperator::from_csr(dim, std::move(row_ptr), std::move(col), std::move(val));
}

cplx row_dot(const SparseOperator& a, std::size_t row, std::span<const cplx> x) {
    auto rp = a.row_ptr();
    auto col = a.col_index();
    auto val = a.values();
    cplx s = 0.0;
    for (std::size_t p = rp[row]; p < rp[row + 1]; ++p) s += val[p] * x[col[p]];
    return s;
}

void check_vec_dims(const SparseOperator& a, std::size_t nx, std::size_t ny) {
    if (nx != a.dim() || ny != a.dim()) throw DomainError("vector length does not match operator dimension");
}

}  // namespace

namespace serial {

SparseOperator multiply(const SparseOperator& a, const SparseOperator& b) {
    check_product_dims(a, b);
    const std::size_t dim = a.dim();
    std::vector<std::vector<std::size_t>> cols(dim);
    std::vector<std::vector<cplx>> vals(dim);
    std::vector<cplx> acc(dim);
    std::vector<char> mark(dim, 0);
    for (std::size_t r = 0; r < dim; ++r) product_row(a, b, r, acc, mark, cols[r], vals[r]);
    return assemble(dim, cols, vals);
}

void apply(const SparseOperator& a, std::span<const cplx> x, std::span<cplx> y) {
    check_vec_dims(a, x.size(), y.size());
    for (std::size_t r = 0; r < a.dim(); ++r) y[r] = row_dot(a, r, x);
}

cplx expectation(const SparseOperator& a, std::span<const cplx> psi) {
    if (psi.size() != a.dim()) throw DomainError("vector length does not match operator dimension");
    cplx s = 0.0;
    for (std::size_t r = 0; r < a.dim(); ++r) s += std::conj(psi[r]) * row_dot(a, r, psi);
    return s;
}

}  // namespace serial

namespace parallel {

SparseOperator multiply(const SparseOperator& a, const SparseOperator& b) {
    check_product_dims(a, b);
    const std::size_t dim = a.dim();
    std::vector<std::vector<std::size_t>> cols(dim);
    std::vector<std::vector<cplx>> vals(dim);
#pragma omp parallel
    {
        std::vector<cplx> acc(dim);
        std::vector<char> mark(dim, 0);
#pragma omp for schedule(dynamic, 16)
        for (std::size_t r = 0; r < dim; ++r) product_row(a, b, r, acc, mark, cols[r], vals[r]);
    }
    return assemble(dim, cols, vals);
}

void apply(const SparseOperator& a, std::span<const cplx> x, std::span<cplx> y) {
    check_vec_dims(a, x.size(), y.size());
#pragma omp parallel for schedule(static)
    for (std::size_t r = 0; r < a.dim(); ++r) y[r] = row_dot(a, r, x);
}

cplx expectation(const SparseOperator& a, std::span<const cplx> psi) {
    if (psi.size() != a.dim()) throw DomainError("vector length does not match operator dimension");
    std::vector<cplx> terms(a.dim());
#pragma omp parallel for schedule(static)
    for (std::size_t r = 0; r < a.dim(); ++r) terms[r] = std::conj(psi[r]) * row_dot(a, r, psi);
    cplx s = 0.0;
    for (const auto& t : terms) s += t;
    return s;
}

}  // namespace parallel

cplx inner_product(std::span<const cplx> psi, std::span<const cplx> phi) {
    if (psi.size() != phi.size()) throw DomainError("vector lengths differ");
    cplx s = 0.0;
    for (std::size_t i = 0; i < psi.size(); ++i) s += std::conj(psi[i]) * phi[i];
    return s;
}

double norm(std::span<const cplx> psi) {
    double s = 0.0;
    for (const auto& v : psi) s += std::norm(v);
    return std::sqrt(s);
}

}  // namespace arstat::kernels
