#include "arstat/sparse_operator.hpp"

#include <algorithm>
#include <cmath>

#include "arstat/error.hpp"
#include "arstat/kernels.hpp"

namespace arstat {

SparseOperator::SparseOperator(std::size_t dim) : dim_(dim), row_ptr_(dim + 1, 0) {}

SparseOperator SparseOperator::from_triplets(std::size_t dim, std::vector<Triplet> entries) {
    for (const auto& t : entries)
        if (t.row >= dim || t.col >= dim) throw DomainError("triplet index outside operator dimension");

    std::sort(entries.begin(), entries.end(), [](const Triplet& a, const Triplet& b) {
        return a.row != b.row ? a.row < b.row : a.col < b.col;
    });

    SparseOperator op(dim);
    op.col_.reserve(entries.size());
    op.val_.reserve(entries.size());
    std::vector<std::size_t> counts(dim, 0);
    for (std::size_t i = 0; i < entries.size();) {
        std::size_t j = i;
        cplx sum = 0.0;
        while (j < entries.size() && entries[j].row == entries[i].row && entries[j].col == entries[i].col)
            sum += entries[j++].value;
        if (sum != cplx(0.0)) {
            op.col_.push_back(entries[i].col);
            op.val_.push_back(sum);
            ++counts[entries[i].row];
        }
        i = j;
    }
    for (std::size_t r = 0; r < dim; ++r) op.row_ptr_[r + 1] = op.row_ptr_[r] + counts[r];
    return op;
}

SparseOperator SparseOperator::from_csr(std::size_t dim, std::vector<std::size_t> row_ptr,
                                        std::vector<std::size_t> col, std::vector<cplx> val) {
    if (row_ptr.size() != dim + 1 || col.size() != val.size() || row_ptr.back() != col.size())
        throw DomainError("inconsistent compressed-row arrays");
    SparseOperator op;
    op.dim_ = dim;
    op.row_ptr_ = std::move(row_ptr);
    op.col_ = std::move(col);
    op.val_ = std::move(val);
    return op;
}

SparseOperator SparseOperator::identity(std::size_t dim) {
    std::vector<double> ones(dim, 1.0);
    return diagonal(ones);
}

SparseOperator SparseOperator::diagonal(std::span<const double> entries) {
    std::vector<Triplet> t;
    t.reserve(entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) t.push_back({i, i, entries[i]});
    return from_triplets(entries.size(), std::move(t));
}

cplx SparseOperator::entry(std::size_t row, std::size_t col) const {
    if (row >= dim_ || col >= dim_) throw DomainError("operator entry index out of range");
    auto first = col_.begin() + static_cast<std::ptrdiff_t>(row_ptr_[row]);
    auto last = col_.begin() + static_cast<std::ptrdiff_t>(row_ptr_[row + 1]);
    auto it = std::lower_bound(first, last, col);
    if (it == last || *it != col) return 0.0;
    return val_[static_cast<std::size_t>(it - col_.begin())];
}

std::vector<Triplet> SparseOperator::triplets() const {
    std::vector<Triplet> out;
    out.reserve(nnz());
    for (std::size_t r = 0; r < dim_; ++r)
        for (std::size_t p = row_ptr_[r]; p < row_ptr_[r + 1]; ++p) out.push_back({r, col_[p], val_[p]});
    return out;
}

SparseOperator SparseOperator::adjoint() const {
    auto t = triplets();
    for (auto& e : t) {
        std::swap(e.row, e.col);
        e.value = std::conj(e.value);
    }
    return from_triplets(dim_, std::move(t));
}

std::vector<cplx> SparseOperator::apply(std::span<const cplx> x) const {
    if (x.size() != dim_) throw DomainError("vector length does not match operator dimension");
    std::vector<cplx> y(dim_);
    kernels::parallel::apply(*this, x, y);
    return y;
}

double SparseOperator::max_norm() const noexcept {
    double m = 0.0;
    for (const auto& v : val_) m = std::max(m, std::abs(v));
    return m;
}

double SparseOperator::max_norm(const std::vector<bool>& keep) const {
    if (keep.size() != dim_) throw DomainError("subspace mask does not match operator dimension");
    double m = 0.0;
    for (std::size_t r = 0; r < dim_; ++r) {
        if (!keep[r]) continue;
        for (std::size_t p = row_ptr_[r]; p < row_ptr_[r + 1]; ++p)
            if (keep[col_[p]]) m = std::max(m, std::abs(val_[p]));
    }
    return m;
}

bool SparseOperator::is_diagonal() const noexcept {
    for (std::size_t r = 0; r < dim_; ++r)
        for (std::size_t p = row_ptr_[r]; p < row_ptr_[r + 1]; ++p)
            if (col_[p] != r) return false;
    return true;
}

std::vector<cplx> SparseOperator::diagonal_values() const {
    std::vector<cplx> d(dim_);
    for (std::size_t r = 0; r < dim_; ++r) d[r] = entry(r, r);
    return d;
}

Eigen::MatrixXcd SparseOperator::to_dense() const {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(dim_), static_cast<Eigen::Index>(dim_));
    for (std::size_t r = 0; r < dim_; ++r)
        for (std::size_t p = row_ptr_[r]; p < row_ptr_[r + 1]; ++p)
            m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(col_[p])) = val_[p];
    return m;
}

SparseOperator& SparseOperator::operator*=(cplx scale) {
    if (scale == cplx(0.0)) return *this = SparseOperator(dim_);
    for (auto& v : val_) v *= scale;
    return *this;
}

SparseOperator SparseOperator::combine(const SparseOperator& a, const SparseOperator& b, double sign) {
    if (a.dim_ != b.dim_) throw DomainError("operator dimensions differ");
    std::vector<std::size_t> row_ptr(a.dim_ + 1, 0), col;
    std::vector<cplx> val;
    col.reserve(a.nnz() + b.nnz());
    val.reserve(a.nnz() + b.nnz());
    for (std::size_t r = 0; r < a.dim_; ++r) {
        std::size_t p = a.row_ptr_[r], pe = a.row_ptr_[r + 1];
        std::size_t q = b.row_ptr_[r], qe = b.row_ptr_[r + 1];
        while (p < pe || q < qe) {
            std::size_t c;
            cplx v;
            if (q == qe || (p < pe && a.col_[p] < b.col_[q])) {
                c = a.col_[p];
                v = a.val_[p++];
            } else if (p == pe || b.col_[q] < a.col_[p]) {
                c = b.col_[q];
                v = sign * b.val_[q++];
            } else {
                c = a.col_[p];
                v = a.val_[p++] + sign * b.val_[q++];
            }
            if (v != cplx(0.0)) {
                col.push_back(c);
                val.push_back(v);
            }
        }
        row_ptr[r + 1] = col.size();
    }
    return from_csr(a.dim_, std::move(row_ptr), std::move(col), std::move(val));
}

SparseOperator operator+(const SparseOperator& a, const SparseOperator& b) {
    return SparseOperator::combine(a, b, 1.0);
}

SparseOperator operator-(const SparseOperator& a, const SparseOperator& b) {
    return SparseOperator::combine(a, b, -1.0);
}

SparseOperator operator*(const SparseOperator& a, const SparseOperator& b) {
    return kernels::parallel::multiply(a, b);
}

double max_difference(const SparseOperator& a, const SparseOperator& b) {
    return (a - b).max_norm();
}

}  // namespace arstat
