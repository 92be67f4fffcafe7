#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace arstat {

using cplx = std::complex<double>;

struct Triplet {
    std::size_t row;
    std::size_t col;
    cplx value;
};

/// Square complex matrix in compressed-row form, indexed by Fock basis
/// ordinals. Column indices within a row are strictly increasing and exact
/// zeros are never stored.
class SparseOperator {
public:
    SparseOperator() = default;
    explicit SparseOperator(std::size_t dim);

    // Duplicate (row, col) entries are summed; exact zeros are dropped.
    static SparseOperator from_triplets(std::size_t dim, std::vector<Triplet> entries);
    // Takes already-compressed rows; used by the product kernels.
    static SparseOperator from_csr(std::size_t dim, std::vector<std::size_t> row_ptr,
                                   std::vector<std::size_t> col, std::vector<cplx> val);
    static SparseOperator identity(std::size_t dim);
    static SparseOperator diagonal(std::span<const double> entries);

    std::size_t dim() const noexcept { return dim_; }
    std::size_t nnz() const noexcept { return val_.size(); }

    std::span<const std::size_t> row_ptr() const noexcept { return row_ptr_; }
    std::span<const std::size_t> col_index() const noexcept { return col_; }
    std::span<const cplx> values() const noexcept { return val_; }

    cplx entry(std::size_t row, std::size_t col) const;
    std::vector<Triplet> triplets() const;

    SparseOperator adjoint() const;
    std::vector<cplx> apply(std::span<const cplx> x) const;

    /// Largest entry modulus.
    double max_norm() const noexcept;
    /// Largest entry modulus over rows and columns with keep[i] set.
    double max_norm(const std::vector<bool>& keep) const;

    bool is_diagonal() const noexcept;
    std::vector<cplx> diagonal_values() const;
    Eigen::MatrixXcd to_dense() const;

    SparseOperator& operator*=(cplx scale);
    friend SparseOperator operator+(const SparseOperator& a, const SparseOperator& b);
    friend SparseOperator operator-(const SparseOperator& a, const SparseOperator& b);
    friend SparseOperator operator*(const SparseOperator& a, const SparseOperator& b);
    friend SparseOperator operator*(cplx scale, SparseOperator a) { return a *= scale; }

private:
    static SparseOperator combine(const SparseOperator& a, const SparseOperator& b, double sign);

    std::size_t dim_ = 0;
    std::vector<std::size_t> row_ptr_{0};
    std::vector<std::size_t> col_;
    std::vector<cplx> val_;
};

inline SparseOperator commutator(const SparseOperator& a, const SparseOperator& b) {
    return a * b - b * a;
}

/// Entrywise distance max |a_ij - b_ij|.
double max_difference(const SparseOperator& a, const SparseOperator& b);

}  // namespace arstat
