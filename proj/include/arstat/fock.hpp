#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "arstat/multi_index.hpp"
#include "arstat/rep_spec.hpp"
#include "arstat/sparse_operator.hpp"

namespace arstat {

/// All multi-indices of `modes` entries with total occupation at most
/// `max_total`, in graded lexicographic order. The order is the
/// MultiIndex ordering, so a basis with a smaller cap is a leading prefix
/// of one with a larger cap.
class FockBasis {
public:
    FockBasis(int modes, int max_total);

    std::size_t size() const noexcept { return states_.size(); }
    int modes() const noexcept { return modes_; }
    int max_total() const noexcept { return max_total_; }

    const MultiIndex& operator[](std::size_t i) const { return states_[i]; }
    auto begin() const noexcept { return states_.begin(); }
    auto end() const noexcept { return states_.end(); }

    std::optional<std::size_t> index_of(const MultiIndex& n) const;
    /// Ordinal of a state known to be present; throws DomainError otherwise.
    std::size_t at(const MultiIndex& n) const;
    std::size_t vacuum() const noexcept { return 0; }

    /// keep[i] is true iff state i has total occupation <= max_total.
    std::vector<bool> mask_total_at_most(int max_total) const;

private:
    int modes_;
    int max_total_;
    std::vector<MultiIndex> states_;
};

FockBasis enumerate_basis(const RepSpec& spec);

/// True when n has r non-negative entries and satisfies k_0 + s*n_tot > 0.
bool admissible(const RepSpec& spec, const MultiIndex& n);

/// F_i(n) = n_i (k_0 + s n_tot). Throws DomainError for inadmissible n.
double structure_function(const RepSpec& spec, const MultiIndex& n, int i);

SparseOperator lowering_matrix(const RepSpec& spec, const FockBasis& basis, int i);
SparseOperator raising_matrix(const RepSpec& spec, const FockBasis& basis, int i);
SparseOperator number_matrix(const FockBasis& basis, int i);

/// h_i = s/(r+1) [ (r+1)[a_i^-, a_i^+] - sum_j [a_j^-, a_j^+] ], assembled
/// from the given ladder matrices.
SparseOperator mode_hamiltonian(int s, std::span<const SparseOperator> lowering,
                                std::span<const SparseOperator> raising, int i);

/// Closed form of the diagonal of h_i: n_i + (s k_0 + 1)/(r+1).
double mode_hamiltonian_offset(const RepSpec& spec);

/// Leading dim x dim block of an operator.
SparseOperator leading_block(const SparseOperator& op, std::size_t dim);

/// One fully assembled representation: basis, ladder, number and
/// Hamiltonian matrices. Immutable after construction.
///
/// For s=+1 the ladder matrices are truncated at n_max. The mode
/// Hamiltonians are assembled on a basis one shell larger and then
/// restricted, so h_i and H carry no truncation artifact on the boundary
/// shell.
class Representation {
public:
    explicit Representation(RepSpec spec);

    const RepSpec& spec() const noexcept { return spec_; }
    const FockBasis& basis() const noexcept { return basis_; }
    std::size_t dim() const noexcept { return basis_.size(); }
    int modes() const noexcept { return spec_.r; }

    const SparseOperator& lowering(int i) const { return lowering_.at(static_cast<std::size_t>(i)); }
    const SparseOperator& raising(int i) const { return raising_.at(static_cast<std::size_t>(i)); }
    const SparseOperator& number(int i) const { return number_.at(static_cast<std::size_t>(i)); }
    const SparseOperator& mode_hamiltonian(int i) const { return mode_h_.at(static_cast<std::size_t>(i)); }
    const SparseOperator& hamiltonian() const noexcept { return hamiltonian_; }

    /// Constant c making H|0> = 0.
    double zero_point() const noexcept { return zero_point_; }
    /// r s k_0 / (r+1), the alternative value of c; reported for comparison,
    /// it does not annihilate the vacuum energy.
    double literal_zero_point() const noexcept;

    /// States on which truncation cannot affect a relation with at most two
    /// raisings: n_tot <= n_max - 2 for s=+1, everything for s=-1.
    std::vector<bool> interior_mask() const;
    bool truncated() const noexcept { return spec_.bosonic(); }

    /// E(n) = sum_i e_i n_i.
    double energy(const MultiIndex& n) const;

private:
    RepSpec spec_;
    FockBasis basis_;
    std::vector<SparseOperator> lowering_, raising_, number_, mode_h_;
    SparseOperator hamiltonian_;
    double zero_point_ = 0.0;
};

}  // namespace arstat
