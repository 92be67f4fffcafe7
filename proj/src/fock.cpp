#include "arstat/fock.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "arstat/error.hpp"

namespace arstat {

namespace {

// Appends every composition of `total` into parts[pos..] in lexicographic order.
void compositions(MultiIndex& current, std::size_t pos, int remaining, std::vector<MultiIndex>& out) {
    if (pos + 1 == current.modes()) {
        current[pos] = remaining;
        out.push_back(current);
        return;
    }
    for (int v = 0; v <= remaining; ++v) {
        current[pos] = v;
        compositions(current, pos + 1, remaining - v, out);
    }
}

void check_mode(int modes, int i) {
    if (i < 0 || i >= modes) throw DomainError("mode index " + std::to_string(i) + " out of range");
}

}  // namespace

FockBasis::FockBasis(int modes, int max_total) : modes_(modes), max_total_(max_total) {
    if (modes < 1) throw InvalidParameter("basis needs at least one mode");
    if (max_total < 0) throw InvalidParameter("basis cap must be non-negative");
    MultiIndex current(static_cast<std::size_t>(modes));
    for (int t = 0; t <= max_total; ++t) compositions(current, 0, t, states_);
}

std::optional<std::size_t> FockBasis::index_of(const MultiIndex& n) const {
    if (n.modes() != static_cast<std::size_t>(modes_)) return std::nullopt;
    auto it = std::lower_bound(states_.begin(), states_.end(), n);
    if (it == states_.end() || *it != n) return std::nullopt;
    return static_cast<std::size_t>(it - states_.begin());
}

std::size_t FockBasis::at(const MultiIndex& n) const {
    auto idx = index_of(n);
    if (!idx) throw DomainError("state " + n.to_string() + " is not in the basis");
    return *idx;
}

std::vector<bool> FockBasis::mask_total_at_most(int max_total) const {
    std::vector<bool> keep(states_.size());
    for (std::size_t i = 0; i < states_.size(); ++i) keep[i] = states_[i].total() <= max_total;
    return keep;
}

FockBasis enumerate_basis(const RepSpec& spec) {
    spec.validate();
    return FockBasis(spec.r, spec.max_total());
}

bool admissible(const RepSpec& spec, const MultiIndex& n) {
    if (n.modes() != static_cast<std::size_t>(spec.r)) return false;
    for (int v : n.values())
        if (v < 0) return false;
    return spec.k0() + spec.s * n.total() > 0;
}

double structure_function(const RepSpec& spec, const MultiIndex& n, int i) {
    check_mode(spec.r, i);
    if (!admissible(spec, n)) throw DomainError("state " + n.to_string() + " is not admissible");
    return static_cast<double>(n[static_cast<std::size_t>(i)]) *
           static_cast<double>(spec.k0() + spec.s * n.total());
}

SparseOperator lowering_matrix(const RepSpec& spec, const FockBasis& basis, int i) {
    check_mode(spec.r, i);
    const auto mode = static_cast<std::size_t>(i);
    std::vector<Triplet> t;
    for (std::size_t col = 0; col < basis.size(); ++col) {
        const MultiIndex& n = basis[col];
        if (n[mode] == 0) continue;
        const std::size_t row = basis.at(n.lowered(mode));
        t.push_back({row, col, std::sqrt(structure_function(spec, n, i))});
    }
    return SparseOperator::from_triplets(basis.size(), std::move(t));
}

SparseOperator raising_matrix(const RepSpec& spec, const FockBasis& basis, int i) {
    check_mode(spec.r, i);
    const auto mode = static_cast<std::size_t>(i);
    std::vector<Triplet> t;
    for (std::size_t col = 0; col < basis.size(); ++col) {
        const MultiIndex up = basis[col].raised(mode);
        // Dropped: the s=-1 exclusion boundary (amplitude exactly zero) or
        // the s=+1 truncation shell.
        auto row = basis.index_of(up);
        if (!row || !admissible(spec, up)) continue;
        t.push_back({*row, col, std::sqrt(structure_function(spec, up, i))});
    }
    return SparseOperator::from_triplets(basis.size(), std::move(t));
}

SparseOperator number_matrix(const FockBasis& basis, int i) {
    check_mode(basis.modes(), i);
    std::vector<double> d(basis.size());
    for (std::size_t j = 0; j < basis.size(); ++j) d[j] = basis[j][static_cast<std::size_t>(i)];
    return SparseOperator::diagonal(d);
}

SparseOperator mode_hamiltonian(int s, std::span<const SparseOperator> lowering,
                                std::span<const SparseOperator> raising, int i) {
    const int r = static_cast<int>(lowering.size());
    check_mode(r, i);
    if (raising.size() != lowering.size()) throw DomainError("ladder operator lists differ in length");
    const auto mode = static_cast<std::size_t>(i);

    SparseOperator sum(lowering[0].dim());
    for (std::size_t j = 0; j < lowering.size(); ++j) sum = sum + commutator(lowering[j], raising[j]);
    SparseOperator h = cplx(r + 1) * commutator(lowering[mode], raising[mode]) - sum;
    return cplx(static_cast<double>(s) / (r + 1)) * h;
}

double mode_hamiltonian_offset(const RepSpec& spec) {
    return (spec.s * spec.k0() + 1.0) / (spec.r + 1.0);
}

SparseOperator leading_block(const SparseOperator& op, std::size_t dim) {
    if (dim > op.dim()) throw DomainError("leading block larger than operator");
    std::vector<Triplet> t;
    for (const auto& e : op.triplets())
        if (e.row < dim && e.col < dim) t.push_back(e);
    return SparseOperator::from_triplets(dim, std::move(t));
}

Representation::Representation(RepSpec spec) : spec_(std::move(spec)), basis_(enumerate_basis(spec_)) {
    const int r = spec_.r;
    // One extra shell for s=+1 so that [a_i^-, a_i^+] is exact on the top
    // shell of the kept basis.
    const FockBasis work = spec_.bosonic() ? FockBasis(r, basis_.max_total() + 1) : basis_;

    std::vector<SparseOperator> low_w, raise_w;
    for (int i = 0; i < r; ++i) {
        low_w.push_back(lowering_matrix(spec_, work, i));
        raise_w.push_back(raising_matrix(spec_, work, i));
    }

    const std::size_t dim = basis_.size();
    SparseOperator h_sum(dim);
    for (int i = 0; i < r; ++i) {
        lowering_.push_back(leading_block(low_w[static_cast<std::size_t>(i)], dim));
        raising_.push_back(leading_block(raise_w[static_cast<std::size_t>(i)], dim));
        number_.push_back(number_matrix(basis_, i));
        mode_h_.push_back(leading_block(arstat::mode_hamiltonian(spec_.s, low_w, raise_w, i), dim));
        h_sum = h_sum + cplx(spec_.energies[static_cast<std::size_t>(i)]) * mode_h_.back();
    }
    zero_point_ = -h_sum.entry(basis_.vacuum(), basis_.vacuum()).real();
    hamiltonian_ = h_sum + cplx(zero_point_) * SparseOperator::identity(dim);
}

double Representation::literal_zero_point() const noexcept {
    return static_cast<double>(spec_.r) / (spec_.r + 1.0) * spec_.s * spec_.k0();
}

std::vector<bool> Representation::interior_mask() const {
    if (!truncated()) return std::vector<bool>(dim(), true);
    return basis_.mask_total_at_most(basis_.max_total() - 2);
}

double Representation::energy(const MultiIndex& n) const {
    double e = 0.0;
    for (std::size_t i = 0; i < n.modes(); ++i) e += spec_.energies.at(i) * n[i];
    return e;
}

}  // namespace arstat
