#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "arstat/fock.hpp"

namespace arstat {

enum class Subspace { full, interior };

const char* to_string(Subspace s) noexcept;

/// Outcome of checking one relation as a matrix identity.
struct ResidualReport {
    std::string relation_id;
    double max_residual = 0.0;  // defect max-norm over the operand scale
    Subspace subspace = Subspace::full;
    double tolerance = 0.0;

    bool pass() const noexcept { return max_residual <= tolerance; }
};

struct Tolerances {
    double exact = 1e-12;     // untruncated (s=-1) spaces
    double interior = 1e-10;  // interior subspace of a truncated space
};

/// Defect max-norm restricted to `keep`, divided by `scale`. A zero scale
/// (all operands vanish) leaves the absolute defect.
double relative_residual(const SparseOperator& defect, double scale, const std::vector<bool>& keep);

/// [[x, y], z]
SparseOperator triple_product(const SparseOperator& x, const SparseOperator& y, const SparseOperator& z);

struct NamedOperator {
    std::string name;
    SparseOperator op;
};

/// a_i^-, a_i^+ for every mode followed by [a_i^+, a_j^-] for every pair.
std::vector<NamedOperator> default_sample_set(const Representation& rep);

/// Index quintuples (x, y, u, v, w) into default_sample_set(rep): every
/// quintuple of ladder generators drawn from at most two modes, then 50
/// further quintuples over the whole set from a fixed-seed generator.
std::vector<std::array<std::size_t, 5>> derivation_quintuples(const Representation& rep);

std::vector<ResidualReport> check_same_sign_commutators(const Representation& rep, const Tolerances& tol = {});
std::vector<ResidualReport> check_triple_relations(const Representation& rep, const Tolerances& tol = {});
std::vector<ResidualReport> check_heisenberg(const Representation& rep, const Tolerances& tol = {});

/// Alternation, cyclic and derivation identities of [x,y,z] = [[x,y],z].
/// One report per identity carrying the worst instance. Multilinear
/// defects are scaled by the product of their operands' max-norms.
std::vector<ResidualReport> check_lie_triple_axioms(const Representation& rep,
                                                    const std::vector<NamedOperator>& sample_set,
                                                    const std::vector<std::array<std::size_t, 5>>& quintuples,
                                                    const Tolerances& tol = {});

struct BoseLimitPoint {
    int k = 0;
    double amplitude = 0.0;  // <n - e_i| a_i^- |n> / sqrt(k)
    double deviation = 0.0;  // |amplitude - sqrt(n_i)|
};

/// Rescaled lowering amplitude of `state` in mode i for each k in `ks`
/// (ascending). The remaining RepSpec fields come from `base`.
std::vector<BoseLimitPoint> check_bose_limit(const RepSpec& base, const std::vector<int>& ks,
                                             const MultiIndex& state, int i);

// Representation-level invariants, phrased as residuals so they share the
// report format.

/// a_i^+ against the conjugate transpose of a_i^-; exact comparison.
std::vector<ResidualReport> check_adjointness(const Representation& rep);
/// Smallest structure function value on the basis (negative part reported).
ResidualReport check_positivity(const Representation& rep);
/// s=-1 only: |basis size - (k-1+r)!/((k-1)! r!)|.
std::vector<ResidualReport> check_dimension(const Representation& rep);
/// s=-1 only: every product of k raising operators is the zero matrix.
/// With `all_orderings` each of the r^k ordered products is formed,
/// otherwise one product per multiset of modes.
std::vector<ResidualReport> check_exclusion(const Representation& rep, bool all_orderings = false);
/// H is diagonal with entries sum_i e_i n_i.
ResidualReport check_spectrum(const Representation& rep, const Tolerances& tol = {});

/// Every check above that applies to this representation, in fixed order.
std::vector<ResidualReport> run_verification(const Representation& rep, const Tolerances& tol = {});

/// (k-1+r)! / ((k-1)! r!)
std::size_t exclusion_dimension(int r, int k);

}  // namespace arstat
