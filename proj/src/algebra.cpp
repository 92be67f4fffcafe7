#include "arstat/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include "arstat/error.hpp"

namespace arstat {

namespace {

std::string label(int i) { return std::to_string(i + 1); }

struct Context {
    std::vector<bool> keep;
    Subspace subspace;
    double tolerance;
};

Context context_for(const Representation& rep, const Tolerances& tol) {
    if (rep.truncated()) return {rep.interior_mask(), Subspace::interior, tol.interior};
    return {rep.interior_mask(), Subspace::full, tol.exact};
}

double max_norm_of(std::initializer_list<const SparseOperator*> ops) {
    double m = 0.0;
    for (const auto* op : ops) m = std::max(m, op->max_norm());
    return m;
}

int kronecker(int a, int b) { return a == b ? 1 : 0; }

}  // namespace

const char* to_string(Subspace s) noexcept { return s == Subspace::full ? "full" : "interior"; }

double relative_residual(const SparseOperator& defect, double scale, const std::vector<bool>& keep) {
    const double d = defect.max_norm(keep);
    return scale > 0.0 ? d / scale : d;
}

SparseOperator triple_product(const SparseOperator& x, const SparseOperator& y, const SparseOperator& z) {
    return commutator(commutator(x, y), z);
}

std::vector<NamedOperator> default_sample_set(const Representation& rep) {
    std::vector<NamedOperator> set;
    const int r = rep.modes();
    for (int i = 0; i < r; ++i) {
        set.push_back({"a-" + label(i), rep.lowering(i)});
        set.push_back({"a+" + label(i), rep.raising(i)});
    }
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            set.push_back({"[a+" + label(i) + ",a-" + label(j) + "]", commutator(rep.raising(i), rep.lowering(j))});
    return set;
}

std::vector<std::array<std::size_t, 5>> derivation_quintuples(const Representation& rep) {
    const auto r = static_cast<std::size_t>(rep.modes());
    std::set<std::array<std::size_t, 5>> unique;
    for (std::size_t p = 0; p < r; ++p) {
        for (std::size_t q = p; q < r; ++q) {
            // Sample-set slots of a_p^-, a_p^+, a_q^-, a_q^+.
            const std::array<std::size_t, 4> gens{2 * p, 2 * p + 1, 2 * q, 2 * q + 1};
            for (std::size_t code = 0; code < 1024; ++code) {
                std::array<std::size_t, 5> t{};
                std::size_t c = code;
                for (auto& slot : t) {
                    slot = gens[c % 4];
                    c /= 4;
                }
                unique.insert(t);
            }
        }
    }
    std::vector<std::array<std::size_t, 5>> out(unique.begin(), unique.end());

    const std::size_t sample_size = 2 * r + r * r;
    std::mt19937 gen(20240527u);
    std::uniform_int_distribution<std::size_t> pick(0, sample_size - 1);
    for (int n = 0; n < 50; ++n) {
        std::array<std::size_t, 5> t{};
        for (auto& slot : t) slot = pick(gen);
        out.push_back(t);
    }
    return out;
}

std::vector<ResidualReport> check_same_sign_commutators(const Representation& rep, const Tolerances& tol) {
    const auto ctx = context_for(rep, tol);
    const int r = rep.modes();
    struct Pair {
        int i, j;
        bool raising;
    };
    std::vector<Pair> pairs;
    for (int i = 0; i < r; ++i)
        for (int j = i + 1; j < r; ++j) {
            pairs.push_back({i, j, true});
            pairs.push_back({i, j, false});
        }

    std::vector<ResidualReport> out(pairs.size());
#pragma omp parallel for schedule(dynamic)
    for (std::size_t p = 0; p < pairs.size(); ++p) {
        const auto& [i, j, up] = pairs[p];
        const SparseOperator& x = up ? rep.raising(i) : rep.lowering(i);
        const SparseOperator& y = up ? rep.raising(j) : rep.lowering(j);
        const std::string sign = up ? "a+" : "a-";
        out[p] = {"commute[" + sign + label(i) + "," + sign + label(j) + "]",
                  relative_residual(commutator(x, y), max_norm_of({&x, &y}), ctx.keep), ctx.subspace,
                  ctx.tolerance};
    }
    return out;
}

std::vector<ResidualReport> check_triple_relations(const Representation& rep, const Tolerances& tol) {
    const auto ctx = context_for(rep, tol);
    const int r = rep.modes();
    const auto s = static_cast<double>(rep.spec().s);
    const std::size_t n = static_cast<std::size_t>(r) * r * r;

    std::vector<ResidualReport> out(2 * n);
#pragma omp parallel for schedule(dynamic)
    for (std::size_t t = 0; t < n; ++t) {
        const int i = static_cast<int>(t / (r * r));
        const int j = static_cast<int>((t / r) % r);
        const int k = static_cast<int>(t % r);
        const std::string ijk = "[" + label(i) + "," + label(j) + "," + label(k) + "]";
        const SparseOperator inner = commutator(rep.raising(i), rep.lowering(j));

        // [[a_i^+, a_j^-], a_k^+] = -s d_jk a_i^+ - s d_ij a_k^+
        SparseOperator up = commutator(inner, rep.raising(k)) +
                            cplx(s * kronecker(j, k)) * rep.raising(i) +
                            cplx(s * kronecker(i, j)) * rep.raising(k);
        // [[a_i^+, a_j^-], a_k^-] = s d_ik a_j^- + s d_ij a_k^-
        SparseOperator down = commutator(inner, rep.lowering(k)) -
                              cplx(s * kronecker(i, k)) * rep.lowering(j) -
                              cplx(s * kronecker(i, j)) * rep.lowering(k);

        const double scale_up = max_norm_of({&rep.raising(i), &rep.lowering(j), &rep.raising(k)});
        const double scale_down = max_norm_of({&rep.raising(i), &rep.lowering(j), &rep.lowering(k)});
        out[2 * t] = {"triple+" + ijk, relative_residual(up, scale_up, ctx.keep), ctx.subspace, ctx.tolerance};
        out[2 * t + 1] = {"triple-" + ijk, relative_residual(down, scale_down, ctx.keep), ctx.subspace,
                          ctx.tolerance};
    }
    return out;
}

std::vector<ResidualReport> check_heisenberg(const Representation& rep, const Tolerances& tol) {
    const auto ctx = context_for(rep, tol);
    const int r = rep.modes();
    const SparseOperator& h = rep.hamiltonian();
    std::vector<ResidualReport> out(2 * static_cast<std::size_t>(r));
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < r; ++i) {
        const cplx e = rep.spec().energies[static_cast<std::size_t>(i)];
        const SparseOperator& up = rep.raising(i);
        const SparseOperator& down = rep.lowering(i);
        const auto slot = 2 * static_cast<std::size_t>(i);
        out[slot] = {"heisenberg[H,a+" + label(i) + "]",
                     relative_residual(commutator(h, up) - e * up, max_norm_of({&h, &up}), ctx.keep),
                     ctx.subspace, ctx.tolerance};
        out[slot + 1] = {"heisenberg[H,a-" + label(i) + "]",
                         relative_residual(commutator(h, down) + e * down, max_norm_of({&h, &down}), ctx.keep),
                         ctx.subspace, ctx.tolerance};
    }
    return out;
}

std::vector<ResidualReport> check_lie_triple_axioms(const Representation& rep,
                                                    const std::vector<NamedOperator>& sample_set,
                                                    const std::vector<std::array<std::size_t, 5>>& quintuples,
                                                    const Tolerances& tol) {
    const auto ctx = context_for(rep, tol);
    const std::size_t m = sample_set.size();
    std::vector<double> norms(m);
    for (std::size_t a = 0; a < m; ++a) norms[a] = sample_set[a].op.max_norm();
    for (const auto& q : quintuples)
        for (auto idx : q)
            if (idx >= m) throw DomainError("quintuple index outside the sample set");

    std::vector<double> alternation(m);
#pragma omp parallel for schedule(dynamic)
    for (std::size_t a = 0; a < m; ++a) {
        const auto& x = sample_set[a].op;
        alternation[a] = relative_residual(triple_product(x, x, x), std::pow(norms[a], 3), ctx.keep);
    }

    // Every ordered triple while that stays small, else a fixed-seed sample.
    std::vector<std::array<std::size_t, 3>> triples;
    if (m * m * m <= 4096) {
        for (std::size_t a = 0; a < m; ++a)
            for (std::size_t b = 0; b < m; ++b)
                for (std::size_t c = 0; c < m; ++c) triples.push_back({a, b, c});
    } else {
        std::mt19937 gen(7u);
        std::uniform_int_distribution<std::size_t> pick(0, m - 1);
        for (int n = 0; n < 4096; ++n) triples.push_back({pick(gen), pick(gen), pick(gen)});
    }
    std::vector<double> cyclic(triples.size());
#pragma omp parallel for schedule(dynamic)
    for (std::size_t t = 0; t < triples.size(); ++t) {
        const auto& [a, b, c] = triples[t];
        const auto& x = sample_set[a].op;
        const auto& y = sample_set[b].op;
        const auto& z = sample_set[c].op;
        const SparseOperator defect = triple_product(x, y, z) + triple_product(y, z, x) + triple_product(z, x, y);
        cyclic[t] = relative_residual(defect, norms[a] * norms[b] * norms[c], ctx.keep);
    }

    std::vector<double> derivation(quintuples.size());
#pragma omp parallel for schedule(dynamic)
    for (std::size_t t = 0; t < quintuples.size(); ++t) {
        const auto& q = quintuples[t];
        const auto& x = sample_set[q[0]].op;
        const auto& y = sample_set[q[1]].op;
        const auto& u = sample_set[q[2]].op;
        const auto& v = sample_set[q[3]].op;
        const auto& w = sample_set[q[4]].op;
        const SparseOperator xy = commutator(x, y);
        const SparseOperator lhs = commutator(xy, triple_product(u, v, w));
        const SparseOperator rhs = triple_product(commutator(xy, u), v, w) +
                                   triple_product(u, commutator(xy, v), w) +
                                   commutator(commutator(u, v), commutator(xy, w));
        double scale = 1.0;
        for (auto idx : q) scale *= norms[idx];
        derivation[t] = relative_residual(lhs - rhs, scale, ctx.keep);
    }

    auto worst = [](const std::vector<double>& v) { return v.empty() ? 0.0 : *std::max_element(v.begin(), v.end()); };
    return {
        {"lts.alternation", worst(alternation), ctx.subspace, ctx.tolerance},
        {"lts.cyclic", worst(cyclic), ctx.subspace, ctx.tolerance},
        {"lts.derivation", worst(derivation), ctx.subspace, ctx.tolerance},
    };
}

std::vector<BoseLimitPoint> check_bose_limit(const RepSpec& base, const std::vector<int>& ks,
                                             const MultiIndex& state, int i) {
    if (ks.empty()) return {};
    if (i < 0 || i >= base.r) throw DomainError("mode index out of range");
    const auto mode = static_cast<std::size_t>(i);
    if (state.modes() != static_cast<std::size_t>(base.r) || state[mode] < 1)
        throw DomainError("Bose-limit state must occupy the probed mode");

    std::vector<BoseLimitPoint> out;
    for (std::size_t idx = 0; idx < ks.size(); ++idx) {
        RepSpec spec = base;
        spec.k = ks[idx];
        if (spec.bosonic()) spec.n_max = std::max(spec.n_max.value_or(1), state.total());
        spec.validate();
        const FockBasis basis = enumerate_basis(spec);
        const auto col = basis.index_of(state);
        if (!admissible(spec, state) || !col)
            throw DomainError("state " + state.to_string() + " is not admissible for k=" + std::to_string(spec.k));
        const SparseOperator low = lowering_matrix(spec, basis, i);
        const double amp = low.entry(basis.at(state.lowered(mode)), *col).real() / std::sqrt(spec.k);
        out.push_back({spec.k, amp, std::abs(amp - std::sqrt(static_cast<double>(state[mode])))});
    }
    return out;
}

std::vector<ResidualReport> check_adjointness(const Representation& rep) {
    std::vector<ResidualReport> out;
    for (int i = 0; i < rep.modes(); ++i)
        out.push_back({"adjoint[a" + label(i) + "]", max_difference(rep.raising(i), rep.lowering(i).adjoint()),
                       Subspace::full, 0.0});
    return out;
}

ResidualReport check_positivity(const Representation& rep) {
    double violations = 0.0;
    for (const auto& n : rep.basis())
        for (int i = 0; i < rep.modes(); ++i) {
            const double f = structure_function(rep.spec(), n, i);
            const bool zero_expected = n[static_cast<std::size_t>(i)] == 0;
            if (f < 0.0 || (f == 0.0) != zero_expected) violations += 1.0;
        }
    return {"positivity", violations, Subspace::full, 0.0};
}

std::size_t exclusion_dimension(int r, int k) {
    // C(k-1+r, r) by the multiplicative formula; exact in integers.
    std::size_t c = 1;
    for (int j = 1; j <= r; ++j) c = c * static_cast<std::size_t>(k - 1 + j) / static_cast<std::size_t>(j);
    return c;
}

std::vector<ResidualReport> check_dimension(const Representation& rep) {
    if (rep.spec().bosonic()) return {};
    const auto expected = static_cast<double>(exclusion_dimension(rep.spec().r, rep.spec().k));
    return {{"dimension", std::abs(static_cast<double>(rep.dim()) - expected), Subspace::full, 0.0}};
}

std::vector<ResidualReport> check_exclusion(const Representation& rep, bool all_orderings) {
    if (rep.spec().bosonic()) return {};
    const int r = rep.modes();
    const int k = rep.spec().k;

    std::vector<std::vector<int>> sequences;
    std::vector<int> seq(static_cast<std::size_t>(k), 0);
    // Odometer over {0..r-1}^k; multisets keep only non-decreasing sequences.
    while (true) {
        if (all_orderings || std::is_sorted(seq.begin(), seq.end())) sequences.push_back(seq);
        int pos = k - 1;
        while (pos >= 0 && seq[static_cast<std::size_t>(pos)] == r - 1) seq[static_cast<std::size_t>(pos--)] = 0;
        if (pos < 0) break;
        ++seq[static_cast<std::size_t>(pos)];
    }

    std::vector<double> worst(sequences.size());
#pragma omp parallel for schedule(dynamic)
    for (std::size_t t = 0; t < sequences.size(); ++t) {
        SparseOperator prod = SparseOperator::identity(rep.dim());
        double scale = 1.0;
        for (int mode : sequences[t]) {
            prod = prod * rep.raising(mode);
            scale *= rep.raising(mode).max_norm();
        }
        worst[t] = scale > 0.0 ? prod.max_norm() / scale : prod.max_norm();
    }
    const double m = worst.empty() ? 0.0 : *std::max_element(worst.begin(), worst.end());
    return {{"exclusion[(a+)^" + std::to_string(k) + "=0]", m, Subspace::full, 0.0}};
}

ResidualReport check_spectrum(const Representation& rep, const Tolerances& tol) {
    const SparseOperator& h = rep.hamiltonian();
    double scale = 0.0;
    for (const auto& n : rep.basis()) scale = std::max(scale, std::abs(rep.energy(n)));
    double defect = 0.0;
    for (const auto& e : h.triplets()) {
        const double target = e.row == e.col ? rep.energy(rep.basis()[e.row]) : 0.0;
        defect = std::max(defect, std::abs(e.value - target));
    }
    // Diagonal entries that vanished entirely still have to match E(n).
    for (std::size_t j = 0; j < rep.dim(); ++j)
        if (h.entry(j, j) == cplx(0.0)) defect = std::max(defect, std::abs(rep.energy(rep.basis()[j])));
    return {"spectrum", scale > 0.0 ? defect / scale : defect, Subspace::full, tol.exact};
}

std::vector<ResidualReport> run_verification(const Representation& rep, const Tolerances& tol) {
    std::vector<ResidualReport> all;
    auto append = [&all](std::vector<ResidualReport> part) {
        all.insert(all.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
    };
    append(check_adjointness(rep));
    all.push_back(check_positivity(rep));
    append(check_dimension(rep));
    append(check_exclusion(rep));
    all.push_back(check_spectrum(rep, tol));
    append(check_same_sign_commutators(rep, tol));
    append(check_triple_relations(rep, tol));
    append(check_heisenberg(rep, tol));
    append(check_lie_triple_axioms(rep, default_sample_set(rep), derivation_quintuples(rep), tol));
    return all;
}

}  // namespace arstat
