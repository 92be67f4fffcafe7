#include "arstat/robertson.hpp"

#include <algorithm>
#include <cmath>

#include "arstat/error.hpp"
#include "arstat/kernels.hpp"

namespace arstat {

namespace {

constexpr cplx kI{0.0, 1.0};

void require_normalized(std::span<const cplx> state) {
    const double n = kernels::norm(state);
    if (std::abs(n * n - 1.0) > 1e-10) throw DomainError("state is not normalized");
}

// pairs(a, b) = <O_a O_b>, means(a) = <O_a>
struct Moments {
    Eigen::MatrixXcd pairs;
    Eigen::VectorXcd means;
};

Moments moments(std::span<const SparseOperator> ops, std::span<const cplx> state) {
    require_normalized(state);
    const auto m = static_cast<Eigen::Index>(ops.size());
    std::vector<std::vector<cplx>> applied;
    applied.reserve(ops.size());
    for (const auto& op : ops) applied.push_back(op.apply(state));

    Moments out{Eigen::MatrixXcd(m, m), Eigen::VectorXcd(m)};
    for (Eigen::Index b = 0; b < m; ++b) {
        const auto& ob = applied[static_cast<std::size_t>(b)];
        out.means(b) = kernels::inner_product(state, ob);
        for (Eigen::Index a = 0; a < m; ++a) {
            const auto chain = ops[static_cast<std::size_t>(a)].apply(ob);
            out.pairs(a, b) = kernels::inner_product(state, chain);
        }
    }
    return out;
}

}  // namespace

std::vector<SparseOperator> quadrature_operators(const Representation& rep) {
    const int r = rep.modes();
    std::vector<SparseOperator> x(2 * static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) {
        x[static_cast<std::size_t>(i)] = cplx(0.5) * (rep.raising(i) + rep.lowering(i));
        x[static_cast<std::size_t>(i + r)] = (0.5 * kI) * (rep.raising(i) - rep.lowering(i));
    }
    return x;
}

std::vector<SparseOperator> ladder_operators(const Representation& rep) {
    std::vector<SparseOperator> a;
    for (int i = 0; i < rep.modes(); ++i) a.push_back(rep.lowering(i));
    for (int i = 0; i < rep.modes(); ++i) a.push_back(rep.raising(i));
    return a;
}

Eigen::MatrixXcd quadrature_transform(int r) {
    const Eigen::Index n = r;
    Eigen::MatrixXcd u = Eigen::MatrixXcd::Zero(2 * n, 2 * n);
    for (Eigen::Index i = 0; i < n; ++i) {
        u(i, i) = 0.5;
        u(i, i + n) = 0.5;
        u(i + n, i) = -0.5 * kI;
        u(i + n, i + n) = 0.5 * kI;
    }
    return u;
}

Eigen::MatrixXcd complex_dispersion(std::span<const SparseOperator> ops, std::span<const cplx> state) {
    const Moments mo = moments(ops, state);
    return 0.5 * (mo.pairs + mo.pairs.transpose()) - mo.means * mo.means.transpose();
}

Eigen::MatrixXcd complex_commutator(std::span<const SparseOperator> ops, std::span<const cplx> state) {
    const Moments mo = moments(ops, state);
    return (-0.5 * kI) * (mo.pairs - mo.pairs.transpose());
}

Eigen::MatrixXd dispersion_matrix(std::span<const SparseOperator> ops, std::span<const cplx> state) {
    return complex_dispersion(ops, state).real();
}

Eigen::MatrixXd commutator_matrix(std::span<const SparseOperator> ops, std::span<const cplx> state) {
    return complex_commutator(ops, state).real();
}

double BlockResiduals::max() const noexcept { return std::max({lowering, raising, upper, lower}); }

const char* to_string(RobertsonStatus s) noexcept {
    switch (s) {
        case RobertsonStatus::pass: return "pass";
        case RobertsonStatus::fail: return "fail";
        case RobertsonStatus::inconclusive: return "inconclusive";
    }
    return "fail";
}

RobertsonReport robertson_report(const Representation& rep, std::span<const cplx> state,
                                 const RobertsonTolerances& tol) {
    if (state.size() != rep.dim()) throw DomainError("state length does not match the representation");
    const Eigen::Index r = rep.modes();

    const auto a_ops = ladder_operators(rep);
    const Moments am = moments(a_ops, state);
    const Eigen::MatrixXcd sigma_a = 0.5 * (am.pairs + am.pairs.transpose()) - am.means * am.means.transpose();
    const Eigen::MatrixXcd c_a = (-0.5 * kI) * (am.pairs - am.pairs.transpose());

    RobertsonReport out;
    for (Eigen::Index i = 0; i < r; ++i)
        for (Eigen::Index j = 0; j < r; ++j) {
            auto& b = out.blocks;
            b.lowering = std::max({b.lowering, std::abs(sigma_a(i, j)), std::abs(c_a(i, j))});
            b.raising = std::max({b.raising, std::abs(sigma_a(i + r, j + r)), std::abs(c_a(i + r, j + r))});
            b.upper = std::max(b.upper, std::abs(sigma_a(i, j + r) - kI * c_a(i, j + r)));
            b.lower = std::max(b.lower, std::abs(sigma_a(i + r, j) + kI * c_a(i + r, j)));
        }

    const auto x_ops = quadrature_operators(rep);
    out.det_sigma = dispersion_matrix(x_ops, state).determinant();
    out.det_c = commutator_matrix(x_ops, state).determinant();
    out.rel_gap = std::abs(out.det_sigma - out.det_c) / std::max(std::abs(out.det_c), 1e-300);
    out.status = out.blocks.max() <= tol.block && out.rel_gap <= tol.gap ? RobertsonStatus::pass
                                                                        : RobertsonStatus::fail;
    return out;
}

RobertsonReport saturation_check(const Representation& rep, const CoherentState& cs,
                                 const RobertsonTolerances& tol) {
    if (!rep.spec().bosonic()) throw InvalidParameter("coherent states are defined for s=+1 only");
    if (rep.spec().k != cs.k || rep.modes() != static_cast<int>(cs.omega.size()))
        throw DomainError("coherent state and representation disagree on k or r");

    const std::vector<cplx> psi = embed(cs, rep.basis());
    RobertsonReport out = robertson_report(rep, psi, tol);
    out.omega = cs.omega;

    double residual = 0.0;
    for (int i = 0; i < rep.modes(); ++i) residual = std::max(residual, cs.residual_bound(i));
    if (cs.tail_bound > tol.gap || residual > tol.block) out.status = RobertsonStatus::inconclusive;
    return out;
}

}  // namespace arstat
