#include "halfstat/twoparticle.hpp"

#include <cmath>

namespace halfstat {

TwoParticleOperator lift(const Multiport& u) {
    return {u.dim(), kron(u.matrix(), u.matrix())};
}

BasisMap basis_map(int d) {
    if (d < 1) throw ShapeError("basis_map: d must be positive");
    BasisMap bm;
    bm.d = d;
    for (int i = 1; i <= d; ++i) bm.sym_labels.emplace_back(i, i);
    for (int i = 1; i <= d; ++i)
        for (int j = i + 1; j <= d; ++j) bm.sym_labels.emplace_back(i, j);
    for (int i = 1; i <= d; ++i)
        for (int j = i + 1; j <= d; ++j) bm.anti_labels.emplace_back(i, j);

    const std::size_t n = static_cast<std::size_t>(d) * d;
    ComplexMatrix v(n, n);
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    std::size_t col = 0;
    for (const auto& [i, j] : bm.sym_labels) {
        if (i == j) {
            v(pair_index(i, i, d), col) = 1.0;
        } else {
            v(pair_index(i, j, d), col) = inv_sqrt2;
            v(pair_index(j, i, d), col) = inv_sqrt2;
        }
        ++col;
    }
    for (const auto& [i, j] : bm.anti_labels) {
        v(pair_index(i, j, d), col) = inv_sqrt2;
        v(pair_index(j, i, d), col) = -inv_sqrt2;
        ++col;
    }
    bm.change_of_basis = std::move(v);
    return bm;
}

TwoParticleOperator projector_S(int d) {
    const std::size_t n = static_cast<std::size_t>(d) * d;
    ComplexMatrix s(n, n);
    for (int i = 1; i <= d; ++i)
        for (int j = 1; j <= d; ++j) {
            s(pair_index(i, j, d), pair_index(i, j, d)) += 0.5;
            s(pair_index(j, i, d), pair_index(i, j, d)) += 0.5;
        }
    return {d, std::move(s)};
}

TwoParticleOperator projector_A(int d) {
    const std::size_t n = static_cast<std::size_t>(d) * d;
    ComplexMatrix a(n, n);
    for (int i = 1; i <= d; ++i)
        for (int j = 1; j <= d; ++j) {
            a(pair_index(i, j, d), pair_index(i, j, d)) += 0.5;
            a(pair_index(j, i, d), pair_index(i, j, d)) -= 0.5;
        }
    return {d, std::move(a)};
}

TwoParticleOperator swap_operator(int d) {
    const std::size_t n = static_cast<std::size_t>(d) * d;
    ComplexMatrix w(n, n);
    for (int i = 1; i <= d; ++i)
        for (int j = 1; j <= d; ++j)
            w(pair_index(j, i, d), pair_index(i, j, d)) = 1.0;
    return {d, std::move(w)};
}

bool is_exchange_invariant(const TwoParticleOperator& o, double tol) {
    const auto swap = swap_operator(o.dim_modes);
    const auto conj = adjoint(swap.matrix) * o.matrix * swap.matrix;
    return max_abs_diff(conj, o.matrix) <= tol;
}

ComplexMatrix to_block_form(const TwoParticleOperator& o, const BasisMap& bm) {
    if (o.dim_modes != bm.d)
        throw ShapeError("to_block_form: mode counts disagree");
    return adjoint(bm.change_of_basis) * o.matrix * bm.change_of_basis;
}

RestrictedOperator restrict(const TwoParticleOperator& o, const BasisMap& bm,
                            Parity parity, double tol) {
    const auto swap = swap_operator(o.dim_modes);
    const auto conj = adjoint(swap.matrix) * o.matrix * swap.matrix;
    const double residual = max_abs_diff(conj, o.matrix);
    if (residual > tol)
        throw InvarianceError(
            "operator is not exchange-invariant (residual " +
                std::to_string(residual) + ")",
            residual);

    const auto block = to_block_form(o, bm);
    const std::size_t ns = sym_dim(bm.d);
    const std::size_t na = anti_dim(bm.d);
    RestrictedOperator r;
    r.parity = parity;
    r.d = bm.d;
    if (parity == Parity::Symmetric) {
        r.labels = bm.sym_labels;
        r.matrix = ComplexMatrix(ns, ns);
        for (std::size_t i = 0; i < ns; ++i)
            for (std::size_t j = 0; j < ns; ++j) r.matrix(i, j) = block(i, j);
    } else {
        r.labels = bm.anti_labels;
        r.matrix = ComplexMatrix(na, na);
        for (std::size_t i = 0; i < na; ++i)
            for (std::size_t j = 0; j < na; ++j)
                r.matrix(i, j) = block(ns + i, ns + j);
    }
    return r;
}

std::size_t restricted_index(const BasisMap& bm, Parity parity, int i, int j) {
    const auto& labels = (parity == Parity::Symmetric) ? bm.sym_labels
                                                       : bm.anti_labels;
    const ModePair key{std::min(i, j), std::max(i, j)};
    for (std::size_t k = 0; k < labels.size(); ++k)
        if (labels[k] == key) return k;
    throw ShapeError("restricted_index: label not present in basis");
}

}  // namespace halfstat
