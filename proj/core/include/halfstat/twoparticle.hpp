#pragma once

#include <utility>
#include <vector>

#include "halfstat/linalg.hpp"
#include "halfstat/multiport.hpp"

namespace halfstat {

/// Linear index of the distinct pair state |ij> in the d^2 basis
/// {|11>, |12>, ..., |1d>, |21>, ...}. Modes are 1-based.
inline std::size_t pair_index(int i, int j, int d) {
    return static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(d) +
           static_cast<std::size_t>(j - 1);
}

using ModePair = std::pair<int, int>;

/// Operator on the distinct two-particle space, d^2 x d^2, rows/columns
/// ordered by pair_index.
struct TwoParticleOperator {
    int dim_modes = 0;
    ComplexMatrix matrix;
};

enum class Parity { Symmetric, Antisymmetric };

/// Symmetric/antisymmetric basis over the distinct basis. Columns of
/// change_of_basis are the |s_ij> vectors (diagonal labels first, then
/// off-diagonal lexicographic) followed by the |a_ij> vectors
/// (lexicographic).
struct BasisMap {
    int d = 0;
    std::vector<ModePair> sym_labels;   // length d(d+1)/2
    std::vector<ModePair> anti_labels;  // length d(d-1)/2
    ComplexMatrix change_of_basis;      // d^2 x d^2, unitary
};

/// A parity block of an exchange-invariant operator, in the basis given by
/// `labels`.
struct RestrictedOperator {
    Parity parity = Parity::Symmetric;
    int d = 0;
    ComplexMatrix matrix;
    std::vector<ModePair> labels;
};

inline std::size_t sym_dim(int d) {
    return static_cast<std::size_t>(d) * (d + 1) / 2;
}
inline std::size_t anti_dim(int d) {
    return static_cast<std::size_t>(d) * (d - 1) / 2;
}

/// Two-particle transformation U (x) U.
TwoParticleOperator lift(const Multiport& u);

BasisMap basis_map(int d);

/// Orthogonal projector onto the symmetric subspace: S|ij> = (|ij>+|ji>)/2.
TwoParticleOperator projector_S(int d);

/// Orthogonal projector onto the antisymmetric subspace:
/// A|ij> = (|ij>-|ji>)/2.
TwoParticleOperator projector_A(int d);

/// S - A; maps |ij> to |ji>.
TwoParticleOperator swap_operator(int d);

inline constexpr double kInvarianceTol = 1e-10;

/// True iff swap^dag * O * swap == O within tol.
bool is_exchange_invariant(const TwoParticleOperator& o,
                           double tol = kInvarianceTol);

/// change_of_basis^dag * O * change_of_basis. For exchange-invariant O the
/// two off-diagonal parity blocks vanish.
ComplexMatrix to_block_form(const TwoParticleOperator& o, const BasisMap& bm);

/// Diagonal parity block of an exchange-invariant operator. Throws
/// InvarianceError (with the residual) for non-invariant input.
RestrictedOperator restrict(const TwoParticleOperator& o, const BasisMap& bm,
                            Parity parity, double tol = kInvarianceTol);

/// Position of label (i,j) within the parity block of the basis map;
/// order-insensitive for the antisymmetric labels the caller must track
/// sign separately.
std::size_t restricted_index(const BasisMap& bm, Parity parity, int i, int j);

}  // namespace halfstat
