#pragma once

#include <random>

#include "halfstat/twoparticle.hpp"

namespace halfstat {

/// Haar-style random unitary: Gram-Schmidt orthonormalization of a matrix of
/// independent complex Gaussian entries.
Multiport random_unitary(int d, std::mt19937_64& rng);

/// Random exchange-invariant Hermitian observable on the two-particle space:
/// (H + swap^dag H swap) / 2 for a random Hermitian H.
TwoParticleOperator random_invariant_hermitian(int d, std::mt19937_64& rng);

}  // namespace halfstat
