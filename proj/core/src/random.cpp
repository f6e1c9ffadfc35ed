#include "halfstat/random.hpp"

#include <cmath>

namespace halfstat {

Multiport random_unitary(int d, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    const std::size_t n = static_cast<std::size_t>(d);
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m(i, j) = Complex(gauss(rng), gauss(rng));

    // modified Gram-Schmidt over columns, with re-orthogonalization pass
    for (std::size_t c = 0; c < n; ++c) {
        for (int pass = 0; pass < 2; ++pass) {
            for (std::size_t p = 0; p < c; ++p) {
                Complex proj{};
                for (std::size_t i = 0; i < n; ++i)
                    proj += std::conj(m(i, p)) * m(i, c);
                for (std::size_t i = 0; i < n; ++i)
                    m(i, c) -= proj * m(i, p);
            }
        }
        double norm = 0.0;
        for (std::size_t i = 0; i < n; ++i) norm += std::norm(m(i, c));
        norm = std::sqrt(norm);
        for (std::size_t i = 0; i < n; ++i) m(i, c) /= norm;
    }
    return Multiport::from_matrix(m);
}

TwoParticleOperator random_invariant_hermitian(int d, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    const std::size_t n = static_cast<std::size_t>(d) * d;
    ComplexMatrix h(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        h(i, i) = gauss(rng);
        for (std::size_t j = i + 1; j < n; ++j) {
            const Complex z(gauss(rng), gauss(rng));
            h(i, j) = z;
            h(j, i) = std::conj(z);
        }
    }
    const auto swap = swap_operator(d);
    const auto sym = adjoint(swap.matrix) * h * swap.matrix;
    return {d, Complex(0.5) * (h + sym)};
}

}  // namespace halfstat
