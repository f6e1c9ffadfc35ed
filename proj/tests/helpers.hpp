#pragma once

#include <random>
#include <vector>

#include "halfstat/linalg.hpp"

namespace halfstat::testing {

inline ComplexMatrix random_matrix(std::size_t rows, std::size_t cols,
                                   std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    ComplexMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            m(i, j) = Complex(gauss(rng), gauss(rng));
    return m;
}

inline ComplexMatrix random_hermitian(std::size_t n, std::mt19937_64& rng) {
    auto m = random_matrix(n, n, rng);
    return Complex(0.5) * (m + adjoint(m));
}

}  // namespace halfstat::testing
