#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "halfstat/errors.hpp"

namespace halfstat {

using Complex = std::complex<double>;

/// Dense row-major complex matrix. Small sizes only (mode counts d <= 32,
/// so two-particle operators stay below 1024x1024).
class ComplexMatrix {
  public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}
    ComplexMatrix(std::size_t rows, std::size_t cols,
                  std::vector<Complex> entries);

    static ComplexMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Complex& operator()(std::size_t r, std::size_t c) {
        return data_[r * cols_ + c];
    }
    const Complex& operator()(std::size_t r, std::size_t c) const {
        return data_[r * cols_ + c];
    }

    const std::vector<Complex>& entries() const { return data_; }

    bool all_finite() const;

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Complex> data_;
};

ComplexMatrix mat_mul(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(Complex s, const ComplexMatrix& a);

/// Conjugate transpose.
ComplexMatrix adjoint(const ComplexMatrix& a);

/// Kronecker product; block (p,q) of the result equals a(p,q)*b.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

Complex trace(const ComplexMatrix& a);

/// Largest |a(i,j) - b(i,j)|; shapes must agree.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

/// Largest entry magnitude.
double max_abs(const ComplexMatrix& a);

/// Max-entry deviation of adjoint(a)*a from the identity. Throws ShapeError
/// on non-square input.
double unitarity_deviation(const ComplexMatrix& a);

inline constexpr double kDefaultUnitaryTol = 1e-10;

bool is_unitary(const ComplexMatrix& a, double tol = kDefaultUnitaryTol);

bool approx_equal(const ComplexMatrix& a, const ComplexMatrix& b, double tol);

}  // namespace halfstat
