#include "doctest.h"

#include "halfstat/linalg.hpp"
#include "halfstat/multiport.hpp"
#include "halfstat/random.hpp"
#include "helpers.hpp"

using namespace halfstat;
using halfstat::testing::random_matrix;

namespace {
const Complex I{0, 1};
}

TEST_CASE("mat_mul basics") {
    const auto id = ComplexMatrix::identity(2);
    std::mt19937_64 rng(1);
    const auto m = random_matrix(2, 2, rng);
    CHECK(approx_equal(id * m, m, 0.0));

    const ComplexMatrix flip(2, 2, {0, 1, 1, 0});
    const ComplexMatrix abcd(2, 2, {1, 2, 3, 4});
    const ComplexMatrix swapped(2, 2, {3, 4, 1, 2});
    CHECK(approx_equal(flip * abcd, swapped, 0.0));

    CHECK_THROWS_AS(mat_mul(ComplexMatrix(2, 3), ComplexMatrix(2, 3)),
                    ShapeError);
}

TEST_CASE("embedded beam splitter product reproduces the 3-mode network") {
    const double theta = 0.9;
    const Complex t = std::cos(theta);
    const Complex r = I * std::sin(theta);
    const auto b23 = beam_splitter(3, {2, 3, theta}).matrix();
    const auto b13 = beam_splitter(3, {1, 3, theta}).matrix();
    const ComplexMatrix expected(
        3, 3, {t, r * r, r * t, 0, t, r, r, r * t, t * t});
    CHECK(max_abs_diff(b13 * b23, expected) < 1e-15);
}

TEST_CASE("adjoint") {
    const ComplexMatrix m(1, 1, {I});
    CHECK(adjoint(m)(0, 0) == -I);

    const ComplexMatrix sym(2, 2, {1, 2, 2, 5});
    CHECK(approx_equal(adjoint(sym), sym, 0.0));

    std::mt19937_64 rng(2);
    const auto a = random_matrix(3, 4, rng);
    CHECK(approx_equal(adjoint(adjoint(a)), a, 0.0));

    const auto u = random_unitary(4, rng);
    CHECK(max_abs_diff(adjoint(u.matrix()) * u.matrix(),
                       ComplexMatrix::identity(4)) < 1e-12);

    // (AB)^dag == B^dag A^dag
    const auto b = random_matrix(4, 3, rng);
    const auto ab = a * b;
    CHECK(max_abs_diff(adjoint(ab), adjoint(b) * adjoint(a)) < 1e-12);
}

TEST_CASE("kron") {
    const auto id2 = ComplexMatrix::identity(2);
    CHECK(approx_equal(kron(id2, id2), ComplexMatrix::identity(4), 0.0));

    SUBCASE("two-particle lift of a single beam splitter") {
        const double theta = 0.6;
        const Complex t = std::cos(theta);
        const Complex r = I * std::sin(theta);
        const auto u = model_a(theta).matrix();
        const ComplexMatrix expected(
            4, 4,
            {t * t, r * t, r * t, r * r,
             r * t, t * t, r * r, r * t,
             r * t, r * r, t * t, r * t,
             r * r, r * t, r * t, t * t});
        CHECK(max_abs_diff(kron(u, u), expected) < 1e-15);
    }

    SUBCASE("mixed-product property") {
        std::mt19937_64 rng(3);
        for (int trial = 0; trial < 5; ++trial) {
            const auto a = random_matrix(3, 3, rng);
            const auto b = random_matrix(3, 3, rng);
            const auto c = random_matrix(3, 3, rng);
            const auto d = random_matrix(3, 3, rng);
            CHECK(max_abs_diff(kron(a, b) * kron(c, d), kron(a * c, b * d)) <
                  1e-12);
        }
    }
}

TEST_CASE("is_unitary") {
    CHECK(is_unitary(ComplexMatrix::identity(3), 1e-12));
    CHECK_FALSE(is_unitary(ComplexMatrix(2, 2, {1, 1, 0, 1}), 1e-12));
    CHECK_THROWS_AS(is_unitary(ComplexMatrix(2, 3), 1e-12), ShapeError);

    for (double theta : {M_PI / 4, M_PI / 3}) {
        const Complex t = std::cos(theta);
        const Complex r = I * std::sin(theta);
        const ComplexMatrix mb(
            3, 3, {t, r * r, r * t, 0, t, r, r, r * t, t * t});
        CHECK(is_unitary(mb, 1e-12));
    }

    SUBCASE("closure under products and kron") {
        std::mt19937_64 rng(4);
        const auto u = random_unitary(3, rng);
        const auto v = random_unitary(3, rng);
        CHECK(is_unitary(u.matrix() * v.matrix(), 1e-12));
        CHECK(is_unitary(kron(u.matrix(), v.matrix()), 1e-12));
    }
}

TEST_CASE("trace") {
    CHECK(trace(ComplexMatrix::identity(4)) == Complex(4.0));
    CHECK_THROWS_AS(trace(ComplexMatrix(2, 3)), ShapeError);

    std::mt19937_64 rng(5);
    const auto m = random_matrix(4, 4, rng);
    const auto v = random_unitary(4, rng).matrix();
    CHECK(std::abs(trace(adjoint(v) * m * v) - trace(m)) < 1e-12);
}
