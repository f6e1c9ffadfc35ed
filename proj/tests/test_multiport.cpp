#include "doctest.h"

#include <cmath>

#include "halfstat/multiport.hpp"

using namespace halfstat;

namespace {
const Complex I{0, 1};

ComplexMatrix model_b_printed(double theta) {
    const Complex t = std::cos(theta);
    const Complex r = I * std::sin(theta);
    return ComplexMatrix(3, 3,
                         {t, r * r, r * t, 0, t, r, r, r * t, t * t});
}
}  // namespace

TEST_CASE("beam_splitter") {
    SUBCASE("transparent") {
        const auto u = beam_splitter(2, {1, 2, 0.0});
        CHECK(max_abs_diff(u.matrix(), ComplexMatrix::identity(2)) == 0.0);
    }

    SUBCASE("balanced coefficients obey the unitarity constraints") {
        const auto u = beam_splitter(2, {1, 2, M_PI / 4});
        const Complex t = u.matrix()(0, 0);
        const Complex r = u.matrix()(0, 1);
        CHECK(t.real() == doctest::Approx(1 / std::sqrt(2.0)));
        CHECK(r.imag() == doctest::Approx(1 / std::sqrt(2.0)));
        CHECK(std::norm(r) + std::norm(t) == doctest::Approx(1.0));
        CHECK(std::abs(r * std::conj(t) + t * std::conj(r)) < 1e-15);
    }

    SUBCASE("constraints hold across theta and phase") {
        for (double theta : {0.0, 0.3, M_PI / 4, M_PI / 2, 2.0})
            for (double phase : {0.0, 0.5, -1.2}) {
                const auto u = beam_splitter(2, {1, 2, theta, phase});
                const Complex t = u.matrix()(0, 0);
                const Complex r = u.matrix()(0, 1);
                CHECK(std::abs(std::norm(r) + std::norm(t) - 1.0) < 1e-15);
                CHECK(std::abs(r * std::conj(t) + t * std::conj(r)) < 1e-15);
                CHECK(is_unitary(u.matrix(), 1e-12));
            }
    }

    SUBCASE("embedding leaves untouched modes alone") {
        const auto u = beam_splitter(3, {2, 3, M_PI / 4});
        CHECK(u.matrix()(0, 0) == Complex(1.0));
        CHECK(u.matrix()(0, 1) == Complex(0.0));
        CHECK(u.matrix()(1, 0) == Complex(0.0));
        CHECK(std::abs(u.matrix()(1, 2)) == doctest::Approx(1 / std::sqrt(2.0)));
    }

    SUBCASE("errors") {
        CHECK_THROWS_AS(beam_splitter(2, {1, 3, 0.1}), ShapeError);
        CHECK_THROWS_AS(beam_splitter(2, {2, 2, 0.1}), std::invalid_argument);
    }
}

TEST_CASE("from_matrix") {
    CHECK(Multiport::from_matrix(ComplexMatrix::identity(4)).dim() == 4);
    CHECK_NOTHROW(Multiport::from_matrix(model_b_printed(M_PI / 4)));
    CHECK_THROWS_AS(Multiport::from_matrix(ComplexMatrix(2, 2, {1, 0, 1, 1})),
                    ValidationError);
    try {
        Multiport::from_matrix(ComplexMatrix(2, 2, {1, 0, 1, 1}));
    } catch (const ValidationError& e) {
        CHECK(e.residual > 0.5);
    }
}

TEST_CASE("compose") {
    SUBCASE("single stage") {
        CircuitSpec spec{2, {{1, 2, 0.4}}};
        CHECK(max_abs_diff(compose(spec).matrix(),
                           beam_splitter(2, {1, 2, 0.4}).matrix()) == 0.0);
    }

    SUBCASE("reproduces the two-splitter network matrix") {
        for (double theta : {0.2, M_PI / 4, 1.1}) {
            CircuitSpec spec{3, {{2, 3, theta}, {1, 3, theta}}};
            CHECK(max_abs_diff(compose(spec).matrix(),
                               model_b_printed(theta)) < 1e-12);
        }
    }

    SUBCASE("inverse pair cancels") {
        CircuitSpec spec{2, {{1, 2, 0.7}, {1, 2, -0.7}}};
        CHECK(max_abs_diff(compose(spec).matrix(),
                           ComplexMatrix::identity(2)) < 1e-15);
    }

    SUBCASE("empty stage list is the identity") {
        CHECK(max_abs_diff(compose({3, {}}).matrix(),
                           ComplexMatrix::identity(3)) == 0.0);
    }
}

TEST_CASE("parse_circuit") {
    SUBCASE("single stage") {
        const auto spec = parse_circuit("dim 2\nbs 1 2 theta=0.785398163");
        CHECK(spec.dim == 2);
        REQUIRE(spec.stages.size() == 1);
        CHECK(spec.stages[0].theta == doctest::Approx(0.785398163));
        CHECK(spec.stages[0].phase == 0.0);
    }

    SUBCASE("two-splitter network") {
        const auto spec = parse_circuit(
            "dim 3\nbs 2 3 theta=0.785398163\nbs 1 3 theta=0.785398163");
        REQUIRE(spec.stages.size() == 2);
        CHECK(max_abs_diff(compose(spec).matrix(),
                           model_b_printed(0.785398163)) < 1e-9);
    }

    SUBCASE("mode out of range carries line info") {
        try {
            parse_circuit("dim 2\nbs 1 3 theta=0.1");
            FAIL("expected parse error");
        } catch (const ParseError& e) {
            CHECK(e.line == 2);
            CHECK(std::string(e.what()).find("mode 3 exceeds dim 2") !=
                  std::string::npos);
        }
    }

    SUBCASE("comments and blank lines") {
        const auto spec = parse_circuit(
            "# network\n\ndim 2  # two modes\nbs 1 2 theta=0.5 phase=0.25\n");
        CHECK(spec.dim == 2);
        REQUIRE(spec.stages.size() == 1);
        CHECK(spec.stages[0].phase == doctest::Approx(0.25));
    }

    SUBCASE("rejects") {
        CHECK_THROWS_AS(parse_circuit(""), ParseError);
        CHECK_THROWS_AS(parse_circuit("bs 1 2 theta=0.1"), ParseError);
        CHECK_THROWS_AS(parse_circuit("dim 2\nfoo 1 2"), ParseError);
        CHECK_THROWS_AS(parse_circuit("dim 2\nbs 1 2"), ParseError);
        CHECK_THROWS_AS(parse_circuit("dim 2\nbs 1 2 theta=abc"), ParseError);
        CHECK_THROWS_AS(parse_circuit("dim 2\nbs 1 1 theta=0.1"), ParseError);
        CHECK_THROWS_AS(parse_circuit("dim 0"), ParseError);
    }
}

TEST_CASE("render/parse round trip") {
    CircuitSpec spec{3, {{2, 3, 0.785398163, 0.0}, {1, 3, 1.2345, -0.5}}};
    const auto back = parse_circuit(render_circuit(spec));
    CHECK(back.dim == spec.dim);
    REQUIRE(back.stages.size() == spec.stages.size());
    for (std::size_t i = 0; i < spec.stages.size(); ++i) {
        CHECK(back.stages[i].mode_i == spec.stages[i].mode_i);
        CHECK(back.stages[i].mode_j == spec.stages[i].mode_j);
        CHECK(std::abs(back.stages[i].theta - spec.stages[i].theta) < 1e-12);
        CHECK(std::abs(back.stages[i].phase - spec.stages[i].phase) < 1e-12);
    }
}

TEST_CASE("model fixtures") {
    CHECK(max_abs_diff(model_a(0).matrix(), ComplexMatrix::identity(2)) ==
          0.0);

    const auto ma = model_a(M_PI / 4);
    CHECK(ma.matrix()(0, 0).real() == doctest::Approx(1 / std::sqrt(2.0)));
    CHECK(ma.matrix()(0, 1).imag() == doctest::Approx(1 / std::sqrt(2.0)));

    for (double theta : {0.3, M_PI / 4, 1.4}) {
        CircuitSpec spec{3, {{2, 3, theta}, {1, 3, theta}}};
        CHECK(max_abs_diff(model_b(theta).matrix(),
                           compose(spec).matrix()) < 1e-12);
    }
}
