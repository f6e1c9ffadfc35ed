#include "halfstat/engine.hpp"

#include <cmath>

namespace halfstat {

namespace {

std::vector<Complex> column_apply(const ComplexMatrix& m,
                                  const std::vector<Complex>& v) {
    std::vector<Complex> out(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Complex acc{};
        for (std::size_t j = 0; j < m.cols(); ++j) acc += m(i, j) * v[j];
        out[i] = acc;
    }
    return out;
}

Complex quadratic_form(const std::vector<Complex>& v, const ComplexMatrix& m) {
    const auto mv = column_apply(m, v);
    Complex acc{};
    for (std::size_t i = 0; i < v.size(); ++i) acc += std::conj(v[i]) * mv[i];
    return acc;
}

double real_checked(Complex z) {
    if (std::abs(z.imag()) > kEngineTol)
        throw ValidationError("expectation value has non-real residue",
                              std::abs(z.imag()));
    return z.real();
}

std::vector<Complex> unit_vector(std::size_t n, std::size_t idx) {
    std::vector<Complex> v(n);
    v[idx] = 1.0;
    return v;
}

double classical_expectation(const Multiport& u, int i, int j,
                             const TwoParticleOperator& obs) {
    const auto u2 = lift(u);
    const auto n = u2.matrix.rows();
    const auto in = unit_vector(n, pair_index(i, j, u.dim()));
    const auto out = column_apply(u2.matrix, in);
    return real_checked(quadratic_form(out, obs.matrix));
}

double restricted_expectation(const Multiport& u, int i, int j, Parity parity,
                              const TwoParticleOperator& obs) {
    const auto bm = basis_map(u.dim());
    const auto u2 = restrict(lift(u), bm, parity);
    const auto obs_r = restrict(obs, bm, parity);
    const auto idx = restricted_index(bm, parity, i, j);
    const auto out =
        column_apply(u2.matrix, unit_vector(u2.matrix.rows(), idx));
    return real_checked(quadratic_form(out, obs_r.matrix));
}

void check_input(const Multiport& u, const InputPair& input) {
    if (input.i < 1 || input.i > u.dim() || input.j < 1 || input.j > u.dim())
        throw ShapeError("input mode index out of range");
    if (input.statistics == Statistics::Fermion && input.i == input.j)
        throw ExclusionError(
            "two identical fermions cannot occupy the same input mode");
}

}  // namespace

std::string to_string(Statistics s) {
    switch (s) {
        case Statistics::Classical: return "classical";
        case Statistics::Boson: return "boson";
        case Statistics::Fermion: return "fermion";
    }
    return "?";
}

double expectation(const Multiport& u, const InputPair& input,
                   const ObservableSpec& obs) {
    check_input(u, input);
    const auto op = build_observable(obs, u.dim());
    if (!is_exchange_invariant(op))
        throw InvarianceError("observable is not exchange-invariant",
                              kInvarianceTol);
    switch (input.statistics) {
        case Statistics::Classical:
            return classical_expectation(u, input.i, input.j, op);
        case Statistics::Boson:
            return restricted_expectation(u, input.i, input.j,
                                          Parity::Symmetric, op);
        case Statistics::Fermion:
            return restricted_expectation(u, input.i, input.j,
                                          Parity::Antisymmetric, op);
    }
    throw std::logic_error("unreachable statistics");
}

double variance(const Multiport& u, const InputPair& input, int mode_k) {
    check_input(u, input);
    if (mode_k < 1 || mode_k > u.dim())
        throw ShapeError("variance mode index out of range");
    const auto n_op = number_op(u.dim(), mode_k);
    double mean = 0.0, second = 0.0;
    if (input.statistics == Statistics::Classical) {
        mean = classical_expectation(u, input.i, input.j, n_op);
        second = classical_expectation(
            u, input.i, input.j, {u.dim(), n_op.matrix * n_op.matrix});
    } else {
        // restrict first, square inside the parity sector
        const auto parity = (input.statistics == Statistics::Boson)
                                ? Parity::Symmetric
                                : Parity::Antisymmetric;
        const auto bm = basis_map(u.dim());
        const auto u2 = restrict(lift(u), bm, parity);
        const auto n_r = restrict(n_op, bm, parity);
        const auto idx = restricted_index(bm, parity, input.i, input.j);
        const auto out =
            column_apply(u2.matrix, unit_vector(u2.matrix.rows(), idx));
        mean = real_checked(quadratic_form(out, n_r.matrix));
        second = real_checked(
            quadratic_form(out, n_r.matrix * n_r.matrix));
    }
    const double var = second - mean * mean;
    if (var < -kEngineTol)
        throw ValidationError("variance came out negative", -var);
    return var;
}

ExpectationReport verify_half_identity(const Multiport& u, int i, int j,
                                       const ObservableSpec& obs, double tol) {
    if (i == j)
        throw ExclusionError(
            "averaging identity needs i != j; use the same-mode check");
    ExpectationReport r;
    r.observable = obs.label();
    r.input_i = i;
    r.input_j = j;
    r.value_classical = expectation(u, {i, j, Statistics::Classical}, obs);
    r.value_boson = expectation(u, {i, j, Statistics::Boson}, obs);
    r.value_fermion = expectation(u, {i, j, Statistics::Fermion}, obs);
    r.identity_residual =
        std::abs(r.value_classical - 0.5 * (r.value_boson + r.value_fermion));
    if (r.identity_residual > tol)
        throw ValidationError("averaging identity violated",
                              r.identity_residual);
    return r;
}

ExpectationReport same_mode_check(const Multiport& u, int i,
                                  const ObservableSpec& obs, double tol) {
    ExpectationReport r;
    r.observable = obs.label();
    r.input_i = i;
    r.input_j = i;
    r.value_classical = expectation(u, {i, i, Statistics::Classical}, obs);
    r.value_boson = expectation(u, {i, i, Statistics::Boson}, obs);
    r.value_fermion = std::nan("");  // excluded input
    r.identity_residual = std::abs(r.value_classical - r.value_boson);
    if (r.identity_residual > tol)
        throw ValidationError("same-mode corollary violated",
                              r.identity_residual);
    return r;
}

TableReport table1(double theta) {
    const auto u = model_a(theta);
    TableReport t;
    t.title = "single beam splitter, input modes (1,2)";
    t.label_headers = {"observable"};

    const auto row = [&](const std::string& name, double c, double b,
                         double f) {
        TableRow r;
        r.labels = {name};
        r.classical = c;
        r.boson = b;
        r.fermion = f;
        r.residual = std::abs(c - 0.5 * (b + f));
        t.rows.push_back(r);
    };

    const auto n1 = ObservableSpec::number(1);
    row("mean n:1",
        expectation(u, {1, 2, Statistics::Classical}, n1),
        expectation(u, {1, 2, Statistics::Boson}, n1),
        expectation(u, {1, 2, Statistics::Fermion}, n1));
    row("variance n:1",
        variance(u, {1, 2, Statistics::Classical}, 1),
        variance(u, {1, 2, Statistics::Boson}, 1),
        variance(u, {1, 2, Statistics::Fermion}, 1));
    const auto corr = ObservableSpec::correlation(1, 2);
    row("corr n:1 n:2",
        expectation(u, {1, 2, Statistics::Classical}, corr),
        expectation(u, {1, 2, Statistics::Boson}, corr),
        expectation(u, {1, 2, Statistics::Fermion}, corr));
    return t;
}

TableReport table2(double theta) {
    const auto u = model_b(theta);
    TableReport t;
    t.title = "two-beam-splitter network, pair detection probabilities";
    t.label_headers = {"i", "j", "k", "l"};
    const int rows_spec[3][4] = {{1, 2, 2, 3}, {1, 3, 1, 3}, {2, 3, 1, 3}};
    for (const auto& s : rows_spec) {
        const auto obs = ObservableSpec::pair_prob(s[2], s[3]);
        TableRow r;
        r.labels = {std::to_string(s[0]), std::to_string(s[1]),
                    std::to_string(s[2]), std::to_string(s[3])};
        r.classical = expectation(u, {s[0], s[1], Statistics::Classical}, obs);
        r.boson = expectation(u, {s[0], s[1], Statistics::Boson}, obs);
        r.fermion = expectation(u, {s[0], s[1], Statistics::Fermion}, obs);
        r.residual = std::abs(r.classical - 0.5 * (r.boson + r.fermion));
        t.rows.push_back(r);
    }
    return t;
}

std::vector<HomPoint> hom_scan(const std::vector<double>& thetas) {
    std::vector<HomPoint> out;
    out.reserve(thetas.size());
    const auto obs = ObservableSpec::pair_prob(1, 2);
    for (double theta : thetas) {
        const auto u = model_a(theta);
        HomPoint p;
        p.theta = theta;
        p.boson = expectation(u, {1, 2, Statistics::Boson}, obs);
        p.classical = expectation(u, {1, 2, Statistics::Classical}, obs);
        p.fermion = expectation(u, {1, 2, Statistics::Fermion}, obs);
        out.push_back(p);
    }
    return out;
}

}  // namespace halfstat
