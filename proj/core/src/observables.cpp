#include "halfstat/observables.hpp"

#include <charconv>

namespace halfstat {

namespace {

void check_mode(int d, int k) {
    if (k < 1 || k > d) throw ShapeError("mode index out of range");
}

int parse_mode(const std::string& s) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || v < 1)
        throw std::invalid_argument("bad mode index '" + s + "'");
    return v;
}

}  // namespace

ObservableSpec ObservableSpec::custom_op(TwoParticleOperator op, double tol) {
    if (!is_exchange_invariant(op, tol))
        throw InvarianceError("custom observable is not exchange-invariant",
                              tol);
    ObservableSpec spec;
    spec.kind = Kind::Custom;
    spec.custom = std::move(op);
    return spec;
}

std::string ObservableSpec::label() const {
    switch (kind) {
        case Kind::Number: return "n:" + std::to_string(k);
        case Kind::PairProb:
            return "P:" + std::to_string(k) + "," + std::to_string(l);
        case Kind::Correlation:
            return "corr:" + std::to_string(k) + "," + std::to_string(l);
        case Kind::Custom: return "custom";
    }
    return "?";
}

ObservableSpec parse_observable(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("observable must look like n:<k>, "
                                    "P:<k>,<l> or corr:<k>,<l>");
    const std::string head = text.substr(0, colon);
    const std::string args = text.substr(colon + 1);
    if (head == "n") return ObservableSpec::number(parse_mode(args));
    const auto comma = args.find(',');
    if (comma == std::string::npos)
        throw std::invalid_argument("observable '" + head +
                                    "' needs two modes <k>,<l>");
    const int k = parse_mode(args.substr(0, comma));
    const int l = parse_mode(args.substr(comma + 1));
    if (head == "P") return ObservableSpec::pair_prob(k, l);
    if (head == "corr") return ObservableSpec::correlation(k, l);
    throw std::invalid_argument("unknown observable kind '" + head + "'");
}

TwoParticleOperator number_op(int d, int k) {
    check_mode(d, k);
    const std::size_t n = static_cast<std::size_t>(d) * d;
    ComplexMatrix m(n, n);
    for (int i = 1; i <= d; ++i)
        for (int j = 1; j <= d; ++j) {
            const double count = (j == k ? 1.0 : 0.0) + (i == k ? 1.0 : 0.0);
            m(pair_index(i, j, d), pair_index(i, j, d)) = count;
        }
    return {d, std::move(m)};
}

TwoParticleOperator pair_prob_op(int d, int k, int l) {
    check_mode(d, k);
    check_mode(d, l);
    const std::size_t n = static_cast<std::size_t>(d) * d;
    ComplexMatrix m(n, n);
    const double w = (k == l) ? 0.5 : 1.0;
    m(pair_index(k, l, d), pair_index(k, l, d)) += w;
    m(pair_index(l, k, d), pair_index(l, k, d)) += w;
    return {d, std::move(m)};
}

TwoParticleOperator correlation_op(int d, int k, int l) {
    check_mode(d, k);
    check_mode(d, l);
    auto a = number_op(d, k);
    return {d, a.matrix * number_op(d, l).matrix};
}

TwoParticleOperator build_observable(const ObservableSpec& spec, int d) {
    switch (spec.kind) {
        case ObservableSpec::Kind::Number: return number_op(d, spec.k);
        case ObservableSpec::Kind::PairProb:
            return pair_prob_op(d, spec.k, spec.l);
        case ObservableSpec::Kind::Correlation:
            return correlation_op(d, spec.k, spec.l);
        case ObservableSpec::Kind::Custom:
            if (!spec.custom || spec.custom->dim_modes != d)
                throw ShapeError("custom observable dimension mismatch");
            return *spec.custom;
    }
    throw std::logic_error("unreachable observable kind");
}

RestrictedOperator number_restricted(int d, int k, Parity parity) {
    check_mode(d, k);
    const auto bm = basis_map(d);
    RestrictedOperator r;
    r.parity = parity;
    r.d = d;
    if (parity == Parity::Symmetric) {
        r.labels = bm.sym_labels;
        r.matrix = ComplexMatrix(sym_dim(d), sym_dim(d));
        for (int i = 1; i <= d; ++i) {
            const auto idx = restricted_index(bm, parity, i, k);
            r.matrix(idx, idx) = (i == k) ? 2.0 : 1.0;
        }
    } else {
        r.labels = bm.anti_labels;
        r.matrix = ComplexMatrix(anti_dim(d), anti_dim(d));
        for (int i = 1; i <= d; ++i) {
            if (i == k) continue;  // (1 - delta_ik) kills the diagonal label
            const auto idx = restricted_index(bm, parity, i, k);
            r.matrix(idx, idx) = 1.0;
        }
    }
    return r;
}

RestrictedOperator pair_prob_restricted(int d, int k, int l, Parity parity) {
    check_mode(d, k);
    check_mode(d, l);
    const auto bm = basis_map(d);
    RestrictedOperator r;
    r.parity = parity;
    r.d = d;
    if (parity == Parity::Symmetric) {
        r.labels = bm.sym_labels;
        r.matrix = ComplexMatrix(sym_dim(d), sym_dim(d));
        const auto idx = restricted_index(bm, parity, k, l);
        r.matrix(idx, idx) = 1.0;
    } else {
        // |a_kk> does not exist, so the same-mode antisymmetric restriction
        // is the zero operator.
        r.labels = bm.anti_labels;
        r.matrix = ComplexMatrix(anti_dim(d), anti_dim(d));
        if (k != l) {
            const auto idx = restricted_index(bm, parity, k, l);
            r.matrix(idx, idx) = 1.0;
        }
    }
    return r;
}

}  // namespace halfstat
