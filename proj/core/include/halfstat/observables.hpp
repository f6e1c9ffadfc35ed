#pragma once

#include <optional>
#include <string>

#include "halfstat/twoparticle.hpp"

namespace halfstat {

/// Exchange-invariant observable selector. Mini-syntax accepted by
/// parse_observable: "n:<k>", "P:<k>,<l>", "corr:<k>,<l>".
struct ObservableSpec {
    enum class Kind { Number, PairProb, Correlation, Custom };
    Kind kind = Kind::Number;
    int k = 1;
    int l = 1;
    std::optional<TwoParticleOperator> custom;

    static ObservableSpec number(int k) {
        return {Kind::Number, k, k, std::nullopt};
    }
    static ObservableSpec pair_prob(int k, int l) {
        return {Kind::PairProb, k, l, std::nullopt};
    }
    static ObservableSpec correlation(int k, int l) {
        return {Kind::Correlation, k, l, std::nullopt};
    }
    /// Gated on exchange invariance; throws InvarianceError otherwise.
    static ObservableSpec custom_op(TwoParticleOperator op,
                                    double tol = kInvarianceTol);

    std::string label() const;
};

ObservableSpec parse_observable(const std::string& text);

/// Mode-occupation counter: n^(k)|ij> = (delta_kj + delta_ki)|ij>.
TwoParticleOperator number_op(int d, int k);

/// Projector (|kl><kl| + |lk><lk|) / (1 + delta_kl); its expectation is the
/// probability of finding one particle in mode k and the other in mode l.
TwoParticleOperator pair_prob_op(int d, int k, int l);

/// number_op(d,k) * number_op(d,l).
TwoParticleOperator correlation_op(int d, int k, int l);

/// Materializes the spec for dimension d.
TwoParticleOperator build_observable(const ObservableSpec& spec, int d);

/// Closed-form restriction of n^(k): eigenvalue (1+delta_ik) on |s_ik> for
/// the symmetric block, (1-delta_ik) on |a_ik> for the antisymmetric one.
RestrictedOperator number_restricted(int d, int k, Parity parity);

/// Closed-form restriction of P^(kl): |s_kl><s_kl| on the symmetric block;
/// |a_kl><a_kl| (zero when k == l) on the antisymmetric one.
RestrictedOperator pair_prob_restricted(int d, int k, int l, Parity parity);

}  // namespace halfstat
