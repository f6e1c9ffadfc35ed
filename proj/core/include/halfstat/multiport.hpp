#pragma once

#include <string>
#include <vector>

#include "halfstat/linalg.hpp"

namespace halfstat {

/// Two-mode beam splitter stage acting on modes (mode_i, mode_j) of a larger
/// network. Coefficients follow the canonical parameterization
/// t = e^{i*phase} cos(theta), r = i e^{i*phase} sin(theta), which satisfies
/// |r|^2+|t|^2 = 1 and r t* + t r* = 0 exactly.
struct BeamSplitterParams {
    int mode_i = 1;  // 1-based
    int mode_j = 2;  // 1-based
    double theta = 0.0;
    double phase = 0.0;
};

/// Ordered beam-splitter network; first listed stage acts first.
struct CircuitSpec {
    int dim = 0;
    std::vector<BeamSplitterParams> stages;
};

/// A validated d-mode single-particle unitary.
class Multiport {
  public:
    int dim() const { return dim_; }
    const ComplexMatrix& matrix() const { return matrix_; }

    /// Wraps `entries` after checking unitarity within `tol`; throws
    /// ValidationError carrying the deviation otherwise.
    static Multiport from_matrix(const ComplexMatrix& entries,
                                 double tol = kDefaultUnitaryTol);

  private:
    Multiport(int d, ComplexMatrix m) : dim_(d), matrix_(std::move(m)) {}
    int dim_ = 0;
    ComplexMatrix matrix_;
};

/// Embeds the 2x2 block [[t, r], [r, t]] at the stage's modes inside a d x d
/// identity. Throws ShapeError for out-of-range modes, std::invalid_argument
/// for mode_i == mode_j.
Multiport beam_splitter(int d, const BeamSplitterParams& p);

/// U_total = U_n * ... * U_1. Empty stage list gives the identity.
Multiport compose(const CircuitSpec& spec);

/// Circuit DSL:
///   # comment to end of line
///   dim <d>
///   bs <i> <j> theta=<radians> [phase=<radians>]
CircuitSpec parse_circuit(const std::string& text);

/// DSL emitter; parse_circuit(render_circuit(s)) reproduces s up to float
/// formatting.
std::string render_circuit(const CircuitSpec& spec);

/// Single balanced-convention beam splitter fixture (d=2),
/// t = cos(theta), r = i sin(theta).
Multiport model_a(double theta);

/// Two-beam-splitter d=3 fixture: BS(2,3,theta) followed by BS(1,3,theta),
/// matrix [[t, r^2, rt], [0, t, r], [r, rt, t^2]].
Multiport model_b(double theta);

}  // namespace halfstat
