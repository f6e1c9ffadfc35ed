#pragma once

#include <string>
#include <vector>

#include "halfstat/observables.hpp"

namespace halfstat {

enum class Statistics { Classical, Boson, Fermion };

std::string to_string(Statistics s);

/// Two-particle input. The pair is ordered for the classical distinct state
/// |ij> and unordered for the quantum symmetrizations.
struct InputPair {
    int i = 1;
    int j = 2;
    Statistics statistics = Statistics::Classical;
};

/// One evaluated observable with all three statistics side by side.
struct ExpectationReport {
    std::string observable;
    int input_i = 0;
    int input_j = 0;
    double value_classical = 0.0;
    double value_boson = 0.0;
    double value_fermion = 0.0;
    double identity_residual = 0.0;
};

inline constexpr double kEngineTol = 1e-10;

/// Output-side expectation value of an exchange-invariant observable:
///   classical  <ij| U2^dag O U2 |ij>
///   boson      <s_ij| Us^dag O_s Us |s_ij>
///   fermion    <a_ij| Ua^dag O_a Ua |a_ij>
/// Throws ExclusionError for a fermionic same-mode input and InvarianceError
/// for a non-invariant observable.
double expectation(const Multiport& u, const InputPair& input,
                   const ObservableSpec& obs);

/// <[n^(k)]^2> - <n^(k)>^2 for the requested statistics.
double variance(const Multiport& u, const InputPair& input, int mode_k);

/// Checks the averaging identity
///   classical == (boson + fermion) / 2
/// for input modes i != j; throws ValidationError when the residual
/// exceeds tol.
ExpectationReport verify_half_identity(const Multiport& u, int i, int j,
                                       const ObservableSpec& obs,
                                       double tol = kEngineTol);

/// Same-mode corollary: classical == bosonic expectation for input (i,i).
ExpectationReport same_mode_check(const Multiport& u, int i,
                                  const ObservableSpec& obs,
                                  double tol = kEngineTol);

struct TableRow {
    std::vector<std::string> labels;
    double classical = 0.0;
    double boson = 0.0;
    double fermion = 0.0;
    double residual = 0.0;
};

struct TableReport {
    std::string title;
    std::vector<std::string> label_headers;
    std::vector<TableRow> rows;
};

/// Single-beam-splitter statistics at mixing angle theta: mean occupation,
/// occupation variance, and cross-mode correlation per statistics class,
/// input modes (1,2).
TableReport table1(double theta);

/// Pair-detection probabilities for the two-beam-splitter d=3 network:
/// rows (1,2 -> 2,3), (1,3 -> 1,3), (2,3 -> 1,3).
TableReport table2(double theta);

struct HomPoint {
    double theta = 0.0;
    double boson = 0.0;
    double classical = 0.0;
    double fermion = 0.0;
};

/// Probability that the two particles exit the single beam splitter in
/// different modes, per statistics class. Bosons dip to zero at theta=pi/4.
std::vector<HomPoint> hom_scan(const std::vector<double>& thetas);

}  // namespace halfstat
