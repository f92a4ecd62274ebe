// invariants.hpp
// Determinants of the negativity fonts of three- and four-qubit pure states,
// the three-tangle and four-tangle built from them, and numerical checks of
// how those determinants transform under single-qubit unitaries.
//
// Qubits A, B, C, D are 1, 2, 3, 4; a_{i1 i2 i3 i4} is the amplitude of
// |i1 i2 i3 i4> with A the most significant bit.

#pragma once

#include <array>
#include <string>
#include <vector>

#include "negfont/state.hpp"

namespace negfont {

struct FontDeterminants3 {
    cplx T000;  // a000 a111 - a011 a100
    cplx T001;  // a001 a110 - a010 a101
    cplx PB0;   // a000 a101 - a001 a100
    cplx PB1;   // a010 a111 - a011 a110
    cplx PC0;   // a000 a110 - a010 a100
    cplx PC1;   // a001 a111 - a011 a101
};

FontDeterminants3 three_fonts(const PureState& state);

// 4 |(T001 - T000)^2 - 4 PB1 PB0|.
double three_tangle(const FontDeterminants3& d);
// 4 |(T001 + T000)^2 - 4 PC0 PC1|; agrees with three_tangle.
double three_tangle_alternate(const FontDeterminants3& d);
// Throws std::logic_error if the two forms disagree by more than 1e-8.
double three_tangle(const PureState& state);

// |T001 T000 - (PC0 PC1 - PB1 PB0)|
double product_identity_residual(const FontDeterminants3& d);

// |tau3 - (C^2_{A(BC)} - C^2_{AB} - C^2_{AC})|, with C_{A(BC)} taken from the
// global negativity on A and the pairwise terms from the Wootters concurrence
// of the reduced states.
double ckw_residual(const PureState& state);

struct FontDeterminants4 {
    // F[i3][i4] = a_{00 i3 i4} a_{11 ~i3 ~i4} - a_{01 ~i3 ~i4} a_{10 i3 i4}
    std::array<std::array<cplx, 2>, 2> F;
    // TC[i3][i4] = a_{00 i3 i4} a_{11 i3 ~i4} - a_{01 i3 ~i4} a_{10 i3 i4}
    std::array<std::array<cplx, 2>, 2> TC;
    // TB[i2][i4] = a_{0 i2 0 i4} a_{1 i2 1 ~i4} - a_{0 i2 1 ~i4} a_{1 i2 0 i4}
    std::array<std::array<cplx, 2>, 2> TB;

    cplx F0000() const { return F[0][0]; }
    cplx F0001() const { return F[0][1]; }
    cplx F0010() const { return F[1][0]; }
    cplx F0011() const { return F[1][1]; }
};

FontDeterminants4 four_fonts(const PureState& state);

// (F0001 - F0000) + (F0010 - F0011)
cplx four_invariant(const FontDeterminants4& d);
cplx four_invariant(const PureState& state);
// 4 |four_invariant|^2
double four_tangle(const PureState& state);

// One checked relation. For relations whose normalization is not fixed a
// priori, every candidate prefactor is evaluated and the one with the smallest
// residual is selected (first candidate wins ties).
struct CovarianceReport {
    std::string relation;
    double residual = 0.0;
    double prefactor_used = 1.0;
    std::string prefactor_label = "1";

    struct Candidate {
        std::string label;
        double prefactor;
        double residual;
    };
    std::vector<Candidate> candidates;
};

// Applies parametric_unitary(x) to qubit B and compares the transformed
// determinants against their predicted combinations (prefactor 1/(1+|x|^2)).
// Also checks that T001 - T000, PB0 and PB1 are unchanged by the same unitary
// applied to qubit A and to qubit C.
std::vector<CovarianceReport> covariance_check_3(const PureState& state, cplx x);

// qubit is 'A', 'B', 'C' or 'D'. Checks the transformation rules of the F
// determinants under parametric_unitary(param) on that qubit, plus an
// "|four_invariant|" entry comparing magnitudes before and after.
std::vector<CovarianceReport> covariance_check_4(const PureState& state, char qubit, cplx param);

double max_residual(const std::vector<CovarianceReport>& reports);

// Max |tau(U1 (x) ... (x) Un |psi>) - tau(|psi>)| over `trials` Haar-random
// products of single-qubit unitaries; tau is the three-tangle for n = 3 and
// the four-tangle for n = 4. Trial t draws from seeds derived from (seed, t).
double lu_invariance_sweep(const PureState& state, int trials, std::uint64_t seed);

}  // namespace negfont
