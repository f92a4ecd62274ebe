// spectra.hpp
// Hermitian spectra, trace norms and the negativities derived from partial
// transposes, plus negativity-font enumeration and the two-qubit Wootters
// concurrence.

#pragma once

#include <vector>

#include "negfont/state.hpp"
#include "negfont/transpose.hpp"

namespace negfont {

// Eigenvalues in (-kNegativeThreshold, 0) are treated as zero.
inline constexpr double kNegativeThreshold = 1e-12;
inline constexpr double kHermitianTolerance = 1e-10;
// |det nu| at or below this marks a font as non-negative.
inline constexpr double kFontZero = 1e-14;

struct Spectrum {
    std::vector<double> eigenvalues;  // ascending

    double sum() const;
    // Sum of |lambda| over lambda <= -kNegativeThreshold.
    double negative_mass() const;
};

struct Eigensystem {
    Spectrum spectrum;
    MatrixXc vectors;  // columns match spectrum.eigenvalues
};

// Throws std::invalid_argument for non-square or non-Hermitian input.
Spectrum hermitian_eigenvalues(const MatrixXc& m);
Eigensystem hermitian_eigensystem(const MatrixXc& m);

double trace_norm(const MatrixXc& m);

double global_negativity(const PureState& state, int p);
double global_negativity(const DensityOperator& rho, int p);
double kway_negativity(const PureState& state, int p, int k);
double kway_negativity(const DensityOperator& rho, int p, int k);

// Negativity font spanned by |i>, |j>, |i^p>, |j^p> in the partial transpose
// on qubit p, with i_p = 0 and j_p = 1.
struct FontLocation {
    BasisIndex i;
    BasisIndex j;
    int p;
    int k;  // k_label(i, j)
};

struct Font {
    FontLocation location;
    cplx det;             // a_i a_j - a_{i^p} a_{j^p}
    double lambda_minus;  // -|det|
    bool negative;        // false when |det| <= kFontZero
};

// One representative per class {(i,j), (j,i), (i^p,j^p), (j^p,i^p)}: the one
// with i_p = 0 and i < j^p.
std::vector<Font> enumerate_fonts(const PureState& state, int p);

// 2 |a00 a11 - a01 a10| for a two-qubit pure state.
double font_negativity_2q(const PureState& state);

// Wootters concurrence of a two-qubit density matrix.
double concurrence_2q(const MatrixXc& rho);

}  // namespace negfont
