// state.hpp
// N-qubit pure states, single-qubit unitaries and the density operators built
// from them.
//
// Basis convention: qubit 1 (A) is the most significant bit of the flat
// amplitude index, so the amplitude of |i1 i2 ... iN> sits at the integer whose
// binary expansion reads i1 i2 ... iN.

#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace negfont {

using cplx = std::complex<double>;
using Matrix2c = std::array<std::array<cplx, 2>, 2>;
using MatrixXc = Eigen::MatrixXcd;

inline constexpr int kDefaultMaxQubits = 10;
inline constexpr double kNormTolerance = 1e-10;

// Raised for amplitude data that cannot form a valid state (all zeros,
// malformed labels, duplicates). Distinct from std::invalid_argument, which
// signals a caller-side precondition violation.
class StateError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Bit-string label |i1 ... in> of a computational basis vector.
class BasisIndex {
public:
    BasisIndex(int n_qubits, std::uint64_t value);

    static BasisIndex parse(std::string_view bits);

    int size() const { return n_; }
    std::uint64_t value() const { return value_; }

    // qubit is 1-based; qubit 1 is the most significant bit.
    int bit(int qubit) const;
    BasisIndex flipped(int qubit) const;
    std::string str() const;

    friend bool operator==(const BasisIndex&, const BasisIndex&) = default;

private:
    int n_;
    std::uint64_t value_;
};

// Mask selecting the bit that carries `qubit` (1-based) in an n-qubit index.
constexpr std::uint64_t qubit_mask(int n_qubits, int qubit) {
    return std::uint64_t{1} << (n_qubits - qubit);
}

class PureState {
public:
    // Takes ownership of already-normalized amplitudes; throws StateError if
    // the norm differs from 1 by more than kNormTolerance.
    PureState(int n_qubits, std::vector<cplx> amplitudes);

    // Divides by the norm. The returned state remembers how far the input was
    // from unit norm.
    static PureState normalized(int n_qubits, std::vector<cplx> amplitudes);

    int n_qubits() const { return n_; }
    std::size_t dim() const { return amps_.size(); }

    const cplx& operator[](std::uint64_t index) const { return amps_[index]; }
    const cplx& at(const BasisIndex& index) const;
    const cplx& at(std::string_view bits) const { return at(BasisIndex::parse(bits)); }

    std::span<const cplx> amplitudes() const { return amps_; }

    // | ||input|| - 1 | measured before normalization (0 for exact input).
    double normalization_correction() const { return correction_; }
    bool was_renormalized() const { return correction_ > kNormTolerance; }

    double norm() const;

private:
    int n_;
    std::vector<cplx> amps_;
    double correction_ = 0.0;
};

struct LocalUnitary {
    LocalUnitary(int target, Matrix2c matrix);

    int target;  // 1-based qubit index
    Matrix2c matrix;

    LocalUnitary adjoint() const;
};

struct AmplitudeEntry {
    std::string bits;
    cplx value;
};

PureState make_state(int n_qubits, std::span<const AmplitudeEntry> entries,
                     int max_qubits = kDefaultMaxQubits);

PureState ghz(int n_qubits);
PureState w_state(int n_qubits);
// (|0000> + |0011> + |1100> - |1111>) / 2
PureState cluster4();
PureState product_state(std::span<const std::pair<cplx, cplx>> factors);

// {1, -conj(x); x, 1} / sqrt(1 + |x|^2). Unit determinant for every x.
Matrix2c parametric_unitary(cplx x);

PureState random_state(int n_qubits, std::uint64_t seed);
Matrix2c random_unitary_matrix(std::uint64_t seed);
LocalUnitary random_local_unitary(int target, std::uint64_t seed);
// Haar-random single-qubit factors, normalized.
PureState random_product_state(int n_qubits, std::uint64_t seed);

PureState apply_local_unitary(const PureState& state, const LocalUnitary& lu);

bool is_unitary(const Matrix2c& m, double tol = 1e-12);
cplx determinant(const Matrix2c& m);

// |psi><psi| as a dense 2^n x 2^n matrix.
MatrixXc density(const PureState& state);

// Reduced density operator on `keep` (1-based, ascending). The kept qubits
// retain their relative order, first kept qubit most significant.
MatrixXc reduced_density(const PureState& state, std::span<const int> keep);

}  // namespace negfont
