// transpose.hpp
// Global and K-way partial transposes of an N-qubit operator with respect to a
// single qubit.
//
// Every element <i|rho|j> carries the label K(i, j) = number of qubits on
// which the bit strings i and j differ. The global partial transpose on qubit p
// swaps the p-th bits of the row and column label of every element; the K-way
// partial transpose does so only for elements with i_p != j_p and label K
// (K > 2), or label 1 or 2 (K == 2). All other elements are copied. With this
// convention
//
//   rho^{T_p}_G = sum_{K=2}^{N} rho^{T_p}_K - (N - 2) rho.

#pragma once

#include <cstdint>

#include "negfont/state.hpp"

namespace negfont {

// Dense 2^n x 2^n operator. Construction validates the shape and checks
// Hermiticity and unit trace within 1e-12.
class DensityOperator {
public:
    DensityOperator(int n_qubits, MatrixXc entries);
    explicit DensityOperator(const PureState& state);

    int n_qubits() const { return n_; }
    Eigen::Index dim() const { return m_.rows(); }
    const MatrixXc& matrix() const { return m_; }

    cplx operator()(std::uint64_t row, std::uint64_t col) const {
        return m_(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col));
    }
    cplx element(std::string_view row_bits, std::string_view col_bits) const;

private:
    int n_;
    MatrixXc m_;
};

inline constexpr double kOperatorTolerance = 1e-12;

// Hamming distance between two equal-width labels.
int k_label(const BasisIndex& i, const BasisIndex& j);
inline int k_label(std::uint64_t i, std::uint64_t j) { return __builtin_popcountll(i ^ j); }

DensityOperator global_pt(const DensityOperator& rho, int p);
DensityOperator kway_pt(const DensityOperator& rho, int p, int k);

// max |rho_G - (sum_K rho_K - (N - 2) rho)| over all elements.
double decomposition_residual(const DensityOperator& rho, int p);

}  // namespace negfont
