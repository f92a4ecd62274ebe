#include "negfont/transpose.hpp"

#include <cmath>
#include <string>

namespace negfont {

namespace {

void require_qubit(int n, int p) {
    if (p < 1 || p > n) {
        throw std::out_of_range("qubit " + std::to_string(p) + " outside [1, " + std::to_string(n) + "]");
    }
}

// Selective partial transpose: elements (i, j) with i_p != j_p and
// select(k_label(i, j)) take the value of (i ^ mask, j ^ mask).
template <typename Select>
MatrixXc selective_transpose(const MatrixXc& m, int n, int p, Select select) {
    const std::uint64_t mask = qubit_mask(n, p);
    const auto dim = static_cast<std::uint64_t>(m.rows());
    MatrixXc out = m;
    for (std::uint64_t i = 0; i < dim; ++i) {
        for (std::uint64_t j = 0; j < dim; ++j) {
            if (((i ^ j) & mask) == 0) continue;
            if (!select(k_label(i, j))) continue;
            out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
                m(static_cast<Eigen::Index>(i ^ mask), static_cast<Eigen::Index>(j ^ mask));
        }
    }
    return out;
}

}  // namespace

DensityOperator::DensityOperator(int n_qubits, MatrixXc entries) : n_(n_qubits), m_(std::move(entries)) {
    if (n_qubits < 1 || n_qubits > kDefaultMaxQubits) throw std::invalid_argument("qubit count out of range");
    const auto dim = Eigen::Index{1} << n_qubits;
    if (m_.rows() != dim || m_.cols() != dim) {
        throw std::invalid_argument("density operator must be 2^n x 2^n");
    }
    if ((m_ - m_.adjoint()).cwiseAbs().maxCoeff() > kOperatorTolerance) {
        throw std::invalid_argument("density operator is not Hermitian within 1e-12");
    }
    if (std::abs(m_.trace() - cplx{1.0}) > kOperatorTolerance) {
        throw std::invalid_argument("density operator trace differs from 1 by more than 1e-12");
    }
}

DensityOperator::DensityOperator(const PureState& state) : n_(state.n_qubits()), m_(density(state)) {}

cplx DensityOperator::element(std::string_view row_bits, std::string_view col_bits) const {
    const auto i = BasisIndex::parse(row_bits);
    const auto j = BasisIndex::parse(col_bits);
    if (i.size() != n_ || j.size() != n_) throw std::invalid_argument("label width does not match operator");
    return (*this)(i.value(), j.value());
}

int k_label(const BasisIndex& i, const BasisIndex& j) {
    if (i.size() != j.size()) throw std::invalid_argument("k_label: label lengths differ");
    return k_label(i.value(), j.value());
}

DensityOperator global_pt(const DensityOperator& rho, int p) {
    require_qubit(rho.n_qubits(), p);
    return {rho.n_qubits(), selective_transpose(rho.matrix(), rho.n_qubits(), p, [](int) { return true; })};
}

DensityOperator kway_pt(const DensityOperator& rho, int p, int k) {
    const int n = rho.n_qubits();
    require_qubit(n, p);
    if (k < 2 || k > n) {
        throw std::out_of_range("K = " + std::to_string(k) + " outside [2, " + std::to_string(n) + "]");
    }
    // K = 2 also absorbs the single-flip (label 1) elements.
    if (k == 2) {
        return {n, selective_transpose(rho.matrix(), n, p, [](int label) { return label == 1 || label == 2; })};
    }
    return {n, selective_transpose(rho.matrix(), n, p, [k](int label) { return label == k; })};
}

double decomposition_residual(const DensityOperator& rho, int p) {
    const int n = rho.n_qubits();
    require_qubit(n, p);
    if (n < 2) throw std::invalid_argument("decomposition needs at least two qubits");
    MatrixXc sum = -static_cast<double>(n - 2) * rho.matrix();
    for (int k = 2; k <= n; ++k) sum += kway_pt(rho, p, k).matrix();
    return (global_pt(rho, p).matrix() - sum).cwiseAbs().maxCoeff();
}

}  // namespace negfont
