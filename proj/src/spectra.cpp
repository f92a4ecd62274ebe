#include "negfont/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace negfont {

namespace {

void require_hermitian(const MatrixXc& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("matrix is not square");
    if (m.rows() == 0) throw std::invalid_argument("matrix is empty");
    const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
    if ((m - m.adjoint()).cwiseAbs().maxCoeff() > kHermitianTolerance * scale) {
        throw std::invalid_argument("matrix is not Hermitian within 1e-10");
    }
}

double clamp_zero(double v) { return (v < 0.0 && v > -kNegativeThreshold) ? 0.0 : v; }

}  // namespace

double Spectrum::sum() const {
    double s = 0.0;
    for (double v : eigenvalues) s += v;
    return s;
}

double Spectrum::negative_mass() const {
    double s = 0.0;
    for (double v : eigenvalues) {
        if (v <= -kNegativeThreshold) s -= v;
    }
    return s;
}

Eigensystem hermitian_eigensystem(const MatrixXc& m) {
    require_hermitian(m);
    Eigen::SelfAdjointEigenSolver<MatrixXc> solver(m, Eigen::ComputeEigenvectors);
    if (solver.info() != Eigen::Success) throw std::runtime_error("Hermitian eigensolver did not converge");
    const auto& ev = solver.eigenvalues();
    return {Spectrum{{ev.data(), ev.data() + ev.size()}}, solver.eigenvectors()};
}

Spectrum hermitian_eigenvalues(const MatrixXc& m) {
    require_hermitian(m);
    Eigen::SelfAdjointEigenSolver<MatrixXc> solver(m, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) throw std::runtime_error("Hermitian eigensolver did not converge");
    const auto& ev = solver.eigenvalues();
    return Spectrum{{ev.data(), ev.data() + ev.size()}};
}

double trace_norm(const MatrixXc& m) {
    double s = 0.0;
    for (double v : hermitian_eigenvalues(m).eigenvalues) s += std::abs(v);
    return s;
}

double global_negativity(const DensityOperator& rho, int p) {
    return std::max(0.0, clamp_zero(trace_norm(global_pt(rho, p).matrix()) - 1.0));
}

double global_negativity(const PureState& state, int p) { return global_negativity(DensityOperator(state), p); }

double kway_negativity(const DensityOperator& rho, int p, int k) {
    return 2.0 * hermitian_eigenvalues(kway_pt(rho, p, k).matrix()).negative_mass();
}

double kway_negativity(const PureState& state, int p, int k) {
    return kway_negativity(DensityOperator(state), p, k);
}

std::vector<Font> enumerate_fonts(const PureState& state, int p) {
    const int n = state.n_qubits();
    if (p < 1 || p > n) {
        throw std::out_of_range("qubit " + std::to_string(p) + " outside [1, " + std::to_string(n) + "]");
    }
    const std::uint64_t mask = qubit_mask(n, p);
    std::vector<Font> fonts;
    for (std::uint64_t i = 0; i < state.dim(); ++i) {
        if (i & mask) continue;
        // j ranges over labels with bit p set; j ^ mask must differ from i and
        // exceed it so that each class is visited once.
        for (std::uint64_t jf = i + 1; jf < state.dim(); ++jf) {
            if (jf & mask) continue;
            const std::uint64_t j = jf | mask;
            const cplx det = state[i] * state[j] - state[i ^ mask] * state[j ^ mask];
            const double mag = std::abs(det);
            fonts.push_back({{BasisIndex(n, i), BasisIndex(n, j), p, k_label(i, j)}, det, -mag, mag > kFontZero});
        }
    }
    return fonts;
}

double font_negativity_2q(const PureState& state) {
    if (state.n_qubits() != 2) throw std::invalid_argument("font_negativity_2q needs a two-qubit state");
    return 2.0 * std::abs(state[0b00] * state[0b11] - state[0b01] * state[0b10]);
}

double concurrence_2q(const MatrixXc& rho) {
    if (rho.rows() != 4 || rho.cols() != 4) throw std::invalid_argument("concurrence_2q needs a 4x4 matrix");
    if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > 1e-9) {
        throw std::invalid_argument("density matrix is not Hermitian within 1e-9");
    }
    if (std::abs(rho.trace() - cplx{1.0}) > 1e-9) throw std::invalid_argument("density matrix trace is not 1");

    const Eigensystem es = hermitian_eigensystem(rho);
    if (es.spectrum.eigenvalues.front() < -1e-9) {
        throw std::invalid_argument("density matrix is not positive semidefinite within 1e-9");
    }

    // rho = W W^dagger over the numerically nonzero eigenpairs. The square
    // roots of the eigenvalues of rho (Y rho* Y), Y = sigma_y (x) sigma_y, are
    // the singular values of W^T Y W; working with W avoids square roots of
    // eigenvalues that are zero up to rounding.
    std::vector<Eigen::Index> support;
    for (Eigen::Index k = 0; k < 4; ++k) {
        if (es.spectrum.eigenvalues[static_cast<std::size_t>(k)] > kNegativeThreshold) support.push_back(k);
    }
    MatrixXc w(4, static_cast<Eigen::Index>(support.size()));
    for (std::size_t c = 0; c < support.size(); ++c) {
        const double lam = es.spectrum.eigenvalues[static_cast<std::size_t>(support[c])];
        w.col(static_cast<Eigen::Index>(c)) = es.vectors.col(support[c]) * std::sqrt(lam);
    }
    MatrixXc y = MatrixXc::Zero(4, 4);
    y(0, 3) = -1.0;
    y(1, 2) = 1.0;
    y(2, 1) = 1.0;
    y(3, 0) = -1.0;
    const MatrixXc tau = w.transpose() * y * w;

    std::vector<double> sv(4, 0.0);
    if (tau.size() > 0) {
        Eigen::JacobiSVD<MatrixXc> svd(tau);
        const auto& s = svd.singularValues();
        for (Eigen::Index k = 0; k < s.size(); ++k) sv[static_cast<std::size_t>(k)] = s(k);
    }
    std::sort(sv.begin(), sv.end(), std::greater<>());
    return std::clamp(sv[0] - sv[1] - sv[2] - sv[3], 0.0, 1.0);
}

}  // namespace negfont
