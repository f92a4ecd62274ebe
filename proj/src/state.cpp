#include "negfont/state.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

namespace negfont {

namespace {

constexpr int kAbsoluteMaxQubits = 30;

std::mt19937_64 seeded_engine(std::uint64_t seed, std::uint64_t stream) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(stream)};
    return std::mt19937_64(seq);
}

cplx complex_gaussian(std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    const double re = gauss(rng);
    const double im = gauss(rng);
    return {re, im};
}

void require_qubit_count(int n, int max_qubits) {
    if (n < 1 || n > max_qubits) {
        throw std::invalid_argument("qubit count " + std::to_string(n) + " outside [1, " +
                                    std::to_string(max_qubits) + "]");
    }
}

}  // namespace

// ---------------------------------------------------------------- BasisIndex

BasisIndex::BasisIndex(int n_qubits, std::uint64_t value) : n_(n_qubits), value_(value) {
    if (n_qubits < 1 || n_qubits > kAbsoluteMaxQubits) {
        throw std::invalid_argument("basis index width out of range");
    }
    if (value >> n_qubits) {
        throw std::invalid_argument("basis index value does not fit in " + std::to_string(n_qubits) +
                                    " bits");
    }
}

BasisIndex BasisIndex::parse(std::string_view bits) {
    if (bits.empty() || bits.size() > kAbsoluteMaxQubits) {
        throw StateError("bit-string length out of range: '" + std::string(bits) + "'");
    }
    std::uint64_t value = 0;
    for (char c : bits) {
        if (c != '0' && c != '1') {
            throw StateError("bit-string contains non-binary character: '" + std::string(bits) + "'");
        }
        value = (value << 1) | static_cast<std::uint64_t>(c - '0');
    }
    return BasisIndex(static_cast<int>(bits.size()), value);
}

int BasisIndex::bit(int qubit) const {
    if (qubit < 1 || qubit > n_) throw std::out_of_range("qubit index out of range");
    return static_cast<int>((value_ >> (n_ - qubit)) & 1U);
}

BasisIndex BasisIndex::flipped(int qubit) const {
    if (qubit < 1 || qubit > n_) throw std::out_of_range("qubit index out of range");
    return BasisIndex(n_, value_ ^ qubit_mask(n_, qubit));
}

std::string BasisIndex::str() const {
    std::string s(static_cast<std::size_t>(n_), '0');
    for (int q = 1; q <= n_; ++q) {
        if (bit(q)) s[static_cast<std::size_t>(q - 1)] = '1';
    }
    return s;
}

// ----------------------------------------------------------------- PureState

PureState::PureState(int n_qubits, std::vector<cplx> amplitudes)
    : n_(n_qubits), amps_(std::move(amplitudes)) {
    require_qubit_count(n_qubits, kAbsoluteMaxQubits);
    if (amps_.size() != (std::size_t{1} << n_qubits)) {
        throw std::invalid_argument("amplitude vector length must be 2^n");
    }
    correction_ = std::abs(norm() - 1.0);
    if (correction_ > kNormTolerance) {
        throw StateError("state is not normalized (|norm - 1| = " + std::to_string(correction_) + ")");
    }
}

PureState PureState::normalized(int n_qubits, std::vector<cplx> amplitudes) {
    double sq = 0.0;
    for (const auto& a : amplitudes) sq += std::norm(a);
    const double nrm = std::sqrt(sq);
    if (!(nrm > 0.0) || !std::isfinite(nrm)) {
        throw StateError("amplitudes cannot be normalized (norm is zero or non-finite)");
    }
    for (auto& a : amplitudes) a /= nrm;
    PureState out(n_qubits, std::move(amplitudes));
    out.correction_ = std::abs(nrm - 1.0);
    return out;
}

const cplx& PureState::at(const BasisIndex& index) const {
    if (index.size() != n_) {
        throw std::invalid_argument("bit-string length " + std::to_string(index.size()) +
                                    " does not match qubit count " + std::to_string(n_));
    }
    return amps_[index.value()];
}

double PureState::norm() const {
    double sq = 0.0;
    for (const auto& a : amps_) sq += std::norm(a);
    return std::sqrt(sq);
}

// -------------------------------------------------------------- LocalUnitary

LocalUnitary::LocalUnitary(int target_qubit, Matrix2c m) : target(target_qubit), matrix(m) {
    if (target_qubit < 1) throw std::invalid_argument("target qubit must be >= 1");
    if (!is_unitary(m)) throw std::invalid_argument("matrix is not unitary within 1e-12");
}

LocalUnitary LocalUnitary::adjoint() const {
    Matrix2c h{};
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) h[r][c] = std::conj(matrix[c][r]);
    return {target, h};
}

bool is_unitary(const Matrix2c& m, double tol) {
    for (int r = 0; r < 2; ++r) {
        for (int c = 0; c < 2; ++c) {
            cplx s = std::conj(m[0][r]) * m[0][c] + std::conj(m[1][r]) * m[1][c];
            if (std::abs(s - (r == c ? 1.0 : 0.0)) > tol) return false;
        }
    }
    return true;
}

cplx determinant(const Matrix2c& m) { return m[0][0] * m[1][1] - m[0][1] * m[1][0]; }

// ------------------------------------------------------------- constructors

PureState make_state(int n_qubits, std::span<const AmplitudeEntry> entries, int max_qubits) {
    require_qubit_count(n_qubits, max_qubits);
    std::vector<cplx> amps(std::size_t{1} << n_qubits);
    std::set<std::uint64_t> seen;
    for (const auto& e : entries) {
        const BasisIndex idx = BasisIndex::parse(e.bits);
        if (idx.size() != n_qubits) {
            throw StateError("bit-string '" + e.bits + "' has length " + std::to_string(idx.size()) +
                             ", expected " + std::to_string(n_qubits));
        }
        if (!seen.insert(idx.value()).second) {
            throw StateError("duplicate amplitude index '" + e.bits + "'");
        }
        if (!std::isfinite(e.value.real()) || !std::isfinite(e.value.imag())) {
            throw StateError("non-finite amplitude at '" + e.bits + "'");
        }
        amps[idx.value()] = e.value;
    }
    if (std::all_of(amps.begin(), amps.end(), [](const cplx& a) { return a == cplx{}; })) {
        throw StateError("all-zero amplitude list");
    }
    return PureState::normalized(n_qubits, std::move(amps));
}

PureState ghz(int n_qubits) {
    if (n_qubits < 2 || n_qubits > kDefaultMaxQubits) {
        throw std::invalid_argument("ghz needs 2 <= n <= " + std::to_string(kDefaultMaxQubits));
    }
    std::vector<cplx> amps(std::size_t{1} << n_qubits);
    amps.front() = amps.back() = 1.0 / std::sqrt(2.0);
    return PureState(n_qubits, std::move(amps));
}

PureState w_state(int n_qubits) {
    if (n_qubits < 2 || n_qubits > kDefaultMaxQubits) {
        throw std::invalid_argument("w needs 2 <= n <= " + std::to_string(kDefaultMaxQubits));
    }
    std::vector<cplx> amps(std::size_t{1} << n_qubits);
    const double a = 1.0 / std::sqrt(static_cast<double>(n_qubits));
    for (int q = 1; q <= n_qubits; ++q) amps[qubit_mask(n_qubits, q)] = a;
    return PureState(n_qubits, std::move(amps));
}

PureState cluster4() {
    std::vector<cplx> amps(16);
    amps[0b0000] = 0.5;
    amps[0b0011] = 0.5;
    amps[0b1100] = 0.5;
    amps[0b1111] = -0.5;
    return PureState(4, std::move(amps));
}

PureState product_state(std::span<const std::pair<cplx, cplx>> factors) {
    const int n = static_cast<int>(factors.size());
    require_qubit_count(n, kDefaultMaxQubits);
    std::vector<cplx> amps{cplx{1.0}};
    for (const auto& [zero, one] : factors) {
        std::vector<cplx> next;
        next.reserve(amps.size() * 2);
        for (const auto& a : amps) {
            next.push_back(a * zero);
            next.push_back(a * one);
        }
        amps = std::move(next);
    }
    return PureState::normalized(n, std::move(amps));
}

Matrix2c parametric_unitary(cplx x) {
    const double s = 1.0 / std::sqrt(1.0 + std::norm(x));
    return {{{cplx{s}, -std::conj(x) * s}, {x * s, cplx{s}}}};
}

PureState random_state(int n_qubits, std::uint64_t seed) {
    require_qubit_count(n_qubits, kDefaultMaxQubits);
    auto rng = seeded_engine(seed, 0x5747);
    std::vector<cplx> amps(std::size_t{1} << n_qubits);
    for (auto& a : amps) a = complex_gaussian(rng);
    return PureState::normalized(n_qubits, std::move(amps));
}

Matrix2c random_unitary_matrix(std::uint64_t seed) {
    // Gram-Schmidt on a complex Ginibre matrix; positive diagonal of R makes
    // the resulting Q Haar-distributed.
    auto rng = seeded_engine(seed, 0x2u);
    cplx c0[2] = {complex_gaussian(rng), complex_gaussian(rng)};
    cplx c1[2] = {complex_gaussian(rng), complex_gaussian(rng)};
    const double n0 = std::sqrt(std::norm(c0[0]) + std::norm(c0[1]));
    c0[0] /= n0;
    c0[1] /= n0;
    const cplx proj = std::conj(c0[0]) * c1[0] + std::conj(c0[1]) * c1[1];
    c1[0] -= proj * c0[0];
    c1[1] -= proj * c0[1];
    const double n1 = std::sqrt(std::norm(c1[0]) + std::norm(c1[1]));
    c1[0] /= n1;
    c1[1] /= n1;
    return {{{c0[0], c1[0]}, {c0[1], c1[1]}}};
}

LocalUnitary random_local_unitary(int target, std::uint64_t seed) {
    return {target, random_unitary_matrix(seed)};
}

PureState random_product_state(int n_qubits, std::uint64_t seed) {
    require_qubit_count(n_qubits, kDefaultMaxQubits);
    std::vector<std::pair<cplx, cplx>> factors;
    for (int q = 0; q < n_qubits; ++q) {
        const Matrix2c u = random_unitary_matrix(seed * 1000003ULL + static_cast<std::uint64_t>(q));
        factors.emplace_back(u[0][0], u[1][0]);
    }
    return product_state(factors);
}

PureState apply_local_unitary(const PureState& state, const LocalUnitary& lu) {
    const int n = state.n_qubits();
    if (lu.target < 1 || lu.target > n) {
        throw std::out_of_range("unitary target " + std::to_string(lu.target) + " outside [1, " +
                                std::to_string(n) + "]");
    }
    const std::uint64_t mask = qubit_mask(n, lu.target);
    const auto& u = lu.matrix;
    std::vector<cplx> out(state.amplitudes().begin(), state.amplitudes().end());
    for (std::uint64_t i = 0; i < state.dim(); ++i) {
        if (i & mask) continue;
        const cplx a0 = state[i];
        const cplx a1 = state[i | mask];
        out[i] = u[0][0] * a0 + u[0][1] * a1;
        out[i | mask] = u[1][0] * a0 + u[1][1] * a1;
    }
    return PureState(n, std::move(out));
}

MatrixXc density(const PureState& state) {
    const auto a = state.amplitudes();
    Eigen::Map<const Eigen::VectorXcd> psi(a.data(), static_cast<Eigen::Index>(a.size()));
    return psi * psi.adjoint();
}

MatrixXc reduced_density(const PureState& state, std::span<const int> keep) {
    const int n = state.n_qubits();
    for (std::size_t k = 0; k < keep.size(); ++k) {
        if (keep[k] < 1 || keep[k] > n) throw std::out_of_range("kept qubit out of range");
        if (k > 0 && keep[k] <= keep[k - 1]) {
            throw std::invalid_argument("kept qubits must be strictly ascending");
        }
    }
    const int m = static_cast<int>(keep.size());
    const std::uint64_t dim_keep = std::uint64_t{1} << m;

    // Split every flat index into (kept part, traced part).
    auto kept_part = [&](std::uint64_t i) {
        std::uint64_t v = 0;
        for (int q : keep) v = (v << 1) | ((i & qubit_mask(n, q)) ? 1U : 0U);
        return v;
    };
    std::uint64_t keep_mask = 0;
    for (int q : keep) keep_mask |= qubit_mask(n, q);

    MatrixXc rho = MatrixXc::Zero(static_cast<Eigen::Index>(dim_keep), static_cast<Eigen::Index>(dim_keep));
    for (std::uint64_t i = 0; i < state.dim(); ++i) {
        if (state[i] == cplx{}) continue;
        for (std::uint64_t j = 0; j < state.dim(); ++j) {
            if ((i & ~keep_mask) != (j & ~keep_mask)) continue;
            rho(static_cast<Eigen::Index>(kept_part(i)), static_cast<Eigen::Index>(kept_part(j))) +=
                state[i] * std::conj(state[j]);
        }
    }
    return rho;
}

}  // namespace negfont
