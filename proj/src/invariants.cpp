#include "negfont/invariants.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

#include "negfont/spectra.hpp"

namespace negfont {

namespace {

void require_qubits(const PureState& s, int n, const char* what) {
    if (s.n_qubits() != n) {
        throw std::invalid_argument(std::string(what) + " needs a " + std::to_string(n) + "-qubit state, got " +
                                    std::to_string(s.n_qubits()));
    }
}

// Amplitude lookup by bits (each taken mod 2), first argument most significant.
struct Amp3 {
    const PureState& s;
    cplx operator()(int i1, int i2, int i3) const {
        return s[static_cast<std::uint64_t>(((i1 & 1) << 2) | ((i2 & 1) << 1) | (i3 & 1))];
    }
};

struct Amp4 {
    const PureState& s;
    cplx operator()(int i1, int i2, int i3, int i4) const {
        return s[static_cast<std::uint64_t>(((i1 & 1) << 3) | ((i2 & 1) << 2) | ((i3 & 1) << 1) | (i4 & 1))];
    }
};

cplx det2(cplx a, cplx b, cplx c, cplx d) { return a * d - b * c; }

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

struct PrefactorChoice {
    std::string label;
    double value;
};

CovarianceReport fixed_relation(std::string name, cplx transformed, cplx predicted, const PrefactorChoice& k) {
    CovarianceReport r;
    r.relation = std::move(name);
    r.residual = std::abs(transformed - k.value * predicted);
    r.prefactor_used = k.value;
    r.prefactor_label = k.label;
    r.candidates.push_back({k.label, k.value, r.residual});
    return r;
}

CovarianceReport scanned_relation(std::string name, cplx transformed, cplx predicted,
                                  const std::vector<PrefactorChoice>& choices) {
    CovarianceReport r;
    r.relation = std::move(name);
    for (const auto& k : choices) r.candidates.push_back({k.label, k.value, std::abs(transformed - k.value * predicted)});
    const auto best = std::min_element(r.candidates.begin(), r.candidates.end(),
                                       [](const auto& a, const auto& b) { return a.residual < b.residual; });
    r.residual = best->residual;
    r.prefactor_used = best->prefactor;
    r.prefactor_label = best->label;
    return r;
}

}  // namespace

// ------------------------------------------------------------- three qubits

FontDeterminants3 three_fonts(const PureState& state) {
    require_qubits(state, 3, "three_fonts");
    const Amp3 a{state};
    FontDeterminants3 d;
    d.T000 = det2(a(0, 0, 0), a(0, 1, 1), a(1, 0, 0), a(1, 1, 1));
    d.T001 = det2(a(0, 0, 1), a(0, 1, 0), a(1, 0, 1), a(1, 1, 0));
    d.PB0 = det2(a(0, 0, 0), a(0, 0, 1), a(1, 0, 0), a(1, 0, 1));
    d.PB1 = det2(a(0, 1, 0), a(0, 1, 1), a(1, 1, 0), a(1, 1, 1));
    d.PC0 = det2(a(0, 0, 0), a(0, 1, 0), a(1, 0, 0), a(1, 1, 0));
    d.PC1 = det2(a(0, 0, 1), a(0, 1, 1), a(1, 0, 1), a(1, 1, 1));
    return d;
}

double three_tangle(const FontDeterminants3& d) {
    const cplx diff = d.T001 - d.T000;
    return 4.0 * std::abs(diff * diff - 4.0 * d.PB1 * d.PB0);
}

double three_tangle_alternate(const FontDeterminants3& d) {
    const cplx sum = d.T001 + d.T000;
    return 4.0 * std::abs(sum * sum - 4.0 * d.PC0 * d.PC1);
}

double three_tangle(const PureState& state) {
    const auto d = three_fonts(state);
    const double primary = three_tangle(d);
    if (std::abs(primary - three_tangle_alternate(d)) > 1e-8) {
        throw std::logic_error("three-tangle forms disagree; determinant indexing is inconsistent");
    }
    return primary;
}

double product_identity_residual(const FontDeterminants3& d) {
    return std::abs(d.T001 * d.T000 - (d.PC0 * d.PC1 - d.PB1 * d.PB0));
}

double ckw_residual(const PureState& state) {
    require_qubits(state, 3, "ckw_residual");
    const double c_a_bc = global_negativity(state, 1);
    const std::array<int, 2> ab{1, 2};
    const std::array<int, 2> ac{1, 3};
    const double c_ab = concurrence_2q(reduced_density(state, ab));
    const double c_ac = concurrence_2q(reduced_density(state, ac));
    const double residual_tangle = c_a_bc * c_a_bc - c_ab * c_ab - c_ac * c_ac;
    return std::abs(three_tangle(state) - residual_tangle);
}

std::vector<CovarianceReport> covariance_check_3(const PureState& state, cplx x) {
    require_qubits(state, 3, "covariance_check_3");
    const auto d = three_fonts(state);
    const auto u = parametric_unitary(x);
    const auto b = three_fonts(apply_local_unitary(state, {2, u}));
    const double x2 = std::norm(x);
    const cplx xc = std::conj(x);
    const PrefactorChoice k{"1/(1+|x|^2)", 1.0 / (1.0 + x2)};
    const PrefactorChoice one{"1", 1.0};

    std::vector<CovarianceReport> out;
    out.push_back(fixed_relation("UB1: T000", b.T000, d.T000 + x2 * d.T001 - xc * d.PB1 + x * d.PB0, k));
    out.push_back(fixed_relation("UB2: T001", b.T001, d.T001 + x2 * d.T000 + xc * d.PB1 - x * d.PB0, k));
    out.push_back(fixed_relation("UB3: PB0", b.PB0, d.PB0 + xc * xc * d.PB1 + xc * (d.T001 - d.T000), k));
    out.push_back(fixed_relation("UB4: PB1", b.PB1, d.PB1 + x * x * d.PB0 - x * (d.T001 - d.T000), k));

    for (const auto& [label, qubit] : {std::pair{"A", 1}, std::pair{"C", 3}}) {
        const auto t = three_fonts(apply_local_unitary(state, {qubit, u}));
        const std::string on = std::string(" under U on ") + label;
        out.push_back(fixed_relation("T001-T000" + on, t.T001 - t.T000, d.T001 - d.T000, one));
        out.push_back(fixed_relation("PB0" + on, t.PB0, d.PB0, one));
        out.push_back(fixed_relation("PB1" + on, t.PB1, d.PB1, one));
    }
    return out;
}

// -------------------------------------------------------------- four qubits

FontDeterminants4 four_fonts(const PureState& state) {
    require_qubits(state, 4, "four_fonts");
    const Amp4 a{state};
    FontDeterminants4 d{};
    for (int i3 = 0; i3 < 2; ++i3) {
        for (int i4 = 0; i4 < 2; ++i4) {
            d.F[i3][i4] = det2(a(0, 0, i3, i4), a(0, 1, i3 + 1, i4 + 1), a(1, 0, i3, i4), a(1, 1, i3 + 1, i4 + 1));
            d.TC[i3][i4] = det2(a(0, 0, i3, i4), a(0, 1, i3, i4 + 1), a(1, 0, i3, i4), a(1, 1, i3, i4 + 1));
        }
    }
    for (int i2 = 0; i2 < 2; ++i2) {
        for (int i4 = 0; i4 < 2; ++i4) {
            d.TB[i2][i4] = det2(a(0, i2, 0, i4), a(0, i2, 1, i4 + 1), a(1, i2, 0, i4), a(1, i2, 1, i4 + 1));
        }
    }
    return d;
}

cplx four_invariant(const FontDeterminants4& d) { return (d.F0001() - d.F0000()) + (d.F0010() - d.F0011()); }

cplx four_invariant(const PureState& state) { return four_invariant(four_fonts(state)); }

double four_tangle(const PureState& state) { return 4.0 * std::norm(four_invariant(state)); }

std::vector<CovarianceReport> covariance_check_4(const PureState& state, char qubit, cplx param) {
    require_qubits(state, 4, "covariance_check_4");
    int target = 0;
    switch (qubit) {
        case 'A': case 'a': target = 1; break;
        case 'B': case 'b': target = 2; break;
        case 'C': case 'c': target = 3; break;
        case 'D': case 'd': target = 4; break;
        default: throw std::invalid_argument(std::string("unknown qubit label '") + qubit + "'");
    }

    const auto d = four_fonts(state);
    const auto t = four_fonts(apply_local_unitary(state, {target, parametric_unitary(param)}));
    const double p2 = std::norm(param);
    const cplx pc = std::conj(param);
    const std::vector<PrefactorChoice> choices{
        {"1", 1.0}, {"1/(1+|p|^2)", 1.0 / (1.0 + p2)}, {"1/sqrt(1+|p|^2)", 1.0 / std::sqrt(1.0 + p2)}};

    std::vector<CovarianceReport> out;
    switch (target) {
        case 1: {
            const char* names[2][2] = {{"F0000 unchanged", "F0001 unchanged"}, {"F0010 unchanged", "F0011 unchanged"}};
            for (int i3 = 0; i3 < 2; ++i3)
                for (int i4 = 0; i4 < 2; ++i4)
                    out.push_back(scanned_relation(names[i3][i4], t.F[i3][i4], d.F[i3][i4], choices));
            break;
        }
        case 4: {
            const cplx lhs1 = t.F0001() - t.F0000(), lhs2 = t.F0010() - t.F0011();
            const cplx rhs1 = d.F0001() - d.F0000(), rhs2 = d.F0010() - d.F0011();
            out.push_back(scanned_relation("UD+", lhs1 + lhs2, rhs1 + rhs2, choices));
            out.push_back(scanned_relation("UD-", lhs1 - lhs2, rhs1 - rhs2, choices));
            break;
        }
        case 3: {
            const cplx f1 = d.F0001() - d.F0000(), f2 = d.F0010() - d.F0011();
            const cplx tc1 = d.TC[1][0] - d.TC[1][1], tc0 = d.TC[0][0] - d.TC[0][1];
            out.push_back(scanned_relation("UC: F0001-F0000", t.F0001() - t.F0000(),
                                           f1 + p2 * f2 + pc * tc1 - param * tc0, choices));
            out.push_back(scanned_relation("UC: F0010-F0011", t.F0010() - t.F0011(),
                                           f2 + p2 * f1 - pc * tc1 + param * tc0, choices));
            out.push_back(scanned_relation("UC+", (t.F0001() - t.F0000()) + (t.F0010() - t.F0011()), f1 + f2, choices));
            break;
        }
        case 2: {
            const auto& tb = d.TB;
            out.push_back(scanned_relation("UB: F0000", t.F0000(),
                                           d.F0000() + p2 * d.F0011() - pc * tb[1][0] + param * tb[0][0], choices));
            out.push_back(scanned_relation("UB: F0001", t.F0001(),
                                           d.F0001() + p2 * d.F0010() - pc * tb[1][1] + param * tb[0][1], choices));
            out.push_back(scanned_relation("UB: F0011", t.F0011(),
                                           d.F0011() + p2 * d.F0000() + pc * tb[1][0] - param * tb[0][0], choices));
            out.push_back(scanned_relation("UB: F0010", t.F0010(),
                                           d.F0010() + p2 * d.F0001() + pc * tb[1][1] - param * tb[0][1], choices));
            const cplx s1 = t.F0001() + t.F0010(), s0 = t.F0000() + t.F0011();
            const cplx r1 = d.F0001() + d.F0010(), r0 = d.F0000() + d.F0011();
            out.push_back(scanned_relation("UB+", s1 + s0, r1 + r0, choices));
            out.push_back(scanned_relation("UB-", s1 - s0, r1 - r0, choices));
            break;
        }
    }

    CovarianceReport mag;
    mag.relation = "|four_invariant|";
    mag.residual = std::abs(std::abs(four_invariant(t)) - std::abs(four_invariant(d)));
    mag.candidates.push_back({"1", 1.0, mag.residual});
    out.push_back(std::move(mag));
    return out;
}

double max_residual(const std::vector<CovarianceReport>& reports) {
    double m = 0.0;
    for (const auto& r : reports) m = std::max(m, r.residual);
    return m;
}

// ------------------------------------------------------------------ sweeps

double lu_invariance_sweep(const PureState& state, int trials, std::uint64_t seed) {
    const int n = state.n_qubits();
    if (n != 3 && n != 4) throw std::invalid_argument("lu_invariance_sweep needs n = 3 or n = 4");
    if (trials < 0) throw std::invalid_argument("trial count must be non-negative");

    const std::function<double(const PureState&)> tangle =
        n == 3 ? std::function<double(const PureState&)>([](const PureState& s) { return three_tangle(three_fonts(s)); })
               : std::function<double(const PureState&)>([](const PureState& s) { return four_tangle(s); });
    const double reference = tangle(state);

    double worst = 0.0;
    for (int trial = 0; trial < trials; ++trial) {
        const std::uint64_t trial_seed = splitmix64(seed ^ splitmix64(static_cast<std::uint64_t>(trial)));
        PureState rotated = state;
        for (int q = 1; q <= n; ++q) {
            rotated = apply_local_unitary(rotated, random_local_unitary(q, splitmix64(trial_seed + static_cast<std::uint64_t>(q))));
        }
        worst = std::max(worst, std::abs(tangle(rotated) - reference));
    }
    return worst;
}

}  // namespace negfont
