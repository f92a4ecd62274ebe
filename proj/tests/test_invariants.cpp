#include <doctest.h>

#include <random>

#include "negfont/invariants.hpp"
#include "oracles.hpp"

using namespace negfont;

namespace {

const CovarianceReport& find(const std::vector<CovarianceReport>& reports, const std::string& name) {
    for (const auto& r : reports)
        if (r.relation == name) return r;
    FAIL("missing relation " << name);
    throw std::logic_error("unreachable");
}

PureState product_with_bell(int bell_first) {
    // |0> on the remaining qubit, Bell pair on (bell_first, bell_first + 1)
    const double h = 1.0 / std::sqrt(2.0);
    if (bell_first == 2) return make_state(3, std::vector<AmplitudeEntry>{{"000", h}, {"011", h}});
    return make_state(3, std::vector<AmplitudeEntry>{{"000", h}, {"110", h}});
}

}  // namespace

TEST_CASE("three-qubit determinants") {
    const auto g = three_fonts(ghz(3));
    CHECK(std::abs(g.T000 - 0.5) < 1e-15);
    CHECK(std::abs(g.T000 - oracle::det(ghz(3), "000", "011", "100", "111")) == 0.0);
    for (cplx v : {g.T001, g.PB0, g.PB1, g.PC0, g.PC1}) CHECK(v == cplx{});

    const auto w = three_fonts(w_state(3));
    CHECK(std::abs(w.PB0 + 1.0 / 3.0) < 1e-15);
    CHECK(std::abs(w.PB0 - oracle::det(w_state(3), "000", "001", "100", "101")) == 0.0);
    for (cplx v : {w.T000, w.T001, w.PB1}) CHECK(v == cplx{});

    const auto z = three_fonts(make_state(3, std::vector<AmplitudeEntry>{{"000", 1.0}}));
    for (cplx v : {z.T000, z.T001, z.PB0, z.PB1, z.PC0, z.PC1}) CHECK(v == cplx{});

    CHECK_THROWS_AS(three_fonts(ghz(4)), std::invalid_argument);

    // every field against its defining determinant on a random state
    const auto s = random_state(3, 3);
    const auto d = three_fonts(s);
    CHECK(d.T001 == oracle::det(s, "001", "010", "101", "110"));
    CHECK(d.PB1 == oracle::det(s, "010", "011", "110", "111"));
    CHECK(d.PC0 == oracle::det(s, "000", "010", "100", "110"));
    CHECK(d.PC1 == oracle::det(s, "001", "011", "101", "111"));
}

TEST_CASE("three-tangle golden values") {
    CHECK(std::abs(oracle::cayley_three_tangle(ghz(3)) - 1.0) < 1e-12);
    CHECK(std::abs(three_tangle(ghz(3)) - 1.0) < 1e-10);
    CHECK(std::abs(three_tangle(w_state(3))) < 1e-10);
    CHECK(oracle::cayley_three_tangle(w_state(3)) < 1e-12);
    CHECK(three_tangle(product_with_bell(2)) < 1e-15);
    CHECK(three_tangle(product_with_bell(1)) < 1e-15);
    CHECK(oracle::cayley_three_tangle(product_with_bell(2)) < 1e-15);
    CHECK_THROWS_AS(three_tangle(ghz(2)), std::invalid_argument);
}

TEST_CASE("three-tangle agrees with the hyperdeterminant and its alternate form") {
    std::mt19937_64 rng(31);
    for (int t = 0; t < 500; ++t) {
        const auto s = oracle::random_state(3, rng);
        const auto d = three_fonts(s);
        CHECK(std::abs(three_tangle(d) - oracle::cayley_three_tangle(s)) < 1e-12);
        CHECK(std::abs(three_tangle(d) - three_tangle_alternate(d)) < 1e-10);
        CHECK(product_identity_residual(d) < 1e-10);
    }
}

TEST_CASE("residual-tangle oracle") {
    CHECK(ckw_residual(ghz(3)) < 1e-10);
    CHECK(ckw_residual(w_state(3)) < 1e-10);
    CHECK(ckw_residual(make_state(3, std::vector<AmplitudeEntry>{{"000", 1.0}})) == 0.0);
    std::mt19937_64 rng(32);
    for (int t = 0; t < 200; ++t) CHECK(ckw_residual(oracle::random_state(3, rng)) <= 1e-8);
    CHECK_THROWS_AS(ckw_residual(ghz(4)), std::invalid_argument);
}

TEST_CASE("three-qubit covariance relations") {
    for (const auto& r : covariance_check_3(random_state(3, 1), 0.0)) CHECK(r.residual == 0.0);

    const auto ghz_reports = covariance_check_3(ghz(3), 1.0);
    CHECK(ghz_reports.size() == 10);
    CHECK(max_residual(ghz_reports) <= 1e-12);
    CHECK(find(ghz_reports, "UB1: T000").prefactor_used == doctest::Approx(0.5));

    std::mt19937_64 rng(33);
    std::normal_distribution<double> g(0.0, 2.0);
    double worst = 0.0;
    for (int t = 0; t < 100; ++t) {
        const auto s = oracle::random_state(3, rng);
        const cplx x{g(rng), g(rng)};
        worst = std::max(worst, max_residual(covariance_check_3(s, x)));
    }
    CHECK(worst <= 1e-9);
    CHECK_THROWS_AS(covariance_check_3(ghz(4), 1.0), std::invalid_argument);
}

TEST_CASE("four-qubit determinants") {
    const auto g = four_fonts(ghz(4));
    CHECK(std::abs(g.F0000() - 0.5) < 1e-15);
    CHECK(std::abs(g.F0000() - oracle::det(ghz(4), "0000", "0111", "1000", "1111")) == 0.0);
    CHECK(g.F0001() == cplx{});
    CHECK(g.F0010() == cplx{});
    CHECK(g.F0011() == cplx{});

    const auto w = four_fonts(w_state(4));
    for (const auto& row : w.F)
        for (cplx v : row) CHECK(v == cplx{});

    const auto c = four_fonts(cluster4());
    CHECK(std::abs(c.F0000() + 0.25) < 1e-15);
    CHECK(std::abs(c.F0011() - 0.25) < 1e-15);
    CHECK(c.F0001() == cplx{});
    CHECK(c.F0010() == cplx{});

    // each field against its defining determinant
    const auto s = random_state(4, 5);
    const auto d = four_fonts(s);
    CHECK(d.F0001() == oracle::det(s, "0001", "0110", "1001", "1110"));
    CHECK(d.F0010() == oracle::det(s, "0010", "0101", "1010", "1101"));
    CHECK(d.F0011() == oracle::det(s, "0011", "0100", "1011", "1100"));
    CHECK(d.TC[0][0] == oracle::det(s, "0000", "0101", "1000", "1101"));
    CHECK(d.TC[0][1] == oracle::det(s, "0001", "0100", "1001", "1100"));
    CHECK(d.TC[1][0] == oracle::det(s, "0010", "0111", "1010", "1111"));
    CHECK(d.TC[1][1] == oracle::det(s, "0011", "0110", "1011", "1110"));
    CHECK(d.TB[0][0] == oracle::det(s, "0000", "0011", "1000", "1011"));
    CHECK(d.TB[0][1] == oracle::det(s, "0001", "0010", "1001", "1010"));
    CHECK(d.TB[1][0] == oracle::det(s, "0100", "0111", "1100", "1111"));
    CHECK(d.TB[1][1] == oracle::det(s, "0101", "0110", "1101", "1110"));

    CHECK_THROWS_AS(four_fonts(ghz(3)), std::invalid_argument);
}

TEST_CASE("four-qubit invariant and four-tangle") {
    CHECK(std::abs(four_invariant(ghz(4)) + 0.5) < 1e-15);
    CHECK(std::abs(four_invariant(cluster4())) < 1e-15);
    CHECK(std::abs(four_tangle(ghz(4)) - 1.0) < 1e-10);
    CHECK(four_tangle(w_state(4)) < 1e-10);
    CHECK(four_tangle(cluster4()) < 1e-10);

    // same polynomial as the signed complementary-pair sum, up to sign
    std::mt19937_64 rng(41);
    for (int t = 0; t < 200; ++t) {
        const auto s = oracle::random_state(4, rng);
        CHECK(std::abs(four_invariant(s) + oracle::four_qubit_h(s)) < 1e-15);
    }

    // |psi_A> (x) |phi_BCD> and the other single-qubit cuts
    for (int t = 0; t < 100; ++t) {
        const int p = 1 + t % 4;
        const auto rest = oracle::random_state(3, rng);
        const auto [c0, c1] = oracle::random_qubit(rng);
        const auto s = oracle::product_across(p, rest, c0, c1);
        CHECK(std::abs(four_invariant(s)) < 1e-15);
        CHECK(four_tangle(s) < 1e-15);
    }
}

TEST_CASE("tangles are bounded by one") {
    std::mt19937_64 rng(42);
    double max3 = 0.0, max4 = 0.0;
    for (int t = 0; t < 10000; ++t) {
        const double t3 = three_tangle(three_fonts(oracle::random_state(3, rng)));
        const double t4 = four_tangle(oracle::random_state(4, rng));
        CHECK(t3 >= 0.0);
        CHECK(t4 >= 0.0);
        max3 = std::max(max3, t3);
        max4 = std::max(max4, t4);
    }
    CHECK(max3 <= 1.0 + 1e-12);
    CHECK(max4 <= 1.0 + 1e-12);
}

TEST_CASE("three-tangle vanishes across every single-qubit cut") {
    std::mt19937_64 rng(43);
    for (int t = 0; t < 60; ++t) {
        const int p = 1 + t % 3;
        const auto rest = oracle::random_state(2, rng);
        const auto [c0, c1] = oracle::random_qubit(rng);
        CHECK(three_tangle(oracle::product_across(p, rest, c0, c1)) < 1e-14);
    }
}

TEST_CASE("four-qubit covariance relations") {
    for (char q : {'A', 'B', 'C', 'D'}) {
        for (const auto& r : covariance_check_4(random_state(4, 2), q, 0.0)) CHECK(r.residual == 0.0);
    }

    const auto c = covariance_check_4(ghz(4), 'C', 1.0);
    CHECK(find(c, "|four_invariant|").residual <= 1e-12);

    std::mt19937_64 rng(44);
    std::normal_distribution<double> g(0.0, 2.0);
    double worst_abs = 0.0, worst_tangle = 0.0, worst_relation = 0.0;
    for (int t = 0; t < 100; ++t) {
        const auto s = oracle::random_state(4, rng);
        const char q = "ABCD"[t % 4];
        const cplx param{g(rng), g(rng)};
        const auto reports = covariance_check_4(s, q, param);
        worst_abs = std::max(worst_abs, find(reports, "|four_invariant|").residual);
        worst_relation = std::max(worst_relation, max_residual(reports));
        const auto moved = apply_local_unitary(s, {q - 'A' + 1, parametric_unitary(param)});
        worst_tangle = std::max(worst_tangle, std::abs(four_tangle(moved) - four_tangle(s)));
    }
    CHECK(worst_abs <= 1e-9);
    CHECK(worst_tangle <= 1e-9);
    CHECK(worst_relation <= 1e-9);

    CHECK_THROWS_AS(covariance_check_4(ghz(4), 'E', 1.0), std::invalid_argument);
    CHECK_THROWS_AS(covariance_check_4(ghz(3), 'A', 1.0), std::invalid_argument);
}

TEST_CASE("selected four-qubit prefactors") {
    const auto s = random_state(4, 77);
    const cplx p{0.7, -1.3};
    const double quad = 1.0 / (1.0 + std::norm(p));

    for (const auto& r : covariance_check_4(s, 'A', p)) CHECK(r.prefactor_label == "1");
    for (const auto& r : covariance_check_4(s, 'D', p)) CHECK(r.prefactor_label == "1");

    const auto c = covariance_check_4(s, 'C', p);
    CHECK(find(c, "UC: F0001-F0000").prefactor_used == doctest::Approx(quad));
    CHECK(find(c, "UC: F0010-F0011").prefactor_used == doctest::Approx(quad));
    CHECK(find(c, "UC+").prefactor_label == "1");
    // the 1/sqrt candidate leaves a visible residual
    for (const auto& cand : find(c, "UC: F0001-F0000").candidates)
        if (cand.label == "1/sqrt(1+|p|^2)") CHECK(cand.residual > 1e-4);

    const auto b = covariance_check_4(s, 'B', p);
    for (const char* name : {"UB: F0000", "UB: F0001", "UB: F0010", "UB: F0011"})
        CHECK(find(b, name).prefactor_used == doctest::Approx(quad));
    CHECK(find(b, "UB+").prefactor_label == "1");
    CHECK(find(b, "UB-").prefactor_label == "1");
    CHECK(max_residual(b) <= 1e-12);
}

TEST_CASE("local-unitary invariance sweep") {
    CHECK(lu_invariance_sweep(ghz(4), 500, 1) <= 1e-9);
    CHECK(lu_invariance_sweep(w_state(3), 500, 2) <= 1e-10);
    CHECK(lu_invariance_sweep(random_state(3, 5), 0, 3) == 0.0);
    CHECK(lu_invariance_sweep(random_state(3, 5), 50, 3) == lu_invariance_sweep(random_state(3, 5), 50, 3));
    CHECK(lu_invariance_sweep(random_state(4, 6), 200, 4) <= 1e-9);
    CHECK_THROWS_AS(lu_invariance_sweep(ghz(2), 10, 1), std::invalid_argument);
    CHECK_THROWS_AS(lu_invariance_sweep(ghz(5), 10, 1), std::invalid_argument);
}
