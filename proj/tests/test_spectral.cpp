#include <doctest.h>

#include <cmath>

#include "quadgraph/spectral.hpp"

using namespace quadgraph;

namespace {

constexpr double kPi = 3.14159265358979323846;

FieldRef f3() {
    static FieldRef f = FieldSpec::from_order(3);
    return f;
}

std::vector<double> complete_graph(int m) {
    std::vector<double> a(size_t(m) * m, 1.0);
    for (int i = 0; i < m; ++i) a[size_t(i) * m + i] = 0.0;
    return a;
}

std::vector<double> cycle_graph(int m) {
    std::vector<double> a(size_t(m) * m, 0.0);
    for (int i = 0; i < m; ++i) {
        a[size_t(i) * m + (i + 1) % m] = 1.0;
        a[size_t((i + 1) % m) * m + i] = 1.0;
    }
    return a;
}

std::vector<double> star_graph(int m) {
    std::vector<double> a(size_t(m) * m, 0.0);
    for (int i = 1; i < m; ++i) {
        a[size_t(0) * m + i] = 1.0;
        a[size_t(i) * m + 0] = 1.0;
    }
    return a;
}

void check_spectrum(const std::vector<double>& a, int m, std::vector<double> expected,
                    double tol = 1e-8) {
    DenseSpectrum s = jacobi_eigen_symmetric(a, m);
    std::sort(expected.begin(), expected.end(), std::greater<>());
    REQUIRE(int(s.values.size()) == m);
    for (int i = 0; i < m; ++i) CHECK(std::fabs(s.values[i] - expected[i]) <= tol);
}

}  // namespace

TEST_CASE("closed-form fixtures: K_m, C_m, S_m") {
    for (int m : {2, 3, 4, 5, 8, 13, 21, 34, 50}) {
        std::vector<double> ek;
        ek.push_back(m - 1.0);
        for (int i = 1; i < m; ++i) ek.push_back(-1.0);
        check_spectrum(complete_graph(m), m, ek);

        if (m >= 3) {
            std::vector<double> ec;
            for (int j = 0; j < m; ++j) ec.push_back(2.0 * std::cos(2.0 * kPi * j / m));
            check_spectrum(cycle_graph(m), m, ec);
        }

        std::vector<double> es;
        es.push_back(std::sqrt(m - 1.0));
        for (int i = 2; i < m; ++i) es.push_back(0.0);
        es.push_back(-std::sqrt(m - 1.0));
        check_spectrum(star_graph(m), m, es);
    }
}

TEST_CASE("jacobi rejects a non-symmetric matrix") {
    std::vector<double> a = {0.0, 1.0, 0.0, 0.0};
    CHECK_THROWS_WITH_AS(jacobi_eigen_symmetric(a, 2), doctest::Contains("symmetric"), Error);
}

TEST_CASE("eigenvector residuals are tiny") {
    DenseSpectrum s = jacobi_eigen_symmetric(cycle_graph(17), 17);
    std::vector<double> a = cycle_graph(17);
    double worst = 0.0;
    for (int j = 0; j < 17; ++j)
        for (int i = 0; i < 17; ++i) {
            double av = 0.0;
            for (int t = 0; t < 17; ++t) av += a[size_t(i) * 17 + t] * s.vectors[size_t(t) * 17 + j];
            worst = std::max(worst, std::fabs(av - s.values[j] * s.vectors[size_t(i) * 17 + j]));
        }
    CHECK(worst < 1e-9);
}

TEST_CASE("spectrum of orthogonality graphs") {
    OrthGraph edgeless = build_gamma_square(4, 2, f3());
    SpectralReport r = compute_spectrum(edgeless);
    for (double ev : r.eigenvalues) CHECK(ev == doctest::Approx(0.0).epsilon(1e-10));

    const OrthGraph g = build_gamma_square(4, 1, f3());
    SpectralReport rep = compute_spectrum(g);
    CHECK(rep.top == doctest::Approx(6.0).epsilon(1e-9));
    CHECK(rep.second_largest_abs == doctest::Approx(3.0).epsilon(1e-8));
    CHECK(rep.bound == doctest::Approx(3.0));  // sqrt([3 1]_3 - [2 1]_3) = sqrt(13 - 4)
    CHECK(rep.second_largest_abs <= rep.bound + 1e-6);
    CHECK(rep.solver_residual < 1e-9);
    CHECK(rep.trace_residual < 1e-6 * double(g.vertex_count()));
    CHECK(rep.energy_residual < 1e-6 * double(g.vertex_count()));

    CHECK_THROWS_AS(compute_spectrum(g, 5), CapError);
}

TEST_CASE("identity residual: gamma-bar(4,1,3) is exactly aJ + (d-a)I") {
    OrthGraph bar = build_gamma_bar(4, 1, f3());
    IdentityResidual res = identity_residual(bar);
    CHECK(res.a == 4);
    CHECK(res.d == 13);
    CHECK(res.transverse_exact);
    CHECK(res.transverse_pairs == 780);  // all C(40,2) line pairs are transverse
    REQUIRE(res.histogram.count(0) == 1);
    CHECK(res.histogram.at(0).size() == 1);
    CHECK(res.histogram.at(0).begin()->first == 4);
    CHECK(res.max_abs_residual == 0);  // the identity holds exactly, diagonal included
    REQUIRE(res.diagonal.size() == 1);
    CHECK(res.diagonal.begin()->first == 13);

    CHECK_THROWS_AS(identity_residual(build_gamma_square(4, 1, f3())), Error);
}

TEST_CASE("identity residual under the exclude-loops policy") {
    OrthGraph bar = build_gamma_bar(4, 1, f3(), {LoopPolicy::Exclude});
    IdentityResidual res = identity_residual(bar);
    // without loops, pairs of orthogonal isotropic lines lose one common
    // neighbor, so the transverse identity is no longer exact
    CHECK_FALSE(res.transverse_exact);
}

TEST_CASE("interlacing") {
    OrthGraph sq = build_gamma_square(4, 1, f3());
    OrthGraph bar = build_gamma_bar(4, 1, f3());
    SpectralReport rs = compute_spectrum(sq);
    SpectralReport rb = compute_spectrum(bar);
    InterlacingReport rep = interlacing_check(sq, rs, bar, rb);
    CHECK(rep.holds);
    CHECK(rep.checked == sq.vertex_count());

    // graph against itself: equality throughout
    InterlacingReport self = interlacing_check(bar, rb, bar, rb);
    CHECK(self.holds);
    CHECK(self.max_violation == doctest::Approx(0.0).epsilon(1e-9));

    // mismatched pair is rejected
    OrthGraph sq523 = build_gamma_square(5, 2, f3());
    SpectralReport r523 = compute_spectrum(sq523);
    CHECK_THROWS_WITH_AS(interlacing_check(sq523, r523, bar, rb),
                         doctest::Contains("mismatch"), Error);
}

TEST_CASE("spectral gap threshold") {
    OrthGraph edgeless = build_gamma_square(4, 2, f3());
    SpectralReport r = compute_spectrum(edgeless);
    CHECK_THROWS_WITH_AS(spectral_gap_threshold(edgeless, r), doctest::Contains("regular"),
                         Error);

    OrthGraph g = build_gamma_square(4, 1, f3());
    SpectralReport rep = compute_spectrum(g);
    double nstar = spectral_gap_threshold(g, rep);
    CHECK(nstar == doctest::Approx(15.0 * 3.0 / 6.0).epsilon(1e-6));
}

TEST_CASE("edge guarantee") {
    OrthGraph g = build_gamma_square(4, 1, f3());
    SpectralReport rep = compute_spectrum(g);
    double nstar = spectral_gap_threshold(g, rep);

    std::vector<int> all(g.vertex_count());
    for (size_t i = 0; i < all.size(); ++i) all[i] = int(i);
    EdgeGuarantee whole = edge_guarantee(g, all, all, nstar);
    CHECK(whole.guaranteed);
    REQUIRE(whole.witness.has_value());
    CHECK(g.adjacent(size_t(whole.witness->first), size_t(whole.witness->second)));

    // a non-adjacent singleton pair below the threshold: no guarantee, no witness
    size_t u = 0, v = SIZE_MAX;
    for (size_t w = 1; w < g.vertex_count(); ++w)
        if (!g.adjacent(u, w)) {
            v = w;
            break;
        }
    REQUIRE(v != SIZE_MAX);
    EdgeGuarantee single = edge_guarantee(g, {int(u)}, {int(v)}, nstar);
    CHECK_FALSE(single.guaranteed);
    CHECK_FALSE(single.witness.has_value());
}

TEST_CASE("gap test: satisfiable instance passes 200 seeded trials") {
    OrthGraph g = build_gamma_square(4, 1, f3());
    SpectralReport rep = compute_spectrum(g);
    GapTrialReport r = gap_test(g, rep, 200, 20240817);
    CHECK(r.satisfiable);
    CHECK(r.trials_run == 200);
    CHECK(r.witnesses_found == 200);
    CHECK(r.all_guaranteed_have_witness);

    // determinism: same seed, same outcome
    GapTrialReport r2 = gap_test(g, rep, 200, 20240817);
    CHECK(r2.witnesses_found == r.witnesses_found);
    CHECK(r2.n_star == r.n_star);
}

TEST_CASE("gap test: gamma-square(5,2,3) threshold premise is unsatisfiable") {
    // the graph is disconnected, so λ2 = d and n_* = |V| exactly
    OrthGraph g = build_gamma_square(5, 2, f3());
    SpectralReport rep = compute_spectrum(g);
    CHECK(rep.second_largest_abs == doctest::Approx(3.0).epsilon(1e-8));
    GapTrialReport r = gap_test(g, rep, 200, 1);
    CHECK_FALSE(r.satisfiable);
    CHECK(r.trials_run == 0);
}
