// Rayleigh-Schroedinger series for the branch-splitting linear term.
// Oracles: the closed-form first-order moment, the exact sign alternation
// between branches, s-independence of the eta sums, and agreement with
// direct diagonalisation at weak coupling.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>

#include "branchon/compare.hpp"
#include "branchon/radial.hpp"
#include "branchon/rspt.hpp"

using namespace branchon;

namespace {

RadialProblem series_problem(Branch branch, double s = 6.0, double lambda = 1.0,
                             bool linear = true) {
    return RadialProblem(TypeIIModeld{s, lambda}, branch, BasisSpec{}, linear);
}

}  // namespace

TEST_CASE("order zero reproduces the unperturbed ladder exactly") {
    for (int n : {0, 1, 3}) {
        const PerturbationSeries series = perturbation_series(series_problem(Branch::Plus), n, 0);
        CHECK(series.order() == 0);
        CHECK(series.level == n);
        CHECK(series.coefficients[0] == 4.0 * n + 4.0);
        CHECK(series.eta(0) == 2.0 * n + 2.0);  // (s/12) * omega * (4n+4) at s=6
    }
}

TEST_CASE("first-order coefficient matches the Gaussian moment") {
    const PerturbationSeries series = perturbation_series(series_problem(Branch::Plus), 0, 1);
    const double omega = series_problem(Branch::Plus).matched_omega();
    // E_1 = <0| W |0> with W = -24 r on the attractive branch
    const double expected = -24.0 * 0.75 * std::sqrt(M_PI) / std::sqrt(omega);
    CHECK(series.coefficients[1] == doctest::Approx(expected).epsilon(1e-8));

    // eta drop through first order: (3/2) sqrt(pi/6) at lambda = 1
    const double drop = series.eta(0) - series.eta(1);
    CHECK(drop == doctest::Approx(1.5 * std::sqrt(M_PI / 6.0)).epsilon(1e-10));
    CHECK(drop == doctest::Approx(1.0854018818374014).epsilon(1e-12));
}

TEST_CASE("second order lowers the ground level on both branches") {
    for (Branch branch : {Branch::Plus, Branch::Minus}) {
        const PerturbationSeries series = perturbation_series(series_problem(branch), 0, 2);
        CHECK(series.coefficients[2] < 0.0);
    }
}

TEST_CASE("branch flip alternates coefficient signs exactly") {
    for (int n : {0, 2}) {
        const PerturbationSeries plus = perturbation_series(series_problem(Branch::Plus), n, 6);
        const PerturbationSeries minus = perturbation_series(series_problem(Branch::Minus), n, 6);
        REQUIRE(plus.order() == 6);
        REQUIRE(minus.order() == 6);
        CHECK(plus.basis_size_used == minus.basis_size_used);
        for (int m = 0; m <= 6; ++m) {
            const double sign = (m % 2 == 0) ? 1.0 : -1.0;
            // the two runs negate the same perturbation matrix, and IEEE
            // arithmetic commutes with negation, so this holds bitwise
            CHECK(minus.coefficients[m] == sign * plus.coefficients[m]);
        }
    }
}

TEST_CASE("eta partial sums do not depend on the family scale") {
    const PerturbationSeries reference = perturbation_series(series_problem(Branch::Plus), 0, 5);
    for (double s : {2.0, 9.0}) {
        const PerturbationSeries other =
            perturbation_series(series_problem(Branch::Plus, s), 0, 5);
        for (int m = 0; m <= 5; ++m) {
            CHECK(std::abs(other.eta(m) - reference.eta(m)) <= 1e-10);
        }
    }
}

TEST_CASE("partial sums are the running geometric accumulation") {
    const PerturbationSeries series = perturbation_series(series_problem(Branch::Minus), 1, 4);
    double sum = 0.0, power = 1.0;
    for (int m = 0; m <= 4; ++m) {
        sum += power * series.coefficients[m];
        CHECK(series.partial_sums[m] == sum);
        CHECK(series.eta_partial[m] == series.eta_scale * sum);
        power *= series.coupling;
    }
    CHECK(series.coupling == doctest::Approx(std::pow(6.0, -1.5)).epsilon(1e-15));
    CHECK_THROWS_AS(series.eta(-1), DomainError);
    CHECK_THROWS_AS(series.eta(5), DomainError);
}

TEST_CASE("repeated runs are bitwise reproducible") {
    const PerturbationSeries a = perturbation_series(series_problem(Branch::Plus), 0, 4);
    const PerturbationSeries b = perturbation_series(series_problem(Branch::Plus), 0, 4);
    CHECK((a.coefficients.array() == b.coefficients.array()).all());
    CHECK((a.eta_partial.array() == b.eta_partial.array()).all());
    CHECK(a.basis_size_used == b.basis_size_used);
}

TEST_CASE("radius estimate: clean patterns and refusals") {
    Eigen::VectorXd geometric(5);
    geometric << 1.0, 0.5, 0.25, 0.125, 0.0625;  // ratio 1/2 throughout
    const auto radius = estimate_radius(geometric);
    REQUIRE(radius.has_value());
    CHECK(*radius == doctest::Approx(2.0).epsilon(1e-14));

    CHECK_FALSE(estimate_radius(Eigen::VectorXd::Zero(8)).has_value());
    Eigen::VectorXd short_run(3);
    short_run << 1.0, 2.0, 3.0;
    CHECK_FALSE(estimate_radius(short_run).has_value());
    Eigen::VectorXd gappy(5);
    gappy << 1.0, 0.0, 2.0, 0.0, 3.0;  // only three nonzero entries
    CHECK_FALSE(estimate_radius(gappy).has_value());
}

TEST_CASE("a long branch series reports a positive radius estimate") {
    const PerturbationSeries series = perturbation_series(series_problem(Branch::Plus), 0, 6);
    REQUIRE(series.radius_estimate.has_value());
    CHECK(*series.radius_estimate > 0.0);
}

TEST_CASE("switching the linear term off freezes the series") {
    const PerturbationSeries series =
        perturbation_series(series_problem(Branch::Plus, 6.0, 1.0, false), 0, 4);
    CHECK(series.coefficients[0] == 4.0);
    for (int m = 1; m <= 4; ++m) CHECK(series.coefficients[m] == 0.0);
    for (int m = 0; m <= 4; ++m) CHECK(series.eta(m) == 2.0);
    CHECK_FALSE(series.radius_estimate.has_value());
}

TEST_CASE("invalid requests are rejected") {
    CHECK_THROWS_AS(perturbation_series(series_problem(Branch::Plus), -1, 2), DomainError);
    CHECK_THROWS_AS(perturbation_series(series_problem(Branch::Plus), 0, 9), DomainError);
    const RadialProblem detuned =
        RadialProblem(TypeIIModeld{6.0, 1.0}, Branch::Plus, BasisSpec{60, 1.2});
    CHECK_THROWS_AS(perturbation_series(detuned, 0, 2), DomainError);
}

TEST_CASE("the enlargement ceiling raises once coefficients refuse to settle") {
    RsptOptions cramped;
    cramped.max_basis = 48;
    CHECK_THROWS_AS(perturbation_series(series_problem(Branch::Plus), 2, 8, cramped),
                    BasisTooSmall);
}

TEST_CASE("series equals diagonalisation when the coupling is absent") {
    const EtaReport report =
        compare_with_diagonalization(series_problem(Branch::Plus, 6.0, 1.0, false), 1, 3);
    CHECK(report.eta_series == 4.0);
    // the gap is the grid route's discretisation error (~2e-7 relative)
    CHECK(report.abs_diff <= 1e-6 * report.eta_series);
    CHECK(report.abs_diff == std::abs(report.eta_series - report.eta_diagonalisation));
}

TEST_CASE("series tracks diagonalisation at weak coupling") {
    // lambda = 16 puts the dimensionless coupling at 1.633 / 8 ~ 0.2
    const EtaReport report =
        compare_with_diagonalization(series_problem(Branch::Plus, 6.0, 16.0), 0, 6);
    CHECK(report.order_used == 6);
    CHECK(report.abs_diff <= 5e-3);
    CHECK(report.eta_series < 8.0);  // below the unperturbed 2 sqrt(lambda)
    CHECK_THROWS_AS(compare_with_diagonalization(series_problem(Branch::Plus), 20, 2),
                    DomainError);
}

TEST_CASE("mirror decomposition separates odd and even content") {
    // truncating at first order leaves no even shift at all
    const MirrorDecomposition first =
        mirror_decomposition(series_problem(Branch::Plus, 6.0, 16.0), 0, 1);
    CHECK(first.base == doctest::Approx(8.0).epsilon(1e-14));  // 2 sqrt(lambda) (n+1)
    CHECK(std::abs(first.even_shift_series) <= 1e-13);
    CHECK(first.odd_part_series > 0.0);

    // at higher order the even shift matches the branch-averaged spectrum
    const MirrorDecomposition deep =
        mirror_decomposition(series_problem(Branch::Plus, 6.0, 16.0), 0, 6);
    CHECK(deep.even_shift_series < 0.0);  // dominated by the negative second order
    CHECK(std::abs(deep.even_shift_series - deep.even_shift_diag) <= 1e-3);
    CHECK(deep.odd_part_series > 0.0);
}
