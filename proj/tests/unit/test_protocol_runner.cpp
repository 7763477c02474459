#include <doctest.h>

#include <random>

#include "entcast/broadcasting.hpp"
#include "entcast/criteria.hpp"
#include "entcast/protocol_runner.hpp"
#include "test_helpers.hpp"

using namespace entcast;
using entcast::testing::random_state_vector;

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

DensityOperator two_qubit(const ComplexMatrix& m) {
    return DensityOperator({"x", "y"}, {2, 2}, m);
}

DensityOperator werner_state() {
    const ComplexVector psi = bell_vector(BellKind::PsiMinus);
    return two_qubit(ComplexMatrix::Identity(4, 4) / 8.0 +
                     0.5 * ComplexMatrix(psi * psi.adjoint()));
}

}  // namespace

TEST_CASE("haar qubits are normalized, reproducible, and isotropic") {
    std::mt19937_64 rng(80);
    std::mt19937_64 rng_copy(80);
    Eigen::Vector3d bloch_sum = Eigen::Vector3d::Zero();
    const int n = 100000;
    for (int i = 0; i < n; ++i) {
        const ComplexVector v = haar_random_qubit(rng);
        CHECK(std::abs(v.norm() - 1.0) < 1e-12);
        if (i < 16) {
            const ComplexVector w = haar_random_qubit(rng_copy);
            CHECK((v - w).norm() == 0.0);
        } else {
            (void)haar_random_qubit(rng_copy);
        }
        const Complex cross = std::conj(v(0)) * v(1);
        bloch_sum += Eigen::Vector3d(2.0 * cross.real(), 2.0 * cross.imag(),
                                     std::norm(v(0)) - std::norm(v(1)));
    }
    CHECK((bloch_sum / n).norm() < 0.02);
}

TEST_CASE("singlet channel teleports perfectly") {
    const DensityOperator singlet = to_density(bell_state(BellKind::PsiMinus));
    std::mt19937_64 rng(81);
    for (int i = 0; i < 8; ++i) {
        CHECK(simulate_standard_teleportation(singlet, random_state_vector(2, rng)) ==
              doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("every maximally entangled channel teleports perfectly") {
    std::mt19937_64 rng(82);
    for (BellKind kind : all_bell_kinds()) {
        const DensityOperator channel = to_density(bell_state(kind));
        CHECK(simulate_standard_teleportation(channel, random_state_vector(2, rng)) ==
              doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("fully depolarized channel lands at fidelity 1/2") {
    const DensityOperator mixed = two_qubit(ComplexMatrix::Identity(4, 4) / 4.0);
    std::mt19937_64 rng(83);
    for (int i = 0; i < 4; ++i) {
        CHECK(simulate_standard_teleportation(mixed, random_state_vector(2, rng)) ==
              doctest::Approx(0.5).epsilon(1e-12));
    }
}

TEST_CASE("corrections are unitary and tied to the dominant Bell component") {
    const auto set = standard_corrections_for(werner_state());
    for (const auto& u : set) {
        CHECK(max_abs_diff(ComplexMatrix(u * u.adjoint()), ComplexMatrix::Identity(2, 2)) <
              1e-12);
    }
    // The singlet outcome needs no correction for a singlet-dominated channel.
    const int singlet_index = 3;
    CHECK(max_abs_diff_up_to_phase(
              ComplexVector(set[singlet_index].col(0)),
              ComplexVector(ComplexMatrix::Identity(2, 2).col(0))) < 1e-12);
}

TEST_CASE("werner channel beats the classical bound through the mean fidelity") {
    const MonteCarloResult mc = monte_carlo_teleportation_fidelity(werner_state(), 20000, 7);
    CHECK(mc.mean > 2.0 / 3.0);
    CHECK(std::abs(mc.mean - 0.75) < 3.0 * mc.std_error + 1e-9);
}

TEST_CASE("monte carlo matches the usefulness formula on broadcast channels") {
    // At the symmetric maximally entangled point the per-input fidelity is
    // constant, so the sample deviation collapses to rounding noise.
    const DensityOperator kept =
        closed_form_rho_a1b1(kInvSqrt2, kInvSqrt2, Reflectivity(1.0 / 3.0));
    const MonteCarloResult mc = monte_carlo_teleportation_fidelity(kept, 30000, 11);
    const double f_max = teleportation_N(kept).f_max;
    CHECK(f_max == doctest::Approx(13.0 / 18.0).epsilon(1e-12));
    CHECK(std::abs(mc.mean - f_max) <= 3.0 * mc.std_error + 1e-9);

    const DensityOperator sent = closed_form_rho_cd(0.8, 0.6, Reflectivity(0.25));
    const MonteCarloResult mc2 = monte_carlo_teleportation_fidelity(sent, 30000, 13);
    CHECK(mc2.std_error > 0.0);  // asymmetric input leaves residual spread
    CHECK(std::abs(mc2.mean - teleportation_N(sent).f_max) <=
          3.0 * mc2.std_error + 1e-9);
}

TEST_CASE("monte carlo is deterministic per seed and guards its inputs") {
    const DensityOperator singlet = to_density(bell_state(BellKind::PsiMinus));
    const MonteCarloResult a = monte_carlo_teleportation_fidelity(singlet, 500, 99);
    const MonteCarloResult b = monte_carlo_teleportation_fidelity(singlet, 500, 99);
    CHECK(a.mean == b.mean);
    CHECK(a.std_error == b.std_error);
    CHECK(a.mean == doctest::Approx(1.0).epsilon(1e-12));
    CHECK_THROWS_AS((void)monte_carlo_teleportation_fidelity(singlet, 50, 1), Error);
}

TEST_CASE("teleportation rejects malformed channels and inputs") {
    std::mt19937_64 rng(84);
    const DensityOperator three = DensityOperator(
        {"x", "y", "z"}, {2, 2, 2}, entcast::testing::random_density_matrix(8, rng));
    CHECK_THROWS_AS(
        (void)simulate_standard_teleportation(three, random_state_vector(2, rng)), Error);

    const DensityOperator singlet = to_density(bell_state(BellKind::PsiMinus));
    ComplexVector bad(2);
    bad << 1.0, 1.0;
    CHECK_THROWS_AS((void)simulate_standard_teleportation(singlet, bad), Error);
}
