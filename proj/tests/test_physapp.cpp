#include <array>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "su11/physapp.hpp"

using su11::BargmannIndex;
using su11::CavitySpec;
namespace constants = su11::constants;

namespace {

constexpr double kPi = 3.14159265358979323846;

// Partition function by direct summation of the level series, the
// closed-form-free oracle.  Terms decay as e^{-b n}; 1200 terms cover the
// whole b >= 0.05 test range to below 1e-16 relative.
double partition_sum(double b, double k) {
    double sum = 0.0;
    for (int n = 1199; n >= 0; --n) sum += std::exp(-b * (n + k));
    return sum;
}

double rel_err(double got, double want) {
    return std::abs(got - want) / std::max(1.0, std::abs(want));
}

}  // namespace

TEST_SUITE("physapp") {

TEST_CASE("thermo: closed forms, identities, limits") {
    const double b_grid[] = {0.05, 0.1, 0.3, 1.0, 2.0, 5.0, 10.0, 20.0};
    const double k_grid[] = {0.1, 0.5, 2.0};

    for (double b : b_grid) {
        for (double k : k_grid) {
            CAPTURE(b);
            CAPTURE(k);
            const auto r = su11::thermo(b, k);

            // Invariants.
            CHECK(r.Z > 0.0);
            CHECK(r.dE2 >= 0.0);
            CHECK(r.S_over_kB >= 0.0);
            CHECK(r.beta_hw == b);

            // Partition function against the direct level sum.
            CHECK(rel_err(r.Z, partition_sum(b, k)) < 1e-13);

            // Independent closed forms for the remaining quantities.
            CHECK(rel_err(r.F, k + std::log1p(-std::exp(-b)) / b) < 1e-13);
            CHECK(rel_err(r.U, k + 1.0 / (std::exp(b) - 1.0)) < 1e-13);
            CHECK(rel_err(r.dE2,
                          std::exp(b) / std::pow(std::exp(b) - 1.0, 2)) < 1e-13);
            CHECK(rel_err(r.S_over_kB, -std::log1p(-std::exp(-b)) +
                                           b / (std::exp(b) - 1.0)) < 1e-12);

            // Thermodynamic identities, assembled from the returned fields
            // rather than from the formulas that produced them.
            CHECK(std::abs(r.S_over_kB - std::log(r.Z) - b * r.U) < 1e-12);
            CHECK(std::abs(r.F + std::log(r.Z) / b) < 1e-12);
        }
    }

    // dE2 = d^2/db^2 ln Z by central finite difference at b = 1.
    for (double k : k_grid) {
        const auto fd = oracle::second_diff_c(
            [k](double b) {
                return oracle::cplx(std::log(su11::thermo(b, k).Z), 0.0);
            },
            1.0);
        CHECK(std::abs(su11::thermo(1.0, k).dE2 - fd.real()) < 1e-6);
    }

    // Spot values at b = 1, k = 1/2 (30-digit arithmetic oracle).
    const auto spot = su11::thermo(1.0, 0.5);
    CHECK(std::abs(spot.Z - 0.959517375667471860) < 1e-15);
    CHECK(std::abs(spot.U - 1.081976706869326424) < 1e-15);
    CHECK(std::abs(spot.S_over_kB - 1.040651852256408315) < 1e-15);
    CHECK(std::abs(spot.dE2 - 0.920673594207792319) < 1e-15);

    // Deep-cold limit: the Bose term is below double resolution at b = 50,
    // so U collapses to the ground-state value k.
    CHECK(su11::thermo(50.0, 0.3).U == 0.3);

    CHECK_THROWS_AS(su11::thermo(0.0, 0.5), std::domain_error);
    CHECK_THROWS_AS(su11::thermo(-1.0, 0.5), std::domain_error);
    CHECK_THROWS_AS(su11::thermo(1.0, -0.5), std::domain_error);
}

TEST_CASE("thermo: k enters only where it must") {
    const double b_grid[] = {0.05, 1.0, 20.0};
    for (double b : b_grid) {
        CAPTURE(b);
        const auto r1 = su11::thermo(b, 0.1);
        const auto r2 = su11::thermo(b, 0.5);
        const auto r3 = su11::thermo(b, 2.0);

        // Fluctuations and entropy are k-free.
        CHECK(rel_err(r2.dE2, r1.dE2) < 1e-13);
        CHECK(rel_err(r3.dE2, r1.dE2) < 1e-13);
        CHECK(std::abs(r2.S_over_kB - r1.S_over_kB) < 1e-12);
        CHECK(std::abs(r3.S_over_kB - r1.S_over_kB) < 1e-12);

        // F and U carry k additively: subtracting k must collapse the three.
        CHECK(std::abs((r2.U - 0.5) - (r1.U - 0.1)) < 1e-12);
        CHECK(std::abs((r3.F - 2.0) - (r1.F - 0.1)) < 1e-12);

        // Occupation probabilities: the k-dependent ratio lands on the
        // k-free closed form for every k.
        const double pref = -std::expm1(-b);
        for (int n : {0, 1, 2, 5, 12}) {
            CAPTURE(n);
            const double closed = std::exp(-b * n) * pref;
            for (double k : {0.1, 0.5, 2.0}) {
                const double p = su11::occupation_probability(b, k, n);
                CHECK(std::abs(p - closed) <=
                      1e-12 * std::max(1.0, std::abs(closed)));
            }
        }
    }

    // Distribution sums to one (tail e^{-41} is invisible at this scale).
    double mass = 0.0;
    for (int n = 0; n <= 40; ++n)
        mass += su11::occupation_probability(1.0, 0.7, n);
    CHECK(std::abs(mass - 1.0) < 1e-12);

    CHECK_THROWS_AS(su11::occupation_probability(1.0, 0.5, -1),
                    std::domain_error);
    CHECK_THROWS_AS(su11::occupation_probability(0.0, 0.5, 2),
                    std::domain_error);
}

TEST_CASE("cavity modes and ground-state energy") {
    const double L = 0.37;

    // Fundamental mode in vacuum: omega = 2 pi c / L.
    const CavitySpec fundamental{L, 1.0, 1.0, {1, 0, 0}};
    const double omega0 = su11::cavity_mode_frequency(fundamental);
    CHECK(rel_err(omega0, 2.0 * kPi * constants::c / L) < 1e-15);

    // |m| enters through the Euclidean norm.
    const CavitySpec diag{L, 1.0, 1.0, {1, 1, 0}};
    CHECK(rel_err(su11::cavity_mode_frequency(diag), omega0 * std::sqrt(2.0)) <
          1e-15);
    const CavitySpec high{L, 1.0, 1.0, {2, -3, 6}};
    CHECK(rel_err(su11::cavity_mode_frequency(high), omega0 * 7.0) < 1e-15);

    // Doubling the refractive index (epsilon = 4) halves the frequency.
    const CavitySpec dielectric{L, 4.0, 1.0, {1, 0, 0}};
    CHECK(rel_err(su11::cavity_mode_frequency(dielectric), 0.5 * omega0) <
          1e-15);
    // n = sqrt(eps*mu) is symmetric in the two constants.
    const CavitySpec magnetic{L, 1.0, 4.0, {1, 0, 0}};
    CHECK(su11::cavity_mode_frequency(magnetic) ==
          su11::cavity_mode_frequency(dielectric));

    // Zero mode.
    const CavitySpec zero{L, 1.0, 1.0, {0, 0, 0}};
    CHECK(su11::cavity_mode_frequency(zero) == 0.0);

    // Two-mode ground energy at k = 1/2: every factor spelled out —
    // hbar, the common frequency 2 pi c / L, two modes, k, two
    // polarizations per mode.
    const std::vector<CavitySpec> pair = {{L, 1.0, 1.0, {1, 0, 0}},
                                          {L, 1.0, 1.0, {0, 1, 0}}};
    const double expected =
        constants::hbar * (2.0 * kPi * constants::c / L) * 2.0 * 0.5 * 2.0;
    CHECK(rel_err(su11::cavity_ground_energy(0.5, pair), expected) < 1e-15);

    // Ground energy is linear in k and additive over the list.
    CHECK(rel_err(su11::cavity_ground_energy(1.7, pair),
                  3.4 * su11::cavity_ground_energy(0.5, pair)) < 1e-15);

    CHECK_THROWS_AS(
        su11::cavity_mode_frequency(CavitySpec{-1.0, 1.0, 1.0, {1, 0, 0}}),
        std::domain_error);
    CHECK_THROWS_AS(
        su11::cavity_mode_frequency(CavitySpec{L, 0.0, 1.0, {1, 0, 0}}),
        std::domain_error);
    CHECK_THROWS_AS(
        su11::cavity_mode_frequency(CavitySpec{L, 1.0, -2.0, {1, 0, 0}}),
        std::domain_error);
}

TEST_CASE("vacuum energy density and the inverse solve") {
    const double omega_hat = 3.1e15;

    // Quartic in the cutoff, linear in k, vanishing at k = 0.
    const double u1 = su11::vacuum_energy_density(omega_hat, 0.25);
    CHECK(rel_err(su11::vacuum_energy_density(2.0 * omega_hat, 0.25),
                  16.0 * u1) < 1e-14);
    CHECK(rel_err(su11::vacuum_energy_density(omega_hat, 0.5), 2.0 * u1) <
          1e-15);
    CHECK(su11::vacuum_energy_density(omega_hat, 0.0) == 0.0);

    // Frequency form and length form agree through ell = 2 pi c / omega_hat.
    const double ell = 2.0 * kPi * constants::c / omega_hat;
    CHECK(rel_err(su11::vacuum_energy_density_length(ell, 0.25), u1) < 1e-13);

    // Explicit coefficient check against a 30-digit arithmetic oracle:
    // u(omega_hat = 1, k = 1) = hbar / (4 pi^2 c^3).
    CHECK(rel_err(su11::vacuum_energy_density(1.0, 1.0),
                  9.914123287915057e-62) < 1e-14);

    // Dark-energy-scale round trip: 4 keV/cm^3 at ell = 0.1 mm.
    const double target = 4.0e3 * constants::e0 / 1e-6;  // J/m^3
    const double k_solved = su11::solve_k_for_density(target, 1e-4);
    CHECK(rel_err(k_solved, 0.0513468474856210076) < 1e-13);
    CHECK(rel_err(su11::vacuum_energy_density_length(1e-4, k_solved), target) <
          1e-14);

    CHECK_THROWS_AS(su11::vacuum_energy_density(0.0, 0.5), std::domain_error);
    CHECK_THROWS_AS(su11::vacuum_energy_density(1.0, -0.1), std::domain_error);
    CHECK_THROWS_AS(su11::vacuum_energy_density_length(0.0, 0.5),
                    std::domain_error);
    CHECK_THROWS_AS(su11::solve_k_for_density(0.0, 1e-4), std::domain_error);
    CHECK_THROWS_AS(su11::solve_k_for_density(1e-10, 0.0), std::domain_error);
}

TEST_CASE("stark shift of the index") {
    // Zero field: no shift, no flag.
    const auto off = su11::stark_effective_k(0.5, 1, 0.0, 2.0 * kPi * 1e8,
                                             1.1e-25);
    CHECK(off.delta == 0.0);
    CHECK(off.k_eff == 0.5);
    CHECK(!off.flagged);

    // Quadratic in the field (sign-blind) and in the charge.
    const double omega = 2.0 * kPi * 1e8;
    const double M = 1.1e-25;
    const double d1 = su11::stark_effective_k(0.5, 1, 1e3, omega, M).delta;
    CHECK(rel_err(su11::stark_effective_k(0.5, 1, 2e3, omega, M).delta,
                  4.0 * d1) < 1e-14);
    CHECK(su11::stark_effective_k(0.5, 1, -1e3, omega, M).delta == d1);
    CHECK(rel_err(su11::stark_effective_k(0.5, 3, 1e3, omega, M).delta,
                  9.0 * d1) < 1e-14);

    // Trapped-ion scenario: rest energy 1e-8 J, E0 = 1 kV/m, nu = 100 MHz,
    // single charge.  The shift exceeds any k <= 1/2 by an order of
    // magnitude, so the effective index goes negative and gets flagged.
    const double M_ion = 1e-8 / (constants::c * constants::c);
    const auto ion = su11::stark_effective_k(0.5, 1, 1e3, omega, M_ion);
    CHECK(std::abs(ion.delta - 4.40977500501135) < 1e-12);
    CHECK(ion.k_eff < 0.0);
    CHECK(ion.flagged);

    // A thousand-fold weaker field pulls delta below k: no flag.
    const auto weak = su11::stark_effective_k(0.5, 1, 1.0, omega, M_ion);
    CHECK(rel_err(weak.delta, 4.40977500501135e-6) < 1e-12);
    CHECK(!weak.flagged);

    CHECK_THROWS_AS(su11::stark_effective_k(0.5, 1, 1e3, 0.0, M),
                    std::domain_error);
    CHECK_THROWS_AS(su11::stark_effective_k(0.5, 1, 1e3, omega, -1.0),
                    std::domain_error);
}

TEST_CASE("landau levels") {
    const double q = -constants::e0;  // electron
    const double B = 1.0;             // tesla
    const double me = 9.1093837015e-31;

    const auto levels = su11::landau_levels(q, B, me, 0.5, 5);
    REQUIRE(levels.size() == 6);

    // omega = |q B| / m pinned against a 30-digit arithmetic oracle.
    const double hw = 1.85480201453596e-23;  // hbar * omega, J
    for (int n = 0; n <= 5; ++n) {
        CAPTURE(n);
        CHECK(rel_err(levels[n], hw * (n + 0.5)) < 1e-13);
    }
    // Uniform spacing hbar*omega.
    for (int n = 0; n < 5; ++n)
        CHECK(rel_err(levels[n + 1] - levels[n], hw) < 1e-12);

    // Only |q B| matters.
    CHECK(su11::landau_levels(-q, B, me, 0.5, 5) == levels);
    CHECK(su11::landau_levels(q, -B, me, 0.5, 5) == levels);

    // Ground level scales to k: at k = 0.01 it is 1% of hbar*omega.
    const auto tiny = su11::landau_levels(q, B, me, 0.01, 0);
    CHECK(rel_err(tiny[0], 0.01 * hw) < 1e-12);

    CHECK_THROWS_AS(su11::landau_levels(0.0, B, me, 0.5, 3),
                    std::domain_error);
    CHECK_THROWS_AS(su11::landau_levels(q, 0.0, me, 0.5, 3),
                    std::domain_error);
    CHECK_THROWS_AS(su11::landau_levels(q, B, 0.0, 0.5, 3),
                    std::domain_error);
    CHECK_THROWS_AS(su11::landau_levels(q, B, me, 0.5, -1),
                    std::domain_error);
}

TEST_CASE("ground-index extraction from transition frequencies") {
    // Forward model: ground levels are hbar*omega_j*k, so a transition from
    // a fixed external level E into ground j has frequency E/hbar - k
    // omega_j.  Synthesize the two observed frequencies, then invert.
    const double hbar = constants::hbar;
    oracle::Rng rng(424242);

    for (int draw = 0; draw < 50; ++draw) {
        CAPTURE(draw);
        const double k_true = rng.uniform(0.05, 3.0);
        const double omega1 = rng.uniform(5e13, 1.2e14);
        // Keep the frequency split away from degeneracy.
        const double omega2 = omega1 + rng.uniform(0.2e14, 0.8e14);
        const double E_a = rng.uniform(1e-19, 5e-19);
        const double E_b = rng.uniform(1e-19, 5e-19);
        const double omega_a1 = E_a / hbar - k_true * omega1;
        const double omega_b2 = E_b / hbar - k_true * omega2;

        const double k_rec = su11::mulliken_extract_k(E_a, E_b, omega1,
                                                      omega2, omega_a1,
                                                      omega_b2);
        CHECK(std::abs(k_rec - k_true) < 1e-12);
    }

    // The two named examples.
    for (double k_true : {0.5, 0.25}) {
        const double omega1 = 6e13, omega2 = 9e13;
        const double E_a = 3e-19, E_b = 2.5e-19;
        const double k_rec = su11::mulliken_extract_k(
            E_a, E_b, omega1, omega2, E_a / hbar - k_true * omega1,
            E_b / hbar - k_true * omega2);
        CHECK(std::abs(k_rec - k_true) < 1e-13);
    }

    // Degenerate frequencies must throw, exactly and within the relative
    // guard band.
    CHECK_THROWS_AS(
        su11::mulliken_extract_k(3e-19, 2e-19, 6e13, 6e13, 1.0, 2.0),
        std::domain_error);
    CHECK_THROWS_AS(su11::mulliken_extract_k(3e-19, 2e-19, 6e13,
                                             6e13 * (1.0 + 1e-13), 1.0, 2.0),
                    std::domain_error);
}

}  // TEST_SUITE
