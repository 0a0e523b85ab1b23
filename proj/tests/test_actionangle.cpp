#include <array>
#include <cmath>
#include <complex>
#include <functional>
#include <stdexcept>

#include "doctest.h"
#include "oracles.hpp"
#include "su11/actionangle.hpp"
#include "su11/repcore.hpp"

using su11::AngleAction;
using su11::GeneratingKind;
using su11::PerturbationKind;
using su11::PhasePoint;
using su11::PotentialKind;
using su11::PotentialSpec;

namespace {

double angle_diff(double a, double b) { return su11::wrap_angle(a - b); }

// Determinant of the finite-difference Jacobian of a map R^2 -> R^2; the
// angle component is differenced through wrap_angle so branch jumps at
// +-pi cannot contaminate the quotient.
double fd_jacobian_det(
    const std::function<std::array<double, 2>(double, double)>& map, double x,
    double y, bool wrap_first_output) {
    const double hx = 1e-6 * std::max(1.0, std::abs(x));
    const double hy = 1e-6 * std::max(1.0, std::abs(y));
    const auto diff = [&](const std::array<double, 2>& plus,
                          const std::array<double, 2>& minus, double h) {
        const double d0 = wrap_first_output
                              ? su11::wrap_angle(plus[0] - minus[0])
                              : plus[0] - minus[0];
        return std::array<double, 2>{d0 / (2.0 * h),
                                     (plus[1] - minus[1]) / (2.0 * h)};
    };
    const auto cx = diff(map(x + hx, y), map(x - hx, y), hx);
    const auto cy = diff(map(x, y + hy), map(x, y - hy), hy);
    return cx[0] * cy[1] - cy[0] * cx[1];
}

std::array<double, 2> orbit_rhs_h1(double gamma,
                                   const std::array<double, 2>& y) {
    return {1.0 + gamma * std::cos(y[0]), gamma * y[1] * std::sin(y[0])};
}

std::array<double, 2> orbit_rhs_h2(double gamma,
                                   const std::array<double, 2>& y) {
    return {1.0 - gamma * std::sin(y[0]), gamma * y[1] * std::cos(y[0])};
}

}  // namespace

TEST_SUITE("actionangle") {

TEST_CASE("chart: examples, round trips, singular origin") {
    const auto x = su11::to_phase_point({0.0, 0.5});
    CHECK(std::abs(x.q - 1.0) < 1e-15);
    CHECK(std::abs(x.p) < 1e-15);

    const auto s = su11::to_angle_action({0.0, -std::sqrt(2.0)});
    CHECK(std::abs(s.phi - M_PI / 2.0) < 1e-15);
    CHECK(std::abs(s.I - 1.0) < 1e-15);

    CHECK_THROWS_AS(su11::to_angle_action({0.0, 0.0}), std::domain_error);
    CHECK_THROWS_AS(su11::to_phase_point({0.3, 0.0}), std::domain_error);
    CHECK_THROWS_AS(su11::to_phase_point({0.3, -1.0}), std::domain_error);

    oracle::Rng rng(20240818);
    for (int i = 0; i < 100; ++i) {
        const AngleAction a{rng.uniform(-M_PI, M_PI), rng.uniform(0.1, 5.0)};
        const auto back = su11::to_angle_action(su11::to_phase_point(a));
        CHECK(std::abs(angle_diff(back.phi, a.phi)) < 1e-12);
        CHECK(std::abs(back.I - a.I) < 1e-12 * a.I);

        const PhasePoint pt{rng.uniform(-3.0, 3.0), rng.uniform(-3.0, 3.0)};
        if (pt.q == 0.0 && pt.p == 0.0) continue;
        const auto fwd = su11::to_phase_point(su11::to_angle_action(pt));
        CHECK(std::abs(fwd.q - pt.q) < 1e-12);
        CHECK(std::abs(fwd.p - pt.p) < 1e-12);
    }
}

TEST_CASE("chart: unit Jacobian at 100 random points off the origin") {
    oracle::Rng rng(71);
    const auto map = [](double phi, double I) -> std::array<double, 2> {
        const auto pt = su11::to_phase_point({phi, I});
        return {pt.q, pt.p};
    };
    for (int i = 0; i < 100; ++i) {
        const double phi = rng.uniform(-3.0, 3.0);
        const double I = rng.uniform(0.05, 4.0);
        CHECK(std::abs(fd_jacobian_det(map, phi, I, false) - 1.0) < 1e-6);
    }
}

TEST_CASE("h_triplet: cone relation and free-particle energy") {
    const auto h = su11::h_triplet({0.0, 2.0});
    CHECK(h.h0 == 2.0);
    CHECK(h.h1 == 2.0);
    CHECK(h.h2 == 0.0);

    oracle::Rng rng(95);
    for (int i = 0; i < 25; ++i) {
        const AngleAction s{rng.uniform(-M_PI, M_PI), rng.uniform(0.1, 5.0)};
        const auto t = su11::h_triplet(s);
        CHECK(t.h0 > 0.0);
        CHECK(std::abs(t.h0 * t.h0 - t.h1 * t.h1 - t.h2 * t.h2) < 1e-12);
    }

    // h2^2 / h0 equals p^2 / 2 on the chart (free particle, unit scales).
    const AngleAction s{M_PI / 2.0, 1.0};
    const auto t = su11::h_triplet(s);
    const auto pt = su11::to_phase_point(s);
    CHECK(std::abs(t.h2 * t.h2 / t.h0 - 0.5 * pt.p * pt.p) < 1e-14);
    CHECK(std::abs(t.h2 * t.h2 / t.h0 - 1.0) < 1e-14);
}

TEST_CASE("plane_triplet: cone relation and tensor transformation laws") {
    oracle::Rng rng(1234);
    for (int i = 0; i < 20; ++i) {
        const PhasePoint x{rng.uniform(-2.5, 2.5), rng.uniform(-2.5, 2.5)};
        const auto g = su11::plane_triplet(x);
        CHECK(std::abs(g.h0 * g.h0 - g.h1 * g.h1 - g.h2 * g.h2) < 1e-12);

        // Shear boost mixes (g0, g2) hyperbolically.
        const double sp = 0.8;
        const auto gb = su11::plane_triplet(
            su11::sp2_action_on_plane(su11::b1_matrix(sp), x));
        CHECK(std::abs(gb.h0 -
                       (std::cosh(sp) * g.h0 - std::sinh(sp) * g.h2)) <
              1e-12);
        CHECK(std::abs(gb.h2 -
                       (std::cosh(sp) * g.h2 - std::sinh(sp) * g.h0)) <
              1e-12);

        // Diagonal boost mixes (g0, g1) hyperbolically.
        const double tau = -0.6;
        const auto ga = su11::plane_triplet(
            su11::sp2_action_on_plane(su11::a1_matrix(tau), x));
        CHECK(std::abs(ga.h0 -
                       (std::cosh(tau) * g.h0 + std::sinh(tau) * g.h1)) <
              1e-12);
        CHECK(std::abs(ga.h1 -
                       (std::cosh(tau) * g.h1 + std::sinh(tau) * g.h0)) <
              1e-12);

        // Rotations leave g0 alone.
        const auto gr = su11::plane_triplet(
            su11::sp2_action_on_plane(su11::r1_matrix(1.1), x));
        CHECK(std::abs(gr.h0 - g.h0) < 1e-12);
    }
}

TEST_CASE("generating_function: values, domains, differential relations") {
    CHECK(su11::generating_function(GeneratingKind::F3, 2.0, 3.0) == 6.0);
    CHECK(su11::generating_function(GeneratingKind::F4, 0.0, 1.7) == 0.0);

    CHECK_THROWS_AS(
        su11::generating_function(GeneratingKind::F1, 1.0, M_PI / 2.0),
        std::domain_error);
    CHECK_THROWS_AS(su11::generating_function(GeneratingKind::F2, 2.0, 1.0),
                    std::domain_error);

    const double phi0 = 0.7, I0 = 1.3;
    const auto pt = su11::to_phase_point({phi0, I0});

    // dF1/dphi = I and dF1/dq = -p at the matching point.
    CHECK(std::abs(oracle::central_diff(
                       [&](double ph) {
                           return su11::generating_function(
                               GeneratingKind::F1, pt.q, ph);
                       },
                       phi0) -
                   I0) < 1e-6);
    CHECK(std::abs(oracle::central_diff(
                       [&](double q) {
                           return su11::generating_function(
                               GeneratingKind::F1, q, phi0);
                       },
                       pt.q) +
                   pt.p) < 1e-6);

    // dF2/dq = p and dF2/dI = phi on the phi in (0, pi) branch.
    CHECK(std::abs(oracle::central_diff(
                       [&](double q) {
                           return su11::generating_function(
                               GeneratingKind::F2, q, I0);
                       },
                       pt.q) -
                   pt.p) < 1e-6);
    CHECK(std::abs(oracle::central_diff(
                       [&](double I) {
                           return su11::generating_function(
                               GeneratingKind::F2, pt.q, I);
                       },
                       I0) -
                   phi0) < 1e-6);

    // F4 = I cos sin matches half the double-angle sine.
    CHECK(std::abs(su11::generating_function(GeneratingKind::F4, 0.4, 2.0) -
                   std::sin(0.8)) < 1e-15);
}

TEST_CASE("mobius_action: subgroup closed forms on the radial factor") {
    oracle::Rng rng(404);
    for (int i = 0; i < 20; ++i) {
        const AngleAction s{rng.uniform(-M_PI, M_PI), rng.uniform(0.2, 3.0)};

        // Rotations shift the angle and keep the action.
        const double theta = 0.9;
        const auto r = su11::mobius_action(su11::rotation_element(theta), s);
        CHECK(std::abs(angle_diff(r.phi, s.phi - theta)) < 1e-13);
        CHECK(std::abs(r.I - s.I) < 1e-13 * s.I);

        // Identity element.
        const auto id = su11::mobius_action(su11::CoverElement{}, s);
        CHECK(std::abs(angle_diff(id.phi, s.phi)) < 1e-15);
        CHECK(id.I == s.I);

        const double tau = 0.7;
        const auto a = su11::mobius_action(su11::boost_a_element(tau), s);
        CHECK(std::abs(a.I / s.I -
                       (std::cosh(tau) -
                        std::sinh(tau) * std::sin(s.phi))) < 1e-12);

        const double sb = -1.1;
        const auto b = su11::mobius_action(su11::boost_b_element(sb), s);
        CHECK(std::abs(b.I / s.I -
                       (std::cosh(sb) +
                        std::sinh(sb) * std::cos(s.phi))) < 1e-12);

        const double xi = 1.3;
        const auto nn = su11::mobius_action(su11::shear_element(xi), s);
        CHECK(std::abs(nn.I / s.I -
                       (1.0 + xi * std::cos(s.phi) +
                        0.5 * xi * xi * (1.0 + std::sin(s.phi)))) < 1e-12);
    }

    // The A-boost at phi = 0 multiplies the action by cosh(tau).
    const auto a0 =
        su11::mobius_action(su11::boost_a_element(0.7), {0.0, 1.6});
    CHECK(std::abs(a0.I - 1.6 * std::cosh(0.7)) < 1e-13);
}

TEST_CASE("mobius_action: left group action and matrix overload") {
    oracle::Rng rng(505);
    for (int i = 0; i < 50; ++i) {
        const su11::CoverElement g1(rng.uniform_disc(0.9),
                                    rng.uniform(-6.0, 6.0));
        const su11::CoverElement g2(rng.uniform_disc(0.9),
                                    rng.uniform(-6.0, 6.0));
        const AngleAction s{rng.uniform(-M_PI, M_PI), rng.uniform(0.2, 3.0)};

        const auto seq = su11::mobius_action(g2, su11::mobius_action(g1, s));
        const auto fused =
            su11::mobius_action(su11::cover_compose(g2, g1), s);
        CHECK(std::abs(angle_diff(seq.phi, fused.phi)) < 1e-10);
        CHECK(std::abs(seq.I - fused.I) < 1e-10 * std::max(1.0, fused.I));

        // The matrix overload agrees with the cover element it projects to.
        const auto viamat =
            su11::mobius_action(su11::cover_project(g1), s);
        const auto direct = su11::mobius_action(g1, s);
        CHECK(std::abs(angle_diff(viamat.phi, direct.phi)) < 1e-12);
        CHECK(std::abs(viamat.I - direct.I) < 1e-12 * direct.I);
    }

    // Shape and determinant guards on the matrix overload.
    Eigen::Matrix2cd bad;
    bad << 1.0, 0.5, 0.2, 1.0;
    CHECK_THROWS_AS(su11::mobius_action(bad, {0.1, 1.0}),
                    std::invalid_argument);
    Eigen::Matrix2cd scaled =
        1.01 * su11::cover_project(su11::boost_b_element(0.4));
    CHECK_THROWS_AS(su11::mobius_action(scaled, {0.1, 1.0}),
                    std::invalid_argument);
}

TEST_CASE("mobius_action: unit Jacobian and the angle-derivative law") {
    oracle::Rng rng(606);
    const su11::CoverElement elements[] = {
        su11::rotation_element(0.9), su11::boost_a_element(0.6),
        su11::boost_b_element(-0.8), su11::shear_element(1.3),
        su11::CoverElement(rng.uniform_disc(0.8), rng.uniform(-3.0, 3.0)),
        su11::CoverElement(rng.uniform_disc(0.8), rng.uniform(-3.0, 3.0))};
    for (const auto& g : elements) {
        for (int i = 0; i < 20; ++i) {
            const double phi = rng.uniform(-3.0, 3.0);
            const double I = rng.uniform(0.1, 4.0);
            const auto map = [&](double ph,
                                 double act) -> std::array<double, 2> {
                const auto out = su11::mobius_action(g, {su11::wrap_angle(ph), act});
                return {out.phi, out.I};
            };
            CHECK(std::abs(fd_jacobian_det(map, phi, I, true) - 1.0) < 1e-6);
        }
    }

    // dphi'/dphi = |alpha + e^{i phi} beta|^{-2}, the reciprocal of the
    // action multiplier, so their product is exactly the Jacobian 1.
    const auto g = su11::boost_a_element(0.85);
    const auto m = su11::cover_project(g);
    const double phi = 0.4, I = 1.0;
    const std::complex<double> den =
        m(0, 0) + std::polar(1.0, phi) * m(0, 1);
    const double dphi = oracle::central_diff(
        [&](double ph) {
            return su11::wrap_angle(
                su11::mobius_action(g, {ph, I}).phi -
                su11::mobius_action(g, {phi, I}).phi) +
                su11::mobius_action(g, {phi, I}).phi;
        },
        phi);
    CHECK(std::abs(dphi - 1.0 / std::norm(den)) < 1e-6);
    const double dI = su11::mobius_action(g, {phi, 2.0}).I -
                      su11::mobius_action(g, {phi, 1.0}).I;
    CHECK(std::abs(dphi * dI - 1.0) < 1e-6);
}

TEST_CASE("mobius_action: rotation-boost-rotation reaches any target") {
    const AngleAction from{0.8, 1.7};
    const AngleAction to{-2.1, 0.4};

    // Rotate the source angle to pi/2, where the A-boost acts purely
    // radially with multiplier e^{-tau}, then rotate onto the target angle.
    const auto r1 = su11::rotation_element(from.phi - M_PI / 2.0);
    const auto mid1 = su11::mobius_action(r1, from);
    const double tau = std::log(from.I / to.I);
    const auto ab = su11::boost_a_element(tau);
    const auto mid2 = su11::mobius_action(ab, mid1);
    CHECK(std::abs(mid2.I - to.I) < 1e-12);
    const auto r2 = su11::rotation_element(mid2.phi - to.phi);
    const auto end = su11::mobius_action(r2, mid2);
    CHECK(std::abs(angle_diff(end.phi, to.phi)) < 1e-10);
    CHECK(std::abs(end.I - to.I) < 1e-10);

    // The fused three-step element does the same in one application.
    const auto g = su11::cover_compose(r2, su11::cover_compose(ab, r1));
    const auto once = su11::mobius_action(g, from);
    CHECK(std::abs(angle_diff(once.phi, to.phi)) < 1e-10);
    CHECK(std::abs(once.I - to.I) < 1e-10);
}

TEST_CASE("mobius_action: cone relation survives every tested element") {
    oracle::Rng rng(707);
    for (int i = 0; i < 30; ++i) {
        const su11::CoverElement g(rng.uniform_disc(0.85),
                                   rng.uniform(-4.0, 4.0));
        const AngleAction s{rng.uniform(-M_PI, M_PI), rng.uniform(0.2, 3.0)};
        const auto t = su11::h_triplet(su11::mobius_action(g, s));
        CHECK(std::abs(t.h0 * t.h0 - t.h1 * t.h1 - t.h2 * t.h2) <
              1e-10 * std::max(1.0, t.h0 * t.h0));
        CHECK(t.h0 > 0.0);
    }
}

TEST_CASE("sp2_action_on_plane: double cover, shear line, guards") {
    const PhasePoint x{0.7, -1.9};

    // A full 2 pi turn of the plane matrix flips the sign.
    const auto flipped = su11::sp2_action_on_plane(su11::r1_matrix(2.0 * M_PI), x);
    CHECK(std::abs(flipped.q + x.q) < 1e-14);
    CHECK(std::abs(flipped.p + x.p) < 1e-14);

    // The shear fixes the p = 0 line pointwise.
    const PhasePoint online{1.3, 0.0};
    const auto sheared = su11::sp2_action_on_plane(su11::n1_matrix(2.4), online);
    CHECK(sheared.q == online.q);
    CHECK(sheared.p == 0.0);

    Eigen::Matrix2d notsp;
    notsp << 1.0, 0.0, 0.0, 1.01;
    CHECK_THROWS_AS(su11::sp2_action_on_plane(notsp, x),
                    std::invalid_argument);
}

TEST_CASE("poisson_bracket: so(1,2) relations and canonical pairs") {
    const su11::PhaseField h0 = [](const AngleAction& s) { return s.I; };
    const su11::PhaseField h1 = [](const AngleAction& s) {
        return s.I * std::cos(s.phi);
    };
    const su11::PhaseField h2 = [](const AngleAction& s) {
        return -s.I * std::sin(s.phi);
    };

    // {h0, h1} at (pi/3, 2) equals -h2 = 2 sin(pi/3).
    const AngleAction probe{M_PI / 3.0, 2.0};
    CHECK(std::abs(su11::poisson_bracket(h0, h1, probe) -
                   2.0 * std::sin(M_PI / 3.0)) < 1e-6);

    oracle::Rng rng(808);
    for (int i = 0; i < 20; ++i) {
        const AngleAction s{rng.uniform(-2.5, 2.5), rng.uniform(0.3, 4.0)};
        const auto t = su11::h_triplet(s);
        CHECK(std::abs(su11::poisson_bracket(h0, h1, s) + t.h2) < 1e-6);
        CHECK(std::abs(su11::poisson_bracket(h0, h2, s) - t.h1) < 1e-6);
        CHECK(std::abs(su11::poisson_bracket(h1, h2, s) - t.h0) < 1e-6);
        // Antisymmetry derivative: {f, f} = 0.
        CHECK(std::abs(su11::poisson_bracket(h1, h1, s)) < 1e-9);
        // {h0, q} = -p: the canonical equation of motion.
        const su11::PhaseField qf = [](const AngleAction& u) {
            return std::sqrt(2.0 * u.I) * std::cos(u.phi);
        };
        const auto pt = su11::to_phase_point(s);
        CHECK(std::abs(su11::poisson_bracket(h0, qf, s) + pt.p) < 1e-6);
    }

    CHECK_THROWS_AS(su11::poisson_bracket(h0, h1, {0.2, 1e-9}),
                    std::runtime_error);
}

TEST_CASE("perturbed_orbit: free flow, RK4 agreement, conservation") {
    // gamma = 0 is rigid rotation of the angle at unit speed.
    const AngleAction s0{0.4, 1.9};
    const auto free1 = su11::perturbed_orbit(PerturbationKind::H1, 0.0, 2.5, s0);
    CHECK(std::abs(angle_diff(free1.phi, s0.phi + 2.5)) < 1e-12);
    CHECK(std::abs(free1.I - s0.I) < 1e-12);
    const auto free2 = su11::perturbed_orbit(PerturbationKind::H2, 0.0, 9.0, s0);
    CHECK(std::abs(angle_diff(free2.phi, s0.phi + 9.0)) < 1e-12);
    CHECK(std::abs(free2.I - s0.I) < 1e-12);

    // Closed form against the RK4 oracle.
    const struct {
        PerturbationKind kind;
        double gamma;
        double phi0;
        double I0;
        double t;
    } runs[] = {
        {PerturbationKind::H1, 0.5, 0.0, 1.0, 1.0},
        {PerturbationKind::H1, 0.5, 0.0, 1.0, 10.0},
        {PerturbationKind::H1, -0.6, -2.4, 0.7, 7.3},
        {PerturbationKind::H2, 0.35, 1.1, 2.3, 5.0},
        {PerturbationKind::H2, 0.35, 1.1, 2.3, 10.0},
        {PerturbationKind::H2, -0.8, 2.9, 1.2, 3.7},
    };
    for (const auto& r : runs) {
        const auto rhs = [&](const std::array<double, 2>& y) {
            return r.kind == PerturbationKind::H1 ? orbit_rhs_h1(r.gamma, y)
                                                  : orbit_rhs_h2(r.gamma, y);
        };
        const auto num = oracle::rk4(rhs, {r.phi0, r.I0}, r.t);
        const auto closed =
            su11::perturbed_orbit(r.kind, r.gamma, r.t, {r.phi0, r.I0});
        CHECK(std::abs(angle_diff(closed.phi, num[0])) < 1e-6);
        CHECK(std::abs(closed.I - num[1]) < 1e-6);
    }

    // H = I (1 + gamma cos phi) is conserved along the H1 orbit.
    {
        const double gamma = 0.5;
        const AngleAction init{0.9, 1.4};
        const double H0 = init.I * (1.0 + gamma * std::cos(init.phi));
        for (double t = 0.0; t <= 10.0; t += 0.5) {
            const auto s = su11::perturbed_orbit(PerturbationKind::H1, gamma,
                                                 t, init);
            CHECK(std::abs(s.I * (1.0 + gamma * std::cos(s.phi)) - H0) <
                  1e-8);
        }
    }

    // Action fluctuation over one period approaches (1+g)/(1-g).
    {
        const double gamma = 0.8;
        const double period = 2.0 * M_PI / std::sqrt(1.0 - gamma * gamma);
        double imax = 0.0, imin = 1e300;
        for (int j = 0; j <= 20000; ++j) {
            const double t = period * j / 20000.0;
            const auto s = su11::perturbed_orbit(PerturbationKind::H1, gamma,
                                                 t, {0.0, 1.0});
            imax = std::max(imax, s.I);
            imin = std::min(imin, s.I);
        }
        CHECK(std::abs(imax / imin - (1.0 + gamma) / (1.0 - gamma)) < 1e-3);
    }

    CHECK_THROWS_AS(
        su11::perturbed_orbit(PerturbationKind::H1, 1.0, 1.0, s0),
        std::domain_error);
    CHECK_THROWS_AS(
        su11::perturbed_orbit(PerturbationKind::H2, -1.3, 1.0, s0),
        std::domain_error);
}

TEST_CASE("action_of_energy: closed forms meet the quadrature") {
    const PotentialSpec morse{PotentialKind::Morse, 3.0, 0.8, 1.2};
    const PotentialSpec symmo{PotentialKind::SymMorse, 1.5, 1.1, 0.7};
    const PotentialSpec pt{PotentialKind::PoschlTeller, 2.0, 0.5, 1.0};
    const PotentialSpec conf{PotentialKind::Confining, 1.0, 1.0, 1.0};

    // Pinned examples.
    const auto m75 = su11::action_of_energy(morse, 0.75);
    CHECK(std::abs(m75.closed_form - 1.0) < 1e-15);
    CHECK(std::abs(m75.quadrature - 1.0) < 1e-8);
    const auto p3 = su11::action_of_energy(pt, 3.0);
    CHECK(std::abs(p3.closed_form - 2.0) < 1e-15);
    CHECK(std::abs(p3.quadrature - 2.0) < 1e-8);

    for (double e : {0.1, 0.5, 0.9, 0.99}) {
        const auto r = su11::action_of_energy(morse, e);
        CHECK(std::abs(r.quadrature - r.closed_form) < 1e-8);
        const auto r2 = su11::action_of_energy(symmo, e);
        CHECK(std::abs(r2.quadrature - r2.closed_form) < 1e-8);
        CHECK(std::abs(r.closed_form - r2.closed_form) < 1e-15);
    }
    for (double e : {0.5, 3.0, 8.0}) {
        const auto r = su11::action_of_energy(pt, e);
        CHECK(std::abs(r.quadrature - r.closed_form) < 1e-8);
    }
    for (double e : {0.5, 2.0, 10.0}) {
        const auto r = su11::action_of_energy(conf, e);
        CHECK(std::abs(r.closed_form - e) < 1e-15);
        CHECK(std::abs(r.quadrature - e) < 1e-8);
    }

    // The Morse action approaches 2 at the dissociation edge.
    const auto edge = su11::action_of_energy(morse, 1.0 - 1e-8);
    CHECK(edge.closed_form < 2.0);
    CHECK(edge.closed_form > 2.0 - 3e-4);

    CHECK_THROWS_AS(su11::action_of_energy(morse, 0.0), std::domain_error);
    CHECK_THROWS_AS(su11::action_of_energy(morse, 1.0), std::domain_error);
    CHECK_THROWS_AS(su11::action_of_energy(symmo, -0.2), std::domain_error);
    CHECK_THROWS_AS(su11::action_of_energy(pt, 0.0), std::domain_error);
    CHECK_THROWS_AS(su11::action_of_energy(conf, -1.0), std::domain_error);
    CHECK_THROWS_AS(
        su11::action_of_energy({PotentialKind::Morse, -1.0, 1.0, 1.0}, 0.5),
        std::domain_error);
}

TEST_CASE("quantized_spectrum: anharmonic ladders and validity cutoff") {
    const PotentialSpec morse{PotentialKind::Morse, 8.0, 0.7, 1.3};
    const double w0 = morse.omega0();
    CHECK(std::abs(w0 - 0.7 * std::sqrt(16.0 / 1.3)) < 1e-15);

    const auto levels = su11::quantized_spectrum(morse, 0.5, 12);
    REQUIRE(levels.size() == 13);
    for (const auto& lv : levels) {
        const double rung = w0 * (lv.n + 0.5);
        CHECK(std::abs(lv.energy - (rung - rung * rung / (4.0 * 8.0))) <
              1e-12);
        CHECK(lv.valid == (rung < 16.0));
    }
    // Cutoff sits exactly where the rung crosses 2 V0.
    CHECK(levels[6].valid);
    CHECK(!levels[7].valid);

    // Bohr-Sommerfeld consistency: the action at the quantized energy is
    // the rung itself (both closed form and quadrature, scaled by V0).
    for (const auto& lv : levels) {
        if (!lv.valid) continue;
        const double rung = w0 * (lv.n + 0.5);
        const auto act = su11::action_of_energy(morse, lv.energy / 8.0);
        CHECK(std::abs(act.closed_form - rung / 8.0) < 1e-12);
        CHECK(std::abs(act.quadrature - rung / 8.0) < 1e-8);
    }

    // The inverted well grows with the opposite anharmonic sign.
    const PotentialSpec pt{PotentialKind::PoschlTeller, 2.5, 0.6, 1.0};
    const auto plevels = su11::quantized_spectrum(pt, 0.25, 6);
    const double wp = pt.omega0();
    for (const auto& lv : plevels) {
        const double rung = wp * (lv.n + 0.25);
        CHECK(std::abs(lv.energy - (rung + rung * rung / (4.0 * 2.5))) <
              1e-12);
        CHECK(lv.valid);
        const auto act = su11::action_of_energy(pt, lv.energy / 2.5);
        CHECK(std::abs(act.closed_form - rung / 2.5) < 1e-12);
        CHECK(std::abs(act.quadrature - rung / 2.5) < 1e-8);
    }

    // Confining well: exactly linear with the doubled base frequency.
    const PotentialSpec conf{PotentialKind::Confining, 1.7, 0.9, 2.0};
    const auto clevels = su11::quantized_spectrum(conf, 1.0 / 3.0, 5, 0.8);
    const double wc = conf.omega0();
    CHECK(std::abs(wc - 2.0 * 0.9 * std::sqrt(3.4 / 2.0)) < 1e-15);
    for (const auto& lv : clevels) {
        CHECK(std::abs(lv.energy - 0.8 * wc * (lv.n + 1.0 / 3.0)) < 1e-13);
        CHECK(lv.valid);
    }
    for (size_t i = 1; i < clevels.size(); ++i)
        CHECK(std::abs((clevels[i].energy - clevels[i - 1].energy) -
                       0.8 * wc) < 1e-13);

    // A well too shallow to hold even the lowest rung is rejected.
    const PotentialSpec shallow{PotentialKind::Morse, 0.001, 10.0, 1.0};
    CHECK_THROWS_AS(su11::quantized_spectrum(shallow, 0.5, 3),
                    std::runtime_error);
}

TEST_CASE("scale_transform: squeeze of the chart") {
    const auto out = su11::scale_transform(2.0, {M_PI / 2.0, 1.0});
    CHECK(std::abs(out.phi - M_PI / 4.0) < 1e-15);
    CHECK(std::abs(out.I - 2.0) < 1e-15);

    const AngleAction s{0.6, 1.1};
    const auto id = su11::scale_transform(1.0, s);
    CHECK(id.phi == s.phi);
    CHECK(id.I == s.I);

    // phi * I is invariant (beta >= 1 keeps the angle in range).
    const auto b3 = su11::scale_transform(3.0, s);
    CHECK(std::abs(b3.phi * b3.I - s.phi * s.I) < 1e-14);

    // Symplectic: unit Jacobian by finite differences.
    const auto map = [](double phi, double I) -> std::array<double, 2> {
        const auto o = su11::scale_transform(2.5, {phi, I});
        return {o.phi, o.I};
    };
    CHECK(std::abs(fd_jacobian_det(map, 0.3, 1.2, true) - 1.0) < 1e-6);

    CHECK_THROWS_AS(su11::scale_transform(0.0, s), std::domain_error);
    CHECK_THROWS_AS(su11::scale_transform(-2.0, s), std::domain_error);
}

}  // TEST_SUITE
