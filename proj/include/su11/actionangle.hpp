#pragma once
// Classical side of the oscillator: the polar angle-action chart and its
// singularity at the origin, the quadratic cone functions, generating
// functions of the chart change, Moebius flows on angle-action space and
// linear symplectic flows on the plane, Poisson brackets by finite
// differences, closed-form perturbed orbits, and the action/energy
// conversion for four integrable wells with their quantized ladders.

#include <Eigen/Dense>

#include <functional>
#include <vector>

#include "su11/config.hpp"
#include "su11/repcore.hpp"

namespace su11 {

// Dimensionless plane coordinates.
struct PhasePoint {
    double q = 0.0;
    double p = 0.0;
};

// Angle stored in (-pi, pi]; the action is strictly positive.
struct AngleAction {
    double phi = 0.0;
    double I = 1.0;
};

// Cone coordinates h0 = I, h1 = I cos(phi), h2 = -I sin(phi); they satisfy
// h0 > 0 and h0^2 - h1^2 - h2^2 = 0.
struct HTriplet {
    double h0 = 0.0;
    double h1 = 0.0;
    double h2 = 0.0;
};

// The four wells whose action integral reduces to the oscillator form.
enum class PotentialKind { Morse, SymMorse, PoschlTeller, Confining };

struct PotentialSpec {
    PotentialKind kind = PotentialKind::Morse;
    double V0 = 1.0;  // well depth scale, > 0
    double a = 1.0;   // inverse length scale, > 0
    double M = 1.0;   // mass, > 0

    // Small-oscillation frequency at the well bottom.
    double omega0() const;
    // Throws std::domain_error unless all parameters are positive.
    void validate() const;
};

// Variable pairs: F1(q, phi), F2(q, I), F3(q, p), F4(phi, I).
enum class GeneratingKind { F1, F2, F3, F4 };

// Action variable of a bound orbit at dimensionless energy: by adaptive
// quadrature between the turning points and by the explicit formula.
struct ActionEnergy {
    double quadrature = 0.0;
    double closed_form = 0.0;
};

// One rung of a quantized ladder; `valid` is false past the level where the
// Morse-family formula stops describing a bound state.
struct QuantizedLevel {
    int n = 0;
    double energy = 0.0;
    bool valid = true;
};

// Reduce an angle to the storage interval (-pi, pi].
double wrap_angle(double phi);

// q = sqrt(2 I) cos(phi), p = -sqrt(2 I) sin(phi), and its inverse.  The
// inverse is singular at the origin and throws std::domain_error there.
PhasePoint to_phase_point(const AngleAction& s);
AngleAction to_angle_action(const PhasePoint& x);

// Cone functions of an angle-action point.
HTriplet h_triplet(const AngleAction& s);

// Quadratic cone functions of a plane point:
// ((q^2+p^2)/4, (p^2-q^2)/4, -q p / 2).
HTriplet plane_triplet(const PhasePoint& x);

// Generating functions of the chart change, evaluated on the variable pair
// listed with GeneratingKind.  F1 is singular where cos(phi) = 0; F2 needs
// q^2 <= 2 I.
double generating_function(GeneratingKind which, double x, double y);

// Fractional-linear action of the group on angle-action space:
// I' = |alpha + e^{i phi} beta|^2 I with the matching angle rotation.  The
// matrix overload accepts a 2x2 complex matrix of the shape
// [[alpha, beta], [conj(beta), conj(alpha)]] with unit determinant.
AngleAction mobius_action(const CoverElement& g, const AngleAction& s);
AngleAction mobius_action(const Eigen::Matrix2cd& g, const AngleAction& s);

// Linear action of a unit-determinant real 2x2 matrix on the plane.
PhasePoint sp2_action_on_plane(const Eigen::Matrix2d& g, const PhasePoint& x);

// One-parameter subgroups of the real symplectic group on the plane.
Eigen::Matrix2d r1_matrix(double theta);
Eigen::Matrix2d a1_matrix(double tau);
Eigen::Matrix2d b1_matrix(double s);
Eigen::Matrix2d n1_matrix(double xi);

// Scalar field on angle-action space.
using PhaseField = std::function<double(const AngleAction&)>;

// { f, g } = df/dphi dg/dI - df/dI dg/dphi by central differences with
// step 1e-6 * max(1, |coordinate|); throws when the action is too small to
// step without leaving the chart.
double poisson_bracket(const PhaseField& f, const PhaseField& g,
                       const AngleAction& s);

// Closed-form orbit of H = I + gamma * I cos(phi) (H1) or
// H = I - gamma * I sin(phi) (H2), |gamma| < 1, starting from `initial`
// at t = 0.
enum class PerturbationKind { H1, H2 };
AngleAction perturbed_orbit(PerturbationKind kind, double gamma, double t,
                            const AngleAction& initial);

// Dimensionless action at dimensionless energy (both in units of the well
// scales); throws std::domain_error outside the bound-state energy range.
ActionEnergy action_of_energy(const PotentialSpec& pot, double e_tilde);

// Ladder E_n built on index n + k; Morse-family rungs beyond the bound
// range carry valid = false, and a well too shallow for even n = 0 throws.
std::vector<QuantizedLevel> quantized_spectrum(const PotentialSpec& pot,
                                               BargmannIndex k, int n_max,
                                               double hbar = 1.0);

// phi -> phi / beta, I -> beta * I (beta > 0).
AngleAction scale_transform(double beta, const AngleAction& s);

}  // namespace su11
