#pragma once

#include <array>
#include <vector>

#include "su11/config.hpp"

namespace su11 {

// CODATA 2018 physical constants, SI units.  The single table every
// dimensionful formula in this header draws from; all other factors are
// symbolic in the function inputs.
namespace constants {
// Speed of light in vacuum, m/s (exact).
inline constexpr double c = 299792458.0;
// Reduced Planck constant, J s (h = 6.62607015e-34 J s exact, over 2 pi).
inline constexpr double hbar = 1.054571817e-34;
// Vacuum electric permittivity, F/m.
inline constexpr double epsilon0 = 8.8541878128e-12;
// Fine-structure constant (dimensionless).
inline constexpr double alpha = 7.2973525693e-3;
// Elementary charge, C (exact).
inline constexpr double e0 = 1.602176634e-19;
// Boltzmann constant, J/K (exact).
inline constexpr double k_B = 1.380649e-23;
}  // namespace constants

// Canonical thermodynamics of one oscillator with levels E_n = hbar w (n+k),
// in reduced units: energies are multiples of hbar*omega and the inverse
// temperature enters only through beta_hw = beta*hbar*omega.
struct ThermoReport {
    double Z;          // partition function exp(-b k)/(1 - exp(-b))
    double F;          // free energy / (hbar omega) = -ln(Z)/b
    double U;          // internal energy / (hbar omega) = k + 1/(e^b - 1)
    double dE2;        // energy variance / (hbar omega)^2 = e^b/(e^b - 1)^2
    double S_over_kB;  // entropy / k_B = ln Z + b U
    double beta_hw;    // the input b = beta*hbar*omega
};

// Closed-form canonical ensemble report.  The identities
// S/k_B = ln Z + b U and dE2 = d^2/db^2 ln Z hold by construction; k enters
// F and U additively as +k and cancels from dE2 and S.  Throws
// std::domain_error for beta_hw <= 0.
ThermoReport thermo(double beta_hw, BargmannIndex k);

// Probability of finding the oscillator on ladder level n >= 0, computed as
// exp(-b(n+k))/Z.  The k-dependence cancels analytically:
// p_n = exp(-b n)(1 - exp(-b)); the function evaluates the k-dependent ratio
// so that the cancellation is a checkable numerical fact, not an assumption.
double occupation_probability(double beta_hw, BargmannIndex k, int n);

// One standing-wave mode of a cubic cavity with periodic boundary
// conditions: side length L, relative permittivity epsilon and permeability
// mu (refractive index sqrt(epsilon*mu)), integer mode triple m.
struct CavitySpec {
    double L;              // side length, m, > 0
    double epsilon;        // relative permittivity, > 0
    double mu;             // relative permeability, > 0
    std::array<int, 3> m;  // mode index vector

    double refractive_index() const;
    // Throws std::domain_error unless L, epsilon, mu are all > 0.
    void validate() const;
};

// Mode angular frequency omega = (c/n)|l| with wave vector l = 2 pi m / L.
// m = (0,0,0) gives the zero mode, omega = 0.
double cavity_mode_frequency(const CavitySpec& spec);

// Ground-state field energy of a finite mode list: each mode contributes
// k*hbar*omega per polarization and both polarizations are counted, so the
// total is 2 k hbar * sum of the mode frequencies (J for L in m).
double cavity_ground_energy(BargmannIndex k, const std::vector<CavitySpec>& modes);

// Zero-point energy density of the free field with all modes below the
// angular-frequency cutoff omega_hat filled at index k:
// u = k hbar omega_hat^4 / (4 pi^2 c^3), J/m^3.  Linear in k (k = 0 is the
// vanishing-density limit, so plain non-negative doubles are accepted here),
// quartic in the cutoff.  Throws std::domain_error for omega_hat <= 0 or
// k < 0.
double vacuum_energy_density(double omega_hat, double k);

// The same density parameterized by the cutoff length ell = 2 pi c /
// omega_hat: u = 4 pi^2 k hbar c / ell^4.
double vacuum_energy_density_length(double ell, double k);

// Inverse of the length form, exact because the density is linear in k:
// k = target * ell^4 / (4 pi^2 hbar c).  Throws std::domain_error for
// non-positive inputs.
double solve_k_for_density(double target_u, double ell);

// Index shift of a charged oscillator in a static electric field.
struct StarkShift {
    double k_eff;    // k - delta
    double delta;    // (alpha Z^2 / 4 pi^2) epsilon0 E0^2 lambda^3 / (M c^2)
    bool flagged;    // true when k_eff <= 0: the shifted ladder is unphysical
};

// Constant-field displacement of the oscillator minimum re-expressed as an
// effective index k_eff = k - delta, with lambda = 2 pi c / omega.
// SI inputs: E0 in V/m (any sign; delta is quadratic in E0), omega in rad/s
// > 0, mass M in kg > 0; Z_charge counts elementary charges.
StarkShift stark_effective_k(BargmannIndex k, int Z_charge, double E0,
                             double omega, double M);

// Transverse energy levels of a charge q in a uniform magnetic field B:
// E_n = hbar (|q B| / mass) (n + k) for n = 0..n_max (J for SI inputs).
// Only |q B| enters; q B = 0 and mass <= 0 throw std::domain_error.
std::vector<double> landau_levels(double q_charge, double B, double mass,
                                  BargmannIndex k, int n_max);

// Ground-state index extracted from two transition frequencies into the
// ground levels hbar*omega1*k and hbar*omega2*k of the same oscillator
// prepared with two different frequencies:
//   omega_a1 - omega_b2 = (E_a - E_b)/hbar - k (omega1 - omega2)
// solved linearly for k.  Energies in J, frequencies in rad/s.  Throws
// std::domain_error when omega1 and omega2 are equal to within 1e-12
// relative (the difference is the divisor).
double mulliken_extract_k(double E_a, double E_b, double omega1,
                          double omega2, double omega_a1, double omega_b2);

}  // namespace su11
