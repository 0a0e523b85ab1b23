#pragma once

// Scalar special-function kernels used by every other module: Pochhammer
// symbols, modified Bessel functions of real order, the normalization series
// g_k, the Bessel ratio rho_k, generalized Laguerre polynomials, and two
// hypergeometric helpers.
//
// All functions are pure; errors are reported via std::domain_error /
// std::overflow_error / std::runtime_error.

#include <complex>

#include "su11/config.hpp"

namespace su11 {

// Rising factorial a(a+1)...(a+n-1); n = 0 gives 1.  Large n is routed
// through log-gamma with explicit sign tracking.  Throws std::overflow_error
// when the magnitude exceeds the representable range.
double pochhammer(double a, int n);

// Modified Bessel function of the first kind I_nu(x) for nu > -1, x >= 0.
// Power series below cfg.asymptotic_switch, large-argument expansion above.
double bessel_i(double nu, double x, const SpecFunConfig& cfg = {});

// Modified Bessel function of the second kind K_nu(x) for x > 0, any real nu
// (K is even in nu).  Evaluated from the scaled integral representation
// K_nu(x) = e^{ -x } Int_0^inf e^{ -x(cosh t - 1) } cosh(nu t) dt with a
// doubling trapezoid rule; the integrand is positive so there is no
// cancellation.
double bessel_k(double nu, double x, const SpecFunConfig& cfg = {});

// Normalization series g_k(x) = sum_n x^n / ((2k)_n n!) for x >= 0, equal to
// Gamma(2k) x^{(1-2k)/2} I_{2k-1}(2 sqrt(x)).
double g_k(double x, BargmannIndex k, const SpecFunConfig& cfg = {});

// Entire-function extension of g_k to complex argument (needed for overlap
// kernels g_k(conj(z2) z1)).
std::complex<double> g_k(std::complex<double> x, BargmannIndex k,
                         const SpecFunConfig& cfg = {});

// Ratio rho_k(z) = I_{2k}(2z) / I_{2k-1}(2z) for z >= 0, evaluated by the
// backward-stable downward recurrence rho_k = z / (2k + z rho_{k+1/2})
// started from a large half-integer shift.
double rho_k(BargmannIndex k, double z, const SpecFunConfig& cfg = {});

// Asymptotic expansion of rho_k for large z (three terms); exposed for
// cross-checks against the recurrence evaluation.
double rho_k_asymptotic(BargmannIndex k, double z);

// Generalized Laguerre polynomial L_n^alpha(u) for alpha > -1, via the
// three-term recurrence.
double laguerre(int n, double alpha, double u);

// Terminating Gauss hypergeometric sum F(a, -n; c; z) (n+1 terms).  Throws
// std::domain_error when c is one of {0, -1, ..., -(n-1)}, where a
// denominator factor vanishes before the series terminates.
std::complex<double> hypergeom_2f1_terminating(std::complex<double> a, int n,
                                               std::complex<double> c,
                                               std::complex<double> z);

// Confluent hypergeometric series Phi(a; c; z) = sum_m (a)_m/((c)_m m!) z^m.
// Throws std::domain_error when c is a nonpositive integer and
// std::runtime_error if the series fails to converge within cfg.max_terms.
std::complex<double> confluent_phi(std::complex<double> a,
                                   std::complex<double> c,
                                   std::complex<double> z,
                                   const SpecFunConfig& cfg = {});

}  // namespace su11
