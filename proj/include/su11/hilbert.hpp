#pragma once

// Concrete function-space models of the index-k ladder: Fourier models on
// the unit circle (the plain Hardy space at k = 1/2 and a coefficient-
// weighted variant for general k), the holomorphic disc model, and a
// Laguerre model on the half-line, together with the integral transform
// connecting the last two, differential-operator forms of the generators,
// generalized-eigenfunction evaluators, reproducing kernels, and the
// action of the group cover by weighted substitution operators on the disc.

#include <Eigen/Dense>
#include <complex>
#include <functional>
#include <utility>

#include "su11/coherent.hpp"
#include "su11/config.hpp"
#include "su11/repcore.hpp"

namespace su11 {

// The four concrete spaces handled here.  CircleKHalf is the plain Hardy
// space of the circle (k fixed at 1/2); CircleWeighted carries the same
// Fourier modes with a k-dependent coefficient weight; Disc holds power
// series on the open unit disc; HalfLine holds Laguerre-basis expansions
// on u > 0.
enum class SpaceKind { CircleKHalf, CircleWeighted, Disc, HalfLine };

// f(theta) = sum_n fourier[n] e^{i n theta}; only nonnegative modes occur.
// The index k selects the coefficient weight of the scalar product; the
// plain Hardy space is the k = 1/2 member.
struct CircleFunction {
    Eigen::VectorXcd fourier;
    BargmannIndex k;
};

// f(omega) = sum_n taylor[n] omega^n on |omega| < 1.
struct DiscFunction {
    Eigen::VectorXcd taylor;
    BargmannIndex k;
};

// f(u) = sum_n coeffs[n] * (orthonormal Laguerre mode n) on u > 0.
struct HalfLineFunction {
    Eigen::VectorXcd coeffs;
    BargmannIndex k;
};

// --- basis evaluation -----------------------------------------------------

// Plain circle mode e^{i n theta}.
std::complex<double> hardy_basis_value(int n, double theta);

// Weighted circle mode sqrt((2k)_n / n!) e^{i n theta}, orthonormal under
// the weighted scalar product.
std::complex<double> weighted_basis_value(BargmannIndex k, int n,
                                          double theta);

// Index-shifted circle mode e^{i (n+k) theta}; picks up the global factor
// e^{2 pi i k} under theta -> theta + 2 pi.
std::complex<double> shifted_basis_value(BargmannIndex k, int n,
                                         double theta);

// Disc mode sqrt((2k)_n / n!) omega^n, orthonormal for the disc product.
std::complex<double> disc_basis_value(BargmannIndex k, int n,
                                      std::complex<double> omega);

// Half-line mode: normalized u^{k-1/2} e^{-u/2} L_n^{(2k-1)}(u), orthonormal
// in L^2(0, infinity).  Throws std::domain_error for u <= 0.
double halfline_basis_value(BargmannIndex k, int n, double u);

// --- pointwise evaluation and scalar products ------------------------------

std::complex<double> circle_value(const CircleFunction& f, double theta);
std::complex<double> disc_value(const DiscFunction& f,
                                std::complex<double> omega);
std::complex<double> halfline_value(const HalfLineFunction& f, double u);

// Plain product sum_n conj(a_n) b_n of Fourier coefficients (the circle
// average of conj(a) b).
std::complex<double> hardy_inner(const CircleFunction& a,
                                 const CircleFunction& b);

// Weighted product sum_n (n!/(2k)_n) conj(a_n) b_n; requires equal k.
std::complex<double> weighted_inner(const CircleFunction& a,
                                    const CircleFunction& b);

// Disc product sum_n (n!/(2k)_n) conj(a_n) b_n on Taylor coefficients;
// for k > 1/2 it coincides with the area integral against the density
// (2k-1)/pi (1-|omega|^2)^{2k-2}.
std::complex<double> disc_inner(const DiscFunction& a, const DiscFunction& b);

// Half-line product sum_n conj(a_n) b_n (orthonormal coefficients).
std::complex<double> halfline_inner(const HalfLineFunction& a,
                                    const HalfLineFunction& b);

// --- generators as coefficient / differential actions ----------------------

// Ladder actions on circle Fourier coefficients: k0 scales mode n by (n+k),
// kplus shifts n -> n+1 with factor (n+2k), kminus shifts n -> n-1 with
// factor n.  At k = 1/2 these are the plain Hardy-space generators; in the
// weighted orthonormal basis their matrix elements reproduce the truncated
// matrices of build_rep.
struct CircleGenerators {
    BargmannIndex k;
    CircleFunction k0(const CircleFunction& f) const;
    CircleFunction kplus(const CircleFunction& f) const;
    CircleFunction kminus(const CircleFunction& f) const;
};
CircleGenerators hardy_generators(BargmannIndex k);

// Second-order differential actions on smooth callables, evaluated by
// central finite differences at u > 0 (step fd_step * max(1, u), capped at
// u/2).  k0 and k1 differ exactly by u/2; k2 is first order.
struct HalfLineGenerators {
    BargmannIndex k;
    double fd_step = 1e-4;
    std::complex<double>
    k0(const std::function<std::complex<double>(double)>& f, double u) const;
    std::complex<double>
    k1(const std::function<std::complex<double>(double)>& f, double u) const;
    std::complex<double>
    k2(const std::function<std::complex<double>(double)>& f, double u) const;
};
HalfLineGenerators halfline_generators(BargmannIndex k);

// --- coherent-state wavefunctions and densities -----------------------------

// Pointwise value of the normalized coherent state in the chosen model.
// For circle spaces the point is theta (imaginary part ignored must be 0);
// for Disc it is omega; for HalfLine it is u > 0.  CircleKHalf requires
// k = 1/2.  Closed forms are used where they exist (BG/Perelomov on the
// circle and disc, Perelomov and BG on the half-line); everything else is
// summed to a relative tail below 1e-13.  Throws std::runtime_error if the
// series fails to converge within the term cap.
std::complex<double> coherent_wavefunction(SpaceKind space,
                                           CoherentFamily family,
                                           BargmannIndex k,
                                           std::complex<double> param,
                                           std::complex<double> point);

// |wavefunction|^2 as a density against the model's own measure: dtheta/2pi
// on the circle at k = 1/2, the weighted area element on the disc, plain du
// on the half-line.  CircleWeighted has no pointwise density and throws
// std::invalid_argument.
double coherent_density(SpaceKind space, CoherentFamily family,
                        BargmannIndex k, std::complex<double> param,
                        std::complex<double> point);

// --- generalized eigenfunctions ---------------------------------------------

// Continuum eigenfunction of the hyperbolic generator K2 at real eigenvalue
// h2.  CircleKHalf: defined away from theta in {0, pi} (mod 2pi), singular
// there (throws std::domain_error), h2 must be positive; the two arcs carry
// the relative constant e^{i pi/2} e^{-pi h2} that keeps the combination
// inside the Hardy space.  HalfLine: u^{i h2 - 1/2}/sqrt(2 pi) for u > 0,
// any real h2.  Delta-normalized, not square integrable.
std::complex<double> k2_eigenfunction(SpaceKind space, double h2,
                                      double point);

// Circle eigenfunction of K1 at eigenvalue h1 > 0, obtained from the K2 one
// by a quarter-turn shift; singular at theta in {pi/2, 3 pi/2} (mod 2pi).
std::complex<double> k1_eigenfunction_circle(double h1, double theta);

// Closed form of the Fourier coefficient c_n of the circle K2 eigenfunction
// (h2 > 0): c_n = (-1)^n e^{-i pi/4} e^{-pi h2/2} ((1/2-n+i h2)_n / n!)
//               * F(1/2+i h2, -n; 1/2-n+i h2; -1).
std::complex<double> k2_circle_coefficient(double h2, int n);

// --- reproducing kernels ----------------------------------------------------

// Which kernel to evaluate; the circle kernels need the regularization
// epsilon of HilbertConfig to stay finite at coincident points.
enum class KernelSpace { HardyCircle, WeightedCircle, Disc, BGSeries,
                         SGSeries };

// Value of the reproducing kernel K(p2, p1) = sum_n phi_n(p1) conj(phi_n(p2))
// over the orthonormal modes of the chosen space.  Circle points are angles
// (kernel depends on theta1 - theta2); Disc points must lie in the open
// disc; BGSeries/SGSeries take the eigenvalue-plane points and yield the
// entire kernels g_k(conj(z2) z1) and exp(conj(a2) a1).  With
// kernel_epsilon = 0 a coincident circle pair throws std::domain_error.
std::complex<double> reproducing_kernel(KernelSpace space, BargmannIndex k,
                                        std::complex<double> p2,
                                        std::complex<double> p1,
                                        const HilbertConfig& cfg = {});

// --- disc <-> half-line transform -------------------------------------------

// Kernel (1/sqrt(Gamma(2k))) (1-omega)^{-2k} u^{k-1/2}
//        e^{-(u/2)(1+omega)/(1-omega)}, the generating function pairing the
// disc and half-line orthonormal bases mode by mode.
std::complex<double> disc_halfline_kernel(BargmannIndex k,
                                          std::complex<double> omega,
                                          double u);

// Unitary change of model: expand f in the disc basis and reuse the
// coefficients on the half-line basis (the transform integrates f against
// the kernel above).  Inverse by the conjugate kernel.
HalfLineFunction disc_to_halfline(const DiscFunction& f);
DiscFunction halfline_to_disc(const HalfLineFunction& f);

// Nodes and weights of the n-point generalized Gauss-Laguerre rule for
// integrals over (0, infinity) against u^alpha e^{-u} (alpha > -1), built
// from the symmetric tridiagonal recurrence matrix.  Exact for polynomial
// factors of degree <= 2n-1.
std::pair<Eigen::VectorXd, Eigen::VectorXd> gauss_laguerre(double alpha,
                                                           int n);

// --- group action on the disc -----------------------------------------------

// Weighted substitution operator of a cover element on a disc power series:
//   (U f)(z) = e^{2 i k omega} (1-|gamma|^2)^k (1 + conj(gamma') z)^{-2k}
//              f((alpha z + beta)/(conj(beta) z + conj(alpha)))
// with (alpha, beta) the matrix of g and gamma' = beta/alpha.  Evaluated in
// truncated power-series arithmetic; extra_terms = 0 sizes the truncation
// automatically from |gamma|.  Preserves the disc norm, and composes
// against cover_compose with the factor order swapped:
//   U(g2) U(g1) = U(cover_compose(g1, g2)).
DiscFunction covering_unitary_on_disc(const CoverElement& g,
                                      const DiscFunction& f,
                                      int extra_terms = 0);

// --- circle-time evolution ---------------------------------------------------

// Evolved plain circle mode e^{-i t/2} e^{i n (theta - t)}; solves the
// Schroedinger equation of the k = 1/2 circle Hamiltonian k0.
std::complex<double> hardy_mode_evolution(int n, double t, double theta);

// Global phase e^{-i integral_0^t f(s) ds} produced by adding a
// time-dependent multiple f(t) of the identity to the Hamiltonian.
std::complex<double>
perturbation_phase(const std::function<double(double)>& f, double t);

}  // namespace su11
