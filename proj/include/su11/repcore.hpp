#pragma once

#include <Eigen/Dense>
#include <array>
#include <complex>
#include <utility>
#include <vector>

#include "su11/config.hpp"

namespace su11 {

// Truncated N x N matrix realization of the lowest-weight family labeled by
// the positive index k.  K0 is diagonal with entries n + k; Kplus carries the
// single subdiagonal sqrt((2k+n)(n+1)); Kminus is its conjugate transpose.
// The composite ladder pair A = (K0+k)^{-1/2} Kminus, Adag = Kplus
// (K0+k)^{-1/2} acts canonically (sqrt(n), sqrt(n+1)) independent of k, and
// Q = (A+Adag)/sqrt(2), P = i(Adag-A)/sqrt(2) in dimensionless units.
// Algebraic identities hold exactly on the top-left (N-2) x (N-2) block; the
// final basis vector breaks ladder closure by construction.
struct TruncatedRep {
    BargmannIndex k;
    int dim;
    Eigen::MatrixXcd K0, Kplus, Kminus, K1, K2, A, Adag, Nop, Q, P;
    double omega = 1.0;
    double hbar = 1.0;
};

// Element (gamma, omega) of the universal cover: |gamma| < 1, omega real
// (unbounded).  Projects to SU(1,1) via alpha = e^{i omega}/sqrt(1-|gamma|^2),
// beta = gamma * alpha.
struct CoverElement {
    std::complex<double> gamma{0.0, 0.0};
    double omega = 0.0;

    CoverElement() = default;
    CoverElement(std::complex<double> g, double w);  // validates |g| < 1
};

// Evenly spaced ladder spectrum E_n = hbar * omega * (n + k).
struct EnergySpectrum {
    BargmannIndex k;
    double omega;
    std::vector<double> levels;
};

// The rational lattice {mu/m : mu = 1, 2, ...} of indices compatible with an
// m-sheeted cover, with minimum 1/m.
struct AdmissibleK {
    int m;
    double minimum;
    std::array<double, 16> first_values;
    bool contains(double k, double tol = 1e-9) const;
};

// Default truncation dimension and the hard cap accepted by builders.
inline constexpr int kDefaultDim = 64;
inline constexpr int kMaxDim = 1024;

// Build the truncated realization.  Throws std::domain_error for N < 2,
// N > kMaxDim, or non-positive omega / hbar.
TruncatedRep build_rep(BargmannIndex k, int N = kDefaultDim,
                       double omega = 1.0, double hbar = 1.0);

// levels[n] = hbar * omega * (n + k) for n = 0..n_max.
EnergySpectrum spectrum(BargmannIndex k, int n_max, double omega = 1.0,
                        double hbar = 1.0);

// One oscillator mode of dimension N (even, >= 4) carries two irreducible
// pieces: K0 = (2 a†a + 1)/4, K± = a†²/2, a²/2 restricted to the even and odd
// Fock sectors give the k = 1/4 and k = 3/4 realizations (each of dimension
// N/2), entrywise equal to build_rep on the interior block.
std::pair<TruncatedRep, TruncatedRep> metaplectic_split(int N);

// Two oscillator modes with the occupation difference n2 - n1 fixed at d >= 0
// carry K+ = a1†a2†, K- = a1a2, K0 = (N1+N2+1)/2; on that subspace the
// realization equals build_rep(k = (1+d)/2, N) entrywise (verified
// internally, throws std::logic_error on mismatch).
TruncatedRep two_mode_rep(int d, int N = kDefaultDim);

// Index lattice admissible for an m-sheeted cover (m >= 1).
AdmissibleK admissible_k(int m);

// Composition g2 ∘ g1 on the cover.  The angle parameter uses the principal
// branch, omega3 = omega1 + omega2 + Arg(1 + conj(gamma1) gamma2
// e^{-2i omega1}) with Arg in (-pi, pi].  Projecting with cover_project
// turns composition into SU(1,1) matrix multiplication.
CoverElement cover_compose(const CoverElement& g2, const CoverElement& g1);

// Inverse on the cover: (-gamma e^{2i omega}, -omega).
CoverElement cover_inverse(const CoverElement& g);

// Projection to SU(1,1): [[alpha, beta], [conj(beta), conj(alpha)]] with
// alpha = e^{i omega}/sqrt(1-|gamma|^2), beta = gamma * alpha.
Eigen::Matrix2cd cover_project(const CoverElement& g);

// One-parameter subgroups of the cover (compact rotation, two hyperbolic
// boosts, parabolic shear).
CoverElement rotation_element(double theta);  // (0, theta/2)
CoverElement boost_a_element(double tau);     // (i tanh(tau/2), 0)
CoverElement boost_b_element(double s);       // (tanh(s/2), 0)
CoverElement shear_element(double xi);        // (xi e^{-i w}/sqrt(xi²+4), w = atan(xi/2))

// U(t) = exp(-i K0 wt), diagonal phases e^{-i(n+k) w t}.  U(2 pi / omega) is
// the central element e^{-2 pi i k} * identity; conjugation rotates (K1, K2)
// and (Q, P) by the angle omega * t on the interior block.
Eigen::MatrixXcd time_evolution(const TruncatedRep& rep, double t);

// Space reflection U at angle -pi: diagonal e^{i(n+k)pi}.  The k-dependent
// global phase e^{i k pi} is exposed, not normalized away.
Eigen::MatrixXcd parity(const TruncatedRep& rep);

// S = exp((gamma/2)(A² - A†²)); conjugation sends Q to e^{gamma} Q and P to
// e^{-gamma} P up to truncation error that shrinks with growing dimension.
Eigen::MatrixXcd squeeze(const TruncatedRep& rep, double gamma);

// Dense matrix exponential, Pade-13 scaling and squaring.
Eigen::MatrixXcd expm(const Eigen::MatrixXcd& m);

}  // namespace su11
