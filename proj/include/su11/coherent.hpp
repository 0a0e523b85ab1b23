#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "su11/config.hpp"
#include "su11/repcore.hpp"

namespace su11 {

// Three coherent-state families over the index-k ladder:
//   BG        — lowering-eigenstate of Kminus with eigenvalue z (any complex),
//   Perelomov — eigenstate of (K0+k)^{-1} Kminus with eigenvalue lambda,
//               |lambda| < 1,
//   SG        — eigenstate of the canonical A with eigenvalue alpha.
// Parameters carry e^{-i phi} phases: the classical angle phi enters as
// z = I e^{-i phi}, lambda = |lambda| e^{-i phi}, alpha = |alpha| e^{-i phi}.
enum class CoherentFamily { BG, Perelomov, SG };

// Truncated amplitude vector of a normalized coherent state.  tail_bound is
// an analytic upper bound on the probability mass beyond the truncation;
// sum |amplitudes|^2 + tail_bound lies within 1e-12 of 1.
struct CoherentState {
    CoherentFamily family;
    BargmannIndex k;
    std::complex<double> param;
    Eigen::VectorXcd amplitudes;
    double tail_bound;
};

// First and second moments of (K0, K1, K2) and the level number in a
// coherent state, from closed forms (BG, Perelomov) or rapidly convergent
// series (the SG transverse moments, which have no elementary form).
struct ExpectationReport {
    double mean_K0, mean_K1, mean_K2, mean_N;
    double var_K0, var_K1, var_K2;
};

// Angle/action pair encoded by a coherent-state parameter.
struct ClassicalParams {
    double phi;
    double action;
};

// Build the normalized truncated state.  With n = 0 (the default) the
// truncation is auto-selected as the smallest dimension whose analytic tail
// bound drops below 1e-12 (capped at kMaxDim, error beyond); an explicit n
// must reach tail_bound < 1e-10 or std::runtime_error is thrown.  Perelomov
// parameters require |param| < 1 (std::domain_error).
CoherentState make_state(CoherentFamily family, BargmannIndex k,
                         std::complex<double> param, int n = 0);

// Moments per family; each matches the truncated matrix sandwich to 1e-9.
ExpectationReport expectations(CoherentFamily family, BargmannIndex k,
                               std::complex<double> param);

// Probabilities p(0..n_max) of finding the state on ladder level n.
std::vector<double> number_distribution(CoherentFamily family,
                                        BargmannIndex k,
                                        std::complex<double> param,
                                        int n_max);

// Inner product <a|b> (first argument conjugated).  Uses the closed forms
// for same-family pairs and the BG-Perelomov pair, a truncated amplitude sum
// otherwise.  Throws std::invalid_argument when the indices differ.
std::complex<double> overlap(const CoherentState& a, const CoherentState& b);

// Evolution by the dimensionless time t (units of 1/omega): the parameter
// rotates by e^{-it}, the amplitudes pick up phases e^{-i(n+k)t}; family and
// |param| are preserved.
CoherentState evolve(const CoherentState& state, double t);

// U = exp(alpha Adag - conj(alpha) A); U|k,0> carries the SG amplitudes and
// conjugation shifts A by alpha on the interior block.  Throws
// std::runtime_error when the rep dimension cannot hold the displaced state
// (analytic tail bound above 1e-8).
Eigen::MatrixXcd displacement_unitary(std::complex<double> alpha,
                                      const TruncatedRep& rep);

// U = exp((w Kplus - conj(w) Kminus)/2); U|k,0> is the Perelomov state with
// lambda = tanh(|w|/2) e^{i arg w}, and <k,0|U† K0 U|k,0> = k cosh|w|.
// Same truncation guard as displacement_unitary.
Eigen::MatrixXcd perelomov_unitary(std::complex<double> w,
                                   const TruncatedRep& rep);

// Non-unitary generator F = exp(z Kplus (K0+k)^{-1}); F|k,0> equals
// sqrt(g_k(|z|^2)) times the BG state on the truncated basis.
Eigen::MatrixXcd bg_generator(std::complex<double> z,
                              const TruncatedRep& rep);

// The classical (phi, I) pair the parameter encodes: BG (-arg z, |z|),
// Perelomov (-arg lambda, 2|lambda|/(1-|lambda|^2)), SG (-arg alpha,
// |alpha|^2).
ClassicalParams classical_params(CoherentFamily family, BargmannIndex k,
                                 std::complex<double> param);

// Linear interaction W(theta) = (Kplus e^{-i theta} + Kminus e^{i theta})/2.
Eigen::MatrixXcd interaction_w(double theta, const TruncatedRep& rep);

}  // namespace su11
