#pragma once

// Shared configuration and small validating value types used across the
// library.  Everything numerical downstream is controlled by the tolerances
// collected here; all computations are plain 64-bit floating point.

#include <stdexcept>
#include <string>

namespace su11 {

// Tolerances and cutoffs for the scalar special-function kernels.
struct SpecFunConfig {
    // Relative termination tolerance for power series.
    double series_tol = 1e-15;
    // Hard cap on the number of series terms (must stay >= 64).
    int max_terms = 10000;
    // Argument above which large-argument expansions may take over.
    double asymptotic_switch = 30.0;

    void validate() const {
        if (!(series_tol > 0.0))
            throw std::domain_error("SpecFunConfig: series_tol must be > 0");
        if (max_terms < 64)
            throw std::domain_error("SpecFunConfig: max_terms must be >= 64");
        if (!(asymptotic_switch > 0.0))
            throw std::domain_error("SpecFunConfig: asymptotic_switch must be > 0");
    }
};

// Validated positive real index k labelling a lowest-weight representation.
// Implicit construction from double is deliberate: every k-argument in the
// API gets range-checked exactly once, at the boundary.
class BargmannIndex {
  public:
    BargmannIndex(double k) : k_(k) {
        if (!(k > 0.0))
            throw std::domain_error("BargmannIndex: k must be > 0, got " +
                                    std::to_string(k));
    }
    operator double() const noexcept { return k_; }
    double value() const noexcept { return k_; }

  private:
    double k_;
};

// Knobs for the Hilbert-space realizations (quadrature sizes, kernel
// regularization).
struct HilbertConfig {
    // Uniform trapezoid points on the circle (spectrally accurate for
    // periodic integrands).
    int circle_points = 1 << 12;
    // Gauss-Laguerre node count on the half-line.
    int halfline_nodes = 128;
    // Regularization epsilon for circle reproducing kernels at coincident
    // points: the unit-modulus factor is shrunk to (1 - epsilon).
    double kernel_epsilon = 1e-8;
};

}  // namespace su11
