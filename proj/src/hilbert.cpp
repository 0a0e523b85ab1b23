#include "su11/hilbert.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <stdexcept>

#include "su11/specfun.hpp"

namespace su11 {

namespace {

using cplx = std::complex<double>;
constexpr double kPi = 3.14159265358979323846;

const cplx kI(0.0, 1.0);

// sqrt((2k + n) / (n + 1)): the step ratio of the orthonormalizing weights
// w_n = sqrt((2k)_n / n!).
double weight_step(double twok, int n) {
    return std::sqrt((twok + n) / (n + 1.0));
}

// Entire series sum_m (-w)^m / (m! Gamma(2k + m)); carries the whole
// small-argument structure of the half-line BG closed form.
cplx scaled_bessel_series(double twok, cplx w) {
    cplx term = std::exp(-std::lgamma(twok));
    cplx sum = term;
    for (int m = 0; m < 1000; ++m) {
        term *= -w / ((m + 1.0) * (twok + m));
        sum += term;
        if (std::abs(term) <= 1e-17 * (std::abs(sum) + 1e-300) && m > 4)
            return sum;
    }
    throw std::runtime_error("hilbert: half-line kernel series stalled");
}

void check_circle_point(cplx point) {
    if (point.imag() != 0.0)
        throw std::invalid_argument(
            "hilbert: circle points are real angles");
}

void check_perelomov(cplx lambda) {
    if (!(std::abs(lambda) < 1.0))
        throw std::domain_error(
            "hilbert: Perelomov parameter needs |lambda| < 1");
}

void check_k_half(BargmannIndex k) {
    if (std::abs(k.value() - 0.5) > 1e-12)
        throw std::invalid_argument(
            "hilbert: the plain circle model is fixed at k = 1/2");
}

void check_halfline_point(double u) {
    if (!(u > 0.0))
        throw std::domain_error("hilbert: half-line point must be u > 0");
}

// Leading amplitude of the normalized coherent state.
double head_amplitude(CoherentFamily family, BargmannIndex k, double x) {
    switch (family) {
        case CoherentFamily::BG:
            return 1.0 / std::sqrt(g_k(x, k));
        case CoherentFamily::Perelomov:
            return std::pow(1.0 - x, k.value());
        case CoherentFamily::SG:
            return std::exp(-0.5 * x);
    }
    return 0.0;
}

// c_{n+1} / c_n for the coherent amplitudes.
cplx amplitude_step(CoherentFamily family, double twok, cplx param, int n) {
    switch (family) {
        case CoherentFamily::BG:
            return param / std::sqrt((twok + n) * (n + 1.0));
        case CoherentFamily::Perelomov:
            return param * std::sqrt((twok + n) / (n + 1.0));
        case CoherentFamily::SG:
            return param / std::sqrt(n + 1.0);
    }
    return cplx(0.0, 0.0);
}

// Generic mode-sum engine: amplitudes by ratio recurrence, basis values by
// the callback.  Stops once twelve consecutive terms fall below the running
// scale; the cap guards divergent inputs.
cplx mode_sum(CoherentFamily family, BargmannIndex k, cplx param,
              const std::function<cplx(int)>& basis) {
    const double twok = 2.0 * k.value();
    const double x = std::norm(param);
    cplx amp = head_amplitude(family, k, x);
    cplx sum(0.0, 0.0);
    double scale = 0.0;
    int quiet = 0;
    for (int n = 0; n < 100000; ++n) {
        const cplx term = amp * basis(n);
        sum += term;
        scale = std::max(scale, std::abs(term));
        if (std::abs(term) <= 1e-16 * (scale + 1e-300) && n >= 8) {
            if (++quiet >= 12) return sum;
        } else {
            quiet = 0;
        }
        amp *= amplitude_step(family, twok, param, n);
    }
    throw std::runtime_error(
        "hilbert: coherent mode sum did not converge within the term cap");
}

// Truncated product of two power series, both already sized to terms+1.
Eigen::VectorXcd truncated_product(const Eigen::VectorXcd& a,
                                   const Eigen::VectorXcd& b) {
    const int n = static_cast<int>(a.size());
    Eigen::VectorXcd out = Eigen::VectorXcd::Zero(n);
    for (int i = 0; i < n; ++i) {
        if (a[i] == cplx(0.0, 0.0)) continue;
        for (int j = 0; j + i < n; ++j) out[i + j] += a[i] * b[j];
    }
    return out;
}

double wrap_to_turn(double theta) {
    double t = std::fmod(theta, 2.0 * kPi);
    if (t < 0.0) t += 2.0 * kPi;
    return t;
}

}  // namespace

// --- basis evaluation -------------------------------------------------------

cplx hardy_basis_value(int n, double theta) {
    if (n < 0)
        throw std::domain_error("hilbert: circle modes have n >= 0");
    return std::exp(kI * (static_cast<double>(n) * theta));
}

cplx weighted_basis_value(BargmannIndex k, int n, double theta) {
    if (n < 0)
        throw std::domain_error("hilbert: circle modes have n >= 0");
    const double twok = 2.0 * k.value();
    double w = 1.0;
    for (int m = 0; m < n; ++m) w *= weight_step(twok, m);
    return w * std::exp(kI * (static_cast<double>(n) * theta));
}

cplx shifted_basis_value(BargmannIndex k, int n, double theta) {
    if (n < 0)
        throw std::domain_error("hilbert: circle modes have n >= 0");
    return std::exp(kI * ((n + k.value()) * theta));
}

cplx disc_basis_value(BargmannIndex k, int n, cplx omega) {
    if (n < 0)
        throw std::domain_error("hilbert: disc modes have n >= 0");
    if (!(std::abs(omega) < 1.0))
        throw std::domain_error("hilbert: disc point needs |omega| < 1");
    const double twok = 2.0 * k.value();
    cplx v(1.0, 0.0);
    for (int m = 0; m < n; ++m) v *= weight_step(twok, m) * omega;
    return v;
}

double halfline_basis_value(BargmannIndex k, int n, double u) {
    if (n < 0)
        throw std::domain_error("hilbert: half-line modes have n >= 0");
    check_halfline_point(u);
    const double twok = 2.0 * k.value();
    const double norm =
        std::exp(0.5 * (std::lgamma(n + 1.0) - std::lgamma(twok + n)));
    const double pref = std::exp((k.value() - 0.5) * std::log(u) - 0.5 * u);
    return norm * pref * laguerre(n, twok - 1.0, u);
}

// --- pointwise evaluation and scalar products -------------------------------

cplx circle_value(const CircleFunction& f, double theta) {
    cplx mode(1.0, 0.0);
    const cplx step = std::exp(kI * theta);
    cplx sum(0.0, 0.0);
    for (int n = 0; n < f.fourier.size(); ++n) {
        sum += f.fourier[n] * mode;
        mode *= step;
    }
    return sum;
}

cplx disc_value(const DiscFunction& f, cplx omega) {
    if (!(std::abs(omega) < 1.0))
        throw std::domain_error("hilbert: disc point needs |omega| < 1");
    cplx sum(0.0, 0.0);
    for (int n = static_cast<int>(f.taylor.size()) - 1; n >= 0; --n)
        sum = sum * omega + f.taylor[n];
    return sum;
}

cplx halfline_value(const HalfLineFunction& f, double u) {
    check_halfline_point(u);
    const double twok = 2.0 * f.k.value();
    const double pref = std::exp((f.k.value() - 0.5) * std::log(u) - 0.5 * u);
    double lprev = 0.0, lcur = 1.0;
    double norm = std::exp(-0.5 * std::lgamma(twok));
    cplx sum(0.0, 0.0);
    for (int n = 0; n < f.coeffs.size(); ++n) {
        sum += f.coeffs[n] * (norm * pref * lcur);
        const double lnext =
            ((2.0 * n + twok - u) * lcur - (n + twok - 1.0) * lprev) /
            (n + 1.0);
        lprev = lcur;
        lcur = lnext;
        norm *= std::sqrt((n + 1.0) / (twok + n));
    }
    return sum;
}

cplx hardy_inner(const CircleFunction& a, const CircleFunction& b) {
    const int n = static_cast<int>(std::min(a.fourier.size(), b.fourier.size()));
    cplx sum(0.0, 0.0);
    for (int m = 0; m < n; ++m) sum += std::conj(a.fourier[m]) * b.fourier[m];
    return sum;
}

cplx weighted_inner(const CircleFunction& a, const CircleFunction& b) {
    if (a.k.value() != b.k.value())
        throw std::invalid_argument("hilbert: weighted product needs equal k");
    const double twok = 2.0 * a.k.value();
    const int n = static_cast<int>(std::min(a.fourier.size(), b.fourier.size()));
    cplx sum(0.0, 0.0);
    double w = 1.0;  // n!/(2k)_n
    for (int m = 0; m < n; ++m) {
        sum += w * std::conj(a.fourier[m]) * b.fourier[m];
        w *= (m + 1.0) / (twok + m);
    }
    return sum;
}

cplx disc_inner(const DiscFunction& a, const DiscFunction& b) {
    if (a.k.value() != b.k.value())
        throw std::invalid_argument("hilbert: disc product needs equal k");
    const double twok = 2.0 * a.k.value();
    const int n = static_cast<int>(std::min(a.taylor.size(), b.taylor.size()));
    cplx sum(0.0, 0.0);
    double w = 1.0;
    for (int m = 0; m < n; ++m) {
        sum += w * std::conj(a.taylor[m]) * b.taylor[m];
        w *= (m + 1.0) / (twok + m);
    }
    return sum;
}

cplx halfline_inner(const HalfLineFunction& a, const HalfLineFunction& b) {
    if (a.k.value() != b.k.value())
        throw std::invalid_argument(
            "hilbert: half-line product needs equal k");
    const int n = static_cast<int>(std::min(a.coeffs.size(), b.coeffs.size()));
    cplx sum(0.0, 0.0);
    for (int m = 0; m < n; ++m) sum += std::conj(a.coeffs[m]) * b.coeffs[m];
    return sum;
}

// --- circle generators ------------------------------------------------------

CircleFunction CircleGenerators::k0(const CircleFunction& f) const {
    CircleFunction out{Eigen::VectorXcd(f.fourier.size()), k};
    for (int n = 0; n < f.fourier.size(); ++n)
        out.fourier[n] = (n + k.value()) * f.fourier[n];
    return out;
}

CircleFunction CircleGenerators::kplus(const CircleFunction& f) const {
    CircleFunction out{Eigen::VectorXcd::Zero(f.fourier.size() + 1), k};
    const double twok = 2.0 * k.value();
    for (int n = 0; n < f.fourier.size(); ++n)
        out.fourier[n + 1] = (n + twok) * f.fourier[n];
    return out;
}

CircleFunction CircleGenerators::kminus(const CircleFunction& f) const {
    const int m = std::max<int>(1, static_cast<int>(f.fourier.size()) - 1);
    CircleFunction out{Eigen::VectorXcd::Zero(m), k};
    for (int n = 1; n < f.fourier.size(); ++n)
        out.fourier[n - 1] = static_cast<double>(n) * f.fourier[n];
    return out;
}

CircleGenerators hardy_generators(BargmannIndex k) { return CircleGenerators{k}; }

// --- half-line generators ---------------------------------------------------

namespace {

struct FdSamples {
    cplx fm, f0, fp;
    double h;
};

FdSamples fd_samples(const std::function<cplx(double)>& f, double u,
                     double step) {
    const double h = std::min(step * std::max(1.0, u), 0.5 * u);
    return {f(u - h), f(u), f(u + h), h};
}

}  // namespace

cplx HalfLineGenerators::k0(const std::function<cplx(double)>& f,
                            double u) const {
    check_halfline_point(u);
    const FdSamples s = fd_samples(f, u, fd_step);
    const cplx d1 = (s.fp - s.fm) / (2.0 * s.h);
    const cplx d2 = (s.fp - 2.0 * s.f0 + s.fm) / (s.h * s.h);
    const double twok = 2.0 * k.value();
    const double pot = (twok - 1.0) * (twok - 1.0) / (4.0 * u) + 0.25 * u;
    return -u * d2 - d1 + pot * s.f0;
}

cplx HalfLineGenerators::k1(const std::function<cplx(double)>& f,
                            double u) const {
    check_halfline_point(u);
    const FdSamples s = fd_samples(f, u, fd_step);
    const cplx d1 = (s.fp - s.fm) / (2.0 * s.h);
    const cplx d2 = (s.fp - 2.0 * s.f0 + s.fm) / (s.h * s.h);
    const double twok = 2.0 * k.value();
    const double pot = (twok - 1.0) * (twok - 1.0) / (4.0 * u) - 0.25 * u;
    return -u * d2 - d1 + pot * s.f0;
}

cplx HalfLineGenerators::k2(const std::function<cplx(double)>& f,
                            double u) const {
    check_halfline_point(u);
    const FdSamples s = fd_samples(f, u, fd_step);
    const cplx d1 = (s.fp - s.fm) / (2.0 * s.h);
    return -kI * (u * d1 + 0.5 * s.f0);
}

HalfLineGenerators halfline_generators(BargmannIndex k) {
    return HalfLineGenerators{k};
}

// --- coherent-state wavefunctions -------------------------------------------

cplx coherent_wavefunction(SpaceKind space, CoherentFamily family,
                           BargmannIndex k, cplx param, cplx point) {
    if (family == CoherentFamily::Perelomov) check_perelomov(param);
    const double twok = 2.0 * k.value();
    const double x = std::norm(param);

    switch (space) {
        case SpaceKind::CircleKHalf:
        case SpaceKind::CircleWeighted: {
            if (space == SpaceKind::CircleKHalf) check_k_half(k);
            check_circle_point(point);
            const cplx phase = std::exp(kI * point.real());
            if (family == CoherentFamily::BG)
                return std::exp(param * phase) / std::sqrt(g_k(x, k));
            if (family == CoherentFamily::Perelomov)
                return std::pow(1.0 - x, k.value()) *
                       std::pow(1.0 - param * phase, -twok);
            // SG has no elementary circle form; sum the weighted modes.
            cplx mode(1.0, 0.0);
            return mode_sum(family, k, param, [&](int n) {
                const cplx v = mode;
                mode *= weight_step(twok, n) * phase;
                return v;
            });
        }
        case SpaceKind::Disc: {
            if (!(std::abs(point) < 1.0))
                throw std::domain_error(
                    "hilbert: disc point needs |omega| < 1");
            if (family == CoherentFamily::BG)
                return std::exp(param * point) / std::sqrt(g_k(x, k));
            if (family == CoherentFamily::Perelomov)
                return std::pow(1.0 - x, k.value()) *
                       std::pow(1.0 - param * point, -twok);
            cplx mode(1.0, 0.0);
            return mode_sum(family, k, param, [&](int n) {
                const cplx v = mode;
                mode *= weight_step(twok, n) * point;
                return v;
            });
        }
        case SpaceKind::HalfLine: {
            const double u = point.real();
            check_halfline_point(u);
            const double pref =
                std::exp((k.value() - 0.5) * std::log(u) - 0.5 * u);
            if (family == CoherentFamily::BG) {
                const double root_gamma =
                    std::exp(0.5 * std::lgamma(twok));
                return root_gamma / std::sqrt(g_k(x, k)) * std::exp(param) *
                       pref * scaled_bessel_series(twok, u * param);
            }
            if (family == CoherentFamily::Perelomov) {
                // pref already carries e^{-u/2}; the remaining factor
                // e^{-u lambda / (1 - lambda)} completes the Laguerre
                // generating-function exponent -(u/2)(1+lambda)/(1-lambda).
                const cplx one_minus = 1.0 - param;
                return std::pow(1.0 - x, k.value()) *
                       std::pow(one_minus, -twok) * pref *
                       std::exp(-u * param / one_minus) *
                       std::exp(-0.5 * std::lgamma(twok));
            }
            // SG: Laguerre recurrence under the mode sum.
            double lprev = 0.0, lcur = 1.0;
            double norm = std::exp(-0.5 * std::lgamma(twok));
            return mode_sum(family, k, param, [&](int n) {
                const cplx v = norm * pref * lcur;
                const double lnext = ((2.0 * n + twok - u) * lcur -
                                      (n + twok - 1.0) * lprev) /
                                     (n + 1.0);
                lprev = lcur;
                lcur = lnext;
                norm *= std::sqrt((n + 1.0) / (twok + n));
                return v;
            });
        }
    }
    throw std::invalid_argument("hilbert: unknown space");
}

double coherent_density(SpaceKind space, CoherentFamily family,
                        BargmannIndex k, cplx param, cplx point) {
    if (space == SpaceKind::CircleWeighted)
        throw std::invalid_argument(
            "hilbert: the weighted circle has no pointwise density");
    return std::norm(coherent_wavefunction(space, family, k, param, point));
}

// --- generalized eigenfunctions ----------------------------------------------

cplx k2_eigenfunction(SpaceKind space, double h2, double point) {
    if (space == SpaceKind::HalfLine) {
        check_halfline_point(point);
        return std::exp((kI * h2 - 0.5) * std::log(point)) /
               std::sqrt(2.0 * kPi);
    }
    if (space != SpaceKind::CircleKHalf)
        throw std::invalid_argument(
            "hilbert: K2 eigenfunctions live on the plain circle or the "
            "half-line");
    if (!(h2 > 0.0))
        throw std::domain_error(
            "hilbert: the circle K2 eigenfunction is implemented for h2 > 0");
    const double t = wrap_to_turn(point);
    const double s = std::abs(std::sin(t));
    if (s < 1e-12 || t < 1e-12 || 2.0 * kPi - t < 1e-12)
        throw std::domain_error(
            "hilbert: circle K2 eigenfunction is singular at theta in "
            "{0, pi}");
    cplx value = std::exp(-kI * (0.5 * t)) / std::sqrt(2.0 * s) *
                 std::exp(kI * (h2 * std::log(std::abs(std::tan(0.5 * t)))));
    if (t > kPi) value *= kI * std::exp(-kPi * h2);
    return value;
}

cplx k1_eigenfunction_circle(double h1, double theta) {
    return k2_eigenfunction(SpaceKind::CircleKHalf, h1, theta + 0.5 * kPi);
}

cplx k2_circle_coefficient(double h2, int n) {
    if (!(h2 > 0.0))
        throw std::domain_error(
            "hilbert: circle coefficients are implemented for h2 > 0");
    if (n < 0)
        throw std::domain_error("hilbert: circle modes have n >= 0");
    const cplx a(0.5, h2);
    const cplx c = cplx(0.5 - n, h2);
    cplx poch(1.0, 0.0);
    double factorial = 1.0;
    for (int m = 0; m < n; ++m) {
        poch *= c + static_cast<double>(m);
        factorial *= m + 1.0;
    }
    const double sign = (n % 2 == 0) ? 1.0 : -1.0;
    return sign * std::exp(-kI * (0.25 * kPi)) * std::exp(-0.5 * kPi * h2) *
           (poch / factorial) *
           hypergeom_2f1_terminating(a, n, c, cplx(-1.0, 0.0));
}

// --- reproducing kernels ------------------------------------------------------

cplx reproducing_kernel(KernelSpace space, BargmannIndex k, cplx p2, cplx p1,
                        const HilbertConfig& cfg) {
    switch (space) {
        case KernelSpace::HardyCircle:
        case KernelSpace::WeightedCircle: {
            check_circle_point(p1);
            check_circle_point(p2);
            const cplx q = (1.0 - cfg.kernel_epsilon) *
                           std::exp(kI * (p1.real() - p2.real()));
            const cplx denom = 1.0 - q;
            if (std::abs(denom) < 1e-14)
                throw std::domain_error(
                    "hilbert: circle kernel is singular at coincident "
                    "points; set kernel_epsilon > 0");
            if (space == KernelSpace::HardyCircle) {
                check_k_half(k);
                return 1.0 / denom;
            }
            return std::pow(denom, -2.0 * k.value());
        }
        case KernelSpace::Disc: {
            if (!(std::abs(p1) < 1.0) || !(std::abs(p2) < 1.0))
                throw std::domain_error(
                    "hilbert: disc kernel points need |omega| < 1");
            return std::pow(1.0 - std::conj(p2) * p1, -2.0 * k.value());
        }
        case KernelSpace::BGSeries:
            return g_k(std::conj(p2) * p1, k);
        case KernelSpace::SGSeries:
            return std::exp(std::conj(p2) * p1);
    }
    throw std::invalid_argument("hilbert: unknown kernel space");
}

// --- disc <-> half-line transform ----------------------------------------------

cplx disc_halfline_kernel(BargmannIndex k, cplx omega, double u) {
    if (!(std::abs(omega) < 1.0))
        throw std::domain_error("hilbert: kernel needs |omega| < 1");
    check_halfline_point(u);
    const double twok = 2.0 * k.value();
    const cplx one_minus = 1.0 - omega;
    return std::exp(-0.5 * std::lgamma(twok)) *
           std::pow(one_minus, -twok) *
           std::exp((k.value() - 0.5) * std::log(u)) *
           std::exp(-0.5 * u * (1.0 + omega) / one_minus);
}

HalfLineFunction disc_to_halfline(const DiscFunction& f) {
    const double twok = 2.0 * f.k.value();
    HalfLineFunction out{Eigen::VectorXcd(f.taylor.size()), f.k};
    double w = 1.0;  // sqrt((2k)_n / n!)
    for (int n = 0; n < f.taylor.size(); ++n) {
        out.coeffs[n] = f.taylor[n] / w;
        w *= weight_step(twok, n);
    }
    return out;
}

DiscFunction halfline_to_disc(const HalfLineFunction& f) {
    const double twok = 2.0 * f.k.value();
    DiscFunction out{Eigen::VectorXcd(f.coeffs.size()), f.k};
    double w = 1.0;
    for (int n = 0; n < f.coeffs.size(); ++n) {
        out.taylor[n] = f.coeffs[n] * w;
        w *= weight_step(twok, n);
    }
    return out;
}

std::pair<Eigen::VectorXd, Eigen::VectorXd> gauss_laguerre(double alpha,
                                                           int n) {
    if (!(alpha > -1.0))
        throw std::domain_error("hilbert: Gauss-Laguerre needs alpha > -1");
    if (n < 1)
        throw std::domain_error("hilbert: Gauss-Laguerre needs n >= 1");
    // Newton iteration on the recurrence.  Unlike the eigenvalue route,
    // the derivative-based weights keep full relative accuracy even where
    // they are exponentially small, so e^{+u}-unweighted integrands stay
    // usable across the whole node range.
    Eigen::VectorXd nodes(n), weights(n);
    const double log_wscale = std::lgamma(alpha + n) - std::lgamma(n);
    const double rescale = 1e-270;
    double z = 0.0;
    for (int i = 0; i < n; ++i) {
        if (i == 0) {
            z = (1.0 + alpha) * (3.0 + 0.92 * alpha) /
                (1.0 + 2.4 * n + 1.8 * alpha);
        } else if (i == 1) {
            z += (15.0 + 6.25 * alpha) / (1.0 + 0.9 * alpha + 2.5 * n);
        } else {
            const double ai = i - 1;
            z += ((1.0 + 2.55 * ai) / (1.9 * ai) +
                  1.26 * ai * alpha / (1.0 + 3.5 * ai)) *
                 (z - nodes[i - 2]) / (1.0 + 0.3 * alpha);
        }
        double p1 = 1.0, p2 = 0.0, pp = 0.0;
        int rescales = 0;
        bool converged = false;
        double last_step = 0.0;
        for (int it = 0; it < 100; ++it) {
            p1 = 1.0;
            p2 = 0.0;
            rescales = 0;
            for (int j = 0; j < n; ++j) {
                const double p3 = p2;
                p2 = p1;
                p1 = ((2.0 * j + 1.0 + alpha - z) * p2 -
                      (j + alpha) * p3) /
                     (j + 1.0);
                // Far outside the oscillatory range the values grow like
                // e^{z/2}; pull them back before they overflow.
                if (std::abs(p1) > 1e270) {
                    p1 *= rescale;
                    p2 *= rescale;
                    ++rescales;
                }
            }
            pp = (n * p1 - (n + alpha) * p2) / z;
            const double step = p1 / pp;
            z -= step;
            // Converged outright, or bouncing inside the rounding floor of
            // the length-n recurrence.
            if (std::abs(step) <= 1e-14 * std::max(1.0, z) ||
                (it >= 3 && std::abs(step) >= 0.99 * last_step)) {
                converged = true;
                break;
            }
            last_step = std::abs(step);
        }
        if (!converged)
            throw std::runtime_error(
                "hilbert: Gauss-Laguerre root search stalled");
        nodes[i] = z;
        if (rescales == 0) {
            weights[i] = -std::exp(log_wscale) / (pp * n * p2);
        } else {
            // Undo the rescaling in log space; far-tail weights underflow
            // to zero gracefully.
            const double log_mag = log_wscale - std::log(double(n)) -
                                   std::log(std::abs(pp)) -
                                   std::log(std::abs(p2)) +
                                   2.0 * rescales * std::log(rescale);
            const double sign = (pp * p2 > 0.0) ? -1.0 : 1.0;
            weights[i] = sign * std::exp(log_mag);
        }
    }
    return {nodes, weights};
}

// --- group action on the disc ---------------------------------------------------

DiscFunction covering_unitary_on_disc(const CoverElement& g,
                                      const DiscFunction& f,
                                      int extra_terms) {
    const double twok = 2.0 * f.k.value();
    const double x = std::norm(g.gamma);
    const int degree = static_cast<int>(f.taylor.size()) - 1;
    if (extra_terms <= 0) {
        if (x < 1e-26) {
            extra_terms = 0;
        } else {
            // Geometric tails decay like |gamma|^m; push them below 1e-18.
            const double needed = std::ceil(std::log(1e-18) / std::log(x) * 2.0);
            extra_terms = std::min(1500, std::max(32, static_cast<int>(needed)));
        }
    }
    const int terms = degree + 1 + extra_terms;

    const Eigen::Matrix2cd m = cover_project(g);
    const cplx alpha = m(0, 0);
    const cplx beta = m(0, 1);

    // Geometric expansion of 1/(conj(beta) z + conj(alpha)).
    Eigen::VectorXcd recip(terms);
    const cplx ratio = -std::conj(beta) / std::conj(alpha);
    recip[0] = 1.0 / std::conj(alpha);
    for (int i = 1; i < terms; ++i) recip[i] = recip[i - 1] * ratio;

    // Moebius image w(z) = (alpha z + beta) * recip(z).
    Eigen::VectorXcd mob(terms);
    mob[0] = beta * recip[0];
    for (int i = 1; i < terms; ++i)
        mob[i] = alpha * recip[i - 1] + beta * recip[i];

    // Horner composition f(w(z)) in truncated arithmetic.
    Eigen::VectorXcd comp = Eigen::VectorXcd::Zero(terms);
    for (int j = degree; j >= 0; --j) {
        comp = truncated_product(comp, mob);
        comp[0] += f.taylor[j];
    }

    // Multiplier (1 + conj(gamma) z)^{-2k} by the binomial recurrence.
    Eigen::VectorXcd mult(terms);
    mult[0] = 1.0;
    for (int i = 0; i + 1 < terms; ++i)
        mult[i + 1] = mult[i] * std::conj(g.gamma) * (-twok - i) / (i + 1.0);

    const cplx scale = std::exp(kI * (twok * g.omega)) *
                       std::pow(1.0 - x, f.k.value());
    DiscFunction out{scale * truncated_product(mult, comp), f.k};
    return out;
}

// --- circle-time evolution --------------------------------------------------------

cplx hardy_mode_evolution(int n, double t, double theta) {
    if (n < 0)
        throw std::domain_error("hilbert: circle modes have n >= 0");
    return std::exp(-kI * (0.5 * t)) *
           std::exp(kI * (static_cast<double>(n) * (theta - t)));
}

cplx perturbation_phase(const std::function<double(double)>& f, double t) {
    // Adaptive Simpson for the accumulated phase integral.
    std::function<double(double, double, double, double, double, double, int)>
        refine = [&](double a, double b, double fa, double fb, double fm,
                     double whole, int depth) -> double {
        const double m = 0.5 * (a + b);
        const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
        const double flm = f(lm), frm = f(rm);
        const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
        const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
        if (depth <= 0 || std::abs(left + right - whole) < 1e-13)
            return left + right + (left + right - whole) / 15.0;
        return refine(a, m, fa, fm, flm, left, depth - 1) +
               refine(m, b, fm, fb, frm, right, depth - 1);
    };
    double integral = 0.0;
    if (t != 0.0) {
        const double fa = f(0.0), fb = f(t), fm = f(0.5 * t);
        const double whole = t / 6.0 * (fa + 4.0 * fm + fb);
        integral = refine(0.0, t, fa, fb, fm, whole, 30);
    }
    return std::exp(-kI * integral);
}

}  // namespace su11
