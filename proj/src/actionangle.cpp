#include "su11/actionangle.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>

namespace su11 {

namespace {

using cplx = std::complex<double>;

void check_state(const AngleAction& s) {
    if (!(s.I > 0.0))
        throw std::domain_error("angle-action point requires I > 0");
    if (!std::isfinite(s.phi))
        throw std::domain_error("angle-action point requires finite phi");
}

// ---------------------------------------------------------------------------
// Adaptive Gauss-Kronrod 7-15 quadrature.

constexpr double kXgk[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769,
    0.741531185599394, 0.586087235467691, 0.405845151377397,
    0.207784955007898, 0.000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250,
    0.140653259715525, 0.169004726639267, 0.190350578064785,
    0.204432940075298, 0.209482141084728};
constexpr double kWg[4] = {0.129484966168870, 0.279705391489277,
                           0.381830050505119, 0.417959183673469};

struct PanelResult {
    double kronrod;
    double error;
};

template <typename F>
PanelResult gk15(const F& f, double a, double b) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double resk = kWgk[7] * f(mid);
    double resg = kWg[3] * f(mid);
    for (int j = 0; j < 7; ++j) {
        const double dx = half * kXgk[j];
        const double fsum = f(mid - dx) + f(mid + dx);
        resk += kWgk[j] * fsum;
        if (j % 2 == 1) resg += kWg[j / 2] * fsum;
    }
    return {resk * half, std::abs((resk - resg) * half)};
}

template <typename F>
double adaptive_gk(const F& f, double a, double b, double tol, int depth) {
    const PanelResult r = gk15(f, a, b);
    if (r.error <= tol || depth >= 40) return r.kronrod;
    const double mid = 0.5 * (a + b);
    return adaptive_gk(f, a, mid, 0.5 * tol, depth + 1) +
           adaptive_gk(f, mid, b, 0.5 * tol, depth + 1);
}

// Integral of sqrt(max(0, e - w(y))) between turning points y- and y+ where
// e - w vanishes; the substitution y = mid + half sin(xi) removes the
// square-root endpoint singularity.
template <typename W>
double turning_point_integral(const W& w, double e, double ylo, double yhi) {
    const double mid = 0.5 * (ylo + yhi);
    const double half = 0.5 * (yhi - ylo);
    const auto f = [&](double xi) {
        const double y = mid + half * std::sin(xi);
        const double v = e - w(y);
        return (v > 0.0 ? std::sqrt(v) : 0.0) * half * std::cos(xi);
    };
    return adaptive_gk(f, -0.5 * M_PI, 0.5 * M_PI, 1e-10, 0);
}

}  // namespace

double wrap_angle(double phi) {
    double w = std::remainder(phi, 2.0 * M_PI);
    if (w <= -M_PI) w += 2.0 * M_PI;
    return w;
}

double PotentialSpec::omega0() const {
    validate();
    const double base = a * std::sqrt(2.0 * V0 / M);
    return kind == PotentialKind::Confining ? 2.0 * base : base;
}

void PotentialSpec::validate() const {
    if (!(V0 > 0.0) || !(a > 0.0) || !(M > 0.0))
        throw std::domain_error(
            "PotentialSpec: V0, a, M must all be positive");
}

PhasePoint to_phase_point(const AngleAction& s) {
    check_state(s);
    const double r = std::sqrt(2.0 * s.I);
    return {r * std::cos(s.phi), -r * std::sin(s.phi)};
}

AngleAction to_angle_action(const PhasePoint& x) {
    if (x.q == 0.0 && x.p == 0.0)
        throw std::domain_error(
            "to_angle_action: the chart is singular at the origin");
    return {wrap_angle(std::atan2(-x.p, x.q)),
            0.5 * (x.q * x.q + x.p * x.p)};
}

HTriplet h_triplet(const AngleAction& s) {
    check_state(s);
    return {s.I, s.I * std::cos(s.phi), -s.I * std::sin(s.phi)};
}

HTriplet plane_triplet(const PhasePoint& x) {
    return {0.25 * (x.q * x.q + x.p * x.p), 0.25 * (x.p * x.p - x.q * x.q),
            -0.5 * x.q * x.p};
}

double generating_function(GeneratingKind which, double x, double y) {
    switch (which) {
        case GeneratingKind::F1: {
            // F1(q, phi) = q^2 tan(phi) / 2
            if (std::abs(std::cos(y)) < 1e-12)
                throw std::domain_error(
                    "generating_function: F1 is singular at cos(phi) = 0");
            return 0.5 * x * x * std::tan(y);
        }
        case GeneratingKind::F2: {
            // F2(q, I) = I arccos(q / sqrt(2I)) - (q/2) sqrt(2I - q^2)
            if (!(y > 0.0) || x * x > 2.0 * y)
                throw std::domain_error(
                    "generating_function: F2 requires q^2 <= 2 I");
            const double c =
                std::clamp(x / std::sqrt(2.0 * y), -1.0, 1.0);
            return y * std::acos(c) -
                   0.5 * x * std::sqrt(std::max(0.0, 2.0 * y - x * x));
        }
        case GeneratingKind::F3:
            // F3(q, p) = q p
            return x * y;
        case GeneratingKind::F4:
            // F4(phi, I) = I cos(phi) sin(phi)
            return y * std::cos(x) * std::sin(x);
    }
    throw std::logic_error("generating_function: unknown kind");
}

namespace {

AngleAction mobius_apply(cplx alpha, cplx beta, const AngleAction& s) {
    check_state(s);
    const cplx eiphi = std::polar(1.0, s.phi);
    const cplx den = alpha + eiphi * beta;
    const cplx rotated = (std::conj(alpha) * eiphi + std::conj(beta)) / den;
    return {wrap_angle(std::arg(rotated)), std::norm(den) * s.I};
}

}  // namespace

AngleAction mobius_action(const CoverElement& g, const AngleAction& s) {
    const Eigen::Matrix2cd m = cover_project(g);
    return mobius_apply(m(0, 0), m(0, 1), s);
}

AngleAction mobius_action(const Eigen::Matrix2cd& g, const AngleAction& s) {
    const cplx alpha = g(0, 0), beta = g(0, 1);
    if (std::abs(g(1, 0) - std::conj(beta)) > 1e-10 ||
        std::abs(g(1, 1) - std::conj(alpha)) > 1e-10)
        throw std::invalid_argument(
            "mobius_action: matrix is not of the form "
            "[[alpha, beta], [conj(beta), conj(alpha)]]");
    if (std::abs(alpha * std::conj(alpha) - beta * std::conj(beta) - 1.0) >
        1e-12)
        throw std::invalid_argument(
            "mobius_action: matrix determinant must be 1");
    return mobius_apply(alpha, beta, s);
}

PhasePoint sp2_action_on_plane(const Eigen::Matrix2d& g, const PhasePoint& x) {
    if (std::abs(g.determinant() - 1.0) > 1e-12)
        throw std::invalid_argument(
            "sp2_action_on_plane: matrix determinant must be 1");
    return {g(0, 0) * x.q + g(0, 1) * x.p, g(1, 0) * x.q + g(1, 1) * x.p};
}

Eigen::Matrix2d r1_matrix(double theta) {
    const double c = std::cos(0.5 * theta), s = std::sin(0.5 * theta);
    Eigen::Matrix2d m;
    m << c, s, -s, c;
    return m;
}

Eigen::Matrix2d a1_matrix(double tau) {
    Eigen::Matrix2d m;
    m << std::exp(-0.5 * tau), 0.0, 0.0, std::exp(0.5 * tau);
    return m;
}

Eigen::Matrix2d b1_matrix(double s) {
    const double c = std::cosh(0.5 * s), h = std::sinh(0.5 * s);
    Eigen::Matrix2d m;
    m << c, h, h, c;
    return m;
}

Eigen::Matrix2d n1_matrix(double xi) {
    Eigen::Matrix2d m;
    m << 1.0, xi, 0.0, 1.0;
    return m;
}

double poisson_bracket(const PhaseField& f, const PhaseField& g,
                       const AngleAction& s) {
    check_state(s);
    const double hphi = 1e-6 * std::max(1.0, std::abs(s.phi));
    const double hI = 1e-6 * std::max(1.0, s.I);
    if (!(s.I - hI > 0.0))
        throw std::runtime_error(
            "poisson_bracket: action too small for the difference step");
    const auto dphi = [&](const PhaseField& u) {
        return (u({s.phi + hphi, s.I}) - u({s.phi - hphi, s.I})) /
               (2.0 * hphi);
    };
    const auto dI = [&](const PhaseField& u) {
        return (u({s.phi, s.I + hI}) - u({s.phi, s.I - hI})) / (2.0 * hI);
    };
    return dphi(f) * dI(g) - dI(f) * dphi(g);
}

AngleAction perturbed_orbit(PerturbationKind kind, double gamma, double t,
                            const AngleAction& initial) {
    check_state(initial);
    if (!(std::abs(gamma) < 1.0))
        throw std::domain_error("perturbed_orbit: requires |gamma| < 1");
    const double omega = std::sqrt(1.0 - gamma * gamma);
    const double phi0 = initial.phi;

    double t0, phi;
    if (kind == PerturbationKind::H1) {
        // dphi/dt = 1 + gamma cos(phi): tan(phi/2) scales by
        // sqrt((1+gamma)/(1-gamma)) relative to tan(omega (t - t0) / 2).
        t0 = -(2.0 / omega) *
             std::atan2(std::sqrt((1.0 - gamma) / (1.0 + gamma)) *
                            std::sin(0.5 * phi0),
                        std::cos(0.5 * phi0));
        const double chi = 0.5 * omega * (t - t0);
        const double m = std::round(chi / M_PI);
        phi = 2.0 * (std::atan(std::sqrt((1.0 + gamma) / (1.0 - gamma)) *
                               std::tan(chi - m * M_PI)) +
                     m * M_PI);
    } else {
        // dphi/dt = 1 - gamma sin(phi): tan(phi/2) = gamma +
        // omega tan(omega (t - t0) / 2).
        t0 = -(2.0 / omega) *
             std::atan2(std::sin(0.5 * phi0) - gamma * std::cos(0.5 * phi0),
                        omega * std::cos(0.5 * phi0));
        const double chi = 0.5 * omega * (t - t0);
        const double m = std::round(chi / M_PI);
        phi = 2.0 * (std::atan(gamma + omega * std::tan(chi - m * M_PI)) +
                     m * M_PI);
    }

    double scale;
    if (kind == PerturbationKind::H1)
        scale = (1.0 + gamma * std::cos(phi0)) / (1.0 + gamma * std::cos(phi));
    else
        scale = (1.0 - gamma * std::sin(phi0)) / (1.0 - gamma * std::sin(phi));
    return {wrap_angle(phi), initial.I * scale};
}

ActionEnergy action_of_energy(const PotentialSpec& pot, double e_tilde) {
    pot.validate();
    const double e = e_tilde;
    double ylo, yhi, closed, prefactor;
    std::function<double(double)> w;

    switch (pot.kind) {
        case PotentialKind::Morse:
            if (!(e > 0.0) || !(e < 1.0))
                throw std::domain_error(
                    "action_of_energy: bound states need 0 < E < 1");
            w = [](double y) {
                const double u = std::expm1(-y);
                return u * u;
            };
            ylo = -std::log1p(std::sqrt(e));
            yhi = -std::log1p(-std::sqrt(e));
            closed = 2.0 * (1.0 - std::sqrt(1.0 - e));
            prefactor = 2.0;
            break;
        case PotentialKind::SymMorse:
            if (!(e > 0.0) || !(e < 1.0))
                throw std::domain_error(
                    "action_of_energy: bound states need 0 < E < 1");
            w = [](double y) {
                const double u = std::tanh(y);
                return u * u;
            };
            yhi = std::atanh(std::sqrt(e));
            ylo = -yhi;
            closed = 2.0 * (1.0 - std::sqrt(1.0 - e));
            prefactor = 2.0;
            break;
        case PotentialKind::PoschlTeller:
            if (!(e > 0.0))
                throw std::domain_error(
                    "action_of_energy: bound states need E > 0");
            w = [](double y) {
                const double u = std::tan(y);
                return u * u;
            };
            yhi = std::atan(std::sqrt(e));
            ylo = -yhi;
            closed = 2.0 * (std::sqrt(e + 1.0) - 1.0);
            prefactor = 2.0;
            break;
        case PotentialKind::Confining:
            if (!(e > 0.0))
                throw std::domain_error(
                    "action_of_energy: bound states need E > 0");
            w = [](double y) {
                const double u = y - 1.0 / y;
                return u * u;
            };
            ylo = 0.5 * (-std::sqrt(e) + std::sqrt(e + 4.0));
            yhi = 0.5 * (std::sqrt(e) + std::sqrt(e + 4.0));
            closed = e;
            prefactor = 4.0;
            break;
        default:
            throw std::logic_error("action_of_energy: unknown potential");
    }

    const double integral = turning_point_integral(w, e, ylo, yhi);
    return {prefactor * integral / M_PI, closed};
}

std::vector<QuantizedLevel> quantized_spectrum(const PotentialSpec& pot,
                                               BargmannIndex k, int n_max,
                                               double hbar) {
    pot.validate();
    if (n_max < 0)
        throw std::domain_error("quantized_spectrum: n_max must be >= 0");
    if (!(hbar > 0.0))
        throw std::domain_error("quantized_spectrum: hbar must be > 0");
    const double w0 = pot.omega0();
    const bool morse_family = pot.kind == PotentialKind::Morse ||
                              pot.kind == PotentialKind::SymMorse;

    std::vector<QuantizedLevel> levels;
    levels.reserve(n_max + 1);
    for (int n = 0; n <= n_max; ++n) {
        const double rung = hbar * w0 * (n + k.value());
        double energy;
        bool valid = true;
        switch (pot.kind) {
            case PotentialKind::Morse:
            case PotentialKind::SymMorse:
                energy = rung * (1.0 - rung / (4.0 * pot.V0));
                valid = rung < 2.0 * pot.V0;
                break;
            case PotentialKind::PoschlTeller:
                energy = rung * (1.0 + rung / (4.0 * pot.V0));
                break;
            default:
                energy = rung;
                break;
        }
        levels.push_back({n, energy, valid});
    }
    if (morse_family && !levels.front().valid)
        throw std::runtime_error(
            "quantized_spectrum: the well holds no bound state at this "
            "index");
    return levels;
}

AngleAction scale_transform(double beta, const AngleAction& s) {
    check_state(s);
    if (!(beta > 0.0))
        throw std::domain_error("scale_transform: beta must be > 0");
    return {wrap_angle(s.phi / beta), beta * s.I};
}

}  // namespace su11
