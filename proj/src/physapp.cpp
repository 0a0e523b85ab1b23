#include "su11/physapp.hpp"

#include <cmath>
#include <stdexcept>

namespace su11 {

namespace {

constexpr double kPi = 3.14159265358979323846;

// ln Z(b; k) = -b k - ln(1 - e^{-b}), evaluated without forming Z.
double log_partition(double b, double k) {
    return -b * k - std::log(-std::expm1(-b));
}

}  // namespace

ThermoReport thermo(double beta_hw, BargmannIndex k) {
    if (!(beta_hw > 0.0))
        throw std::domain_error("thermo: beta_hw must be > 0");
    const double b = beta_hw;
    // em = 1 - e^{-b} > 0; expm1 keeps it accurate for small b.
    const double em = -std::expm1(-b);
    ThermoReport r;
    r.beta_hw = b;
    r.Z = std::exp(-b * k.value()) / em;
    const double logZ = log_partition(b, k.value());
    r.F = -logZ / b;
    r.U = k.value() + 1.0 / std::expm1(b);
    // e^b/(e^b-1)^2 written with decaying exponentials so it neither
    // overflows at large b nor loses the 1/b^2 growth at small b.
    r.dE2 = std::exp(-b) / (em * em);
    r.S_over_kB = logZ + b * r.U;
    return r;
}

double occupation_probability(double beta_hw, BargmannIndex k, int n) {
    if (!(beta_hw > 0.0))
        throw std::domain_error("occupation_probability: beta_hw must be > 0");
    if (n < 0)
        throw std::domain_error("occupation_probability: n must be >= 0");
    const double b = beta_hw;
    // exp(-b(n+k))/Z in log space; the +/- b k contributions cancel up to
    // rounding, leaving the k-free closed form e^{-b n}(1 - e^{-b}).
    return std::exp(-b * (n + k.value()) - log_partition(b, k.value()));
}

double CavitySpec::refractive_index() const {
    return std::sqrt(epsilon * mu);
}

void CavitySpec::validate() const {
    if (!(L > 0.0))
        throw std::domain_error("CavitySpec: L must be > 0");
    if (!(epsilon > 0.0))
        throw std::domain_error("CavitySpec: epsilon must be > 0");
    if (!(mu > 0.0))
        throw std::domain_error("CavitySpec: mu must be > 0");
}

double cavity_mode_frequency(const CavitySpec& spec) {
    spec.validate();
    const double m_norm = std::sqrt(double(spec.m[0]) * spec.m[0] +
                                    double(spec.m[1]) * spec.m[1] +
                                    double(spec.m[2]) * spec.m[2]);
    const double l_norm = 2.0 * kPi * m_norm / spec.L;
    return constants::c / spec.refractive_index() * l_norm;
}

double cavity_ground_energy(BargmannIndex k,
                            const std::vector<CavitySpec>& modes) {
    double omega_sum = 0.0;
    for (const CavitySpec& spec : modes) omega_sum += cavity_mode_frequency(spec);
    return 2.0 * k.value() * constants::hbar * omega_sum;
}

double vacuum_energy_density(double omega_hat, double k) {
    if (!(omega_hat > 0.0))
        throw std::domain_error("vacuum_energy_density: omega_hat must be > 0");
    if (k < 0.0)
        throw std::domain_error("vacuum_energy_density: k must be >= 0");
    const double c = constants::c;
    return k * constants::hbar * std::pow(omega_hat, 4) / (4.0 * kPi * kPi * c * c * c);
}

double vacuum_energy_density_length(double ell, double k) {
    if (!(ell > 0.0))
        throw std::domain_error("vacuum_energy_density_length: ell must be > 0");
    if (k < 0.0)
        throw std::domain_error("vacuum_energy_density_length: k must be >= 0");
    return 4.0 * kPi * kPi * k * constants::hbar * constants::c / std::pow(ell, 4);
}

double solve_k_for_density(double target_u, double ell) {
    if (!(target_u > 0.0))
        throw std::domain_error("solve_k_for_density: target must be > 0");
    if (!(ell > 0.0))
        throw std::domain_error("solve_k_for_density: ell must be > 0");
    return target_u * std::pow(ell, 4) /
           (4.0 * kPi * kPi * constants::hbar * constants::c);
}

StarkShift stark_effective_k(BargmannIndex k, int Z_charge, double E0,
                             double omega, double M) {
    if (!(omega > 0.0))
        throw std::domain_error("stark_effective_k: omega must be > 0");
    if (!(M > 0.0))
        throw std::domain_error("stark_effective_k: M must be > 0");
    const double lambda = 2.0 * kPi * constants::c / omega;
    const double rest_energy = M * constants::c * constants::c;
    const double delta = constants::alpha * double(Z_charge) * Z_charge /
                         (4.0 * kPi * kPi) * constants::epsilon0 * E0 * E0 *
                         lambda * lambda * lambda / rest_energy;
    StarkShift s;
    s.delta = delta;
    s.k_eff = k.value() - delta;
    s.flagged = !(s.k_eff > 0.0);
    return s;
}

std::vector<double> landau_levels(double q_charge, double B, double mass,
                                  BargmannIndex k, int n_max) {
    if (q_charge * B == 0.0)
        throw std::domain_error("landau_levels: q*B must be nonzero");
    if (!(mass > 0.0))
        throw std::domain_error("landau_levels: mass must be > 0");
    if (n_max < 0)
        throw std::domain_error("landau_levels: n_max must be >= 0");
    const double omega = std::abs(q_charge * B) / mass;
    std::vector<double> levels(n_max + 1);
    for (int n = 0; n <= n_max; ++n)
        levels[n] = constants::hbar * omega * (n + k.value());
    return levels;
}

double mulliken_extract_k(double E_a, double E_b, double omega1,
                          double omega2, double omega_a1, double omega_b2) {
    const double scale = std::max(std::abs(omega1), std::abs(omega2));
    if (std::abs(omega1 - omega2) <= 1e-12 * scale)
        throw std::domain_error(
            "mulliken_extract_k: omega1 and omega2 are degenerate");
    return ((E_a - E_b) / constants::hbar - (omega_a1 - omega_b2)) /
           (omega1 - omega2);
}

}  // namespace su11
