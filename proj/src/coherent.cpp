#include "su11/coherent.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "su11/specfun.hpp"

namespace su11 {

namespace {

using cplx = std::complex<double>;
constexpr cplx kI{0.0, 1.0};

// Probability ratio p_{n+1}/p_n for each family.
double prob_ratio(CoherentFamily family, double k, double x, int n) {
    switch (family) {
        case CoherentFamily::BG:
            return x / ((2.0 * k + n) * (n + 1.0));
        case CoherentFamily::Perelomov:
            return x * (2.0 * k + n) / (n + 1.0);
        case CoherentFamily::SG:
            return x / (n + 1.0);
    }
    return 0.0;
}

// Amplitude ratio c_{n+1}/c_n.
cplx amp_ratio(CoherentFamily family, double k, cplx param, int n) {
    switch (family) {
        case CoherentFamily::BG:
            return param / std::sqrt((2.0 * k + n) * (n + 1.0));
        case CoherentFamily::Perelomov:
            return param * std::sqrt((2.0 * k + n) / (n + 1.0));
        case CoherentFamily::SG:
            return param / std::sqrt(n + 1.0);
    }
    return 0.0;
}

double head_amplitude(CoherentFamily family, double k, double x) {
    switch (family) {
        case CoherentFamily::BG:
            return 1.0 / std::sqrt(g_k(x, BargmannIndex(k)));
        case CoherentFamily::Perelomov:
            return std::pow(1.0 - x, k);
        case CoherentFamily::SG:
            return std::exp(-0.5 * x);
    }
    return 0.0;
}

void validate_param(CoherentFamily family, cplx param) {
    if (family == CoherentFamily::Perelomov && !(std::abs(param) < 1.0))
        throw std::domain_error(
            "coherent: Perelomov parameter requires |lambda| < 1");
}

// Tail mass of the family's level distribution beyond dimension n
// (probabilities p_0..p_{n-1} kept), or +inf while no geometric bound holds.
double tail_bound_at(CoherentFamily family, double k, double x, int n) {
    double p = head_amplitude(family, k, x);
    p *= p;
    for (int m = 0; m < n; ++m) p *= prob_ratio(family, k, x, m);
    // Geometric domination needs the supremum of the remaining ratios: the
    // ratio decreases in n except for the Perelomov family with k < 1/2,
    // where it increases toward the limit x.
    double r = prob_ratio(family, k, x, n);
    if (family == CoherentFamily::Perelomov) r = std::max(r, x);
    if (r >= 1.0) return std::numeric_limits<double>::infinity();
    return p / (1.0 - r);
}

// e^{-x} sum_n x^n/n! * w(n), with w supplied per term; two-sided summation
// around the Poisson bulk keeps every term representable for large x.
template <typename Weight>
double poisson_weighted_sum(double x, Weight w) {
    if (x == 0.0) return w(0);
    const int n0 = static_cast<int>(x);
    const double log_t0 =
        n0 * std::log(x) - x - std::lgamma(n0 + 1.0);
    const double t0 = std::exp(log_t0);
    double sum = t0 * w(n0);
    double term = t0;
    for (int n = n0 + 1; n < 100000; ++n) {
        term *= x / n;
        const double inc = term * w(n);
        sum += inc;
        if (n > x && inc < 1e-18 * sum) break;
    }
    term = t0;
    for (int n = n0; n > 0; --n) {
        term *= n / x;
        sum += term * w(n - 1);
    }
    return sum;
}

void require_capacity(CoherentFamily family, double k, double x, int dim,
                      double bound, const char* who) {
    if (!(tail_bound_at(family, k, x, dim) < bound))
        throw std::runtime_error(std::string(who) +
                                 ": truncated basis too small for this "
                                 "parameter (tail bound not met)");
}

}  // namespace

CoherentState make_state(CoherentFamily family, BargmannIndex k, cplx param,
                         int n) {
    validate_param(family, param);
    const double kk = k;
    const double x = std::norm(param);

    int dim = n;
    if (n == 0) {
        // Smallest dimension whose analytic tail bound is below 1e-12.
        dim = 8;
        while (dim <= kMaxDim &&
               !(tail_bound_at(family, kk, x, dim) < 1e-12))
            ++dim;
        if (dim > kMaxDim)
            throw std::runtime_error(
                "make_state: no dimension up to the cap reaches tail bound "
                "1e-12");
    } else if (n < 1) {
        throw std::domain_error("make_state: dimension must be >= 1");
    }

    const double tail = tail_bound_at(family, kk, x, dim);
    if (n != 0 && !(tail < 1e-10))
        throw std::runtime_error(
            "make_state: requested dimension leaves tail bound >= 1e-10");

    CoherentState state{family, k, param, Eigen::VectorXcd(dim), tail};
    cplx c = head_amplitude(family, kk, x);
    for (int m = 0; m < dim; ++m) {
        state.amplitudes(m) = c;
        c *= amp_ratio(family, kk, param, m);
    }
    return state;
}

ExpectationReport expectations(CoherentFamily family, BargmannIndex k,
                               cplx param) {
    validate_param(family, param);
    const double kk = k;
    ExpectationReport r{};
    switch (family) {
        case CoherentFamily::BG: {
            const double az = std::abs(param);
            const double nbar = az * rho_k(k, az);
            r.mean_K0 = kk + nbar;
            r.mean_K1 = param.real();
            r.mean_K2 = -param.imag();
            r.mean_N = nbar;
            r.var_K1 = r.var_K2 = 0.5 * r.mean_K0;
            r.var_K0 = az * az - (2.0 * kk - 1.0) * nbar - nbar * nbar;
            break;
        }
        case CoherentFamily::Perelomov: {
            const double x = std::norm(param);
            const double om = 1.0 - x;
            r.mean_K0 = kk * (1.0 + x) / om;
            const cplx kp = 2.0 * kk * std::conj(param) / om;
            r.mean_K1 = kp.real();
            r.mean_K2 = kp.imag();
            const double s1 = 2.0 * kk * x / om;
            const double s2 = 2.0 * kk * x * (1.0 + 2.0 * kk * x) / (om * om);
            r.mean_N = s1;
            r.var_K0 = 2.0 * kk * x / (om * om);
            const cplx kpp = 2.0 * kk * (2.0 * kk + 1.0) *
                             std::conj(param) * std::conj(param) / (om * om);
            const double mixed = 2.0 * s2 + 4.0 * kk * s1 + 2.0 * kk;
            r.var_K1 = 0.25 * (2.0 * kpp.real() + mixed) -
                       r.mean_K1 * r.mean_K1;
            r.var_K2 = 0.25 * (-2.0 * kpp.real() + mixed) -
                       r.mean_K2 * r.mean_K2;
            break;
        }
        case CoherentFamily::SG: {
            const double x = std::norm(param);
            r.mean_K0 = x + kk;
            r.mean_N = x;
            r.var_K0 = x;
            const double sa = poisson_weighted_sum(
                x, [&](int m) { return std::sqrt(2.0 * kk + m); });
            const double sb = poisson_weighted_sum(x, [&](int m) {
                return std::sqrt((2.0 * kk + m) * (2.0 * kk + m + 1.0));
            });
            const cplx kp = std::conj(param) * sa;
            const cplx kpp = std::conj(param) * std::conj(param) * sb;
            r.mean_K1 = kp.real();
            r.mean_K2 = kp.imag();
            const double mixed = (x * x + 2.0 * kk * x) +
                                 (x * x + (2.0 * kk + 2.0) * x + 2.0 * kk);
            r.var_K1 =
                0.25 * (2.0 * kpp.real() + mixed) - r.mean_K1 * r.mean_K1;
            r.var_K2 =
                0.25 * (-2.0 * kpp.real() + mixed) - r.mean_K2 * r.mean_K2;
            break;
        }
    }
    r.var_K0 = std::max(r.var_K0, 0.0);
    r.var_K1 = std::max(r.var_K1, 0.0);
    r.var_K2 = std::max(r.var_K2, 0.0);
    return r;
}

std::vector<double> number_distribution(CoherentFamily family,
                                        BargmannIndex k, cplx param,
                                        int n_max) {
    if (n_max < 0)
        throw std::domain_error("number_distribution: n_max must be >= 0");
    validate_param(family, param);
    const double kk = k;
    const double x = std::norm(param);
    std::vector<double> p(n_max + 1);
    double head = head_amplitude(family, kk, x);
    p[0] = head * head;
    for (int n = 0; n < n_max; ++n)
        p[n + 1] = p[n] * prob_ratio(family, kk, x, n);
    return p;
}

cplx overlap(const CoherentState& a, const CoherentState& b) {
    if (a.k.value() != b.k.value())
        throw std::invalid_argument("overlap: states carry different indices");
    const double k = a.k;
    const auto fam = [](const CoherentState& s) { return s.family; };
    using F = CoherentFamily;

    if (fam(a) == fam(b)) {
        switch (fam(a)) {
            case F::BG: {
                const cplx cross = g_k(std::conj(a.param) * b.param, a.k);
                return cross / std::sqrt(g_k(std::norm(a.param), a.k) *
                                         g_k(std::norm(b.param), b.k));
            }
            case F::Perelomov: {
                const double xa = std::norm(a.param);
                const double xb = std::norm(b.param);
                return std::pow(1.0 - xa, k) * std::pow(1.0 - xb, k) *
                       std::pow(1.0 - std::conj(a.param) * b.param,
                                -2.0 * k);
            }
            case F::SG:
                return std::exp(std::conj(a.param) * b.param -
                                0.5 * std::norm(a.param) -
                                0.5 * std::norm(b.param));
        }
    }
    // <lambda | z> = (1-|lambda|^2)^k e^{conj(lambda) z} / sqrt(g_k(|z|^2))
    if (fam(a) == F::Perelomov && fam(b) == F::BG) {
        return std::pow(1.0 - std::norm(a.param), k) *
               std::exp(std::conj(a.param) * b.param) /
               std::sqrt(g_k(std::norm(b.param), b.k));
    }
    if (fam(a) == F::BG && fam(b) == F::Perelomov)
        return std::conj(overlap(b, a));

    // Remaining cross pairs have no elementary form: truncated sum.
    const int n = static_cast<int>(
        std::min(a.amplitudes.size(), b.amplitudes.size()));
    cplx sum = 0.0;
    for (int m = 0; m < n; ++m)
        sum += std::conj(a.amplitudes(m)) * b.amplitudes(m);
    return sum;
}

CoherentState evolve(const CoherentState& state, double t) {
    CoherentState out = state;
    out.param = state.param * std::exp(-kI * t);
    const double k = state.k;
    for (int n = 0; n < state.amplitudes.size(); ++n)
        out.amplitudes(n) = state.amplitudes(n) * std::exp(-kI * ((n + k) * t));
    return out;
}

Eigen::MatrixXcd displacement_unitary(cplx alpha, const TruncatedRep& rep) {
    require_capacity(CoherentFamily::SG, rep.k, std::norm(alpha), rep.dim,
                     1e-8, "displacement_unitary");
    return expm(alpha * rep.Adag - std::conj(alpha) * rep.A);
}

Eigen::MatrixXcd perelomov_unitary(cplx w, const TruncatedRep& rep) {
    const double aw = std::abs(w);
    const double lam = std::tanh(0.5 * aw);
    require_capacity(CoherentFamily::Perelomov, rep.k, lam * lam, rep.dim,
                     1e-8, "perelomov_unitary");
    return expm(0.5 * (w * rep.Kplus - std::conj(w) * rep.Kminus));
}

Eigen::MatrixXcd bg_generator(cplx z, const TruncatedRep& rep) {
    const double k = rep.k;
    Eigen::VectorXcd inv(rep.dim);
    for (int n = 0; n < rep.dim; ++n)
        inv(n) = 1.0 / (rep.K0(n, n).real() + k);
    const Eigen::MatrixXcd raise = rep.Kplus * inv.asDiagonal();
    return expm(z * raise);
}

ClassicalParams classical_params(CoherentFamily family, BargmannIndex k,
                                 cplx param) {
    validate_param(family, param);
    (void)k;
    switch (family) {
        case CoherentFamily::BG:
            return {-std::arg(param), std::abs(param)};
        case CoherentFamily::Perelomov:
            return {-std::arg(param),
                    2.0 * std::abs(param) / (1.0 - std::norm(param))};
        case CoherentFamily::SG:
            return {-std::arg(param), std::norm(param)};
    }
    return {0.0, 0.0};
}

Eigen::MatrixXcd interaction_w(double theta, const TruncatedRep& rep) {
    return 0.5 * (std::exp(-kI * theta) * rep.Kplus +
                  std::exp(kI * theta) * rep.Kminus);
}

}  // namespace su11
