#include "su11/repcore.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>

namespace su11 {

namespace {

using cplx = std::complex<double>;
constexpr cplx kI{0.0, 1.0};

// Derive K1, K2, A, Adag, Nop, Q, P from K0 (diagonal) and the ladder pair.
void finish_rep(TruncatedRep& rep) {
    const int n = rep.dim;
    const double k = rep.k;

    rep.K1 = 0.5 * (rep.Kplus + rep.Kminus);
    rep.K2 = (rep.Kplus - rep.Kminus) / (2.0 * kI);

    // B = (K0 + k)^{-1/2} is diagonal and exact at any truncation.
    Eigen::VectorXcd binv(n);
    for (int i = 0; i < n; ++i)
        binv(i) = 1.0 / std::sqrt(rep.K0(i, i).real() + k);
    rep.A = binv.asDiagonal() * rep.Kminus;
    rep.Adag = rep.Kplus * binv.asDiagonal();

    rep.Nop = rep.K0 - k * Eigen::MatrixXcd::Identity(n, n);
    rep.Q = (rep.A + rep.Adag) / std::sqrt(2.0);
    rep.P = kI * (rep.Adag - rep.A) / std::sqrt(2.0);
}

void check_build_args(int n, double omega, double hbar) {
    if (n < 2) throw std::domain_error("build_rep: dimension must be >= 2");
    if (n > kMaxDim)
        throw std::domain_error("build_rep: dimension exceeds the cap");
    if (!(omega > 0.0)) throw std::domain_error("build_rep: omega must be > 0");
    if (!(hbar > 0.0)) throw std::domain_error("build_rep: hbar must be > 0");
}

}  // namespace

CoverElement::CoverElement(cplx g, double w) : gamma(g), omega(w) {
    if (!(std::abs(g) < 1.0))
        throw std::domain_error("CoverElement: |gamma| must be < 1");
}

bool AdmissibleK::contains(double k, double tol) const {
    if (!(k > 0.0)) return false;
    const double mu = k * m;
    return std::abs(mu - std::round(mu)) <= tol * m && std::round(mu) >= 1.0;
}

TruncatedRep build_rep(BargmannIndex k, int n, double omega, double hbar) {
    check_build_args(n, omega, hbar);
    TruncatedRep rep{k, n, {}, {}, {}, {}, {}, {}, {}, {}, {}, {}, omega, hbar};
    rep.K0 = Eigen::MatrixXcd::Zero(n, n);
    rep.Kplus = Eigen::MatrixXcd::Zero(n, n);
    const double kk = k;
    for (int m = 0; m < n; ++m) rep.K0(m, m) = m + kk;
    for (int m = 0; m + 1 < n; ++m)
        rep.Kplus(m + 1, m) = std::sqrt((2.0 * kk + m) * (m + 1.0));
    rep.Kminus = rep.Kplus.adjoint();
    finish_rep(rep);
    return rep;
}

EnergySpectrum spectrum(BargmannIndex k, int n_max, double omega,
                        double hbar) {
    if (n_max < 0)
        throw std::domain_error("spectrum: n_max must be >= 0");
    if (!(omega > 0.0) || !(hbar > 0.0))
        throw std::domain_error("spectrum: omega and hbar must be > 0");
    EnergySpectrum s{k, omega, {}};
    s.levels.reserve(n_max + 1);
    for (int n = 0; n <= n_max; ++n)
        s.levels.push_back(hbar * omega * (n + static_cast<double>(k)));
    return s;
}

std::pair<TruncatedRep, TruncatedRep> metaplectic_split(int n) {
    if (n < 4 || n % 2 != 0)
        throw std::domain_error(
            "metaplectic_split: dimension must be even and >= 4");
    if (n > kMaxDim)
        throw std::domain_error("metaplectic_split: dimension exceeds the cap");

    // Canonical one-mode ladder on the full n-dimensional Fock block.
    Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(n, n);
    for (int m = 0; m + 1 < n; ++m) a(m, m + 1) = std::sqrt(m + 1.0);
    const Eigen::MatrixXcd adag = a.adjoint();
    const Eigen::MatrixXcd k0_full =
        0.25 * (2.0 * adag * a +
                Eigen::MatrixXcd::Identity(n, n));
    const Eigen::MatrixXcd kp_full = 0.5 * adag * adag;
    const Eigen::MatrixXcd km_full = 0.5 * a * a;

    const int half = n / 2;
    auto project = [&](int offset, double k) {
        TruncatedRep rep{BargmannIndex(k), half, {}, {}, {}, {}, {}, {},
                         {},               {},   {}, {}, 1.0, 1.0};
        rep.K0 = Eigen::MatrixXcd::Zero(half, half);
        rep.Kplus = Eigen::MatrixXcd::Zero(half, half);
        rep.Kminus = Eigen::MatrixXcd::Zero(half, half);
        for (int i = 0; i < half; ++i) {
            for (int j = 0; j < half; ++j) {
                rep.K0(i, j) = k0_full(2 * i + offset, 2 * j + offset);
                rep.Kplus(i, j) = kp_full(2 * i + offset, 2 * j + offset);
                rep.Kminus(i, j) = km_full(2 * i + offset, 2 * j + offset);
            }
        }
        finish_rep(rep);
        return rep;
    };
    return {project(0, 0.25), project(1, 0.75)};
}

TruncatedRep two_mode_rep(int d, int n) {
    if (d < 0)
        throw std::domain_error("two_mode_rep: difference must be >= 0");
    check_build_args(n, 1.0, 1.0);

    // Basis |n1 = m, n2 = m + d>, m = 0..n-1.  K+ = a1†a2† raises both
    // occupations; K0 = (N1 + N2 + 1)/2.
    const double k = 0.5 * (1.0 + d);
    TruncatedRep rep{BargmannIndex(k), n, {}, {}, {}, {}, {}, {},
                     {},               {}, {}, {}, 1.0, 1.0};
    rep.K0 = Eigen::MatrixXcd::Zero(n, n);
    rep.Kplus = Eigen::MatrixXcd::Zero(n, n);
    for (int m = 0; m < n; ++m) rep.K0(m, m) = 0.5 * (2.0 * m + d + 1.0);
    for (int m = 0; m + 1 < n; ++m)
        rep.Kplus(m + 1, m) = std::sqrt((m + 1.0) * (m + d + 1.0));
    rep.Kminus = rep.Kplus.adjoint();
    finish_rep(rep);

    const TruncatedRep ref = build_rep(BargmannIndex(k), n);
    const double mismatch =
        std::max({(rep.K0 - ref.K0).cwiseAbs().maxCoeff(),
                  (rep.Kplus - ref.Kplus).cwiseAbs().maxCoeff(),
                  (rep.Kminus - ref.Kminus).cwiseAbs().maxCoeff()});
    if (mismatch > 1e-12)
        throw std::logic_error(
            "two_mode_rep: fixed-difference block disagrees with the direct "
            "construction");
    return rep;
}

AdmissibleK admissible_k(int m) {
    if (m < 1) throw std::domain_error("admissible_k: m must be >= 1");
    AdmissibleK lattice{m, 1.0 / m, {}};
    for (int mu = 1; mu <= 16; ++mu)
        lattice.first_values[mu - 1] = static_cast<double>(mu) / m;
    return lattice;
}

CoverElement cover_compose(const CoverElement& g2, const CoverElement& g1) {
    const cplx twist = g2.gamma * std::exp(-2.0 * kI * g1.omega);
    const cplx denom = 1.0 + std::conj(g1.gamma) * twist;
    CoverElement out;
    out.gamma = (g1.gamma + twist) / denom;
    out.omega = g1.omega + g2.omega + std::arg(denom);
    if (!(std::abs(out.gamma) < 1.0))
        throw std::domain_error("cover_compose: result left the unit disc");
    return out;
}

CoverElement cover_inverse(const CoverElement& g) {
    CoverElement out;
    out.gamma = -g.gamma * std::exp(2.0 * kI * g.omega);
    out.omega = -g.omega;
    return out;
}

Eigen::Matrix2cd cover_project(const CoverElement& g) {
    const cplx alpha =
        std::exp(kI * g.omega) / std::sqrt(1.0 - std::norm(g.gamma));
    const cplx beta = g.gamma * alpha;
    Eigen::Matrix2cd m;
    m << alpha, beta, std::conj(beta), std::conj(alpha);
    return m;
}

CoverElement rotation_element(double theta) {
    return CoverElement(0.0, 0.5 * theta);
}

CoverElement boost_a_element(double tau) {
    return CoverElement(kI * std::tanh(0.5 * tau), 0.0);
}

CoverElement boost_b_element(double s) {
    return CoverElement(std::tanh(0.5 * s), 0.0);
}

CoverElement shear_element(double xi) {
    const double w = std::atan(0.5 * xi);
    const cplx gamma = xi / std::sqrt(xi * xi + 4.0) * std::exp(-kI * w);
    return CoverElement(gamma, w);
}

Eigen::MatrixXcd time_evolution(const TruncatedRep& rep, double t) {
    const double wt = rep.omega * t;
    Eigen::MatrixXcd u = Eigen::MatrixXcd::Zero(rep.dim, rep.dim);
    const double k = rep.k;
    for (int n = 0; n < rep.dim; ++n)
        u(n, n) = std::exp(-kI * ((n + k) * wt));
    return u;
}

Eigen::MatrixXcd parity(const TruncatedRep& rep) {
    Eigen::MatrixXcd u = Eigen::MatrixXcd::Zero(rep.dim, rep.dim);
    const double k = rep.k;
    for (int n = 0; n < rep.dim; ++n)
        u(n, n) = std::exp(kI * ((n + k) * M_PI));
    return u;
}

Eigen::MatrixXcd squeeze(const TruncatedRep& rep, double gamma) {
    const Eigen::MatrixXcd gen =
        0.5 * gamma * (rep.A * rep.A - rep.Adag * rep.Adag);
    return expm(gen);
}

Eigen::MatrixXcd expm(const Eigen::MatrixXcd& m) {
    if (m.rows() != m.cols())
        throw std::domain_error("expm: matrix must be square");
    const int n = static_cast<int>(m.rows());
    static const double b[] = {64764752532480000.0,
                               32382376266240000.0,
                               7771770303897600.0,
                               1187353796428800.0,
                               129060195264000.0,
                               10559470521600.0,
                               670442572800.0,
                               33522128640.0,
                               1323241920.0,
                               40840800.0,
                               960960.0,
                               16380.0,
                               182.0,
                               1.0};
    constexpr double theta13 = 5.371920351148152;

    const double norm1 = m.cwiseAbs().colwise().sum().maxCoeff();
    int squarings = 0;
    if (norm1 > theta13) {
        squarings = static_cast<int>(std::ceil(std::log2(norm1 / theta13)));
    }
    const Eigen::MatrixXcd a = m / std::pow(2.0, squarings);

    const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(n, n);
    const Eigen::MatrixXcd a2 = a * a;
    const Eigen::MatrixXcd a4 = a2 * a2;
    const Eigen::MatrixXcd a6 = a2 * a4;

    const Eigen::MatrixXcd u =
        a * (a6 * (b[13] * a6 + b[11] * a4 + b[9] * a2) + b[7] * a6 +
             b[5] * a4 + b[3] * a2 + b[1] * id);
    const Eigen::MatrixXcd v = a6 * (b[12] * a6 + b[10] * a4 + b[8] * a2) +
                               b[6] * a6 + b[4] * a4 + b[2] * a2 + b[0] * id;

    Eigen::MatrixXcd r = (v - u).partialPivLu().solve(v + u);
    for (int s = 0; s < squarings; ++s) r = r * r;
    return r;
}

}  // namespace su11
