// Command-line front end: every subcommand prints one OutputDocument to
// stdout (JSON by default, CSV with --format csv) so the numerics are easy
// to pipe into scripts and plotting tools.  Exit codes: 0 success, 2 flag or
// usage errors, 3 numerical/domain failures (diagnostic on stderr).

#include <algorithm>
#include <cmath>
#include <complex>
#include <iostream>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "CLI11.hpp"
#include "json.hpp"
#include "su11/actionangle.hpp"
#include "su11/coherent.hpp"
#include "su11/config.hpp"
#include "su11/hilbert.hpp"
#include "su11/json_io.hpp"
#include "su11/physapp.hpp"
#include "su11/repcore.hpp"
#include "su11/specfun.hpp"

namespace {

using cplx = std::complex<double>;
constexpr double kPi = 3.14159265358979323846;

// Numerical settings shared across subcommands; exposed as top-level flags
// and through --config (key=value lines: dim, series-tol, max-terms).
struct Settings {
    std::string format = "json";
    int dim = su11::kDefaultDim;
    double series_tol = 1e-15;
    int max_terms = 10000;

    su11::SpecFunConfig specfun() const {
        su11::SpecFunConfig cfg;
        cfg.series_tol = series_tol;
        cfg.max_terms = max_terms;
        return cfg;
    }
};

su11::OutputDocument make_doc(const std::string& command, const Settings& s) {
    su11::OutputDocument doc;
    doc.command = command;
    doc.metadata["version"] = su11::kToolVersion;
    doc.metadata["tolerances"] = {{"dim", s.dim},
                                  {"series_tol", s.series_tol},
                                  {"max_terms", s.max_terms}};
    return doc;
}

void emit(const su11::OutputDocument& doc, const Settings& s) {
    if (s.format == "csv")
        std::cout << doc.to_csv();
    else
        std::cout << doc.to_json().dump(2) << "\n";
}

std::vector<double> linspace(double lo, double hi, int points) {
    if (points < 1)
        throw CLI::ValidationError("--points must be >= 1");
    std::vector<double> xs(points);
    if (points == 1) {
        xs[0] = lo;
        return xs;
    }
    for (int i = 0; i < points; ++i)
        xs[i] = lo + (hi - lo) * i / (points - 1);
    return xs;
}

// Algebra residuals measured in long double so the meter does not add
// rounding of the same size as the quantity it reports.
using MatLD =
    Eigen::Matrix<std::complex<long double>, Eigen::Dynamic, Eigen::Dynamic>;

double interior_maxabs(const MatLD& m) {
    const auto block = m.topLeftCorner(m.rows() - 2, m.cols() - 2);
    long double worst = 0.0L;
    for (Eigen::Index j = 0; j < block.cols(); ++j)
        for (Eigen::Index i = 0; i < block.rows(); ++i)
            worst = std::max(worst, std::abs(block(i, j)));
    return static_cast<double>(worst);
}

double commutator_residual(const Eigen::MatrixXcd& x, const Eigen::MatrixXcd& y,
                           const Eigen::MatrixXcd& expected) {
    const MatLD xl = x.cast<std::complex<long double>>();
    const MatLD yl = y.cast<std::complex<long double>>();
    return interior_maxabs(xl * yl - yl * xl -
                           expected.cast<std::complex<long double>>());
}

su11::CoherentFamily parse_family(const std::string& name) {
    if (name == "bg") return su11::CoherentFamily::BG;
    if (name == "perelomov") return su11::CoherentFamily::Perelomov;
    return su11::CoherentFamily::SG;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Angle-action oscillator toolkit: lowest-weight ladder numerics, "
        "coherent states, classical maps, and k-dependent physics tables"};
    app.require_subcommand(1);

    Settings st;
    app.add_option("--format", st.format, "Output format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    app.add_option("--dim", st.dim, "Default matrix truncation dimension")
        ->check(CLI::Range(2, su11::kMaxDim))
        ->capture_default_str();
    app.add_option("--series-tol", st.series_tol,
                   "Relative tolerance for scalar series kernels")
        ->capture_default_str();
    app.add_option("--max-terms", st.max_terms,
                   "Hard cap on scalar series terms")
        ->capture_default_str();
    app.set_config("--config", "",
                   "Config file with key=value lines (dim, series-tol, ...)");

    // --- spectrum ------------------------------------------------------------
    auto* sc_spectrum = app.add_subcommand(
        "spectrum", "Ladder energies (n + k) for n = 0..n, units hbar*omega");
    double sp_k = 0.5, sp_omega = 1.0;
    int sp_n = 10;
    sc_spectrum->add_option("--k", sp_k, "Lowest-weight index k > 0")
        ->required();
    sc_spectrum->add_option("--n", sp_n, "Highest level index")->required();
    sc_spectrum->add_option("--omega", sp_omega, "Angular frequency")
        ->capture_default_str();
    sc_spectrum->callback([&] {
        const auto spec = su11::spectrum(sp_k, sp_n, sp_omega);
        auto doc = make_doc("spectrum", st);
        doc.params = {{"k", sp_k}, {"n", sp_n}, {"omega", sp_omega}};
        std::vector<double> idx(spec.levels.size());
        for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = double(i);
        doc.add_column("n", idx);
        doc.add_column("energy", spec.levels);
        emit(doc, st);
    });

    // --- rep-check -----------------------------------------------------------
    auto* sc_rep = app.add_subcommand(
        "rep-check",
        "Interior-block residuals of the defining algebra at index k");
    double rc_k = 0.5;
    sc_rep->add_option("--k", rc_k, "Lowest-weight index k > 0")->required();
    sc_rep->callback([&] {
        const auto rep = su11::build_rep(rc_k, st.dim);
        const int n = rep.dim;
        using M = Eigen::MatrixXcd;
        const M id = M::Identity(n, n);
        auto doc = make_doc("rep-check", st);
        doc.params = {{"k", rc_k}, {"dim", n}};
        doc.add_column("k0_kplus",
                       {commutator_residual(rep.K0, rep.Kplus, rep.Kplus)});
        doc.add_column("k0_kminus",
                       {commutator_residual(rep.K0, rep.Kminus, -rep.Kminus)});
        doc.add_column(
            "kplus_kminus",
            {commutator_residual(rep.Kplus, rep.Kminus, -2.0 * rep.K0)});
        doc.add_column("a_adag", {commutator_residual(rep.A, rep.Adag, id)});
        doc.add_column("q_p",
                       {commutator_residual(rep.Q, rep.P, cplx(0.0, 1.0) * id)});
        const MatLD k0l = rep.K0.cast<std::complex<long double>>();
        const MatLD k1l = rep.K1.cast<std::complex<long double>>();
        const MatLD k2l = rep.K2.cast<std::complex<long double>>();
        const std::complex<long double> ck(rc_k * (1.0 - rc_k));
        doc.add_column("casimir",
                       {interior_maxabs(k1l * k1l + k2l * k2l - k0l * k0l -
                                        ck * id.cast<std::complex<long double>>())});
        emit(doc, st);
    });

    // --- coherent ------------------------------------------------------------
    auto* sc_coh = app.add_subcommand(
        "coherent", "Level occupation of a coherent state, with moments");
    std::string co_family = "bg";
    double co_k = 0.5, co_abs = 1.0, co_arg = 0.0;
    int co_nmax = 32;
    sc_coh->add_option("--family", co_family, "bg | perelomov | sg")
        ->required()
        ->check(CLI::IsMember({"bg", "perelomov", "sg"}));
    sc_coh->add_option("--k", co_k, "Lowest-weight index k > 0")->required();
    sc_coh->add_option("--abs", co_abs, "Parameter modulus")->required();
    sc_coh->add_option("--arg", co_arg, "Parameter phase (radians)")
        ->capture_default_str();
    sc_coh->add_option("--n-max", co_nmax, "Highest level reported")
        ->capture_default_str();
    sc_coh->callback([&] {
        const auto family = parse_family(co_family);
        const cplx param = std::polar(co_abs, co_arg);
        const auto dist =
            su11::number_distribution(family, co_k, param, co_nmax);
        const auto moments = su11::expectations(family, co_k, param);
        auto doc = make_doc("coherent", st);
        doc.params = {{"family", co_family},
                      {"k", co_k},
                      {"abs", co_abs},
                      {"arg", co_arg},
                      {"n-max", co_nmax}};
        std::vector<double> idx(dist.size());
        for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = double(i);
        doc.add_column("n", idx);
        doc.add_column("p", dist);
        double mass = 0.0;
        for (double p : dist) mass += p;
        doc.metadata["moments"] = {
            {"mean_K0", moments.mean_K0}, {"mean_K1", moments.mean_K1},
            {"mean_K2", moments.mean_K2}, {"mean_N", moments.mean_N},
            {"var_K0", moments.var_K0},   {"var_K1", moments.var_K1},
            {"var_K2", moments.var_K2},   {"prob_mass", mass}};
        emit(doc, st);
    });

    // --- rho -------------------------------------------------------------------
    auto* sc_rho = app.add_subcommand(
        "rho", "Ground-energy ratio rho_k(z) at a point or on a grid");
    double rh_k = 0.5, rh_z = 1.0, rh_zmin = 0.01, rh_zmax = 10.0;
    int rh_points = 50;
    sc_rho->add_option("--k", rh_k, "Lowest-weight index k > 0")->required();
    auto* rh_z_opt = sc_rho->add_option("--z", rh_z, "Single argument z > 0");
    auto* rh_zmin_opt = sc_rho->add_option("--z-min", rh_zmin, "Grid start");
    auto* rh_zmax_opt = sc_rho->add_option("--z-max", rh_zmax, "Grid end");
    sc_rho->add_option("--points", rh_points, "Grid size")
        ->capture_default_str();
    rh_z_opt->excludes(rh_zmin_opt)->excludes(rh_zmax_opt);
    rh_zmin_opt->needs(rh_zmax_opt);
    rh_zmax_opt->needs(rh_zmin_opt);
    sc_rho->callback([&] {
        std::vector<double> zs;
        if (rh_z_opt->count())
            zs = {rh_z};
        else if (rh_zmin_opt->count())
            zs = linspace(rh_zmin, rh_zmax, rh_points);
        else
            throw CLI::ValidationError(
                "rho: give --z or the --z-min/--z-max grid");
        const auto cfg = st.specfun();
        std::vector<double> vals(zs.size());
        for (std::size_t i = 0; i < zs.size(); ++i)
            vals[i] = su11::rho_k(rh_k, zs[i], cfg);
        auto doc = make_doc("rho", st);
        doc.params = {{"k", rh_k}};
        doc.add_column("z", zs);
        doc.add_column("rho", vals);
        emit(doc, st);
    });

    // --- action ----------------------------------------------------------------
    auto* sc_action = app.add_subcommand(
        "action",
        "Action variable of a bound orbit: quadrature and closed form");
    std::string ac_potential = "morse";
    double ac_energy = 0.5, ac_emin = 0.1, ac_emax = 0.9;
    double ac_v0 = 1.0, ac_a = 1.0, ac_mass = 1.0;
    int ac_points = 9;
    sc_action
        ->add_option("--potential", ac_potential,
                     "morse | sym-morse | poschl-teller | confining")
        ->required()
        ->check(CLI::IsMember(
            {"morse", "sym-morse", "poschl-teller", "confining"}));
    auto* ac_e_opt =
        sc_action->add_option("--energy", ac_energy, "Single reduced energy");
    auto* ac_emin_opt = sc_action->add_option("--e-min", ac_emin, "Grid start");
    auto* ac_emax_opt = sc_action->add_option("--e-max", ac_emax, "Grid end");
    sc_action->add_option("--points", ac_points, "Grid size")
        ->capture_default_str();
    sc_action->add_option("--v0", ac_v0, "Well depth scale")
        ->capture_default_str();
    sc_action->add_option("--a", ac_a, "Inverse length scale")
        ->capture_default_str();
    sc_action->add_option("--mass", ac_mass, "Mass")->capture_default_str();
    ac_e_opt->excludes(ac_emin_opt)->excludes(ac_emax_opt);
    ac_emin_opt->needs(ac_emax_opt);
    ac_emax_opt->needs(ac_emin_opt);
    sc_action->callback([&] {
        su11::PotentialSpec pot;
        if (ac_potential == "morse")
            pot.kind = su11::PotentialKind::Morse;
        else if (ac_potential == "sym-morse")
            pot.kind = su11::PotentialKind::SymMorse;
        else if (ac_potential == "poschl-teller")
            pot.kind = su11::PotentialKind::PoschlTeller;
        else
            pot.kind = su11::PotentialKind::Confining;
        pot.V0 = ac_v0;
        pot.a = ac_a;
        pot.M = ac_mass;
        std::vector<double> es;
        if (ac_e_opt->count())
            es = {ac_energy};
        else if (ac_emin_opt->count())
            es = linspace(ac_emin, ac_emax, ac_points);
        else
            throw CLI::ValidationError(
                "action: give --energy or the --e-min/--e-max grid");
        std::vector<double> quad(es.size()), closed(es.size());
        for (std::size_t i = 0; i < es.size(); ++i) {
            const auto ae = su11::action_of_energy(pot, es[i]);
            quad[i] = ae.quadrature;
            closed[i] = ae.closed_form;
        }
        auto doc = make_doc("action", st);
        doc.params = {{"potential", ac_potential},
                      {"v0", ac_v0},
                      {"a", ac_a},
                      {"mass", ac_mass}};
        doc.add_column("e_tilde", es);
        doc.add_column("action_quadrature", quad);
        doc.add_column("action_closed", closed);
        emit(doc, st);
    });

    // --- density ---------------------------------------------------------------
    auto* sc_density = app.add_subcommand(
        "density",
        "Coherent-state density against the model measure on a 1-d slice");
    std::string de_space = "circle", de_family = "bg";
    double de_k = 0.5, de_abs = 1.0, de_arg = 0.0, de_max = 0.0, de_angle = 0.0;
    int de_points = 64;
    sc_density->add_option("--space", de_space, "circle | disc | halfline")
        ->required()
        ->check(CLI::IsMember({"circle", "disc", "halfline"}));
    sc_density->add_option("--family", de_family, "bg | perelomov | sg")
        ->required()
        ->check(CLI::IsMember({"bg", "perelomov", "sg"}));
    sc_density->add_option("--k", de_k, "Lowest-weight index k > 0")
        ->required();
    sc_density->add_option("--abs", de_abs, "Parameter modulus")->required();
    sc_density->add_option("--arg", de_arg, "Parameter phase (radians)")
        ->capture_default_str();
    sc_density->add_option(
        "--max", de_max,
        "Slice end: radius < 1 on the disc (default 0.95), u range on the "
        "half-line (default 40)");
    sc_density->add_option("--angle", de_angle,
                           "Fixed polar angle of the disc slice")
        ->capture_default_str();
    sc_density->add_option("--points", de_points, "Grid size")
        ->capture_default_str();
    sc_density->callback([&] {
        const auto family = parse_family(de_family);
        const cplx param = std::polar(de_abs, de_arg);
        auto doc = make_doc("density", st);
        doc.params = {{"space", de_space}, {"family", de_family},
                      {"k", de_k},         {"abs", de_abs},
                      {"arg", de_arg},     {"points", de_points}};
        std::vector<double> xs, vals;
        if (de_space == "circle") {
            for (int i = 0; i < de_points; ++i) {
                const double theta = 2.0 * kPi * i / de_points;
                xs.push_back(theta);
                vals.push_back(su11::coherent_density(
                    su11::SpaceKind::CircleKHalf, family, de_k, param, theta));
            }
            doc.add_column("theta", xs);
        } else if (de_space == "disc") {
            const double rmax = de_max > 0.0 ? de_max : 0.95;
            doc.params["angle"] = de_angle;
            doc.params["max"] = rmax;
            for (int i = 0; i < de_points; ++i) {
                const double r = rmax * (i + 0.5) / de_points;
                xs.push_back(r);
                vals.push_back(su11::coherent_density(
                    su11::SpaceKind::Disc, family, de_k, param,
                    std::polar(r, de_angle)));
            }
            doc.add_column("r", xs);
        } else {
            const double umax = de_max > 0.0 ? de_max : 40.0;
            doc.params["max"] = umax;
            for (int i = 0; i < de_points; ++i) {
                const double u = umax * (i + 1.0) / de_points;
                xs.push_back(u);
                vals.push_back(su11::coherent_density(
                    su11::SpaceKind::HalfLine, family, de_k, param, u));
            }
            doc.add_column("u", xs);
        }
        doc.add_column("density", vals);
        emit(doc, st);
    });

    // --- thermo ----------------------------------------------------------------
    auto* sc_thermo = app.add_subcommand(
        "thermo",
        "Canonical ensemble report at beta*hbar*omega, identities echoed");
    double th_beta = 1.0, th_k = 0.5;
    sc_thermo->add_option("--beta-hw", th_beta, "beta * hbar * omega > 0")
        ->required();
    sc_thermo->add_option("--k", th_k, "Lowest-weight index k > 0")
        ->required();
    sc_thermo->callback([&] {
        const auto r = su11::thermo(th_beta, th_k);
        auto doc = make_doc("thermo", st);
        doc.params = {{"beta-hw", th_beta}, {"k", th_k}};
        doc.add_column("Z", {r.Z});
        doc.add_column("F", {r.F});
        doc.add_column("U", {r.U});
        doc.add_column("dE2", {r.dE2});
        doc.add_column("S_over_kB", {r.S_over_kB});
        // Echo the identities the report claims: entropy relation from the
        // returned numbers, fluctuation relation against a central second
        // difference of ln Z.
        const double h = std::min(1e-4 * std::max(1.0, th_beta), 0.5 * th_beta);
        auto lnZ = [&](double b) { return std::log(su11::thermo(b, th_k).Z); };
        const double fd =
            (lnZ(th_beta + h) - 2.0 * lnZ(th_beta) + lnZ(th_beta - h)) /
            (h * h);
        doc.metadata["identities"] = {
            {"S_minus_lnZ_minus_bU",
             r.S_over_kB - std::log(r.Z) - th_beta * r.U},
            {"dE2_minus_d2_lnZ", r.dE2 - fd}};
        emit(doc, st);
    });

    // --- landau ----------------------------------------------------------------
    auto* sc_landau = app.add_subcommand(
        "landau", "Transverse levels hbar (|q B|/m)(n + k), SI inputs");
    double la_charge = 0.0, la_b = 0.0, la_mass = 0.0, la_k = 0.5;
    int la_nmax = 10;
    sc_landau->add_option("--charge", la_charge, "Charge q in C")->required();
    sc_landau->add_option("--bfield", la_b, "Field B in T")->required();
    sc_landau->add_option("--mass", la_mass, "Mass in kg")->required();
    sc_landau->add_option("--k", la_k, "Lowest-weight index k > 0")
        ->required();
    sc_landau->add_option("--n-max", la_nmax, "Highest level index")
        ->capture_default_str();
    sc_landau->callback([&] {
        const auto levels =
            su11::landau_levels(la_charge, la_b, la_mass, la_k, la_nmax);
        auto doc = make_doc("landau", st);
        doc.params = {{"charge", la_charge},
                      {"bfield", la_b},
                      {"mass", la_mass},
                      {"k", la_k},
                      {"n-max", la_nmax}};
        std::vector<double> idx(levels.size());
        for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = double(i);
        doc.add_column("n", idx);
        doc.add_column("energy_J", levels);
        emit(doc, st);
    });

    // --- stark -----------------------------------------------------------------
    auto* sc_stark = app.add_subcommand(
        "stark", "Effective index k - delta of a charged oscillator in a "
                 "static field, SI inputs");
    double sk_k = 0.5, sk_e0 = 0.0, sk_omega = 0.0, sk_nu = 0.0, sk_mass = 0.0,
           sk_rest = 0.0;
    int sk_z = 1;
    sc_stark->add_option("--k", sk_k, "Lowest-weight index k > 0")->required();
    sc_stark->add_option("--z-charge", sk_z, "Charge number Z")
        ->capture_default_str();
    sc_stark->add_option("--e0", sk_e0, "Field strength in V/m")->required();
    auto* sk_omega_opt =
        sc_stark->add_option("--omega", sk_omega, "Angular frequency, rad/s");
    auto* sk_nu_opt = sc_stark->add_option("--nu", sk_nu, "Frequency, Hz");
    auto* sk_mass_opt = sc_stark->add_option("--mass", sk_mass, "Mass in kg");
    auto* sk_rest_opt =
        sc_stark->add_option("--rest-energy", sk_rest, "Rest energy M c^2, J");
    sk_omega_opt->excludes(sk_nu_opt);
    sk_mass_opt->excludes(sk_rest_opt);
    sc_stark->callback([&] {
        if (!sk_omega_opt->count() && !sk_nu_opt->count())
            throw CLI::ValidationError("stark: give --omega or --nu");
        if (!sk_mass_opt->count() && !sk_rest_opt->count())
            throw CLI::ValidationError("stark: give --mass or --rest-energy");
        const double omega =
            sk_omega_opt->count() ? sk_omega : 2.0 * kPi * sk_nu;
        const double mass =
            sk_mass_opt->count()
                ? sk_mass
                : sk_rest / (su11::constants::c * su11::constants::c);
        const auto s = su11::stark_effective_k(sk_k, sk_z, sk_e0, omega, mass);
        auto doc = make_doc("stark", st);
        doc.params = {{"k", sk_k},
                      {"z-charge", sk_z},
                      {"e0", sk_e0},
                      {"omega", omega},
                      {"mass", mass}};
        doc.add_column("delta", {s.delta});
        doc.add_column("k_eff", {s.k_eff});
        doc.add_column("flagged", {s.flagged ? 1.0 : 0.0});
        emit(doc, st);
    });

    // --- vacuum ----------------------------------------------------------------
    auto* sc_vacuum = app.add_subcommand(
        "vacuum", "Cutoff zero-point energy density, or the index k that "
                  "reproduces a target density");
    double va_k = 0.0, va_omega_hat = 0.0, va_ell = 0.0, va_target = 0.0;
    auto* va_k_opt =
        sc_vacuum->add_option("--k", va_k, "Index k >= 0 (evaluate mode)");
    auto* va_oh_opt = sc_vacuum->add_option("--omega-hat", va_omega_hat,
                                            "Cutoff frequency, rad/s");
    auto* va_ell_opt =
        sc_vacuum->add_option("--ell", va_ell, "Cutoff length 2 pi c/omega, m");
    auto* va_target_opt = sc_vacuum->add_option(
        "--target", va_target, "Target density J/m^3 (solve mode)");
    va_oh_opt->excludes(va_ell_opt);
    va_target_opt->excludes(va_k_opt)->excludes(va_oh_opt);
    va_target_opt->needs(va_ell_opt);
    sc_vacuum->callback([&] {
        auto doc = make_doc("vacuum", st);
        if (va_target_opt->count()) {
            const double k = su11::solve_k_for_density(va_target, va_ell);
            doc.params = {{"mode", "solve"},
                          {"target", va_target},
                          {"ell", va_ell}};
            doc.add_column("k", {k});
        } else {
            if (!va_k_opt->count())
                throw CLI::ValidationError("vacuum: give --k (or --target)");
            double u = 0.0;
            doc.params = {{"mode", "evaluate"}, {"k", va_k}};
            if (va_oh_opt->count()) {
                u = su11::vacuum_energy_density(va_omega_hat, va_k);
                doc.params["omega-hat"] = va_omega_hat;
            } else if (va_ell_opt->count()) {
                u = su11::vacuum_energy_density_length(va_ell, va_k);
                doc.params["ell"] = va_ell;
            } else {
                throw CLI::ValidationError("vacuum: give --omega-hat or --ell");
            }
            doc.add_column("u", {u});
        }
        emit(doc, st);
    });

    // --- mulliken ----------------------------------------------------------------
    auto* sc_mull = app.add_subcommand(
        "mulliken", "Index k from two transition frequencies into ground "
                    "levels of the same oscillator at two frequencies");
    double mu_ea = 0.0, mu_eb = 0.0, mu_o1 = 0.0, mu_o2 = 0.0, mu_oa1 = 0.0,
           mu_ob2 = 0.0;
    bool mu_reduced = false;
    sc_mull->add_option("--ea", mu_ea, "External level E_a, J")->required();
    sc_mull->add_option("--eb", mu_eb, "External level E_b, J")->required();
    sc_mull->add_option("--omega1", mu_o1, "First oscillator frequency, rad/s")
        ->required();
    sc_mull
        ->add_option("--omega2", mu_o2, "Second oscillator frequency, rad/s")
        ->required();
    sc_mull
        ->add_option("--omega-a1", mu_oa1, "Observed transition a -> ground 1")
        ->required();
    sc_mull
        ->add_option("--omega-b2", mu_ob2, "Observed transition b -> ground 2")
        ->required();
    sc_mull->add_flag("--reduced", mu_reduced,
                      "Treat --ea/--eb as frequencies (hbar = 1 units)");
    sc_mull->callback([&] {
        const double scale = mu_reduced ? su11::constants::hbar : 1.0;
        const double k = su11::mulliken_extract_k(mu_ea * scale, mu_eb * scale,
                                                  mu_o1, mu_o2, mu_oa1, mu_ob2);
        auto doc = make_doc("mulliken", st);
        doc.params = {{"ea", mu_ea},     {"eb", mu_eb},
                      {"omega1", mu_o1}, {"omega2", mu_o2},
                      {"omega-a1", mu_oa1}, {"omega-b2", mu_ob2},
                      {"reduced", mu_reduced}};
        doc.add_column("k", {k});
        emit(doc, st);
    });

    // --- cover -----------------------------------------------------------------
    auto* sc_cover = app.add_subcommand(
        "cover", "Universal-cover elements: projection to the matrix group, "
                 "composition, and the admissible-index ladder");
    double cv_gabs = 0.0, cv_garg = 0.0, cv_omega = 0.0;
    double cv_g2abs = 0.0, cv_g2arg = 0.0, cv_omega2 = 0.0;
    int cv_sheets = 0;
    auto* cv_gabs_opt =
        sc_cover->add_option("--gamma-abs", cv_gabs, "|gamma| < 1");
    sc_cover->add_option("--gamma-arg", cv_garg, "arg gamma (radians)")
        ->capture_default_str();
    sc_cover->add_option("--omega", cv_omega, "Winding parameter omega")
        ->capture_default_str();
    auto* cv_g2_opt = sc_cover->add_option("--gamma2-abs", cv_g2abs,
                                           "Second element |gamma|");
    sc_cover->add_option("--gamma2-arg", cv_g2arg, "Second element arg gamma")
        ->capture_default_str();
    sc_cover->add_option("--omega2", cv_omega2, "Second element omega")
        ->capture_default_str();
    auto* cv_sheets_opt = sc_cover->add_option(
        "--sheets", cv_sheets, "List indices admissible on an m-sheeted cover");
    cv_sheets_opt->excludes(cv_gabs_opt)->excludes(cv_g2_opt);
    sc_cover->callback([&] {
        auto doc = make_doc("cover", st);
        if (cv_sheets_opt->count()) {
            const auto adm = su11::admissible_k(cv_sheets);
            doc.params = {{"sheets", cv_sheets}};
            doc.metadata["minimum"] = adm.minimum;
            std::vector<double> mu(adm.first_values.size()),
                ks(adm.first_values.size());
            for (std::size_t i = 0; i < adm.first_values.size(); ++i) {
                mu[i] = double(i + 1);
                ks[i] = adm.first_values[i];
            }
            doc.add_column("mu", mu);
            doc.add_column("k", ks);
        } else {
            su11::CoverElement g1(std::polar(cv_gabs, cv_garg), cv_omega);
            su11::CoverElement g = g1;
            doc.params = {{"gamma-abs", cv_gabs},
                          {"gamma-arg", cv_garg},
                          {"omega", cv_omega}};
            if (cv_g2_opt->count() || sc_cover->count("--omega2")) {
                const su11::CoverElement g2(std::polar(cv_g2abs, cv_g2arg),
                                            cv_omega2);
                g = su11::cover_compose(g2, g1);
                doc.params["gamma2-abs"] = cv_g2abs;
                doc.params["gamma2-arg"] = cv_g2arg;
                doc.params["omega2"] = cv_omega2;
            }
            const Eigen::Matrix2cd m = su11::cover_project(g);
            doc.add_column("gamma_abs", {std::abs(g.gamma)});
            doc.add_column("gamma_arg", {std::arg(g.gamma)});
            doc.add_column("omega_total", {g.omega});
            doc.add_column("alpha_re", {m(0, 0).real()});
            doc.add_column("alpha_im", {m(0, 0).imag()});
            doc.add_column("beta_re", {m(0, 1).real()});
            doc.add_column("beta_im", {m(0, 1).imag()});
        }
        emit(doc, st);
    });

    for (auto* sc : app.get_subcommands({})) sc->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
