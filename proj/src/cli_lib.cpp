#include "semiphoton/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <random>

#include "semiphoton/ring.hpp"

namespace semiphoton::cli {

namespace {

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

nlohmann::json meta_block() {
    const auto now = std::chrono::system_clock::now().time_since_epoch();
    return {{"tool", "semiphoton"},
            {"timestamp_unix", std::chrono::duration_cast<std::chrono::seconds>(now).count()}};
}

nlohmann::json complex_json(const cplx& z) { return {{"re", z.real()}, {"im", z.imag()}}; }

nlohmann::json bispinor_json(const Bispinor& b) {
    nlohmann::json arr = nlohmann::json::array();
    for (int i = 0; i < 4; ++i) arr.push_back(complex_json(b[i]));
    return arr;
}

void write_text_file(const std::string& dir, const std::string& name, const std::string& body) {
    namespace fs = std::filesystem;
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw std::ios_base::failure("cannot create output dir '" + dir + "': " + ec.message());
    const fs::path path = fs::path(dir) / name;
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::ios_base::failure("cannot open '" + path.string() + "' for writing");
    out << body;
    if (!out) throw std::ios_base::failure("write failed for '" + path.string() + "'");
}

}  // namespace

std::string resolve_output_dir(const RunConfig& cfg) {
    if (const char* env = std::getenv("SEMIPHOTON_OUT"); env && *env) return env;
    return cfg.output_dir;
}

// --- verify -----------------------------------------------------------------

VerifyReport run_verify(const VerifyConfig& cfg) {
    AlphaSet alpha = build_alpha_set();
    if (cfg.corrupt_matrix) alpha.alpha2(0, 3) += 1e-3;  // test hook

    std::mt19937_64 rng(cfg.run.seed);
    std::uniform_real_distribution<double> uni(-1.0, 1.0);
    const auto random_spinor = [&] {
        Bispinor b;
        for (int i = 0; i < 4; ++i) b[i] = cplx(uni(rng), uni(rng));
        return b;
    };

    VerifyReport rep;
    const auto add = [&](const std::string& name, long samples, double residual,
                         double threshold) {
        IdentityResult r{name, samples, residual, threshold, residual <= threshold};
        if (!r.pass && rep.first_failure.empty()) rep.first_failure = name;
        rep.identities.push_back(std::move(r));
    };
    const Thresholds& t = cfg.thresholds;

    add("alpha_anticommutation", 16, anticommutation_defect(alpha), t.anticommutation_abs);
    add("alpha5_product", 1, alpha5_product_defect(alpha), t.alpha5_product_abs);
    add("alpha_hermiticity", 6, hermiticity_defect(alpha), t.hermiticity_abs);

    {
        double worst = 0.0;
        for (int s = 0; s < cfg.samples; ++s) {
            const Bispinor psi = random_spinor();
            worst = std::max(worst, (to_bispinor(from_bispinor(psi)) - psi).max_abs());
        }
        add("field_roundtrip", cfg.samples, worst, t.roundtrip_abs);
    }
    {
        double scalar = 0.0, density = 0.0, flux = 0.0, pseudo = 0.0, reality = 0.0;
        for (int s = 0; s < cfg.samples; ++s) {
            EMFieldPoint f;
            f.E = CVec3::from_real({uni(rng), 0.0, uni(rng)});
            f.H = CVec3::from_real({uni(rng), 0.0, uni(rng)});
            const BilinearFieldResiduals r = bilinear_vs_field_check(f, alpha);
            if (r.scale > 0.0) {
                scalar = std::max(scalar, r.scalar / r.scale);
                density = std::max(density, r.density / r.scale);
                flux = std::max(flux, r.flux / r.scale);
                pseudo = std::max(pseudo, r.pseudoscalar / r.scale);
            }
            const Bispinor psi = random_spinor();
            for (int mu = 0; mu <= 5; ++mu)
                reality = std::max(reality, std::abs(bilinear(psi, alpha.by_index(mu)).imag()) /
                                                psi.norm2());
        }
        add("bilinear_scalar", cfg.samples, scalar, t.bilinear_rel);
        add("bilinear_density", cfg.samples, density, t.bilinear_rel);
        add("bilinear_flux", cfg.samples, flux, t.bilinear_rel);
        add("bilinear_pseudoscalar", cfg.samples, pseudo, t.bilinear_rel);
        add("bilinear_reality", cfg.samples, reality, t.bilinear_reality_rel);
    }
    {
        double fierz = 0.0, em = 0.0;
        for (int s = 0; s < cfg.samples; ++s) {
            const Bispinor psi = random_spinor();
            const double scale = psi.norm2() * psi.norm2();
            if (scale > 0.0) fierz = std::max(fierz, fierz_check(psi, alpha) / scale);
            const Vec3 E{uni(rng), uni(rng), uni(rng)};
            const Vec3 H{uni(rng), uni(rng), uni(rng)};
            const double em_scale = std::pow(norm2(E) + norm2(H), 2);
            if (em_scale > 0.0) em = std::max(em, em_identity_check(E, H) / em_scale);
        }
        add("fierz_correlation", cfg.samples, fierz, t.fierz_rel);
        add("field_invariant_identity", cfg.samples, em, t.em_identity_rel);
    }
    {
        const double mass = 1.0;
        double system = 0.0, dispersion = 0.0;
        for (int s = 0; s < cfg.momenta; ++s) {
            const Vec3 p{10.0 * uni(rng), 10.0 * uni(rng), 10.0 * uni(rng)};
            for (const EnergyBranch branch : {EnergyBranch::positive, EnergyBranch::negative})
                for (const int index : {1, 2}) {
                    const auto sol = build_spinor(p, mass, branch, index, uni(rng));
                    const double scale = (std::abs(sol.energy) + mass) * sol.amplitude.norm();
                    system = std::max(system, system_residual(sol, mass) / scale);
                    dispersion = std::max(
                        dispersion, std::abs(sol.energy * sol.energy - norm2(p) - mass * mass) /
                                        (sol.energy * sol.energy));
                }
        }
        add("planewave_system", 4L * cfg.momenta, system, t.planewave_residual_rel);
        add("planewave_dispersion", 4L * cfg.momenta, dispersion, t.dispersion_rel);
    }
    {
        // published y-specialization patterns, compared up to a global phase
        const Bispinor published[4] = {
            Bispinor{{cplx(0.0), cplx(0.5), iu, cplx(0.0)}},
            Bispinor{{cplx(-0.5), cplx(0.0), cplx(0.0), iu}},
            Bispinor{{iu, cplx(0.0), cplx(0.0), cplx(-0.5)}},
            Bispinor{{cplx(0.0), iu, cplx(0.5), cplx(0.0)}}};
        double worst = 0.0;
        int slot = 0;
        for (const EnergyBranch branch : {EnergyBranch::positive, EnergyBranch::negative})
            for (const int index : {1, 2}) {
                const Bispinor b = specialize_y(1.0, branch, index);
                worst = std::max(worst, phase_aligned_distance(b, published[slot++]));
            }
        add("specialization_patterns", 4, worst, t.specialize_abs);
    }

    rep.all_pass = true;
    for (const auto& r : rep.identities) rep.all_pass = rep.all_pass && r.pass;
    return rep;
}

nlohmann::json to_json(const VerifyReport& report, const VerifyConfig& cfg) {
    nlohmann::json identities = nlohmann::json::array();
    for (const auto& r : report.identities)
        identities.push_back({{"name", r.name},
                              {"samples", r.samples},
                              {"max_residual", r.max_residual},
                              {"threshold", r.threshold},
                              {"pass", r.pass}});
    return {{"meta", meta_block()},
            {"config",
             {{"samples", cfg.samples},
              {"momenta", cfg.momenta},
              {"seed", cfg.run.seed},
              {"corrupt_matrix", cfg.corrupt_matrix}}},
            {"identities", identities},
            {"all_pass", report.all_pass},
            {"first_failure", report.first_failure}};
}

void print_table(const VerifyReport& report, std::ostream& os) {
    for (const auto& r : report.identities) {
        os << (r.pass ? "[PASS] " : "[FAIL] ") << std::left << std::setw(28) << r.name
           << " samples=" << std::setw(6) << r.samples << " max_residual=" << fmt(r.max_residual)
           << " threshold=" << fmt(r.threshold) << "\n";
    }
    os << (report.all_pass ? "all identities pass" : "FAILED: " + report.first_failure) << "\n";
}

// --- planewave ----------------------------------------------------------------

PlaneWaveReport run_planewave(const PlaneWaveConfig& cfg) {
    if (cfg.branch != "+" && cfg.branch != "-")
        throw CLI::ValidationError("--branch", "must be + or -");
    if (cfg.index != 1 && cfg.index != 2)
        throw CLI::ValidationError("--index", "must be 1 or 2");
    const EnergyBranch branch =
        cfg.branch == "+" ? EnergyBranch::positive : EnergyBranch::negative;
    const double mass = 1.0;  // natural units

    PlaneWaveReport rep;
    rep.solution = build_spinor({cfg.px, cfg.py, cfg.pz}, mass, branch, cfg.index, cfg.phi);
    rep.residual = system_residual(rep.solution, mass);
    rep.dispersion_defect = std::abs(rep.solution.energy * rep.solution.energy -
                                     norm2(rep.solution.momentum) - mass * mass);
    rep.degenerate = rep.solution.amplitude.norm() == 0.0;

    const bool at_special_p = cfg.px == 0.0 && cfg.py == 1.0 && cfg.pz == 0.0;
    if (cfg.specialize || at_special_p) {
        rep.specialized = true;
        rep.specialized_amplitude = specialize_y(mass, branch, cfg.index);
        const Bispinor published[2][2] = {
            {Bispinor{{cplx(0.0), cplx(0.5), iu, cplx(0.0)}},
             Bispinor{{cplx(-0.5), cplx(0.0), cplx(0.0), iu}}},
            {Bispinor{{iu, cplx(0.0), cplx(0.0), cplx(-0.5)}},
             Bispinor{{cplx(0.0), iu, cplx(0.5), cplx(0.0)}}}};
        const int b = branch == EnergyBranch::positive ? 0 : 1;
        rep.pattern_distance =
            phase_aligned_distance(rep.specialized_amplitude, published[b][cfg.index - 1]);
        rep.specialization_note =
            "substitution uses eps = ±m c^2 at p_y = m c (the dispersion root is sqrt(2) m c^2); "
            "component magnitudes give |H| = 2 |E| while the prose states E_s = 2 H_s";
    }
    return rep;
}

nlohmann::json to_json(const PlaneWaveReport& rep, const PlaneWaveConfig& cfg) {
    nlohmann::json j{{"meta", meta_block()},
                     {"config",
                      {{"px", cfg.px},
                       {"py", cfg.py},
                       {"pz", cfg.pz},
                       {"branch", cfg.branch},
                       {"index", cfg.index},
                       {"phi", cfg.phi}}},
                     {"energy", rep.solution.energy},
                     {"amplitude", bispinor_json(rep.solution.amplitude)},
                     {"system_residual", rep.residual},
                     {"dispersion_defect", rep.dispersion_defect},
                     {"degenerate", rep.degenerate}};
    if (rep.specialized) {
        j["specialization"] = {{"amplitude", bispinor_json(rep.specialized_amplitude)},
                               {"pattern_distance", rep.pattern_distance},
                               {"note", rep.specialization_note}};
    }
    return j;
}

void print_table(const PlaneWaveReport& rep, std::ostream& os) {
    os << "energy            " << fmt(rep.solution.energy) << "\n";
    for (int i = 0; i < 4; ++i) {
        const cplx b = rep.solution.amplitude[i];
        os << "B_" << (i + 1) << "               " << fmt(b.real()) << (b.imag() < 0 ? " - " : " + ")
           << fmt(std::abs(b.imag())) << " i\n";
    }
    os << "system_residual   " << fmt(rep.residual) << "\n"
       << "dispersion_defect " << fmt(rep.dispersion_defect) << "\n";
    if (rep.degenerate) os << "degenerate        true\n";
    if (rep.specialized) {
        os << "specialized B     ";
        for (int i = 0; i < 4; ++i) {
            const cplx b = rep.specialized_amplitude[i];
            os << "(" << fmt(b.real()) << ", " << fmt(b.imag()) << ") ";
        }
        os << "\npattern_distance  " << fmt(rep.pattern_distance) << "\n"
           << "note              " << rep.specialization_note << "\n";
    }
}

// --- evolve ---------------------------------------------------------------------

EvolveResult run_evolve(const EvolveConfig& cfg) {
    const Units units;
    const double dt = cfg.dt > 0.0 ? cfg.dt : 0.25 * cfg.dy / units.c;
    const double bound = std::min(cfg.cfl_limit, 0.5);
    if (units.c * dt / cfg.dy > bound) {
        const double suggested = bound * cfg.dy / units.c;
        throw CflViolation("evolve: CFL violation (c dt / dy = " + fmt(units.c * dt / cfg.dy) +
                               " > " + fmt(bound) + "); use dt <= " + fmt(suggested),
                           suggested);
    }

    FieldGrid1D grid = [&] {
        if (cfg.init == "eigenstate")
            return make_eigenstate_grid(cfg.n, cfg.dy, cfg.mass, cfg.mode, EnergyBranch::positive,
                                        1);
        if (cfg.init == "massless") return make_massless_mode_grid(cfg.n, cfg.dy, cfg.mode);
        if (cfg.init == "superposition")
            return make_superposition_grid(cfg.n, cfg.dy, cfg.mass, cfg.mode, cfg.mode + 2);
        throw CLI::ValidationError("--init", "must be eigenstate, massless or superposition");
    }();
    const SpatialScheme scheme = [&] {
        if (cfg.spatial == "central4") return SpatialScheme::central4;
        if (cfg.spatial == "spectral") return SpatialScheme::spectral;
        throw CLI::ValidationError("--spatial", "must be central4 or spectral");
    }();

    EvolveResult res;
    const double norm0 = total_norm(grid);
    const double energy0 = total_energy(grid);

    Rk4Stepper stepper(cfg.n, scheme, units);
    FieldGrid1D prev = grid;
    const auto sample = [&](std::size_t s, double residual) {
        res.rows.push_back({s, grid.time, total_norm(grid), total_energy(grid), residual});
    };
    if (cfg.steps > 0) sample(0, 0.0);
    for (std::size_t s = 1; s <= cfg.steps; ++s) {
        prev = grid;
        stepper.step(grid, dt);
        const bool sampled = cfg.sample_every > 0 && (s % cfg.sample_every == 0 || s == cfg.steps);
        if (sampled) {
            const double resid = continuity_residual(prev, grid, units);
            res.max_continuity_residual = std::max(res.max_continuity_residual, resid);
            sample(s, resid);
        }
    }

    if (norm0 > 0.0) res.norm_drift_rel = std::abs(total_norm(grid) - norm0) / norm0;
    if (energy0 > 0.0) res.energy_drift_rel = std::abs(total_energy(grid) - energy0) / energy0;
    res.maxwell_residual_rel = maxwell_current_residual(grid, units).relative();
    return res;
}

void write_csv(const EvolveResult& result, std::ostream& os) {
    os << "step,time,total_norm,total_U,continuity_residual\n";
    for (const Diagnostics& d : result.rows)
        os << d.step << "," << fmt(d.time) << "," << fmt(d.total_norm) << "," << fmt(d.total_U)
           << "," << fmt(d.continuity_residual) << "\n";
}

nlohmann::json to_json(const EvolveResult& result, const EvolveConfig& cfg) {
    return {{"meta", meta_block()},
            {"config",
             {{"n", cfg.n},
              {"dy", cfg.dy},
              {"dt", cfg.dt},
              {"steps", cfg.steps},
              {"mass", cfg.mass},
              {"init", cfg.init},
              {"mode", cfg.mode},
              {"spatial", cfg.spatial},
              {"sample_every", cfg.sample_every}}},
            {"samples", result.rows.size()},
            {"norm_drift_rel", result.norm_drift_rel},
            {"energy_drift_rel", result.energy_drift_rel},
            {"max_continuity_residual", result.max_continuity_residual},
            {"maxwell_residual_rel", result.maxwell_residual_rel}};
}

// --- nonlinear ---------------------------------------------------------------------

NonlinearCmdResult run_nonlinear(const NonlinearCmdConfig& cfg) {
    const AlphaSet alpha = build_alpha_set();
    NonlinearCmdResult res;

    NonlinearState st = make_self_consistent_state(cfg.k, cfg.solver, cfg.mass);
    st.B = st.B * cplx(cfg.perturb);
    res.iteration = iterate_self_consistent(st, cfg.solver, alpha, cfg.mass);
    res.lagrangians = lagrangian_nonlinear(res.iteration.state, cfg.solver, cfg.mass, alpha);

    const PhysicalConstants k;
    res.photon_photon = photon_photon_coefficient_compare(k.hbar, k.c, k.m_e, k.e);
    res.coefficient_audit = cubic_coefficient_audit(k.hbar, k.c, k.m_e);
    return res;
}

void write_trace_csv(const IterationResult& iteration, std::ostream& os) {
    os << "iteration,eps_s,p_s_norm,residual\n";
    for (const IterTraceRow& r : iteration.trace)
        os << r.iter << "," << fmt(r.eps_s) << "," << fmt(r.p_s_norm) << "," << fmt(r.residual)
           << "\n";
}

nlohmann::json to_json(const NonlinearCmdResult& res, const NonlinearCmdConfig& cfg) {
    const auto& it = res.iteration;
    return {{"meta", meta_block()},
            {"config",
             {{"k", cfg.k},
              {"mass", cfg.mass},
              {"perturb", cfg.perturb},
              {"damping", cfg.solver.damping},
              {"max_iters", cfg.solver.max_iters},
              {"tol", cfg.solver.tol},
              {"r_s", cfg.solver.r_s},
              {"delta_tau", cfg.solver.delta_tau_s()}}},
            {"converged", it.converged},
            {"iterations", it.iterations},
            {"final",
             {{"eps_s", it.trace.empty() ? 0.0 : it.trace.back().eps_s},
              {"p_s_norm", it.trace.empty() ? 0.0 : it.trace.back().p_s_norm},
              {"residual", it.trace.empty() ? 0.0 : it.trace.back().residual},
              {"omega", it.state.omega},
              {"amplitude", bispinor_json(it.state.B)}}},
            {"lagrangians",
             {{"dirac", complex_json(res.lagrangians.L_dirac)},
              {"semi_photon", complex_json(res.lagrangians.L_semi_photon)},
              {"nonlinear_quantum", complex_json(res.lagrangians.L_nonlinear_quantum)},
              {"nonlinear_em", complex_json(res.lagrangians.L_nonlinear_em)},
              {"fierz_residual", res.lagrangians.fierz_residual},
              {"em_identity_residual", res.lagrangians.em_identity_residual},
              {"dual_path_residual", res.lagrangians.dual_path_residual},
              {"fields_real", res.lagrangians.fields_real}}},
            {"photon_photon",
             {{"c_n", res.photon_photon.c_n},
              {"c_n_closed_form", res.photon_photon.c_n_closed_form},
              {"b", res.photon_photon.b},
              {"ratio", res.photon_photon.ratio},
              {"ratio_closed_form", res.photon_photon.ratio_closed_form},
              {"inner_coeff_cubic", res.photon_photon.inner_coeff_cubic},
              {"inner_coeff_weak_field", res.photon_photon.inner_coeff_weak_field},
              {"note", res.photon_photon.note}}},
            {"coefficient_audit",
             {{"printed", res.coefficient_audit.printed},
              {"derived", res.coefficient_audit.derived},
              {"ratio", res.coefficient_audit.ratio},
              {"note", res.coefficient_audit.note}}}};
}

// --- torus ------------------------------------------------------------------------

double TorusReport::value(const std::string& name) const {
    for (const auto& r : rows)
        if (r.name == name) return r.value;
    throw std::out_of_range("torus report: no row named '" + name + "'");
}

TorusReport run_torus(const TorusConfig& cfg) {
    if (cfg.units != "cgs" && cfg.units != "natural")
        throw CLI::ValidationError("--units", "must be cgs or natural");
    const bool natural = cfg.units == "natural";
    const PhysicalConstants k =
        natural ? PhysicalConstants::natural() : PhysicalConstants::codata2018();
    const ModelReport m = build_model_report(k);
    const SpinChain spin = spin_chain(k);

    const std::string cm = natural ? "" : " cm";
    TorusReport rep;
    rep.rows = {
        {"r_p", m.geometry.r_p, natural ? "" : "cm", "hbar / (2 m_e c)"},
        {"lambda_p", m.geometry.lambda_p, natural ? "" : "cm", "2 pi r_p"},
        {"omega_p", m.geometry.omega_p, natural ? "" : "rad/s", "2 m_e c^2 / hbar = c / r_p"},
        {"S_tr", m.geometry.S_tr, natural ? "" : "cm^2", "pi r_p^2"},
        {"delta_tau", m.geometry.delta_tau_p, natural ? "" : "cm^3",
         "2 pi^2 r_p^3; unchanged on division"},
        {"sigma_p", spin.sigma_p, natural ? "" : "erg s", "p_p r_p with p_p = 2 m_e c"},
        {"sigma_s", spin.sigma_s, natural ? "" : "erg s", "sigma_p / 2, equal split"},
        {"r_s", spin.r_s, natural ? "" : "cm", "sigma_s / p_s with p_s = m_e c; equals r_p"},
        {"q", m.q, natural ? "" : "statC", "sqrt(2 hbar c / pi), constants only"},
        {"E_o_implied", m.E_o_implied, natural ? "" : "statvolt/cm", "q / r_s^2"},
        {"m_s", m.m_s, natural ? "" : "g", "pi q^2 / (4 w c r_s^2); closes on m_e"},
        {"mu_printed", m.mu_printed, natural ? "" : "statC erg s / g",
         "(1/2) q hbar / (2 m_e), as printed (no /c)"},
        {"mu_gaussian", m.mu_gaussian, natural ? "" : "statC cm",
         "I S_I / c = q hbar / (4 m_e c)"},
        {"bohr_ratio", m.bohr_ratio, "", "mu against the q-scaled magneton; exactly 1/2"},
        {"alpha_q", m.alpha_q, "", "q^2 / (hbar c) = 2/pi"},
        {"alpha_em", m.alpha_em, "", "e^2 / (hbar c)"},
        {"alpha_ratio", m.alpha_ratio, "", "alpha_q / alpha_em"},
    };
    (void)cm;
    return rep;
}

nlohmann::json to_json(const TorusReport& rep, const TorusConfig& cfg) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& r : rep.rows)
        rows.push_back({{"name", r.name}, {"value", r.value}, {"unit", r.unit}, {"note", r.note}});
    return {{"meta", meta_block()}, {"config", {{"units", cfg.units}}}, {"rows", rows}};
}

void print_table(const TorusReport& rep, std::ostream& os) {
    std::size_t width = 0;
    for (const auto& r : rep.rows) width = std::max(width, r.name.size());
    for (const auto& r : rep.rows) {
        os << std::left << std::setw(static_cast<int>(width) + 2) << r.name << std::setw(24)
           << fmt(r.value) << (r.unit.empty() ? "" : r.unit + "  ") << "# " << r.note << "\n";
    }
}

// --- entry point -------------------------------------------------------------------

namespace {

// pull defaults from a --config JSON file; explicit flags keep priority
nlohmann::json load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::ios_base::failure("cannot read config file '" + path + "'");
    nlohmann::json j;
    in >> j;
    return j;
}

template <typename T>
void apply_key(const nlohmann::json& j, const CLI::Option* opt, const char* key, T& target) {
    if (opt != nullptr && opt->count() > 0) return;  // flag overrides config
    if (j.contains(key)) target = j.at(key).get<T>();
}

}  // namespace

int run(int argc, const char* const* argv) {
    CLI::App app{"semiphoton: bispinor electrodynamics verification toolkit"};
    app.require_subcommand(1);

    VerifyConfig vcfg;
    PlaneWaveConfig pcfg;
    EvolveConfig ecfg;
    NonlinearCmdConfig ncfg;
    TorusConfig tcfg;
    std::string config_path;

    CLI::App* verify = app.add_subcommand("verify", "run every identity suite");
    auto* v_samples = verify->add_option("--samples", vcfg.samples, "random samples per identity");
    auto* v_momenta = verify->add_option("--momenta", vcfg.momenta, "random momenta for the wave system");
    auto* v_seed = verify->add_option("--seed", vcfg.run.seed, "RNG seed");
    verify->add_flag("--corrupt-matrix", vcfg.corrupt_matrix,
                     "test hook: perturb one matrix entry and watch the suite fail");
    auto* v_out = verify->add_option("--output-dir", vcfg.run.output_dir, "report directory");
    auto* v_fmt = verify->add_option("--format", vcfg.run.format, "table or json")
                      ->check(CLI::IsMember({"table", "json"}));
    verify->add_option("--config", config_path, "JSON file mirroring the flag names");

    CLI::App* planewave = app.add_subcommand("planewave", "build and check one wave family");
    planewave->add_option("--px", pcfg.px, "momentum x (units of m_e c)");
    planewave->add_option("--py", pcfg.py, "momentum y (units of m_e c)");
    planewave->add_option("--pz", pcfg.pz, "momentum z (units of m_e c)");
    planewave->add_option("--branch", pcfg.branch, "energy branch, + or -")
        ->check(CLI::IsMember({"+", "-"}));
    planewave->add_option("--index", pcfg.index, "family index, 1 or 2")
        ->check(CLI::IsMember({1, 2}));
    planewave->add_option("--phi", pcfg.phi, "initial phase");
    planewave->add_flag("--specialize", pcfg.specialize,
                        "apply the published y-substitution and compare patterns");
    auto* p_fmt = planewave->add_option("--format", pcfg.run.format, "table or json")
                      ->check(CLI::IsMember({"table", "json"}));

    CLI::App* evolve = app.add_subcommand("evolve", "integrate the 1-D lattice dynamics");
    auto* e_n = evolve->add_option("--n", ecfg.n, "lattice points");
    auto* e_dy = evolve->add_option("--dy", ecfg.dy, "lattice spacing");
    auto* e_dt = evolve->add_option("--dt", ecfg.dt, "time step (default 0.25 dy/c)");
    auto* e_steps = evolve->add_option("--steps", ecfg.steps, "step count");
    auto* e_mass = evolve->add_option("--mass", ecfg.mass, "mass (natural units)");
    auto* e_init = evolve->add_option("--init", ecfg.init, "initial state")
                       ->check(CLI::IsMember({"eigenstate", "massless", "superposition"}));
    auto* e_mode = evolve->add_option("--mode", ecfg.mode, "Fourier mode number");
    auto* e_sample = evolve->add_option("--sample-every", ecfg.sample_every, "CSV sample stride");
    auto* e_spatial = evolve->add_option("--spatial", ecfg.spatial, "derivative scheme")
                          ->check(CLI::IsMember({"central4", "spectral"}));
    auto* e_out = evolve->add_option("--output-dir", ecfg.run.output_dir, "report directory");
    evolve->add_option("--config", config_path, "JSON file mirroring the flag names");

    CLI::App* nonlinear = app.add_subcommand("nonlinear", "self-consistency iteration and reports");
    nonlinear->add_option("--k", ncfg.k, "wavenumber along y (0 = rest state)");
    nonlinear->add_option("--mass", ncfg.mass, "target mass for the rest state");
    nonlinear->add_option("--perturb", ncfg.perturb, "initial amplitude factor");
    nonlinear->add_option("--damping", ncfg.solver.damping, "fixed-point damping in (0,1]");
    nonlinear->add_option("--max-iters", ncfg.solver.max_iters, "iteration cap");
    nonlinear->add_option("--tol", ncfg.solver.tol, "relative-change stop");
    nonlinear->add_option("--r-s", ncfg.solver.r_s, "self-interaction radius");
    auto* n_out = nonlinear->add_option("--output-dir", ncfg.run.output_dir, "report directory");

    CLI::App* torus = app.add_subcommand("torus", "torus-model constants and chains");
    torus->add_option("--units", tcfg.units, "cgs or natural")
        ->check(CLI::IsMember({"cgs", "natural"}));
    auto* t_fmt = torus->add_option("--format", tcfg.run.format, "table or json")
                      ->check(CLI::IsMember({"table", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (*verify) {
            if (!config_path.empty()) {
                const nlohmann::json j = load_config_file(config_path);
                apply_key(j, v_samples, "samples", vcfg.samples);
                apply_key(j, v_momenta, "momenta", vcfg.momenta);
                apply_key(j, v_seed, "seed", vcfg.run.seed);
                apply_key(j, v_out, "output_dir", vcfg.run.output_dir);
                apply_key(j, v_fmt, "format", vcfg.run.format);
            }
            const VerifyReport rep = run_verify(vcfg);
            const nlohmann::json j = to_json(rep, vcfg);
            write_text_file(resolve_output_dir(vcfg.run), "verify_report.json", j.dump(2) + "\n");
            if (vcfg.run.format == "json")
                std::cout << j.dump(2) << "\n";
            else
                print_table(rep, std::cout);
            return rep.all_pass ? 0 : 1;
        }
        if (*planewave) {
            (void)p_fmt;
            const PlaneWaveReport rep = run_planewave(pcfg);
            if (pcfg.run.format == "json")
                std::cout << to_json(rep, pcfg).dump(2) << "\n";
            else
                print_table(rep, std::cout);
            return 0;
        }
        if (*evolve) {
            if (!config_path.empty()) {
                const nlohmann::json j = load_config_file(config_path);
                apply_key(j, e_n, "n", ecfg.n);
                apply_key(j, e_dy, "dy", ecfg.dy);
                apply_key(j, e_dt, "dt", ecfg.dt);
                apply_key(j, e_steps, "steps", ecfg.steps);
                apply_key(j, e_mass, "mass", ecfg.mass);
                apply_key(j, e_init, "init", ecfg.init);
                apply_key(j, e_mode, "mode", ecfg.mode);
                apply_key(j, e_sample, "sample_every", ecfg.sample_every);
                apply_key(j, e_spatial, "spatial", ecfg.spatial);
                apply_key(j, e_out, "output_dir", ecfg.run.output_dir);
            }
            const EvolveResult res = run_evolve(ecfg);
            std::ostringstream csv;
            write_csv(res, csv);
            const std::string dir = resolve_output_dir(ecfg.run);
            write_text_file(dir, "evolve.csv", csv.str());
            const nlohmann::json j = to_json(res, ecfg);
            write_text_file(dir, "evolve_summary.json", j.dump(2) + "\n");
            std::cout << j.dump(2) << "\n";
            return 0;
        }
        if (*nonlinear) {
            const NonlinearCmdResult res = run_nonlinear(ncfg);
            std::ostringstream csv;
            write_trace_csv(res.iteration, csv);
            const std::string dir = resolve_output_dir(ncfg.run);
            write_text_file(dir, "nonlinear_trace.csv", csv.str());
            const nlohmann::json j = to_json(res, ncfg);
            write_text_file(dir, "nonlinear_report.json", j.dump(2) + "\n");
            std::cout << j.dump(2) << "\n";
            (void)n_out;
            return res.iteration.converged ? 0 : 1;
        }
        if (*torus) {
            (void)t_fmt;
            const TorusReport rep = run_torus(tcfg);
            if (tcfg.run.format == "json")
                std::cout << to_json(rep, tcfg).dump(2) << "\n";
            else
                print_table(rep, std::cout);
            return 0;
        }
    } catch (const CflViolation& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::ios_base::failure& e) {
        std::cerr << "i/o error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}

}  // namespace semiphoton::cli
