// Command-line front end: the verification suites, the plane-wave and
// evolution runners, the self-consistency solver and the torus calculator,
// with JSON/CSV/table reports. Everything here is also callable directly so
// the tests can exercise the command contracts in-process.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "semiphoton/evolution.hpp"
#include "semiphoton/nonlinear.hpp"
#include "semiphoton/torus.hpp"

namespace semiphoton::cli {

/// One versioned table of every pass/fail threshold the suites use.
struct Thresholds {
    double anticommutation_abs = 0.0;       // exact integer algebra
    double alpha5_product_abs = 0.0;        // exact integer algebra
    double hermiticity_abs = 0.0;           // exact integer algebra
    double roundtrip_abs = 0.0;             // exact packing
    double bilinear_rel = 1e-12;            // bilinear-vs-field identities
    double bilinear_reality_rel = 1e-14;    // Im(psi^+ a psi)
    double fierz_rel = 1e-12;
    double em_identity_rel = 1e-12;
    double planewave_residual_rel = 1e-12;
    double dispersion_rel = 1e-12;
    double specialize_abs = 1e-14;          // published-pattern distance
    double maxwell_rel = 1e-10;
    double norm_drift_rel = 1e-8;
    double energy_drift_rel = 1e-6;
    double nonlinear_residual_rel = 1e-10;
    double lagrangian_null_rel = 1e-10;
};

struct RunConfig {
    std::string output_dir = ".";  // SEMIPHOTON_OUT overrides
    std::string format = "table";  // table | json | csv
    std::uint64_t seed = 12345;
};

/// Resolved output directory: the environment variable wins over the config.
std::string resolve_output_dir(const RunConfig& cfg);

// --- verify -----------------------------------------------------------------

struct VerifyConfig {
    RunConfig run;
    int samples = 1000;
    int momenta = 100;
    bool corrupt_matrix = false;  // test hook: perturbs one matrix entry
    Thresholds thresholds;
};

struct IdentityResult {
    std::string name;
    long samples = 0;
    double max_residual = 0.0;
    double threshold = 0.0;
    bool pass = false;
};

struct VerifyReport {
    std::vector<IdentityResult> identities;
    bool all_pass = false;
    std::string first_failure;  // named failing identity, empty when green
};

VerifyReport run_verify(const VerifyConfig& cfg);
nlohmann::json to_json(const VerifyReport& report, const VerifyConfig& cfg);
void print_table(const VerifyReport& report, std::ostream& os);

// --- planewave ----------------------------------------------------------------

struct PlaneWaveConfig {
    RunConfig run;
    double px = 0.0, py = 0.0, pz = 0.0;  // units of m_e c
    std::string branch = "+";
    int index = 1;
    double phi = 0.0;
    bool specialize = false;
};

struct PlaneWaveReport {
    PlaneWaveSolution solution;
    double residual = 0.0;
    double dispersion_defect = 0.0;
    bool degenerate = false;
    // specialization block (filled when requested or at p = (0, m_e c, 0))
    bool specialized = false;
    Bispinor specialized_amplitude;
    double pattern_distance = 0.0;  // phase-aligned distance to the published pattern
    std::string specialization_note;
};

PlaneWaveReport run_planewave(const PlaneWaveConfig& cfg);
nlohmann::json to_json(const PlaneWaveReport& report, const PlaneWaveConfig& cfg);
void print_table(const PlaneWaveReport& report, std::ostream& os);

// --- evolve ---------------------------------------------------------------------

struct EvolveConfig {
    RunConfig run;
    std::size_t n = 256;
    double dy = 2.0 * pi / 256.0;
    double dt = 0.0;  // <= 0 picks 0.25 dy / c
    std::size_t steps = 1000;
    double mass = 1.0;
    std::string init = "eigenstate";  // eigenstate | massless | superposition
    int mode = 1;
    std::size_t sample_every = 10;
    std::string spatial = "central4";  // central4 | spectral
    double cfl_limit = 0.5;
};

struct EvolveResult {
    std::vector<Diagnostics> rows;
    double norm_drift_rel = 0.0;
    double energy_drift_rel = 0.0;
    double max_continuity_residual = 0.0;
    double maxwell_residual_rel = 0.0;
};

EvolveResult run_evolve(const EvolveConfig& cfg);  // throws CflViolation
void write_csv(const EvolveResult& result, std::ostream& os);
nlohmann::json to_json(const EvolveResult& result, const EvolveConfig& cfg);

// --- nonlinear ---------------------------------------------------------------------

struct NonlinearCmdConfig {
    RunConfig run;
    double k = 1.0;
    double mass = 1.0;  // target mass, used when k = 0
    double perturb = 1.1;
    NonlinearConfig solver;
};

struct NonlinearCmdResult {
    IterationResult iteration;
    LagrangianReport lagrangians;
    PhotonPhotonComparison photon_photon;
    CubicCoefficientAudit coefficient_audit;
};

NonlinearCmdResult run_nonlinear(const NonlinearCmdConfig& cfg);
void write_trace_csv(const IterationResult& iteration, std::ostream& os);
nlohmann::json to_json(const NonlinearCmdResult& result, const NonlinearCmdConfig& cfg);

// --- torus ------------------------------------------------------------------------

struct TorusConfig {
    RunConfig run;
    std::string units = "cgs";  // cgs | natural
};

struct TorusRow {
    std::string name;
    double value = 0.0;
    std::string unit;
    std::string note;  // provenance of the closed form
};

struct TorusReport {
    std::vector<TorusRow> rows;
    double value(const std::string& name) const;  // throws on unknown name
};

TorusReport run_torus(const TorusConfig& cfg);
nlohmann::json to_json(const TorusReport& report, const TorusConfig& cfg);
void print_table(const TorusReport& report, std::ostream& os);

// --- entry point -------------------------------------------------------------------

/// Full CLI: subcommands verify | planewave | evolve | nonlinear | torus.
/// Returns the process exit code (0 success, 1 failed checks, 2 usage or
/// I/O errors).
int run(int argc, const char* const* argv);

}  // namespace semiphoton::cli
