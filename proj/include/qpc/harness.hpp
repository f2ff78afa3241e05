#pragma once

// Experiment front end shared by the CLI and the acceptance suite: a flat,
// fully-resolved config, deterministic report emission (summary.json + CSV
// tables with 17-significant-digit floats and fixed orders), and the bundled
// reproduction pipelines.

#include <qpc/domination.hpp>
#include <qpc/fourier.hpp>
#include <qpc/gallery.hpp>
#include <qpc/lyapunov.hpp>
#include <qpc/splitting.hpp>

#include <json.hpp>

#include <iosfwd>
#include <string>
#include <vector>

namespace qpc {

struct ExperimentConfig {
    std::string operation;  // construct|lyapunov|dominate|sweep|degree|homology|reproduce

    // cocycle source: gallery name, or a JSON interchange file
    std::string cocycle = "const-diag";
    std::string cocycle_file;

    std::vector<std::string> frequency;  // tokens; empty -> default_frequency(d of cocycle)
    std::string out_dir = "out";
    unsigned long seed = 20240211;

    // lyapunov
    long n = 100000;
    int phases = 8;
    double gap_tol = 0.05;

    // dominate / sweep
    int k = 1;
    int grid_per_dim = 8;
    std::vector<long> n_schedule = {25, 50, 100, 200, 400};
    double angle_tol = 0.05;
    std::vector<double> y_list = {0.0, 0.05, 0.1};  // sweep offsets along the first axis

    // degree
    std::string field = "constant";
    std::string field_csv;
    int field_n = 128;

    // homology
    std::string homology_op = "betti";  // betti|kunneth|split|obstruct
    std::string space = "torus";        // betti/kunneth factor: torus|grassmann
    int hd = 3;                         // torus dimension for betti
    int hk = 2, hm = 4;                 // grassmann indices
    bool homology_nonzero = false;
    std::string split_instance = "jordan";  // jordan|blockdiag|identity or a JSON file via split_file
    std::string split_file;

    // gallery parameters
    std::vector<double> diag = {2.0, 0.5};
    double c = 2.0;
    double lambda = 3.0;
    int gal_d = 2, gal_k = 2, gal_m = 4;

    // reproduce
    std::string claim;  // thm1.1-spectrum|remark3.6-sweep|prop2.1-splitting|cor3.2-criterion
};

nlohmann::json config_to_json(const ExperimentConfig& cfg);
ExperimentConfig config_from_json(const nlohmann::json& j);  // unknown keys rejected
ExperimentConfig load_config_file(const std::string& path);

// %.17g, the fixed float formatting of every CSV cell.
std::string fmt17(double v);

// Resolves the configured cocycle (gallery or file) and the translation.
GalleryEntry resolve_cocycle(const ExperimentConfig& cfg);
Translation resolve_translation(const ExperimentConfig& cfg, int d);

struct RunResult {
    int exit_code = 0;  // 0 ok, 2 inconclusive/unresolved, 1 error (thrown instead)
    nlohmann::json summary;
};

// Executes the configured operation, writes <out_dir>/summary.json plus the
// operation's CSV tables, and prints pass/fail lines for reproduce claims.
RunResult run(const ExperimentConfig& cfg, std::ostream& log);

// Named exact factor instances used by the splitting pipelines.
FactorInstance named_factor_instance(const std::string& name);
FactorInstance factor_instance_from_json(const nlohmann::json& j);
nlohmann::json factor_instance_to_json(const FactorInstance& F);

struct ClaimCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

// Bundled claim pipeline; prints one pass/fail line per check.
std::vector<ClaimCheck> reproduce_claim(const std::string& label, const ExperimentConfig& cfg,
                                        std::ostream& log, nlohmann::json* report);

}  // namespace qpc
