// qpc: quasi-periodic cocycle toolkit.
//
// Subcommands: construct, lyapunov, dominate, sweep, degree, homology,
// reproduce. Every run writes <out>/summary.json with the fully resolved
// config echoed; tables go to CSV with fixed 17-significant-digit floats.
// Exit codes: 0 success, 2 computation ran but the answer is inconclusive
// or unresolved, 1 error.

#include <qpc/harness.hpp>

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

int main(int argc, char** argv) {
    qpc::ExperimentConfig cfg;
    if (const char* root = std::getenv("QPC_OUT")) cfg.out_dir = root;

    // --config is a base layer: load it first, then let flags override.
    // Precedence for the output dir: flag > config > QPC_OUT > "out".
    for (int i = 1; i + 1 < argc; ++i) {
        if (std::string(argv[i]) == "--config") {
            try {
                const std::string env_out = cfg.out_dir;
                cfg = qpc::load_config_file(argv[i + 1]);
                if (cfg.out_dir == "out" && env_out != "out") cfg.out_dir = env_out;
            } catch (const std::exception& e) {
                std::cerr << "error: " << e.what() << "\n";
                return 1;
            }
        }
    }

    CLI::App app{"quasi-periodic cocycle toolkit"};
    app.require_subcommand(1);
    std::string config_path;  // consumed by the prescan above

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--config", config_path, "JSON config file (flags override its values)");
        sub->add_option("--out", cfg.out_dir, "output directory");
        sub->add_option("--seed", cfg.seed, "seed for the fixed-seed phase sampler");
        sub->add_option("--freq", cfg.frequency,
                        "frequency components: decimals or tokens sqrt2m1, sqrt3m1, sqrt5m2");
    };
    auto add_cocycle_source = [&](CLI::App* sub) {
        sub->add_option("--cocycle", cfg.cocycle, "gallery name (see construct) or remark36-diag");
        sub->add_option("--cocycle-file", cfg.cocycle_file, "cocycle interchange JSON file");
    };
    auto add_gallery_params = [&](CLI::App* sub) {
        sub->add_option("--diag", cfg.diag, "const-diag diagonal entries");
        sub->add_option("--scale", cfg.c, "triangular-jensen scale c");
        sub->add_option("--lambda", cfg.lambda, "prop34-block lambda");
        sub->add_option("--base-dim", cfg.gal_d, "gallery base dimension d");
        sub->add_option("--block-k", cfg.gal_k, "prop34-block k");
        sub->add_option("--block-m", cfg.gal_m, "prop34-block m");
    };

    CLI::App* construct = app.add_subcommand("construct", "build a gallery cocycle and write its JSON");
    construct->add_option("name", cfg.cocycle, "gallery name")->required();
    construct->add_option("--cocycle-file", cfg.cocycle_file,
                          "re-certify and rewrite an existing interchange file instead");
    add_common(construct);
    add_gallery_params(construct);

    CLI::App* lyap = app.add_subcommand("lyapunov", "Lyapunov spectrum with filtration dimensions");
    add_common(lyap);
    add_cocycle_source(lyap);
    add_gallery_params(lyap);
    lyap->add_option("--n", cfg.n, "orbit length");
    lyap->add_option("--phases", cfg.phases, "number of phases");
    lyap->add_option("--gap-tol", cfg.gap_tol, "exponent clustering tolerance");

    CLI::App* dom = app.add_subcommand("dominate", "certify or refute k-domination");
    add_common(dom);
    add_cocycle_source(dom);
    add_gallery_params(dom);
    dom->add_option("--k", cfg.k, "index of the tested splitting");
    dom->add_option("--grid", cfg.grid_per_dim, "phase grid per dimension (>= 8)");
    dom->add_option("--schedule", cfg.n_schedule, "doubling n schedule");
    dom->add_option("--angle-tol", cfg.angle_tol, "section oscillation tolerance (radians)");

    CLI::App* sweep = app.add_subcommand("sweep", "domination verdicts for the complexified family A_y");
    add_common(sweep);
    add_cocycle_source(sweep);
    add_gallery_params(sweep);
    sweep->add_option("--k", cfg.k, "index of the tested splitting");
    sweep->add_option("--grid", cfg.grid_per_dim, "phase grid per dimension");
    sweep->add_option("--schedule", cfg.n_schedule, "doubling n schedule");
    sweep->add_option("--angle-tol", cfg.angle_tol, "section oscillation tolerance");
    sweep->add_option("--y", cfg.y_list, "offsets t; each tests y = (t, 0, ..., 0)");

    CLI::App* deg = app.add_subcommand("degree", "topological degree of a sampled field T^2 -> S^2");
    add_common(deg);
    deg->add_option("--field", cfg.field, "builtin field: constant | wrap | weierstrass | torus-rev");
    deg->add_option("--field-csv", cfg.field_csv, "CSV of x,y,f1,f2,f3 samples on the offset grid");
    deg->add_option("--N", cfg.field_n, "grid resolution per axis");

    CLI::App* hom = app.add_subcommand("homology", "Betti tables, Kunneth, exact splitting, obstruction");
    hom->add_option("op", cfg.homology_op, "betti | kunneth | split | obstruct")->required();
    add_common(hom);
    hom->add_option("--space", cfg.space, "betti target: torus | grassmann");
    hom->add_option("--d", cfg.hd, "torus dimension");
    hom->add_option("--k", cfg.hk, "Grassmannian k");
    hom->add_option("--m", cfg.hm, "Grassmannian m");
    hom->add_flag("--nonzero", cfg.homology_nonzero, "assert (A_V)_* nonzero on H_2");
    hom->add_option("--instance", cfg.split_instance, "named factor instance: jordan | blockdiag | identity");
    hom->add_option("--file", cfg.split_file, "factor instance JSON (entries as \"p/q\" strings)");

    CLI::App* rep = app.add_subcommand("reproduce", "run a bundled claim pipeline and print pass/fail lines");
    rep->add_option("claim", cfg.claim,
                    "thm1.1-spectrum | remark3.6-sweep | prop2.1-splitting | cor3.2-criterion")
        ->required();
    add_common(rep);
    rep->add_option("--n", cfg.n, "orbit length for the spectrum claim");
    rep->add_option("--phases", cfg.phases, "number of phases");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);  // prints help or the usage error
        return rc == 0 ? 0 : 1;
    }

    for (CLI::App* sub : app.get_subcommands()) cfg.operation = sub->get_name();

    try {
        const qpc::RunResult r = qpc::run(cfg, std::cout);
        if (cfg.operation != "reproduce") std::cout << r.summary["result"].dump(2) << "\n";
        return r.exit_code;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
