// spinsq command-line driver: calibration, invariant suites, identity
// convergence, harmonic solves, pipelines, degree comparisons and gauge
// checks.  Every command prints one JSON run report on stdout and exits
// 0 on pass, 1 on a failed check, 2 on usage or input errors.

#include <CLI11.hpp>
#include <iostream>
#include <json.hpp>

#include "spinsq/calibrate.hpp"
#include "spinsq/fieldio.hpp"
#include "spinsq/harmonic.hpp"
#include "spinsq/preimage.hpp"
#include "spinsq/suites.hpp"

using json = nlohmann::ordered_json;
using namespace spinsq;

namespace {

json make_report(const std::string& command, json config, json seeds, json results, bool pass) {
    json rep;
    rep["schema"] = "spinsq-report/1";
    rep["command"] = command;
    rep["config"] = std::move(config);
    rep["seeds"] = std::move(seeds);
    rep["results"] = std::move(results);
    rep["pass"] = pass;
    return rep;
}

int emit(const json& rep) {
    std::cout << rep.dump(2) << "\n";
    return rep.at("pass").get<bool>() ? 0 : 1;
}

json report_of(const PipelineReport& r) {
    json j;
    j["dirac_rel_residual"] = r.dirac_rel_residual;
    j["transversality_norm"] = r.transversality_norm;
    j["min_modulus"] = r.min_modulus;
    j["mean_modulus"] = r.mean_modulus;
    j["closedness_residual"] = r.closedness_residual;
    j["corollary_residual"] = r.corollary_residual;
    j["nowhere_zero"] = r.nowhere_zero;
    if (r.acs_defect) j["acs_defect"] = *r.acs_defect;
    if (r.degree_vector)
        j["degree_vector"] = std::vector<int>(r.degree_vector->begin(), r.degree_vector->end());
    else
        j["degree_vector"] = nullptr;
    if (r.parallel_defect) {
        j["parallel_defect"] = *r.parallel_defect;
        j["parallel"] = r.parallel;
    }
    if (r.sigma_constancy) j["sigma_constancy"] = *r.sigma_constancy;
    if (r.conformal_variance) j["conformal_variance"] = *r.conformal_variance;
    return j;
}

json report_of(const SolveReport& r) {
    json j;
    j["rayleigh"] = r.rayleigh;
    j["dirac_rel_residual"] = r.dirac_rel_residual;
    j["iterations"] = r.iterations;
    j["converged"] = r.converged;
    j["eig_residual"] = r.eig_residual;
    j["cg_total"] = r.cg_total;
    j["rayleigh_history"] = r.rayleigh_history;
    return j;
}

int cmd_calibrate(int grid_n, std::uint64_t seed, int trials) {
    const CalibrationResult r = calibrate_sigma(grid_n, seed, trials);
    json results;
    results["kappa"] = r.kappa;
    results["epsilon"] = r.epsilon;
    results["residual_rel"] = r.residual_rel;
    const bool pass = r.residual_rel < 1e-8;
    return emit(make_report("calibrate-sigma", {{"grid", grid_n}, {"trials", trials}}, {seed},
                            std::move(results), pass));
}

int cmd_verify_algebra(std::uint64_t seed, int samples) {
    const auto checks = run_algebra_suite(seed, samples);
    bool pass = true;
    json rows = json::array();
    for (const auto& c : checks) {
        rows.push_back({{"name", c.name}, {"max_err", c.max_err}, {"tol", c.tol}, {"pass", c.pass}});
        pass = pass && c.pass;
    }
    return emit(make_report("verify-algebra", {{"samples", samples}}, {seed},
                            {{"checks", std::move(rows)}}, pass));
}

int cmd_verify_identity(std::vector<int> grids, std::uint64_t seed) {
    if (grids.size() < 2) throw Error("verify-identity: need at least two grid sizes");
    // the seeded smooth data; degree-1 modes stay resolved on the coarsest grid
    auto residual_at = [&](int n) {
        std::mt19937_64 rng(seed);
        const TrigSpinor ts = random_trig_spinor(rng, 0.4, 1);
        const TrigOneForm ta = random_trig_one_form(rng, 0.5, 1);
        const LatticeGrid g = LatticeGrid::cubic(n);
        return identity_residual(U1Connection::from_one_form(g, ta), sample_spinor(g, ts));
    };

    json rows = json::array();
    std::vector<double> residuals;
    for (int n : grids) {
        const double r = residual_at(n);
        residuals.push_back(r);
        rows.push_back({{"grid", n}, {"residual", r}});
    }
    json orders = json::array();
    bool pass = true;
    for (size_t k = 1; k < residuals.size(); ++k) {
        const double order =
            std::log2(residuals[k - 1] / residuals[k]) / std::log2(double(grids[k]) / grids[k - 1]);
        orders.push_back(order);
        pass = pass && order >= 1.7 && order <= 2.3;
    }
    // constants with the trivial connection sit in the kernel of every term
    const LatticeGrid g0 = LatticeGrid::cubic(grids.front());
    const double constant_residual = identity_residual(
        U1Connection::trivial(g0), SpinorField(g0, SpinorPlus{cplx{0.7, -0.4}, cplx{1.1, 0.9}}));
    pass = pass && constant_residual <= 1e-14;

    json results;
    results["table"] = std::move(rows);
    results["observed_orders"] = std::move(orders);
    results["order_window"] = {1.7, 2.3};
    results["constant_field_residual"] = constant_residual;
    return emit(make_report("verify-identity", {{"grids", grids}}, {seed}, std::move(results), pass));
}

int cmd_solve(int grid_n, std::vector<int> flux, double tol, std::uint64_t seed, int deflate,
              const std::string& out, const std::string& links_out) {
    if (flux.size() != 6) throw Error("solve: --flux needs six integers k01,k02,k03,k12,k13,k23");
    const LatticeGrid g = LatticeGrid::cubic(grid_n);
    std::array<int, 6> k{};
    std::copy(flux.begin(), flux.end(), k.begin());
    const bool trivial = std::all_of(k.begin(), k.end(), [](int v) { return v == 0; });
    const U1Connection a = trivial ? U1Connection::trivial(g) : U1Connection::from_flux(g, k);

    SolveOptions opt;
    opt.tol = tol;
    opt.seed = seed;
    std::vector<SpinorField> found;
    json solves = json::array();
    bool pass = true;
    for (int d = 0; d <= deflate; ++d) {
        std::vector<const SpinorField*> basis;
        for (const auto& v : found) basis.push_back(&v);
        opt.seed = seed + std::uint64_t(d);
        auto [phi, rep] = solve_smallest(a, opt, basis);
        json row = report_of(rep);
        row["site_variance"] = site_variance(phi);
        solves.push_back(std::move(row));
        pass = pass && rep.converged;
        found.push_back(std::move(phi));
    }
    if (!out.empty()) save(out, found.back());
    if (!links_out.empty()) save(links_out, a);

    json results;
    results["flux"] = flux;
    results["solves"] = std::move(solves);
    if (!out.empty()) results["out"] = out;
    if (!links_out.empty()) results["links_out"] = links_out;
    return emit(make_report("solve",
                            {{"grid", grid_n}, {"tol", tol}, {"deflate", deflate}}, {seed},
                            std::move(results), pass));
}

int cmd_pipeline(const std::string& phi_file, const std::string& links_file,
                 const std::string& alpha_out) {
    const SpinorField phi = load_spinor_plus(phi_file);
    const U1Connection a = load_links(links_file);
    const PipelineReport rep = symplectic_pipeline(a, phi);
    if (!alpha_out.empty()) save(alpha_out, sigma_field(phi));
    json results = report_of(rep);
    if (!alpha_out.empty()) results["alpha_out"] = alpha_out;
    return emit(make_report("pipeline", {{"phi", phi_file}, {"links", links_file}}, json::array(),
                            std::move(results), true));
}

int cmd_degrees(const std::string& alpha_file, const std::string& ref_file) {
    const SDFormField alpha = load_sd_form(alpha_file);
    const SDFormField ref =
        ref_file.empty() ? reference_form(alpha.grid()) : load_sd_form(ref_file);
    const C1Comparison cmp = c1_equal(alpha, ref);
    json results;
    results["degrees_alpha"] = std::vector<int>(cmp.degrees_alpha.begin(), cmp.degrees_alpha.end());
    results["degrees_ref"] = std::vector<int>(cmp.degrees_ref.begin(), cmp.degrees_ref.end());
    results["c1_equal"] = cmp.equal;
    return emit(make_report("degrees",
                            {{"alpha", alpha_file}, {"ref", ref_file.empty() ? "builtin:omega1" : ref_file}},
                            json::array(), std::move(results), true));
}

int cmd_gauge_check(const std::string& phi_file, const std::string& links_file, std::uint64_t seed,
                    int transforms) {
    const SpinorField phi = load_spinor_plus(phi_file);
    const U1Connection a = load_links(links_file);
    require_same_grid(phi.grid(), a.grid(), "gauge-check");
    const LatticeGrid& g = phi.grid();

    const SDFormField sig0 = sigma_field(phi);
    const double id0 = identity_residual(a, phi);
    const std::array<int, 6> flux0 = flux_integers(a);
    const PipelineReport rep0 = symplectic_pipeline(a, phi);

    std::mt19937_64 rng(seed);
    double sigma_dev = 0.0, identity_dev = 0.0, pipeline_dev = 0.0;
    bool flux_equal = true, degrees_equal = true;
    for (int t = 0; t < transforms; ++t) {
        const GaugeTransform s = GaugeTransform::random(g, rng);
        const auto [ap, phip] = gauge_apply(s, a, phi);
        const SDFormField sig1 = sigma_field(phip);
        for (std::int64_t i = 0; i < g.volume(); ++i)
            sigma_dev = std::max(sigma_dev, (sig1[i] - sig0[i]).norm());
        identity_dev = std::max(identity_dev, std::abs(identity_residual(ap, phip) - id0));
        flux_equal = flux_equal && (flux_integers(ap) == flux0);
        const PipelineReport rep1 = symplectic_pipeline(ap, phip);
        pipeline_dev = std::max({pipeline_dev,
                                 std::abs(rep1.dirac_rel_residual - rep0.dirac_rel_residual),
                                 std::abs(rep1.transversality_norm - rep0.transversality_norm),
                                 std::abs(rep1.closedness_residual - rep0.closedness_residual),
                                 std::abs(rep1.corollary_residual - rep0.corollary_residual),
                                 std::abs(rep1.min_modulus - rep0.min_modulus)});
        if (rep0.degree_vector && rep1.degree_vector)
            degrees_equal = degrees_equal && (*rep0.degree_vector == *rep1.degree_vector);
        else
            degrees_equal = degrees_equal && !rep0.degree_vector == !rep1.degree_vector;
    }
    const bool pass =
        sigma_dev <= 1e-10 && identity_dev <= 1e-10 && pipeline_dev <= 1e-10 && flux_equal && degrees_equal;
    json results;
    results["sigma_max_dev"] = sigma_dev;
    results["identity_residual_max_dev"] = identity_dev;
    results["pipeline_max_dev"] = pipeline_dev;
    results["flux_integers_equal"] = flux_equal;
    results["degree_vectors_equal"] = degrees_equal;
    results["transforms"] = transforms;
    return emit(make_report("gauge-check", {{"phi", phi_file}, {"links", links_file}}, {seed},
                            std::move(results), pass));
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"spin-c squaring-map toolkit on the flat 4-torus"};
    app.require_subcommand(1);

    // calibrate-sigma
    int cal_grid = 16, cal_trials = 3;
    std::uint64_t cal_seed = 1;
    auto* cal = app.add_subcommand("calibrate-sigma", "recover the identity normalization");
    cal->add_option("--grid", cal_grid, "sample grid sites per axis");
    cal->add_option("--seed", cal_seed, "rng seed");
    cal->add_option("--trials", cal_trials, "number of random field pairs");

    // verify-algebra
    std::uint64_t alg_seed = 1;
    int alg_samples = 1000;
    auto* alg = app.add_subcommand("verify-algebra", "pointwise invariant suites");
    alg->add_option("--seed", alg_seed, "rng seed");
    alg->add_option("--samples", alg_samples, "random samples per check");

    // verify-identity
    std::vector<int> vid_grids{8, 16, 32};
    std::uint64_t vid_seed = 1;
    auto* vid = app.add_subcommand("verify-identity", "identity residual convergence study");
    vid->add_option("--grid", vid_grids, "comma-separated grid sizes")->delimiter(',');
    vid->add_option("--seed", vid_seed, "data seed");

    // solve
    int sol_grid = 8, sol_deflate = 0;
    std::vector<int> sol_flux{0, 0, 0, 0, 0, 0};
    double sol_tol = 1e-10;
    std::uint64_t sol_seed = 1;
    std::string sol_out, sol_links_out;
    auto* sol = app.add_subcommand("solve", "smallest-eigenvalue harmonic solve");
    sol->add_option("--grid", sol_grid, "sites per axis");
    sol->add_option("--flux", sol_flux, "six flux integers k01,k02,k03,k12,k13,k23")->delimiter(',');
    sol->add_option("--tol", sol_tol, "relative Rayleigh tolerance");
    sol->add_option("--seed", sol_seed, "start-vector seed");
    sol->add_option("--deflate", sol_deflate, "number of deflation rounds");
    sol->add_option("--out", sol_out, "spinor archive for the last vector");
    sol->add_option("--links-out", sol_links_out, "link archive for the connection");

    // pipeline
    std::string pip_phi, pip_links, pip_alpha_out;
    auto* pip = app.add_subcommand("pipeline", "symplectic pipeline report for a stored pair");
    pip->add_option("--phi", pip_phi, "spinor archive")->required();
    pip->add_option("--links", pip_links, "link archive")->required();
    pip->add_option("--alpha-out", pip_alpha_out, "write sigma(phi) archive");

    // degrees
    std::string deg_alpha, deg_ref;
    auto* deg = app.add_subcommand("degrees", "degree vectors and reference comparison");
    deg->add_option("--alpha", deg_alpha, "sdform archive")->required();
    deg->add_option("--ref", deg_ref, "reference sdform archive (default: constant)");

    // gauge-check
    std::string gc_phi, gc_links;
    std::uint64_t gc_seed = 1;
    int gc_transforms = 10;
    auto* gc = app.add_subcommand("gauge-check", "invariance under random gauge transforms");
    gc->add_option("--phi", gc_phi, "spinor archive")->required();
    gc->add_option("--links", gc_links, "link archive")->required();
    gc->add_option("--seed", gc_seed, "transform seed");
    gc->add_option("--transforms", gc_transforms, "number of random transforms");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return 2;
    }

    try {
        if (cal->parsed()) return cmd_calibrate(cal_grid, cal_seed, cal_trials);
        if (alg->parsed()) return cmd_verify_algebra(alg_seed, alg_samples);
        if (vid->parsed()) return cmd_verify_identity(vid_grids, vid_seed);
        if (sol->parsed())
            return cmd_solve(sol_grid, sol_flux, sol_tol, sol_seed, sol_deflate, sol_out, sol_links_out);
        if (pip->parsed()) return cmd_pipeline(pip_phi, pip_links, pip_alpha_out);
        if (deg->parsed()) return cmd_degrees(deg_alpha, deg_ref);
        if (gc->parsed()) return cmd_gauge_check(gc_phi, gc_links, gc_seed, gc_transforms);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
