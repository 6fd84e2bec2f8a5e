// Batch CLI for lattice generation, frame-bound estimation, atomic
// decomposition, and sampled reconstruction.  All parameters come from a
// JSON config file; outputs are deterministic JSON/CSV artifacts.

#include <CLI11.hpp>
#include <omp.h>

#include <filesystem>
#include <iostream>
#include <sstream>

#include "ballframes/io.hpp"

using namespace ballframes;
namespace fs = std::filesystem;

namespace {

struct CommonOpts {
    std::string config_path;
    std::string out_dir; // overrides config.out when set
    std::string sweep;   // "key=v1,v2,..."
    int threads = 0;
};

std::vector<ExperimentConfig> expand_sweep(const ExperimentConfig& base,
                                           const std::string& sweep) {
    if (sweep.empty()) return {base};
    const auto eq = sweep.find('=');
    if (eq == std::string::npos)
        throw ConfigError("--sweep expects KEY=v1,v2,...");
    const std::string key = sweep.substr(0, eq);
    std::vector<ExperimentConfig> out;
    std::stringstream ss(sweep.substr(eq + 1));
    std::string item;
    while (std::getline(ss, item, ',')) {
        ExperimentConfig c = base;
        if (key == "epsilon")
            c.epsilon = std::stod(item);
        else if (key == "box_radius")
            c.box_radius = std::stod(item);
        else if (key == "alpha")
            c.alpha = std::stod(item);
        else if (key == "sigma")
            c.sigma = std::stod(item);
        else if (key == "K")
            c.K = std::stoi(item);
        else
            throw ConfigError("--sweep key must be one of epsilon, box_radius, alpha, sigma, K");
        c.validate();
        out.push_back(std::move(c));
    }
    if (out.empty()) throw ConfigError("--sweep produced no values");
    return out;
}

ExperimentConfig load(const CommonOpts& opts) {
    ExperimentConfig c = load_config(opts.config_path);
    if (!opts.out_dir.empty()) c.out_dir = opts.out_dir;
    if (opts.threads > 0) omp_set_num_threads(opts.threads);
    fs::create_directories(c.out_dir);
    return c;
}

std::string art_path(const ExperimentConfig& c, const std::string& name) {
    return (fs::path(c.out_dir) / name).string();
}

FrameSystem build_system(const ExperimentConfig& c) {
    PointFamily fam = generate_lattice(c.epsilon, c.box_radius, c.n);
    if (c.atom_is_psi)
        return FrameSystem::psi_system(c.frame_params(), std::move(fam), c.K);
    HoloFunction zeta(c.n);
    for (const auto& t : c.atom_terms) zeta.add_monomial(t.gamma, t.coef);
    return FrameSystem::atom_system(c.frame_params(), std::move(fam), zeta, c.K);
}

int cmd_verify(const CommonOpts& opts) {
    const ExperimentConfig c = load(opts);
    const VerifyReport rep = run_verification(c);
    write_text_file(art_path(c, "verify_report.json"), verify_report_to_json(rep));
    std::ostringstream csv;
    csv << "name,pass,residual,tolerance\n";
    for (const auto& it : rep.items) {
        csv << it.name << "," << (it.pass ? 1 : 0) << "," << fmt17(it.residual) << ","
            << fmt17(it.tolerance) << "\n";
        std::cout << (it.pass ? "[PASS] " : "[FAIL] ") << it.name
                  << "  residual=" << it.residual << " tol=" << it.tolerance << "\n";
    }
    write_text_file(art_path(c, "verify_summary.csv"), csv.str());
    if (!rep.all_pass()) throw ConvergenceFailure("verification reported failures");
    return 0;
}

int cmd_lattice(const CommonOpts& opts) {
    const ExperimentConfig base = load(opts);
    std::ostringstream csv;
    csv << "epsilon,box_radius,points,min_pairwise_rho,max_radius\n";
    for (const auto& c : expand_sweep(base, opts.sweep)) {
        const PointFamily fam = generate_lattice(c.epsilon, c.box_radius, c.n);
        const auto sep = separation_check(fam, 0.0);
        double rmax = 0.0;
        for (std::size_t i = 0; i < fam.size(); ++i)
            rmax = std::max(rmax, std::sqrt(fam.entry(i).w.norm2()));
        std::ostringstream name;
        name << "family_eps" << c.epsilon << ".json";
        write_text_file(art_path(base, name.str()), family_to_json(fam));
        csv << fmt17(c.epsilon) << "," << fmt17(c.box_radius) << "," << fam.size() << ","
            << fmt17(sep.min_distance) << "," << fmt17(rmax) << "\n";
        std::cout << "lattice eps=" << c.epsilon << ": " << fam.size() << " points -> "
                  << name.str() << "\n";
    }
    write_text_file(art_path(base, "lattice_summary.csv"), csv.str());
    return 0;
}

int cmd_frame_bounds(const CommonOpts& opts) {
    const ExperimentConfig base = load(opts);
    std::ostringstream csv;
    csv << "epsilon,points,K,A_est,B_est,A_prev,B_prev\n";
    std::ostringstream js;
    js << "{\"results\":[";
    bool first = true;
    for (const auto& c : expand_sweep(base, opts.sweep)) {
        const FrameSystem sys = build_system(c);
        const FrameBoundsResult fb = frame_bounds(sys);
        if (!first) js << ",";
        first = false;
        js << "{\"epsilon\":" << fmt17(c.epsilon) << ",\"points\":" << sys.size()
           << ",\"K\":" << fb.K << ",\"A_est\":" << fmt17(fb.A) << ",\"B_est\":"
           << fmt17(fb.B) << ",\"A_prev\":" << fmt17(fb.A_prev) << ",\"B_prev\":"
           << fmt17(fb.B_prev) << "}";
        csv << fmt17(c.epsilon) << "," << sys.size() << "," << fb.K << "," << fmt17(fb.A)
            << "," << fmt17(fb.B) << "," << fmt17(fb.A_prev) << "," << fmt17(fb.B_prev)
            << "\n";
        std::cout << "frame bounds eps=" << c.epsilon << ": A=" << fb.A << " B=" << fb.B
                  << " (K=" << fb.K << ", K-1: A=" << fb.A_prev << " B=" << fb.B_prev
                  << ")\n";
    }
    js << "]}";
    write_text_file(art_path(base, "frame_bounds.json"), js.str());
    write_text_file(art_path(base, "frame_bounds_summary.csv"), csv.str());
    return 0;
}

int cmd_decompose(const CommonOpts& opts, const std::string& input) {
    const ExperimentConfig c = load(opts);
    const HoloFunction f = load_function(input);
    if (f.n() != c.n) throw ConfigError("input function dimension differs from config n");
    const FrameSystem sys = build_system(c);
    const DecomposeResult r = decompose(sys, f);
    CoefficientSeq seq{r.coeffs, sys.params().weight_exponent()};
    write_text_file(art_path(c, "coefficients.json"), coefficients_to_json(seq));
    const double sn =
        seq_norm(r.coeffs, sys.family(), sys.params().p, sys.params().weight_exponent());
    std::ostringstream js;
    js << "{\"relative_residual\":" << fmt17(r.relative_residual)
       << ",\"seq_norm\":" << fmt17(sn) << ",\"cg_iterations\":" << r.cg_iterations
       << ",\"lambda\":" << fmt17(r.lambda) << ",\"points\":" << sys.size() << "}";
    write_text_file(art_path(c, "decompose_report.json"), js.str());
    std::ostringstream csv;
    csv << "points,relative_residual,seq_norm,cg_iterations,lambda\n"
        << sys.size() << "," << fmt17(r.relative_residual) << "," << fmt17(sn) << ","
        << r.cg_iterations << "," << fmt17(r.lambda) << "\n";
    write_text_file(art_path(c, "decompose_summary.csv"), csv.str());
    std::cout << "decompose: residual=" << r.relative_residual << " seq_norm=" << sn << "\n";
    return 0;
}

int cmd_reconstruct(const CommonOpts& opts, const std::string& input) {
    const ExperimentConfig c = load(opts);
    const HoloFunction f = load_function(input);
    if (f.n() != c.n) throw ConfigError("input function dimension differs from config n");
    const FrameSystem sys = build_system(c);
    const CoefficientSeq samples = analysis(sys, f);
    const ReconstructResult r = reconstruct_from_samples(sys, samples.values);
    const HoloFunction diff = r.g - f;
    const double sigma = sys.params().sigma;
    const double relerr =
        std::sqrt(std::abs(inner_product_exact(diff, diff, sigma).real())) /
        std::sqrt(inner_product_exact(f, f, sigma).real());
    write_text_file(art_path(c, "reconstruction.json"),
                    std::string("{\"relative_error\":") + fmt17(relerr) +
                        ",\"lsq_residual\":" + fmt17(r.lsq_residual) +
                        ",\"function\":" + function_to_json(r.g) + "}");
    std::ostringstream csv;
    csv << "points,relative_error,lsq_residual\n"
        << sys.size() << "," << fmt17(relerr) << "," << fmt17(r.lsq_residual) << "\n";
    write_text_file(art_path(c, "reconstruct_summary.csv"), csv.str());
    std::cout << "reconstruct: relative_error=" << relerr << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"weighted Bergman-space frames on the complex unit ball"};
    app.require_subcommand(1);

    CommonOpts opts;
    std::string input;

    auto add_common = [&](CLI::App* sub, bool needs_input) {
        sub->add_option("--config", opts.config_path, "JSON config file")->required();
        sub->add_option("--out", opts.out_dir, "output directory (overrides config)");
        sub->add_option("--sweep", opts.sweep, "KEY=v1,v2,... parameter sweep");
        sub->add_option("--threads", opts.threads, "OpenMP thread count (speed only)");
        if (needs_input)
            sub->add_option("--input", input, "function file (monomial coefficients)")
                ->required();
    };

    auto* verify = app.add_subcommand("verify", "run the cross-module invariant battery");
    add_common(verify, false);
    auto* lattice = app.add_subcommand("lattice", "generate and certify a point family");
    add_common(lattice, false);
    auto* fbounds = app.add_subcommand("frame_bounds", "spectral frame bounds on the test subspace");
    add_common(fbounds, false);
    auto* decomp = app.add_subcommand("decompose", "atomic decomposition of an input function");
    add_common(decomp, true);
    auto* recon = app.add_subcommand("reconstruct", "recover a function from weighted samples");
    add_common(recon, true);

    CLI11_PARSE(app, argc, argv);

    try {
        if (verify->parsed()) return cmd_verify(opts);
        if (lattice->parsed()) return cmd_lattice(opts);
        if (fbounds->parsed()) return cmd_frame_bounds(opts);
        if (decomp->parsed()) return cmd_decompose(opts, input);
        if (recon->parsed()) return cmd_reconstruct(opts, input);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.exit_code();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
