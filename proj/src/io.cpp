#include "ballframes/io.hpp"

#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>

#include <json.hpp>

namespace ballframes {

using nlohmann::json;

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DomainError("cannot open for writing: " + path);
    out << content;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void ExperimentConfig::validate() const {
    if (n < 1 || n + 1 > kMaxDim)
        throw ConfigError("field 'n': must satisfy 1 <= n <= " + std::to_string(kMaxDim - 1));
    if (!(sigma > n)) throw ConfigError("field 'sigma': must satisfy sigma > n");
    if (p < 1.0) throw ConfigError("field 'p': must satisfy p >= 1");
    if (!(alpha > -1.0)) throw ConfigError("field 'alpha': must satisfy alpha > -1");
    if (!(alpha < p * (sigma - n) - 1.0))
        throw ConfigError("field 'alpha': must satisfy alpha < p(sigma-n)-1 strictly");
    if (!(epsilon > 0.0)) throw ConfigError("field 'epsilon': must be positive");
    if (box_radius < 0.0) throw ConfigError("field 'box_radius': must be >= 0");
    if (K < 0) throw ConfigError("field 'K': must be >= 0");
    if (quad_radial < 0 || quad_phase < 0 || quad_modulus < 0)
        throw ConfigError("field 'quadrature': orders must be >= 0 (0 = default)");
    if (!atom_is_psi && atom_terms.empty())
        throw ConfigError("field 'atom': polynomial atom needs at least one term");
    for (const auto& t : atom_terms) {
        if (static_cast<int>(t.gamma.size()) != n)
            throw ConfigError("field 'atom': gamma length must equal n");
        for (int e : t.gamma)
            if (e < 0) throw ConfigError("field 'atom': gamma entries must be >= 0");
    }
}

void ExperimentConfig::effective_orders(int& radial, int& phase, int& modulus) const {
    const int d = 2 * K + 2;
    radial = quad_radial > 0 ? quad_radial : (d + 5) / 4;
    phase = quad_phase > 0 ? quad_phase : d + 1;
    modulus = quad_modulus > 0 ? quad_modulus : (n > 1 ? (d + 5) / 4 : 1);
}

QuadratureRule ExperimentConfig::make_rule() const {
    int r, m, l;
    effective_orders(r, m, l);
    return ball_quadrature(n, sigma - n - 1.0, r, m, l);
}

namespace {

Complex coef_from_json(const json& j, const char* field) {
    if (!j.is_array() || j.size() != 2)
        throw ConfigError(std::string("field '") + field + "': coef must be [re, im]");
    return {j[0].get<double>(), j[1].get<double>()};
}

std::vector<MonomialTerm> terms_from_json(const json& jt, int n) {
    std::vector<MonomialTerm> out;
    for (const auto& t : jt) {
        MonomialTerm mt;
        mt.coef = coef_from_json(t.at("coef"), "terms.coef");
        mt.gamma = t.at("gamma").get<std::vector<int>>();
        if (n > 0 && static_cast<int>(mt.gamma.size()) != n)
            throw ConfigError("field 'terms.gamma': length must equal n");
        out.push_back(std::move(mt));
    }
    return out;
}

} // namespace

ExperimentConfig parse_config(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const std::exception& e) {
        throw ConfigError(std::string("invalid JSON: ") + e.what());
    }
    ExperimentConfig c;
    try {
        if (j.contains("n")) c.n = j["n"].get<int>();
        if (j.contains("sigma")) c.sigma = j["sigma"].get<double>();
        if (j.contains("alpha")) c.alpha = j["alpha"].get<double>();
        if (j.contains("p")) c.p = j["p"].get<double>();
        if (j.contains("epsilon")) c.epsilon = j["epsilon"].get<double>();
        if (j.contains("box_radius")) c.box_radius = j["box_radius"].get<double>();
        if (j.contains("K")) c.K = j["K"].get<int>();
        if (j.contains("quadrature")) {
            const auto& q = j["quadrature"];
            if (q.contains("radial")) c.quad_radial = q["radial"].get<int>();
            if (q.contains("phase")) c.quad_phase = q["phase"].get<int>();
            if (q.contains("modulus")) c.quad_modulus = q["modulus"].get<int>();
        }
        if (j.contains("atom")) {
            if (j["atom"].is_string()) {
                if (j["atom"].get<std::string>() != "psi")
                    throw ConfigError("field 'atom': string form must be \"psi\"");
                c.atom_is_psi = true;
            } else {
                c.atom_is_psi = false;
                c.atom_terms = terms_from_json(j["atom"].at("terms"), c.n);
            }
        }
        if (j.contains("seed")) c.seed = j["seed"].get<std::uint64_t>();
        if (j.contains("out")) c.out_dir = j["out"].get<std::string>();
    } catch (const ConfigError&) {
        throw;
    } catch (const std::exception& e) {
        throw ConfigError(std::string("malformed config: ") + e.what());
    }
    c.validate();
    return c;
}

ExperimentConfig load_config(const std::string& path) {
    return parse_config(read_text_file(path));
}

std::string config_to_json(const ExperimentConfig& c) {
    std::ostringstream o;
    o << "{\"n\":" << c.n << ",\"sigma\":" << fmt17(c.sigma) << ",\"alpha\":" << fmt17(c.alpha)
      << ",\"p\":" << fmt17(c.p) << ",\"epsilon\":" << fmt17(c.epsilon)
      << ",\"box_radius\":" << fmt17(c.box_radius) << ",\"K\":" << c.K;
    int r, m, l;
    c.effective_orders(r, m, l);
    o << ",\"quadrature\":{\"radial\":" << r << ",\"phase\":" << m << ",\"modulus\":" << l
      << "}";
    if (c.atom_is_psi) {
        o << ",\"atom\":\"psi\"";
    } else {
        o << ",\"atom\":{\"terms\":[";
        for (std::size_t i = 0; i < c.atom_terms.size(); ++i) {
            if (i) o << ",";
            o << "{\"gamma\":[";
            for (std::size_t k = 0; k < c.atom_terms[i].gamma.size(); ++k) {
                if (k) o << ",";
                o << c.atom_terms[i].gamma[k];
            }
            o << "],\"coef\":[" << fmt17(c.atom_terms[i].coef.real()) << ","
              << fmt17(c.atom_terms[i].coef.imag()) << "]}";
        }
        o << "]}";
    }
    o << ",\"seed\":" << c.seed << ",\"out\":\"" << c.out_dir << "\"}";
    return o.str();
}

HoloFunction parse_function(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const std::exception& e) {
        throw ConfigError(std::string("invalid function JSON: ") + e.what());
    }
    const int n = j.at("n").get<int>();
    HoloFunction f(n);
    for (const auto& t : terms_from_json(j.at("terms"), n)) f.add_monomial(t.gamma, t.coef);
    return f;
}

HoloFunction load_function(const std::string& path) {
    return parse_function(read_text_file(path));
}

std::string function_to_json(const HoloFunction& f) {
    std::ostringstream o;
    o << "{\"n\":" << f.n() << ",\"terms\":[";
    bool first = true;
    for (const auto& t : f.monomials()) {
        if (!first) o << ",";
        first = false;
        o << "{\"gamma\":[";
        for (std::size_t k = 0; k < t.gamma.size(); ++k) {
            if (k) o << ",";
            o << t.gamma[k];
        }
        o << "],\"coef\":[" << fmt17(t.coef.real()) << "," << fmt17(t.coef.imag()) << "]}";
    }
    o << "]}";
    return o.str();
}

std::string family_to_json(const PointFamily& family) {
    std::ostringstream o;
    o << "{\"n\":" << family.n() << ",\"epsilon\":" << fmt17(family.epsilon())
      << ",\"box_radius\":" << fmt17(family.box_radius()) << ",\"points\":[";
    for (std::size_t i = 0; i < family.size(); ++i) {
        const auto& e = family.entry(i);
        if (i) o << ",";
        o << "{\"tvec\":[";
        for (Eigen::Index d = 0; d < e.tvec.size(); ++d) {
            if (d) o << ",";
            o << fmt17(e.tvec[d]);
        }
        o << "],\"w\":[";
        for (int k = 0; k < family.n(); ++k) {
            if (k) o << ",";
            o << "[" << fmt17(e.w[k].real()) << "," << fmt17(e.w[k].imag()) << "]";
        }
        o << "],\"one_minus_w2\":" << fmt17(e.one_minus_w2) << "}";
    }
    o << "]}";
    return o.str();
}

PointFamily family_from_json(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const std::exception& e) {
        throw ConfigError(std::string("invalid family JSON: ") + e.what());
    }
    const int n = j.at("n").get<int>();
    std::vector<FamilyEntry> entries;
    for (const auto& pt : j.at("points")) {
        const auto tv = pt.at("tvec").get<std::vector<double>>();
        SVector tvec(static_cast<Eigen::Index>(tv.size()));
        for (std::size_t d = 0; d < tv.size(); ++d)
            tvec[static_cast<Eigen::Index>(d)] = tv[d];
        GroupElement x = s_from_coords(n, tvec);
        CVector w(n);
        const auto& jw = pt.at("w");
        for (int k = 0; k < n; ++k)
            w[k] = Complex(jw[static_cast<std::size_t>(k)][0].get<double>(),
                           jw[static_cast<std::size_t>(k)][1].get<double>());
        BallPoint bp(w);
        const double omw2 = bp.one_minus_norm2();
        entries.push_back({std::move(tvec), std::move(x), std::move(bp), omw2});
    }
    return PointFamily(n, j.at("epsilon").get<double>(), j.at("box_radius").get<double>(),
                       std::move(entries));
}

std::string coefficients_to_json(const CoefficientSeq& c) {
    std::ostringstream o;
    o << "{\"weight_exponent\":" << fmt17(c.weight_exponent) << ",\"coefficients\":[";
    for (Eigen::Index i = 0; i < c.values.size(); ++i) {
        if (i) o << ",";
        o << "{\"index\":" << i << ",\"re\":" << fmt17(c.values[i].real())
          << ",\"im\":" << fmt17(c.values[i].imag()) << "}";
    }
    o << "]}";
    return o.str();
}

std::string verify_report_to_json(const VerifyReport& r) {
    std::ostringstream o;
    o << "{\"all_pass\":" << (r.all_pass() ? "true" : "false") << ",\"checks\":[";
    for (std::size_t i = 0; i < r.items.size(); ++i) {
        const auto& it = r.items[i];
        if (i) o << ",";
        o << "{\"name\":\"" << it.name << "\",\"pass\":" << (it.pass ? "true" : "false")
          << ",\"residual\":" << fmt17(it.residual) << ",\"tolerance\":" << fmt17(it.tolerance)
          << "}";
    }
    o << "]}";
    return o.str();
}

namespace {

GroupElement random_s_element(std::mt19937_64& rng, int n, double scale) {
    std::uniform_real_distribution<double> u(-scale, scale);
    SVector tv(2 * n);
    for (Eigen::Index d = 0; d < tv.size(); ++d) tv[d] = u(rng);
    return s_from_coords(n, tv);
}

GroupElement random_group_element(std::mt19937_64& rng, int n, double scale) {
    std::normal_distribution<double> g(0.0, 1.0);
    CMatrix a(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a(i, j) = Complex(g(rng), g(rng));
    const Eigen::HouseholderQR<CMatrix> qr(a);
    CMatrix q = qr.householderQ() * CMatrix::Identity(n, n);
    return random_s_element(rng, n, scale) * k_element(q);
}

BallPoint random_ball_point(std::mt19937_64& rng, int n, double rmax) {
    std::normal_distribution<double> g(0.0, 1.0);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    CVector z(n);
    for (int k = 0; k < n; ++k) z[k] = Complex(g(rng), g(rng));
    const double r = rmax * std::pow(u(rng), 1.0 / (2.0 * n));
    z *= r / std::sqrt(abs2(z));
    return BallPoint(z);
}

HoloFunction random_polynomial(std::mt19937_64& rng, int n, int deg) {
    std::normal_distribution<double> g(0.0, 1.0);
    HoloFunction f(n);
    for (const auto& gamma : multiindices_up_to(n, deg))
        f.add_monomial(gamma, Complex(g(rng), g(rng)));
    return f;
}

} // namespace

VerifyReport run_verification(const ExperimentConfig& config) {
    config.validate();
    VerifyReport rep;
    auto push = [&](const std::string& name, double residual, double tol) {
        rep.items.push_back({name, residual <= tol, residual, tol});
    };
    const int n = config.n;
    std::mt19937_64 rng(config.seed);
    const BallPoint o = BallPoint::origin(n);

    { // group identities on a seeded suite
        double jres = 0, dres = 0, bdres = 0, coc = 0, inv = 0, hom = 0, sround = 0;
        for (int t = 0; t < 200; ++t) {
            const GroupElement x = random_group_element(rng, n, 1.5);
            const GroupElement y = random_group_element(rng, n, 1.5);
            jres = std::max(jres, x.j_relation_residual());
            dres = std::max(dres, x.det_residual());
            bdres = std::max(bdres, x.bd_relation_residual());
            coc = std::max(coc, cocycle_residual(y, x));
            const CMatrix r = (x * x.inverse()).matrix() - CMatrix::Identity(n + 1, n + 1);
            inv = std::max(inv, r.cwiseAbs().maxCoeff());
            const BallPoint z = random_ball_point(rng, n, 0.8);
            const BallPoint lhs = (x * y).act(z);
            const BallPoint rhs = x.act(y.act(z));
            hom = std::max(hom, (lhs.coords() - rhs.coords()).cwiseAbs().maxCoeff());
            const GroupElement s = random_s_element(rng, n, 1.5);
            const GroupElement s2 = s_from_point(s.act(o));
            sround = std::max(sround, (s.matrix() - s2.matrix()).cwiseAbs().maxCoeff());
        }
        push("group.j_relation", jres, kTauGrp);
        push("group.determinant", dres, kTauGrp);
        push("group.bd_relation", bdres, kTauGrp);
        push("group.cocycle", coc, kTauGrp);
        push("group.inverse_roundtrip", inv, 1e-12);
        push("group.action_homomorphism", hom, kTauPt);
        push("group.s_roundtrip", sround, 1e-8);
    }

    const QuadratureRule rule = config.make_rule();
    { // quadrature
        push("quadrature.weight_normalization", std::abs(rule.weight_sum() - 1.0), 1e-12);
        const int dmax = std::min(config.K, 8);
        push("quadrature.monomial_norms", max_diag_moment_rel_error(rule, dmax), 1e-9);
        const int dpair = std::min(config.K, n >= 3 ? 3 : 5);
        push("quadrature.orthonormality", max_orthonormality_error(rule, dpair), 1e-9);
    }

    { // kernels and sphere identities
        double worst = 0.0;
        for (int t = 0; t < 10; ++t) {
            const BallPoint z = random_ball_point(rng, n, 0.7);
            const BallPoint w = random_ball_point(rng, n, 0.7);
            const Complex full = kernel_eval(z, w, config.alpha);
            const Complex part = kernel_partial_sum(z, w, config.alpha, 90);
            worst = std::max(worst, std::abs(full - part));
        }
        push("core.kernel_partial_sum", worst, 1e-8);

        double idres = 0.0;
        for (int k = 0; k <= 8; ++k)
            for (const auto& g : multiindices_of_degree(n, k)) {
                const double lhs = monomial_norm(g, config.sigma - n - 1.0);
                const double rhs =
                    sphere_to_bergman_norm_factor(n, k, config.sigma) * sphere_monomial_norm(g);
                idres = std::max(idres, std::abs(lhs - rhs) / lhs);
            }
        push("core.sphere_norm_identity", idres, 1e-12);

        const HoloFunction f = random_polynomial(rng, n, std::min(config.K, 4));
        const BallPoint z = random_ball_point(rng, n, 0.5);
        push("core.reproducing_kernel", reproduce_residual(f, z, config.sigma, rule), 1e-8);
    }

    const RepParams repp(n, config.sigma);
    { // representation
        double worst = 0.0, cov = 0.0;
        const HoloFunction psi = HoloFunction::constant(n, Complex(1.0));
        const HoloFunction f = random_polynomial(rng, n, 2);
        for (int t = 0; t < 200; ++t) {
            const GroupElement x = random_s_element(rng, n, 1.5);
            const BallPoint w = x.act(o);
            const double lhs = std::abs(wavelet_psi(repp, psi, x));
            const double rhs = std::pow(w.one_minus_norm2(), config.sigma / 2.0);
            worst = std::max(worst, std::abs(lhs - rhs));
            const GroupElement y = random_s_element(rng, n, 1.0);
            const double a = std::abs(std::pow(x.d(), -repp.sigma) *
                                      pi_apply_pointwise(repp, y, f, w));
            const double b = std::abs(wavelet_psi(repp, f, y.inverse() * x));
            cov = std::max(cov, std::abs(a - b));
        }
        push("representation.sampling_modulus", worst, 1e-12);
        push("representation.covariance_absvalue", cov, 1e-10);
    }

    const PointFamily family = generate_lattice(config.epsilon, config.box_radius, n);
    { // sampling
        const PointFamily family2 = generate_lattice(config.epsilon, config.box_radius, n);
        double det = family.size() == family2.size() ? 0.0 : 1.0;
        for (std::size_t i = 0; det == 0.0 && i < family.size(); ++i)
            det = (family.entry(i).w.coords() - family2.entry(i).w.coords())
                      .cwiseAbs()
                      .maxCoeff();
        push("sampling.determinism", det, 0.0);
        double wres = 0.0;
        for (std::size_t i = 0; i < family.size(); ++i) {
            const BallPoint img = family.entry(i).x.act(o);
            wres = std::max(wres,
                            (img.coords() - family.entry(i).w.coords()).cwiseAbs().maxCoeff());
        }
        push("sampling.family_orbit", wres, kTauPt);
        const auto sep = separation_check(family, 1e-6);
        push("sampling.separation", sep.separated ? 0.0 : 1.0, 0.0);
    }

    { // frames
        FrameSystem sys = config.atom_is_psi
                              ? FrameSystem::psi_system(config.frame_params(), family, config.K)
                              : [&] {
                                    HoloFunction zeta(n);
                                    for (const auto& t : config.atom_terms)
                                        zeta.add_monomial(t.gamma, t.coef);
                                    return FrameSystem::atom_system(config.frame_params(),
                                                                    family, zeta, config.K);
                                }();
        const HoloFunction f = random_polynomial(rng, n, config.K);
        const CoefficientSeq cf = analysis(sys, f);
        Eigen::VectorXcd c(static_cast<Eigen::Index>(sys.size()));
        std::normal_distribution<double> g(0.0, 1.0);
        for (Eigen::Index i = 0; i < c.size(); ++i) c[i] = Complex(g(rng), g(rng));
        const Complex lhs = inner_product_exact(f, synthesis(sys, c), config.sigma);
        Complex rhs(0.0);
        for (Eigen::Index i = 0; i < c.size(); ++i) rhs += std::conj(c[i]) * cf.values[i];
        const double scale = std::max(1.0, std::abs(lhs));
        push("frames.adjointness", std::abs(lhs - rhs) / scale, 1e-10);

        const FrameBoundsResult fb = frame_bounds(sys);
        const double e = sys.params().weight_exponent();
        const double wsum = std::pow(seq_norm(cf.values, family, 2.0, e), 2.0);
        const double f2 = inner_product_exact(f, f, config.sigma).real();
        const double lo = fb.A * f2, hi = fb.B * f2;
        const double viol =
            std::max(0.0, std::max(lo - wsum, wsum - hi)) / std::max(1.0, wsum);
        push("frames.sandwich", viol, 1e-9);

        double recon = 0.0;
        const auto idx = multiindices_up_to(n, config.K);
        for (const auto& gamma : idx) {
            const HoloFunction phi = HoloFunction::monomial(
                n, gamma, Complex(phi_gamma_scale(gamma, config.sigma - n - 1.0)));
            const auto rec = reconstruct_from_samples(sys, analysis(sys, phi).values);
            const HoloFunction diff = rec.g - phi;
            recon = std::max(recon,
                             std::sqrt(std::abs(
                                 inner_product_exact(diff, diff, config.sigma).real())));
        }
        push("frames.reconstruction", recon, kTauRec);
    }

    return rep;
}

} // namespace ballframes
