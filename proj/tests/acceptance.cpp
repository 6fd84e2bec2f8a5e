// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure.  Run a single criterion with `acceptance --criterion N`.

#include <chrono>
#include <cstdio>
#include <cstring>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "ballframes/frames.hpp"
#include "ballframes/io.hpp"

using namespace ballframes;

namespace {

struct Criterion {
    int id;
    std::string name;
    std::function<bool(std::string&)> run;
};

std::mt19937_64 seeded(std::uint64_t s) { return std::mt19937_64(s); }

GroupElement random_s(std::mt19937_64& rng, int n, double scale) {
    std::uniform_real_distribution<double> u(-scale, scale);
    SVector tv(2 * n);
    for (Eigen::Index d = 0; d < tv.size(); ++d) tv[d] = u(rng);
    return s_from_coords(n, tv);
}

CMatrix random_unitary(std::mt19937_64& rng, int n) {
    std::normal_distribution<double> g(0.0, 1.0);
    CMatrix a(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a(i, j) = Complex(g(rng), g(rng));
    Eigen::HouseholderQR<CMatrix> qr(a);
    return qr.householderQ() * CMatrix::Identity(n, n);
}

BallPoint random_point(std::mt19937_64& rng, int n, double rmax) {
    std::normal_distribution<double> g(0.0, 1.0);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    CVector z(n);
    for (int k = 0; k < n; ++k) z[k] = Complex(g(rng), g(rng));
    z *= rmax * std::pow(u(rng), 1.0 / (2.0 * n)) / std::sqrt(abs2(z));
    return BallPoint(z);
}

HoloFunction random_poly(std::mt19937_64& rng, int n, int deg) {
    std::normal_distribution<double> g(0.0, 1.0);
    HoloFunction f(n);
    for (const auto& gamma : multiindices_up_to(n, deg))
        f.add_monomial(gamma, Complex(g(rng), g(rng)));
    return f;
}

char buf[512];

// 1. Closed-form monomial norms vs quadrature, n in {1,2,3}, alpha in
//    {0, 1.5, 3}, |gamma| <= 8, relative error <= 1e-9.
bool c1_monomial_norms(std::string& detail) {
    double worst = 0.0;
    for (int n : {1, 2, 3}) {
        for (double alpha : {0.0, 1.5, 3.0}) {
            const QuadratureRule q = rule_for_degree(n, alpha, 8);
            worst = std::max(worst, max_diag_moment_rel_error(q, 8));
        }
    }
    std::snprintf(buf, sizeof(buf), "max relative error %.3e (tol 1e-9)", worst);
    detail = buf;
    return worst <= 1e-9;
}

// 2. Group identities to 1e-12 on 1000 seeded pairs per n in {1,2,3}.
bool c2_group_identities(std::string& detail) {
    double winv = 0.0, wbd = 0.0, wcoc = 0.0;
    for (int n : {1, 2, 3}) {
        auto rng = seeded(1000 + n);
        for (int t = 0; t < 1000; ++t) {
            const GroupElement x = random_s(rng, n, 1.5) * k_element(random_unitary(rng, n));
            const GroupElement y = random_s(rng, n, 1.5) * k_element(random_unitary(rng, n));
            // x^{-1} = J x* J: compare the blockwise inverse to the generic one
            const CMatrix direct = x.matrix().inverse();
            winv = std::max(winv, (x.inverse().matrix() - direct).cwiseAbs().maxCoeff());
            wbd = std::max(wbd, x.bd_relation_residual());
            wcoc = std::max(wcoc, cocycle_residual(y, x));
        }
    }
    std::snprintf(buf, sizeof(buf),
                  "inverse %.2e, |d|^2-|b|^2 %.2e, cocycle %.2e (tol 1e-12)", winv, wbd,
                  wcoc);
    detail = buf;
    return winv <= 1e-12 && wbd <= 1e-12 && wcoc <= 1e-12;
}

// 3. |W(psi)(x)| = (1-|x.o|^2)^{sigma/2} on 1000 seeded x in S,
//    sigma in {n+0.5, n+1, 2n+1}, n in {1,2,3}.
bool c3_wavelet_modulus(std::string& detail) {
    double worst = 0.0;
    for (int n : {1, 2, 3}) {
        const HoloFunction psi = HoloFunction::constant(n, Complex(1.0));
        for (double sigma : {n + 0.5, n + 1.0, 2.0 * n + 1.0}) {
            const RepParams rep(n, sigma);
            auto rng = seeded(3000 + n);
            for (int t = 0; t < 1000; ++t) {
                const GroupElement x = random_s(rng, n, 1.5);
                const double lhs = std::abs(wavelet_psi(rep, psi, x));
                const double rhs =
                    std::pow(x.act(BallPoint::origin(n)).one_minus_norm2(), sigma / 2.0);
                worst = std::max(worst, std::abs(lhs - rhs));
            }
        }
    }
    std::snprintf(buf, sizeof(buf), "max residual %.3e (tol 1e-12)", worst);
    detail = buf;
    return worst <= 1e-12;
}

// 4. Reproducing convolution: fitted C is f- and x-independent to 1e-5 and
//    stable to 1e-7 under quadrature-order doubling; n in {1,2}, sigma = n+2.
bool c4_reproducing(std::string& detail) {
    double worst_res = 0.0, worst_fdep = 0.0, worst_dbl = 0.0;
    for (int n : {1, 2}) {
        const double sigma = n + 2.0;
        const RepParams rep(n, sigma);
        const int base_deg = n == 1 ? 20 : 15;
        const QuadratureRule q = rule_for_degree(n, rep.alpha(), base_deg);
        const QuadratureRule q2 = rule_for_degree(n, rep.alpha(), 2 * base_deg);
        const SGrid grid = make_sgrid(q);
        const SGrid grid2 = make_sgrid(q2);

        auto rng = seeded(4000 + n);
        std::vector<GroupElement> xs;
        for (int i = 0; i < 20; ++i) xs.push_back(s_from_point(random_point(rng, n, 0.4)));

        std::vector<HoloFunction> fs;
        fs.push_back(HoloFunction::constant(n, Complex(1.0)));
        MultiIndex e1(n, 0);
        e1[0] = 1;
        fs.push_back(HoloFunction::monomial(n, e1, Complex(1.0)));
        MultiIndex e2(n, 0);
        e2[0] = 2;
        fs.push_back(HoloFunction::monomial(n, e2, Complex(1.0)));

        std::vector<Complex> cs;
        for (const auto& f : fs) {
            const ReproducingFit fit = reproducing_constant(rep, f, xs, grid, 1e-4);
            worst_res = std::max(worst_res, fit.max_rel_residual);
            cs.push_back(fit.constant);
        }
        for (const auto& c : cs)
            worst_fdep = std::max(worst_fdep, std::abs(c - cs[0]) / std::abs(cs[0]));

        const ReproducingFit fine = reproducing_constant(rep, fs[0], xs, grid2, 1e-4);
        worst_dbl = std::max(worst_dbl, std::abs(fine.constant - cs[0]) / std::abs(cs[0]));
    }
    std::snprintf(buf, sizeof(buf),
                  "x-residual %.2e (tol 1e-5), f-dependence %.2e (tol 1e-5), doubling %.2e "
                  "(tol 1e-7)",
                  worst_res, worst_fdep, worst_dbl);
    detail = buf;
    return worst_res <= 1e-5 && worst_fdep <= 1e-5 && worst_dbl <= 1e-7;
}

// 5. Kernel expansion tail ratio within 10% of |<z,w>| on a 20-point grid.
bool c5_kernel_tail(std::string& detail) {
    double worst = 0.0, cross = 0.0;
    const int K = 60;
    int idx = 0;
    for (int n : {1, 2}) {
        const double alpha = n == 1 ? 0.0 : 0.5;
        for (int i = 0; i < 10; ++i, ++idx) {
            const double u = 0.2 + 0.5 * i / 9.0; // |<z,w>| in [0.2, 0.7]
            CVector zv = CVector::Zero(n), wv = CVector::Zero(n);
            zv[0] = Complex(std::sqrt(u));
            wv[0] = Complex(std::sqrt(u));
            const BallPoint z(zv), w(wv);
            // Remainder of the expansion, summed directly (stable even when
            // the tail sits far below the rounding floor of the subtraction).
            auto tail_from = [&](int k0) {
                double ck = 1.0;
                for (int k = 1; k <= k0; ++k) ck *= (n + 1.0 + alpha + k - 1.0) / k;
                double term = ck * std::pow(u, k0), tail = 0.0;
                for (int k = k0; term > 1e-40 * tail || k < k0 + 8; ++k) {
                    tail += term;
                    term *= u * (n + 1.0 + alpha + k) / (k + 1.0);
                }
                return tail;
            };
            const double tail_k = tail_from(K + 1);
            const double tail_k1 = tail_from(K + 2);
            worst = std::max(worst, std::abs(tail_k1 / tail_k - u) / u);
            // Where the tail is measurable in double precision, the direct
            // difference kernel - partial_sum must agree with the remainder.
            const Complex full = kernel_eval(z, w, alpha);
            if (tail_k > 1e-11 * std::abs(full)) {
                const double sub = std::abs(full - kernel_partial_sum(z, w, alpha, K));
                cross = std::max(cross, std::abs(sub - tail_k) / tail_k);
            }
        }
    }
    std::snprintf(buf, sizeof(buf),
                  "max ratio deviation %.3f (tol 0.10) on %d points; two-route check %.2e",
                  worst, idx, cross);
    detail = buf;
    return worst <= 0.10 && cross <= 1e-3;
}

// 6. Boundedness region of the weighted integral operator (n=1, sigma=3,
//    p=2, a=sigma/2, b=sigma/2-n-1, t=alpha-sigma p/2): ratios on the
//    boundary-approaching kernel family stay within 10x for alpha in {0,1}
//    and grow monotonically by >= 10x for alpha = 3.5; on an in-space test
//    family the empirical norms are stable under radial refinement.
bool c6_operator_region(std::string& detail) {
    const int n = 1;
    const double sigma = 3.0, p = 2.0;
    const double a = sigma / 2.0, b = sigma / 2.0 - n - 1.0;
    const double kexp = n + 1.0 + a + b;
    const std::vector<double> rs = {0.5, 0.8, 0.9, 0.95, 0.99};
    const int nfam = 20;

    // One streamed pass applies the operator kernel to every test function
    // at once; the alpha-dependence sits only in the norm weights.
    // Functions 0..4: kernel sections at r (boundary family); 5..24: the
    // fixed in-space family phi_j(z) (1-|z|^2)^2.
    struct Applied {
        QuadratureRule qout;
        std::vector<std::vector<Complex>> sf;   // operator images at qout nodes
        std::vector<std::vector<Complex>> fout; // raw functions at qout nodes
    };
    auto apply_all = [&](int radial) {
        const QuadratureRule qin = ball_quadrature(1, b, radial, 96, 1);
        Applied ap{ball_quadrature(1, 0.0, radial, 24, 1), {}, {}};
        const std::size_t nf = rs.size() + nfam;
        std::vector<std::vector<Complex>> fin(nf, std::vector<Complex>(qin.size()));
        ap.sf.assign(nf, std::vector<Complex>(ap.qout.size()));
        ap.fout.assign(nf, std::vector<Complex>(ap.qout.size()));
        auto fval = [&](std::size_t which, const CVector& zz) -> Complex {
            const BallPoint bz = BallPoint::clamped(zz);
            if (which < rs.size()) {
                CVector cv(1);
                cv[0] = Complex(rs[which]);
                return kernel_eval(bz, BallPoint(cv), sigma - n - 1.0);
            }
            const int j = static_cast<int>(which - rs.size());
            const double om = bz.one_minus_norm2();
            return phi_gamma_eval({j}, sigma - n - 1.0, bz) * om * om;
        };
        for (std::size_t i = 0; i < qin.size(); ++i)
            for (std::size_t f = 0; f < nf; ++f) fin[f][i] = fval(f, qin.point(i));
        for (std::size_t i = 0; i < ap.qout.size(); ++i)
            for (std::size_t f = 0; f < nf; ++f) ap.fout[f][i] = fval(f, ap.qout.point(i));

        const double cb = c_alpha(1, qin.alpha);
#pragma omp parallel for schedule(static)
        for (long long i = 0; i < static_cast<long long>(ap.qout.size()); ++i) {
            const CVector z = ap.qout.point(static_cast<std::size_t>(i));
            std::vector<reduce::KahanC> acc(nf);
            for (std::size_t j = 0; j < qin.size(); ++j) {
                const CVector w = qin.point(j);
                const double omr2 = qin.one_minus_r2[static_cast<Eigen::Index>(j)];
                const double ker =
                    qin.w[static_cast<Eigen::Index>(j)] / cb *
                    std::pow(omr2, b - qin.alpha) *
                    std::pow(std::abs(Complex(1.0) - z[0] * std::conj(w[0])), -kexp);
                for (std::size_t f = 0; f < nf; ++f) acc[f].add(ker * fin[f][j]);
            }
            const double za = std::pow(1.0 - std::norm(z[0]), a);
            for (std::size_t f = 0; f < nf; ++f)
                ap.sf[f][static_cast<std::size_t>(i)] = za * acc[f].value();
        }

        // consistency spot check against the scalar operator
        {
            const BallPoint z0 = BallPoint::clamped(ap.qout.point(ap.qout.size() / 2));
            CVector cv(1);
            cv[0] = Complex(rs[2]);
            const BallPoint center{cv};
            auto fr = [&](const CVector& w) {
                return kernel_eval(BallPoint::clamped(w), center, sigma - n - 1.0);
            };
            const Complex direct = zhu_S_apply(a, b, fr, z0, qin);
            const Complex streamed = ap.sf[2][ap.qout.size() / 2];
            if (std::abs(direct - streamed) > 1e-10 * std::abs(direct))
                throw ConvergenceFailure("streamed operator apply disagrees with zhu_S_apply");
        }
        return ap;
    };
    auto norm_t = [&](const QuadratureRule& q, const std::vector<Complex>& vals, double t) {
        const Complex v = integrate_nodes(q, [&](std::size_t i) {
            const double omr2 = q.one_minus_r2[static_cast<Eigen::Index>(i)];
            return Complex(std::pow(std::abs(vals[i]), p) * std::pow(omr2, t));
        });
        return std::pow(v.real(), 1.0 / p);
    };

    const Applied base = apply_all(128);
    const Applied fine = apply_all(256);

    bool ok = true;
    std::string msg;
    for (double alpha : {0.0, 1.0, 3.5}) {
        const double t = alpha - sigma * p / 2.0;
        std::vector<double> ratio;
        for (std::size_t f = 0; f < rs.size(); ++f)
            ratio.push_back(norm_t(base.qout, base.sf[f], t) /
                            norm_t(base.qout, base.fout[f], t));
        double hi = 0.0, lo = 1e300;
        for (double v : ratio) {
            hi = std::max(hi, v);
            lo = std::min(lo, v);
        }
        if (alpha < 3.0) { // inside the region
            // in-space family: empirical norms stable under radial refinement
            double drift = 0.0;
            for (std::size_t f = rs.size(); f < base.sf.size(); ++f) {
                const double n1 =
                    norm_t(base.qout, base.sf[f], t) / norm_t(base.qout, base.fout[f], t);
                const double n2 =
                    norm_t(fine.qout, fine.sf[f], t) / norm_t(fine.qout, fine.fout[f], t);
                drift = std::max(drift, std::abs(n2 - n1) / n1);
            }
            std::snprintf(buf, sizeof(buf),
                          "alpha=%.1f: boundary sweep growth %.2fx (<10x), refinement drift "
                          "%.2f%%; ",
                          alpha, hi / lo, 100.0 * drift);
            msg += buf;
            // the t = alpha - 3 weights are re-weighted truncations; the
            // drift shrinks with order but slowly at alpha = 0 (t = -3)
            ok = ok && hi / lo < 10.0 && drift < 0.25;
        } else { // outside: monotone blow-up along the boundary family
            bool monotone = true;
            for (std::size_t i = 1; i < ratio.size(); ++i)
                monotone = monotone && ratio[i] > ratio[i - 1];
            std::snprintf(buf, sizeof(buf), "alpha=3.5: monotone=%s growth %.1fx (>=10x)",
                          monotone ? "yes" : "no", ratio.back() / ratio.front());
            msg += buf;
            ok = ok && monotone && ratio.back() / ratio.front() >= 10.0;
        }
    }
    detail = msg;
    return ok;
}

// Operator-norm bound of the reconstruction error map on the degree-<=K
// subspace: every polynomial reconstructs within this relative error.
double reconstruction_error_bound(const FrameSystem& sys) {
    const auto idx = multiindices_up_to(sys.params().n, sys.K());
    const double alpha = sys.params().sigma - sys.params().n - 1.0;
    Eigen::MatrixXcd err(static_cast<Eigen::Index>(idx.size()),
                         static_cast<Eigen::Index>(idx.size()));
    for (std::size_t a = 0; a < idx.size(); ++a) {
        const HoloFunction phi = HoloFunction::monomial(
            sys.params().n, idx[a], Complex(phi_gamma_scale(idx[a], alpha)));
        const auto rec = reconstruct_from_samples(sys, analysis(sys, phi).values);
        const HoloFunction diff = rec.g - phi;
        for (std::size_t bI = 0; bI < idx.size(); ++bI) {
            Complex c(0.0);
            for (const auto& t : diff.monomials())
                if (t.gamma == idx[bI]) c += t.coef;
            err(static_cast<Eigen::Index>(bI), static_cast<Eigen::Index>(a)) =
                c / phi_gamma_scale(idx[bI], alpha);
        }
    }
    Eigen::BDCSVD<Eigen::MatrixXcd> svd(err);
    return svd.singularValues()[0];
}

// 7. Frame reconstruction and atomic decomposition at desk scale.
bool c7_frame_reconstruction(std::string& detail) {
    std::string msg;
    bool ok = true;

    { // n = 1, sigma = 3, alpha = 0, p = 2, eps = 0.1, box = 1.5, K = 8
        const FrameSystem sys = FrameSystem::psi_system(FrameParams(1, 3.0, 0.0, 2.0),
                                                        generate_lattice(0.1, 1.5, 1), 8);
        const FrameBoundsResult fb = frame_bounds(sys);
        const double ebound = reconstruction_error_bound(sys);
        const HoloFunction f = HoloFunction::monomial(1, {1}, Complex(1.0));
        const DecomposeResult dec = decompose(sys, f);
        const double snorm =
            seq_norm(dec.coeffs, sys.family(), 2.0, sys.params().weight_exponent());
        std::snprintf(buf, sizeof(buf),
                      "n=1: A=%.3e, recon op-error %.2e (tol 1e-6), synthesis residual %.2e "
                      "(tol 1e-6), seq_norm %.3f; ",
                      fb.A, ebound, dec.relative_residual, snorm);
        msg += buf;
        ok = ok && fb.A > 0.0 && ebound <= 1e-6 && dec.relative_residual <= 1e-6 &&
             std::isfinite(snorm);
    }

    { // n = 2, sigma = 4, K = 5, tolerances relaxed to 1e-5
        const FrameSystem sys = FrameSystem::psi_system(FrameParams(2, 4.0, 0.0, 2.0),
                                                        generate_lattice(0.15, 0.75, 2), 5);
        const FrameBoundsResult fb = frame_bounds(sys);
        const double ebound = reconstruction_error_bound(sys);
        const HoloFunction f = HoloFunction::monomial(2, {1, 0}, Complex(1.0));
        const DecomposeResult dec = decompose(sys, f);
        const double snorm =
            seq_norm(dec.coeffs, sys.family(), 2.0, sys.params().weight_exponent());
        std::snprintf(buf, sizeof(buf),
                      "n=2: A=%.3e, recon op-error %.2e (tol 1e-5), synthesis residual %.2e "
                      "(tol 1e-5), seq_norm %.3f",
                      fb.A, ebound, dec.relative_residual, snorm);
        msg += buf;
        ok = ok && fb.A > 0.0 && ebound <= 1e-5 && dec.relative_residual <= 1e-5 &&
             std::isfinite(snorm);
    }
    detail = msg;
    return ok;
}

// 8. Refinement monotonicity along eps in {0.4, 0.2, 0.1}.
bool c8_refinement(std::string& detail) {
    const FrameParams params(1, 3.0, 0.0, 2.0);
    std::vector<BallPoint> probes;
    {
        const PointFamily pf = generate_lattice(0.05, 1.2, 1);
        for (std::size_t i = 0; i < pf.size(); ++i) probes.push_back(pf.entry(i).w);
    }
    double lastA = 0.0, lastCov = 0.0, lastErr = 1e300;
    bool ok = true;
    std::string msg;
    for (double eps : {0.4, 0.2, 0.1}) {
        const PointFamily fam = generate_lattice(eps, 1.2, 1);
        const FrameSystem sys = FrameSystem::psi_system(params, fam, 6);
        const double A = frame_bounds(sys).A;
        const double cov = density_check(fam, 0.25, probes);
        const double err = reconstruction_error_bound(sys);
        std::snprintf(buf, sizeof(buf), "eps=%.2f: A=%.3e cov=%.3f err=%.2e; ", eps, A, cov,
                      err);
        msg += buf;
        ok = ok && A >= lastA && cov >= lastCov && err <= std::max(lastErr, 1e-12);
        lastA = A;
        lastCov = cov;
        lastErr = err;
    }
    detail = msg;
    return ok;
}

// 9. Riesz bounds: two-point closed form to 1e-12; dense families degenerate.
bool c9_riesz(std::string& detail) {
    std::vector<FamilyEntry> ents;
    for (double t : {-1.0, 1.0}) {
        SVector tv = SVector::Zero(2);
        tv[0] = t;
        GroupElement x = s_from_coords(1, tv);
        BallPoint w = x.act(BallPoint::origin(1));
        const double omw2 = w.one_minus_norm2();
        ents.push_back({tv, std::move(x), std::move(w), omw2});
    }
    const FrameSystem two = FrameSystem::psi_system(
        FrameParams(1, 3.0, 0.0, 2.0), PointFamily(1, 1.0, 1.2, std::move(ents)), 2);
    const double g12 = std::abs(two.gram()(0, 1));
    const double formula = std::sqrt(1.0 - g12);
    const double bound = riesz_lower_bound(two);
    const double dev = std::abs(bound - formula);

    bool degenerate_seen = false;
    try {
        riesz_lower_bound(FrameSystem::psi_system(FrameParams(1, 3.0, 0.0, 2.0),
                                                  generate_lattice(0.05, 1.0, 1), 4));
    } catch (const DegenerateFamily&) {
        degenerate_seen = true;
    }
    std::snprintf(buf, sizeof(buf),
                  "two-point deviation %.2e (tol 1e-12); dense family degenerate: %s", dev,
                  degenerate_seen ? "yes" : "no");
    detail = buf;
    return dev <= 1e-12 && degenerate_seen;
}

// 10. The group-side weighted norm computed at sigma1 = n+2 and sigma2 = n+3 (same
//     alpha, p) agree within a fixed factor c < 10 over seeded polynomials.
bool c10_sigma_independence(std::string& detail) {
    double cworst = 1.0;
    for (int n : {1, 2}) {
        const double p = 2.0, alpha = 0.0;
        const QuadratureRule q = rule_for_degree(n, 0.0, n == 1 ? 14 : 9);
        auto group_norm = [&](const HoloFunction& f, double sigma) {
            const RepParams rep(n, sigma);
            const double t = alpha + n + 1.0 - sigma * p / 2.0;
            const Complex v = integrate_nodes(q, [&](std::size_t i) {
                const double omr2 = q.one_minus_r2[static_cast<Eigen::Index>(i)];
                const BallPoint z = BallPoint::clamped(q.point(i));
                const double wv = abs_wavelet_psi(rep, f, z);
                return Complex(std::pow(wv, p) * std::pow(omr2, t - (n + 1.0)));
            });
            return std::pow(v.real() / c_alpha(n, 0.0), 1.0 / p);
        };
        auto rng = seeded(10'000 + n);
        for (int i = 0; i < 20; ++i) {
            const HoloFunction f = random_poly(rng, n, 5);
            const double r = group_norm(f, n + 2.0) / group_norm(f, n + 3.0);
            cworst = std::max(cworst, std::max(r, 1.0 / r));
        }
    }
    std::snprintf(buf, sizeof(buf), "norm ratio within [1/c, c] for c = %.6f (needs c < 10)",
                  cworst);
    detail = buf;
    return cworst < 10.0;
}

} // namespace

int main(int argc, char** argv) {
    int only = 0;
    for (int i = 1; i + 1 < argc; ++i)
        if (std::strcmp(argv[i], "--criterion") == 0) only = std::atoi(argv[i + 1]);

    const std::vector<Criterion> criteria = {
        {1, "monomial norms: closed form vs quadrature", c1_monomial_norms},
        {2, "group identities (inverse, |d|^2-|b|^2, cocycle)", c2_group_identities},
        {3, "wavelet modulus identity on S", c3_wavelet_modulus},
        {4, "reproducing convolution constant", c4_reproducing},
        {5, "kernel expansion geometric tail", c5_kernel_tail},
        {6, "integral operator boundedness region", c6_operator_region},
        {7, "frame reconstruction and atomic decomposition", c7_frame_reconstruction},
        {8, "refinement monotonicity", c8_refinement},
        {9, "Riesz sequence lower bounds", c9_riesz},
        {10, "group-side norm independence of sigma", c10_sigma_independence},
    };

    bool all = true;
    for (const auto& c : criteria) {
        if (only != 0 && c.id != only) continue;
        const auto start = std::chrono::steady_clock::now();
        std::string detail;
        bool pass = false;
        try {
            pass = c.run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("[%s] criterion %2d: %s (%.1fs) -- %s\n", pass ? "PASS" : "FAIL", c.id,
                    c.name.c_str(), secs, detail.c_str());
        std::fflush(stdout);
        all = all && pass;
    }
    return all ? 0 : 1;
}
