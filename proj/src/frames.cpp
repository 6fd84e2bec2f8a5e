#include "ballframes/frames.hpp"

#include <Eigen/SVD>
#include <cmath>
#include <random>

namespace ballframes {

FrameParams::FrameParams(int n_, double sigma_, double alpha_, double p_)
    : n(n_), sigma(sigma_), alpha(alpha_), p(p_) {
    if (n < 1) throw DomainError("FrameParams requires n >= 1");
    if (!(sigma > n)) throw DomainError("FrameParams requires sigma > n");
    if (p < 1.0) throw DomainError("FrameParams requires p >= 1");
    if (!(alpha > -1.0 && alpha < p * (sigma - n) - 1.0))
        throw DomainError("FrameParams requires -1 < alpha < p(sigma-n)-1");
}

FrameSystem::FrameSystem(FrameParams params, PointFamily family,
                         std::optional<HoloFunction> zeta, int K, int transport_degree)
    : params_(params), family_(std::move(family)), zeta_(std::move(zeta)), K_(K),
      transport_degree_(transport_degree) {
    if (K_ < 0) throw DomainError("FrameSystem requires K >= 0");
    if (family_.n() != params_.n) throw DomainError("family dimension mismatch");
    if (zeta_ && !zeta_->is_polynomial())
        throw DomainError("polynomial atom systems require a polynomial zeta");
    atoms_.reserve(family_.size());
    const RepParams rep(params_.n, params_.sigma);
    for (std::size_t i = 0; i < family_.size(); ++i) {
        const auto& e = family_.entry(i);
        if (!zeta_) {
            const double nu = std::pow(e.one_minus_w2, params_.sigma / 2.0);
            atoms_.push_back(HoloFunction::atom(e.w, params_.sigma, Complex(nu)));
        } else {
            double tail = 0.0;
            atoms_.push_back(pi_transport(rep, e.x, *zeta_, transport_degree_, &tail));
            transport_tail_ = std::max(transport_tail_, tail);
        }
    }
}

FrameSystem FrameSystem::psi_system(const FrameParams& params, PointFamily family, int K) {
    return FrameSystem(params, std::move(family), std::nullopt, K, 0);
}

FrameSystem FrameSystem::atom_system(const FrameParams& params, PointFamily family,
                                     const HoloFunction& zeta, int K, int transport_degree) {
    return FrameSystem(params, std::move(family), zeta, K, transport_degree);
}

const Eigen::MatrixXcd& FrameSystem::gram() const {
    if (gram_) return *gram_;
    const auto m = static_cast<Eigen::Index>(family_.size());
    Eigen::MatrixXcd g(m, m);
    const double alpha = params_.sigma - params_.n - 1.0;
    if (!zeta_) {
        // Closed form: G_ij = nu_i nu_j K_{sigma-n-1}(w_i, w_j).
#pragma omp parallel for schedule(static)
        for (long long i = 0; i < m; ++i) {
            const auto& ei = family_.entry(static_cast<std::size_t>(i));
            const double nui = std::pow(ei.one_minus_w2, params_.sigma / 2.0);
            for (Eigen::Index j = 0; j <= i; ++j) {
                const auto& ej = family_.entry(static_cast<std::size_t>(j));
                const double nuj = std::pow(ej.one_minus_w2, params_.sigma / 2.0);
                g(i, j) = nui * nuj * kernel_eval(ei.w, ej.w, alpha);
            }
        }
    } else {
#pragma omp parallel for schedule(static)
        for (long long i = 0; i < m; ++i)
            for (Eigen::Index j = 0; j <= i; ++j)
                g(i, j) = inner_product_exact(atoms_[static_cast<std::size_t>(j)],
                                              atoms_[static_cast<std::size_t>(i)],
                                              params_.sigma);
    }
    for (Eigen::Index i = 0; i < m; ++i)
        for (Eigen::Index j = i + 1; j < m; ++j) g(i, j) = std::conj(g(j, i));
    gram_ = std::move(g);
    return *gram_;
}

Eigen::MatrixXcd FrameSystem::analysis_matrix(int deg_cap) const {
    const int cap = deg_cap < 0 ? K_ : deg_cap;
    const auto idx = multiindices_up_to(params_.n, cap);
    const double alpha = params_.sigma - params_.n - 1.0;
    const double e = params_.weight_exponent();
    Eigen::MatrixXcd mat(static_cast<Eigen::Index>(family_.size()),
                         static_cast<Eigen::Index>(idx.size()));
#pragma omp parallel for schedule(static)
    for (long long i = 0; i < static_cast<long long>(family_.size()); ++i) {
        const auto& ent = family_.entry(static_cast<std::size_t>(i));
        const double wfac = std::pow(ent.one_minus_w2, e / 2.0);
        for (std::size_t a = 0; a < idx.size(); ++a) {
            const HoloFunction phi =
                HoloFunction::monomial(params_.n, idx[a], Complex(phi_gamma_scale(idx[a], alpha)));
            mat(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(a)) =
                wfac * inner_product_exact(phi, atoms_[static_cast<std::size_t>(i)],
                                           params_.sigma);
        }
    }
    return mat;
}

CoefficientSeq analysis(const FrameSystem& sys, const HoloFunction& f) {
    CoefficientSeq c;
    c.weight_exponent = sys.params().weight_exponent();
    c.values.resize(static_cast<Eigen::Index>(sys.size()));
    const double sigma = sys.params().sigma;
#pragma omp parallel for schedule(static)
    for (long long i = 0; i < static_cast<long long>(sys.size()); ++i)
        c.values[static_cast<Eigen::Index>(i)] =
            inner_product_exact(f, sys.atom_fn(static_cast<std::size_t>(i)), sigma);
    return c;
}

HoloFunction synthesis(const FrameSystem& sys, const Eigen::VectorXcd& c) {
    if (c.size() != static_cast<Eigen::Index>(sys.size()))
        throw DomainError("coefficient length does not match the family");
    HoloFunction out(sys.params().n);
    for (Eigen::Index i = 0; i < c.size(); ++i) {
        if (c[i] == Complex(0.0)) continue;
        out += sys.atom_fn(static_cast<std::size_t>(i)).scaled(c[i]);
    }
    return out;
}

FrameBoundsResult frame_bounds(const FrameSystem& sys) {
    if (sys.size() == 0) throw DegenerateFamily("empty family");
    const Eigen::MatrixXcd m = sys.analysis_matrix();
    Eigen::BDCSVD<Eigen::MatrixXcd> svd(m);
    const auto& sv = svd.singularValues();
    FrameBoundsResult r;
    r.K = sys.K();
    if (m.rows() < m.cols() || sv[sv.size() - 1] < kTauLin)
        throw DegenerateFamily("analysis matrix is rank-deficient on the test subspace");
    r.A = sv[sv.size() - 1] * sv[sv.size() - 1];
    r.B = sv[0] * sv[0];
    if (sys.K() >= 1) {
        const Eigen::MatrixXcd mp = sys.analysis_matrix(sys.K() - 1);
        Eigen::BDCSVD<Eigen::MatrixXcd> svdp(mp);
        const auto& svp = svdp.singularValues();
        r.A_prev = svp[svp.size() - 1] * svp[svp.size() - 1];
        r.B_prev = svp[0] * svp[0];
    }
    return r;
}

std::pair<double, double> empirical_norm_equiv(const FrameSystem& sys,
                                               const std::vector<HoloFunction>& fs,
                                               const QuadratureRule& rule) {
    const double p = sys.params().p;
    const double e = sys.params().weight_exponent();
    double lo = std::numeric_limits<double>::infinity();
    double hi = 0.0;
    for (const auto& f : fs) {
        const CoefficientSeq c = analysis(sys, f);
        const double num = std::pow(seq_norm(c.values, sys.family(), p, e), p);
        const double den = std::pow(lp_alpha_norm(f, p, sys.params().alpha, rule), p);
        const double ratio = num / den;
        lo = std::min(lo, ratio);
        hi = std::max(hi, ratio);
    }
    return {lo, hi};
}

namespace {

/// ||synthesis(c) - f||^2 in A^2_{sigma-n-1}, accumulated degreewise over the
/// orthonormal basis.  The expansion form c^H G c - 2 Re(c^H r) + ||f||^2 is
/// algebraically equal but cancellation-limited near zero; the sum of
/// squares is not.  The dropped degrees beyond the cutoff are covered by a
/// geometric bound added to the result.
double decompose_residual_sq(const FrameSystem& sys, const Eigen::VectorXcd& c,
                             const HoloFunction& f) {
    const int n = sys.params().n;
    const double sigma = sys.params().sigma;
    const double alpha = sigma - n - 1.0;
    const HoloFunction h = synthesis(sys, c) - f;

    double rmax2 = 0.0, mass = 0.0;
    for (const auto& a : h.atoms()) {
        rmax2 = std::max(rmax2, abs2(a.center));
        mass += std::abs(a.coef);
    }
    PolyMap mono;
    for (const auto& t : h.monomials()) mono[t.gamma] += t.coef;
    const int min_deg = h.max_monomial_degree();

    // Pick the degree cutoff from the analytic tail bound
    // mass^2 sum_{k>D} c_k rmax2^k (c_k the binomial-series coefficients).
    int cutoff = std::max(min_deg, 8);
    double tail_bound = 0.0;
    if (mass > 0.0 && rmax2 > 0.0) {
        double ck = 1.0;
        for (int k = 0;; ++k) {
            ck *= (n + alpha + 1.0 + k) / (k + 1.0);
            if (k < cutoff) continue;
            double tail = 0.0;
            double term = ck * std::pow(rmax2, k + 1);
            int j = k + 1;
            while (term > 0.0) {
                const double ratio = rmax2 * (n + alpha + 1.0 + j) / (j + 1.0);
                if (ratio < 1.0) {
                    tail += term / (1.0 - ratio);
                    break;
                }
                tail += term;
                term *= ratio;
                ++j;
            }
            if (tail * mass * mass <= 1e-24 || k >= 4000) {
                cutoff = k;
                tail_bound = tail * mass * mass;
                break;
            }
        }
        // The balanced multi-index has the smallest norm at each degree;
        // stop before it underflows and absorb the rest into the bound.
        int safe = cutoff;
        for (int k = std::max(min_deg, 8); k <= cutoff; ++k) {
            MultiIndex bal(static_cast<std::size_t>(n), k / n);
            bal[0] += k - n * (k / n);
            if (monomial_norm(bal, alpha) < 1e-280) {
                safe = k - 1;
                break;
            }
        }
        if (safe < cutoff) {
            double ck2 = 1.0;
            for (int k = 0; k <= safe; ++k) ck2 *= (n + alpha + 1.0 + k) / (k + 1.0);
            double term = ck2 * std::pow(rmax2, safe + 1), tail = 0.0;
            int j = safe + 1;
            while (term > 0.0) {
                const double ratio = rmax2 * (n + alpha + 1.0 + j) / (j + 1.0);
                if (ratio < 1.0) {
                    tail += term / (1.0 - ratio);
                    break;
                }
                tail += term;
                term *= ratio;
                ++j;
            }
            cutoff = safe;
            tail_bound = tail * mass * mass;
        }
    }

    // Accumulate |<h, phi_gamma>|^2 degreewise.  Atom contributions walk a
    // per-atom coordinate power table, so the whole pass is linear in
    // (#atoms x #indices).
    const auto idx = multiindices_up_to(n, cutoff);
    std::vector<Complex> coef(idx.size(), Complex(0.0));
    std::vector<double> nrm(idx.size());
    for (std::size_t m2 = 0; m2 < idx.size(); ++m2) nrm[m2] = monomial_norm(idx[m2], alpha);
    for (std::size_t m2 = 0; m2 < idx.size(); ++m2)
        if (auto it = mono.find(idx[m2]); it != mono.end()) coef[m2] += it->second;
    std::vector<Complex> pw(static_cast<std::size_t>(n) * (cutoff + 1));
    for (const auto& a : h.atoms()) {
        for (int k = 0; k < n; ++k) {
            Complex acc(1.0);
            for (int j = 0; j <= cutoff; ++j) {
                pw[static_cast<std::size_t>(k) * (cutoff + 1) + j] = acc;
                acc *= std::conj(a.center[k]);
            }
        }
        for (std::size_t m2 = 0; m2 < idx.size(); ++m2) {
            Complex wbar(1.0);
            for (int k = 0; k < n; ++k)
                wbar *= pw[static_cast<std::size_t>(k) * (cutoff + 1) + idx[m2][k]];
            coef[m2] += a.coef * wbar / nrm[m2];
        }
    }
    double res2 = tail_bound;
    for (std::size_t m2 = 0; m2 < idx.size(); ++m2) res2 += std::norm(coef[m2]) * nrm[m2];
    return res2;
}

} // namespace

DecomposeResult decompose(const FrameSystem& sys, const HoloFunction& f, int max_iterations) {
    const auto m = static_cast<Eigen::Index>(sys.size());
    if (m == 0) throw DegenerateFamily("empty family");
    const Eigen::MatrixXcd& g = sys.gram();
    const CoefficientSeq r = analysis(sys, f);
    const double e = sys.params().weight_exponent();
    const int maxit = max_iterations > 0 ? max_iterations : 10 * static_cast<int>(m);

    // Minimum-weighted-norm tie-break: substitute c = D u with
    // D = diag((1-|w_i|^2)^{-e/2}); CG from zero then returns the least
    // ||u|| solution, i.e. the least weighted-norm coefficient vector.
    Eigen::VectorXd dvec(m);
    for (Eigen::Index i = 0; i < m; ++i)
        dvec[i] = std::pow(sys.family().entry(static_cast<std::size_t>(i)).one_minus_w2,
                           -e / 2.0);

    const Eigen::VectorXcd rhs0 = dvec.asDiagonal() * r.values;
    auto apply = [&](const Eigen::VectorXcd& u, double lambda) -> Eigen::VectorXcd {
        Eigen::VectorXcd v = dvec.asDiagonal() * u;
        v = g.selfadjointView<Eigen::Lower>() * v;
        v = dvec.asDiagonal() * v;
        if (lambda > 0.0) v += lambda * u;
        return v;
    };

    DecomposeResult out;
    const double rhs_norm = rhs0.norm();
    if (rhs_norm == 0.0) {
        out.coeffs = Eigen::VectorXcd::Zero(m);
        const double f2 = inner_product_exact(f, f, sys.params().sigma).real();
        out.relative_residual = f2 > 0.0 ? 1.0 : 0.0;
        return out;
    }

    // Preconditioned CG on the (possibly singular, always consistent) normal
    // equations.  Keeps the iterate with the smallest equation residual;
    // stops on the tolerance or when progress stalls at the numerical floor.
    const int stall_window = std::min(300, std::max(50, maxit / 4));
    auto run_cg = [&](double lambda, Eigen::VectorXcd& best, int& iters) -> bool {
        Eigen::VectorXd prec(m);
        for (Eigen::Index i = 0; i < m; ++i) {
            const double gd = std::abs(g(i, i).real()) * dvec[i] * dvec[i] + lambda;
            prec[i] = gd > 0.0 ? 1.0 / gd : 1.0;
        }
        Eigen::VectorXcd u = Eigen::VectorXcd::Zero(m);
        best = u;
        double best_res = rhs_norm;
        double floor_res = rhs_norm;
        int since_progress = 0;
        Eigen::VectorXcd res = rhs0;
        Eigen::VectorXcd z = prec.asDiagonal() * res;
        Eigen::VectorXcd pvec = z;
        Complex rz = res.dot(z);
        for (iters = 0; iters < maxit; ++iters) {
            const double rn = res.norm();
            if (rn < best_res) {
                best_res = rn;
                best = u;
            }
            if (rn <= 1e-12 * rhs_norm) return true;
            // no new floor for 300 iterations: the iteration has reached its
            // numerical floor, accept the best iterate
            if (rn < 0.9999 * floor_res) {
                floor_res = rn;
                since_progress = 0;
            } else if (++since_progress >= stall_window) {
                return true;
            }
            const Eigen::VectorXcd ap = apply(pvec, lambda);
            const Complex pap = pvec.dot(ap);
            if (std::abs(pap) == 0.0) return true;
            const Complex ak = rz / pap;
            u += ak * pvec;
            res -= ak * ap;
            z = prec.asDiagonal() * res;
            const Complex rz_new = res.dot(z);
            pvec = z + (rz_new / rz) * pvec;
            rz = rz_new;
        }
        return false;
    };

    auto function_residual = [&](const Eigen::VectorXcd& coeffs) {
        const double f2 = inner_product_exact(f, f, sys.params().sigma).real();
        const double res2 = decompose_residual_sq(sys, coeffs, f);
        return f2 > 0.0 ? std::sqrt(res2) / std::sqrt(f2) : std::sqrt(res2);
    };

    Eigen::VectorXcd u;
    int iters = 0;
    bool ok = run_cg(0.0, u, iters);
    out.coeffs = dvec.asDiagonal() * u;
    out.cg_iterations = iters;
    out.relative_residual = function_residual(out.coeffs);

    if (out.relative_residual > kTauRec) {
        // CG cannot resolve eigencomponents much below lambda_max * 1e-8 on
        // these nearly dependent atom Grams.  Refine with a thresholded
        // eigen-pseudo-inverse of the weighted normal matrix (rank cut at
        // kTauLin relative), which reaches the true least-squares floor.
        Eigen::MatrixXcd b = dvec.asDiagonal() * g * dvec.asDiagonal();
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(b);
        if (es.info() == Eigen::Success) {
            const double lmax = es.eigenvalues().maxCoeff();
            Eigen::VectorXcd ue = Eigen::VectorXcd::Zero(m);
            for (Eigen::Index k = 0; k < m; ++k) {
                const double lam = es.eigenvalues()[k];
                if (lam > kTauLin * lmax) {
                    const Eigen::VectorXcd v = es.eigenvectors().col(k);
                    ue += v * (v.dot(rhs0) / lam);
                }
            }
            const Eigen::VectorXcd ce = dvec.asDiagonal() * ue;
            const double re = function_residual(ce);
            if (re < out.relative_residual) {
                out.coeffs = ce;
                out.relative_residual = re;
            }
        }
    }

    if (!ok && out.relative_residual > kTauRec) {
        // Last resort: a tiny Tikhonov shift, reported in the result.
        double ginf = 0.0;
        for (Eigen::Index i = 0; i < m; ++i) {
            double s = 0.0;
            for (Eigen::Index j = 0; j < m; ++j) s += std::abs(g(i, j));
            ginf = std::max(ginf, s);
        }
        const double lambda = 1e-10 * ginf;
        ok = run_cg(lambda, u, iters);
        const Eigen::VectorXcd creg = dvec.asDiagonal() * u;
        const double rreg = function_residual(creg);
        if (rreg < out.relative_residual) {
            out.coeffs = creg;
            out.relative_residual = rreg;
            out.lambda = lambda;
            out.cg_iterations = iters;
        }
        if (!ok && out.relative_residual > kTauRec)
            throw ConvergenceFailure("decompose did not converge; residual " +
                                     std::to_string(out.relative_residual));
    }
    return out;
}

ReconstructResult reconstruct_from_samples(const FrameSystem& sys,
                                           const Eigen::VectorXcd& samples) {
    if (samples.size() != static_cast<Eigen::Index>(sys.size()))
        throw DomainError("sample length does not match the family");
    const Eigen::MatrixXcd m = sys.analysis_matrix();
    const double e = sys.params().weight_exponent();
    Eigen::VectorXcd s(samples.size());
    for (Eigen::Index i = 0; i < samples.size(); ++i)
        s[i] = std::pow(sys.family().entry(static_cast<std::size_t>(i)).one_minus_w2, e / 2.0) *
               samples[i];
    Eigen::BDCSVD<Eigen::MatrixXcd> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const Eigen::VectorXcd ghat = svd.solve(s);

    const auto idx = multiindices_up_to(sys.params().n, sys.K());
    const double alpha = sys.params().sigma - sys.params().n - 1.0;
    HoloFunction g(sys.params().n);
    for (std::size_t a = 0; a < idx.size(); ++a) {
        const Complex c = ghat[static_cast<Eigen::Index>(a)];
        if (c == Complex(0.0)) continue;
        g.add_monomial(idx[a], c * phi_gamma_scale(idx[a], alpha));
    }
    ReconstructResult out{std::move(g), 0.0};
    const double sn = s.norm();
    out.lsq_residual = sn > 0.0 ? (m * ghat - s).norm() / sn : (m * ghat - s).norm();
    return out;
}

double seq_norm(const Eigen::VectorXcd& c, const PointFamily& family, double p, double e) {
    if (p < 1.0) throw DomainError("seq_norm requires p >= 1");
    if (c.size() != static_cast<Eigen::Index>(family.size()))
        throw DomainError("coefficient length does not match the family");
    const double s = reduce::deterministic_sum(family.size(), [&](std::size_t i) {
        return std::pow(std::abs(c[static_cast<Eigen::Index>(i)]), p) *
               std::pow(family.entry(i).one_minus_w2, e);
    });
    return std::pow(s, 1.0 / p);
}

double riesz_lower_bound(const FrameSystem& sys) {
    if (sys.size() == 0) throw DegenerateFamily("empty family");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(sys.gram());
    if (es.info() != Eigen::Success) throw ConvergenceFailure("Gram eigensolve failed");
    const double lmin = es.eigenvalues()[0];
    if (lmin < kTauLin)
        throw DegenerateFamily("atoms are linearly dependent (lambda_min = " +
                               std::to_string(lmin) + ")");
    return std::sqrt(lmin);
}

std::pair<double, double> riesz_empirical(const FrameSystem& sys, double p, int count,
                                          std::uint64_t seed, const QuadratureRule& rule) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    const double space_alpha = sys.params().sigma * p / 2.0 - sys.params().n - 1.0;
    double lo = std::numeric_limits<double>::infinity();
    double hi = 0.0;
    for (int t = 0; t < count; ++t) {
        Eigen::VectorXcd c(static_cast<Eigen::Index>(sys.size()));
        for (Eigen::Index i = 0; i < c.size(); ++i) c[i] = Complex(gauss(rng), gauss(rng));
        double cp = 0.0;
        for (Eigen::Index i = 0; i < c.size(); ++i) cp += std::pow(std::abs(c[i]), p);
        cp = std::pow(cp, 1.0 / p);
        const HoloFunction g = synthesis(sys, c);
        const double ratio = lp_alpha_norm(g, p, space_alpha, rule) / cp;
        lo = std::min(lo, ratio);
        hi = std::max(hi, ratio);
    }
    return {lo, hi};
}

} // namespace ballframes
