#include "ballframes/bergman_core.hpp"

#include <cmath>

namespace ballframes {

double monomial_norm(const MultiIndex& gamma, double alpha) {
    const int n = static_cast<int>(gamma.size());
    if (alpha <= -1.0) throw DomainError("monomial_norm requires alpha > -1");
    const double k = degree(gamma);
    return std::exp(log_multifactorial(gamma) + std::lgamma(n + alpha + 1.0) -
                    std::lgamma(n + alpha + 1.0 + k));
}

double phi_gamma_scale(const MultiIndex& gamma, double alpha) {
    const int n = static_cast<int>(gamma.size());
    const double k = degree(gamma);
    return std::exp(0.5 * (std::lgamma(n + alpha + 1.0 + k) - log_multifactorial(gamma) -
                           std::lgamma(n + alpha + 1.0)));
}

Complex phi_gamma_eval(const MultiIndex& gamma, double alpha, const BallPoint& z) {
    return phi_gamma_scale(gamma, alpha) * eval_monomial(z.coords(), gamma);
}

Complex kernel_eval(const BallPoint& z, const BallPoint& w, double alpha) {
    const int n = z.dim();
    return std::pow(Complex(1.0) - pairing(z, w), -(n + 1.0 + alpha));
}

Complex kernel_partial_sum(const BallPoint& z, const BallPoint& w, double alpha, int K) {
    // Degreewise the expansion collapses to the binomial series in u = <z,w>.
    const int n = z.dim();
    const Complex u = pairing(z, w);
    Complex sum(0.0);
    double coef = 1.0;
    Complex upow(1.0);
    for (int k = 0; k <= K; ++k) {
        sum += coef * upow;
        coef *= (n + 1.0 + alpha + k) / (k + 1.0);
        upow *= u;
    }
    return sum;
}

long long dim_Pk(int n, int k) {
    if (n < 1 || k < 0) throw DomainError("dim_Pk requires n >= 1, k >= 0");
    return static_cast<long long>(binomial(k + n - 1, k));
}

double sphere_monomial_norm(const MultiIndex& gamma) {
    const int n = static_cast<int>(gamma.size());
    const double k = degree(gamma);
    return std::exp(log_multifactorial(gamma) + std::lgamma(static_cast<double>(n)) -
                    std::lgamma(n + k));
}

Complex sphere_kernel_Hk(const CVector& z, const CVector& w, int k) {
    const int n = static_cast<int>(z.size());
    Complex u(0.0);
    for (Eigen::Index j = 0; j < z.size(); ++j) u += z[j] * std::conj(w[j]);
    const double coef = std::exp(std::lgamma(n + static_cast<double>(k)) -
                                 std::lgamma(k + 1.0) - std::lgamma(static_cast<double>(n)));
    return coef * std::pow(u, k);
}

double sphere_to_bergman_norm_factor(int n, int k, double sigma) {
    if (sigma <= n) throw DomainError("sphere_to_bergman_norm_factor requires sigma > n");
    return std::exp(std::lgamma(n + static_cast<double>(k)) + std::lgamma(sigma) -
                    std::lgamma(static_cast<double>(n)) - std::lgamma(sigma + k));
}

std::vector<HoloFunction> homogeneous_parts(const HoloFunction& f, int k_max) {
    const int n = f.n();
    std::vector<PolyMap> parts(static_cast<std::size_t>(k_max) + 1);
    for (const auto& t : f.monomials()) {
        const int k = degree(t.gamma);
        if (k <= k_max) parts[static_cast<std::size_t>(k)][t.gamma] += t.coef;
    }
    for (const auto& a : f.atoms()) {
        // (1 - <z,w>)^{-s} = sum_k Gamma(s+k)/(k! Gamma(s)) <z,w>^k, and
        // <z,w>^k expands multinomially over |gamma| = k.
        double ck = 1.0;
        for (int k = 0; k <= k_max; ++k) {
            for (const auto& g : multiindices_of_degree(n, k)) {
                const double multinom =
                    std::exp(std::lgamma(k + 1.0) - log_multifactorial(g));
                Complex wbar(1.0);
                for (int j = 0; j < n; ++j)
                    for (int e = 0; e < g[static_cast<std::size_t>(j)]; ++e)
                        wbar *= std::conj(a.center[j]);
                parts[static_cast<std::size_t>(k)][g] += a.coef * ck * multinom * wbar;
            }
            ck *= (a.exponent + k) / (k + 1.0);
        }
    }
    std::vector<HoloFunction> out;
    out.reserve(parts.size());
    for (const auto& m : parts) out.push_back(HoloFunction::from_poly_map(n, m));
    return out;
}

double vsigma_norm(const HoloFunction& poly, double sigma) {
    if (!poly.is_polynomial()) throw DomainError("vsigma_norm requires a polynomial");
    const int n = poly.n();
    const double alpha = sigma - n - 1.0;
    double s = 0.0;
    for (const auto& [g, c] : poly.to_poly_map()) s += std::norm(c) * monomial_norm(g, alpha);
    return std::sqrt(s);
}

DecayCheck smooth_decay_check(const std::vector<HoloFunction>& parts, double sigma, double N) {
    DecayCheck out;
    std::vector<double> r(parts.size());
    for (std::size_t k = 0; k < parts.size(); ++k)
        r[k] = vsigma_norm(parts[k], sigma) * std::pow(1.0 + static_cast<double>(k), N);
    double cmax = 0.0;
    for (double v : r) cmax = std::max(cmax, v);
    out.constant = cmax;
    const std::size_t half = parts.size() / 2;
    double cfit = 0.0;
    for (std::size_t k = 0; k < half; ++k) cfit = std::max(cfit, r[k]);
    out.satisfied = true;
    for (std::size_t k = half; k < parts.size(); ++k)
        if (r[k] > cfit * (1.0 + 1e-9)) out.satisfied = false;
    return out;
}

double lp_alpha_norm(const HoloFunction& f, double p, double alpha,
                     const QuadratureRule& rule) {
    if (p < 1.0) throw DomainError("lp_alpha_norm requires p >= 1");
    const Complex v = integrate_target_alpha(rule, alpha, [&](const CVector& z) {
        return Complex(std::pow(std::abs(f.eval(z)), p), 0.0);
    });
    return std::pow(v.real(), 1.0 / p);
}

double group_norm_equiv_residual(const HoloFunction& f, double p, double alpha,
                                 const QuadratureRule& direct_rule,
                                 const QuadratureRule& transfer_rule) {
    const int n = f.n();
    const double lhs_p = std::pow(lp_alpha_norm(f, p, alpha, direct_rule), p);
    // Group side: c_alpha * integral of |f|^p (1-|z|^2)^{alpha+n+1} against
    // the invariant measure dv / (1-|z|^2)^{n+1}.
    const double t = alpha + n + 1.0;
    const double ca = c_alpha(n, alpha);
    const double ca_rule = c_alpha(n, transfer_rule.alpha);
    const Complex rhs = integrate_nodes(transfer_rule, [&](std::size_t i) {
        const double omr2 = transfer_rule.one_minus_r2[static_cast<Eigen::Index>(i)];
        const CVector z = transfer_rule.point(i);
        return Complex(std::pow(std::abs(f.eval(z)), p) *
                           std::pow(omr2, t - (n + 1.0) - transfer_rule.alpha),
                       0.0);
    });
    const double rhs_p = ca / ca_rule * rhs.real();
    return std::abs(lhs_p - rhs_p) / std::abs(lhs_p);
}

namespace {

Complex eval_poly_part(const HoloFunction& f, const CVector& z) {
    Complex v(0.0);
    for (const auto& t : f.monomials()) v += t.coef * eval_monomial(z, t.gamma);
    return v;
}

} // namespace

Complex inner_product_exact(const HoloFunction& f, const HoloFunction& g, double sigma) {
    if (f.n() != g.n()) throw DomainError("dimension mismatch in inner product");
    const int n = f.n();
    if (sigma <= n) throw DomainError("inner_product_exact requires sigma > n");
    const double alpha = sigma - n - 1.0;
    for (const auto& a : f.atoms())
        if (std::abs(a.exponent - sigma) > 1e-12)
            throw UnsupportedAtomExponent("atom exponent " + std::to_string(a.exponent) +
                                          " != sigma");
    for (const auto& a : g.atoms())
        if (std::abs(a.exponent - sigma) > 1e-12)
            throw UnsupportedAtomExponent("atom exponent " + std::to_string(a.exponent) +
                                          " != sigma");

    Complex ip(0.0);
    // monomial x monomial through the weighted l^2 pairing of coefficients
    for (const auto& tf : f.monomials())
        for (const auto& tg : g.monomials())
            if (tf.gamma == tg.gamma)
                ip += tf.coef * std::conj(tg.coef) * monomial_norm(tf.gamma, alpha);
    // <poly, c K(.,w)> = conj(c) poly(w)      (reproducing property)
    for (const auto& ag : g.atoms())
        ip += std::conj(ag.coef) * eval_poly_part(f, ag.center);
    // <c K(.,w), poly> = c conj(poly(w))
    for (const auto& af : f.atoms())
        ip += af.coef * std::conj(eval_poly_part(g, af.center));
    // <c1 K(.,w1), c2 K(.,w2)> = c1 conj(c2) K(w2, w1)
    for (const auto& af : f.atoms())
        for (const auto& ag : g.atoms())
            ip += af.coef * std::conj(ag.coef) *
                  kernel_eval(BallPoint(ag.center), BallPoint(af.center), alpha);
    return ip;
}

double reproduce_residual(const HoloFunction& f, const BallPoint& z, double sigma,
                          const QuadratureRule& rule) {
    const int n = f.n();
    const double alpha = sigma - n - 1.0;
    const Complex integral = integrate_target_alpha(rule, alpha, [&](const CVector& w) {
        return f.eval(w) * kernel_eval(z, BallPoint::clamped(w), alpha);
    });
    return std::abs(integral - f.eval(z));
}

double max_diag_moment_rel_error(const QuadratureRule& rule, int max_degree) {
    const auto idx = multiindices_up_to(rule.n, max_degree);
    const Eigen::VectorXd m = moments_diag(rule, max_degree);
    double worst = 0.0;
    for (std::size_t i = 0; i < idx.size(); ++i) {
        const double exact = monomial_norm(idx[i], rule.alpha);
        worst = std::max(worst,
                         std::abs(m[static_cast<Eigen::Index>(i)] - exact) / exact);
    }
    return worst;
}

double max_orthonormality_error(const QuadratureRule& rule, int max_degree) {
    const auto idx = multiindices_up_to(rule.n, max_degree);
    const std::size_t m = idx.size();
    std::vector<double> scale(m);
    for (std::size_t a = 0; a < m; ++a) scale[a] = phi_gamma_scale(idx[a], rule.alpha);

    // Phi(i,a) = sqrt(w_i) phi_a(z_i); the Gram Phi^H Phi collects every pair.
    Eigen::MatrixXcd phi(rule.size(), static_cast<Eigen::Index>(m));
#pragma omp parallel for schedule(static)
    for (long long i = 0; i < static_cast<long long>(rule.size()); ++i) {
        const CVector z = rule.point(static_cast<std::size_t>(i));
        const double sw = std::sqrt(rule.w[static_cast<Eigen::Index>(i)]);
        for (std::size_t a = 0; a < m; ++a)
            phi(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(a)) =
                sw * scale[a] * eval_monomial(z, idx[a]);
    }
    const Eigen::MatrixXcd gram = phi.adjoint() * phi;
    double worst = 0.0;
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b) {
            const double target = (a == b) ? 1.0 : 0.0;
            worst = std::max(worst, std::abs(gram(static_cast<Eigen::Index>(a),
                                                  static_cast<Eigen::Index>(b)) -
                                             target));
        }
    return worst;
}

} // namespace ballframes
