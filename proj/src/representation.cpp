#include "ballframes/representation.hpp"

#include <cmath>
#include <limits>

namespace ballframes {

namespace {

Complex cocycle_denominator(const GroupElement& x, const BallPoint& z) {
    // -<z,b> + conj(d)
    Complex s = std::conj(x.d());
    const CVector b = x.block_b();
    for (int k = 0; k < x.n(); ++k) s -= z.coords()[k] * std::conj(b[k]);
    return s;
}

PolyMap poly_mul_trunc(const PolyMap& a, const PolyMap& b, int max_degree) {
    PolyMap out;
    for (const auto& [ga, ca] : a) {
        const int da = degree(ga);
        for (const auto& [gb, cb] : b) {
            if (da + degree(gb) > max_degree) continue;
            MultiIndex g(ga.size());
            for (std::size_t k = 0; k < g.size(); ++k) g[k] = ga[k] + gb[k];
            out[g] += ca * cb;
        }
    }
    return out;
}

} // namespace

Complex pi_apply_pointwise(const RepParams& rep, const GroupElement& x, const HoloFunction& f,
                           const BallPoint& z) {
    const Complex den = cocycle_denominator(x, z);
    const CVector num = x.block_a().adjoint() * z.coords() - x.block_c().conjugate();
    const BallPoint arg = BallPoint::clamped(num / den, kTauPt);
    return std::pow(den, -rep.sigma) * f.eval(arg);
}

HoloFunction pi_apply_atom(const RepParams& rep, const GroupElement& x) {
    const BallPoint w = x.act(BallPoint::origin(rep.n));
    return HoloFunction::atom(w, rep.sigma, std::pow(std::conj(x.d()), -rep.sigma));
}

Complex wavelet_psi(const RepParams& rep, const HoloFunction& f, const GroupElement& x) {
    const BallPoint w = x.act(BallPoint::origin(rep.n));
    return std::pow(x.d(), -rep.sigma) * f.eval(w);
}

double abs_wavelet_psi(const RepParams& rep, const HoloFunction& f, const BallPoint& w) {
    return std::pow(w.one_minus_norm2(), rep.sigma / 2.0) * std::abs(f.eval(w));
}

HoloFunction pi_transport(const RepParams& rep, const GroupElement& x, const HoloFunction& f,
                          int max_degree, double* tail_bound) {
    const int n = rep.n;
    const BallPoint w = x.act(BallPoint::origin(n));
    const Complex dbar = std::conj(x.d());
    const CMatrix astar = x.block_a().adjoint();
    const CVector cbar = x.block_c().conjugate();
    double tail = 0.0;

    HoloFunction out(n);
    for (const auto& term : f.monomials()) {
        const int k0 = degree(term.gamma);
        // pi(x) z^gamma = (a* z - conj(c))^gamma (conj(d) - <z,b>)^{-(sigma+k0)}
        //             = conj(d)^{-(sigma+k0)} (a* z - conj(c))^gamma
        //               * sum_m C_m(sigma+k0) <z,w>^m.
        PolyMap poly{{MultiIndex(n, 0), Complex(1.0)}};
        for (int j = 0; j < n; ++j) {
            PolyMap lin;
            MultiIndex zero(n, 0);
            lin[zero] = -cbar[j];
            for (int k = 0; k < n; ++k) {
                MultiIndex g(n, 0);
                g[static_cast<std::size_t>(k)] = 1;
                lin[g] += astar(j, k);
            }
            for (int e = 0; e < term.gamma[static_cast<std::size_t>(j)]; ++e)
                poly = poly_mul_trunc(poly, lin, max_degree);
        }

        const double s = rep.sigma + k0;
        PolyMap u{{MultiIndex(n, 0), Complex(0.0)}};
        u.clear();
        for (int k = 0; k < n; ++k) {
            MultiIndex g(n, 0);
            g[static_cast<std::size_t>(k)] = 1;
            u[g] = std::conj(w[k]);
        }
        PolyMap series{{MultiIndex(n, 0), Complex(1.0)}};
        PolyMap upow = series; // u^0
        double cm = 1.0;
        for (int m = 1; m <= max_degree; ++m) {
            cm *= (s + m - 1.0) / m;
            upow = poly_mul_trunc(upow, u, max_degree);
            for (const auto& [g, c] : upow) series[g] += cm * c;
        }
        PolyMap total = poly_mul_trunc(poly, series, max_degree);
        const Complex pref = term.coef * std::pow(dbar, -s);
        for (const auto& [g, c] : total) out.add_monomial(g, pref * c);

        // Tail of the binomial series on the closed unit ball: walk the
        // coefficients c_m r^m until the term ratio r (s+m)/(m+1) drops
        // below 1, then close with the geometric envelope.  Converges for
        // every r < 1.
        const double r = std::sqrt(w.norm2());
        double series_tail = 0.0;
        if (r > 0.0) {
            double cter = cm * std::pow(r, max_degree) * (s + max_degree) / (max_degree + 1.0) * r;
            int m = max_degree + 1;
            double ratio = r * (s + m) / (m + 1.0);
            while (ratio >= 1.0) {
                series_tail += cter;
                cter *= ratio;
                ++m;
                ratio = r * (s + m) / (m + 1.0);
            }
            series_tail += cter / (1.0 - ratio);
        }
        double poly_mass = 0.0;
        for (const auto& [g, c] : poly) poly_mass += std::abs(c);
        tail += std::abs(term.coef) * std::pow(std::abs(dbar), -s) * poly_mass * series_tail;
    }

    for (const auto& a : f.atoms()) {
        // Kernel sections transport exactly through the group shift:
        // K(., v) = conj(d_y)^{sigma} pi(y) 1 with y the S-element over v, so
        // pi(x) K(., v) = conj(d_y)^{sigma} conj(d_{xy})^{-sigma} K(., (xy).o).
        // Principal branches throughout; the phase is canonical for integer
        // sigma only.
        if (std::abs(a.exponent - rep.sigma) > 1e-12)
            throw UnsupportedAtomExponent("pi_transport supports atoms of exponent sigma");
        const GroupElement y = s_from_point(BallPoint(a.center));
        const GroupElement xy = x * y;
        const Complex coef = a.coef * std::pow(std::conj(y.d()), rep.sigma) *
                             std::pow(std::conj(xy.d()), -rep.sigma);
        out.add_atom(xy.act(BallPoint::origin(n)), rep.sigma, coef);
    }

    if (tail_bound) *tail_bound = tail;
    return out;
}

WaveletResult wavelet(const RepParams& rep, const HoloFunction& f, const HoloFunction& zeta,
                      const GroupElement& x, int truncation_degree) {
    WaveletResult res;
    const int deg = std::max(truncation_degree, f.max_monomial_degree());
    double tail = 0.0;
    const HoloFunction transported = pi_transport(rep, x, zeta, deg, &tail);
    res.value = inner_product_exact(f, transported, rep.sigma);
    // Pairing against the monomial part of f is exact once the transport
    // degree reaches deg f; only f's atom terms see the dropped series.
    double atom_mass = 0.0;
    for (const auto& a : f.atoms()) atom_mass += std::abs(a.coef);
    res.truncation_tail = atom_mass > 0.0 ? atom_mass * tail : 0.0;
    res.truncated = res.truncation_tail > 0.0;
    return res;
}

MembershipResult lp_membership(const RepParams& rep, double p, double t) {
    if (p < 1.0) throw DomainError("lp_membership requires p >= 1");
    MembershipResult r;
    r.member = t + p * rep.sigma / 2.0 > rep.n;
    r.ball_exponent = t + p * rep.sigma / 2.0 - rep.n - 1.0;
    return r;
}

SGrid make_sgrid(const QuadratureRule& rule) {
    SGrid g;
    g.rule = &rule;
    g.s.reserve(rule.size());
    g.s_inv.reserve(rule.size());
    for (std::size_t i = 0; i < rule.size(); ++i) {
        g.s.push_back(s_from_point(BallPoint::clamped(rule.point(i))));
        g.s_inv.push_back(g.s.back().inverse());
    }
    return g;
}

Complex convolve_on_ball(const std::vector<Complex>& F_at_nodes, const GroupFn& G,
                         const GroupElement& x, const SGrid& grid) {
    const QuadratureRule& q = *grid.rule;
    const int n = q.n;
    const double ca = c_alpha(n, q.alpha);
    const Complex v = integrate_nodes(q, [&](std::size_t i) {
        const double omr2 = q.one_minus_r2[static_cast<Eigen::Index>(i)];
        const Complex term = F_at_nodes[i] * G(grid.s_inv[i] * x) *
                             std::pow(omr2, -(n + 1.0) - q.alpha);
        if (!std::isfinite(std::abs(term)) || std::abs(term) > 1e100)
            throw NumericalBlowup("convolution integrand exceeded the overflow guard");
        return term;
    });
    return v / ca;
}

Complex convolve_on_ball(const GroupFn& F, const GroupFn& G, const GroupElement& x,
                         const SGrid& grid) {
    std::vector<Complex> fv(grid.rule->size());
#pragma omp parallel for schedule(static)
    for (long long i = 0; i < static_cast<long long>(fv.size()); ++i)
        fv[static_cast<std::size_t>(i)] = F(grid.s[static_cast<std::size_t>(i)]);
    return convolve_on_ball(fv, G, x, grid);
}

ReproducingFit reproducing_constant(const RepParams& rep, const HoloFunction& f,
                                    const std::vector<GroupElement>& xs, const SGrid& grid,
                                    double fail_tol) {
    std::vector<Complex> fv(grid.rule->size());
#pragma omp parallel for schedule(static)
    for (long long i = 0; i < static_cast<long long>(fv.size()); ++i)
        fv[static_cast<std::size_t>(i)] =
            wavelet_psi(rep, f, grid.s[static_cast<std::size_t>(i)]);
    const GroupFn wpsi = [&](const GroupElement& y) {
        return std::pow(y.d(), -rep.sigma);
    };

    std::vector<Complex> lhs(xs.size()), rhs(xs.size());
    for (std::size_t j = 0; j < xs.size(); ++j) {
        lhs[j] = convolve_on_ball(fv, wpsi, xs[j], grid);
        rhs[j] = wavelet_psi(rep, f, xs[j]);
    }
    Complex num(0.0), den(0.0);
    for (std::size_t j = 0; j < xs.size(); ++j) {
        num += std::conj(rhs[j]) * lhs[j];
        den += std::norm(rhs[j]);
    }
    ReproducingFit fit;
    fit.constant = num / den.real();
    for (std::size_t j = 0; j < xs.size(); ++j) {
        const double scale = std::abs(fit.constant * rhs[j]);
        if (scale == 0.0) continue;
        fit.max_rel_residual =
            std::max(fit.max_rel_residual, std::abs(lhs[j] - fit.constant * rhs[j]) / scale);
    }
    if (fit.max_rel_residual > fail_tol)
        throw ConvergenceFailure("reproducing identity residual " +
                                 std::to_string(fit.max_rel_residual) + " above tolerance");
    return fit;
}

Complex zhu_S_apply(double a, double b, const std::function<Complex(const CVector&)>& f,
                    const BallPoint& z, const QuadratureRule& rule) {
    const int n = rule.n;
    const double ca = c_alpha(n, rule.alpha);
    const double kexp = n + 1.0 + a + b;
    const Complex integral = integrate_nodes(rule, [&](std::size_t i) {
        const double omr2 = rule.one_minus_r2[static_cast<Eigen::Index>(i)];
        const CVector w = rule.point(i);
        Complex u(0.0);
        for (int k = 0; k < n; ++k) u += z.coords()[k] * std::conj(w[k]);
        const Complex term = f(w) * std::pow(omr2, b - rule.alpha) *
                             std::pow(std::abs(Complex(1.0) - u), -kexp);
        if (!std::isfinite(std::abs(term)) || std::abs(term) > 1e100)
            throw NumericalBlowup("Zhu operator integrand exceeded the overflow guard");
        return term;
    });
    return std::pow(z.one_minus_norm2(), a) * integral / ca;
}

bool zhu_bounded(double a, double b, double t, double p) {
    return (-p * a < t + 1.0) && (t + 1.0 < p * (b + 1.0));
}

double log_envelope_max_ratio(const RepParams& rep, const HoloFunction& zeta,
                              const HoloFunction& phi, const std::vector<GroupElement>& xs,
                              int truncation_degree) {
    double worst = 0.0;
    for (const auto& x : xs) {
        const BallPoint w = x.act(BallPoint::origin(rep.n));
        const double omw2 = w.one_minus_norm2();
        const double env = std::pow(omw2, rep.sigma / 2.0) * (1.0 - std::log(omw2));
        const Complex val = wavelet(rep, phi, zeta, x, truncation_degree).value;
        worst = std::max(worst, std::abs(val) / env);
    }
    return worst;
}

} // namespace ballframes
