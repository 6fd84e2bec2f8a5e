#include "ballframes/quadrature.hpp"

#include <cmath>
#include <numbers>

namespace ballframes {

double QuadratureRule::weight_sum() const {
    return reduce::deterministic_sum(size(), [&](std::size_t i) {
        return w[static_cast<Eigen::Index>(i)];
    });
}

GaussRule gauss_jacobi01(int nodes, double a, double b) {
    if (nodes < 1) throw DomainError("gauss_jacobi01 requires at least one node");
    if (a <= -1.0 || b <= -1.0) throw DomainError("gauss_jacobi01 requires a, b > -1");

    // Recurrence coefficients of the Jacobi weight (1-x)^a (1+x)^b on [-1,1].
    Eigen::VectorXd diag(nodes), offd(std::max(0, nodes - 1));
    const double apb = a + b;
    diag[0] = (b - a) / (apb + 2.0);
    for (int k = 1; k < nodes; ++k) {
        const double den = (2.0 * k + apb) * (2.0 * k + apb + 2.0);
        diag[k] = (b * b - a * a) / den;
        const double num = 4.0 * k * (k + a) * (k + b) * (k + apb);
        const double den2 = (2.0 * k + apb) * (2.0 * k + apb) * (2.0 * k + apb + 1.0) *
                            (2.0 * k + apb - 1.0);
        offd[k - 1] = std::sqrt(num / den2);
    }
    const double mass = std::exp((apb + 1.0) * std::numbers::ln2 + std::lgamma(a + 1.0) +
                                 std::lgamma(b + 1.0) - std::lgamma(apb + 2.0));

    Eigen::MatrixXd jm = Eigen::MatrixXd::Zero(nodes, nodes);
    for (int k = 0; k < nodes; ++k) jm(k, k) = diag[k];
    for (int k = 0; k + 1 < nodes; ++k) {
        jm(k, k + 1) = offd[k];
        jm(k + 1, k) = offd[k];
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(jm);
    if (es.info() != Eigen::Success)
        throw ConvergenceFailure("Golub-Welsch eigensolve failed");

    GaussRule g;
    g.t.resize(nodes);
    g.w.resize(nodes);
    for (int k = 0; k < nodes; ++k) {
        g.t[k] = 0.5 * (1.0 + es.eigenvalues()[k]);
        const double v0 = es.eigenvectors()(0, k);
        // Map mass from [-1,1] to [0,1]: (1-x)^a (1+x)^b dx = 2^{a+b+1} (1-t)^a t^b dt.
        g.w[k] = mass * v0 * v0 / std::pow(2.0, apb + 1.0);
    }
    return g;
}

QuadratureRule ball_quadrature(int n, double alpha, int radial_order, int phase_order,
                               int modulus_order) {
    if (n < 1 || n + 1 > kMaxDim) throw DomainError("ball_quadrature: unsupported dimension");
    if (alpha <= -1.0) throw DomainError("ball_quadrature requires alpha > -1");
    if (radial_order < 1 || phase_order < 1 || (n > 1 && modulus_order < 1))
        throw DomainError("ball_quadrature: orders must be positive");

    const GaussRule rad = gauss_jacobi01(radial_order, alpha, n - 1.0);
    std::vector<GaussRule> simplex;
    for (int k = 1; k <= n - 1; ++k)
        simplex.push_back(gauss_jacobi01(modulus_order, n - 1.0 - k, 0.0));

    std::size_t count = static_cast<std::size_t>(radial_order);
    for (int k = 0; k < n - 1; ++k) count *= static_cast<std::size_t>(modulus_order);
    for (int k = 0; k < n; ++k) count *= static_cast<std::size_t>(phase_order);
    if (count > std::size_t{30'000'000})
        throw DomainError("ball_quadrature: node count " + std::to_string(count) +
                          " exceeds the 3e7 cap");

    QuadratureRule q;
    q.n = n;
    q.alpha = alpha;
    q.exactness_degree = std::min(4 * radial_order - 2, phase_order - 1);
    if (n > 1) q.exactness_degree = std::min(q.exactness_degree, 4 * modulus_order - 2);
    q.pts.resize(static_cast<Eigen::Index>(count), n);
    q.w.resize(static_cast<Eigen::Index>(count));
    q.one_minus_r2.resize(static_cast<Eigen::Index>(count));

    const double ca = c_alpha(n, alpha);
    const double simplex_density = std::exp(std::lgamma(static_cast<double>(n))); // (n-1)!
    const double phase_w = std::pow(static_cast<double>(phase_order), -n);
    const double two_pi = 2.0 * std::numbers::pi;

    std::vector<Complex> phase(phase_order);
    for (int j = 0; j < phase_order; ++j)
        phase[j] = std::polar(1.0, two_pi * j / phase_order);

    Eigen::Index idx = 0;
    std::vector<int> sm(std::max(0, n - 1), 0);
    std::vector<int> ph(n, 0);
    std::vector<double> s(n, 1.0);
    for (int ir = 0; ir < radial_order; ++ir) {
        const double t = rad.t[ir];
        const double r = std::sqrt(t);
        const double wrad = ca * n * rad.w[ir];
        std::fill(sm.begin(), sm.end(), 0);
        while (true) {
            // Duffy map: s_k = v_k * prod_{j<k}(1 - v_j), last coordinate the remainder.
            double ws = simplex_density;
            double rem = 1.0;
            for (int k = 0; k < n - 1; ++k) {
                const double v = simplex[k].t[sm[k]];
                s[k] = v * rem;
                rem *= (1.0 - v);
                ws *= simplex[k].w[sm[k]];
            }
            s[n - 1] = rem;
            const double wbase = wrad * ws * phase_w;

            std::fill(ph.begin(), ph.end(), 0);
            while (true) {
                for (int k = 0; k < n; ++k)
                    q.pts(idx, k) = r * std::sqrt(s[k]) * phase[ph[k]];
                q.w[idx] = wbase;
                q.one_minus_r2[idx] = 1.0 - t;
                ++idx;
                int k = 0;
                while (k < n && ++ph[k] == phase_order) ph[k++] = 0;
                if (k == n) break;
            }
            int k = 0;
            while (k < n - 1 && ++sm[k] == modulus_order) sm[k++] = 0;
            if (k == n - 1) break;
        }
    }
    return q;
}

QuadratureRule rule_for_degree(int n, double alpha, int max_degree) {
    const int d = 2 * max_degree + 2;
    const int r = (d + 2 + 3) / 4; // 4r - 2 >= d
    return ball_quadrature(n, alpha, r, d + 1, n > 1 ? r : 1);
}

std::vector<MultiIndex> multiindices_of_degree(int n, int k) {
    std::vector<MultiIndex> out;
    MultiIndex g(n, 0);
    // Descending lexicographic enumeration.
    auto rec = [&](auto&& self, int pos, int rem) -> void {
        if (pos == n - 1) {
            g[pos] = rem;
            out.push_back(g);
            return;
        }
        for (int e = rem; e >= 0; --e) {
            g[pos] = e;
            self(self, pos + 1, rem - e);
        }
    };
    rec(rec, 0, k);
    return out;
}

std::vector<MultiIndex> multiindices_up_to(int n, int d) {
    std::vector<MultiIndex> out;
    for (int k = 0; k <= d; ++k) {
        auto mk = multiindices_of_degree(n, k);
        out.insert(out.end(), mk.begin(), mk.end());
    }
    return out;
}

Eigen::VectorXd moments_diag(const QuadratureRule& q, int max_degree) {
    const auto idx = multiindices_up_to(q.n, max_degree);
    const std::size_t width = idx.size();
    const int n = q.n;
    auto result = reduce::deterministic_sum_rows(
        q.size(), width, [&](std::size_t i, std::vector<double>& row) {
            // Powers |z_k|^{2j} built once per node, then each moment is a
            // short product of table lookups.
            std::vector<double> pw(static_cast<std::size_t>(n) * (max_degree + 1));
            for (int k = 0; k < n; ++k) {
                const double s = std::norm(q.pts(static_cast<Eigen::Index>(i), k));
                double acc = 1.0;
                for (int j = 0; j <= max_degree; ++j) {
                    pw[static_cast<std::size_t>(k) * (max_degree + 1) + j] = acc;
                    acc *= s;
                }
            }
            const double wi = q.w[static_cast<Eigen::Index>(i)];
            for (std::size_t m = 0; m < width; ++m) {
                double v = wi;
                for (int k = 0; k < n; ++k)
                    v *= pw[static_cast<std::size_t>(k) * (max_degree + 1) + idx[m][k]];
                row[m] = v;
            }
        });
    return Eigen::Map<Eigen::VectorXd>(result.data(), static_cast<Eigen::Index>(width));
}

Eigen::VectorXd moments_diag_serial(const QuadratureRule& q, int max_degree) {
    const auto idx = multiindices_up_to(q.n, max_degree);
    const int n = q.n;
    std::vector<reduce::Kahan> acc(idx.size());
    std::vector<double> pw(static_cast<std::size_t>(n) * (max_degree + 1));
    for (std::size_t i = 0; i < q.size(); ++i) {
        for (int k = 0; k < n; ++k) {
            const double s = std::norm(q.pts(static_cast<Eigen::Index>(i), k));
            double a = 1.0;
            for (int j = 0; j <= max_degree; ++j) {
                pw[static_cast<std::size_t>(k) * (max_degree + 1) + j] = a;
                a *= s;
            }
        }
        const double wi = q.w[static_cast<Eigen::Index>(i)];
        for (std::size_t m = 0; m < idx.size(); ++m) {
            double v = wi;
            for (int k = 0; k < n; ++k)
                v *= pw[static_cast<std::size_t>(k) * (max_degree + 1) + idx[m][k]];
            acc[m].add(v);
        }
    }
    Eigen::VectorXd out(static_cast<Eigen::Index>(idx.size()));
    for (std::size_t m = 0; m < idx.size(); ++m) out[static_cast<Eigen::Index>(m)] = acc[m].value();
    return out;
}

} // namespace ballframes
