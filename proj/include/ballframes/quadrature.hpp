#pragma once

#include <Eigen/Dense>

#include "ballframes/gammafn.hpp"
#include "ballframes/reduce.hpp"
#include "ballframes/types.hpp"

namespace ballframes {

inline constexpr double kTauQuad = 1e-9;

/// Nodes/weights for integration against the probability measure
/// dv_alpha = c_alpha (1 - |z|^2)^alpha dv on the unit ball of C^n.
///
/// Product construction: Gauss-Jacobi in t = r^2 with weight
/// (1-t)^alpha t^{n-1} (radial_order nodes), Gauss rules on the modulus
/// simplex (modulus_order nodes per direction), and uniform phase grids
/// (phase_order points per coordinate, exact for phase frequencies below
/// phase_order).  exactness_degree bounds the total conjugate-degree
/// |gamma| + |delta| for which z^gamma conj(z)^delta integrates exactly.
struct QuadratureRule {
    int n = 0;
    double alpha = 0.0;
    int exactness_degree = 0;
    Eigen::MatrixXcd pts;         // size() x n
    Eigen::VectorXd w;            // positive, sums to 1
    Eigen::VectorXd one_minus_r2; // cached 1 - |z_i|^2

    std::size_t size() const { return static_cast<std::size_t>(w.size()); }
    CVector point(std::size_t i) const { return pts.row(static_cast<Eigen::Index>(i)).transpose(); }
    double weight_sum() const;
};

/// Gauss rule on [0,1] for the weight (1-t)^a t^b, by Golub-Welsch.
struct GaussRule {
    Eigen::VectorXd t;
    Eigen::VectorXd w;
};
GaussRule gauss_jacobi01(int nodes, double a, double b);

QuadratureRule ball_quadrature(int n, double alpha, int radial_order, int phase_order,
                               int modulus_order);

/// Rule whose exactness covers monomial pairs |gamma|, |delta| <= max_degree
/// (total conjugate-degree 2*max_degree + 2, the default margin).
QuadratureRule rule_for_degree(int n, double alpha, int max_degree);

/// sum_i w_i f(i) with the deterministic chunked reduction.
template <typename F>
Complex integrate_nodes(const QuadratureRule& q, F&& f) {
    return reduce::deterministic_sum_c(
        q.size(), [&](std::size_t i) { return q.w[static_cast<Eigen::Index>(i)] * f(i); });
}

/// Integral of f against dv_alpha for the rule's own alpha.
template <typename F>
Complex integrate(const QuadratureRule& q, F&& f) {
    return integrate_nodes(q, [&](std::size_t i) { return f(q.point(i)); });
}

/// Integral of f against dv_{target_alpha} evaluated on a rule built for a
/// different weight: the mismatch is folded into the integrand as
/// (1-|z|^2)^(target-alpha) and the normalizing constants are adjusted.
template <typename F>
Complex integrate_target_alpha(const QuadratureRule& q, double target_alpha, F&& f) {
    const double scale = c_alpha(q.n, target_alpha) / c_alpha(q.n, q.alpha);
    const double expo = target_alpha - q.alpha;
    return integrate_nodes(q, [&](std::size_t i) {
               return std::pow(q.one_minus_r2[static_cast<Eigen::Index>(i)], expo) *
                      f(q.point(i));
           }) *
           scale;
}

/// Serial reference of integrate_nodes (plain compensated pass, no chunking).
template <typename F>
Complex integrate_nodes_serial(const QuadratureRule& q, F&& f) {
    return reduce::serial_sum_c(
        q.size(), [&](std::size_t i) { return q.w[static_cast<Eigen::Index>(i)] * f(i); });
}

/// Diagonal monomial moments: integrals of |z^gamma|^2 dv_alpha for every
/// gamma with |gamma| <= max_degree, in the graded ordering of
/// multiindices_up_to.  OpenMP kernel with the deterministic reduction.
Eigen::VectorXd moments_diag(const QuadratureRule& q, int max_degree);

/// Serial reference implementation of moments_diag.
Eigen::VectorXd moments_diag_serial(const QuadratureRule& q, int max_degree);

/// Multi-indices of fixed degree k (descending lexicographic), and all
/// multi-indices of degree <= d in graded order.
std::vector<MultiIndex> multiindices_of_degree(int n, int k);
std::vector<MultiIndex> multiindices_up_to(int n, int d);

} // namespace ballframes
