#pragma once

#include "ballframes/holo.hpp"
#include "ballframes/quadrature.hpp"

namespace ballframes {

/// ||z^gamma||^2 in A^2_alpha: gamma! Gamma(n+alpha+1) / Gamma(n+alpha+1+|gamma|).
/// Evaluated in the log-Gamma domain (safe for |gamma| up to a few hundred).
double monomial_norm(const MultiIndex& gamma, double alpha);

/// Value of the orthonormal basis element phi_gamma of A^2_alpha at z.
Complex phi_gamma_eval(const MultiIndex& gamma, double alpha, const BallPoint& z);

/// Normalizing factor of phi_gamma, i.e. monomial_norm^{-1/2}.
double phi_gamma_scale(const MultiIndex& gamma, double alpha);

/// Reproducing kernel K_alpha(z,w) = (1 - <z,w>)^{-(n+1+alpha)}, principal branch.
Complex kernel_eval(const BallPoint& z, const BallPoint& w, double alpha);

/// Partial sum of the kernel's orthonormal expansion over |gamma| <= K.
Complex kernel_partial_sum(const BallPoint& z, const BallPoint& w, double alpha, int K);

/// dim P_k = C(k+n-1, k), the number of degree-k monomials in n variables.
long long dim_Pk(int n, int k);

/// ||z^gamma||^2 on the unit sphere S^{2n-1}: gamma! Gamma(n) / Gamma(n+|gamma|).
double sphere_monomial_norm(const MultiIndex& gamma);

/// Degree-k sphere reproducing kernel H_k(z,w) (any complex vectors).
Complex sphere_kernel_Hk(const CVector& z, const CVector& w, int k);

/// ||p||^2_{V_sigma} / ||p||^2_{L^2(sphere)} for p homogeneous of degree k:
/// Gamma(n+k) Gamma(sigma) / (Gamma(n) Gamma(sigma+k)).
double sphere_to_bergman_norm_factor(int n, int k, double sigma);

/// Homogeneous decomposition f = sum_k part_k up to degree k_max.  Atom
/// terms expand through the binomial series of (1-u)^{-s}.
std::vector<HoloFunction> homogeneous_parts(const HoloFunction& f, int k_max);

/// V_sigma norm of a pure polynomial (exact, via monomial norms at
/// alpha = sigma - n - 1).
double vsigma_norm(const HoloFunction& poly, double sigma);

struct DecayCheck {
    bool satisfied = false;
    double constant = 0.0; // minimal C with ||part_k|| <= C (1+k)^{-N} over all k
};

/// Tests the decay profile ||part_k||_{V_sigma} <= C (1+k)^{-N}.  The
/// envelope constant is fitted on the lower half of the supplied degrees
/// and must dominate the upper half; a maximum attained near the
/// truncation end signals that the profile is still growing.
DecayCheck smooth_decay_check(const std::vector<HoloFunction>& parts, double sigma, double N);

/// (integral of |f|^p dv_alpha)^{1/p} by quadrature.
double lp_alpha_norm(const HoloFunction& f, double p, double alpha, const QuadratureRule& rule);

/// Relative residual between ||f||_{L^p_alpha} computed directly and the
/// same norm routed through the group-side change of variables
/// (weight (1-|z|^2)^{alpha+n+1} against the invariant measure), with the
/// two sides evaluated on independent rules.
double group_norm_equiv_residual(const HoloFunction& f, double p, double alpha,
                                 const QuadratureRule& direct_rule,
                                 const QuadratureRule& transfer_rule);

/// Exact inner product in A^2_{sigma-n-1} on the monomial+atom class.
/// Atom exponents must equal sigma (kernel sections); anything else throws
/// UnsupportedAtomExponent -- quadrature is never substituted silently.
Complex inner_product_exact(const HoloFunction& f, const HoloFunction& g, double sigma);

/// | integral of f(w) K_{sigma-n-1}(z,w) dv_{sigma-n-1}(w)  -  f(z) |.
double reproduce_residual(const HoloFunction& f, const BallPoint& z, double sigma,
                          const QuadratureRule& rule);

/// Largest relative error of the rule's diagonal monomial moments against
/// the closed form, over |gamma| <= max_degree.
double max_diag_moment_rel_error(const QuadratureRule& rule, int max_degree);

/// Largest |quadrature(phi_gamma conj(phi_delta)) - delta_{gamma,delta}|
/// over all pairs with |gamma|, |delta| <= max_degree.
double max_orthonormality_error(const QuadratureRule& rule, int max_degree);

} // namespace ballframes
