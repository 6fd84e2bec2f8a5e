#pragma once

#include <functional>

#include "ballframes/bergman_core.hpp"
#include "ballframes/group.hpp"

namespace ballframes {

/// Parameters of the weighted holomorphic action pi_sigma on A^2_{sigma-n-1}.
/// Square-integrability requires sigma > n.
struct RepParams {
    int n;
    double sigma;

    RepParams(int n_, double sigma_) : n(n_), sigma(sigma_) {
        if (n < 1) throw DomainError("RepParams requires n >= 1");
        if (!(sigma > n)) throw DomainError("RepParams requires sigma > n");
    }
    double alpha() const { return sigma - n - 1.0; }
};

/// (pi_sigma(x) f)(z) = (-<z,b> + conj(d))^{-sigma} f((a* z - conj(c)) / (-<z,b> + conj(d))).
/// Principal branch for non-integer sigma.
Complex pi_apply_pointwise(const RepParams& rep, const GroupElement& x, const HoloFunction& f,
                           const BallPoint& z);

/// pi_sigma(x) applied to the constant function 1: conj(d)^{-sigma} times the
/// kernel section at w = x.o, returned as a single atom term.
HoloFunction pi_apply_atom(const RepParams& rep, const GroupElement& x);

/// Wavelet coefficient against the constant analyzing function:
/// W(f)(x) = d^{-sigma} f(x.o).
Complex wavelet_psi(const RepParams& rep, const HoloFunction& f, const GroupElement& x);

/// (1-|w|^2)^{sigma/2} |f(w)|; equals |wavelet_psi| for any x over w and is
/// branch-free for every real sigma.
double abs_wavelet_psi(const RepParams& rep, const HoloFunction& f, const BallPoint& w);

/// pi_sigma(x) applied to a function in the monomial+atom class, as a
/// monomial expansion truncated at total degree `degree` (atom terms of the
/// input transport exactly and do not truncate).  If tail_bound is non-null
/// it receives a bound on the dropped series mass on the closed unit ball.
HoloFunction pi_transport(const RepParams& rep, const GroupElement& x, const HoloFunction& f,
                          int max_degree, double* tail_bound = nullptr);

struct WaveletResult {
    Complex value{0.0, 0.0};
    double truncation_tail = 0.0; // bound on the dropped contribution
    bool truncated = false;
};

/// General wavelet coefficient <f, pi_sigma(x) zeta>, exact inner products.
/// Exact (tail 0) whenever f is a polynomial and the transport degree covers
/// deg f; pairings against atom terms of f report the truncation tail.
WaveletResult wavelet(const RepParams& rep, const HoloFunction& f, const HoloFunction& zeta,
                      const GroupElement& x, int truncation_degree = 40);

struct MembershipResult {
    bool member = false;
    /// Exponent of (1-|z|^2) in the equivalent ball-integral criterion.
    double ball_exponent = 0.0;
};

/// Membership of the psi-wavelet transform of smooth vectors in L^p_t(S):
/// true iff t + p sigma/2 > n (strict).
MembershipResult lp_membership(const RepParams& rep, double p, double t);

/// Quadrature nodes lifted to S: s_i = s_from_point(z_i) with cached
/// inverses.  Built once per rule and reused across convolution calls.
struct SGrid {
    const QuadratureRule* rule = nullptr;
    std::vector<GroupElement> s;
    std::vector<GroupElement> s_inv;
};
SGrid make_sgrid(const QuadratureRule& rule);

using GroupFn = std::function<Complex(const GroupElement&)>;

/// Convolution on S evaluated as a ball integral:
/// (F * G)(x) = integral of F(s_z) G(s_z^{-1} x) against dv / (1-|z|^2)^{n+1}.
Complex convolve_on_ball(const GroupFn& F, const GroupFn& G, const GroupElement& x,
                         const SGrid& grid);

/// Same with F pre-evaluated on the grid nodes (one entry per node).
Complex convolve_on_ball(const std::vector<Complex>& F_at_nodes, const GroupFn& G,
                         const GroupElement& x, const SGrid& grid);

struct ReproducingFit {
    Complex constant{0.0, 0.0};
    double max_rel_residual = 0.0;
};

/// Fits the single constant C in (W f) * (W psi) = C (W f) by least squares
/// over the sample points xs, evaluating the left side by convolve_on_ball.
/// Throws ConvergenceFailure when the fit residual exceeds fail_tol.
ReproducingFit reproducing_constant(const RepParams& rep, const HoloFunction& f,
                                    const std::vector<GroupElement>& xs, const SGrid& grid,
                                    double fail_tol = 1e-4);

/// Weighted integral operator
///   S f(z) = (1-|z|^2)^a * integral (1-|w|^2)^b |1-<z,w>|^{-(n+1+a+b)} f(w) dv(w).
Complex zhu_S_apply(double a, double b, const std::function<Complex(const CVector&)>& f,
                    const BallPoint& z, const QuadratureRule& rule);

/// Boundedness of S on L^p_t: -pa < t+1 < p(b+1), both strict.
bool zhu_bounded(double a, double b, double t, double p);

/// max over xs of |W_zeta(phi)(x)| / [(1-|x.o|^2)^{sigma/2} (1 - log(1-|x.o|^2))].
double log_envelope_max_ratio(const RepParams& rep, const HoloFunction& zeta,
                              const HoloFunction& phi, const std::vector<GroupElement>& xs,
                              int truncation_degree = 60);

} // namespace ballframes
