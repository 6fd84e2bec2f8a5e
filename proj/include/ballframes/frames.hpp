#pragma once

#include <optional>

#include "ballframes/representation.hpp"
#include "ballframes/sampling.hpp"

namespace ballframes {

inline constexpr double kTauLin = 1e-12;
inline constexpr double kTauRec = 1e-6;

/// Space parameters of a frame system.  Construction enforces the standing
/// assumption -1 < alpha < p(sigma - n) - 1 and sigma > n.
struct FrameParams {
    int n;
    double sigma;
    double alpha;
    double p;

    FrameParams(int n_, double sigma_, double alpha_, double p_);
    /// Sequence-weight exponent e = alpha + n + 1 - sigma p / 2.
    double weight_exponent() const { return alpha + n + 1.0 - sigma * p / 2.0; }
};

/// A sampled atom system over a point family.  With the default constant
/// analyzing function the atoms are the normalized kernel sections
///
///     a_i(z) = (1 - |w_i|^2)^{sigma/2} (1 - <z, w_i>)^{-sigma},
///
/// which are branch-free for every real sigma; their Gram has unit diagonal.
/// With a polynomial atom zeta the system uses the transported functions
/// pi_sigma(x_i) zeta.  Analysis/synthesis are adjoint against the same
/// atoms, so <f, synthesis(c)> = sum_i conj(c_i) analysis(f)_i exactly.
class FrameSystem {
public:
    static FrameSystem psi_system(const FrameParams& params, PointFamily family, int K);
    static FrameSystem atom_system(const FrameParams& params, PointFamily family,
                                   const HoloFunction& zeta, int K,
                                   int transport_degree = 40);

    const FrameParams& params() const noexcept { return params_; }
    const PointFamily& family() const noexcept { return family_; }
    int K() const noexcept { return K_; }
    bool atom_is_psi() const noexcept { return !zeta_.has_value(); }
    std::size_t size() const noexcept { return family_.size(); }

    /// The i-th atom as an explicit function.
    const HoloFunction& atom_fn(std::size_t i) const { return atoms_[i]; }

    /// Worst transport truncation tail across the atoms (0 for the psi
    /// system, whose kernel atoms are exact).
    double transport_tail() const noexcept { return transport_tail_; }

    /// Gram matrix G_ij = <a_j, a_i>; Hermitian PSD, cached after first use.
    const Eigen::MatrixXcd& gram() const;

    /// Weighted analysis matrix over the orthonormal polynomial basis of
    /// degree <= deg_cap (defaults to K): M_{i,gamma} =
    /// (1-|w_i|^2)^{e/2} <phi_gamma, a_i>.
    Eigen::MatrixXcd analysis_matrix(int deg_cap = -1) const;

private:
    FrameSystem(FrameParams params, PointFamily family, std::optional<HoloFunction> zeta,
                int K, int transport_degree);

    FrameParams params_;
    PointFamily family_;
    std::optional<HoloFunction> zeta_;
    int K_;
    int transport_degree_;
    double transport_tail_ = 0.0;
    std::vector<HoloFunction> atoms_;
    mutable std::optional<Eigen::MatrixXcd> gram_;
};

struct CoefficientSeq {
    Eigen::VectorXcd values;
    double weight_exponent = 0.0;
};

/// c_i = <f, a_i> with exact inner products; for the psi system this is
/// (1-|w_i|^2)^{sigma/2} f(w_i), the branch-free sampling coefficient.
CoefficientSeq analysis(const FrameSystem& sys, const HoloFunction& f);

/// sum_i c_i a_i as an explicit function.
HoloFunction synthesis(const FrameSystem& sys, const Eigen::VectorXcd& c);

struct FrameBoundsResult {
    double A = 0.0;      // sigma_min(M)^2
    double B = 0.0;      // sigma_max(M)^2
    double A_prev = 0.0; // same at K-1, for the stability report
    double B_prev = 0.0;
    int K = 0;
};

/// Spectral frame bounds on the degree-<=K polynomial subspace (p = 2 route).
/// Throws DegenerateFamily when sigma_min < kTauLin.
FrameBoundsResult frame_bounds(const FrameSystem& sys);

/// Observed range (min, max) over fs of
/// [sum_i |c_i|^p (1-|w_i|^2)^e] / ||f||_{A^p_alpha}^p.
std::pair<double, double> empirical_norm_equiv(const FrameSystem& sys,
                                               const std::vector<HoloFunction>& fs,
                                               const QuadratureRule& rule);

struct DecomposeResult {
    Eigen::VectorXcd coeffs;
    double relative_residual = 0.0;
    int cg_iterations = 0;
    double lambda = 0.0; // regularization actually applied (0 unless CG stagnated)
};

/// Minimum-weighted-norm least squares fit of f by the atom system, via
/// preconditioned conjugate gradients on the Gram normal equations.
DecomposeResult decompose(const FrameSystem& sys, const HoloFunction& f,
                          int max_iterations = -1);

struct ReconstructResult {
    HoloFunction g;
    double lsq_residual = 0.0; // ||M ghat - s|| / ||s|| in the weighted sample space
};

/// Recovers the polynomial of degree <= K from its analysis samples by least
/// squares against the weighted analysis matrix.
ReconstructResult reconstruct_from_samples(const FrameSystem& sys,
                                           const Eigen::VectorXcd& samples);

/// (sum_i |c_i|^p (1-|w_i|^2)^e)^{1/p}.
double seq_norm(const Eigen::VectorXcd& c, const PointFamily& family, double p, double e);

/// sqrt(lambda_min(Gram)): exact lower Riesz bound of the atom system in A^2.
/// Throws DegenerateFamily when lambda_min < kTauLin (atoms dependent).
double riesz_lower_bound(const FrameSystem& sys);

/// Observed range of ||synthesis(c)||_{A^p_{sigma p/2 - n - 1}} / ||c||_p
/// over seeded random coefficient vectors.
std::pair<double, double> riesz_empirical(const FrameSystem& sys, double p, int count,
                                          std::uint64_t seed, const QuadratureRule& rule);

} // namespace ballframes
