#pragma once

#include "ballframes/types.hpp"

namespace ballframes {

/// Tolerances for group-element validation and ball-point identities.
/// Chosen so double precision passes with margin for n <= 4 and coordinate
/// sizes up to ~5.
inline constexpr double kTauGrp = 1e-10;
inline constexpr double kTauPt = 1e-10;
inline constexpr double kTauDen = 1e-14;

/// An element of SU(n,1) in block form
///
///     x = [ a  b ]      a: n x n,  b, c in C^n,  d in C,
///         [ c^t d ]
///
/// characterized by x^* J x = J with J = diag(-I_n, 1) and det x = 1.
/// Elements are immutable once constructed and always satisfy the defining
/// relations to within kTauGrp.
class GroupElement {
public:
    /// Validates the defining relations; throws InvalidGroupElement otherwise.
    static GroupElement make(const CMatrix& a, const CVector& b, const CVector& c, Complex d);

    /// Wraps a full (n+1) x (n+1) matrix, validating it.
    static GroupElement from_matrix(CMatrix m);

    static GroupElement identity(int n);

    int n() const noexcept { return n_; }
    const CMatrix& matrix() const noexcept { return m_; }

    CMatrix block_a() const { return m_.topLeftCorner(n_, n_); }
    CVector block_b() const { return m_.topRightCorner(n_, 1); }
    /// c as a column vector: the bottom-left row of the matrix is c^t.
    CVector block_c() const { return m_.bottomLeftCorner(1, n_).transpose(); }
    Complex d() const { return m_(n_, n_); }

    /// x^{-1} = J x^* J, assembled blockwise as (a^*, -conj(c); -conj(b)^t, conj(d)).
    GroupElement inverse() const;

    GroupElement operator*(const GroupElement& rhs) const;

    /// Fractional-linear action on the ball: x . z = (a z + b) / (c^t z + d).
    BallPoint act(const BallPoint& z) const;

    /// Residuals of the defining relations (max-norm); used by validation
    /// and by the verification suites.
    double j_relation_residual() const;
    double det_residual() const;
    double bd_relation_residual() const; // | |d|^2 - |b|^2 - 1 |

private:
    GroupElement(CMatrix m, int n) : m_(std::move(m)), n_(n) {}
    void validate() const;

    CMatrix m_;
    int n_;
};

/// Coordinates on the solvable group S = AN: one A-parameter t, and the
/// N-parameters (zeta, u) with zeta in C^{n-1}, u real.
struct SCoordinates {
    double t = 0.0;
    CVector zeta; // length n-1
    double u = 0.0;

    /// a_t * n_{zeta,u}
    GroupElement embed(int n) const;
};

/// One-parameter subgroup A: cosh/sinh mixing of the first ball coordinate
/// with the projective coordinate.
GroupElement a_element(int n, double t);

/// The group N (Heisenberg type): zeta in C^{n-1}, u real.
GroupElement n_element(int n, const CVector& zeta, double u);

/// Embeds a unitary k in U(n) as diag-block (k, conj(det k)); stabilizes the origin.
GroupElement k_element(const CMatrix& k);

/// Ordered product of one-parameter subgroups of S.  Coordinate order is
/// fixed: tvec[0] is the A-parameter, tvec[1] the N u-parameter, then
/// (Re zeta_j, Im zeta_j) in index order.  tvec has length 2n.
GroupElement s_from_coords(int n, const SVector& tvec);

/// The unique s in S with s . o = w (S acts freely and transitively).
/// Closed form; falls back to Newton iteration on s_from_coords when the
/// post-condition |s.o - w| <= kTauPt is not met.
GroupElement s_from_point(const BallPoint& w);

/// Closed-form AN coordinates of the s in S with s . o = w.
SCoordinates s_coordinates_of(const BallPoint& w);

/// Newton solve of act(s_from_coords(tvec), o) = w; exposed for testing the
/// fallback path directly.
GroupElement s_from_point_newton(const BallPoint& w, const SVector& seed, int max_iter = 60);

/// |d_{y^{-1}x} - conj(d_y) d_x (1 - <w,z>)| with w = x.o, z = y.o.
double cocycle_residual(const GroupElement& y, const GroupElement& x);

/// True when x lies in S, i.e. x coincides with the unique S-element over x.o.
bool is_in_S(const GroupElement& x, double tol = 1e-8);

} // namespace ballframes
