#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "ballframes/errors.hpp"

namespace ballframes {

using Complex = std::complex<double>;

/// Largest supported matrix side for group elements ((n+1) x (n+1)).
/// Everything is stack-allocated below this bound, which keeps the small
/// dense algebra allocation-free in the hot loops.
inline constexpr int kMaxDim = 5;

/// Complex column vector of length n (ball coordinates), n <= kMaxDim - 1.
using CVector = Eigen::Matrix<Complex, Eigen::Dynamic, 1, 0, kMaxDim, 1>;

/// Complex matrix up to kMaxDim x kMaxDim (group blocks and full elements).
using CMatrix = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, 0, kMaxDim, kMaxDim>;

/// Real coordinate vector for the solvable group S (length 2n).
using SVector = Eigen::Matrix<double, Eigen::Dynamic, 1, 0, 2 * kMaxDim, 1>;

/// Hermitian pairing <z,w> = sum_k z_k * conj(w_k).
inline Complex pairing(const CVector& z, const CVector& w) {
    Complex s{0.0, 0.0};
    for (Eigen::Index k = 0; k < z.size(); ++k) s += z[k] * std::conj(w[k]);
    return s;
}

inline double abs2(const CVector& z) {
    double s = 0.0;
    for (Eigen::Index k = 0; k < z.size(); ++k) s += std::norm(z[k]);
    return s;
}

/// A point in the open unit ball of C^n.  Construction enforces |z| < 1
/// strictly; use `clamped` for values produced by group actions that may
/// overshoot the boundary by rounding.
class BallPoint {
public:
    explicit BallPoint(CVector z) : z_(std::move(z)) {
        if (abs2(z_) >= 1.0)
            throw DomainError("ball point requires |z|^2 < 1, got |z|^2 = " +
                              std::to_string(abs2(z_)));
    }

    static BallPoint origin(int n) { return BallPoint(CVector::Zero(n)); }

    /// Accepts |z|^2 < 1 + tol and renormalizes anything at or past the
    /// boundary back inside.  Rejects larger overshoots.
    static BallPoint clamped(CVector z, double tol = 1e-10) {
        const double r2 = abs2(z);
        if (r2 >= 1.0 + tol)
            throw DomainError("point left the closed ball: |z|^2 = " + std::to_string(r2));
        if (r2 >= 1.0) z *= (1.0 - 1e-15) / std::sqrt(r2);
        return BallPoint(std::move(z));
    }

    const CVector& coords() const noexcept { return z_; }
    Complex operator[](int k) const { return z_[k]; }
    int dim() const noexcept { return static_cast<int>(z_.size()); }
    double norm2() const { return abs2(z_); }
    double one_minus_norm2() const { return 1.0 - abs2(z_); }

private:
    CVector z_;
};

/// <z,w> for ball points.
inline Complex pairing(const BallPoint& z, const BallPoint& w) {
    return pairing(z.coords(), w.coords());
}

/// Multi-index gamma in Z_+^n.
using MultiIndex = std::vector<int>;

inline int degree(const MultiIndex& g) {
    int d = 0;
    for (int e : g) d += e;
    return d;
}

} // namespace ballframes
