#pragma once

#include <cmath>

#include "ballframes/types.hpp"

namespace ballframes {

/// exp(lgamma(a) - lgamma(b)); stable for arguments up to a few hundred
/// where the Gamma function itself overflows.
inline double gamma_ratio(double a, double b) {
    return std::exp(std::lgamma(a) - std::lgamma(b));
}

/// log(gamma!) = sum_k lgamma(gamma_k + 1).
inline double log_multifactorial(const MultiIndex& g) {
    double s = 0.0;
    for (int e : g) s += std::lgamma(static_cast<double>(e) + 1.0);
    return s;
}

/// Normalizing constant of dv_alpha: c_alpha = Gamma(n+alpha+1) / (n! Gamma(alpha+1)).
inline double c_alpha(int n, double alpha) {
    if (alpha <= -1.0) throw DomainError("c_alpha requires alpha > -1");
    return std::exp(std::lgamma(n + alpha + 1.0) - std::lgamma(n + 1.0) -
                    std::lgamma(alpha + 1.0));
}

/// Binomial coefficient through lgamma (exact well past the int64 range we use).
inline double binomial(int n, int k) {
    if (k < 0 || k > n) return 0.0;
    return std::round(std::exp(std::lgamma(n + 1.0) - std::lgamma(k + 1.0) -
                               std::lgamma(n - k + 1.0)));
}

} // namespace ballframes
