#include "ballframes/holo.hpp"

#include <cmath>

namespace ballframes {

Complex eval_monomial(const CVector& z, const MultiIndex& gamma) {
    Complex v(1.0, 0.0);
    for (std::size_t k = 0; k < gamma.size(); ++k)
        for (int e = 0; e < gamma[k]; ++e) v *= z[static_cast<Eigen::Index>(k)];
    return v;
}

HoloFunction HoloFunction::constant(int n, Complex c) {
    HoloFunction f(n);
    f.add_monomial(MultiIndex(n, 0), c);
    return f;
}

HoloFunction HoloFunction::monomial(int n, MultiIndex gamma, Complex c) {
    if (static_cast<int>(gamma.size()) != n) throw DomainError("gamma must have length n");
    HoloFunction f(n);
    f.add_monomial(gamma, c);
    return f;
}

HoloFunction HoloFunction::atom(const BallPoint& center, double exponent, Complex c) {
    HoloFunction f(center.dim());
    f.add_atom(center, exponent, c);
    return f;
}

HoloFunction HoloFunction::from_poly_map(int n, const PolyMap& terms) {
    HoloFunction f(n);
    for (const auto& [g, c] : terms)
        if (c != Complex(0.0)) f.add_monomial(g, c);
    return f;
}

void HoloFunction::add_monomial(const MultiIndex& gamma, Complex c) {
    if (static_cast<int>(gamma.size()) != n_) throw DomainError("gamma must have length n");
    for (int e : gamma)
        if (e < 0) throw DomainError("multi-index entries must be >= 0");
    for (auto& t : monos_) {
        if (t.gamma == gamma) {
            t.coef += c;
            return;
        }
    }
    monos_.push_back({c, gamma});
}

void HoloFunction::add_atom(const BallPoint& center, double exponent, Complex c) {
    if (center.dim() != n_) throw DomainError("atom center must have length n");
    if (exponent <= 0.0) throw DomainError("atom exponent must be positive");
    for (auto& t : atoms_) {
        if (t.exponent == exponent && (t.center - center.coords()).cwiseAbs().maxCoeff() == 0.0) {
            t.coef += c;
            return;
        }
    }
    atoms_.push_back({c, center.coords(), exponent});
}

int HoloFunction::max_monomial_degree() const {
    int d = 0;
    for (const auto& t : monos_) d = std::max(d, degree(t.gamma));
    return d;
}

Complex HoloFunction::eval(const CVector& z) const {
    Complex v(0.0, 0.0);
    for (const auto& t : monos_) v += t.coef * eval_monomial(z, t.gamma);
    for (const auto& t : atoms_) {
        Complex u(0.0, 0.0);
        for (Eigen::Index k = 0; k < z.size(); ++k) u += z[k] * std::conj(t.center[k]);
        v += t.coef * std::pow(Complex(1.0) - u, -t.exponent);
    }
    return v;
}

HoloFunction& HoloFunction::operator+=(const HoloFunction& rhs) {
    if (rhs.n_ != n_) throw DomainError("dimension mismatch");
    for (const auto& t : rhs.monos_) add_monomial(t.gamma, t.coef);
    for (const auto& t : rhs.atoms_) add_atom(BallPoint(t.center), t.exponent, t.coef);
    return *this;
}

HoloFunction HoloFunction::operator+(const HoloFunction& rhs) const {
    HoloFunction f = *this;
    f += rhs;
    return f;
}

HoloFunction HoloFunction::operator-(const HoloFunction& rhs) const {
    return *this + rhs.scaled(Complex(-1.0));
}

HoloFunction HoloFunction::scaled(Complex c) const {
    HoloFunction f(n_);
    for (const auto& t : monos_) f.monos_.push_back({t.coef * c, t.gamma});
    for (const auto& t : atoms_) f.atoms_.push_back({t.coef * c, t.center, t.exponent});
    return f;
}

PolyMap HoloFunction::to_poly_map() const {
    if (!atoms_.empty()) throw DomainError("to_poly_map requires a pure polynomial");
    PolyMap m;
    for (const auto& t : monos_) m[t.gamma] += t.coef;
    return m;
}

} // namespace ballframes
