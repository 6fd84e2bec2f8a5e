#pragma once

#include <map>
#include <vector>

#include "ballframes/types.hpp"

namespace ballframes {

struct MonomialTerm {
    Complex coef;
    MultiIndex gamma;
};

/// One term c * (1 - <z,w>)^{-s}, the kernel-section shape.
struct AtomTerm {
    Complex coef;
    CVector center;  // strictly inside the ball
    double exponent; // s > 0
};

using PolyMap = std::map<MultiIndex, Complex>;

/// A finite linear combination of monomials z^gamma and kernel atoms
/// (1 - <z,w>)^{-s}.  Holomorphic on every closed ball of radius < 1.
/// Arithmetic is term-wise; terms merge only on exactly equal keys.
class HoloFunction {
public:
    explicit HoloFunction(int n) : n_(n) {}

    static HoloFunction constant(int n, Complex c);
    static HoloFunction monomial(int n, MultiIndex gamma, Complex c = Complex(1.0));
    static HoloFunction atom(const BallPoint& center, double exponent,
                             Complex c = Complex(1.0));
    static HoloFunction from_poly_map(int n, const PolyMap& terms);

    int n() const noexcept { return n_; }
    const std::vector<MonomialTerm>& monomials() const noexcept { return monos_; }
    const std::vector<AtomTerm>& atoms() const noexcept { return atoms_; }

    void add_monomial(const MultiIndex& gamma, Complex c);
    void add_atom(const BallPoint& center, double exponent, Complex c);

    bool is_polynomial() const noexcept { return atoms_.empty(); }
    bool is_zero() const noexcept { return monos_.empty() && atoms_.empty(); }
    /// Largest monomial degree (0 for empty monomial part).
    int max_monomial_degree() const;

    Complex eval(const CVector& z) const;
    Complex eval(const BallPoint& z) const { return eval(z.coords()); }

    HoloFunction& operator+=(const HoloFunction& rhs);
    HoloFunction operator+(const HoloFunction& rhs) const;
    HoloFunction operator-(const HoloFunction& rhs) const;
    HoloFunction scaled(Complex c) const;

    PolyMap to_poly_map() const; // throws DomainError when atoms are present

private:
    int n_;
    std::vector<MonomialTerm> monos_;
    std::vector<AtomTerm> atoms_;
};

/// z^gamma at z (monomial evaluation).
Complex eval_monomial(const CVector& z, const MultiIndex& gamma);

} // namespace ballframes
