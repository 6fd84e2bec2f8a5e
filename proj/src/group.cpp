#include "ballframes/group.hpp"

#include <cmath>

namespace ballframes {

namespace {

CMatrix j_form(int n) {
    CMatrix j = CMatrix::Identity(n + 1, n + 1);
    for (int k = 0; k < n; ++k) j(k, k) = Complex(-1.0, 0.0);
    return j;
}

} // namespace

GroupElement GroupElement::make(const CMatrix& a, const CVector& b, const CVector& c,
                                Complex d) {
    const int n = static_cast<int>(a.rows());
    if (a.cols() != n || b.size() != n || c.size() != n)
        throw InvalidGroupElement("inconsistent block shapes");
    if (n + 1 > kMaxDim)
        throw DomainError("supported ball dimensions are n <= " + std::to_string(kMaxDim - 1));
    CMatrix m(n + 1, n + 1);
    m.topLeftCorner(n, n) = a;
    m.topRightCorner(n, 1) = b;
    m.bottomLeftCorner(1, n) = c.transpose();
    m(n, n) = d;
    GroupElement x(std::move(m), n);
    x.validate();
    return x;
}

GroupElement GroupElement::from_matrix(CMatrix m) {
    if (m.rows() != m.cols() || m.rows() < 2)
        throw InvalidGroupElement("matrix must be square of size >= 2");
    if (m.rows() > kMaxDim)
        throw DomainError("supported ball dimensions are n <= " + std::to_string(kMaxDim - 1));
    const int n = static_cast<int>(m.rows()) - 1;
    GroupElement x(std::move(m), n);
    x.validate();
    return x;
}

GroupElement GroupElement::identity(int n) {
    if (n < 1 || n + 1 > kMaxDim) throw DomainError("bad dimension for identity");
    return GroupElement(CMatrix::Identity(n + 1, n + 1), n);
}

double GroupElement::j_relation_residual() const {
    const CMatrix j = j_form(n_);
    const CMatrix r = m_.adjoint() * j * m_ - j;
    return r.cwiseAbs().maxCoeff();
}

double GroupElement::det_residual() const { return std::abs(m_.determinant() - Complex(1.0)); }

double GroupElement::bd_relation_residual() const {
    return std::abs(std::norm(d()) - abs2(block_b()) - 1.0);
}

void GroupElement::validate() const {
    if (j_relation_residual() > kTauGrp)
        throw InvalidGroupElement("x*Jx != J (residual " + std::to_string(j_relation_residual()) + ")");
    if (det_residual() > kTauGrp)
        throw InvalidGroupElement("det x != 1 (residual " + std::to_string(det_residual()) + ")");
    if (bd_relation_residual() > kTauGrp)
        throw InvalidGroupElement("|d|^2 - |b|^2 != 1 (residual " +
                                  std::to_string(bd_relation_residual()) + ")");
}

GroupElement GroupElement::inverse() const {
    CMatrix m(n_ + 1, n_ + 1);
    m.topLeftCorner(n_, n_) = block_a().adjoint();
    m.topRightCorner(n_, 1) = -block_c().conjugate();
    m.bottomLeftCorner(1, n_) = -block_b().adjoint();
    m(n_, n_) = std::conj(d());
    GroupElement x(std::move(m), n_);
    x.validate();
    return x;
}

GroupElement GroupElement::operator*(const GroupElement& rhs) const {
    if (rhs.n_ != n_) throw InvalidGroupElement("dimension mismatch in product");
    GroupElement x(m_ * rhs.m_, n_);
    x.validate();
    return x;
}

BallPoint GroupElement::act(const BallPoint& z) const {
    if (z.dim() != n_) throw DomainError("dimension mismatch in group action");
    CVector num = block_a() * z.coords() + block_b();
    Complex den = d();
    const CVector c = block_c();
    for (int k = 0; k < n_; ++k) den += c[k] * z.coords()[k];
    if (std::abs(den) < kTauDen)
        throw NumericalBlowup("degenerate denominator in fractional action");
    return BallPoint::clamped(num / den, kTauPt);
}

GroupElement a_element(int n, double t) {
    CMatrix a = CMatrix::Identity(n, n);
    a(0, 0) = std::cosh(t);
    CVector b = CVector::Zero(n);
    b[0] = std::sinh(t);
    return GroupElement::make(a, b, b, std::cosh(t));
}

GroupElement n_element(int n, const CVector& zeta, double u) {
    if (zeta.size() != n - 1) throw DomainError("n_element requires zeta in C^{n-1}");
    // Block layout over the splitting (coordinate 1, coordinates 2..n, projective):
    //   [ 1 - |z|^2/2 + iu   z^T      |z|^2/2 - iu   ]
    //   [ -conj(z)           I_{n-1}  conj(z)        ]
    //   [ iu - |z|^2/2       z^T      1 + |z|^2/2 - iu]
    const double z2 = abs2(zeta);
    const Complex B(z2 / 2.0, -u); // |z|^2/2 - iu
    CMatrix m = CMatrix::Zero(n + 1, n + 1);
    m(0, 0) = Complex(1.0) - B;
    m(0, n) = B;
    m(n, 0) = -B;
    m(n, n) = Complex(1.0) + B;
    for (int k = 0; k < n - 1; ++k) {
        m(0, 1 + k) = zeta[k];
        m(n, 1 + k) = zeta[k];
        m(1 + k, 0) = -std::conj(zeta[k]);
        m(1 + k, 1 + k) = Complex(1.0);
        m(1 + k, n) = std::conj(zeta[k]);
    }
    return GroupElement::from_matrix(std::move(m));
}

GroupElement k_element(const CMatrix& k) {
    const int n = static_cast<int>(k.rows());
    if (k.cols() != n) throw InvalidGroupElement("k must be square");
    const CMatrix r = k.adjoint() * k - CMatrix::Identity(n, n);
    if (r.cwiseAbs().maxCoeff() > kTauGrp)
        throw InvalidGroupElement("k_element requires a unitary matrix");
    return GroupElement::make(k, CVector::Zero(n), CVector::Zero(n),
                              std::conj(k.determinant()));
}

GroupElement SCoordinates::embed(int n) const {
    return a_element(n, t) * n_element(n, zeta, u);
}

GroupElement s_from_coords(int n, const SVector& tvec) {
    if (tvec.size() != 2 * n) throw DomainError("tvec must have length 2n");
    GroupElement x = a_element(n, tvec[0]);
    x = x * n_element(n, CVector::Zero(n - 1), tvec[1]);
    for (int j = 0; j < n - 1; ++j) {
        CVector re = CVector::Zero(n - 1);
        re[j] = Complex(tvec[2 + 2 * j], 0.0);
        x = x * n_element(n, re, 0.0);
        CVector im = CVector::Zero(n - 1);
        im[j] = Complex(0.0, tvec[3 + 2 * j]);
        x = x * n_element(n, im, 0.0);
    }
    return x;
}

SCoordinates s_coordinates_of(const BallPoint& w) {
    const int n = w.dim();
    const Complex w1 = w[0];
    const double m = std::norm(Complex(1.0) - w1);
    const double omw2 = w.one_minus_norm2();
    SCoordinates sc;
    sc.t = 0.5 * std::log(omw2 / m);
    sc.u = -w1.imag() / omw2;
    sc.zeta = CVector::Zero(n - 1);
    const double et = std::exp(-sc.t);
    for (int j = 0; j < n - 1; ++j)
        sc.zeta[j] = std::conj(w[j + 1] * et / (Complex(1.0) - w1));
    return sc;
}

GroupElement s_from_point(const BallPoint& w) {
    const int n = w.dim();
    const SCoordinates sc = s_coordinates_of(w);
    GroupElement s = sc.embed(n);
    const BallPoint img = s.act(BallPoint::origin(n));
    double err = 0.0;
    for (int k = 0; k < n; ++k) err = std::max(err, std::abs(img[k] - w[k]));
    if (err <= kTauPt) return s;

    // Closed form missed the tolerance; polish with the Newton fallback.
    // Seed tvec so that s_from_coords reproduces the same group element:
    // sequential one-parameter factors accumulate u by +Re(zeta_j)Im(zeta_j).
    SVector seed = SVector::Zero(2 * n);
    seed[0] = sc.t;
    double ucorr = sc.u;
    for (int j = 0; j < n - 1; ++j) {
        seed[2 + 2 * j] = sc.zeta[j].real();
        seed[3 + 2 * j] = sc.zeta[j].imag();
        ucorr -= sc.zeta[j].real() * sc.zeta[j].imag();
    }
    seed[1] = ucorr;
    return s_from_point_newton(w, seed);
}

GroupElement s_from_point_newton(const BallPoint& w, const SVector& seed, int max_iter) {
    const int n = w.dim();
    const int dim = 2 * n;
    const BallPoint o = BallPoint::origin(n);
    SVector tv = seed;

    auto residual = [&](const SVector& t) {
        const BallPoint img = s_from_coords(n, t).act(o);
        Eigen::VectorXd r(dim);
        for (int k = 0; k < n; ++k) {
            const Complex d = img[k] - w[k];
            r[2 * k] = d.real();
            r[2 * k + 1] = d.imag();
        }
        return r;
    };

    for (int it = 0; it < max_iter; ++it) {
        const Eigen::VectorXd r = residual(tv);
        if (r.cwiseAbs().maxCoeff() <= kTauPt) return s_from_coords(n, tv);
        Eigen::MatrixXd jac(dim, dim);
        const double h = 1e-7;
        for (int j = 0; j < dim; ++j) {
            SVector tp = tv;
            tp[j] += h;
            jac.col(j) = (residual(tp) - r) / h;
        }
        const Eigen::VectorXd step = jac.fullPivLu().solve(r);
        tv -= step;
    }
    throw ConvergenceFailure("s_from_point Newton iteration did not reach kTauPt");
}

double cocycle_residual(const GroupElement& y, const GroupElement& x) {
    const int n = x.n();
    const BallPoint o = BallPoint::origin(n);
    const BallPoint w = x.act(o);
    const BallPoint z = y.act(o);
    const Complex lhs = (y.inverse() * x).d();
    const Complex rhs = std::conj(y.d()) * x.d() * (Complex(1.0) - pairing(w, z));
    return std::abs(lhs - rhs);
}

bool is_in_S(const GroupElement& x, double tol) {
    const GroupElement s = s_from_point(x.act(BallPoint::origin(x.n())));
    return (x.matrix() - s.matrix()).cwiseAbs().maxCoeff() <= tol;
}

} // namespace ballframes
