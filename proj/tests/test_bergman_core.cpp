#include <doctest.h>

#include <cmath>

#include "ballframes/bergman_core.hpp"
#include "test_helpers.hpp"

using namespace ballframes;
using namespace ballframes::testing;

namespace {

BallPoint pt1(double re, double im = 0.0) {
    CVector z(1);
    z[0] = Complex(re, im);
    return BallPoint(z);
}

BallPoint pt2(Complex a, Complex b) {
    CVector z(2);
    z[0] = a;
    z[1] = b;
    return BallPoint(z);
}

} // namespace

TEST_SUITE_BEGIN("bergman_core");

TEST_CASE("monomial norms") {
    CHECK(monomial_norm({1}, 0.0) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(monomial_norm({0, 0, 0}, 2.7) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(monomial_norm({3}, 2.0) == doctest::Approx(6.0 * 6.0 / 720.0).epsilon(1e-14));
    CHECK_THROWS_AS(monomial_norm({1}, -1.0), DomainError);

    // quadrature oracle at exactness degree >= 6
    const QuadratureRule q = rule_for_degree(1, 2.0, 3);
    const Complex m =
        integrate(q, [](const CVector& z) { return Complex(std::pow(std::norm(z[0]), 3)); });
    CHECK(monomial_norm({3}, 2.0) == doctest::Approx(m.real()).epsilon(1e-11));
}

TEST_CASE("orthonormal basis evaluation") {
    CHECK(phi_gamma_eval({0, 0}, 1.3, BallPoint::origin(2)) == Complex(1.0));
    CHECK(phi_gamma_eval({1}, 0.0, pt1(0.5)).real() ==
          doctest::Approx(std::sqrt(2.0) * 0.5).epsilon(1e-14));

    // <phi_gamma, phi_gamma> = 1 through the exact inner product
    const HoloFunction phi =
        HoloFunction::monomial(2, {2, 1}, Complex(phi_gamma_scale({2, 1}, 1.0)));
    CHECK(inner_product_exact(phi, phi, 4.0).real() == doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("kernel evaluation and partial sums") {
    CHECK(kernel_eval(pt1(0.37, 0.21), BallPoint::origin(1), 0.7) == Complex(1.0));
    CHECK(kernel_eval(pt1(0.5), pt1(0.5), 0.0).real() ==
          doctest::Approx(16.0 / 9.0).epsilon(1e-14));
    CHECK(kernel_partial_sum(pt1(0.5), pt1(0.5), 0.0, 60).real() ==
          doctest::Approx(16.0 / 9.0).epsilon(1e-12));
    // orthogonal coordinates: <z,w> = 0 kills the pairing
    CHECK(kernel_eval(pt2(Complex(0.3), Complex(0.0)), pt2(Complex(0.0), Complex(0.4)), 0.0) ==
          Complex(1.0));
}

TEST_CASE("partial sums converge with a geometric tail") {
    std::mt19937_64 rng(3);
    const double alpha = 1.5;
    const int n = 2, K = 40;
    for (int t = 0; t < 20; ++t) {
        const BallPoint z = random_ball_point(rng, n, 0.83);
        const BallPoint w = random_ball_point(rng, n, 0.83);
        const double u = std::abs(pairing(z, w));
        const double tail =
            std::abs(kernel_eval(z, w, alpha) - kernel_partial_sum(z, w, alpha, K));
        // First dropped term times the geometric envelope, plus fp rounding.
        const double c_next = std::exp(std::lgamma(n + 1.0 + alpha + K + 1) -
                                       std::lgamma(K + 2.0) - std::lgamma(n + 1.0 + alpha));
        const double q = u * (n + 1.0 + alpha + K + 1) / (K + 2.0);
        REQUIRE(q < 1.0);
        const double bound = c_next * std::pow(u, K + 1) / (1.0 - q) +
                             1e-12 * std::abs(kernel_eval(z, w, alpha));
        CHECK(tail <= bound);
    }
}

TEST_CASE("dimension of the homogeneous spaces") {
    CHECK(dim_Pk(1, 7) == 1);
    CHECK(dim_Pk(2, 3) == 4);
    CHECK(dim_Pk(3, 2) == 6);
    CHECK(dim_Pk(3, 2) == static_cast<long long>(multiindices_of_degree(3, 2).size()));
    for (int k = 0; k <= 10; ++k)
        CHECK(dim_Pk(3, k) <= static_cast<long long>(std::pow(1.0 + k, 3)));
}

TEST_CASE("sphere norms and kernels") {
    CHECK(sphere_monomial_norm({1, 0}) == doctest::Approx(0.5).epsilon(1e-15));
    CVector e1(2);
    e1[0] = Complex(1.0);
    e1[1] = Complex(0.0);
    CHECK(sphere_kernel_Hk(e1, e1, 0) == Complex(1.0));
    CHECK(sphere_kernel_Hk(e1, e1, 1).real() == doctest::Approx(2.0).epsilon(1e-14));

    // explicit finite sum oracle
    std::mt19937_64 rng(5);
    const BallPoint z = random_ball_point(rng, 2, 0.9);
    const BallPoint w = random_ball_point(rng, 2, 0.9);
    for (int k : {1, 2, 5}) {
        Complex s(0.0);
        for (const auto& g : multiindices_of_degree(2, k))
            s += std::exp(std::lgamma(2.0 + k) - log_multifactorial(g) - std::lgamma(2.0)) *
                 eval_monomial(z.coords(), g) * std::conj(eval_monomial(w.coords(), g));
        CHECK(std::abs(sphere_kernel_Hk(z.coords(), w.coords(), k) - s) <= 1e-12);
    }
}

TEST_CASE("sphere-to-Bergman norm factor") {
    CHECK(sphere_to_bergman_norm_factor(3, 0, 4.5) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(sphere_to_bergman_norm_factor(1, 1, 2.0) == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(sphere_to_bergman_norm_factor(2, 2, 3.0) == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(sphere_to_bergman_norm_factor(1, 1, 2.0) ==
          doctest::Approx(monomial_norm({1}, 0.0) / sphere_monomial_norm({1})).epsilon(1e-14));
    // log-Gamma identity, all |gamma| = k
    for (int k = 0; k <= 12; ++k)
        for (const auto& g : multiindices_of_degree(2, k)) {
            const double lhs = monomial_norm(g, 3.5 - 2 - 1);
            const double rhs = sphere_to_bergman_norm_factor(2, k, 3.5) * sphere_monomial_norm(g);
            CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
        }
}

TEST_CASE("pointwise sphere bound for homogeneous polynomials") {
    std::mt19937_64 rng(9);
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (int k = 1; k <= 10; k += 3) {
        HoloFunction p(2);
        double norm2 = 0.0;
        for (const auto& g : multiindices_of_degree(2, k)) {
            const Complex c(gauss(rng), gauss(rng));
            p.add_monomial(g, c);
            norm2 += std::norm(c) * sphere_monomial_norm(g);
        }
        for (int t = 0; t < 25; ++t) {
            CVector z(2);
            z[0] = Complex(gauss(rng), gauss(rng));
            z[1] = Complex(gauss(rng), gauss(rng));
            z /= std::sqrt(abs2(z)); // on the sphere
            CHECK(std::abs(p.eval(z)) <=
                  std::pow(1.0 + k, 1.0) * std::sqrt(norm2) * (1.0 + 1e-12));
        }
    }
}

TEST_CASE("homogeneous parts of monomials and atoms") {
    const HoloFunction f = HoloFunction::monomial(2, {1, 2}, Complex(3.0, -1.0));
    const auto parts = homogeneous_parts(f, 6);
    for (int k = 0; k <= 6; ++k) {
        if (k == 3) {
            CHECK(parts[3].monomials().size() == 1);
            CHECK(parts[3].monomials()[0].coef == Complex(3.0, -1.0));
        } else {
            CHECK(parts[static_cast<std::size_t>(k)].is_zero());
        }
    }

    std::mt19937_64 rng(11);
    const BallPoint w = random_ball_point(rng, 2, 0.8);
    const double s = 3.2;
    const HoloFunction atom = HoloFunction::atom(w, s);
    const auto aparts = homogeneous_parts(atom, 60);

    // part_1(z) = s <z,w>
    const BallPoint z = random_ball_point(rng, 2, 0.6);
    CHECK(std::abs(aparts[1].eval(z) - s * pairing(z, w)) <= 1e-12);

    // finite-difference oracle along the ray t -> atom(t z):
    // part_k(z) is the k-th Taylor coefficient at t = 0.
    const double h = 1e-5;
    const Complex fd = (atom.eval((h * z.coords()).eval()) -
                        atom.eval((-h * z.coords()).eval())) /
                       (2.0 * h);
    CHECK(std::abs(aparts[1].eval(z) - fd) <= 1e-8);

    // partial sums converge pointwise: |z||w| <= 0.5, K = 60, tol 1e-8
    const BallPoint zs =
        random_ball_point(rng, 2, std::min(0.9, 0.5 / std::sqrt(w.norm2())));
    Complex sum(0.0);
    for (const auto& part : aparts) sum += part.eval(zs);
    CHECK(std::abs(sum - atom.eval(zs)) <= 1e-8);
}

TEST_CASE("smooth-vector decay profile") {
    // polynomials pass for any N
    std::mt19937_64 rng(13);
    const HoloFunction poly = random_polynomial(rng, 2, 5);
    auto parts = homogeneous_parts(poly, 40);
    CHECK(smooth_decay_check(parts, 4.0, 8.0).satisfied);

    // the zero function passes with C = 0
    const HoloFunction zero(2);
    auto zparts = homogeneous_parts(zero, 10);
    const auto zchk = smooth_decay_check(zparts, 4.0, 3.0);
    CHECK(zchk.satisfied);
    CHECK(zchk.constant == 0.0);

    // kernel atom at |w| = 0.9: the (1+k)^5-weighted profile keeps growing
    // past the fitting window at k_max = 80
    CVector wv(1);
    wv[0] = Complex(0.9);
    const double sigma = 3.0;
    const HoloFunction atom = HoloFunction::atom(BallPoint(wv), sigma);
    auto aparts = homogeneous_parts(atom, 80);
    CHECK_FALSE(smooth_decay_check(aparts, sigma, 5.0).satisfied);
}

TEST_CASE("weighted L^p norms") {
    const QuadratureRule q = rule_for_degree(1, 0.0, 6);
    CHECK(lp_alpha_norm(HoloFunction::constant(1, Complex(1.0)), 2.0, 0.0, q) ==
          doctest::Approx(1.0).epsilon(1e-12));
    CHECK(lp_alpha_norm(HoloFunction::monomial(1, {1}, Complex(1.0)), 2.0, 0.0, q) ==
          doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));
}

TEST_CASE("norm transfer to the group side") {
    std::mt19937_64 rng(17);
    const HoloFunction f = random_polynomial(rng, 1, 4);
    // Transfer rule sits at a smaller alpha with an integer gap, so the
    // group-side integrand stays polynomial.
    const QuadratureRule direct = rule_for_degree(1, 0.5, 8);
    const QuadratureRule transfer = rule_for_degree(1, -0.5, 10);
    CHECK(group_norm_equiv_residual(f, 2.0, 0.5, direct, transfer) <= 1e-8);
}

TEST_CASE("exact inner products") {
    const double sigma = 4.0; // n = 2, alpha = 1
    const HoloFunction phi_a =
        HoloFunction::monomial(2, {1, 0}, Complex(phi_gamma_scale({1, 0}, 1.0)));
    const HoloFunction phi_b =
        HoloFunction::monomial(2, {0, 1}, Complex(phi_gamma_scale({0, 1}, 1.0)));
    CHECK(std::abs(inner_product_exact(phi_a, phi_b, sigma)) <= 1e-15);
    CHECK(inner_product_exact(phi_a, phi_a, sigma).real() ==
          doctest::Approx(1.0).epsilon(1e-13));

    std::mt19937_64 rng(19);
    const BallPoint w1 = random_ball_point(rng, 2, 0.6);
    const BallPoint w2 = random_ball_point(rng, 2, 0.6);
    const HoloFunction one = HoloFunction::constant(2, Complex(1.0));
    CHECK(std::abs(inner_product_exact(one, HoloFunction::atom(w1, sigma), sigma) -
                   Complex(1.0)) <= 1e-14);

    // atom x atom against the quadrature oracle
    const Complex exact = inner_product_exact(HoloFunction::atom(w1, sigma),
                                              HoloFunction::atom(w2, sigma), sigma);
    CHECK(std::abs(exact - kernel_eval(w2, w1, sigma - 3.0)) <= 1e-13);
    const QuadratureRule q = rule_for_degree(2, sigma - 3.0, 20);
    const Complex viaquad = integrate(q, [&](const CVector& z) {
        const BallPoint bz = BallPoint::clamped(z);
        return kernel_eval(bz, w1, sigma - 3.0) * std::conj(kernel_eval(bz, w2, sigma - 3.0));
    });
    CHECK(std::abs(exact - viaquad) <= 1e-8);

    CHECK_THROWS_AS(inner_product_exact(HoloFunction::atom(w1, sigma + 0.5), one, sigma),
                    UnsupportedAtomExponent);
}

TEST_CASE("reproducing identity under quadrature") {
    const QuadratureRule q1 = rule_for_degree(1, 1.0, 13);
    CHECK(reproduce_residual(HoloFunction::constant(1, Complex(1.0)), pt1(0.3), 3.0, q1) <=
          1e-10);
    CHECK(reproduce_residual(HoloFunction::monomial(1, {2}, Complex(1.0)), pt1(0.4), 3.0, q1) <=
          1e-8);
    const QuadratureRule q2 = rule_for_degree(2, 1.0, 10);
    CHECK(reproduce_residual(HoloFunction::monomial(2, {1, 1}, Complex(1.0)),
                             pt2(Complex(0.3, 0.1), Complex(-0.2, 0.25)), 4.0, q2) <= 1e-8);
}

TEST_SUITE_END();
