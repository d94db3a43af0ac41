#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>

#include "darboux/bessel.hpp"

using namespace darboux;

namespace {

RatFun xm(const std::string& var, const Scalar& c, unsigned k) {
    return RatFun(UniPoly::constant(var, c), UniPoly::monomial(var, Scalar(1), k));
}

}  // namespace

TEST_CASE("bessel operator construction") {
    // N=1, beta=(0): L = d
    BesselParam b1(1, {Rational(0)});
    CHECK(bessel_op(b1) == DiffOp::d("x"));

    // beta = (1-nu, nu): d^2 + nu(1-nu) x^-2
    Rational nu(1, 3);
    BesselParam b2(2, {Rational(1) - nu, nu});
    DiffOp expected = DiffOp::d("x").pow(2) +
                      DiffOp::mul_by(xm("x", Scalar(nu * (Rational(1) - nu)), 2));
    CHECK(bessel_op(b2) == expected);

    // beta = (-1, 2): d^2 - 2 x^-2
    BesselParam b3(2, {Rational(-1), Rational(2)});
    CHECK(bessel_op(b3) ==
          DiffOp::d("x").pow(2) + DiffOp::mul_by(xm("x", Scalar(-2), 2)));

    // sum constraint violated
    CHECK_THROWS_AS(BesselParam(2, {Rational(0), Rational(2)}), DomainError);
}

TEST_CASE("adjoint law L* = (-1)^N L_{a(beta)}") {
    std::mt19937 rng(42);
    std::uniform_int_distribution<int> num(-6, 6), den(1, 4);
    for (unsigned n = 1; n <= 3; ++n) {
        for (int iter = 0; iter < 6; ++iter) {
            std::vector<Rational> beta(n);
            Rational sum(0);
            for (unsigned i = 0; i + 1 < n; ++i) {
                beta[i] = Rational(num(rng), den(rng));
                beta[i].canonicalize();
                sum += beta[i];
            }
            beta[n - 1] =
                Rational(static_cast<long>(n) * (static_cast<long>(n) - 1), 2) -
                sum;
            BesselParam p(n, beta);
            std::vector<Rational> ab;
            for (const auto& b : beta)
                ab.push_back(Rational(static_cast<long>(n) - 1) - b);
            BesselParam pa(n, ab);
            DiffOp lhs = op_adjoint(bessel_op(p));
            DiffOp rhs = bessel_op(pa) * Scalar(n % 2 == 0 ? 1 : -1);
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("wave coefficients") {
    // beta = (0): psi = e^z, all a_k = 0
    BesselParam b1(1, {Rational(0)});
    for (const auto& a : bessel_wave_coeffs(b1, 5)) CHECK(a.is_zero());

    // oracle: substitute the truncated series into prod(z + D - beta_i) phi -
    // z^N phi and check coefficients down to the margin
    BesselParam b2(2, {Rational(0), Rational(1)});
    unsigned k = 6;
    auto a = bessel_wave_coeffs(b2, k);
    {
        std::map<long, Scalar> phi;
        phi[0] = Scalar(1);
        for (unsigned j = 1; j <= k; ++j) phi[-static_cast<long>(j)] = a[j - 1];
        auto apply = [&](std::map<long, Scalar> f, const Scalar& b) {
            std::map<long, Scalar> r;
            for (auto& [e, c] : f) {
                r[e + 1] += c;
                r[e] += c * (Scalar(e) - b);
            }
            return r;
        };
        auto lhs = apply(apply(phi, Scalar(1)), Scalar(0));
        for (auto& [e, c] : phi) lhs[e + 2] -= c;
        for (auto& [e, c] : lhs)
            if (e >= 2 - static_cast<long>(k)) CHECK(c.is_zero());
    }

    // symmetry under permutations of beta
    BesselParam b3(3, {Rational(-1), Rational(1), Rational(3)});
    BesselParam b3s(3, {Rational(3), Rational(-1), Rational(1)});
    CHECK(bessel_wave_coeffs(b3, 5) == bessel_wave_coeffs(b3s, 5));
}

TEST_CASE("beta powers") {
    BesselParam b(3, {Rational(1), Rational(1), Rational(1)});
    auto g = beta_power(b, 2);
    std::vector<Rational> sorted = g;
    std::sort(sorted.begin(), sorted.end());
    std::vector<Rational> expect = {1, 1, 1, 4, 4, 4};
    CHECK(sorted == expect);

    BesselParam b2(2, {Rational(0), Rational(1)});
    CHECK(beta_power(b2, 1) == b2.beta());

    // (L_beta)^d = operator built from the beta^d factors
    for (unsigned d = 2; d <= 3; ++d) {
        auto gd = beta_power(b2, d);
        std::vector<Scalar> roots;
        for (auto& v : gd) roots.emplace_back(v);
        CHECK(bessel_op(b2).pow(d) == bessel_like_op("x", roots));
    }
}

TEST_CASE("action on power-log functions") {
    // L_{(-1,2)} x^2 = 0
    BesselParam b(2, {Rational(-1), Rational(2)});
    CHECK(bessel_action_zero(b, Rational(2), 0).empty());
    // x^{beta_1} always killed
    CHECK(bessel_action_zero(b, Rational(-1), 0).empty());

    // repeated beta = (1,1,1): x ln x and x ln^2 x killed
    BesselParam b3(3, {Rational(1), Rational(1), Rational(1)});
    CHECK(bessel_action_zero(b3, Rational(1), 1).empty());
    CHECK(bessel_action_zero(b3, Rational(1), 2).empty());
    for (const auto& bi : b3.beta())
        CHECK(bessel_action_zero(b3, bi, 0).empty());

    // a generic power maps to P_beta(a) x^{a-N}
    auto terms = bessel_action_zero(b, Rational(3), 0);
    REQUIRE(terms.size() == 1);
    CHECK(terms[0].exponent == Rational(1));
    CHECK(terms[0].coeff == Scalar(4));  // (3+1)(3-2)
}

TEST_CASE("action on lambda jets") {
    BesselParam b(2, {Rational(0), Rational(1)});
    Scalar lam(Rational(3, 2));
    Scalar l2 = lam * lam;

    CHECK(bessel_action_lambda(b, lam, 0) == std::vector<Scalar>{l2});
    CHECK(bessel_action_lambda(b, lam, 1) ==
          std::vector<Scalar>{l2 * Scalar(2), l2});
    CHECK(bessel_action_lambda(b, lam, 2) ==
          std::vector<Scalar>{l2 * Scalar(4), l2 * Scalar(4), l2});
}

TEST_CASE("genericity heuristic") {
    CHECK(genericity_check(BesselParam(1, {Rational(0)})).generic);
    CHECK(genericity_check(BesselParam(2, {Rational(0), Rational(1)})).generic);
    CHECK(genericity_check(BesselParam(2, {Rational(-1), Rational(2)})).generic);
    // entries congruent mod N but distinct: flagged unknown
    auto rep =
        genericity_check(BesselParam(2, {Rational(-1, 2), Rational(3, 2)}));
    CHECK(rep.unknown);
    CHECK_FALSE(rep.generic);
}
