#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "darboux/airy.hpp"

using namespace darboux;

TEST_CASE("airy operator construction") {
    // N=2, alpha0=1: d^2 - x
    AiryParam a2(2, Rational(1));
    CHECK(airy_op(a2) ==
          DiffOp::d("x").pow(2) -
              DiffOp::mul_by(UniPoly::monomial("x", Scalar(1), 1)));

    // N=3: d^3 + a2 d - a0 x
    AiryParam a3(3, Rational(2), {Rational(-5, 7)});
    CHECK(airy_op(a3) ==
          DiffOp::d("x").pow(3) + DiffOp::d("x") * Scalar(Rational(-5, 7)) -
              DiffOp::mul_by(UniPoly::monomial("x", Scalar(2), 1)));

    CHECK_THROWS_AS(AiryParam(2, Rational(0)), DomainError);
}

TEST_CASE("reduction rule") {
    // N=2, alpha0=1: d^2 Psi -> y Psi
    AiryParam a2(2, Rational(1));
    auto r = airy_reduce_rule(a2);
    CHECK(r.y_coeff == Scalar(1));
    CHECK(r.low_coeff == std::vector<Scalar>{Scalar(0), Scalar(0)});

    // N=3: d^3 Psi -> a0 y Psi - a2 d Psi
    AiryParam a3(3, Rational(2), {Rational(5)});
    auto r3 = airy_reduce_rule(a3);
    CHECK(r3.y_coeff == Scalar(2));
    CHECK(r3.low_coeff == std::vector<Scalar>{Scalar(0), Scalar(-5), Scalar(0)});
}

TEST_CASE("chained reduction d^4 Psi = y^2 Psi + 2 d Psi for classical Airy") {
    // jets of Psi(y): track coefficients of (Psi, dPsi) as polynomials in y
    // over Q; reduction d^2 Psi = y Psi, and d/dy acts on coefficients too.
    AiryParam a2(2, Rational(1));
    auto rule = airy_reduce_rule(a2);
    using Coeffs = std::vector<UniPoly>;  // length 2 over y
    Coeffs cur = {UniPoly::constant("y", Scalar(1)), UniPoly("y")};
    auto deriv = [&](const Coeffs& c) {
        Coeffs r = {c[0].derivative(), c[1].derivative()};
        // c0 * dPsi
        r[1] = r[1] + c[0];
        // c1 * d^2 Psi = c1 * (y Psi)
        r[0] = r[0] + c[1] * UniPoly::monomial("y", rule.y_coeff, 1);
        return r;
    };
    Coeffs d4 = cur;
    for (int i = 0; i < 4; ++i) d4 = deriv(d4);
    CHECK(d4[0] == UniPoly::monomial("y", Scalar(1), 2));  // y^2 Psi
    CHECK(d4[1] == UniPoly::constant("y", Scalar(2)));     // + 2 dPsi
}

TEST_CASE("involution parameter maps") {
    AiryParam a2(2, Rational(1));
    auto [s2, adj2] = airy_involutions(a2);
    CHECK(s2.alpha0() == Rational(-1));
    CHECK(adj2.alpha0() == Rational(1));

    AiryParam a3(3, Rational(4, 3), {Rational(2)});
    auto [s3, adj3] = airy_involutions(a3);
    CHECK(s3.alpha0() == Rational(4, 3));
    CHECK(adj3.alpha0() == Rational(-4, 3));
    CHECK(s3.tail() == a3.tail());
    CHECK(adj3.tail() == a3.tail());

    // involutivity s(s(alpha)) = alpha for N <= 5
    for (unsigned n = 2; n <= 5; ++n) {
        std::vector<Rational> tail;
        for (unsigned i = 2; i < n; ++i)
            tail.push_back(Rational(static_cast<long>(i), 3));
        AiryParam a(n, Rational(7, 5), tail);
        auto [s, adj] = airy_involutions(a);
        auto [ss, sadj] = airy_involutions(s);
        (void)sadj;
        CHECK(ss.alpha0() == a.alpha0());
        CHECK(ss.tail() == a.tail());
        auto [as, aa] = airy_involutions(adj);
        (void)as;
        CHECK(aa.alpha0() == a.alpha0());
        CHECK(aa.tail() == a.tail());
    }
}

TEST_CASE("star_1 conjugation") {
    CHECK(airy_star1(DiffOp::identity("x"), 2) == DiffOp::identity("x"));

    // Q = d, N = 2: -(d - x^{-1}/2)
    RatFun half_xinv(UniPoly::constant("x", Scalar(Rational(1, 2))),
                     UniPoly::monomial("x", Scalar(1), 1));
    CHECK(airy_star1(DiffOp::d("x"), 2) ==
          -DiffOp::d("x") + DiffOp::mul_by(half_xinv));

    // involutive on random order-2 operators
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> pick(-4, 4);
    for (unsigned n = 2; n <= 4; ++n)
        for (int iter = 0; iter < 8; ++iter) {
            std::vector<RatFun> c;
            for (int k = 0; k <= 2; ++k) {
                UniPoly num("x", {Scalar(pick(rng)), Scalar(pick(rng))});
                if (num.is_zero() && k == 2)
                    num = UniPoly::constant("x", Scalar(1));
                if (num.is_zero())
                    c.push_back(RatFun("x"));
                else
                    c.push_back(RatFun(num, UniPoly::constant("x", Scalar(1))));
            }
            DiffOp q("x", c);
            CHECK(airy_star1(airy_star1(q, n), n) == q);
        }
}
