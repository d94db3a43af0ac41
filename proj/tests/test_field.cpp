#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "darboux/cyclo.hpp"
#include "darboux/poly.hpp"

using namespace darboux;

namespace {

std::mt19937 rng(20260809);

Rational rnd_rat() {
    std::uniform_int_distribution<int> num(-9, 9), den(1, 7);
    return Rational(num(rng), den(rng));
}

Scalar rnd_scalar(const FieldPtr& f) {
    std::vector<Rational> c(f->degree());
    for (auto& x : c) x = rnd_rat();
    return Scalar(f, std::move(c));
}

UniPoly rnd_poly(const std::string& var, int maxdeg) {
    std::uniform_int_distribution<int> d(0, maxdeg);
    int deg = d(rng);
    std::vector<Scalar> c;
    for (int i = 0; i <= deg; ++i) c.emplace_back(rnd_rat());
    return UniPoly(var, std::move(c));
}

}  // namespace

TEST_CASE("cyclotomic field basics") {
    // N=1: plain Q, zeta = 1
    auto f1 = CycloField::make(1);
    CHECK(Scalar::zeta(f1) == Scalar(1));

    // N=2: zeta = -1, zeta^2 = 1
    auto f2 = CycloField::make(2);
    CHECK(Scalar::zeta(f2) == Scalar(-1));
    CHECK(Scalar::zeta(f2) * Scalar::zeta(f2) == Scalar(1));

    // N=3: zeta^2 + zeta + 1 = 0 and zeta^3 = 1 after reduction
    auto f3 = CycloField::make(3);
    Scalar z = Scalar::zeta(f3);
    CHECK((z * z + z + Scalar(1)).is_zero());
    CHECK(z * z * z == Scalar(1));
    CHECK_FALSE(z.is_rational());
}

TEST_CASE("roots of unity sum to zero") {
    for (unsigned n = 2; n <= 8; ++n) {
        auto f = CycloField::make(n);
        Scalar sum(0);
        for (unsigned j = 0; j < n; ++j) sum += Scalar::zeta_pow(f, j);
        CHECK(sum.is_zero());
        CHECK(Scalar::zeta_pow(f, n) == Scalar(1));
    }
}

TEST_CASE("field axioms on random scalars") {
    for (unsigned n : {2u, 3u, 4u, 5u, 6u, 8u}) {
        auto f = CycloField::make(n);
        for (int iter = 0; iter < 170; ++iter) {
            Scalar a = rnd_scalar(f), b = rnd_scalar(f), c = rnd_scalar(f);
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            if (!a.is_zero()) {
                CHECK((a * b) * a.inverse() == b);
                CHECK(a * a.inverse() == Scalar(1));
            }
        }
    }
}

TEST_CASE("poly gcd and normalization") {
    UniPoly x = UniPoly::monomial("x", Scalar(1), 1);
    UniPoly one = UniPoly::constant("x", Scalar(1));

    // gcd(x^2-1, x-1) = x-1
    UniPoly a = x * x - one;
    UniPoly b = x - one;
    CHECK(poly_gcd(a, b) == b);
    CHECK(poly_gcd(x, one) == one);

    // over Q(zeta_3): gcd((x-z)(x-1), x-z) = x-z
    auto f3 = CycloField::make(3);
    Scalar z = Scalar::zeta(f3);
    UniPoly xz = x - UniPoly::constant("x", z);
    UniPoly g = poly_gcd(xz * (x - one), xz);
    CHECK(g == xz);
    CHECK((xz * (x - one)).divexact(g) == x - one);
    CHECK(xz.divexact(g) == one);
}

TEST_CASE("ratfun canonical form") {
    UniPoly x = UniPoly::monomial("x", Scalar(1), 1);
    UniPoly one = UniPoly::constant("x", Scalar(1));

    // (x^2-1)/(x-1) = x+1
    RatFun r(x * x - one, x - one);
    CHECK(r.is_polynomial());
    CHECK(r.to_polynomial() == x + one);

    // (2x)/4 = x/2
    RatFun r2(x * Scalar(2), one * Scalar(4));
    CHECK(r2.is_polynomial());
    CHECK(r2.to_polynomial() == x * Scalar(Rational(1, 2)));

    // (3x^4)/(-3) = -x^4, cross-checked by evaluation at 5 points
    UniPoly x4 = UniPoly::monomial("x", Scalar(3), 4);
    RatFun r3(x4, one * Scalar(-3));
    for (long p = 1; p <= 5; ++p) {
        Scalar pt = Scalar(Rational(p, 3));
        CHECK(*r3.eval(pt) == x4.eval(pt) / Scalar(-3));
    }
    CHECK(r3.to_polynomial() == UniPoly::monomial("x", Scalar(-1), 4));

    CHECK_THROWS_AS(RatFun(x, UniPoly("x")), DomainError);
}

TEST_CASE("ratfun arithmetic agrees with evaluation") {
    for (int iter = 0; iter < 120; ++iter) {
        UniPoly n1 = rnd_poly("x", 3), d1 = rnd_poly("x", 2);
        UniPoly n2 = rnd_poly("x", 3), d2 = rnd_poly("x", 2);
        if (d1.is_zero() || d2.is_zero()) continue;
        RatFun f(n1, d1), g(n2, d2);
        Scalar x0 = Scalar(rnd_rat());
        auto fx = f.eval(x0), gx = g.eval(x0);
        if (!fx || !gx) continue;
        auto prod = (f * g).eval(x0);
        auto sum = (f + g).eval(x0);
        REQUIRE(prod);
        REQUIRE(sum);
        CHECK(*prod == *fx * *gx);
        CHECK(*sum == *fx + *gx);
    }
}

TEST_CASE("degree additivity under multiplication") {
    for (int iter = 0; iter < 60; ++iter) {
        UniPoly a = rnd_poly("x", 4), b = rnd_poly("x", 4);
        if (a.is_zero() || b.is_zero()) continue;
        CHECK((a * b).deg() == a.deg() + b.deg());
    }
}
