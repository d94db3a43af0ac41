#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "darboux/kernel.hpp"

using namespace darboux;

namespace {

Condition zero_term(unsigned i, unsigned k, unsigned j, const Scalar& b) {
    Condition c;
    c.support = Condition::Support::Zero;
    c.terms = {{i, k, j, b}};
    return c;
}

Condition point(const Rational& lambda, std::vector<Scalar> coeffs) {
    Condition c;
    c.support = Condition::Support::Point;
    c.lambda = lambda;
    c.coeffs = std::move(coeffs);
    return c;
}

RatFun rat(const UniPoly& num, const UniPoly& den) { return RatFun(num, den); }

}  // namespace

TEST_CASE("single power kernel: P = d - 1/x") {
    BesselParam b(1, {Rational(0)});
    // x = x^{beta_1 + 1*N} with N = 1
    ConditionSet cs(b, {zero_term(1, 1, 0, Scalar(1))});
    KernelContext ctx(cs);
    auto basis = materialize_kernel(ctx);
    REQUIRE(basis.size() == 1);
    auto [p, cert] = wronskian_op(ctx, basis);
    DiffOp expected =
        DiffOp::d("x") - DiffOp::mul_by(rat(UniPoly::constant("x", Scalar(1)),
                                            UniPoly::monomial("x", Scalar(1), 1)));
    CHECK(p == expected);
    // annihilation
    CHECK(ctx.apply(p, basis[0]).empty());
}

TEST_CASE("kernel {x, x^4}: Wronskian 3x^4 and monic order-2 operator") {
    BesselParam b(3, {Rational(1), Rational(1), Rational(1)});
    ConditionSet cs(b, {zero_term(1, 0, 0, Scalar(1)),
                        zero_term(1, 1, 0, Scalar(1))});
    KernelContext ctx(cs);
    auto basis = materialize_kernel(ctx);
    REQUIRE(basis.size() == 2);
    auto [p, cert] = wronskian_op(ctx, basis);
    // hand expansion: P = d^2 - (4/x) d + 4/x^2
    UniPoly one = UniPoly::constant("x", Scalar(1));
    DiffOp expected =
        DiffOp::d("x").pow(2) -
        DiffOp::mul_by(rat(one * Scalar(4), UniPoly::monomial("x", Scalar(1), 1))) *
            DiffOp::d("x").pow(1) +
        DiffOp::mul_by(rat(one * Scalar(4), UniPoly::monomial("x", Scalar(1), 2)));
    CHECK(p == expected);
    for (const auto& f : basis) CHECK(ctx.apply(p, f).empty());
}

TEST_CASE("log-kernel materialization matches the displayed family") {
    // beta = (1,1,1); one condition with terms a0 x, a1 x ln x, a2 x^4 ln^2 x
    Scalar a0(Rational(2)), a1(Rational(-3)), a2(Rational(5));
    BesselParam b(3, {Rational(1), Rational(1), Rational(1)});
    Condition c;
    c.support = Condition::Support::Zero;
    c.terms = {{1, 0, 0, a0}, {1, 0, 1, a1}, {1, 1, 2, a2}};
    ConditionSet cs(b, {c});
    CHECK(cs.n_zero() == 3);
    KernelContext ctx(cs);
    auto basis = materialize_kernel(ctx);
    REQUIRE(basis.size() == 3);

    SymKey x1{SymKey::Kind::PowerLog, Rational(0), 0, 0, 0, 0};
    SymKey x1l{SymKey::Kind::PowerLog, Rational(0), 1, 0, 0, 0};
    SymKey x1ll{SymKey::Kind::PowerLog, Rational(0), 2, 0, 0, 0};

    // l = 0: a0 x + a1 x ln x + a2 x^4 ln^2 x
    {
        const KernelFn& f = basis[0];
        REQUIRE(f.size() == 3);
        CHECK(f.at(x1) == RatFun::of(UniPoly::monomial("x", a0, 1)));
        CHECK(f.at(x1l) == RatFun::of(UniPoly::monomial("x", a1, 1)));
        CHECK(f.at(x1ll) == RatFun::of(UniPoly::monomial("x", a2, 4)));
    }
    // l = 1: a1 x + 2 a2 x^4 ln x
    {
        const KernelFn& f = basis[1];
        REQUIRE(f.size() == 2);
        CHECK(f.at(x1) == RatFun::of(UniPoly::monomial("x", a1, 1)));
        CHECK(f.at(x1l) ==
              RatFun::of(UniPoly::monomial("x", a2 * Scalar(2), 4)));
    }
    // l = 2: 2 a2 x^4
    {
        const KernelFn& f = basis[2];
        REQUIRE(f.size() == 1);
        CHECK(f.at(x1) == RatFun::of(UniPoly::monomial("x", a2 * Scalar(2), 4)));
    }

    auto [p, cert] = wronskian_op(ctx, basis);
    CHECK(p.ord() == 3);
    CHECK(p.is_monic());
    for (const auto& f : basis) CHECK(ctx.apply(p, f).empty());
    // every generated P admits the Z_N form
    CHECK_NOTHROW(to_dform(p, 3));
}

TEST_CASE("one-point Bessel plane reproduces the nu-family operator") {
    // beta = (1-nu, nu), condition Psi + a D_x Psi at the sheets of lambda;
    // d/dz-jet coefficients (1, a lambda).
    Rational nu(1, 3), a(2), lambda(1);
    BesselParam b(2, {Rational(1) - nu, nu});
    ConditionSet cs(b, {point(lambda, {Scalar(1), Scalar(a * lambda)})});
    KernelContext ctx(cs);
    auto basis = materialize_kernel(ctx);
    REQUIRE(basis.size() == 2);
    auto [p, cert] = wronskian_op(ctx, basis);
    CHECK(p.ord() == 2);
    CHECK(p.is_monic());
    for (const auto& f : basis) CHECK(ctx.apply(p, f).empty());

    // displayed closed form: mu^2 = (a+1+a^2 nu(1-nu)) / (a^2 lambda^2),
    // x^2 p2(x^2) P = p2(x^2) D^2 + p1(x^2) D + p0(x^2) with
    // p2 = x^2 - mu^2, p1 = mu^2 - 3x^2,
    // p0 = -l^2 x^4 + (2 l^2 mu^2 + (a+1)(2a-1)/a^2) x^2
    //      + ((a+1)/a^2 - l^2 mu^2) mu^2.
    Rational mu2 = (a + 1 + a * a * nu * (1 - nu)) / (a * a * lambda * lambda);
    Rational l2 = lambda * lambda;
    UniPoly x2 = UniPoly::monomial("x", Scalar(1), 2);
    UniPoly p2 = x2 - UniPoly::constant("x", Scalar(mu2));
    UniPoly p1 = UniPoly::constant("x", Scalar(mu2)) - x2 * Scalar(3);
    UniPoly p0 =
        UniPoly::monomial("x", Scalar(-l2), 4) +
        x2 * Scalar(2 * l2 * mu2 + (a + 1) * (2 * a - 1) / (a * a)) +
        UniPoly::constant("x",
                          Scalar(((a + 1) / (a * a) - l2 * mu2) * mu2));
    DiffOp dd = DiffOp::euler("x");
    DiffOp num = DiffOp::mul_by(p2) * dd.pow(2) + DiffOp::mul_by(p1) * dd +
                 DiffOp::mul_by(p0);
    DiffOp expected = DiffOp::mul_by(RatFun(UniPoly::constant("x", Scalar(1)),
                                            x2 * p2)) *
                      num;
    CHECK(p == expected);
    CHECK_NOTHROW(to_dform(p, 2));
}

TEST_CASE("one-point Airy plane reproduces the displayed operator") {
    // N=2, alpha=(alpha0), kernel f_k = psi_k + a d psi_k: jets (1, a)
    Rational a0(2), a(3), lambda(5, 7);
    AiryParam ap(2, a0);
    ConditionSet cs(ap, {point(lambda, {Scalar(1), Scalar(a)})});
    KernelContext ctx(cs);
    auto basis = materialize_kernel(ctx);
    REQUIRE(basis.size() == 2);
    auto [p, cert] = wronskian_op(ctx, basis);
    CHECK(p.ord() == 2);

    // P = d^2 + a^2 a0 / (1 - a^2 (a0 x + l^2)) d
    //       + (a^2 (a0 x + l^2)^2 - (a0 x + l^2) - a a0)/(1 - a^2 (a0 x + l^2))
    Rational l2 = lambda * lambda;
    UniPoly u = UniPoly("x", {Scalar(l2), Scalar(a0)});  // a0 x + l^2
    UniPoly one = UniPoly::constant("x", Scalar(1));
    UniPoly den = one - u * Scalar(a * a);
    DiffOp expected =
        DiffOp::d("x").pow(2) +
        DiffOp::mul_by(RatFun(one * Scalar(a * a * a0), den)) * DiffOp::d("x") +
        DiffOp::mul_by(RatFun(u * u * Scalar(a * a) - u - one * Scalar(a * a0),
                              den));
    CHECK(p == expected);
    for (const auto& f : basis) CHECK(ctx.apply(p, f).empty());
}

TEST_CASE("g and minimal exponents") {
    BesselParam b(2, {Rational(0), Rational(1)});
    // two conditions at zero: g = z^2
    {
        ConditionSet cs(b, {zero_term(1, 0, 0, Scalar(1)),
                            zero_term(2, 0, 0, Scalar(1))});
        CHECK(g_from_conditions(cs) == UniPoly::monomial("z", Scalar(1), 2));
    }
    // one point at lambda = 1, N = 2: g = z^2 - 1
    {
        ConditionSet cs(b, {point(Rational(1), {Scalar(1), Scalar(1)})});
        CHECK(g_from_conditions(cs) ==
              UniPoly("z", {Scalar(-1), Scalar(0), Scalar(1)}));
        // jet depth 1: d_1 = 2, hhat = (t - 1)^2
        auto mh = min_h_exponents(cs);
        CHECK(mh.d0 == 0);
        REQUIRE(mh.dj.size() == 1);
        CHECK(mh.dj[0] == 2);
        CHECK(mh.hhat == UniPoly("t", {Scalar(1), Scalar(-2), Scalar(1)}));
    }
    // empty set: g = 1, identity transformation
    {
        ConditionSet cs(b, {});
        CHECK(g_from_conditions(cs) == UniPoly::constant("z", Scalar(1)));
        CHECK(min_h_exponents(cs).hhat == UniPoly::monomial("t", Scalar(1), 1));
    }
    // x^{beta_1} only: d0 = 1, hhat = t
    {
        ConditionSet cs(b, {zero_term(1, 0, 0, Scalar(1))});
        auto mh = min_h_exponents(cs);
        CHECK(mh.d0 == 1);
        CHECK(mh.hhat == UniPoly::monomial("t", Scalar(1), 1));
    }
    // deep k-indices: beta = (9/2, -7/2), terms at k = 2 and k = 3 -> d0 = 4
    {
        BesselParam bd(2, {Rational(9, 2), Rational(-7, 2)});
        Condition c1;
        c1.support = Condition::Support::Zero;
        c1.terms = {{1, 2, 0, Scalar(1)}, {2, 2, 0, Scalar(1)}};
        Condition c2 = zero_term(2, 3, 0, Scalar(1));
        ConditionSet cs(bd, {c1, c2});
        CHECK(min_h_exponents(cs).d0 == 4);
    }
}

TEST_CASE("Z_N invariance checks") {
    BesselParam b(2, {Rational(0), Rational(1)});
    ConditionSet cs(b, {point(Rational(1), {Scalar(1), Scalar(1)}),
                        zero_term(1, 0, 0, Scalar(1))});
    CHECK(zn_check(cs));
    // N = 1 trivially invariant
    BesselParam b1(1, {Rational(0)});
    ConditionSet cs1(b1, {zero_term(1, 2, 0, Scalar(1))});
    CHECK(zn_check(cs1));
    // a zero condition mixing incongruent classes fails
    Condition bad;
    bad.support = Condition::Support::Zero;
    bad.terms = {{1, 0, 0, Scalar(1)}, {2, 0, 0, Scalar(1)}};
    ConditionSet cs2(b, {bad});
    CHECK_FALSE(zn_check(cs2));

    // rotation closure of materialized point kernels, and its failure for a
    // hand-injected basis without sheet copies
    ConditionSet cs3(b, {point(Rational(1), {Scalar(1), Scalar(1)})});
    KernelContext ctx(cs3);
    auto basis = materialize_kernel(ctx);
    CHECK(rotation_closed(ctx, basis));
    std::vector<KernelFn> half = {basis[0]};
    CHECK_FALSE(rotation_closed(ctx, half));
}

TEST_CASE("dependent kernels are rejected") {
    BesselParam b(2, {Rational(0), Rational(1)});
    ConditionSet cs(b, {zero_term(1, 0, 0, Scalar(1)),
                        zero_term(1, 0, 0, Scalar(2))});
    KernelContext ctx(cs);
    auto basis = materialize_kernel(ctx);
    CHECK_THROWS_AS(wronskian_op(ctx, basis), DependentKernel);
}
