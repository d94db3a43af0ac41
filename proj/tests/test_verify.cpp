#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "darboux/verify.hpp"

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

}  // namespace

TEST_CASE("identity planes satisfy both identities") {
    for (auto& beta :
         {std::vector<Rational>{Rational(0)},
          std::vector<Rational>{Rational(-1), Rational(2)}}) {
        BesselParam b(static_cast<unsigned>(beta.size()), beta);
        BispectralPair pair = complete_pair(build_plane(ConditionSet(b, {})));
        auto rep = check_bispectral_symbolic(pair);
        CHECK(rep.x_identity);
        CHECK(rep.z_identity);
    }
}

TEST_CASE("example 9.5 family: theta = x^N (t + x^{N a})^2") {
    // f0 = t x^{beta_1} + x^{beta_2}, beta_2 - beta_1 = N
    Rational t(3, 2);
    BesselParam b(2, {Rational(-1, 2), Rational(3, 2)});
    Condition c;
    c.support = Condition::Support::Zero;
    c.terms = {{1, 0, 0, Scalar(t)}, {2, 0, 0, Scalar(1)}};
    BispectralPair pair = complete_pair(build_plane(ConditionSet(b, {c})));

    UniPoly x2 = UniPoly::monomial("x", Scalar(1), 2);
    UniPoly expect =
        x2 * (UniPoly::constant("x", Scalar(t)) + x2) *
        (UniPoly::constant("x", Scalar(t)) + x2);
    CHECK(pair.theta == expect);

    auto rep = check_bispectral_symbolic(pair);
    CHECK(rep.x_identity);
    CHECK(rep.z_identity);
    CHECK(check_backward_factorization(pair));
}

TEST_CASE("one-point pairs pass and corrupted pairs fail") {
    // Airy 9.9
    AiryParam ap(2, Rational(1));
    BispectralPair pair = complete_pair(build_plane(
        ConditionSet(ap, {point(Rational(3), {Scalar(1), Scalar(Rational(1, 5))})})));
    auto rep = check_bispectral_symbolic(pair);
    CHECK(rep.x_identity);
    CHECK(rep.z_identity);

    // negative control: +1 on one coefficient of L must be rejected
    BispectralPair bad = pair;
    auto coeffs = bad.l.coeffs();
    coeffs[1] = coeffs[1] + RatFun::constant("x", Scalar(1));
    bad.l = DiffOp("x", coeffs);
    CHECK_THROWS_AS(check_bispectral_symbolic(bad), IdentityFailed);

    // and a perturbed Lambda as well
    BispectralPair bad2 = pair;
    auto zc = bad2.lambda_op.coeffs();
    zc[0] = zc[0] + RatFun::constant("z", Scalar(1));
    bad2.lambda_op = DiffOp("z", zc);
    CHECK_THROWS_AS(check_bispectral_symbolic(bad2), IdentityFailed);

    // Bessel 9.8 instance
    BesselParam b(2, {Rational(1, 2), Rational(1, 2)});
    BispectralPair bp = complete_pair(build_plane(ConditionSet(
        b, {point(Rational(3, 4), {Scalar(1), Scalar(Rational(3))})})));
    auto rep2 = check_bispectral_symbolic(bp);
    CHECK(rep2.x_identity);
    CHECK(rep2.z_identity);
}

TEST_CASE("wave series shape and decay") {
    // identity plane of beta = (0): all a_k vanish
    BesselParam b0(1, {Rational(0)});
    DarbouxPlane id0 = build_plane(ConditionSet(b0, {}));
    WaveSeries ws = wave_series(id0, 6);
    for (const auto& a : ws.coeffs) CHECK(a.is_zero());
    CHECK_NOTHROW(check_wave_decay(ws, 6));

    // a 9.5-type plane: rational coefficients vanishing at infinity
    BesselParam b(2, {Rational(-1, 2), Rational(3, 2)});
    Condition c;
    c.support = Condition::Support::Zero;
    c.terms = {{1, 0, 0, Scalar(2)}, {2, 0, 0, Scalar(1)}};
    DarbouxPlane pl = build_plane(ConditionSet(b, {c}));
    WaveSeries ws2 = wave_series(pl, 8);
    CHECK_NOTHROW(check_wave_decay(ws2, 8));

    // negative control: dropping the g-factor breaks the wave shape
    DarbouxPlane broken = pl;
    broken.g = UniPoly::constant("z", Scalar(1));
    CHECK_THROWS_AS(wave_series(broken, 8), IdentityFailed);

    // a one-point plane passes too
    BesselParam bp(2, {Rational(1, 2), Rational(1, 2)});
    DarbouxPlane ppl = build_plane(ConditionSet(
        bp, {point(Rational(3, 4), {Scalar(1), Scalar(Rational(3))})}));
    CHECK_NOTHROW(check_wave_decay(wave_series(ppl, 8), 8));

    // margin bookkeeping: too small a truncation reports MarginExhausted
    CHECK_THROWS_AS(wave_series(pl, 0), MarginExhausted);
}

TEST_CASE("rank is the gcd of orders") {
    CHECK(rank_of({4, 6, 8, 10}) == 2);
    CHECK(rank_of({3}) == 3);
    CHECK(rank_of({4, 6, 8}) == 2);
    CHECK(rank_of({6, 9, 12}) == 3);
    CHECK_THROWS_AS(rank_of({}), DomainError);
}
