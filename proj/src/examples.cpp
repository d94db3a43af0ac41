#include "darboux/examples.hpp"

#include "darboux/darboux.hpp"

namespace darboux {

namespace {

Rational get(const ParamMap& params, const std::string& key,
             const Rational& fallback) {
    auto it = params.find(key);
    if (it == params.end()) return fallback;
    Rational r = it->second;
    r.canonicalize();
    return r;
}

Condition zero_condition(std::vector<ZeroTerm> terms) {
    Condition c;
    c.support = Condition::Support::Zero;
    c.terms = std::move(terms);
    return c;
}

Condition point_condition(const Rational& lambda, std::vector<Scalar> coeffs) {
    Condition c;
    c.support = Condition::Support::Point;
    c.lambda = lambda;
    c.coeffs = std::move(coeffs);
    return c;
}

}  // namespace

Scalar phi_mu(const BesselParam& p, unsigned k, unsigned j) {
    Scalar m(1);
    for (unsigned jj = 2; jj <= j; ++jj) {
        Scalar prod(1);
        for (const auto& bi : p.beta())
            prod *= Scalar(bi) - Scalar(p.beta()[k - 1]) -
                    Scalar(static_cast<long>((jj - 1) * p.n()));
        if (prod.is_zero())
            throw DegenerateGamma("colliding exponents in the Phi-basis");
        m = m * prod.inverse();
    }
    return m;
}

std::vector<std::string> example_ids() {
    return {"9.2", "9.3", "9.4", "9.5", "9.8", "9.9", "9.10", "log"};
}

std::string example_help(const std::string& id) {
    if (id == "9.2")
        return "Bessel N=2 block-Toeplitz pair of conditions (lowest order N); "
               "params beta1 (default 5/2), t0=2, t1=-1, s0=3, s1=5";
    if (id == "9.3")
        return "Bessel N=2, d=n=2, spectral orders 4,6,8,10; params beta1=0, "
               "a=2, b=3";
    if (id == "9.4")
        return "Bessel N=2, d0=4 with minimal u = t^3 + lambda t^2; params "
               "beta1=9/2, lambda=2, a=1, b=3";
    if (id == "9.5")
        return "rank-one style single condition t x^{beta1} + x^{beta2}; "
               "params beta1=-1/2, t=3/2";
    if (id == "9.8")
        return "Bessel N=2 one-point plane of the nu-family; params nu=1/3, "
               "a=2, lambda=1";
    if (id == "9.9")
        return "Airy N=2 one-point plane; params alpha0=1, a=1, lambda=0";
    if (id == "9.10")
        return "Airy N=3 one-point plane; params alpha0=1, alpha2=1, a=1, "
               "lambda=1";
    if (id == "log")
        return "Bessel N=3 logarithmic kernel over beta=(1,1,1); params a0=1, "
               "a1=1, a2=1";
    throw DomainError("unknown example id: " + id);
}

ConditionSet example_conditions(const std::string& id, const ParamMap& params) {
    if (id == "9.2") {
        Rational b1 = get(params, "beta1", Rational(5, 2));
        BesselParam b(2, {b1, Rational(1) - b1});
        Scalar t0(get(params, "t0", Rational(2)));
        Scalar t1(get(params, "t1", Rational(-1)));
        Scalar s0(get(params, "s0", Rational(3)));
        Scalar s1(get(params, "s1", Rational(5)));
        // rows of the block-Toeplitz matrix: L f0 = 0, L f1 = f0
        Condition c0 = zero_condition({{1, 0, 0, t0 * phi_mu(b, 1, 1)},
                                       {2, 0, 0, s0 * phi_mu(b, 2, 1)}});
        Condition c1 = zero_condition({{1, 0, 0, t1 * phi_mu(b, 1, 1)},
                                       {1, 1, 0, t0 * phi_mu(b, 1, 2)},
                                       {2, 0, 0, s1 * phi_mu(b, 2, 1)},
                                       {2, 1, 0, s0 * phi_mu(b, 2, 2)}});
        return ConditionSet(b, {c0, c1});
    }
    if (id == "9.3") {
        Rational b1 = get(params, "beta1", Rational(0));
        BesselParam b(2, {b1, Rational(1) - b1});
        Scalar a(get(params, "a", Rational(2)));
        Scalar bb(get(params, "b", Rational(3)));
        Condition c0 = zero_condition(
            {{1, 0, 0, Scalar(1)}, {1, 1, 0, a * phi_mu(b, 1, 2)}});
        Condition c1 = zero_condition(
            {{2, 0, 0, Scalar(1)}, {2, 1, 0, bb * phi_mu(b, 2, 2)}});
        return ConditionSet(b, {c0, c1});
    }
    if (id == "9.4") {
        Rational b1 = get(params, "beta1", Rational(9, 2));
        BesselParam b(2, {b1, Rational(1) - b1});
        Scalar lam(get(params, "lambda", Rational(2)));
        Scalar a(get(params, "a", Rational(1)));
        Scalar bb(get(params, "b", Rational(3)));
        Condition c0 =
            zero_condition({{1, 0, 0, lam * phi_mu(b, 1, 1)},
                            {2, 0, 0, (lam * a + bb) * phi_mu(b, 2, 1)},
                            {2, 1, 0, lam * bb * phi_mu(b, 2, 2)}});
        Condition c1 = zero_condition({{1, 2, 0, phi_mu(b, 1, 3)},
                                       {2, 2, 0, a * phi_mu(b, 2, 3)},
                                       {2, 3, 0, bb * phi_mu(b, 2, 4)}});
        return ConditionSet(b, {c0, c1});
    }
    if (id == "9.5") {
        Rational b1 = get(params, "beta1", Rational(-1, 2));
        BesselParam b(2, {b1, Rational(1) - b1});
        Scalar t(get(params, "t", Rational(3, 2)));
        return ConditionSet(
            b, {zero_condition({{1, 0, 0, t}, {2, 0, 0, Scalar(1)}})});
    }
    if (id == "9.8") {
        Rational nu = get(params, "nu", Rational(1, 3));
        Rational a = get(params, "a", Rational(2));
        Rational lam = get(params, "lambda", Rational(1));
        BesselParam b(2, {Rational(1) - nu, nu});
        // Psi + a D_x Psi at the sheets of lambda: dz-jets (1, a lambda)
        return ConditionSet(
            b, {point_condition(lam, {Scalar(1), Scalar(a * lam)})});
    }
    if (id == "9.9") {
        Rational a0 = get(params, "alpha0", Rational(1));
        Rational a = get(params, "a", Rational(1));
        Rational lam = get(params, "lambda", Rational(0));
        AiryParam p(2, a0);
        return ConditionSet(p, {point_condition(lam, {Scalar(1), Scalar(a)})});
    }
    if (id == "9.10") {
        Rational a0 = get(params, "alpha0", Rational(1));
        Rational a2 = get(params, "alpha2", Rational(1));
        Rational a = get(params, "a", Rational(1));
        Rational lam = get(params, "lambda", Rational(1));
        AiryParam p(3, a0, {a2});
        return ConditionSet(p, {point_condition(lam, {Scalar(1), Scalar(a)})});
    }
    if (id == "log") {
        Scalar a0(get(params, "a0", Rational(1)));
        Scalar a1(get(params, "a1", Rational(1)));
        Scalar a2(get(params, "a2", Rational(1)));
        BesselParam b(3, {Rational(1), Rational(1), Rational(1)});
        return ConditionSet(
            b, {zero_condition({{1, 0, 0, a0}, {1, 0, 1, a1}, {1, 1, 2, a2}})});
    }
    throw DomainError("unknown example id: " + id);
}

}  // namespace darboux
