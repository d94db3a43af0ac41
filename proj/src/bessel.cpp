#include "darboux/bessel.hpp"

#include <algorithm>
#include <map>

namespace darboux {

BesselParam::BesselParam(unsigned n, std::vector<Rational> beta)
    : n_(n), beta_(std::move(beta)) {
    if (n_ < 1) throw DomainError("Bessel N must be >= 1");
    if (beta_.size() != n_)
        throw DomainError("Bessel parameter length must equal N");
    Rational sum(0);
    for (auto& b : beta_) {
        b.canonicalize();
        sum += b;
    }
    Rational target(static_cast<long>(n_) * (static_cast<long>(n_) - 1), 2);
    target.canonicalize();
    if (sum != target)
        throw DomainError("Bessel parameters must sum to N(N-1)/2");
}

UniPoly linear_factors_poly(const std::string& var,
                            const std::vector<Scalar>& roots) {
    UniPoly acc = UniPoly::constant(var, Scalar(1));
    UniPoly t = UniPoly::monomial(var, Scalar(1), 1);
    for (const auto& r : roots) acc = acc * (t - UniPoly::constant(var, r));
    return acc;
}

DiffOp bessel_like_op(const std::string& var, const std::vector<Scalar>& g) {
    DiffOp acc = DiffOp::identity(var);
    DiffOp xd = DiffOp::euler(var);
    for (const auto& gi : g)
        acc = op_mul(acc, xd - DiffOp::identity(var) * gi);
    RatFun xmn(UniPoly::constant(var, Scalar(1)),
               UniPoly::monomial(var, Scalar(1), g.size()));
    return op_mul(DiffOp::mul_by(xmn), acc);
}

DiffOp bessel_op(const BesselParam& p, const std::string& var) {
    std::vector<Scalar> g;
    for (const auto& b : p.beta()) g.emplace_back(b);
    return bessel_like_op(var, g);
}

UniPoly bessel_pbeta(const BesselParam& p, const std::string& var) {
    std::vector<Scalar> g;
    for (const auto& b : p.beta()) g.emplace_back(b);
    return linear_factors_poly(var, g);
}

namespace {

// Laurent polynomial in z over Scalar, exponents may be negative.
using Laurent = std::map<long, Scalar>;

void laurent_add(Laurent& a, long e, const Scalar& c) {
    auto it = a.find(e);
    if (it == a.end()) {
        if (!c.is_zero()) a.emplace(e, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) a.erase(it);
}

// (z + D - b) f with D = z d/dz acting as D z^e = e z^e.
Laurent shift_factor(const Laurent& f, const Scalar& b) {
    Laurent r;
    for (const auto& [e, c] : f) {
        laurent_add(r, e + 1, c);
        laurent_add(r, e, c * (Scalar(e) - b));
    }
    return r;
}

}  // namespace

std::vector<Scalar> bessel_wave_coeffs(const BesselParam& p, unsigned k) {
    // Determine a_1..a_K from prod_i(z + D - beta_i) phi = z^N phi with
    // phi = 1 + sum a_k z^-k; the coefficient of z^{N-k-1} pins a_k.
    const long n = p.n();
    std::vector<Scalar> betas;
    for (const auto& b : p.beta()) betas.emplace_back(b);

    auto apply_all = [&](const Laurent& f) {
        Laurent acc = f;
        for (size_t i = betas.size(); i-- > 0;)
            acc = shift_factor(acc, betas[i]);
        return acc;
    };

    std::vector<Scalar> a(k + 1, Scalar(0));
    a[0] = Scalar(1);
    Laurent phi;
    phi[0] = Scalar(1);
    for (unsigned j = 1; j <= k; ++j) {
        long order = n - static_cast<long>(j) - 1;
        Laurent lhs = apply_all(phi);
        Scalar resid(0);
        if (auto it = lhs.find(order); it != lhs.end()) resid += it->second;
        if (auto it = phi.find(order - n); it != phi.end()) resid -= it->second;
        Laurent unit;
        unit[-static_cast<long>(j)] = Scalar(1);
        Laurent lu = apply_all(unit);
        Scalar lin(0);
        if (auto it = lu.find(order); it != lu.end()) lin += it->second;
        if (lin.is_zero())
            throw RecursionSingular("wave coefficient a_" + std::to_string(j) +
                                    " has vanishing leading coefficient");
        Scalar aj = -(resid / lin);
        a[j] = aj;
        if (!aj.is_zero()) phi[-static_cast<long>(j)] = aj;
    }
    return std::vector<Scalar>(a.begin() + 1, a.end());
}

std::vector<Rational> beta_power(const BesselParam& p, unsigned d) {
    if (d < 1) throw DomainError("beta_power requires d >= 1");
    std::vector<Rational> g;
    for (const auto& b : p.beta())
        for (unsigned j = 0; j < d; ++j)
            g.push_back(b + Rational(static_cast<long>(j) * p.n()));
    return g;
}

std::vector<PowerLogTerm> bessel_action_zero(const BesselParam& p,
                                             const Rational& a, unsigned j) {
    // jet v[m] = coefficient of x^a ln^m x; (D - b) acts as
    // v[m] -> (a - b) v[m] + (m+1) v[m+1].
    std::vector<Scalar> v(j + 1, Scalar(0));
    v[j] = Scalar(1);
    for (const auto& b : p.beta()) {
        std::vector<Scalar> w(v.size(), Scalar(0));
        Scalar shift = Scalar(a) - Scalar(b);
        for (size_t m = 0; m < v.size(); ++m) {
            w[m] += v[m] * shift;
            if (m + 1 < v.size())
                w[m] += v[m + 1] * Scalar(static_cast<long>(m) + 1);
        }
        v = std::move(w);
    }
    std::vector<PowerLogTerm> out;
    for (size_t m = 0; m < v.size(); ++m)
        if (!v[m].is_zero())
            out.push_back({a - Rational(p.n()), static_cast<unsigned>(m), v[m]});
    return out;
}

std::vector<Scalar> bessel_action_lambda(const BesselParam& p,
                                         const Scalar& lambda, unsigned k) {
    if (lambda.is_zero())
        throw DomainError("bessel_action_lambda requires lambda != 0");
    // lambda^N (D + N)^k = lambda^N sum_m binom(k,m) N^{k-m} D^m.
    Scalar ln = Scalar(1);
    for (unsigned i = 0; i < p.n(); ++i) ln *= lambda;
    std::vector<Scalar> row(k + 1, Scalar(0));
    for (unsigned m = 0; m <= k; ++m) {
        Scalar npow(1);
        for (unsigned i = 0; i < k - m; ++i)
            npow *= Scalar(static_cast<long>(p.n()));
        Rational bc(1);
        for (unsigned i = 0; i < k - m; ++i)
            bc = bc * Rational(static_cast<long>(k - i)) /
                 Rational(static_cast<long>(i + 1));
        row[m] = ln * Scalar(bc) * npow;
    }
    return row;
}

GenericityReport genericity_check(const BesselParam& p) {
    // Split beta into classes congruent mod N; distinct entries inside one
    // class signal a configuration that may reduce to a smaller N.
    GenericityReport rep;
    std::vector<std::vector<Rational>> classes;
    for (const auto& b : p.beta()) {
        bool placed = false;
        for (auto& cls : classes) {
            Rational diff = b - cls.front();
            if (diff.get_den() == 1 &&
                diff.get_num() % static_cast<long>(p.n()) == 0) {
                cls.push_back(b);
                placed = true;
                break;
            }
        }
        if (!placed) classes.push_back({b});
    }
    for (const auto& cls : classes) {
        for (size_t i = 0; i < cls.size(); ++i)
            for (size_t j = i + 1; j < cls.size(); ++j)
                if (cls[i] != cls[j]) {
                    rep.unknown = true;
                    rep.detail =
                        "entries " + rational_str(cls[i]) + " and " +
                        rational_str(cls[j]) +
                        " differ by a nonzero multiple of N; the plane may "
                        "reduce to a smaller Bessel";
                    return rep;
                }
    }
    rep.generic = true;
    rep.detail = std::to_string(classes.size()) + " congruence classes mod N";
    return rep;
}

}  // namespace darboux
