#include "darboux/verify.hpp"

#include <chrono>
#include <numeric>

namespace darboux {

namespace {

// Bivariate fraction with a factored denominator.  Factors are the handful
// of polynomials the pipeline introduces (operator denominators, g(z), powers
// of x and z); keeping them split makes d/dx and d/dz grow exponents by one
// instead of squaring the denominator.
struct Factored {
    BiPoly num;
    std::vector<std::pair<BiPoly, unsigned>> den;  // product of f^e

    bool is_zero() const { return num.is_zero(); }
};

Factored fac_of(const BiPoly& p) { return {p, {}}; }

void push_factor(std::vector<std::pair<BiPoly, unsigned>>& den,
                 const BiPoly& f, unsigned e) {
    if (e == 0) return;
    for (auto& [g, ge] : den)
        if (g == f) {
            ge += e;
            return;
        }
    den.emplace_back(f, e);
}

Factored fac_mul(const Factored& a, const Factored& b) {
    if (a.is_zero() || b.is_zero()) return {};
    Factored r;
    r.num = a.num * b.num;
    r.den = a.den;
    for (const auto& [f, e] : b.den) push_factor(r.den, f, e);
    return r;
}

Factored fac_add(const Factored& a, const Factored& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    Factored r;
    r.den = a.den;
    for (const auto& [f, e] : b.den) {
        unsigned have = 0;
        for (auto& [g, ge] : r.den)
            if (g == f) have = ge;
        if (e > have) push_factor(r.den, f, e - have);
    }
    // scale each numerator by the missing factor powers
    auto scale = [&](const Factored& x) {
        BiPoly s = x.num;
        for (const auto& [f, e] : r.den) {
            unsigned have = 0;
            for (const auto& [g, ge] : x.den)
                if (g == f) have = ge;
            for (unsigned i = have; i < e; ++i) s = s * f;
        }
        return s;
    };
    r.num = scale(a) + scale(b);
    if (r.num.is_zero()) return {};
    return r;
}

Factored fac_neg(const Factored& a) { return {-a.num, a.den}; }

// derivative with respect to one variable, via a supplied BiPoly derivative
template <typename DFn>
Factored fac_d(const Factored& a, DFn&& d) {
    if (a.is_zero()) return {};
    // (num / prod f^e)' = (num' prod f - num sum e_i f_i' prod_{j!=i} f_j)
    //                     / prod f^{e+1}
    BiPoly allf = BiPoly::constant(Scalar(1));
    for (const auto& [f, e] : a.den) allf = allf * f;
    BiPoly top = d(a.num) * allf;
    for (size_t i = 0; i < a.den.size(); ++i) {
        BiPoly rest = BiPoly::constant(
            Scalar(Rational(static_cast<long>(a.den[i].second))));
        for (size_t j = 0; j < a.den.size(); ++j)
            if (j != i) rest = rest * a.den[j].first;
        top = top - a.num * d(a.den[i].first) * rest;
    }
    Factored r;
    r.num = std::move(top);
    if (r.num.is_zero()) return {};
    r.den = a.den;
    for (auto& [f, e] : r.den) ++e;
    return r;
}

Factored fac_dx(const Factored& a) {
    return fac_d(a, [](const BiPoly& p) { return p.dx(); });
}
Factored fac_dz(const Factored& a) {
    return fac_d(a, [](const BiPoly& p) { return p.dz(); });
}

Factored fac_from_ratfun_x(const RatFun& f) {
    Factored r;
    r.num = BiPoly::from_x(f.num());
    if (f.den().deg() > 0) push_factor(r.den, BiPoly::from_x(f.den()), 1);
    else {
        Scalar c = f.den().coeff(0);
        r.num = r.num * BiPoly::constant(c.inverse());
    }
    return r;
}

Factored fac_from_ratfun_z(const RatFun& f) {
    Factored r;
    r.num = BiPoly::from_z(f.num());
    if (f.den().deg() > 0) push_factor(r.den, BiPoly::from_z(f.den()), 1);
    else {
        Scalar c = f.den().coeff(0);
        r.num = r.num * BiPoly::constant(c.inverse());
    }
    return r;
}

// linear combination of master-function derivatives Psi^{(0..N-1)}
using Expr = std::vector<Factored>;

// Master-function rule set: how d/dx and d/dz act on the symbols and how
// Psi^{(N)} reduces.
class SymbolRing {
  public:
    explicit SymbolRing(const BesselParam& p) : n_(p.n()) {
        // w = xz; P_beta(D_w) psi = w^N psi gives
        // psi^{(N)} = psi - sum_{j<N} c_j w^{j-N} psi^{(j)}
        chain_x_ = fac_of(BiPoly::monomial(Scalar(1), 0, 1));  // z
        chain_z_ = fac_of(BiPoly::monomial(Scalar(1), 1, 0));  // x
        UniPoly pb = bessel_pbeta(p, "t");
        // c_j = sum_k sigma_k S(k, j)
        std::vector<std::vector<Rational>> s(n_ + 1);
        s[0] = {Rational(1)};
        for (unsigned k = 1; k <= n_; ++k) {
            s[k].assign(k + 1, Rational(0));
            for (unsigned m = 1; m <= k; ++m)
                s[k][m] = (m < k ? s[k - 1][m] * Rational(static_cast<long>(m))
                                 : Rational(0)) +
                          s[k - 1][m - 1];
        }
        std::vector<Scalar> c(n_ + 1, Scalar(0));
        for (unsigned k = 0; k <= n_; ++k) {
            if (pb.coeff(k).is_zero()) continue;
            for (unsigned j = 0; j <= k; ++j)
                c[j] += pb.coeff(k) * Scalar(s[k][j]);
        }
        reduce_.assign(n_, Factored{});
        BiPoly w = BiPoly::monomial(Scalar(1), 1, 1);
        reduce_[0] = fac_of(BiPoly::constant(Scalar(1)));  // + psi
        for (unsigned j = 0; j < n_; ++j) {
            if (c[j].is_zero()) continue;
            // - c_j w^{j-N} psi^{(j)}
            Factored term;
            term.num = BiPoly::monomial(-c[j], j, j);
            push_factor(term.den, w, n_);
            // w^{j} / w^{N}: numerator already carries x^j z^j
            reduce_[j] = fac_add(reduce_[j], term);
        }
    }

    explicit SymbolRing(const AiryParam& p) : n_(p.n()) {
        chain_x_ = fac_of(BiPoly::constant(Scalar(1)));  // dy/dx = 1
        // dy/dz = N z^{N-1} / alpha0
        Scalar a0inv = Scalar(p.alpha0()).inverse();
        chain_z_ = fac_of(BiPoly::monomial(
            Scalar(static_cast<long>(p.n())) * a0inv, 0, p.n() - 1));
        // psi^{(N)} = a0 y psi - sum tail; y = a0^{-1} z^N + x
        AiryReduceRule rule = airy_reduce_rule(p);
        BiPoly y = BiPoly::monomial(a0inv, 0, p.n()) +
                   BiPoly::monomial(Scalar(1), 1, 0);
        reduce_.assign(n_, Factored{});
        reduce_[0] = fac_of(y * BiPoly::constant(rule.y_coeff));
        for (unsigned k = 0; k < n_; ++k)
            if (!rule.low_coeff[k].is_zero())
                reduce_[k] = fac_add(
                    reduce_[k], fac_of(BiPoly::constant(rule.low_coeff[k])));
    }

    unsigned n() const { return n_; }

    Expr psi() const {
        Expr e(n_, Factored{});
        e[0] = fac_of(BiPoly::constant(Scalar(1)));
        return e;
    }

    Expr scale(const Expr& e, const Factored& c) const {
        Expr r(n_, Factored{});
        for (unsigned m = 0; m < n_; ++m)
            if (!e[m].is_zero()) r[m] = fac_mul(e[m], c);
        return r;
    }

    Expr add(const Expr& a, const Expr& b) const {
        Expr r(n_, Factored{});
        for (unsigned m = 0; m < n_; ++m) r[m] = fac_add(a[m], b[m]);
        return r;
    }

    Expr sub(const Expr& a, const Expr& b) const {
        Expr r(n_, Factored{});
        for (unsigned m = 0; m < n_; ++m) r[m] = fac_add(a[m], fac_neg(b[m]));
        return r;
    }

    // derivative along x or z: coefficient derivative + chain-rule shift
    Expr derive(const Expr& e, bool along_x) const {
        Expr r(n_, Factored{});
        const Factored& chain = along_x ? chain_x_ : chain_z_;
        for (unsigned m = 0; m < n_; ++m) {
            if (e[m].is_zero()) continue;
            r[m] = fac_add(r[m], along_x ? fac_dx(e[m]) : fac_dz(e[m]));
            Factored carry = fac_mul(e[m], chain);
            if (m + 1 < n_) {
                r[m + 1] = fac_add(r[m + 1], carry);
            } else {
                for (unsigned j = 0; j < n_; ++j)
                    if (!reduce_[j].is_zero())
                        r[j] = fac_add(r[j], fac_mul(carry, reduce_[j]));
            }
        }
        return r;
    }

    Expr apply(const DiffOp& op, Expr e, bool along_x) const {
        Expr out(n_, Factored{});
        for (size_t k = 0; k < op.coeffs().size(); ++k) {
            if (!op.coeffs()[k].is_zero()) {
                Factored c = along_x ? fac_from_ratfun_x(op.coeffs()[k])
                                     : fac_from_ratfun_z(op.coeffs()[k]);
                out = add(out, scale(e, c));
            }
            if (k + 1 < op.coeffs().size()) e = derive(e, along_x);
        }
        return out;
    }

    bool is_zero(const Expr& e, std::string* diag = nullptr) const {
        for (unsigned m = 0; m < n_; ++m)
            if (!e[m].is_zero()) {
                if (diag)
                    *diag = "residual at psi^(" + std::to_string(m) +
                            "): " + e[m].num.str();
                return false;
            }
        return true;
    }

  private:
    unsigned n_;
    Factored chain_x_, chain_z_;
    std::vector<Factored> reduce_;  // expansion of psi^{(N)}
};

}  // namespace

BispectralReport check_bispectral_symbolic(const BispectralPair& pair) {
    auto t0 = std::chrono::steady_clock::now();
    const DarbouxPlane& pl = pair.plane;
    unsigned n = pl.n();

    SymbolRing ring = pl.family == ConditionSet::Family::Bessel
                          ? SymbolRing(*pl.bessel)
                          : SymbolRing(*pl.airy);

    // Psi_W = (1/g(z)) P psi
    Expr psiw = ring.apply(pair.p, ring.psi(), true);
    Factored ginv;
    ginv.num = BiPoly::constant(Scalar(1));
    if (pair.g.deg() > 0)
        push_factor(ginv.den, BiPoly::from_z(pair.g), 1);
    psiw = ring.scale(psiw, ginv);

    BispectralReport rep;
    std::string diag;

    // x side: L Psi_W = h(z^N) Psi_W through the defining halves
    // Q Psi_W = f(z) psi and P psi = g(z) Psi_W, plus L = P Q.
    {
        Expr lhs = ring.apply(pair.q, psiw, true);
        Factored f = fac_of(BiPoly::from_z(pair.f));
        if (!ring.is_zero(ring.sub(lhs, ring.scale(ring.psi(), f)), &diag))
            throw IdentityFailed("x-side identity Q Psi_W = f psi failed: " +
                                 diag);
        Expr lhs2 = ring.apply(pair.p, ring.psi(), true);
        Factored g = fac_of(BiPoly::from_z(pair.g));
        if (!ring.is_zero(ring.sub(lhs2, ring.scale(psiw, g)), &diag))
            throw IdentityFailed("x-side identity P psi = g Psi_W failed: " +
                                 diag);
        if (!(pair.l == op_mul(pair.p, pair.q)))
            throw IdentityFailed("x-side factorization L = P Q failed");
        if (!(pair.f * pair.g == pair.hhat.compress(n, "z")))
            throw IdentityFailed("x-side eigenvalue f g = h(z^N) failed");
        rep.x_identity = true;
    }

    // z side: Lambda Psi_W = theta(x) Psi_W through the swapped halves
    // Q_b(z) Psi_W = f_b(x-side) psi and P_b(z) psi = g_b(x-side) Psi_W,
    // plus Lambda = P_b(z) Q_b(z).
    {
        DiffOp pbz, qbz;
        UniPoly fbx, gbx;
        if (pl.family == ConditionSet::Family::Bessel) {
            pbz = pair.p_b.with_var("z");
            qbz = pair.q_b.with_var("z");
            fbx = pair.f_b.with_var("x");
            gbx = pair.g_b.with_var("x");
        } else {
            pbz = airy_spectral_substitute(pair.p_b, *pl.airy);
            qbz = airy_spectral_substitute(pair.q_b, *pl.airy);
            UniPoly a0x = UniPoly::monomial(
                "x", Scalar(pl.airy->alpha0()), 1);
            fbx = pair.f_b.decompress(n, "t").compose(a0x);
            gbx = pair.g_b.decompress(n, "t").compose(a0x);
        }
        Expr lhs = ring.apply(qbz, psiw, false);
        Factored f = fac_of(BiPoly::from_x(fbx));
        if (!ring.is_zero(ring.sub(lhs, ring.scale(ring.psi(), f)), &diag))
            throw IdentityFailed(
                "z-side identity Q_b(z) Psi_W = f_b psi failed: " + diag);
        Expr lhs2 = ring.apply(pbz, ring.psi(), false);
        Factored g = fac_of(BiPoly::from_x(gbx));
        if (!ring.is_zero(ring.sub(lhs2, ring.scale(psiw, g)), &diag))
            throw IdentityFailed(
                "z-side identity P_b(z) psi = g_b Psi_W failed: " + diag);
        if (!(pair.lambda_op == op_mul(pbz, qbz)))
            throw IdentityFailed("z-side factorization Lambda = P_b Q_b failed");
        if (!(pair.theta == fbx * gbx))
            throw IdentityFailed(
                "z-side eigenvalue Theta = f_b g_b failed");
        rep.z_identity = true;
    }

    rep.seconds = std::chrono::duration<double>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
    return rep;
}

unsigned rank_of(const std::vector<unsigned>& orders) {
    if (orders.empty()) throw DomainError("rank of empty order set");
    unsigned g = 0;
    for (unsigned o : orders) g = std::gcd(g, o);
    return g;
}

}  // namespace darboux
