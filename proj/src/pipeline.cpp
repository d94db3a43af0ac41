#include "darboux/darboux.hpp"

namespace darboux {

DiffOp base_operator(const DarbouxPlane& pl, const std::string& var) {
    return pl.family == ConditionSet::Family::Bessel
               ? bessel_op(*pl.bessel, var)
               : airy_op(*pl.airy, var);
}

DarbouxPlane build_plane(const ConditionSet& cs) {
    return build_plane(std::make_shared<const ConditionSet>(cs));
}

DarbouxPlane build_plane(std::shared_ptr<const ConditionSet> cs) {
    if (!zn_check(*cs))
        throw DomainError("condition set is not Z_N-invariant");
    DarbouxPlane pl;
    pl.family = cs->family();
    if (cs->family() == ConditionSet::Family::Bessel)
        pl.bessel = cs->bessel();
    else
        pl.airy = cs->airy();
    pl.conditions = cs;
    KernelContext ctx(*cs);
    auto basis = materialize_kernel(ctx);
    auto [p, cert] = wronskian_op(ctx, basis);
    pl.p = std::move(p);
    pl.certificate = cert;
    pl.g = g_from_conditions(*cs);
    return pl;
}

namespace {

UniPoly compose_zn(const UniPoly& hhat, unsigned n, const std::string& var) {
    // hhat(z^N) as a polynomial in var
    return hhat.compress(n, var);
}

}  // namespace

UniPoly minimal_hhat_by_division(const DarbouxPlane& pl, unsigned max_deg) {
    const std::string var = pl.p.var();
    DiffOp l = base_operator(pl, var);
    if (pl.p.ord() == 0) return UniPoly::monomial("t", Scalar(1), 1);
    // remainders of L^j mod P are linear in the dividend
    std::vector<DiffOp> rems;
    DiffOp lj = DiffOp::identity(var);
    for (unsigned d = 0; d <= max_deg; ++d) {
        rems.push_back(op_right_divide(lj, pl.p).second);
        if (d >= 1) {
            // monic candidate of degree d: solve sum_j c_j rem_j = -rem_d
            size_t nvars = d;
            // coordinates: (order k, x-power) of numerator over common denom
            UniPoly lcm = UniPoly::constant(var, Scalar(1));
            for (unsigned j = 0; j <= d; ++j)
                for (const auto& c : rems[j].coeffs())
                    if (!c.is_zero()) lcm = poly_lcm(lcm, c.den());
            std::map<std::pair<size_t, size_t>, size_t> index;
            auto vec = [&](const DiffOp& r) {
                std::vector<std::tuple<size_t, Scalar>> sparse;
                for (size_t k = 0; k < r.coeffs().size(); ++k) {
                    if (r.coeffs()[k].is_zero()) continue;
                    UniPoly num =
                        (r.coeffs()[k] * RatFun::of(lcm)).to_polynomial();
                    for (size_t pw = 0; pw < num.coeffs().size(); ++pw) {
                        if (num.coeffs()[pw].is_zero()) continue;
                        auto key = std::make_pair(k, pw);
                        auto it = index.find(key);
                        size_t id;
                        if (it == index.end()) {
                            id = index.size();
                            index.emplace(key, id);
                        } else {
                            id = it->second;
                        }
                        sparse.emplace_back(id, num.coeffs()[pw]);
                    }
                }
                return sparse;
            };
            std::vector<std::vector<std::tuple<size_t, Scalar>>> cols;
            for (unsigned j = 0; j < d; ++j) cols.push_back(vec(rems[j]));
            auto rhs_sparse = vec(rems[d]);
            size_t dim = index.size();
            Matrix a(dim, std::vector<Scalar>(nvars, Scalar(0)));
            std::vector<Scalar> b(dim, Scalar(0));
            for (unsigned j = 0; j < d; ++j)
                for (auto& [id, v] : cols[j]) a[id][j] = v;
            for (auto& [id, v] : rhs_sparse) b[id] = -v;
            if (auto sol = solve(a, b)) {
                std::vector<Scalar> cs(d + 1, Scalar(0));
                cs[d] = Scalar(1);
                for (unsigned j = 0; j < d; ++j) cs[j] = (*sol)[j];
                return UniPoly("t", std::move(cs));
            }
        }
        lj = op_mul(lj, l);
    }
    throw DomainError("no annihilating polynomial up to the degree cap");
}

PairCore pair_core_with_h(const DarbouxPlane& pl, const UniPoly& hhat) {
    const std::string var = pl.p.var();
    DiffOp l = base_operator(pl, var);
    DiffOp hl = op_of_poly(hhat.with_var("z"), l);
    auto [q, r] = op_right_divide(hl, pl.p);
    if (!r.is_zero())
        throw NonzeroRemainder(
            "kernel of P is not contained in ker h(L); invalid exponents");
    PairCore core;
    core.q = std::move(q);
    core.hhat = hhat;
    core.f = compose_zn(hhat, pl.n(), "z").divexact(pl.g);
    return core;
}

PairCore pair_core(const DarbouxPlane& pl) {
    UniPoly hhat = pl.conditions ? min_h_exponents(*pl.conditions).hhat
                                 : minimal_hhat_by_division(pl);
    return pair_core_with_h(pl, hhat);
}

namespace {

// clear denominators of a D-form: pbar_k = c * p_k with c the monic lcm
struct ClearedDForm {
    UniPoly c;                  // in t
    std::vector<UniPoly> pbar;  // in t
};

ClearedDForm clear_dform(const DFormOp& f) {
    ClearedDForm out;
    out.c = dform_denominator(f);
    for (const auto& p : f.p)
        out.pbar.push_back((p * RatFun::of(out.c)).to_polynomial());
    return out;
}

// (x d/dx)^k pbar_k(L) summed, then left-multiplied by 1/prefactor(x)
DiffOp euler_poly_sum(const std::vector<UniPoly>& pbar, const DiffOp& l,
                      const RatFun& prefactor_inv) {
    const std::string& var = l.var();
    DiffOp xd = DiffOp::euler(var);
    DiffOp acc = DiffOp::zero(var);
    for (size_t k = 0; k < pbar.size(); ++k) {
        if (pbar[k].is_zero()) continue;
        acc = acc + op_mul(xd.pow(static_cast<unsigned>(k)),
                           op_of_poly(pbar[k].with_var("z"), l));
    }
    return op_mul(DiffOp::mul_by(prefactor_inv), acc);
}

UniPoly neg_compose(const UniPoly& p, unsigned n, size_t shift,
                    const std::string& var) {
    // (-z)^shift * p((-z)^N) as a polynomial in var
    UniPoly pm = n % 2 == 0
                     ? p
                     : p.compose(UniPoly::monomial("t", Scalar(-1), 1));
    return pm.compress(n, var) *
           UniPoly::monomial(var, Scalar(shift % 2 == 0 ? 1 : -1), shift);
}

}  // namespace

DiffOp airy_spectral_substitute(const DiffOp& a, const AiryParam& p,
                                const std::string& zvar) {
    // x -> alpha0^{-1} z^N, d/dx -> (alpha0/N) z^{1-N} d/dz
    Scalar a0(p.alpha0());
    UniPoly subst = UniPoly::monomial(zvar, a0.inverse(), p.n());
    RatFun xi_coeff(UniPoly::constant(zvar, a0 / Scalar(static_cast<long>(p.n()))),
                    UniPoly::monomial(zvar, Scalar(1), p.n() - 1));
    DiffOp xi = op_mul(DiffOp::mul_by(xi_coeff), DiffOp::d(zvar));
    DiffOp acc = DiffOp::zero(zvar);
    for (size_t k = 0; k < a.coeffs().size(); ++k) {
        if (a.coeffs()[k].is_zero()) continue;
        RatFun ck = a.coeffs()[k].compose_poly(subst);
        acc = acc + op_mul(DiffOp::mul_by(ck), xi.pow(static_cast<unsigned>(k)));
    }
    return acc;
}

BispectralPair complete_pair_with_h(const DarbouxPlane& pl,
                                    const UniPoly& hhat, bool reduce_b) {
    const std::string var = pl.p.var();
    unsigned n = pl.n();
    PairCore core = pair_core_with_h(pl, hhat);
    BispectralPair out;
    out.plane = pl;
    out.p = pl.p;
    out.q = core.q;
    out.g = pl.g;
    out.f = core.f;
    out.hhat = core.hhat;

    DiffOp l_v = base_operator(pl, var);

    auto backward_by_division = [&](const DarbouxPlane& image) {
        UniPoly hb = minimal_hhat_by_division(image);
        DiffOp hbl = op_of_poly(hb.with_var("z"), l_v);
        auto [qb, rb] = op_right_divide(hbl, image.p);
        if (!rb.is_zero())
            throw NonzeroRemainder("b-image kernel escapes its h(L)");
        out.q_b = qb;
        out.f_b = hb.compress(n, "z").divexact(image.g);
    };

    if (pl.family == ConditionSet::Family::Bessel) {
        // b-side through the Z_N-homogeneous presentation
        DFormOp df = to_dform(pl.p, n);
        ClearedDForm cp = clear_dform(df);
        out.g_b = cp.c.compress(n, "z") *
                  UniPoly::monomial("z", Scalar(1), static_cast<size_t>(df.shift));
        RatFun ginv = RatFun::of(pl.g.with_var(var)).inverse();
        out.p_b = euler_poly_sum(cp.pbar, l_v, ginv);
        if (!out.p_b.is_monic())
            throw DomainError("b-image operator failed to normalize monic");

        DarbouxPlane image;
        image.family = pl.family;
        image.bessel = pl.bessel;
        image.p = out.p_b;
        image.g = out.g_b;
        bool reduced = false;
        if (reduce_b) {
            DarbouxPlane smaller = canonical_reduce(image);
            if (smaller.p.ord() < image.p.ord()) {
                reduced = true;
                out.p_b = smaller.p;
                out.g_b = smaller.g;
                backward_by_division(smaller);
            }
        }
        if (!reduced) {
            // Q*(-x,-d) in D-form gives the backward half
            DiffOp qflip = op_adjoint(core.q).sign_flip();
            if (!qflip.is_monic()) qflip = qflip.monic();
            DFormOp dq = to_dform(qflip, n);
            ClearedDForm cq = clear_dform(dq);
            size_t m = static_cast<size_t>(core.q.ord());
            out.f_b = neg_compose(cq.c, n, m, "z");
            BesselParam abeta(
                n, [&] {
                    std::vector<Rational> ab;
                    for (const auto& b : pl.bessel->beta())
                        ab.push_back(Rational(static_cast<long>(n) - 1) - b);
                    return ab;
                }());
            DiffOp l_a = bessel_op(abeta, var);
            RatFun finv = RatFun::of(core.f.with_var(var)).inverse();
            DiffOp r = euler_poly_sum(cq.pbar, l_a, finv);
            out.q_b = op_adjoint(r);
            Scalar flead = out.f_b.lead();
            out.f_b = out.f_b.monic();
            out.q_b = out.q_b * flead.inverse();
        }

        out.l = op_mul(out.p, out.q);
        out.lambda_op = op_mul(out.p_b, out.q_b).with_var("z");
        out.theta = (out.f_b * out.g_b).with_var(var);
        out.theta_hat = out.theta.decompress(n, "t");
    } else {
        // Airy family: plain polynomial-coefficient presentation
        const AiryParam& ap = *pl.airy;
        Scalar a0(ap.alpha0());
        UniPoly clear = UniPoly::constant(var, Scalar(1));
        for (const auto& c : pl.p.coeffs())
            if (!c.is_zero()) clear = poly_lcm(clear, c.den());
        std::vector<UniPoly> pk;
        for (const auto& c : pl.p.coeffs())
            pk.push_back((c * RatFun::of(clear)).to_polynomial());

        UniPoly g1 = pl.g.decompress(n, "t");
        // P_b = (1/g1(a0 x)) sum d^k p_k(a0^{-1} L)
        UniPoly a0x = UniPoly::monomial(var, a0, 1);
        RatFun g1inv = RatFun::of(g1.compose(a0x)).inverse();
        DiffOp d = DiffOp::d(var);
        DiffOp acc = DiffOp::zero(var);
        UniPoly tover = UniPoly::monomial("t", a0.inverse(), 1);
        for (size_t k = 0; k < pk.size(); ++k) {
            if (pk[k].is_zero()) continue;
            UniPoly sub = pk[k].compose(tover);  // p_k(t/alpha0)
            acc = acc + op_mul(d.pow(static_cast<unsigned>(k)),
                               op_of_poly(sub.with_var("z"), l_v));
        }
        out.p_b = op_mul(DiffOp::mul_by(g1inv), acc);
        // g_b = p_n(alpha0^{-1} z^N), normalized monic together with P_b
        UniPoly gb = clear.compose(UniPoly::monomial("x", a0.inverse(), 1))
                         .compress(n, "z");
        Scalar glead = gb.lead();
        out.g_b = gb.monic();
        out.p_b = out.p_b * glead.inverse();
        if (!out.p_b.is_monic())
            throw DomainError("Airy b-image operator failed to normalize monic");

        // Backward half on the b_1-image plane, by the same right-division
        // mechanism as the forward Q: find the minimal hhat annihilating
        // ker P_b and divide.
        DarbouxPlane image;
        image.family = pl.family;
        image.airy = pl.airy;
        image.p = out.p_b;
        image.g = out.g_b;
        if (reduce_b) {
            DarbouxPlane smaller = canonical_reduce(image);
            if (smaller.p.ord() < image.p.ord()) {
                image = smaller;
                out.p_b = image.p;
                out.g_b = image.g;
            }
        }
        backward_by_division(image);

        out.l = op_mul(out.p, out.q);
        out.lambda_op = op_mul(airy_spectral_substitute(out.p_b, ap),
                               airy_spectral_substitute(out.q_b, ap));
        // Lambda-eigenvalue theta(x) = theta_hat(alpha0 x)
        out.theta_hat = (out.f_b * out.g_b).decompress(n, "t");
        out.theta = out.theta_hat.compose(UniPoly::monomial(var, a0, 1));
    }

    // internal consistency: f g = h(z^N)
    if (!(out.f * out.g == out.hhat.compress(n, "z")))
        throw DomainError("factorization identity f g = h(z^N) failed");
    return out;
}

BispectralPair complete_pair(const DarbouxPlane& pl, bool reduce_b) {
    UniPoly hhat = pl.conditions ? min_h_exponents(*pl.conditions).hhat
                                 : minimal_hhat_by_division(pl);
    return complete_pair_with_h(pl, hhat, reduce_b);
}

bool check_backward_factorization(const BispectralPair& pair) {
    DiffOp l_v = base_operator(pair.plane, pair.p.var());
    return op_mul(pair.q_b, pair.p_b) ==
           op_of_poly(pair.theta_hat.with_var("z"), l_v);
}

std::optional<DiffOp> reduced_pb(const BispectralPair& pair) {
    if (pair.plane.family != ConditionSet::Family::Bessel) return std::nullopt;
    DiffOp l = base_operator(pair.plane, pair.p.var());
    auto [q, r] = op_right_divide(pair.p_b, l);
    if (!r.is_zero()) return std::nullopt;
    return q;
}

}  // namespace darboux
