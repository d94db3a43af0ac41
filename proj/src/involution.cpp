#include "darboux/darboux.hpp"

namespace darboux {

namespace {

DarbouxPlane derived_plane(const DarbouxPlane& base, DiffOp p, UniPoly g) {
    DarbouxPlane out;
    out.family = base.family;
    out.bessel = base.bessel;
    out.airy = base.airy;
    out.conditions = nullptr;
    out.p = std::move(p);
    out.g = std::move(g);
    return out;
}

UniPoly check_poly(const UniPoly& g) {
    // g(-z)
    return g.compose(UniPoly::monomial(g.var(), Scalar(-1), 1));
}

}  // namespace

DarbouxPlane involution_a(const DarbouxPlane& pl) {
    PairCore core = pair_core(pl);
    DiffOp pa = op_adjoint(core.q);
    if (!pa.lead().is_polynomial() || pa.lead().num().deg() != 0)
        throw DomainError("adjoint image has non-constant leading coefficient");
    pa = pa.monic();
    UniPoly ga = check_poly(core.f).monic();
    DarbouxPlane out = derived_plane(pl, std::move(pa), std::move(ga));
    if (pl.family == ConditionSet::Family::Bessel) {
        std::vector<Rational> ab;
        for (const auto& b : pl.bessel->beta())
            ab.push_back(Rational(static_cast<long>(pl.n()) - 1) - b);
        out.bessel = BesselParam(pl.n(), std::move(ab));
    } else {
        out.airy = airy_involutions(*pl.airy).second;
    }
    return out;
}

DarbouxPlane involution_s(const DarbouxPlane& pl) {
    DiffOp ps = pl.p.sign_flip();
    if (!ps.lead().is_polynomial() || ps.lead().num().deg() != 0)
        throw DomainError("sign image has non-constant leading coefficient");
    ps = ps.monic();
    UniPoly gs = check_poly(pl.g).monic();
    DarbouxPlane out = derived_plane(pl, std::move(ps), std::move(gs));
    if (pl.family == ConditionSet::Family::Airy)
        out.airy = airy_involutions(*pl.airy).first;
    return out;
}

DarbouxPlane involution_b(const DarbouxPlane& pl) {
    BispectralPair pair = complete_pair(pl);
    return derived_plane(pl, pair.p_b, pair.g_b);
}

DarbouxPlane canonical_reduce(const DarbouxPlane& pl) {
    DarbouxPlane out = pl;
    DiffOp l = base_operator(pl, pl.p.var());
    unsigned n = pl.n();
    while (true) {
        size_t low = 0;
        while (low < out.g.coeffs().size() && out.g.coeff(low).is_zero()) ++low;
        if (low < n || out.p.ord() < static_cast<long>(n)) break;
        auto [q, r] = op_right_divide(out.p, l);
        if (!r.is_zero()) break;
        std::vector<Scalar> shifted(out.g.coeffs().begin() + n,
                                    out.g.coeffs().end());
        out.p = q;
        out.g = UniPoly("z", std::move(shifted));
        out.conditions = nullptr;
    }
    return out;
}

bool check_ab_bas(const DarbouxPlane& pl) {
    DarbouxPlane ab = canonical_reduce(involution_a(involution_b(pl)));
    DarbouxPlane bas =
        canonical_reduce(involution_b(involution_a(involution_s(pl))));
    return ab.p == bas.p && ab.g == bas.g;
}

}  // namespace darboux
