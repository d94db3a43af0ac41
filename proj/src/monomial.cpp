#include "darboux/darboux.hpp"

namespace darboux {

namespace {

// all n-element subsets of {0..m-1}, lexicographic
std::vector<std::vector<size_t>> subsets(size_t m, size_t n) {
    std::vector<std::vector<size_t>> out;
    std::vector<size_t> cur(n);
    for (size_t i = 0; i < n; ++i) cur[i] = i;
    if (n > m) return out;
    while (true) {
        out.push_back(cur);
        size_t i = n;
        while (i-- > 0) {
            if (cur[i] + (n - i) < m) {
                ++cur[i];
                for (size_t j = i + 1; j < n; ++j) cur[j] = cur[j - 1] + 1;
                break;
            }
            if (i == 0) return out;
        }
    }
}

Scalar minor_det(const Matrix& a, const std::vector<size_t>& cols) {
    size_t n = cols.size();
    Matrix m(n, std::vector<Scalar>(n, Scalar(0)));
    for (size_t r = 0; r < n; ++r)
        for (size_t c = 0; c < n; ++c) m[r][c] = a[r][cols[c]];
    return det(m);
}

// standard Vandermonde convention prod_{r<s}(g_s - g_r); the source papers'
// opposite ordering differs by a global sign that cancels in every ratio
Scalar delta_of(const std::vector<Scalar>& g) {
    Scalar d(1);
    for (size_t r = 0; r < g.size(); ++r)
        for (size_t s = r + 1; s < g.size(); ++s) d *= g[s] - g[r];
    return d;
}

}  // namespace

MonomialForms monomial_closed_forms(const Matrix& a, const BesselParam& base,
                                    unsigned d) {
    const std::string var = "x";
    unsigned nn = base.n();
    auto gamma_r = beta_power(base, d);
    size_t cols = gamma_r.size();
    if (a.empty() || a[0].size() != cols)
        throw DomainError("matrix width must equal d*N");
    size_t n = a.size();
    std::vector<Scalar> gamma;
    for (const auto& g : gamma_r) gamma.emplace_back(g);
    for (size_t i = 0; i < cols; ++i)
        for (size_t j = i + 1; j < cols; ++j)
            if (gamma[i] == gamma[j])
                throw DegenerateGamma(
                    "beta^d has colliding coordinates; use the generic "
                    "Wronskian path with logarithms");
    // mixing constraint: gamma_i - gamma_j in N Z for columns sharing a row
    for (size_t r = 0; r < n; ++r)
        for (size_t i = 0; i < cols; ++i)
            for (size_t j = i + 1; j < cols; ++j) {
                if (a[r][i].is_zero() || a[r][j].is_zero()) continue;
                Rational diff = gamma_r[i] - gamma_r[j];
                if (!(diff.get_den() == 1 &&
                      diff.get_num() % static_cast<long>(nn) == 0))
                    throw DegenerateGamma(
                        "row mixes exponents not congruent mod N");
            }

    auto subs = subsets(cols, n);
    struct Term {
        Scalar coeff;  // det A^I * Delta_I
        Rational gsum;
        std::vector<size_t> idx;
    };
    std::vector<Term> terms;
    std::optional<std::pair<Rational, std::vector<size_t>>> imin;
    for (const auto& idx : subs) {
        Scalar dA = minor_det(a, idx);
        if (dA.is_zero()) continue;
        std::vector<Scalar> gI;
        Rational gsum(0);
        for (size_t i : idx) {
            gI.push_back(gamma[i]);
            gsum += gamma_r[i];
        }
        terms.push_back({dA * delta_of(gI), gsum, idx});
        if (!imin || gsum < imin->first ||
            (gsum == imin->first && idx < imin->second))
            imin = {gsum, idx};
    }
    if (terms.empty()) throw DependentKernel("matrix has rank below n");

    Rational gmin = imin->first;
    auto p_of = [&](const Term& t) -> unsigned {
        Rational p = t.gsum - gmin;
        if (p.get_den() != 1 || p.get_num() < 0 ||
            p.get_num() % static_cast<long>(nn) != 0)
            throw DegenerateGamma("subset weight not divisible by N");
        return static_cast<unsigned>(mpz_class(p.get_num()).get_ui());
    };

    UniPoly wx("x");  // sum det A^I Delta_I x^{p_I}
    for (const auto& t : terms)
        wx = wx + UniPoly::monomial("x", t.coeff, p_of(t));
    UniPoly wz = wx.with_var("z");

    DiffOp lbeta = bessel_op(base, var);
    DiffOp psum = DiffOp::zero(var), qsum = DiffOp::zero(var);
    DiffOp pbsum = DiffOp::zero(var), qbsum = DiffOp::zero(var);
    for (const auto& t : terms) {
        unsigned p = p_of(t);
        std::vector<Scalar> gI, gC;
        for (size_t i = 0; i < cols; ++i) {
            bool in = std::find(t.idx.begin(), t.idx.end(), i) != t.idx.end();
            if (in)
                gI.push_back(gamma[i]);
            else
                gC.push_back(gamma[i] - Scalar(static_cast<long>(n)));
        }
        DiffOp lgi = bessel_like_op(var, gI);
        DiffOp lgc = bessel_like_op(var, gC);
        DiffOp xp = DiffOp::mul_by(UniPoly::monomial(var, t.coeff, p));
        DiffOp lpow = lbeta.pow(p / nn);
        psum = psum + op_mul(xp, lgi);
        qsum = qsum + op_mul(lgc, xp);
        pbsum = pbsum + op_mul(lgi, lpow) * t.coeff;
        qbsum = qbsum + op_mul(lpow, lgc) * t.coeff;
    }

    MonomialForms out;
    RatFun winv = RatFun::of(wx).inverse();
    out.p = op_mul(DiffOp::mul_by(winv), psum);
    out.q = op_mul(qsum, DiffOp::mul_by(winv));
    out.g = UniPoly::monomial("z", Scalar(1), n);
    out.f = UniPoly::monomial("z", Scalar(1), cols - n);
    Scalar wlead = wz.lead();
    out.g_b = (UniPoly::monomial("z", Scalar(1), n) * wz).monic();
    out.p_b = pbsum * wlead.inverse();
    out.f_b = (UniPoly::monomial("z", Scalar(1), cols - n) * wz).monic();
    out.q_b = qbsum * wlead.inverse();
    return out;
}

}  // namespace darboux
