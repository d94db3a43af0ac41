#include "darboux/verify.hpp"

namespace darboux {

namespace {

// e^{xz} sum_{k >= kmin} c_k(x) z^{-k}, coefficients known for k <= valid.
struct Series {
    long kmin = 0;
    long valid = 0;
    std::map<long, RatFun> c;

    RatFun at(long k, const std::string& var) const {
        auto it = c.find(k);
        return it == c.end() ? RatFun(var) : it->second;
    }
    void set(long k, const RatFun& v) {
        if (v.is_zero())
            c.erase(k);
        else
            c[k] = v;
        kmin = std::min(kmin, k);
    }
};

// conjugated derivative: e^{xz} f -> e^{xz} (z f + f_x)
Series d_conj(const Series& s, const std::string& var) {
    Series r;
    r.valid = s.valid - 1;
    r.kmin = s.kmin - 1;
    for (const auto& [k, v] : s.c) {
        if (k - 1 <= r.valid) r.set(k - 1, r.at(k - 1, var) + v);
        if (k <= r.valid) r.set(k, r.at(k, var) + v.derivative());
    }
    return r;
}

Series apply_op(const DiffOp& op, const Series& s) {
    const std::string& var = op.var();
    Series out;
    out.valid = s.valid - op.ord();
    Series cur = s;
    for (size_t k = 0; k < op.coeffs().size(); ++k) {
        if (!op.coeffs()[k].is_zero())
            for (const auto& [j, v] : cur.c) {
                if (j > out.valid) continue;
                out.set(j, out.at(j, var) + op.coeffs()[k] * v);
            }
        if (k + 1 < op.coeffs().size()) cur = d_conj(cur, var);
    }
    return out;
}

// divide by monic g(z) of degree n: shift by z^{-n}, then expand the tail
Series divide_g(const Series& s, const UniPoly& g, const std::string& var) {
    long n = g.deg();
    Series shifted;
    shifted.valid = s.valid + n;
    for (const auto& [k, v] : s.c) shifted.set(k + n, v);
    // tail t: g(z) = z^n (1 + sum_{j>=1} g_{n-j} z^-j)
    std::map<long, Scalar> tail;
    for (long j = 1; j <= n; ++j) {
        Scalar cj = g.coeff(static_cast<size_t>(n - j));
        if (!cj.is_zero()) tail[j] = cj;
    }
    Series out = shifted;
    Series powt = shifted;  // shifted * (-t)^m accumulated
    long window = shifted.valid - shifted.kmin;
    for (long m = 1; m <= window && !tail.empty(); ++m) {
        Series nxt;
        nxt.valid = powt.valid;
        for (const auto& [k, v] : powt.c)
            for (const auto& [j, t] : tail) {
                if (k + j > nxt.valid) continue;
                nxt.set(k + j, nxt.at(k + j, var) - v * t);
            }
        if (nxt.c.empty()) break;
        powt = nxt;
        for (const auto& [k, v] : powt.c)
            out.set(k, out.at(k, var) + v);
    }
    return out;
}

}  // namespace

WaveSeries wave_series(const DarbouxPlane& pl, unsigned k) {
    if (pl.family != ConditionSet::Family::Bessel)
        throw DomainError("wave series path is Bessel-only");
    const std::string var = pl.p.var();
    long need = static_cast<long>(k) + pl.p.ord();
    auto base = bessel_wave_coeffs(*pl.bessel, static_cast<unsigned>(need));

    Series master;
    master.valid = need;
    master.set(0, RatFun::constant(var, Scalar(1)));
    for (long j = 1; j <= need; ++j) {
        if (base[static_cast<size_t>(j) - 1].is_zero()) continue;
        // a_j (xz)^{-j} contributes a_j x^{-j} at z^{-j}
        RatFun xmj(UniPoly::constant(var, base[static_cast<size_t>(j) - 1]),
                   UniPoly::monomial(var, Scalar(1), static_cast<size_t>(j)));
        master.set(j, xmj);
    }

    Series num = apply_op(pl.p, master);
    Series res = divide_g(num, pl.g, var);

    // shape: no terms above e^{xz} z^0 and constant term exactly 1
    for (const auto& [j, v] : res.c) {
        if (j < 0 && !v.is_zero())
            throw IdentityFailed(
                "wave shape violated: nonzero coefficient at z^" +
                std::to_string(-j));
    }
    RatFun c0 = res.at(0, var);
    if (!(c0 == RatFun::constant(var, Scalar(1))))
        throw IdentityFailed("wave shape violated: a_0 != 1");

    WaveSeries out;
    out.truncation = k;
    long margin = std::min<long>(res.valid, static_cast<long>(k));
    if (margin < 1)
        throw MarginExhausted("requested depth needs truncation >= " +
                              std::to_string(pl.p.ord() + 1));
    out.margin = static_cast<unsigned>(margin);
    for (long j = 1; j <= margin; ++j) out.coeffs.push_back(res.at(j, var));
    return out;
}

void check_wave_decay(const WaveSeries& ws, unsigned depth) {
    if (ws.margin < depth)
        throw MarginExhausted("margin " + std::to_string(ws.margin) +
                              " below requested depth " +
                              std::to_string(depth));
    for (unsigned j = 0; j < depth; ++j) {
        const RatFun& a = ws.coeffs[j];
        if (a.is_zero()) continue;
        if (a.num().deg() >= a.den().deg())
            throw IdentityFailed("wave coefficient a_" + std::to_string(j + 1) +
                                 " does not vanish at infinity");
    }
}

}  // namespace darboux
