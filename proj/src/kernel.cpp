#include "darboux/kernel.hpp"

#include <algorithm>
#include <array>

#include "darboux/linalg.hpp"

namespace darboux {

namespace {

// canonical representative of e mod 1 in [0,1)
Rational class_rep(const Rational& e) {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), e.get_num().get_mpz_t(), e.get_den().get_mpz_t());
    Rational r = e - Rational(q);
    r.canonicalize();
    return r;
}

// x^k as RatFun for integer k (possibly negative)
RatFun xpow(const std::string& var, long k) {
    if (k >= 0)
        return RatFun::of(UniPoly::monomial(var, Scalar(1), static_cast<size_t>(k)));
    return RatFun(UniPoly::constant(var, Scalar(1)),
                  UniPoly::monomial(var, Scalar(1), static_cast<size_t>(-k)));
}

void fn_add(KernelFn& f, const SymKey& k, const RatFun& c) {
    if (c.is_zero()) return;
    auto it = f.find(k);
    if (it == f.end()) {
        f.emplace(k, c);
        return;
    }
    it->second = it->second + c;
    if (it->second.is_zero()) f.erase(it);
}

// multiplicity of v in the union of {beta_i + N Z_{>=0}}
unsigned zero_mult(const BesselParam& p, const Rational& v) {
    unsigned m = 0;
    for (const auto& b : p.beta()) {
        Rational d = v - b;
        if (d.get_den() == 1 && d.get_num() >= 0 &&
            d.get_num() % static_cast<long>(p.n()) == 0)
            ++m;
    }
    return m;
}

// sorted representation exponents p_0 <= p_1 <= ... with v = beta_i + p N
std::vector<long> rep_exponents(const BesselParam& p, const Rational& v) {
    std::vector<long> ps;
    for (const auto& b : p.beta()) {
        Rational d = v - b;
        if (d.get_den() == 1 && d.get_num() >= 0 &&
            d.get_num() % static_cast<long>(p.n()) == 0)
            ps.push_back(mpz_class(d.get_num() / p.n()).get_si());
    }
    std::sort(ps.begin(), ps.end());
    return ps;
}

}  // namespace

bool SymKey::operator<(const SymKey& o) const {
    if (kind != o.kind) return kind < o.kind;
    if (kind == Kind::PowerLog) {
        if (cls != o.cls) return cls < o.cls;
        return logpow < o.logpow;
    }
    if (point != o.point) return point < o.point;
    if (sheet != o.sheet) return sheet < o.sheet;
    return deriv < o.deriv;
}

ConditionSet::ConditionSet(BesselParam p, std::vector<Condition> conds)
    : family_(Family::Bessel), bessel_(std::move(p)), conds_(std::move(conds)) {
    field_ = CycloField::make(bessel_->n());
    validate();
}

ConditionSet::ConditionSet(AiryParam p, std::vector<Condition> conds)
    : family_(Family::Airy), airy_(std::move(p)), conds_(std::move(conds)) {
    field_ = CycloField::make(airy_->n());
    validate();
}

unsigned ConditionSet::n() const {
    return family_ == Family::Bessel ? bessel_->n() : airy_->n();
}

const BesselParam& ConditionSet::bessel() const {
    if (!bessel_) throw DomainError("not a Bessel condition set");
    return *bessel_;
}

const AiryParam& ConditionSet::airy() const {
    if (!airy_) throw DomainError("not an Airy condition set");
    return *airy_;
}

void ConditionSet::validate() {
    for (const auto& c : conds_) {
        if (c.support == Condition::Support::Zero) {
            if (family_ == Family::Airy)
                throw DomainError(
                    "zero-supported conditions are Bessel-only (Airy planes "
                    "use the translation normalization)");
            if (c.terms.empty())
                throw DomainError("zero condition with no terms");
            for (const auto& t : c.terms) {
                if (t.i < 1 || t.i > bessel_->n())
                    throw DomainError("zero term index out of range");
                if (t.b.is_zero())
                    throw DomainError("zero term with vanishing coefficient");
                Rational v = bessel_->beta()[t.i - 1] +
                             Rational(static_cast<long>(t.k) *
                                      static_cast<long>(bessel_->n()));
                if (t.j + 1 > zero_mult(*bessel_, v))
                    throw DomainError(
                        "log power exceeds multiplicity bound at value " +
                        rational_str(v));
            }
        } else {
            // z = 0 is a singular support point only for Bessel waves
            if (c.lambda == 0 && family_ == Family::Bessel)
                throw DomainError("point condition requires lambda != 0");
            if (c.coeffs.empty())
                throw DomainError("point condition with no jet coefficients");
            bool nonzero = false;
            for (const auto& a : c.coeffs)
                if (!a.is_zero()) nonzero = true;
            if (!nonzero) throw DomainError("point condition with zero jet");
        }
    }
    // group points by lambda^N
    for (size_t ci = 0; ci < conds_.size(); ++ci) {
        const auto& c = conds_[ci];
        if (c.support != Condition::Support::Point) continue;
        Scalar ln(1);
        for (unsigned i = 0; i < n(); ++i) ln *= Scalar(c.lambda);
        unsigned jet = static_cast<unsigned>(c.coeffs.size()) - 1;
        while (jet > 0 && c.coeffs[jet].is_zero()) --jet;
        bool found = false;
        for (auto& g : groups_) {
            if (g.lambda_n == ln) {
                g.n_conditions++;
                g.max_jet = std::max(g.max_jet, jet);
                g.condition_indices.push_back(ci);
                found = true;
                break;
            }
        }
        if (!found)
            groups_.push_back({Scalar(c.lambda), ln, 1, jet, {ci}});
    }
}

unsigned ConditionSet::n_zero() const {
    unsigned n0 = 0;
    for (const auto& c : conds_) {
        if (c.support != Condition::Support::Zero) continue;
        unsigned j0 = 0;
        for (const auto& t : c.terms) j0 = std::max(j0, t.j);
        n0 += j0 + 1;
    }
    return n0;
}

unsigned ConditionSet::kernel_dim() const {
    unsigned dim = n_zero();
    for (const auto& g : groups_) dim += g.n_conditions * n();
    return dim;
}

KernelContext::KernelContext(const ConditionSet& cs) : cs_(cs) {
    if (cs.family() == ConditionSet::Family::Bessel) {
        DiffOp l = bessel_op(cs.bessel(), var_);
        for (unsigned k = 0; k < cs.n(); ++k)
            bessel_low_.push_back(l.coeff(k));
    } else {
        airy_rule_ = airy_reduce_rule(cs.airy());
    }
    for (const auto& g : cs.point_groups()) {
        eigen_.push_back(g.lambda_n);
        if (cs.family() == ConditionSet::Family::Airy) {
            // y(x) = alpha0^{-1} lambda^N + x
            Scalar c = g.lambda_n / Scalar(cs.airy().alpha0());
            airy_y_.push_back(RatFun::of(
                UniPoly("x", {c, Scalar(1)})));
        }
    }
}

KernelFn KernelContext::derivative(const KernelFn& f) const {
    KernelFn out;
    RatFun xinv = xpow(var_, -1);
    unsigned n = cs_.n();
    for (const auto& [key, c] : f) {
        if (key.kind == SymKey::Kind::PowerLog) {
            RatFun main = c.derivative() + c * xinv * Scalar(key.cls);
            fn_add(out, key, main);
            if (key.logpow > 0) {
                SymKey low = key;
                low.logpow--;
                fn_add(out, low,
                       c * xinv * Scalar(static_cast<long>(key.logpow)));
            }
            continue;
        }
        fn_add(out, key, c.derivative());
        if (key.deriv + 1 < n) {
            SymKey up = key;
            up.deriv++;
            fn_add(out, up, c);
            continue;
        }
        // reduce d^N Psi through the family ODE
        if (cs_.family() == ConditionSet::Family::Bessel) {
            SymKey base = key;
            base.deriv = 0;
            fn_add(out, base, c * RatFun::constant(var_, eigen_[key.point]));
            for (unsigned k = 0; k < n; ++k) {
                SymKey lk = key;
                lk.deriv = k;
                fn_add(out, lk, -(c * bessel_low_[k]));
            }
        } else {
            SymKey base = key;
            base.deriv = 0;
            fn_add(out, base,
                   c * airy_y_[key.point] * airy_rule_.y_coeff);
            for (unsigned k = 0; k < n; ++k) {
                if (airy_rule_.low_coeff[k].is_zero()) continue;
                SymKey lk = key;
                lk.deriv = k;
                fn_add(out, lk,
                       c * RatFun::constant(var_, airy_rule_.low_coeff[k]));
            }
        }
    }
    return out;
}

KernelFn KernelContext::apply(const DiffOp& op, const KernelFn& f) const {
    KernelFn out;
    KernelFn cur = f;
    for (size_t k = 0; k < op.coeffs().size(); ++k) {
        if (!op.coeffs()[k].is_zero())
            for (const auto& [key, c] : cur)
                fn_add(out, key, op.coeffs()[k] * c);
        if (k + 1 < op.coeffs().size()) cur = derivative(cur);
    }
    return out;
}

KernelFn KernelContext::rotate(const KernelFn& f) const {
    Scalar eps = Scalar::zeta(field());
    UniPoly ex = UniPoly::monomial(var_, eps, 1);
    KernelFn out;
    for (const auto& [key, c] : f) {
        if (key.kind != SymKey::Kind::Psi)
            throw DomainError("rotation implemented for Psi symbols only");
        SymKey nk = key;
        nk.sheet = (key.sheet + 1) % cs_.n();
        Scalar phase = Scalar(1);
        for (unsigned i = 0; i < key.deriv; ++i) phase *= eps;
        fn_add(out, nk, c.compose_poly(ex) * phase);
    }
    return out;
}

namespace {

// d/dz^k Psi(x,z) expanded over d/dx^m Psi(x,z), m < N, with BiRatFun
// coefficients; the Bessel relations D_x Psi = D_z Psi and L Psi = z^N Psi
// drive the recursion (proof of the rationalization lemma).
std::vector<std::vector<BiRatFun>> bessel_z_jets(const BesselParam& p,
                                                 unsigned kmax) {
    unsigned n = p.n();
    DiffOp l = bessel_op(p, "x");
    std::vector<BiRatFun> low;  // coefficients of L below the top
    for (unsigned k = 0; k < n; ++k) low.push_back(biratfun_from_x(l.coeff(k)));
    BiRatFun zn = BiRatFun::of(BiPoly::monomial(Scalar(1), 0, n));
    BiRatFun x1 = BiRatFun::of(BiPoly::monomial(Scalar(1), 1, 0));
    BiRatFun zinv(BiPoly::constant(Scalar(1)), BiPoly::monomial(Scalar(1), 0, 1));

    std::vector<std::vector<BiRatFun>> jets(kmax + 1,
                                            std::vector<BiRatFun>(n, BiRatFun()));
    jets[0][0] = BiRatFun::constant(Scalar(1));
    for (unsigned k = 0; k < kmax; ++k) {
        auto& cur = jets[k];
        auto& nxt = jets[k + 1];
        for (unsigned m = 0; m < n; ++m) {
            if (cur[m].is_zero()) continue;
            // d/dz(c * d^m Psi) = c_z d^m Psi + (c/z)(x d^{m+1} Psi + m d^m Psi)
            nxt[m] = nxt[m] + cur[m].dz() +
                     cur[m] * zinv * BiRatFun::constant(Scalar(static_cast<long>(m)));
            BiRatFun carry = cur[m] * zinv * x1;
            if (m + 1 < n) {
                nxt[m + 1] = nxt[m + 1] + carry;
            } else {
                // d^N Psi = z^N Psi - sum low_k d^k Psi
                nxt[0] = nxt[0] + carry * zn;
                for (unsigned j = 0; j < n; ++j)
                    if (!low[j].is_zero()) nxt[j] = nxt[j] - carry * low[j];
            }
        }
    }
    return jets;
}

// sheet offset s with eps^s * rep == lam
unsigned sheet_offset(const FieldPtr& f, const Scalar& rep, const Scalar& lam) {
    Scalar cur = rep;
    Scalar eps = Scalar::zeta(f);
    for (unsigned s = 0; s < f->n(); ++s) {
        if (cur == lam) return s;
        cur *= eps;
    }
    throw DomainError("support point is not on the sheet orbit of its group");
}

}  // namespace

std::vector<KernelFn> materialize_kernel(const KernelContext& ctx) {
    const ConditionSet& cs = ctx.conditions();
    const std::string& var = ctx.var();
    unsigned n = cs.n();
    std::vector<KernelFn> out;

    // zero-supported families first
    for (const auto& c : cs.conditions()) {
        if (c.support != Condition::Support::Zero) continue;
        unsigned j0 = 0;
        for (const auto& t : c.terms) j0 = std::max(j0, t.j);
        for (unsigned l = 0; l <= j0; ++l) {
            KernelFn f;
            for (const auto& t : c.terms) {
                if (t.j < l) continue;
                // d_y^l of b x^v y^j at y = ln x: falling factorial j...(j-l+1)
                Scalar fac(1);
                for (unsigned u = 0; u < l; ++u)
                    fac *= Scalar(static_cast<long>(t.j - u));
                Rational v = cs.bessel().beta()[t.i - 1] +
                             Rational(static_cast<long>(t.k) * n);
                Rational rep = class_rep(v);
                Rational sh(v - rep);
                sh.canonicalize();
                long shift = mpz_class(sh.get_num()).get_si();
                SymKey key;
                key.kind = SymKey::Kind::PowerLog;
                key.cls = rep;
                key.logpow = t.j - l;
                fn_add(f, key, xpow(var, shift) * (t.b * fac));
            }
            if (f.empty()) throw DependentKernel("zero condition collapsed");
            out.push_back(std::move(f));
        }
    }

    // point groups
    const auto& groups = cs.point_groups();
    for (size_t gi = 0; gi < groups.size(); ++gi) {
        const auto& g = groups[gi];
        if (cs.family() == ConditionSet::Family::Airy) {
            for (size_t ci : g.condition_indices) {
                const auto& c = cs.conditions()[ci];
                unsigned off = sheet_offset(cs.field(), g.lambda,
                                            Scalar(c.lambda));
                for (unsigned sheet = 0; sheet < n; ++sheet) {
                    // sum_k a_k d_y^k Psi on this sheet
                    KernelFn base;
                    SymKey key;
                    key.kind = SymKey::Kind::Psi;
                    key.point = static_cast<unsigned>(gi);
                    key.sheet = (sheet + off) % n;
                    key.deriv = 0;
                    fn_add(base, key, RatFun::constant(var, Scalar(1)));
                    KernelFn f, cur = base;
                    for (size_t k = 0; k < c.coeffs.size(); ++k) {
                        if (!c.coeffs[k].is_zero())
                            for (const auto& [kk, cc] : cur)
                                fn_add(f, kk, cc * c.coeffs[k]);
                        if (k + 1 < c.coeffs.size()) cur = ctx.derivative(cur);
                    }
                    if (f.empty())
                        throw DependentKernel("point condition collapsed");
                    out.push_back(std::move(f));
                }
            }
            continue;
        }
        // Bessel: dz-jets over dx-symbols, then z -> eps^i lambda
        auto jets = bessel_z_jets(cs.bessel(), g.max_jet);
        Scalar eps = Scalar::zeta(cs.field());
        for (size_t ci : g.condition_indices) {
            const auto& c = cs.conditions()[ci];
            unsigned off = sheet_offset(cs.field(), g.lambda, Scalar(c.lambda));
            for (unsigned i = 0; i < n; ++i) {
                Scalar mu = Scalar(c.lambda);
                for (unsigned u = 0; u < i; ++u) mu *= eps;
                Scalar phase(1);  // eps^{k i} accumulates per k
                KernelFn f;
                for (size_t k = 0; k < c.coeffs.size(); ++k) {
                    if (!c.coeffs[k].is_zero()) {
                        for (unsigned m = 0; m < n; ++m) {
                            if (jets[k][m].is_zero()) continue;
                            SymKey key;
                            key.kind = SymKey::Kind::Psi;
                            key.point = static_cast<unsigned>(gi);
                            key.sheet = (i + off) % n;
                            key.deriv = m;
                            fn_add(f, key,
                                   jets[k][m].eval_z(mu, var) *
                                       (c.coeffs[k] * phase));
                        }
                    }
                    phase *= Scalar::zeta_pow(cs.field(), i);
                }
                if (f.empty()) throw DependentKernel("point condition collapsed");
                out.push_back(std::move(f));
            }
        }
    }
    return out;
}

namespace {

struct DetMono {
    Rational cls = 0;
    unsigned logpow = 0;
    std::vector<std::array<unsigned, 3>> psis;  // sorted (point, sheet, deriv)

    bool operator<(const DetMono& o) const {
        if (cls != o.cls) return cls < o.cls;
        if (logpow != o.logpow) return logpow < o.logpow;
        return psis < o.psis;
    }
    bool operator==(const DetMono& o) const {
        return cls == o.cls && logpow == o.logpow && psis == o.psis;
    }
};

using DetElem = std::map<DetMono, RatFun>;

void det_add(DetElem& e, const DetMono& m, const RatFun& c) {
    if (c.is_zero()) return;
    auto it = e.find(m);
    if (it == e.end()) {
        e.emplace(m, c);
        return;
    }
    it->second = it->second + c;
    if (it->second.is_zero()) e.erase(it);
}

DetElem det_from_fn(const KernelFn& f, const std::string& var) {
    DetElem e;
    (void)var;
    for (const auto& [key, c] : f) {
        DetMono m;
        if (key.kind == SymKey::Kind::PowerLog) {
            m.cls = key.cls;
            m.logpow = key.logpow;
        } else {
            m.psis = {{key.point, key.sheet, key.deriv}};
        }
        det_add(e, m, c);
    }
    return e;
}

DetElem det_mul(const DetElem& a, const DetElem& b, const std::string& var) {
    DetElem out;
    for (const auto& [ma, ca] : a)
        for (const auto& [mb, cb] : b) {
            DetMono m;
            Rational sum = ma.cls + mb.cls;
            m.cls = class_rep(sum);
            Rational sh = sum - m.cls;
            m.logpow = ma.logpow + mb.logpow;
            m.psis = ma.psis;
            m.psis.insert(m.psis.end(), mb.psis.begin(), mb.psis.end());
            std::sort(m.psis.begin(), m.psis.end());
            RatFun c = ca * cb;
            long shift = mpz_class(sh.get_num() / sh.get_den()).get_si();
            if (shift != 0) c = c * xpow(var, shift);
            det_add(out, m, c);
        }
    return out;
}

}  // namespace

std::pair<DiffOp, WronskianCertificate> wronskian_op(
    const KernelContext& ctx, const std::vector<KernelFn>& basis) {
    const std::string& var = ctx.var();
    size_t n = basis.size();
    WronskianCertificate cert;
    if (n == 0) return {DiffOp::identity(var), cert};

    // derivative rows 0..n of each basis function
    std::vector<std::vector<DetElem>> entry(n + 1, std::vector<DetElem>(n));
    for (size_t j = 0; j < n; ++j) {
        KernelFn cur = basis[j];
        for (size_t r = 0; r <= n; ++r) {
            entry[r][j] = det_from_fn(cur, var);
            if (r < n) cur = ctx.derivative(cur);
        }
    }

    // DP over columns: minors over every (n)-subset of the n+1 rows
    std::map<unsigned long, DetElem> dp;
    dp[0] = DetElem{{DetMono{}, RatFun::constant(var, Scalar(1))}};
    for (size_t j = 0; j < n; ++j) {
        std::map<unsigned long, DetElem> nxt;
        for (const auto& [mask, val] : dp) {
            for (size_t r = 0; r <= n; ++r) {
                if (mask & (1ul << r)) continue;
                if (entry[r][j].empty()) continue;
                unsigned below = 0;
                for (size_t q = 0; q < r; ++q)
                    if (mask & (1ul << q)) ++below;
                // sign (-1)^{below + j}
                DetElem term = det_mul(val, entry[r][j], var);
                if ((below + j) % 2 == 1)
                    for (auto& [m, c] : term) c = -c;
                unsigned long nm = mask | (1ul << r);
                auto& slot = nxt[nm];
                for (const auto& [m, c] : term) det_add(slot, m, c);
            }
        }
        dp = std::move(nxt);
    }

    unsigned long full = (1ul << (n + 1)) - 1;
    auto minor_of = [&](size_t k) -> const DetElem& {
        static DetElem empty;
        auto it = dp.find(full & ~(1ul << k));
        return it == dp.end() ? empty : it->second;
    };

    const DetElem& den = minor_of(n);
    if (den.empty())
        throw DependentKernel("Wronskian of the kernel basis vanishes");
    cert.denominator_monomials = den.size();
    const auto& ref = *den.begin();

    std::vector<RatFun> coeffs(n + 1, RatFun(var));
    for (size_t k = 0; k <= n; ++k) {
        const DetElem& num = minor_of(k);
        RatFun ratio(var);
        if (!num.empty()) {
            auto it = num.find(ref.first);
            if (it != num.end()) ratio = it->second / ref.second;
            // exact proportionality check: num == ratio * den
            DetElem check;
            for (const auto& [m, c] : den) det_add(check, m, c * ratio);
            if (!(check == num))
                throw RationalizationFailure(
                    "Wronskian cofactor is not rational over the denominator "
                    "(non-invariant kernel?)");
            cert.coefficient_checks += den.size();
        }
        if ((n + k) % 2 == 1) ratio = -ratio;
        coeffs[k] = ratio;
    }
    return {DiffOp(var, std::move(coeffs)), cert};
}

UniPoly g_from_conditions(const ConditionSet& cs, const std::string& var) {
    UniPoly g = UniPoly::monomial(var, Scalar(1), cs.n_zero());
    UniPoly zn = UniPoly::monomial(var, Scalar(1), cs.n());
    for (const auto& grp : cs.point_groups()) {
        UniPoly factor = zn - UniPoly::constant(var, grp.lambda_n);
        for (unsigned i = 0; i < grp.n_conditions; ++i) g = g * factor;
    }
    return g;
}

MinH min_h_exponents(const ConditionSet& cs) {
    MinH r;
    if (cs.empty()) {
        r.d0 = 1;
        r.hhat = UniPoly::monomial("t", Scalar(1), 1);
        return r;
    }
    if (cs.family() == ConditionSet::Family::Bessel) {
        long d0 = 0;
        bool any = false;
        for (const auto& c : cs.conditions()) {
            if (c.support != Condition::Support::Zero) continue;
            any = true;
            // per k: j(k) = max log power among terms at that value
            std::map<Rational, unsigned> jk;
            for (const auto& t : c.terms) {
                Rational v = cs.bessel().beta()[t.i - 1] +
                             Rational(static_cast<long>(t.k) * cs.n());
                auto it = jk.find(v);
                if (it == jk.end())
                    jk.emplace(v, t.j);
                else
                    it->second = std::max(it->second, t.j);
            }
            for (const auto& [v, j] : jk) {
                auto ps = rep_exponents(cs.bessel(), v);
                if (j >= ps.size())
                    throw DomainError("log power exceeds multiplicity");
                d0 = std::max(d0, ps[j] + 1);
            }
        }
        r.d0 = any ? static_cast<unsigned>(d0) : 0;
    } else {
        r.d0 = 0;
    }
    UniPoly h = UniPoly::monomial("t", Scalar(1), r.d0);
    UniPoly t = UniPoly::monomial("t", Scalar(1), 1);
    for (const auto& g : cs.point_groups()) {
        unsigned dj = g.max_jet + 1;
        r.dj.push_back(dj);
        UniPoly factor = t - UniPoly::constant("t", g.lambda_n);
        for (unsigned i = 0; i < dj; ++i) h = h * factor;
    }
    if (h.deg() == 0) h = t;  // degenerate: no conditions at all
    r.hhat = h;
    return r;
}

bool zn_check(const ConditionSet& cs) {
    if (cs.family() == ConditionSet::Family::Airy) return true;
    if (cs.n() == 1) return true;
    for (const auto& c : cs.conditions()) {
        if (c.support != Condition::Support::Zero) continue;
        // all term values must lie in one congruence class mod N
        const auto& beta = cs.bessel().beta();
        for (size_t a = 0; a + 1 < c.terms.size(); ++a) {
            Rational va = beta[c.terms[a].i - 1];
            Rational vb = beta[c.terms[a + 1].i - 1];
            Rational d(va - vb);
            d.canonicalize();
            if (!(d.get_den() == 1 &&
                  d.get_num() % static_cast<long>(cs.n()) == 0))
                return false;
        }
    }
    return true;
}

bool rotation_closed(const KernelContext& ctx,
                     const std::vector<KernelFn>& basis) {
    // coordinates over (symbol, x-power) after clearing denominators
    UniPoly lcm = UniPoly::constant(ctx.var(), Scalar(1));
    for (const auto& f : basis)
        for (const auto& [k, c] : f) lcm = poly_lcm(lcm, c.den());
    std::vector<KernelFn> all = basis;
    for (const auto& f : basis) all.push_back(ctx.rotate(f));
    for (const auto& f : all)
        for (const auto& [k, c] : f) lcm = poly_lcm(lcm, c.den());

    std::map<std::pair<SymKey, size_t>, size_t> index;
    auto coords = [&](const KernelFn& f) {
        std::vector<std::pair<size_t, Scalar>> sparse;
        for (const auto& [k, c] : f) {
            UniPoly num = (c * RatFun::of(lcm)).to_polynomial();
            for (size_t p = 0; p < num.coeffs().size(); ++p) {
                if (num.coeffs()[p].is_zero()) continue;
                auto key = std::make_pair(k, p);
                auto it = index.find(key);
                size_t id;
                if (it == index.end()) {
                    id = index.size();
                    index.emplace(key, id);
                } else {
                    id = it->second;
                }
                sparse.emplace_back(id, num.coeffs()[p]);
            }
        }
        return sparse;
    };
    std::vector<std::vector<std::pair<size_t, Scalar>>> rows;
    for (const auto& f : all) rows.push_back(coords(f));
    size_t dim = index.size();
    Matrix m;
    for (size_t i = 0; i < basis.size(); ++i) {
        std::vector<Scalar> row(dim, Scalar(0));
        for (const auto& [id, v] : rows[i]) row[id] = v;
        m.push_back(std::move(row));
    }
    for (size_t i = basis.size(); i < all.size(); ++i) {
        std::vector<Scalar> w(dim, Scalar(0));
        for (const auto& [id, v] : rows[i]) w[id] = v;
        if (!in_row_span(m, w)) return false;
    }
    return true;
}

}  // namespace darboux
