#include "darboux/diffop.hpp"

#include <algorithm>

namespace darboux {

DiffOp DiffOp::identity(const std::string& var) {
    return DiffOp(var, {RatFun::constant(var, Scalar(1))});
}

DiffOp DiffOp::d(const std::string& var) {
    return DiffOp(var, {RatFun(var), RatFun::constant(var, Scalar(1))});
}

DiffOp DiffOp::mul_by(const RatFun& f) {
    return DiffOp(f.var(), {f});
}

DiffOp DiffOp::euler(const std::string& var) {
    return DiffOp(var, {RatFun(var), RatFun::of(UniPoly::monomial(var, Scalar(1), 1))});
}

RatFun DiffOp::lead() const {
    if (c_.empty()) throw DomainError("lead of zero operator");
    return c_.back();
}

bool DiffOp::is_monic() const {
    return !c_.empty() && c_.back() == RatFun::constant(var_, Scalar(1));
}

DiffOp DiffOp::operator-() const {
    DiffOp r(var_);
    r.c_ = c_;
    for (auto& f : r.c_) f = -f;
    return r;
}

DiffOp DiffOp::operator+(const DiffOp& o) const {
    DiffOp r(var_);
    r.c_.resize(std::max(c_.size(), o.c_.size()), RatFun(var_));
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = r.c_[i] + c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r.c_[i] = r.c_[i] + o.c_[i];
    r.trim();
    return r;
}

DiffOp DiffOp::operator-(const DiffOp& o) const { return *this + (-o); }

DiffOp DiffOp::operator*(const DiffOp& o) const { return op_mul(*this, o); }

DiffOp DiffOp::operator*(const Scalar& s) const {
    DiffOp r(var_);
    if (s.is_zero()) return r;
    r.c_ = c_;
    for (auto& f : r.c_) f = f * s;
    return r;
}

bool DiffOp::operator==(const DiffOp& o) const { return c_ == o.c_; }

DiffOp DiffOp::pow(unsigned k) const {
    DiffOp acc = identity(var_);
    for (unsigned i = 0; i < k; ++i) acc = op_mul(acc, *this);
    return acc;
}

DiffOp DiffOp::monic() const {
    if (is_zero()) throw DomainError("monic of zero operator");
    RatFun inv = lead().inverse();
    DiffOp r(var_);
    r.c_ = c_;
    for (auto& f : r.c_) f = f * inv;
    return r;
}

DiffOp DiffOp::with_var(const std::string& v) const {
    DiffOp r(v);
    for (const auto& f : c_)
        r.c_.push_back(RatFun(f.num().with_var(v), f.den().with_var(v)));
    return r;
}

DiffOp DiffOp::sign_flip() const {
    DiffOp r(var_);
    UniPoly mx = UniPoly::monomial(var_, Scalar(-1), 1);
    for (size_t k = 0; k < c_.size(); ++k) {
        RatFun f = c_[k].compose_poly(mx);
        if (k % 2 == 1) f = -f;
        r.c_.push_back(f);
    }
    r.trim();
    return r;
}

std::string DiffOp::str() const {
    if (c_.empty()) return "0";
    std::string out;
    for (size_t k = c_.size(); k-- > 0;) {
        if (c_[k].is_zero()) continue;
        if (!out.empty()) out += " + ";
        out += "[" + c_[k].str() + "]";
        if (k == 1) out += "*d" + var_;
        if (k > 1) out += "*d" + var_ + "^" + std::to_string(k);
    }
    return out.empty() ? "0" : out;
}

DiffOp op_mul(const DiffOp& a, const DiffOp& b) {
    if (a.var() != b.var()) throw DomainError("operator variable mismatch");
    const std::string& var = a.var();
    if (a.is_zero() || b.is_zero()) return DiffOp::zero(var);
    // D^i c(x) = sum_j binom(i,j) c^{(j)} D^{i-j}; the derivative chains of
    // b's coefficients are shared across all rows of a
    size_t ra = a.coeffs().size(), rb = b.coeffs().size();
    size_t maxd = ra - 1;
    std::vector<std::vector<RatFun>> chain(rb);
    for (size_t k = 0; k < rb; ++k) {
        if (b.coeffs()[k].is_zero()) continue;
        chain[k].push_back(b.coeffs()[k]);
        for (size_t j = 1; j <= maxd; ++j) {
            if (chain[k].back().is_zero()) break;
            chain[k].push_back(chain[k].back().derivative());
        }
    }
    std::vector<RatFun> out(ra + rb - 1, RatFun(var));
    for (size_t i = 0; i < ra; ++i) {
        if (a.coeffs()[i].is_zero()) continue;
        for (size_t k = 0; k < rb; ++k) {
            if (b.coeffs()[k].is_zero()) continue;
            Rational binom(1);
            for (size_t j = 0; j <= i; ++j) {
                if (j < chain[k].size() && !chain[k][j].is_zero())
                    out[i - j + k] =
                        out[i - j + k] +
                        a.coeffs()[i] * chain[k][j] * Scalar(binom);
                if (j == i) break;
                binom = binom * Rational(static_cast<long>(i - j)) /
                        Rational(static_cast<long>(j + 1));
            }
        }
    }
    return DiffOp(var, std::move(out));
}

DiffOp op_adjoint(const DiffOp& a) {
    const std::string& var = a.var();
    DiffOp acc = DiffOp::zero(var);
    DiffOp md = -DiffOp::d(var);
    for (size_t k = 0; k < a.coeffs().size(); ++k) {
        if (a.coeffs()[k].is_zero()) continue;
        acc = acc + op_mul(md.pow(static_cast<unsigned>(k)),
                           DiffOp::mul_by(a.coeffs()[k]));
    }
    return acc;
}

std::pair<DiffOp, DiffOp> op_right_divide(const DiffOp& a, const DiffOp& b) {
    if (b.is_zero()) throw DomainError("operator division by zero");
    const std::string& var = a.var();
    DiffOp q = DiffOp::zero(var), r = a;
    while (!r.is_zero() && r.ord() >= b.ord()) {
        size_t k = static_cast<size_t>(r.ord() - b.ord());
        RatFun c = r.lead() / b.lead();
        std::vector<RatFun> mono(k + 1, RatFun(var));
        mono[k] = c;
        DiffOp term(var, std::move(mono));
        q = q + term;
        r = r - op_mul(term, b);
    }
    return {q, r};
}

DiffOp op_of_poly(const UniPoly& h, const DiffOp& l) {
    const std::string& var = l.var();
    DiffOp acc = DiffOp::zero(var);
    for (size_t i = h.coeffs().size(); i-- > 0;) {
        acc = op_mul(acc, l);
        if (!h.coeffs()[i].is_zero())
            acc = acc + DiffOp::identity(var) * h.coeffs()[i];
    }
    return acc;
}

namespace {

// Signed Stirling numbers of the first kind: (D)_k = sum s(k,m) D^m,
// falling factorial D(D-1)...(D-k+1).
std::vector<std::vector<Rational>> stirling_first(size_t n) {
    std::vector<std::vector<Rational>> s(n + 1);
    s[0] = {Rational(1)};
    for (size_t k = 1; k <= n; ++k) {
        s[k].assign(k + 1, Rational(0));
        for (size_t m = 0; m < k; ++m) {
            // [D]_k = [D]_{k-1} * (D - (k-1))
            s[k][m + 1] += s[k - 1][m];
            s[k][m] -= s[k - 1][m] * Rational(static_cast<long>(k - 1));
        }
    }
    return s;
}

// Stirling numbers of the second kind: D^k = sum S(k,m) x^m d^m.
std::vector<std::vector<Rational>> stirling_second(size_t n) {
    std::vector<std::vector<Rational>> s(n + 1);
    s[0] = {Rational(1)};
    for (size_t k = 1; k <= n; ++k) {
        s[k].assign(k + 1, Rational(0));
        for (size_t m = 1; m <= k; ++m)
            s[k][m] = (m < k ? s[k - 1][m] * Rational(static_cast<long>(m))
                             : Rational(0)) +
                      s[k - 1][m - 1];
    }
    return s;
}

}  // namespace

DFormOp to_dform(const DiffOp& a, unsigned n) {
    if (a.is_zero()) throw NotZNHomogeneous("zero operator has no D-form");
    const std::string& var = a.var();
    long ord = a.ord();
    // x^shift * A = sum_k c_k(x) x^{shift-k} [D]_k; collect over D^m.
    long shift = ord;
    auto s1 = stirling_first(static_cast<size_t>(ord));
    std::vector<RatFun> q(static_cast<size_t>(ord) + 1, RatFun(var));
    UniPoly x1 = UniPoly::monomial(var, Scalar(1), 1);
    for (long k = 0; k <= ord; ++k) {
        RatFun ck = a.coeff(static_cast<size_t>(k));
        if (ck.is_zero()) continue;
        // multiply by x^{shift-k}
        RatFun xs = shift >= k
                        ? RatFun::of(UniPoly::monomial(var, Scalar(1),
                                                       static_cast<size_t>(shift - k)))
                        : RatFun(UniPoly::constant(var, Scalar(1)),
                                 UniPoly::monomial(var, Scalar(1),
                                                   static_cast<size_t>(k - shift)));
        RatFun base = ck * xs;
        for (long m = 0; m <= k; ++m) {
            Rational sc = s1[static_cast<size_t>(k)][static_cast<size_t>(m)];
            if (sc == 0) continue;
            q[static_cast<size_t>(m)] = q[static_cast<size_t>(m)] + base * Scalar(sc);
        }
    }
    // Each q_m must be a rational function of t = x^N.
    DFormOp f;
    f.var = var;
    f.n_root = n;
    f.shift = shift;
    f.p.reserve(q.size());
    for (auto& qm : q) {
        if (qm.is_zero()) {
            f.p.push_back(RatFun("t"));
            continue;
        }
        const UniPoly& num = qm.num();
        const UniPoly& den = qm.den();
        if (!num.supported_on_multiples(n) || !den.supported_on_multiples(n))
            throw NotZNHomogeneous(
                "operator mixes x-powers not congruent mod N");
        f.p.push_back(RatFun(num.decompress(n, "t"), den.decompress(n, "t")));
    }
    if (!(f.p.back() == RatFun::constant("t", Scalar(1))))
        throw NotZNHomogeneous("leading D-form coefficient is not 1");
    return f;
}

DiffOp from_dform(const DFormOp& f) {
    const std::string& var = f.var;
    size_t ord = f.p.size() - 1;
    auto s2 = stirling_second(ord);
    DiffOp acc = DiffOp::zero(var);
    for (size_t k = 0; k < f.p.size(); ++k) {
        if (f.p[k].is_zero()) continue;
        RatFun ck(f.p[k].num().compress(f.n_root, var),
                  f.p[k].den().compress(f.n_root, var));
        for (size_t m = 0; m <= k; ++m) {
            Rational sc = s2[k][m];
            if (sc == 0) continue;
            // x^{m-shift} c_k(x^N) S(k,m) d^m
            RatFun xs = static_cast<long>(m) >= f.shift
                            ? RatFun::of(UniPoly::monomial(
                                  var, Scalar(1),
                                  static_cast<size_t>(static_cast<long>(m) - f.shift)))
                            : RatFun(UniPoly::constant(var, Scalar(1)),
                                     UniPoly::monomial(
                                         var, Scalar(1),
                                         static_cast<size_t>(f.shift - static_cast<long>(m))));
            std::vector<RatFun> mono(m + 1, RatFun(var));
            mono[m] = ck * xs * Scalar(sc);
            acc = acc + DiffOp(var, std::move(mono));
        }
    }
    return acc;
}

UniPoly dform_denominator(const DFormOp& f) {
    UniPoly lcm = UniPoly::constant("t", Scalar(1));
    for (const auto& p : f.p) {
        if (p.is_zero()) continue;
        lcm = poly_lcm(lcm, p.den());
    }
    return lcm;
}

}  // namespace darboux
