#include "darboux/poly.hpp"

#include <algorithm>

namespace darboux {

UniPoly UniPoly::constant(std::string var, const Scalar& s) {
    UniPoly p(std::move(var));
    if (!s.is_zero()) p.c_ = {s};
    return p;
}

UniPoly UniPoly::monomial(std::string var, const Scalar& c, size_t k) {
    UniPoly p(std::move(var));
    if (!c.is_zero()) {
        p.c_.assign(k + 1, Scalar(0));
        p.c_[k] = c;
    }
    return p;
}

Scalar UniPoly::lead() const {
    if (c_.empty()) throw DomainError("lead of zero polynomial");
    return c_.back();
}

UniPoly UniPoly::operator-() const {
    UniPoly r(var_);
    r.c_ = c_;
    for (auto& x : r.c_) x = -x;
    return r;
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
    UniPoly r(var_);
    r.c_.resize(std::max(c_.size(), o.c_.size()), Scalar(0));
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r.c_[i] += o.c_[i];
    r.trim();
    return r;
}

UniPoly UniPoly::operator-(const UniPoly& o) const { return *this + (-o); }

UniPoly UniPoly::operator*(const UniPoly& o) const {
    UniPoly r(var_);
    if (c_.empty() || o.c_.empty()) return r;
    r.c_.assign(c_.size() + o.c_.size() - 1, Scalar(0));
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (size_t j = 0; j < o.c_.size(); ++j)
            r.c_[i + j] += c_[i] * o.c_[j];
    }
    r.trim();
    return r;
}

UniPoly UniPoly::operator*(const Scalar& s) const {
    UniPoly r(var_);
    if (s.is_zero()) return r;
    r.c_ = c_;
    for (auto& x : r.c_) x = x * s;
    return r;
}

bool UniPoly::operator==(const UniPoly& o) const { return c_ == o.c_; }

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& d) const {
    if (d.is_zero()) throw DomainError("polynomial division by zero");
    UniPoly q(var_), r = *this;
    Scalar dl = d.lead();
    while (!r.is_zero() && r.deg() >= d.deg()) {
        Scalar c = r.lead() / dl;
        size_t shift = static_cast<size_t>(r.deg() - d.deg());
        q = q + UniPoly::monomial(var_, c, shift);
        r = r - d * UniPoly::monomial(var_, c, shift);
    }
    return {q, r};
}

UniPoly UniPoly::divexact(const UniPoly& d) const {
    auto [q, r] = divmod(d);
    if (!r.is_zero()) throw DomainError("polynomial division not exact");
    return q;
}

UniPoly UniPoly::derivative() const {
    UniPoly r(var_);
    if (c_.size() <= 1) return r;
    r.c_.resize(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i)
        r.c_[i - 1] = c_[i] * Scalar(static_cast<long>(i));
    r.trim();
    return r;
}

Scalar UniPoly::eval(const Scalar& x) const {
    Scalar acc(0);
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

UniPoly UniPoly::compose(const UniPoly& inner) const {
    UniPoly acc(inner.var());
    for (size_t i = c_.size(); i-- > 0;)
        acc = acc * inner + UniPoly::constant(inner.var(), c_[i]);
    return acc;
}

UniPoly UniPoly::monic() const {
    if (is_zero()) throw DomainError("monic of zero polynomial");
    return *this * lead().inverse();
}

UniPoly UniPoly::with_var(const std::string& v) const {
    UniPoly r(v);
    r.c_ = c_;
    return r;
}

bool UniPoly::supported_on_multiples(unsigned n) const {
    for (size_t i = 0; i < c_.size(); ++i)
        if (i % n != 0 && !c_[i].is_zero()) return false;
    return true;
}

UniPoly UniPoly::decompress(unsigned n, const std::string& new_var) const {
    UniPoly r(new_var);
    if (c_.empty()) return r;
    r.c_.assign((c_.size() - 1) / n + 1, Scalar(0));
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        if (i % n != 0) throw DomainError("polynomial not supported on multiples");
        r.c_[i / n] = c_[i];
    }
    return r;
}

UniPoly UniPoly::compress(unsigned n, const std::string& new_var) const {
    UniPoly r(new_var);
    if (c_.empty()) return r;
    r.c_.assign(n * (c_.size() - 1) + 1, Scalar(0));
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i * n] = c_[i];
    r.trim();
    return r;
}

std::string UniPoly::str() const {
    if (c_.empty()) return "0";
    std::string out;
    for (size_t i = c_.size(); i-- > 0;) {
        if (c_[i].is_zero()) continue;
        if (!out.empty()) out += " + ";
        out += "(" + c_[i].str() + ")";
        if (i == 1) out += "*" + var_;
        if (i > 1) out += "*" + var_ + "^" + std::to_string(i);
    }
    return out.empty() ? "0" : out;
}

UniPoly poly_gcd(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() && b.is_zero())
        throw DomainError("gcd(0,0) undefined");
    // monic-normalized Euclid; raw remainder sequences explode over Q
    UniPoly r0 = a, r1 = b;
    if (!r0.is_zero()) r0 = r0.monic();
    if (!r1.is_zero()) r1 = r1.monic();
    while (!r1.is_zero()) {
        auto [q, r] = r0.divmod(r1);
        (void)q;
        r0 = r1;
        r1 = r.is_zero() ? r : r.monic();
    }
    return r0.monic();
}

UniPoly poly_lcm(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) throw DomainError("lcm with zero");
    return (a * b).divexact(poly_gcd(a, b)).monic();
}

RatFun::RatFun(const UniPoly& num, const UniPoly& den) {
    if (den.is_zero()) throw DomainError("rational function with zero denominator");
    if (num.is_zero()) {
        num_ = UniPoly(num.var());
        den_ = UniPoly::constant(num.var(), Scalar(1));
        return;
    }
    UniPoly g = poly_gcd(num, den);
    UniPoly n = num.divexact(g), d = den.divexact(g);
    Scalar dl = d.lead();
    num_ = n * dl.inverse();
    den_ = d * dl.inverse();
}

UniPoly RatFun::to_polynomial() const {
    if (!is_polynomial())
        throw DomainError("rational function is not a polynomial");
    return num_;
}

RatFun RatFun::operator-() const {
    RatFun r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

RatFun RatFun::operator+(const RatFun& o) const {
    if (den_ == o.den_) return RatFun(num_ + o.num_, den_);
    return RatFun(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFun RatFun::operator-(const RatFun& o) const { return *this + (-o); }

RatFun RatFun::operator*(const RatFun& o) const {
    return RatFun(num_ * o.num_, den_ * o.den_);
}

RatFun RatFun::operator/(const RatFun& o) const {
    if (o.is_zero()) throw DomainError("rational function division by zero");
    return RatFun(num_ * o.den_, den_ * o.num_);
}

RatFun RatFun::operator*(const Scalar& s) const {
    RatFun r;
    r.num_ = num_ * s;
    r.den_ = r.num_.is_zero() ? UniPoly::constant(var(), Scalar(1)) : den_;
    return r;
}

RatFun RatFun::inverse() const {
    if (is_zero()) throw DomainError("inverse of zero");
    return RatFun(den_, num_);
}

bool RatFun::operator==(const RatFun& o) const {
    return num_ == o.num_ && den_ == o.den_;
}

RatFun RatFun::derivative() const {
    return RatFun(num_.derivative() * den_ - num_ * den_.derivative(),
                  den_ * den_);
}

std::optional<Scalar> RatFun::eval(const Scalar& x) const {
    Scalar d = den_.eval(x);
    if (d.is_zero()) return std::nullopt;
    return num_.eval(x) / d;
}

RatFun RatFun::compose_poly(const UniPoly& inner) const {
    return RatFun(num_.compose(inner), den_.compose(inner));
}

std::string RatFun::str() const {
    if (is_polynomial()) return num_.str();
    return "(" + num_.str() + ") / (" + den_.str() + ")";
}

}  // namespace darboux
