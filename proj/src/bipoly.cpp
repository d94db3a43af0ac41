#include "darboux/bipoly.hpp"

#include <algorithm>

namespace darboux {

void BiPoly::trim() {
    for (auto& row : c_)
        while (!row.empty() && row.back().is_zero()) row.pop_back();
    while (!c_.empty() && c_.back().empty()) c_.pop_back();
}

BiPoly BiPoly::constant(const Scalar& s) { return monomial(s, 0, 0); }

BiPoly BiPoly::monomial(const Scalar& s, size_t xdeg, size_t zdeg) {
    BiPoly p;
    if (s.is_zero()) return p;
    p.c_.resize(xdeg + 1);
    p.c_[xdeg].assign(zdeg + 1, Scalar(0));
    p.c_[xdeg][zdeg] = s;
    return p;
}

BiPoly BiPoly::from_x(const UniPoly& p) {
    BiPoly r;
    for (size_t i = 0; i < p.coeffs().size(); ++i)
        r = r + monomial(p.coeffs()[i], i, 0);
    return r;
}

BiPoly BiPoly::from_z(const UniPoly& p) {
    BiPoly r;
    for (size_t j = 0; j < p.coeffs().size(); ++j)
        r = r + monomial(p.coeffs()[j], 0, j);
    return r;
}

Scalar BiPoly::coeff(size_t i, size_t j) const {
    if (i >= c_.size() || j >= c_[i].size()) return Scalar(0);
    return c_[i][j];
}

BiPoly BiPoly::operator-() const {
    BiPoly r = *this;
    for (auto& row : r.c_)
        for (auto& x : row) x = -x;
    return r;
}

BiPoly BiPoly::operator+(const BiPoly& o) const {
    BiPoly r;
    r.c_.resize(std::max(c_.size(), o.c_.size()));
    for (size_t i = 0; i < r.c_.size(); ++i) {
        size_t w = std::max(i < c_.size() ? c_[i].size() : 0,
                            i < o.c_.size() ? o.c_[i].size() : 0);
        r.c_[i].assign(w, Scalar(0));
        if (i < c_.size())
            for (size_t j = 0; j < c_[i].size(); ++j) r.c_[i][j] += c_[i][j];
        if (i < o.c_.size())
            for (size_t j = 0; j < o.c_[i].size(); ++j) r.c_[i][j] += o.c_[i][j];
    }
    r.trim();
    return r;
}

BiPoly BiPoly::operator-(const BiPoly& o) const { return *this + (-o); }

BiPoly BiPoly::operator*(const BiPoly& o) const {
    BiPoly r;
    if (c_.empty() || o.c_.empty()) return r;
    size_t zw = 0, ozw = 0;
    for (auto& row : c_) zw = std::max(zw, row.size());
    for (auto& row : o.c_) ozw = std::max(ozw, row.size());
    if (zw == 0 || ozw == 0) return r;
    r.c_.assign(c_.size() + o.c_.size() - 1,
                std::vector<Scalar>(zw + ozw - 1, Scalar(0)));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < c_[i].size(); ++j) {
            if (c_[i][j].is_zero()) continue;
            for (size_t k = 0; k < o.c_.size(); ++k)
                for (size_t l = 0; l < o.c_[k].size(); ++l)
                    r.c_[i + k][j + l] += c_[i][j] * o.c_[k][l];
        }
    r.trim();
    return r;
}

BiPoly BiPoly::dx() const {
    BiPoly r;
    if (c_.size() <= 1) return r;
    r.c_.resize(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) {
        r.c_[i - 1] = c_[i];
        for (auto& x : r.c_[i - 1]) x = x * Scalar(static_cast<long>(i));
    }
    r.trim();
    return r;
}

BiPoly BiPoly::dz() const {
    BiPoly r;
    r.c_.resize(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].size() <= 1) continue;
        r.c_[i].resize(c_[i].size() - 1);
        for (size_t j = 1; j < c_[i].size(); ++j)
            r.c_[i][j - 1] = c_[i][j] * Scalar(static_cast<long>(j));
    }
    r.trim();
    return r;
}

UniPoly BiPoly::eval_z(const Scalar& z, const std::string& xvar) const {
    std::vector<Scalar> out(c_.size(), Scalar(0));
    for (size_t i = 0; i < c_.size(); ++i) {
        Scalar acc(0);
        for (size_t j = c_[i].size(); j-- > 0;) acc = acc * z + c_[i][j];
        out[i] = acc;
    }
    return UniPoly(xvar, std::move(out));
}

std::string BiPoly::str() const {
    std::string out;
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < c_[i].size(); ++j) {
            if (c_[i][j].is_zero()) continue;
            if (!out.empty()) out += " + ";
            out += "(" + c_[i][j].str() + ")";
            if (i > 0) out += "*x^" + std::to_string(i);
            if (j > 0) out += "*z^" + std::to_string(j);
        }
    return out.empty() ? "0" : out;
}

BiRatFun::BiRatFun(BiPoly num, BiPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DomainError("bivariate fraction with zero denominator");
    if (num_.is_zero()) den_ = BiPoly::constant(Scalar(1));
}

BiRatFun BiRatFun::operator-() const { return BiRatFun(-num_, den_); }

BiRatFun BiRatFun::operator+(const BiRatFun& o) const {
    if (den_ == o.den_) return BiRatFun(num_ + o.num_, den_);
    return BiRatFun(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

BiRatFun BiRatFun::operator-(const BiRatFun& o) const { return *this + (-o); }

BiRatFun BiRatFun::operator*(const BiRatFun& o) const {
    return BiRatFun(num_ * o.num_, den_ * o.den_);
}

BiRatFun BiRatFun::operator/(const BiRatFun& o) const {
    if (o.is_zero()) throw DomainError("bivariate division by zero");
    return BiRatFun(num_ * o.den_, den_ * o.num_);
}

BiRatFun BiRatFun::dx() const {
    return BiRatFun(num_.dx() * den_ - num_ * den_.dx(), den_ * den_);
}

BiRatFun BiRatFun::dz() const {
    return BiRatFun(num_.dz() * den_ - num_ * den_.dz(), den_ * den_);
}

RatFun BiRatFun::eval_z(const Scalar& z, const std::string& xvar) const {
    UniPoly d = den_.eval_z(z, xvar);
    if (d.is_zero()) throw DomainError("pole in z-substitution");
    return RatFun(num_.eval_z(z, xvar), d);
}

BiRatFun biratfun_from_x(const RatFun& f) {
    return BiRatFun(BiPoly::from_x(f.num()), BiPoly::from_x(f.den()));
}

BiRatFun biratfun_from_z(const RatFun& f) {
    return BiRatFun(BiPoly::from_z(f.num()), BiPoly::from_z(f.den()));
}

}  // namespace darboux
