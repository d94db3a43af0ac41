#include "darboux/cyclo.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace darboux {

namespace {

// Polynomial helpers over Q, dense ascending coefficients.
using QP = std::vector<Rational>;

void qp_trim(QP& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

QP qp_mul(const QP& a, const QP& b) {
    if (a.empty() || b.empty()) return {};
    QP r(a.size() + b.size() - 1, Rational(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    qp_trim(r);
    return r;
}

// Exact division, remainder must vanish.
QP qp_divexact(QP num, const QP& den) {
    QP q(num.size() >= den.size() ? num.size() - den.size() + 1 : 0,
         Rational(0));
    while (num.size() >= den.size() && !num.empty()) {
        Rational c = num.back() / den.back();
        size_t shift = num.size() - den.size();
        q[shift] = c;
        for (size_t i = 0; i < den.size(); ++i)
            num[shift + i] -= c * den[i];
        qp_trim(num);
    }
    if (!num.empty()) throw DomainError("cyclotomic division not exact");
    return q;
}

// Phi_N by recursive division of t^N - 1 by all proper-divisor Phi_d.
QP cyclotomic_poly(unsigned n) {
    QP num(n + 1, Rational(0));
    num[0] = -1;
    num[n] = 1;
    for (unsigned d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        num = qp_divexact(std::move(num), cyclotomic_poly(d));
    }
    return num;
}

}  // namespace

FieldPtr CycloField::make(unsigned n) {
    if (n < 1) throw DomainError("cyclo_field: N must be >= 1");
    static std::mutex mu;
    static std::map<unsigned, FieldPtr> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    FieldPtr f(new CycloField(n, cyclotomic_poly(n)));
    cache.emplace(n, f);
    return f;
}

Scalar Scalar::from_coeffs(const FieldPtr& f, std::vector<Rational> c) {
    // Reduce mod Phi_N, then store; a representative with zero zeta-tail
    // collapses to the rational form.
    for (auto& x : c) x.canonicalize();
    const auto& phi = f->cyclotomic();
    size_t deg = phi.size() - 1;
    while (c.size() > deg) {
        Rational lead = c.back();
        size_t shift = c.size() - phi.size();
        if (lead != 0)
            for (size_t i = 0; i < phi.size(); ++i)
                c[shift + i] -= lead * phi[i];
        c.pop_back();
    }
    c.resize(deg, Rational(0));
    bool tail = false;
    for (size_t i = 1; i < c.size(); ++i)
        if (c[i] != 0) tail = true;
    if (!tail) return Scalar(c.empty() ? Rational(0) : c[0]);
    Scalar s;
    s.field_ = f;
    s.coeffs_ = std::move(c);
    return s;
}

Scalar::Scalar(FieldPtr f, std::vector<Rational> coeffs) {
    *this = from_coeffs(f, std::move(coeffs));
}

Scalar Scalar::zeta(const FieldPtr& f) { return zeta_pow(f, 1); }

Scalar Scalar::zeta_pow(const FieldPtr& f, long k) {
    long n = f->n();
    k %= n;
    if (k < 0) k += n;
    std::vector<Rational> c(static_cast<size_t>(k) + 1, Rational(0));
    c.back() = 1;
    return from_coeffs(f, std::move(c));
}

std::vector<Rational> Scalar::lifted(const FieldPtr& f) const {
    if (field_) return coeffs_;
    std::vector<Rational> c(f->degree(), Rational(0));
    if (!c.empty())
        c[0] = rat_;
    else
        throw DomainError("degenerate field");
    return c;
}

bool Scalar::is_zero() const {
    if (!field_) return rat_ == 0;
    return false;  // nonzero by canonicalization (zeta-tail present)
}

bool Scalar::is_rational() const { return !field_; }

Rational Scalar::to_rational() const {
    if (!field_) return rat_;
    throw DomainError("scalar is not rational: " + str());
}

Scalar Scalar::operator-() const {
    if (!field_) return Scalar(Rational(-rat_));
    auto c = coeffs_;
    for (auto& x : c) x = -x;
    return from_coeffs(field_, std::move(c));
}

Scalar Scalar::operator+(const Scalar& o) const {
    if (!field_ && !o.field_) return Scalar(Rational(rat_ + o.rat_));
    FieldPtr f = field_ ? field_ : o.field_;
    if (field_ && o.field_ && field_->n() != o.field_->n())
        throw DomainError("scalar field mismatch");
    auto a = lifted(f);
    auto b = o.lifted(f);
    for (size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return from_coeffs(f, std::move(a));
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
    if (!field_ && !o.field_) return Scalar(Rational(rat_ * o.rat_));
    FieldPtr f = field_ ? field_ : o.field_;
    if (field_ && o.field_ && field_->n() != o.field_->n())
        throw DomainError("scalar field mismatch");
    QP prod = qp_mul(lifted(f), o.lifted(f));
    return from_coeffs(f, std::move(prod));
}

Scalar Scalar::inverse() const {
    if (!field_) {
        if (rat_ == 0) throw DomainError("division by zero scalar");
        return Scalar(Rational(1 / rat_));
    }
    // Extended Euclid in Q[t] against Phi_N: u*this + v*Phi = gcd = const.
    QP r0 = field_->cyclotomic(), r1 = coeffs_;
    qp_trim(r1);
    QP s0 = {}, s1 = {Rational(1)};
    while (!r1.empty()) {
        // quotient of r0 by r1
        QP q(r0.size() >= r1.size() ? r0.size() - r1.size() + 1 : 0,
             Rational(0));
        QP rem = r0;
        while (rem.size() >= r1.size() && !rem.empty()) {
            Rational c = rem.back() / r1.back();
            size_t shift = rem.size() - r1.size();
            q[shift] += c;
            for (size_t i = 0; i < r1.size(); ++i) rem[shift + i] -= c * r1[i];
            qp_trim(rem);
        }
        QP qs = qp_mul(q, s1);
        QP s2 = s0;
        s2.resize(std::max(s2.size(), qs.size()), Rational(0));
        for (size_t i = 0; i < qs.size(); ++i) s2[i] -= qs[i];
        qp_trim(s2);
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (r0.size() != 1) throw DomainError("scalar not invertible");
    for (auto& c : s0) c /= r0[0];
    return from_coeffs(field_, std::move(s0));
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

bool Scalar::operator==(const Scalar& o) const {
    if (!field_ && !o.field_) return rat_ == o.rat_;
    if (static_cast<bool>(field_) != static_cast<bool>(o.field_)) return false;
    return coeffs_ == o.coeffs_;
}

std::string rational_str(const Rational& r) {
    mpq_class c(r);
    c.canonicalize();
    return c.get_str();
}

std::string Scalar::str() const {
    if (!field_) return rational_str(rat_);
    std::string out;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        if (!out.empty()) out += " + ";
        out += rational_str(coeffs_[i]);
        if (i == 1) out += "*z" + std::to_string(field_->n());
        if (i > 1) out += "*z" + std::to_string(field_->n()) + "^" + std::to_string(i);
    }
    return out.empty() ? "0" : out;
}

Scalar parse_rational_scalar(const std::string& s) {
    mpq_class q;
    if (q.set_str(s, 10) != 0)
        throw DomainError("bad rational literal: " + s);
    q.canonicalize();
    return Scalar(Rational(q));
}

}  // namespace darboux
