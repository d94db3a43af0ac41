#ifndef DARBOUX_CYCLO_HPP
#define DARBOUX_CYCLO_HPP

#include <gmpxx.h>

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace darboux {

using Rational = mpq_class;

/// Thrown whenever a value violates a documented precondition.
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class CycloField;
using FieldPtr = std::shared_ptr<const CycloField>;

/// The cyclotomic field Q(zeta_N), elements reduced modulo the N-th
/// cyclotomic polynomial Phi_N.  N = 1 gives plain Q.
class CycloField : public std::enable_shared_from_this<CycloField> {
  public:
    static FieldPtr make(unsigned n);

    unsigned n() const { return n_; }
    unsigned degree() const { return static_cast<unsigned>(phi_.size()) - 1; }
    /// Coefficients of Phi_N, ascending, monic.
    const std::vector<Rational>& cyclotomic() const { return phi_; }

  private:
    explicit CycloField(unsigned n, std::vector<Rational> phi)
        : n_(n), phi_(std::move(phi)) {}
    unsigned n_;
    std::vector<Rational> phi_;
};

/// An element of Q(zeta_N): coefficient vector of length deg Phi_N over Q,
/// canonical representative mod Phi_N.  Immutable value semantics.
class Scalar {
  public:
    Scalar() = default;  // rational zero, field-agnostic
    Scalar(const Rational& r) : rat_(r) { rat_.canonicalize(); }
    Scalar(long v) : rat_(v) {}
    Scalar(int v) : rat_(v) {}
    Scalar(FieldPtr f, std::vector<Rational> coeffs);

    static Scalar zeta(const FieldPtr& f);
    /// zeta^k for 0 <= k.
    static Scalar zeta_pow(const FieldPtr& f, long k);

    bool is_zero() const;
    bool is_rational() const;
    /// The rational value; throws if a zeta component survives.
    Rational to_rational() const;

    const FieldPtr& field() const { return field_; }

    Scalar operator-() const;
    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar inverse() const;
    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

    std::string str() const;

  private:
    // Field-free representation for plain rationals keeps mixed arithmetic
    // cheap; a nonnull field_ means coeffs_ has length deg Phi_N.
    FieldPtr field_;
    Rational rat_;
    std::vector<Rational> coeffs_;

    std::vector<Rational> lifted(const FieldPtr& f) const;
    static Scalar from_coeffs(const FieldPtr& f, std::vector<Rational> c);
};

Scalar parse_rational_scalar(const std::string& s);
std::string rational_str(const Rational& r);

}  // namespace darboux

#endif
