#ifndef DARBOUX_POLY_HPP
#define DARBOUX_POLY_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "darboux/cyclo.hpp"

namespace darboux {

/// Dense univariate polynomial over Scalar in a named variable.
class UniPoly {
  public:
    UniPoly() = default;
    explicit UniPoly(std::string var) : var_(std::move(var)) {}
    UniPoly(std::string var, std::vector<Scalar> coeffs)
        : var_(std::move(var)), c_(std::move(coeffs)) {
        trim();
    }
    static UniPoly constant(std::string var, const Scalar& s);
    /// The monomial c * var^k.
    static UniPoly monomial(std::string var, const Scalar& c, size_t k);

    const std::string& var() const { return var_; }
    bool is_zero() const { return c_.empty(); }
    /// deg(0) = -1 by convention.
    long deg() const { return static_cast<long>(c_.size()) - 1; }
    const std::vector<Scalar>& coeffs() const { return c_; }
    Scalar coeff(size_t k) const {
        return k < c_.size() ? c_[k] : Scalar(0);
    }
    Scalar lead() const;

    UniPoly operator-() const;
    UniPoly operator+(const UniPoly& o) const;
    UniPoly operator-(const UniPoly& o) const;
    UniPoly operator*(const UniPoly& o) const;
    UniPoly operator*(const Scalar& s) const;
    bool operator==(const UniPoly& o) const;
    bool operator!=(const UniPoly& o) const { return !(*this == o); }

    /// Quotient and remainder; divisor must be nonzero.
    std::pair<UniPoly, UniPoly> divmod(const UniPoly& d) const;
    /// Exact quotient; throws if the remainder is nonzero.
    UniPoly divexact(const UniPoly& d) const;

    UniPoly derivative() const;
    Scalar eval(const Scalar& x) const;
    /// Substitute another polynomial for the variable.
    UniPoly compose(const UniPoly& inner) const;
    UniPoly monic() const;
    /// Rename the variable without touching coefficients.
    UniPoly with_var(const std::string& v) const;

    /// True when only exponents divisible by n carry nonzero coefficients.
    bool supported_on_multiples(unsigned n) const;
    /// Inverse of t -> t^n on polynomials supported on multiples of n.
    UniPoly decompress(unsigned n, const std::string& new_var) const;
    /// t -> t^n.
    UniPoly compress(unsigned n, const std::string& new_var) const;

    std::string str() const;

  private:
    std::string var_ = "x";
    std::vector<Scalar> c_;
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
};

UniPoly poly_gcd(const UniPoly& a, const UniPoly& b);
UniPoly poly_lcm(const UniPoly& a, const UniPoly& b);

/// Reduced fraction of two UniPoly, monic denominator; canonical form.
class RatFun {
  public:
    RatFun() = default;
    explicit RatFun(const std::string& var)
        : num_(UniPoly(var)), den_(UniPoly::constant(var, Scalar(1))) {}
    RatFun(const UniPoly& num, const UniPoly& den);
    static RatFun of(const UniPoly& p) {
        return RatFun(p, UniPoly::constant(p.var(), Scalar(1)));
    }
    static RatFun constant(const std::string& var, const Scalar& s) {
        return of(UniPoly::constant(var, s));
    }

    const UniPoly& num() const { return num_; }
    const UniPoly& den() const { return den_; }
    const std::string& var() const { return num_.var(); }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.deg() == 0; }
    /// The polynomial value; throws for a genuine fraction.
    UniPoly to_polynomial() const;

    RatFun operator-() const;
    RatFun operator+(const RatFun& o) const;
    RatFun operator-(const RatFun& o) const;
    RatFun operator*(const RatFun& o) const;
    RatFun operator/(const RatFun& o) const;
    RatFun operator*(const Scalar& s) const;
    RatFun inverse() const;
    bool operator==(const RatFun& o) const;
    bool operator!=(const RatFun& o) const { return !(*this == o); }

    RatFun derivative() const;
    std::optional<Scalar> eval(const Scalar& x) const;
    /// Substitute a polynomial for the variable.
    RatFun compose_poly(const UniPoly& inner) const;

    std::string str() const;

  private:
    UniPoly num_{UniPoly("x")};
    UniPoly den_{UniPoly::constant("x", Scalar(1))};
};

}  // namespace darboux

#endif
