#ifndef DARBOUX_BIPOLY_HPP
#define DARBOUX_BIPOLY_HPP

#include <string>
#include <vector>

#include "darboux/poly.hpp"

namespace darboux {

/// Dense bivariate polynomial in (x, z) over Scalar; c[i][j] is the
/// coefficient of x^i z^j.
class BiPoly {
  public:
    BiPoly() = default;
    static BiPoly constant(const Scalar& s);
    static BiPoly monomial(const Scalar& s, size_t xdeg, size_t zdeg);
    static BiPoly from_x(const UniPoly& p);
    static BiPoly from_z(const UniPoly& p);

    bool is_zero() const { return c_.empty(); }
    long xdeg() const { return static_cast<long>(c_.size()) - 1; }
    Scalar coeff(size_t i, size_t j) const;

    BiPoly operator-() const;
    BiPoly operator+(const BiPoly& o) const;
    BiPoly operator-(const BiPoly& o) const;
    BiPoly operator*(const BiPoly& o) const;
    bool operator==(const BiPoly& o) const { return c_ == o.c_; }

    BiPoly dx() const;
    BiPoly dz() const;
    /// Substitute z = value, collapsing to a polynomial in x.
    UniPoly eval_z(const Scalar& z, const std::string& xvar) const;

    std::string str() const;

  private:
    std::vector<std::vector<Scalar>> c_;
    void trim();
};

/// Fraction of two BiPoly.  Never reduced; only exact zero tests are needed,
/// and those only inspect the numerator.
class BiRatFun {
  public:
    BiRatFun() : num_(), den_(BiPoly::constant(Scalar(1))) {}
    BiRatFun(BiPoly num, BiPoly den);
    static BiRatFun of(const BiPoly& p) { return BiRatFun(p, BiPoly::constant(Scalar(1))); }
    static BiRatFun constant(const Scalar& s) { return of(BiPoly::constant(s)); }

    const BiPoly& num() const { return num_; }
    const BiPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    BiRatFun operator-() const;
    BiRatFun operator+(const BiRatFun& o) const;
    BiRatFun operator-(const BiRatFun& o) const;
    BiRatFun operator*(const BiRatFun& o) const;
    BiRatFun operator/(const BiRatFun& o) const;

    BiRatFun dx() const;
    BiRatFun dz() const;
    RatFun eval_z(const Scalar& z, const std::string& xvar) const;

  private:
    BiPoly num_, den_;
};

BiRatFun biratfun_from_x(const RatFun& f);
BiRatFun biratfun_from_z(const RatFun& f);

}  // namespace darboux

#endif
