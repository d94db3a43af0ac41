#ifndef DARBOUX_DIFFOP_HPP
#define DARBOUX_DIFFOP_HPP

#include <string>
#include <utility>
#include <vector>

#include "darboux/poly.hpp"

namespace darboux {

/// Raised by to_dform when an operator does not admit the Z_N-homogeneous
/// presentation x^{-n} sum p_k(x^N) (x d/dx)^k.
struct NotZNHomogeneous : DomainError {
    using DomainError::DomainError;
};

/// Ordinary differential operator sum c_k(x) D^k with RatFun coefficients,
/// D = d/dx.  Immutable; composition follows the Leibniz rule D c = c D + c'.
class DiffOp {
  public:
    DiffOp() = default;
    explicit DiffOp(std::string var) : var_(std::move(var)) {}
    DiffOp(std::string var, std::vector<RatFun> coeffs)
        : var_(std::move(var)), c_(std::move(coeffs)) {
        trim();
    }

    static DiffOp zero(const std::string& var) { return DiffOp(var); }
    static DiffOp identity(const std::string& var);
    /// d/dx as an operator.
    static DiffOp d(const std::string& var);
    /// Multiplication by a rational function, as an order-0 operator.
    static DiffOp mul_by(const RatFun& f);
    static DiffOp mul_by(const UniPoly& p) { return mul_by(RatFun::of(p)); }
    /// x d/dx.
    static DiffOp euler(const std::string& var);

    const std::string& var() const { return var_; }
    bool is_zero() const { return c_.empty(); }
    /// ord(0) = -1 sentinel.
    long ord() const { return static_cast<long>(c_.size()) - 1; }
    const std::vector<RatFun>& coeffs() const { return c_; }
    RatFun coeff(size_t k) const {
        return k < c_.size() ? c_[k] : RatFun(var_);
    }
    RatFun lead() const;
    bool is_monic() const;

    DiffOp operator-() const;
    DiffOp operator+(const DiffOp& o) const;
    DiffOp operator-(const DiffOp& o) const;
    /// Operator composition (this applied after o).
    DiffOp operator*(const DiffOp& o) const;
    DiffOp operator*(const Scalar& s) const;
    bool operator==(const DiffOp& o) const;
    bool operator!=(const DiffOp& o) const { return !(*this == o); }

    DiffOp pow(unsigned k) const;
    /// Divide every coefficient by the leading one.
    DiffOp monic() const;
    DiffOp with_var(const std::string& v) const;
    /// The algebra automorphism x -> -x, d/dx -> -d/dx.
    DiffOp sign_flip() const;

    std::string str() const;

  private:
    std::string var_ = "x";
    std::vector<RatFun> c_;
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
};

DiffOp op_mul(const DiffOp& a, const DiffOp& b);
/// Formal adjoint sum (-D)^k c_k(x); antiautomorphism, involutive.
DiffOp op_adjoint(const DiffOp& a);
/// A = Q B + R with ord R < ord B; always possible over RatFun coefficients.
std::pair<DiffOp, DiffOp> op_right_divide(const DiffOp& a, const DiffOp& b);
/// h(L) by Horner composition.
DiffOp op_of_poly(const UniPoly& h, const DiffOp& l);

/// The presentation x^{-shift} sum p_k(t) (x d/dx)^k with t = x^N and
/// rational p_k, p_top = 1 (form used to construct the b-involution).
struct DFormOp {
    std::string var = "x";
    unsigned n_root = 1;   // the N of x^N
    long shift = 0;        // the leading power x^{-shift}
    std::vector<RatFun> p; // p[k] rational in t, p.back() == 1
};

DFormOp to_dform(const DiffOp& a, unsigned n);
DiffOp from_dform(const DFormOp& f);

/// Minimal monic polynomial c(t) clearing all denominators: p_k = pbar_k / c.
UniPoly dform_denominator(const DFormOp& f);

}  // namespace darboux

#endif
