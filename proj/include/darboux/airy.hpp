#ifndef DARBOUX_AIRY_HPP
#define DARBOUX_AIRY_HPP

#include <string>
#include <vector>

#include "darboux/diffop.hpp"

namespace darboux {

/// Parameters of the generalized Airy operator
/// L = d^N - a0 x + sum_{i=2}^{N-1} a_i d^{N-i}.
class AiryParam {
  public:
    AiryParam(unsigned n, Rational alpha0, std::vector<Rational> tail = {});
    unsigned n() const { return n_; }
    const Rational& alpha0() const { return alpha0_; }
    /// alpha_2 .. alpha_{N-1}.
    const std::vector<Rational>& tail() const { return tail_; }

  private:
    unsigned n_;
    Rational alpha0_;
    std::vector<Rational> tail_;
};

DiffOp airy_op(const AiryParam& p, const std::string& var = "x");

/// The constant-coefficient part P_{alpha'}(t) = t^N + sum a_i t^{N-i}.
UniPoly airy_palpha(const AiryParam& p, const std::string& var = "t");

/// Rewrite data for d_y^N Psi = a0 y Psi - sum a_i d_y^{N-i} Psi: the vector
/// of coefficients of (Psi, dPsi, ..., d^{N-1}Psi) plus the multiplier of
/// y Psi.  Used by the symbolic verifier and the kernel layer.
struct AiryReduceRule {
    Scalar y_coeff;                 // a0, multiplies y * Psi
    std::vector<Scalar> low_coeff;  // coefficient of d^m Psi, m = 0..N-1
};

AiryReduceRule airy_reduce_rule(const AiryParam& p);

/// Actions of the involutions on parameters: s and a of Lemma-level laws.
std::pair<AiryParam, AiryParam> airy_involutions(const AiryParam& p);

/// The *_1 conjugation: sum (d + ((1-N)/N) x^{-1})^k (-1)^{(N-1)k} q_k((-1)^N x).
DiffOp airy_star1(const DiffOp& q, unsigned n);

}  // namespace darboux

#endif
