#ifndef DARBOUX_BESSEL_HPP
#define DARBOUX_BESSEL_HPP

#include <string>
#include <vector>

#include "darboux/diffop.hpp"

namespace darboux {

struct RecursionSingular : DomainError {
    using DomainError::DomainError;
};

/// Parameter vector of a Bessel operator; entries are rational and must sum
/// to N(N-1)/2.
class BesselParam {
  public:
    BesselParam(unsigned n, std::vector<Rational> beta);
    unsigned n() const { return n_; }
    const std::vector<Rational>& beta() const { return beta_; }

  private:
    unsigned n_;
    std::vector<Rational> beta_;
};

/// Product (t - g_1)...(t - g_m) as a univariate polynomial.
UniPoly linear_factors_poly(const std::string& var,
                            const std::vector<Scalar>& roots);

/// x^{-m} (D - g_1)...(D - g_m) in d/dx form, D = x d/dx.  The parameter
/// vector need not satisfy the Bessel sum constraint; subsets of beta^d use
/// this too.
DiffOp bessel_like_op(const std::string& var, const std::vector<Scalar>& g);

/// The Bessel operator L_beta = x^{-N} (D - beta_1)...(D - beta_N).
DiffOp bessel_op(const BesselParam& p, const std::string& var = "x");

/// P_beta(t) = prod (t - beta_i).
UniPoly bessel_pbeta(const BesselParam& p, const std::string& var = "t");

/// Coefficients a_1..a_K of the wave asymptotics e^z (1 + sum a_k z^-k),
/// from the triangular recursion of prod_i(z + D - beta_i) phi = z^N phi.
std::vector<Scalar> bessel_wave_coeffs(const BesselParam& p, unsigned k);

/// beta^d: each beta_i expanded to beta_i, beta_i+N, ..., beta_i+(d-1)N.
std::vector<Rational> beta_power(const BesselParam& p, unsigned d);

/// One term of an expansion over x^e (ln x)^j.
struct PowerLogTerm {
    Rational exponent;
    unsigned logpow = 0;
    Scalar coeff;
};

/// L_beta (x^a ln^j x) expanded over x^{a-N} ln^m x, m <= j.
std::vector<PowerLogTerm> bessel_action_zero(const BesselParam& p,
                                             const Rational& a, unsigned j);

/// Row of L_beta on the D_lambda-symbol basis: expansion of
/// lambda^N (D + N)^k over D^m, m <= k.  Requires lambda != 0.
std::vector<Scalar> bessel_action_lambda(const BesselParam& p,
                                         const Scalar& lambda, unsigned k);

struct GenericityReport {
    bool generic = false;
    bool unknown = false;
    std::string detail;
};

/// Congruence-class heuristic for Proposition-level genericity; warns only.
GenericityReport genericity_check(const BesselParam& p);

}  // namespace darboux

#endif
