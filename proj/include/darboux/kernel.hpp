#ifndef DARBOUX_KERNEL_HPP
#define DARBOUX_KERNEL_HPP

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "darboux/airy.hpp"
#include "darboux/bessel.hpp"
#include "darboux/bipoly.hpp"
#include "darboux/diffop.hpp"

namespace darboux {

struct DependentKernel : DomainError {
    using DomainError::DomainError;
};
struct RationalizationFailure : DomainError {
    using DomainError::DomainError;
};

/// One term b * x^{beta_i + kN} (ln x)^j of a zero-supported condition;
/// i is a 1-based index into beta.
struct ZeroTerm {
    unsigned i = 1;
    unsigned k = 0;
    unsigned j = 0;
    Scalar b;
};

/// A homogeneous condition: either supported at 0 (power-log data) or at the
/// N sheets of a point lambda != 0 (a jet there, spanning all sheets).
/// Point jets are d/dz-jets for Bessel and d/dy-jets for Airy.
struct Condition {
    enum class Support { Zero, Point };
    Support support = Support::Zero;
    std::vector<ZeroTerm> terms;  // Zero
    Rational lambda = 0;          // Point
    std::vector<Scalar> coeffs;   // Point
};

class ConditionSet {
  public:
    enum class Family { Bessel, Airy };

    ConditionSet(BesselParam p, std::vector<Condition> conds);
    ConditionSet(AiryParam p, std::vector<Condition> conds);

    Family family() const { return family_; }
    unsigned n() const;
    const BesselParam& bessel() const;
    const AiryParam& airy() const;
    const FieldPtr& field() const { return field_; }
    const std::vector<Condition>& conditions() const { return conds_; }
    bool empty() const { return conds_.empty(); }

    /// Number of kernel basis elements contributed by zero conditions.
    unsigned n_zero() const;
    /// Distinct support values lambda^N with their condition counts n_j and
    /// a representative lambda (the first condition's).
    struct PointGroup {
        Scalar lambda;         // representative
        Scalar lambda_n;       // lambda^N
        unsigned n_conditions; // n_j
        unsigned max_jet;      // max k0 over the group's conditions
        std::vector<size_t> condition_indices;
    };
    const std::vector<PointGroup>& point_groups() const { return groups_; }

    /// Total kernel dimension n (= ord P).
    unsigned kernel_dim() const;

  private:
    Family family_;
    std::optional<BesselParam> bessel_;
    std::optional<AiryParam> airy_;
    FieldPtr field_;
    std::vector<Condition> conds_;
    std::vector<PointGroup> groups_;
    void validate();
};

/// Key of one transcendental symbol.  PowerLog(cls, j) stands for
/// x^cls (ln x)^j with cls a canonical class representative in [0,1);
/// Psi(point, sheet, m) is the m-th derivative of the master function on one
/// sheet of one support point.
struct SymKey {
    enum class Kind { PowerLog, Psi };
    Kind kind = Kind::PowerLog;
    Rational cls = 0;
    unsigned logpow = 0;
    unsigned point = 0, sheet = 0, deriv = 0;

    bool operator==(const SymKey& o) const {
        return kind == o.kind && cls == o.cls && logpow == o.logpow &&
               point == o.point && sheet == o.sheet && deriv == o.deriv;
    }
    bool operator<(const SymKey& o) const;
};

/// Formal linear combination of symbols with RatFun coefficients in x;
/// closed under d/dx through the family ODE.
using KernelFn = std::map<SymKey, RatFun>;

/// Everything differentiation and rotation need to know about the plane.
class KernelContext {
  public:
    explicit KernelContext(const ConditionSet& cs);

    const ConditionSet& conditions() const { return cs_; }
    const std::string& var() const { return var_; }
    const FieldPtr& field() const { return cs_.field(); }

    KernelFn derivative(const KernelFn& f) const;
    KernelFn apply(const DiffOp& op, const KernelFn& f) const;
    /// x -> eps x on a Psi-only function (sheets rotate); throws on
    /// power-log symbols.
    KernelFn rotate(const KernelFn& f) const;

  private:
    const ConditionSet& cs_;
    std::string var_ = "x";
    // d-form coefficients of L (Bessel) used by the d^N reduction.
    std::vector<RatFun> bessel_low_;
    std::vector<Scalar> eigen_;          // lambda^N per point group
    std::vector<RatFun> airy_y_;         // y_l(x) per point group (Airy)
    AiryReduceRule airy_rule_;
};

std::vector<KernelFn> materialize_kernel(const KernelContext& ctx);

struct WronskianCertificate {
    size_t denominator_monomials = 0;
    size_t coefficient_checks = 0;
};

/// Monic operator of order n annihilating the basis, computed from the
/// Wronskian cofactors with exact rationalization.
std::pair<DiffOp, WronskianCertificate> wronskian_op(
    const KernelContext& ctx, const std::vector<KernelFn>& basis);

/// g(z) = z^{n0} prod_j (z^N - lambda_j^N)^{n_j} (Bessel); no z^{n0} factor
/// in the Airy family.
UniPoly g_from_conditions(const ConditionSet& cs, const std::string& var = "z");

/// Minimal exponents d_0, d_j of Step 2 plus hhat(t) with h(z^N) = hhat(z^N).
struct MinH {
    unsigned d0 = 0;
    std::vector<unsigned> dj;  // parallel to point_groups()
    UniPoly hhat;              // in t
};
MinH min_h_exponents(const ConditionSet& cs);

bool zn_check(const ConditionSet& cs);

/// Test helper: is the span of the basis closed under x -> eps x?  Only
/// Psi-symbol functions are supported.
bool rotation_closed(const KernelContext& ctx,
                     const std::vector<KernelFn>& basis);

}  // namespace darboux

#endif
