#ifndef DARBOUX_DARBOUX_HPP
#define DARBOUX_DARBOUX_HPP

#include <memory>
#include <optional>

#include "darboux/kernel.hpp"
#include "darboux/linalg.hpp"

namespace darboux {

struct NonzeroRemainder : DomainError {
    using DomainError::DomainError;
};
struct DegenerateGamma : DomainError {
    using DomainError::DomainError;
};

/// A point of Gr_B(beta) or Gr_A(alpha): the plane data (P, g), the family
/// parameter, and (when user-specified rather than derived through an
/// involution) the condition set that produced it.
struct DarbouxPlane {
    ConditionSet::Family family = ConditionSet::Family::Bessel;
    std::optional<BesselParam> bessel;
    std::optional<AiryParam> airy;
    std::shared_ptr<const ConditionSet> conditions;  // null for derived planes
    DiffOp p;    // monic, in x
    UniPoly g;   // monic, in z
    WronskianCertificate certificate;

    unsigned n() const {
        return family == ConditionSet::Family::Bessel ? bessel->n() : airy->n();
    }
};

/// Base operator L_V of the plane's family.
DiffOp base_operator(const DarbouxPlane& pl, const std::string& var = "x");

DarbouxPlane build_plane(const ConditionSet& cs);
DarbouxPlane build_plane(std::shared_ptr<const ConditionSet> cs);

/// The forward half of the factorization: Q P = hhat(L_V), f g = hhat(z^N).
struct PairCore {
    DiffOp q;
    UniPoly f;     // in z
    UniPoly hhat;  // in t, h(z^N) = hhat(z^N)
};

PairCore pair_core(const DarbouxPlane& pl);
PairCore pair_core_with_h(const DarbouxPlane& pl, const UniPoly& hhat);

/// Minimal monic hhat with P right-dividing hhat(L_V); condition-free.
UniPoly minimal_hhat_by_division(const DarbouxPlane& pl, unsigned max_deg = 40);

/// Full output record of the Steps 1-4 pipeline.
struct BispectralPair {
    DarbouxPlane plane;
    DiffOp p, q;          // in x
    UniPoly g, f, hhat;   // z, z, t
    DiffOp p_b, q_b;      // in x
    UniPoly g_b, f_b;     // in z
    DiffOp l;             // P Q, in x
    DiffOp lambda_op;     // in z
    UniPoly theta;        // Lambda-eigenvalue as a univariate polynomial in x
    UniPoly theta_hat;    // in t: theta(x) = theta_hat(x^N) (Bessel),
                          //        theta(x) = theta_hat(alpha0 x) (Airy)
};

/// Full pipeline.  With reduce_b (the default) the backward half is built on
/// the canonically reduced b-image, which strips the trivial L_V-factors the
/// raw construction can carry; reduce_b = false keeps the raw closed forms
/// (the shape the monomial formulas produce).
BispectralPair complete_pair(const DarbouxPlane& pl, bool reduce_b = true);
BispectralPair complete_pair_with_h(const DarbouxPlane& pl,
                                    const UniPoly& hhat, bool reduce_b = true);

/// Airy spectral-variable substitution x -> alpha0^{-1} z^N,
/// d/dx -> (alpha0/N) z^{1-N} d/dz.
DiffOp airy_spectral_substitute(const DiffOp& a, const AiryParam& p,
                                const std::string& zvar = "z");

/// Monomial closed forms: the eight outputs expressed through the matrix A
/// and gamma = beta^d alone.
struct MonomialForms {
    DiffOp p, q, p_b, q_b;   // in x
    UniPoly g, f, g_b, f_b;  // in z
};

MonomialForms monomial_closed_forms(const Matrix& a, const BesselParam& base,
                                    unsigned d);

/// Smallest-degree monic u (argument t stands for z^N) with
/// u(L_V) ker P inside ker P, plus L_min from L_min P = P u(L_V).
struct MinimalL {
    UniPoly u;  // in t
    DiffOp l_min;
};
std::optional<MinimalL> minimal_L(const DarbouxPlane& pl, unsigned max_deg = 8);

struct SpectralEntry {
    UniPoly u;       // in t
    unsigned order;  // N * deg u
};
/// Degrees d with an invariant monic u of degree d, up to order max_order.
std::vector<SpectralEntry> spectral_algebra(const DarbouxPlane& pl,
                                            unsigned max_order = 10);

/// Membership test u(L_V) ker P in ker P for a given monic u; exposed for
/// cross-checking the two routes (matrix model vs right-division).
bool preserves_kernel_division(const DarbouxPlane& pl, const UniPoly& u);
bool preserves_kernel_matrix(const DarbouxPlane& pl, const UniPoly& u);

DarbouxPlane involution_a(const DarbouxPlane& pl);
DarbouxPlane involution_s(const DarbouxPlane& pl);
DarbouxPlane involution_b(const DarbouxPlane& pl);

/// Strip trivial full-eigenspace factors: while z^N divides g and L_V
/// right-divides P, replace (P, g) by (P / L_V, g / z^N).  Different
/// presentations of one plane reduce to the same minimal data.
DarbouxPlane canonical_reduce(const DarbouxPlane& pl);

/// ab = bas as exact (P, g) equality of canonically reduced planes.
bool check_ab_bas(const DarbouxPlane& pl);

/// When P_b is right-divisible by L_beta (the one-point Bessel situation),
/// the reduced cofactor P_b / L_beta; otherwise empty.
std::optional<DiffOp> reduced_pb(const BispectralPair& pair);

/// Q_b P_b = theta_hat(L_V) as an exact operator identity.  Expensive for
/// high-order pairs; exercised by the test and verification suites.
bool check_backward_factorization(const BispectralPair& pair);

}  // namespace darboux

#endif
