#ifndef DARBOUX_VERIFY_HPP
#define DARBOUX_VERIFY_HPP

#include <string>
#include <vector>

#include "darboux/darboux.hpp"

namespace darboux {

struct IdentityFailed : DomainError {
    using DomainError::DomainError;
};
struct MarginExhausted : DomainError {
    using DomainError::DomainError;
};

struct BispectralReport {
    bool x_identity = false;  // L Psi_W = h(z^N) Psi_W
    bool z_identity = false;  // Lambda Psi_W = Theta(.) Psi_W
    double seconds = 0.0;
};

/// Exact symbol-ring verification of both bispectral identities; throws
/// IdentityFailed with the first offending reduced coefficient.
BispectralReport check_bispectral_symbolic(const BispectralPair& pair);

/// Truncated wave series e^{xz}(1 + sum a_k(x) z^-k) of a Bessel plane.
struct WaveSeries {
    unsigned truncation = 0;
    unsigned margin = 0;             // trustworthy trailing orders
    std::vector<RatFun> coeffs;      // a_1 .. a_margin
};

WaveSeries wave_series(const DarbouxPlane& pl, unsigned k);

/// Shape and decay gate: a_0 = 1 enforced during normalization and
/// deg num a_k < deg den a_k for k <= depth.
void check_wave_decay(const WaveSeries& ws, unsigned depth);

/// gcd of operator orders = rank of the spectral algebra.
unsigned rank_of(const std::vector<unsigned>& orders);

}  // namespace darboux

#endif
