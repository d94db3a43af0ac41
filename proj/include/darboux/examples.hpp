#ifndef DARBOUX_EXAMPLES_HPP
#define DARBOUX_EXAMPLES_HPP

#include <map>
#include <string>
#include <vector>

#include "darboux/kernel.hpp"

namespace darboux {

/// Built-in registry of the classical condition sets, parameterized over
/// small rationals.  Every parameter has a default; ids: 9.2, 9.3, 9.4,
/// 9.5, 9.8, 9.9, 9.10, log.
using ParamMap = std::map<std::string, Rational>;

std::vector<std::string> example_ids();
/// Human-readable parameter summary for --example list.
std::string example_help(const std::string& id);
ConditionSet example_conditions(const std::string& id, const ParamMap& params);

/// Normalizing constants of the closed-form basis
/// Phi_{(k-1)d+j} = mu_{kj} x^{beta_k + (j-1)N}: mu_{k1} = 1 and
/// mu_{kj} = mu_{k,j-1} / prod_i (beta_i - beta_k - (j-1)N).
Scalar phi_mu(const BesselParam& p, unsigned k, unsigned j);

}  // namespace darboux

#endif
