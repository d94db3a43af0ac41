#ifndef DARBOUX_IO_HPP
#define DARBOUX_IO_HPP

#include <string>

#include "darboux/verify.hpp"

namespace darboux {

struct ParseError : DomainError {
    using DomainError::DomainError;
};

/// JSON serialization; exact integers/fractions as strings, stable key
/// order, canonical rationals.  Unknown fields are rejected on input.
std::string conditions_to_json(const ConditionSet& cs);
ConditionSet conditions_from_json(const std::string& text);

std::string diffop_to_json(const DiffOp& op);
DiffOp diffop_from_json(const std::string& text);

std::string pair_to_json(const BispectralPair& pair);
BispectralPair pair_from_json(const std::string& text);

std::string plane_to_json(const DarbouxPlane& pl);

/// Operator/polynomial rendering with descending powers, matching the
/// operator layout used in print.
std::string diffop_to_latex(const DiffOp& op, const std::string& symbol);
std::string poly_to_latex(const UniPoly& p);
std::string pair_to_latex(const BispectralPair& pair);

struct VerifyReport {
    bool x_identity = false;
    bool z_identity = false;
    bool wave_shape = false;     // Bessel only
    bool wave_decay = false;     // Bessel only
    bool series_applicable = false;
    unsigned margin = 0;
    unsigned rank = 0;
    std::vector<unsigned> orders;
    bool rank_matches = false;
    double seconds = 0.0;
    std::string failure;

    bool ok() const {
        return x_identity && z_identity && rank_matches &&
               (!series_applicable || (wave_shape && wave_decay));
    }
};

/// Symbolic identities + (Bessel) series gate + rank check in one record.
VerifyReport run_verification(const BispectralPair& pair, unsigned depth = 8,
                              unsigned max_order = 10);

std::string report_to_json(const VerifyReport& rep);

}  // namespace darboux

#endif
