#pragma once

#include <stdexcept>
#include <string>

namespace toric {

// Base class for all engine errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Bad user input: schema violations, out-of-range parameters, malformed data.
struct ValidationError : Error {
    using Error::Error;
};

// Vector length mismatch between lattice operands.
struct DimensionError : ValidationError {
    using ValidationError::ValidationError;
};

// Degenerate input where a nonzero value is required (e.g. primitive of 0).
struct DegenerateInputError : ValidationError {
    using ValidationError::ValidationError;
};

// Bundle data is internally inconsistent (character/filtration mismatches).
struct BundleDataError : Error {
    using Error::Error;
};

// A difference of characters is not proportional to the wall direction.
struct PairingError : BundleDataError {
    using BundleDataError::BundleDataError;
};

// Filtrations admit no adapted decomposition on some maximal cone.
struct CompatibilityError : BundleDataError {
    using BundleDataError::BundleDataError;
};

// Character-mode restriction hit a residue class with more than one member.
struct AmbiguousPairingError : BundleDataError {
    using BundleDataError::BundleDataError;
};

// Character multisets cannot be matched across a wall.
struct InconsistentDataError : BundleDataError {
    using BundleDataError::BundleDataError;
};

// A theorem's hypotheses failed; carries the rendered hypothesis report.
struct HypothesisError : Error {
    explicit HypothesisError(const std::string& msg, std::string report_json = "")
        : Error(msg), report(std::move(report_json)) {}
    std::string report;
};

// Caller violated an operation precondition (e.g. Seshadri of a non-nef bundle).
struct PreconditionError : Error {
    using Error::Error;
};

}  // namespace toric
