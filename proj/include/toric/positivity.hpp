#pragma once

#include <optional>
#include <string>
#include <vector>

#include "toric/bundle.hpp"

namespace toric {

// Minimal degree of a splitting; on the line this is the smallest slope of a
// quotient line bundle.
inline Int mu_min(const SplittingType& s) { return s.mu_min(); }

struct NefVerdict {
    bool holds = false;
    std::string witness_curve;  // set when the verdict fails
    Int witness_degree = 0;

    explicit operator bool() const { return holds; }
};

// Nef iff every degree on every invariant curve is >= 0; ample iff >= 1.
NefVerdict is_nef(const RestrictionProfile& profile);
NefVerdict is_ample(const RestrictionProfile& profile);

// Generators of the cone of curves of the projectivized bundle: the fiber
// class C_0 and one section class per invariant curve, with their products
// against the tautological class and their pushforwards.
struct MoriGenerators {
    struct Section {
        std::string curve;     // base invariant curve, pushforward of the class
        Int xi_product;        // tautological degree = mu_min on that curve
        CurveClass pushforward;
    };
    const Fan* fan = nullptr;
    Int fiber_xi_product = 1;  // xi . C_0
    std::vector<Section> sections;
};

MoriGenerators mori_generators(const RestrictionProfile& profile);

// Is a*xi + pullback(D) nonnegative against every generator?
bool pe_class_nef(const Int& a, const DivisorClass& d, const MoriGenerators& gens);

}  // namespace toric
