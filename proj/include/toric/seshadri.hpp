#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "toric/positivity.hpp"

namespace toric {

// Point of a Bott tower in homogeneous coordinates [z_1:w_1:...:z_n:w_n] of
// the quotient construction; (z_i, w_i) != (0, 0) for every stage.
struct TowerPoint {
    std::vector<std::pair<Rational, Rational>> coords;

    static TowerPoint from_flat(const std::vector<Rational>& flat);
    std::string str() const;
};

// Validates the point against the fan and classifies it: the smallest i such
// that z_j = 0 for all j > i. Membership in the section-curve chain is
// monotone in the level.
int gamma_level(const Fan& fan, const TowerPoint& x);

// Minimal tautological degree over the level-i section curve, valid once the
// governing theorem's hypotheses hold: on a height-2 tower {1 -> D2', 2 -> D1},
// on height 3 {1 -> l5, 2 -> l8, 3 -> l10}.
Int gamma_mu(const RestrictionProfile& profile, int level);

enum class Theorem { Projective, Hirzebruch, X3 };

// Uniformity evidence for the all-lines hypothesis on projective space.
enum class Certificate { KnownUniform, Asserted, None };

struct HypothesisEntry {
    std::string name;
    std::string detail;  // the relation instantiated with actual values
    bool pass = false;
    bool gating = true;  // informational entries do not gate the result
};

struct HypothesisReport {
    Theorem theorem = Theorem::Projective;
    std::vector<HypothesisEntry> entries;

    bool all_pass() const {
        for (const auto& e : entries)
            if (e.gating && !e.pass) return false;
        return true;
    }
    std::string str() const;
};

HypothesisReport check_hypotheses(const Fan& fan, const RestrictionProfile& profile,
                                  Theorem theorem, Certificate certificate = Certificate::None);

struct SeshadriValue {
    enum class Kind { Exact, Interval, LowerBound };
    Kind kind = Kind::Exact;
    Rational lower;
    std::optional<Rational> upper;  // absent for LowerBound (left open)

    static SeshadriValue exact(Rational v);
    static SeshadriValue interval(Rational lo, Rational hi);
    static SeshadriValue lower_bound(Rational lo);
    std::string str() const;
};

struct SeshadriResult {
    SeshadriValue value;
    HypothesisReport report;
    std::map<int, Int> per_gamma_mu;  // level -> minimal degree, tower branches
    int level = 0;                    // 0 on projective space (point-independent)
    std::vector<std::string> notes;
};

// Projective-space branch: exact when the all-lines hypothesis is certified,
// otherwise the always-valid lower bound with the upper end left open.
SeshadriResult seshadri_projective(const RestrictionProfile& profile, Certificate certificate);

// Height-2 branch: two-sided bounds from the governing equality hypothesis;
// collapses to an exact value when the endpoints agree (in particular when
// mu_2 >= mu_1).
SeshadriResult seshadri_hirzebruch(const RestrictionProfile& profile, const TowerPoint& x);

// Height-3 branch: exact piecewise value by level, cross-checked against the
// recursive form through the height-2 slice.
SeshadriResult seshadri_x3(const RestrictionProfile& profile, const TowerPoint& x);

}  // namespace toric
