#include "toric/positivity.hpp"

#include "toric/errors.hpp"

namespace toric {

namespace {

NefVerdict degree_bound(const RestrictionProfile& profile, const Int& bound) {
    for (const auto& row : profile.rows()) {
        for (const auto& d : row.splitting.degrees) {
            if (d < bound) {
                NefVerdict v;
                v.holds = false;
                v.witness_curve = row.curve;
                v.witness_degree = d;
                return v;
            }
        }
    }
    NefVerdict v;
    v.holds = true;
    return v;
}

}  // namespace

NefVerdict is_nef(const RestrictionProfile& profile) { return degree_bound(profile, 0); }

NefVerdict is_ample(const RestrictionProfile& profile) { return degree_bound(profile, 1); }

MoriGenerators mori_generators(const RestrictionProfile& profile) {
    MoriGenerators gens;
    gens.fan = &profile.fan();
    gens.fiber_xi_product = 1;
    for (const auto& row : profile.rows()) {
        MoriGenerators::Section s;
        s.curve = row.curve;
        s.xi_product = row.splitting.mu_min();
        s.pushforward = profile.fan().curve_class(profile.fan().wall(row.curve));
        gens.sections.push_back(std::move(s));
    }
    return gens;
}

bool pe_class_nef(const Int& a, const DivisorClass& d, const MoriGenerators& gens) {
    if (a < 0) throw ValidationError("pe_class_nef expects a nonnegative multiple of xi");
    // Fiber class: pullbacks vanish on it.
    if (a * gens.fiber_xi_product < 0) return false;
    for (const auto& s : gens.sections) {
        Int base = gens.fan->intersection_number(d, gens.fan->wall(s.curve));
        if (a * s.xi_product + base < 0) return false;
    }
    return true;
}

}  // namespace toric
