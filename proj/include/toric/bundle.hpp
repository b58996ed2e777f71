#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "toric/fan.hpp"
#include "toric/filtration.hpp"

namespace toric {

// One line of a direct-sum decomposition adapted to a family of filtrations,
// with its jump in each filtration.
struct AdaptedLine {
    QVec vec;
    std::vector<Int> jumps;
};

// Search for a direct-sum decomposition into lines such that every step of
// every filtration equals the sum of the lines it contains. Empty optional
// when none exists. Exhaustive for the ambient dimensions in scope (<= 6).
// The seed permutes the search order only; the multiset of jump vectors of
// any two successful runs agrees.
std::optional<std::vector<AdaptedLine>> adapted_decomposition(
    const std::vector<Filtration>& family, unsigned seed = 0);

// Splitting type of a bundle on an invariant curve: the multiset of degrees
// of its line-bundle summands, sorted ascending.
struct SplittingType {
    std::vector<Int> degrees;

    SplittingType() = default;
    explicit SplittingType(std::vector<Int> d);

    Int deg() const;
    Int mu_min() const;

    friend bool operator==(const SplittingType& a, const SplittingType& b) {
        return a.degrees == b.degrees;
    }
    friend bool operator<(const SplittingType& a, const SplittingType& b) {
        return a.degrees < b.degrees;
    }
    std::string str() const;
};

struct ProfileRow {
    std::string curve;
    SplittingType splitting;
    // Character multisets across the wall collide in some residue class; the
    // degrees above come from the filtration algorithm, and the other
    // residue-compatible pairings are listed for the record.
    bool ambiguous_characters = false;
    std::vector<SplittingType> pairing_alternatives;
};

class RestrictionProfile {
public:
    RestrictionProfile() = default;
    RestrictionProfile(const Fan* fan, std::size_t rank, std::vector<ProfileRow> rows);

    const Fan& fan() const { return *fan_; }
    std::size_t rank() const { return rank_; }
    const std::vector<ProfileRow>& rows() const { return rows_; }
    const ProfileRow& row(const std::string& curve) const;
    const SplittingType& splitting(const std::string& curve) const { return row(curve).splitting; }
    Int mu_min(const std::string& curve) const { return row(curve).splitting.mu_min(); }

private:
    const Fan* fan_ = nullptr;
    std::size_t rank_ = 0;
    std::vector<ProfileRow> rows_;
    std::map<std::string, std::size_t> by_curve_;
};

// Shift every degree on every curve by the intersection number of the
// twisting divisor with that curve.
RestrictionProfile twist(const RestrictionProfile& profile, const DivisorClass& d);

enum class BundleKind {
    Custom,
    Tangent,
    LineBundleSum,
    HirzIndecomposable,
    X3Indecomposable,
};

// Equivariant bundle given by filtrations (one per ray) or by per-cone
// character multisets. Filtration input is validated cone by cone at
// construction; character input is validated for wall consistency.
class EquivariantBundle {
public:
    static EquivariantBundle from_filtrations(const Fan& fan, std::vector<Filtration> per_ray,
                                              BundleKind kind = BundleKind::Custom);
    static EquivariantBundle from_characters(const Fan& fan, std::size_t rank,
                                             std::vector<std::vector<LatticeVec>> per_cone);

    const Fan& fan() const { return *fan_; }
    std::size_t rank() const { return rank_; }
    bool has_filtrations() const { return !filtrations_.empty(); }
    const std::vector<Filtration>& filtrations() const { return filtrations_; }
    BundleKind kind() const { return kind_; }

    // Bundles whose restriction to every line (not only the invariant ones)
    // has the same splitting type, by construction.
    bool known_uniform() const {
        return kind_ == BundleKind::Tangent || kind_ == BundleKind::LineBundleSum;
    }

    // Sorted multiset of characters attached to a maximal cone.
    const std::vector<LatticeVec>& characters(int cone) const;

    SplittingType restrict_to_curve(const InvariantCurve& curve) const;
    ProfileRow restriction_row(const InvariantCurve& curve) const;
    // Computed once and cached; only successful profiles are cached, so a
    // wall error (ambiguous character pairing) is raised on every call.
    const RestrictionProfile& restriction_profile() const;

private:
    EquivariantBundle() = default;
    void validate_filtrations();
    void validate_characters() const;
    ProfileRow restrict_by_filtrations(const InvariantCurve& curve) const;
    SplittingType restrict_by_characters(const InvariantCurve& curve) const;
    std::vector<SplittingType> residue_pairings(const InvariantCurve& curve,
                                                bool* ambiguous) const;

    const Fan* fan_ = nullptr;
    std::size_t rank_ = 0;
    BundleKind kind_ = BundleKind::Custom;
    std::vector<Filtration> filtrations_;          // one per ray when present
    std::vector<std::vector<LatticeVec>> chars_;   // one multiset per maximal cone
    // Write-once profile cache; copies of the bundle share it.
    mutable std::shared_ptr<const RestrictionProfile> profile_cache_;
};

// Built-in bundles.
EquivariantBundle make_tangent(const Fan& fan);
EquivariantBundle make_line_bundle_sum(const Fan& fan, const std::vector<DivisorClass>& divisors);
// Rank-2 bundle on X_2 with three pairwise-distinct lines on the first three
// rays and the trivial filtration on the fourth.
EquivariantBundle make_hirz_indecomposable(const Fan& fan, const QVec& l1, const QVec& l2,
                                           const QVec& l3);
// Rank-2 bundle on X_3 with pairwise-distinct lines on rays v_1, v_2, v_4 and
// trivial filtrations elsewhere.
EquivariantBundle make_x3_indecomposable(const Fan& fan, const QVec& l1, const QVec& l2,
                                         const QVec& l4);

}  // namespace toric
