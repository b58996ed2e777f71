#pragma once

#include <map>
#include <vector>

#include "toric/bundle.hpp"

namespace toric {
namespace oracle {

struct OracleConfig {
    std::size_t max_rank = 3;
    int random_lines = 8;       // extra candidate lines beyond the step semilattice
    unsigned seed = 12345;
    int coeff_bound = 3;        // coordinates of the random candidate lines
};

// Every adapted decomposition assembled from candidate lines: the 1-dim
// members of the meet-semilattice of all filtration steps plus a bounded
// batch of random lines. Brute force over r-subsets, checked against the
// definition; independent of the engine's backtracking search.
std::vector<std::vector<AdaptedLine>> decompositions(const std::vector<Filtration>& family,
                                                     const OracleConfig& cfg = {});

// Induced splitting degrees of one decomposition of the graded pieces of a
// wall; used to certify the uniqueness of the restriction. Returns every
// splitting obtainable from some oracle decomposition of each graded piece.
std::vector<SplittingType> wall_splittings(const EquivariantBundle& bundle,
                                           const InvariantCurve& curve,
                                           const OracleConfig& cfg = {});

// Divisor-by-curve intersection matrix from the closed-form class tables of
// the short towers (and the single hyperplane class on projective space);
// no wall relations involved. Key: (divisor index 1..picard_rank, curve
// label).
std::map<std::pair<int, std::string>, Int> intersections(const Fan& fan);

// Degree of the restriction from the character multisets alone: the paired
// differences sum telescopes, so the result is pairing-independent.
Int splitting_deg(const EquivariantBundle& bundle, const InvariantCurve& curve);

}  // namespace oracle
}  // namespace toric
