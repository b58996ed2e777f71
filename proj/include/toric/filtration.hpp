#pragma once

#include <vector>

#include "toric/subspace.hpp"

namespace toric {

// Decreasing filtration of Q^r by subspaces, stored sparsely at its drop
// thresholds. step(i) equals the full space for i below the first threshold
// and the subspace of the largest threshold <= i afterwards; the last drop
// must be to the zero subspace.
class Filtration {
public:
    struct Drop {
        Int from;  // first index at which the subspace applies
        Subspace space;
    };

    Filtration() = default;
    // drops must be sorted by threshold with strictly decreasing subspaces,
    // ending at zero. The trivial filtration (full at <=0, zero at >0) is
    // Filtration::trivial(r).
    Filtration(std::size_t ambient, std::vector<Drop> drops);

    static Filtration trivial(std::size_t ambient) {
        return Filtration(ambient, {{1, Subspace::zero(ambient)}});
    }

    std::size_t ambient() const { return ambient_; }
    const std::vector<Drop>& drops() const { return drops_; }

    Subspace step(Int i) const;

    // Largest i with v inside step(i); v must be nonzero.
    Int jump_of(const QVec& v) const;
    // Largest i with the subspace inside step(i); must be nonzero.
    Int jump_of(const Subspace& line) const;

    // The finite set of values jump_of can take, ascending.
    std::vector<Int> jump_values() const;
    // Multiset of jump values of any adapted decomposition: value t-1 occurs
    // dim step(t-1) - dim step(t) times.
    std::vector<Int> jump_multiset() const;

    friend bool operator==(const Filtration& a, const Filtration& b) {
        if (a.ambient_ != b.ambient_ || a.drops_.size() != b.drops_.size()) return false;
        for (std::size_t i = 0; i < a.drops_.size(); ++i)
            if (a.drops_[i].from != b.drops_[i].from || a.drops_[i].space != b.drops_[i].space)
                return false;
        return true;
    }

private:
    std::size_t ambient_ = 0;
    std::vector<Drop> drops_;
};

}  // namespace toric
