#include "toric/filtration.hpp"

#include "toric/errors.hpp"

namespace toric {

Filtration::Filtration(std::size_t ambient, std::vector<Drop> drops)
    : ambient_(ambient), drops_(std::move(drops)) {
    if (drops_.empty())
        throw ValidationError("filtration needs at least the drop to the zero subspace");
    const Subspace full = Subspace::full(ambient_);
    for (std::size_t i = 0; i < drops_.size(); ++i) {
        const auto& d = drops_[i];
        if (d.space.ambient() != ambient_)
            throw DimensionError("filtration subspace has wrong ambient dimension");
        if (i > 0 && d.from <= drops_[i - 1].from)
            throw ValidationError("filtration thresholds must strictly increase");
        const Subspace& prev = i == 0 ? full : drops_[i - 1].space;
        if (!prev.contains(d.space) || d.space == prev)
            throw ValidationError("filtration subspaces must strictly decrease");
    }
    if (!drops_.back().space.is_zero())
        throw ValidationError("filtration must terminate at the zero subspace");
}

Subspace Filtration::step(Int i) const {
    if (i < drops_.front().from) return Subspace::full(ambient_);
    const Subspace* cur = nullptr;
    for (const auto& d : drops_) {
        if (d.from <= i) cur = &d.space;
        else break;
    }
    return *cur;
}

Int Filtration::jump_of(const QVec& v) const {
    if (is_zero_vec(v)) throw DegenerateInputError("jump of the zero vector");
    for (const auto& d : drops_)
        if (!d.space.contains(v)) return d.from - 1;
    throw DegenerateInputError("jump_of: vector lies in the zero subspace");
}

Int Filtration::jump_of(const Subspace& line) const {
    if (line.is_zero()) throw DegenerateInputError("jump of the zero subspace");
    for (const auto& d : drops_)
        if (!d.space.contains(line)) return d.from - 1;
    throw DegenerateInputError("jump_of: subspace lies in the zero subspace");
}

std::vector<Int> Filtration::jump_values() const {
    std::vector<Int> vals;
    for (const auto& d : drops_) vals.push_back(d.from - 1);
    return vals;
}

std::vector<Int> Filtration::jump_multiset() const {
    std::vector<Int> out;
    std::size_t prev_dim = ambient_;
    for (const auto& d : drops_) {
        std::size_t cur = d.space.dim();
        for (std::size_t i = cur; i < prev_dim; ++i) out.push_back(d.from - 1);
        prev_dim = cur;
    }
    return out;
}

}  // namespace toric
