#pragma once

#include <optional>
#include <string>
#include <vector>

#include "toric/rational.hpp"

namespace toric {

using QVec = std::vector<Rational>;
using QMat = std::vector<QVec>;

// In-place reduced row echelon form; returns the rank. Zero rows are moved to
// the bottom but not removed.
std::size_t rref(QMat& m);

// Right kernel of the row space: a canonical basis of {x : rows * x = 0}.
QMat nullspace(const QMat& rows, std::size_t ambient);

// Solve the square system A x = b exactly; empty optional when A is singular.
std::optional<QVec> solve_square(const QMat& a, const QVec& b);

bool is_zero_vec(const QVec& v);

// Linear subspace of Q^n held in reduced row echelon form, so equality is
// structural and sums/intersections are exact.
class Subspace {
public:
    Subspace() : ambient_(0) {}
    static Subspace zero(std::size_t ambient) { return Subspace(ambient, {}); }
    static Subspace full(std::size_t ambient);
    static Subspace span(std::size_t ambient, QMat rows);
    static Subspace line(QVec v);

    std::size_t ambient() const { return ambient_; }
    std::size_t dim() const { return rows_.size(); }
    bool is_zero() const { return rows_.empty(); }
    bool is_full() const { return dim() == ambient_; }
    const QMat& basis() const { return rows_; }

    bool contains(const QVec& v) const;
    bool contains(const Subspace& other) const;

    friend Subspace operator+(const Subspace& a, const Subspace& b);
    Subspace intersect(const Subspace& other) const;

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_ == b.ambient_ && a.rows_ == b.rows_;
    }
    friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

    std::string str() const;

private:
    Subspace(std::size_t ambient, QMat rows) : ambient_(ambient), rows_(std::move(rows)) {}

    std::size_t ambient_;
    QMat rows_;  // RREF, no zero rows
};

// Coordinates on a quotient V/S for S ⊆ V: fixes a basis extension of S
// inside V and projects vectors of V onto the extension part.
class QuotientCoords {
public:
    QuotientCoords(const Subspace& sub, const Subspace& space);

    std::size_t dim() const { return ext_.size(); }

    // Coordinates of v in the quotient (v must lie in the space).
    QVec project(const QVec& v) const;

    // Image of a subspace of the space in the quotient.
    Subspace image(const Subspace& x) const;

private:
    std::size_t ambient_;
    std::size_t sub_dim_ = 0;
    QMat columns_;  // basis of S followed by the extension, as a column matrix
    QMat ext_;      // extension vectors (quotient basis representatives)
};

}  // namespace toric
