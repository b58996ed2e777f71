#pragma once

#include <string>
#include <vector>

#include "toric/rational.hpp"

namespace toric {

// Integer lattice vector. Used both for cocharacters (rays in N) and for
// characters (in the dual lattice M); the pairing below is the duality.
class LatticeVec {
public:
    LatticeVec() = default;
    explicit LatticeVec(std::vector<Int> coords) : coords_(std::move(coords)) {}
    static LatticeVec zero(std::size_t n) { return LatticeVec(std::vector<Int>(n, Int(0))); }
    static LatticeVec unit(std::size_t n, std::size_t i);

    std::size_t size() const { return coords_.size(); }
    const Int& operator[](std::size_t i) const { return coords_[i]; }
    Int& operator[](std::size_t i) { return coords_[i]; }
    const std::vector<Int>& coords() const { return coords_; }

    bool is_zero() const;

    friend bool operator==(const LatticeVec& a, const LatticeVec& b) {
        return a.coords_ == b.coords_;
    }
    friend bool operator!=(const LatticeVec& a, const LatticeVec& b) { return !(a == b); }
    // Lexicographic; gives multisets a canonical sorted order.
    friend bool operator<(const LatticeVec& a, const LatticeVec& b) {
        return a.coords_ < b.coords_;
    }

    friend LatticeVec operator+(const LatticeVec& a, const LatticeVec& b);
    friend LatticeVec operator-(const LatticeVec& a, const LatticeVec& b);
    friend LatticeVec operator*(const Int& k, const LatticeVec& v);

    std::string str() const;

private:
    std::vector<Int> coords_;
};

// Dual pairing <u, v>: the standard dot product. Throws DimensionError on
// length mismatch.
Int pairing(const LatticeVec& u, const LatticeVec& v);

// v divided by the gcd of its entries; same direction. Throws
// DegenerateInputError for the zero vector.
LatticeVec primitive(const LatticeVec& v);

// Given diff = a*m for a primitive m, return a. Throws PairingError when diff
// is not an integer multiple of m (signals inconsistent character data).
Int divide_along(const LatticeVec& diff, const LatticeVec& m);

// Canonical representative of u modulo integer multiples of the primitive
// direction m. Two characters are equal as residues iff their representatives
// are equal vectors.
LatticeVec residue_rep(const LatticeVec& u, const LatticeVec& m);

// Character class modulo a primitive direction. Two characters are equal as
// residues iff their difference is an integer multiple of the direction.
struct ResidueClass {
    LatticeVec representative;      // canonical: see residue_rep
    LatticeVec modulus_direction;   // primitive

    static ResidueClass of(const LatticeVec& u, const LatticeVec& m) {
        return ResidueClass{residue_rep(u, m), m};
    }
    friend bool operator==(const ResidueClass& a, const ResidueClass& b) {
        return a.modulus_direction == b.modulus_direction &&
               a.representative == b.representative;
    }
    friend bool operator<(const ResidueClass& a, const ResidueClass& b) {
        if (a.modulus_direction != b.modulus_direction)
            return a.modulus_direction < b.modulus_direction;
        return a.representative < b.representative;
    }
};

}  // namespace toric
