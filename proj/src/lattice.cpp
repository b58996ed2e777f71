#include "toric/lattice.hpp"

#include <sstream>

namespace toric {

LatticeVec LatticeVec::unit(std::size_t n, std::size_t i) {
    LatticeVec v = zero(n);
    v[i] = 1;
    return v;
}

bool LatticeVec::is_zero() const {
    for (const auto& c : coords_)
        if (c != 0) return false;
    return true;
}

static void check_same_size(const LatticeVec& a, const LatticeVec& b, const char* op) {
    if (a.size() != b.size())
        throw DimensionError(std::string(op) + ": length mismatch (" +
                             std::to_string(a.size()) + " vs " + std::to_string(b.size()) + ")");
}

LatticeVec operator+(const LatticeVec& a, const LatticeVec& b) {
    check_same_size(a, b, "vector sum");
    std::vector<Int> c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
    return LatticeVec(std::move(c));
}

LatticeVec operator-(const LatticeVec& a, const LatticeVec& b) {
    check_same_size(a, b, "vector difference");
    std::vector<Int> c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] - b[i];
    return LatticeVec(std::move(c));
}

LatticeVec operator*(const Int& k, const LatticeVec& v) {
    std::vector<Int> c(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) c[i] = k * v[i];
    return LatticeVec(std::move(c));
}

std::string LatticeVec::str() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (i) os << ",";
        os << coords_[i].str();
    }
    os << ")";
    return os.str();
}

Int pairing(const LatticeVec& u, const LatticeVec& v) {
    check_same_size(u, v, "pairing");
    Int s = 0;
    for (std::size_t i = 0; i < u.size(); ++i) s += u[i] * v[i];
    return s;
}

LatticeVec primitive(const LatticeVec& v) {
    if (v.is_zero()) throw DegenerateInputError("primitive of the zero vector");
    Int g = 0;
    for (std::size_t i = 0; i < v.size(); ++i) g = gcd(g, abs(v[i]));
    std::vector<Int> c(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) c[i] = v[i] / g;
    return LatticeVec(std::move(c));
}

Int divide_along(const LatticeVec& diff, const LatticeVec& m) {
    check_same_size(diff, m, "divide_along");
    if (diff.is_zero()) return 0;
    // Factor a off the first nonzero coordinate of m, then check all of diff.
    std::size_t j = 0;
    while (j < m.size() && m[j] == 0) ++j;
    if (j == m.size()) throw PairingError("divide_along: zero direction");
    if (diff[j] % m[j] != 0)
        throw PairingError("divide_along: " + diff.str() + " is not a multiple of " + m.str());
    Int a = diff[j] / m[j];
    for (std::size_t i = 0; i < m.size(); ++i)
        if (diff[i] != a * m[i])
            throw PairingError("divide_along: " + diff.str() + " is not a multiple of " + m.str());
    return a;
}

LatticeVec residue_rep(const LatticeVec& u, const LatticeVec& m) {
    check_same_size(u, m, "residue");
    std::size_t j = 0;
    while (j < m.size() && m[j] == 0) ++j;
    if (j == m.size()) throw PairingError("residue modulo the zero direction");
    // Pick the unique t with (u - t*m)[j] in [0, |m[j]|).
    Int mj = abs(m[j]);
    Int r = ((u[j] % mj) + mj) % mj;
    Int t = (u[j] - r) / m[j];
    return u - t * m;
}

}  // namespace toric
