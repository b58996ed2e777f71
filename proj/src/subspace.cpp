#include "toric/subspace.hpp"

#include <sstream>

#include "toric/errors.hpp"

namespace toric {

bool is_zero_vec(const QVec& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

std::size_t rref(QMat& m) {
    if (m.empty()) return 0;
    const std::size_t rows = m.size(), cols = m[0].size();
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < cols && pivot_row < rows; ++col) {
        std::size_t sel = pivot_row;
        while (sel < rows && m[sel][col].is_zero()) ++sel;
        if (sel == rows) continue;
        std::swap(m[sel], m[pivot_row]);
        Rational inv = Rational(1) / m[pivot_row][col];
        for (auto& x : m[pivot_row]) x *= inv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == pivot_row || m[r][col].is_zero()) continue;
            Rational f = m[r][col];
            for (std::size_t c = 0; c < cols; ++c) m[r][c] -= f * m[pivot_row][c];
        }
        ++pivot_row;
    }
    return pivot_row;
}

QMat nullspace(const QMat& rows, std::size_t ambient) {
    QMat m = rows;
    std::size_t rank = rref(m);
    m.resize(rank);
    // Locate pivot columns.
    std::vector<long long> pivot_col_of_row(rank, -1);
    std::vector<bool> is_pivot(ambient, false);
    for (std::size_t r = 0; r < rank; ++r) {
        for (std::size_t c = 0; c < ambient; ++c) {
            if (!m[r][c].is_zero()) {
                pivot_col_of_row[r] = static_cast<long long>(c);
                is_pivot[c] = true;
                break;
            }
        }
    }
    QMat basis;
    for (std::size_t free_col = 0; free_col < ambient; ++free_col) {
        if (is_pivot[free_col]) continue;
        QVec v(ambient, Rational(0));
        v[free_col] = Rational(1);
        for (std::size_t r = 0; r < rank; ++r)
            v[static_cast<std::size_t>(pivot_col_of_row[r])] = -m[r][free_col];
        basis.push_back(std::move(v));
    }
    rref(basis);
    return basis;
}

std::optional<QVec> solve_square(const QMat& a, const QVec& b) {
    const std::size_t n = a.size();
    QMat coeff = a;
    for (std::size_t r = 0; r < n; ++r)
        if (a[r].size() != n) throw DimensionError("solve_square: non-square matrix");
    if (rref(coeff) < n) return std::nullopt;  // singular coefficient matrix
    QMat aug(n, QVec(n + 1, Rational(0)));
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) aug[r][c] = a[r][c];
        aug[r][n] = b[r];
    }
    rref(aug);
    QVec x(n);
    for (std::size_t r = 0; r < n; ++r) x[r] = aug[r][n];
    return x;
}

Subspace Subspace::full(std::size_t ambient) {
    QMat rows(ambient, QVec(ambient, Rational(0)));
    for (std::size_t i = 0; i < ambient; ++i) rows[i][i] = Rational(1);
    return Subspace(ambient, std::move(rows));
}

Subspace Subspace::span(std::size_t ambient, QMat rows) {
    for (const auto& r : rows)
        if (r.size() != ambient) throw DimensionError("subspace generator of wrong length");
    std::size_t rank = rref(rows);
    rows.resize(rank);
    return Subspace(ambient, std::move(rows));
}

Subspace Subspace::line(QVec v) {
    std::size_t ambient = v.size();
    if (is_zero_vec(v)) throw DegenerateInputError("line spanned by the zero vector");
    return span(ambient, {std::move(v)});
}

bool Subspace::contains(const QVec& v) const {
    if (v.size() != ambient_) throw DimensionError("containment: wrong ambient dimension");
    if (is_zero_vec(v)) return true;
    QMat m = rows_;
    m.push_back(v);
    return rref(m) == dim();
}

bool Subspace::contains(const Subspace& other) const {
    if (other.ambient_ != ambient_) throw DimensionError("containment: ambient mismatch");
    for (const auto& r : other.rows_)
        if (!contains(r)) return false;
    return true;
}

Subspace operator+(const Subspace& a, const Subspace& b) {
    if (a.ambient_ != b.ambient_) throw DimensionError("subspace sum: ambient mismatch");
    QMat rows = a.rows_;
    rows.insert(rows.end(), b.rows_.begin(), b.rows_.end());
    return Subspace::span(a.ambient_, std::move(rows));
}

Subspace Subspace::intersect(const Subspace& other) const {
    if (other.ambient_ != ambient_) throw DimensionError("intersection: ambient mismatch");
    // A ∩ B = (A⊥ + B⊥)⊥ for the standard (definite) form on Q^n.
    QMat perp = nullspace(rows_, ambient_);
    QMat perp_b = nullspace(other.rows_, ambient_);
    perp.insert(perp.end(), perp_b.begin(), perp_b.end());
    return Subspace::span(ambient_, nullspace(perp, ambient_));
}

std::string Subspace::str() const {
    std::ostringstream os;
    os << "span{";
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        if (r) os << "; ";
        os << "(";
        for (std::size_t c = 0; c < rows_[r].size(); ++c) {
            if (c) os << ",";
            os << rows_[r][c].str();
        }
        os << ")";
    }
    os << "}";
    return os.str();
}

QuotientCoords::QuotientCoords(const Subspace& sub, const Subspace& space)
    : ambient_(space.ambient()) {
    if (!space.contains(sub))
        throw DimensionError("quotient: numerator subspace not contained in the space");
    // Greedily extend a basis of sub to one of space.
    QMat acc = sub.basis();
    std::size_t rank = acc.size();
    for (const auto& row : space.basis()) {
        QMat probe = acc;
        probe.push_back(row);
        if (rref(probe) > rank) {
            acc.push_back(row);
            ext_.push_back(row);
            ++rank;
        }
    }
    // Column matrix [basis(sub) | ext] for coordinate solves; pad with a
    // kernel completion so the system is square over the ambient space.
    QMat all = sub.basis();
    all.insert(all.end(), ext_.begin(), ext_.end());
    QMat completion = nullspace(all, ambient_);
    all.insert(all.end(), completion.begin(), completion.end());
    columns_.assign(ambient_, QVec(ambient_, Rational(0)));
    for (std::size_t j = 0; j < all.size(); ++j)
        for (std::size_t i = 0; i < ambient_; ++i) columns_[i][j] = all[j][i];
    sub_dim_ = sub.dim();
}

QVec QuotientCoords::project(const QVec& v) const {
    auto x = solve_square(columns_, v);
    if (!x) throw DimensionError("quotient projection: solve failed");
    QVec out(ext_.size());
    for (std::size_t i = 0; i < ext_.size(); ++i) out[i] = (*x)[sub_dim_ + i];
    return out;
}

Subspace QuotientCoords::image(const Subspace& x) const {
    QMat rows;
    for (const auto& r : x.basis()) rows.push_back(project(r));
    return Subspace::span(ext_.size(), std::move(rows));
}

}  // namespace toric
