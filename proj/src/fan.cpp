#include "toric/fan.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "toric/errors.hpp"
#include "toric/subspace.hpp"

namespace toric {

std::string DivisorClass::str() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i] == 0) continue;
        if (!first) os << " + ";
        os << coeffs[i].str() << "*D" << (i + 1);
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

std::string CurveClass::str() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (i) os << ",";
        os << coords[i].str();
    }
    os << ")";
    return os.str();
}

Int Fan::bott_number(int i, int j) const {
    auto it = bott_.find({i, j});
    if (it == bott_.end())
        throw ValidationError("missing twisting integer c_{" + std::to_string(i) + "," +
                              std::to_string(j) + "}");
    return it->second;
}

Fan Fan::bott_tower(int n, const BottNumbers& numbers) {
    if (n < 1) throw ValidationError("tower height must be at least 1");
    for (int i = 1; i < n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            auto it = numbers.find({i, j});
            if (it == numbers.end())
                throw ValidationError("missing twisting integer c_{" + std::to_string(i) + "," +
                                      std::to_string(j) + "}");
            if (it->second < 1)
                throw ValidationError("twisting integers must be positive, got c_{" +
                                      std::to_string(i) + "," + std::to_string(j) +
                                      "} = " + it->second.str());
        }
    for (const auto& [key, val] : numbers) {
        (void)val;
        if (!(1 <= key.first && key.first < key.second && key.second <= n))
            throw ValidationError("twisting integer index (" + std::to_string(key.first) + "," +
                                  std::to_string(key.second) + ") out of range");
    }

    Fan fan;
    fan.family_ = FanFamily::BottTower;
    fan.n_ = n;
    fan.bott_ = numbers;

    // Rays: v_i = e_i for i = 1..n; v_{n+i} = -e_i + sum_{j>i} c_{i,j} e_j.
    for (int i = 1; i <= n; ++i) {
        fan.rays_.push_back(LatticeVec::unit(n, i - 1));
        fan.ray_labels_.push_back("D" + std::to_string(i) + "'");
    }
    for (int i = 1; i <= n; ++i) {
        LatticeVec v = LatticeVec::zero(n);
        v[i - 1] = -1;
        for (int j = i + 1; j <= n; ++j) v[j - 1] = fan.bott_number(i, j);
        fan.rays_.push_back(v);
        fan.ray_labels_.push_back("D" + std::to_string(i));
    }

    // Maximal cones: one ray of each pair {v_i, v_{n+i}}.
    for (int mask = 0; mask < (1 << n); ++mask) {
        std::vector<int> cone;
        for (int slot = 0; slot < n; ++slot)
            cone.push_back((mask >> slot) & 1 ? n + slot : slot);
        std::sort(cone.begin(), cone.end());
        fan.cones_.push_back(std::move(cone));
    }
    std::sort(fan.cones_.begin(), fan.cones_.end());

    fan.compute_walls();
    fan.label_walls();
    return fan;
}

Fan Fan::projective_space(int n) {
    if (n < 1) throw ValidationError("projective space needs n >= 1");
    Fan fan;
    fan.family_ = FanFamily::ProjectiveSpace;
    fan.n_ = n;
    fan.degenerate_p1_ = (n == 1);

    // Rays e_0 = -(e_1 + ... + e_n), e_1, ..., e_n.
    LatticeVec e0 = LatticeVec::zero(n);
    for (int i = 0; i < n; ++i) e0[i] = -1;
    fan.rays_.push_back(e0);
    fan.ray_labels_.push_back("D0");
    for (int i = 1; i <= n; ++i) {
        fan.rays_.push_back(LatticeVec::unit(n, i - 1));
        fan.ray_labels_.push_back("D" + std::to_string(i));
    }

    // Maximal cones omit one ray each.
    for (int omit = 0; omit <= n; ++omit) {
        std::vector<int> cone;
        for (int i = 0; i <= n; ++i)
            if (i != omit) cone.push_back(i);
        fan.cones_.push_back(std::move(cone));
    }
    std::sort(fan.cones_.begin(), fan.cones_.end());

    fan.compute_walls();
    fan.label_walls();
    return fan;
}

void Fan::compute_walls() {
    std::map<std::vector<int>, std::vector<std::pair<int, int>>> facets;
    for (int c = 0; c < static_cast<int>(cones_.size()); ++c) {
        for (int drop : cones_[c]) {
            std::vector<int> tau;
            for (int r : cones_[c])
                if (r != drop) tau.push_back(r);
            facets[tau].push_back({c, drop});
        }
    }

    for (const auto& [tau, incident] : facets) {
        if (incident.size() != 2)
            throw ValidationError("fan is not complete: a wall is not shared by two cones");
        InvariantCurve w;
        w.wall_rays = tau;
        w.cone_a = incident[0].first;
        w.ray_a = incident[0].second;
        w.cone_b = incident[1].first;
        w.ray_b = incident[1].second;

        const std::size_t n = static_cast<std::size_t>(n_);
        // Expand v_b over the basis of cone_a: v_b = x_a v_a + sum x_k v_{i_k};
        // smoothness forces x_a = -1 and the relation coefficients are -x_k.
        QMat basis(n, QVec(n, Rational(0)));
        std::vector<int> col_ray(n);
        for (std::size_t col = 0; col < n; ++col) {
            int ray = cones_[w.cone_a][col];
            col_ray[col] = ray;
            for (std::size_t row = 0; row < n; ++row)
                basis[row][col] = Rational(rays_[ray][row]);
        }
        QVec rhs(n);
        for (std::size_t row = 0; row < n; ++row) rhs[row] = Rational(rays_[w.ray_b][row]);
        auto x = solve_square(basis, rhs);
        if (!x) throw ValidationError("degenerate maximal cone");
        w.relation_coeffs.assign(tau.size(), Int(0));
        for (std::size_t col = 0; col < n; ++col) {
            const Rational& xi = (*x)[col];
            if (!xi.is_integer()) throw ValidationError("fan is not smooth across a wall");
            if (col_ray[col] == w.ray_a) {
                if (xi != Rational(-1))
                    throw ValidationError("fan is not smooth across a wall");
            } else {
                auto pos = std::find(tau.begin(), tau.end(), col_ray[col]) - tau.begin();
                w.relation_coeffs[static_cast<std::size_t>(pos)] = -xi.num();
            }
        }

        // m_tau: zero on the wall rays, value 1 on v_a (then -1 on v_b).
        QMat rows(n, QVec(n, Rational(0)));
        QVec target(n, Rational(0));
        for (std::size_t row = 0; row < n; ++row) {
            int ray = cones_[w.cone_a][row];
            for (std::size_t col = 0; col < n; ++col) rows[row][col] = Rational(rays_[ray][col]);
            target[row] = Rational(ray == w.ray_a ? 1 : 0);
        }
        auto m = solve_square(rows, target);
        if (!m) throw ValidationError("degenerate maximal cone");
        std::vector<Int> mi(n);
        for (std::size_t i = 0; i < n; ++i) {
            if (!(*m)[i].is_integer()) throw ValidationError("fan is not smooth across a wall");
            mi[i] = (*m)[i].num();
        }
        w.m_tau = LatticeVec(std::move(mi));
        if (pairing(w.m_tau, rays_[w.ray_b]) != -1)
            throw ValidationError("wall relation inconsistent with the dual generator");

        walls_.push_back(std::move(w));
    }
}

void Fan::label_walls() {
    if (family_ == FanFamily::BottTower && n_ == 1) {
        walls_[0].label = "X1";
    } else if (family_ == FanFamily::BottTower && n_ == 2) {
        // Table order D1', D2', D1, D2.
        const std::vector<std::vector<int>> order = {{0}, {1}, {2}, {3}};
        std::vector<InvariantCurve> sorted;
        for (const auto& tau : order) {
            auto it = std::find_if(walls_.begin(), walls_.end(),
                                   [&](const InvariantCurve& w) { return w.wall_rays == tau; });
            if (it == walls_.end()) throw ValidationError("missing expected wall");
            it->label = ray_labels_[tau[0]];
            sorted.push_back(std::move(*it));
            walls_.erase(it);
        }
        walls_ = std::move(sorted);
    } else if (family_ == FanFamily::BottTower && n_ == 3) {
        // Pairwise divisor intersections in the standard enumeration l1..l12.
        const std::vector<std::vector<int>> order = {{0, 1}, {0, 2}, {0, 4}, {0, 5},
                                                     {1, 2}, {1, 3}, {1, 5}, {2, 3},
                                                     {2, 4}, {3, 4}, {3, 5}, {4, 5}};
        std::vector<InvariantCurve> sorted;
        for (std::size_t k = 0; k < order.size(); ++k) {
            auto it = std::find_if(walls_.begin(), walls_.end(),
                                   [&](const InvariantCurve& w) { return w.wall_rays == order[k]; });
            if (it == walls_.end()) throw ValidationError("missing expected wall");
            it->label = "l" + std::to_string(k + 1);
            sorted.push_back(std::move(*it));
            walls_.erase(it);
        }
        walls_ = std::move(sorted);
    } else {
        // Label by the rays spanning the wall; walls are already in lex order.
        for (auto& w : walls_) {
            std::ostringstream os;
            os << "l(";
            for (std::size_t i = 0; i < w.wall_rays.size(); ++i) {
                if (i) os << ",";
                os << w.wall_rays[i];
            }
            os << ")";
            w.label = os.str();
        }
        if (family_ == FanFamily::ProjectiveSpace && n_ == 1) walls_[0].label = "l()";
    }
    for (int i = 0; i < static_cast<int>(walls_.size()); ++i) wall_by_label_[walls_[i].label] = i;
}

std::string Fan::cone_label(int cone) const {
    std::ostringstream os;
    os << "sigma(";
    const auto& c = cones_[static_cast<std::size_t>(cone)];
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) os << ",";
        os << (family_ == FanFamily::BottTower ? c[i] + 1 : c[i]);
    }
    os << ")";
    return os.str();
}

int Fan::cone_index(std::vector<int> ray_indices) const {
    std::sort(ray_indices.begin(), ray_indices.end());
    for (int c = 0; c < static_cast<int>(cones_.size()); ++c)
        if (cones_[static_cast<std::size_t>(c)] == ray_indices) return c;
    throw ValidationError("no maximal cone with the given rays");
}

const InvariantCurve& Fan::wall(const std::string& label) const {
    return walls_[static_cast<std::size_t>(wall_index(label))];
}

int Fan::wall_index(const std::string& label) const {
    auto it = wall_by_label_.find(label);
    if (it == wall_by_label_.end()) throw ValidationError("unknown invariant curve: " + label);
    return it->second;
}

std::size_t Fan::picard_rank() const {
    return family_ == FanFamily::BottTower ? static_cast<std::size_t>(n_) : 1;
}

int Fan::unprimed_ray(int i) const {
    if (family_ != FanFamily::BottTower) throw ValidationError("unprimed_ray: tower fans only");
    if (i < 1 || i > n_) throw ValidationError("divisor index out of range");
    return n_ + i - 1;
}

int Fan::primed_ray(int i) const {
    if (family_ != FanFamily::BottTower) throw ValidationError("primed_ray: tower fans only");
    if (i < 1 || i > n_) throw ValidationError("divisor index out of range");
    return i - 1;
}

Int Fan::ray_curve_intersection(int ray, const InvariantCurve& curve) const {
    if (ray == curve.ray_a || ray == curve.ray_b) return 1;
    for (std::size_t k = 0; k < curve.wall_rays.size(); ++k)
        if (curve.wall_rays[k] == ray) return curve.relation_coeffs[k];
    return 0;
}

DivisorClass Fan::reduce_divisor(const std::vector<Int>& ray_coeffs) const {
    if (ray_coeffs.size() != rays_.size())
        throw DimensionError("reduce_divisor: one coefficient per ray required");
    if (family_ == FanFamily::ProjectiveSpace) {
        Int total = 0;
        for (const auto& c : ray_coeffs) total += c;
        return DivisorClass{{total}};
    }
    std::vector<Int> out(static_cast<std::size_t>(n_), Int(0));
    for (int i = 1; i <= n_; ++i) {
        // D_i stays itself; D'_i = D_i - sum_{k<i} c_{k,i} D_k.
        out[static_cast<std::size_t>(i - 1)] += ray_coeffs[static_cast<std::size_t>(unprimed_ray(i))];
        const Int& primed = ray_coeffs[static_cast<std::size_t>(primed_ray(i))];
        if (primed != 0) {
            out[static_cast<std::size_t>(i - 1)] += primed;
            for (int k = 1; k < i; ++k)
                out[static_cast<std::size_t>(k - 1)] -= primed * bott_number(k, i);
        }
    }
    return DivisorClass{std::move(out)};
}

DivisorClass Fan::ray_divisor_class(int ray) const {
    std::vector<Int> coeffs(rays_.size(), Int(0));
    coeffs[static_cast<std::size_t>(ray)] = 1;
    return reduce_divisor(coeffs);
}

Int Fan::intersection_number(const DivisorClass& d, const InvariantCurve& curve) const {
    if (d.coeffs.size() != picard_rank())
        throw DimensionError("divisor class has wrong number of coordinates");
    if (family_ == FanFamily::ProjectiveSpace) {
        // Every ray divisor meets every invariant curve once.
        return d.coeffs[0] * ray_curve_intersection(0, curve);
    }
    Int total = 0;
    for (int i = 1; i <= n_; ++i)
        total += d.coeffs[static_cast<std::size_t>(i - 1)] *
                 ray_curve_intersection(unprimed_ray(i), curve);
    return total;
}

CurveClass Fan::curve_class(const InvariantCurve& curve) const {
    std::vector<Int> coords;
    if (family_ == FanFamily::ProjectiveSpace) {
        coords.push_back(ray_curve_intersection(0, curve));
    } else {
        for (int i = 1; i <= n_; ++i)
            coords.push_back(ray_curve_intersection(unprimed_ray(i), curve));
    }
    return CurveClass{std::move(coords)};
}

bool Fan::divisor_nef(const DivisorClass& d) const {
    if (d.coeffs.size() != picard_rank())
        throw DimensionError("divisor class has wrong number of coordinates");
    for (const auto& c : d.coeffs)
        if (c < 0) return false;
    return true;
}

bool Fan::divisor_ample(const DivisorClass& d) const {
    if (d.coeffs.size() != picard_rank())
        throw DimensionError("divisor class has wrong number of coordinates");
    for (const auto& c : d.coeffs)
        if (c <= 0) return false;
    return true;
}

}  // namespace toric
