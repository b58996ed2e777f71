#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "toric/lattice.hpp"

namespace toric {

enum class FanFamily { ProjectiveSpace, BottTower };

// Map (i,j) -> positive twisting integer for 1 <= i < j <= n.
using BottNumbers = std::map<std::pair<int, int>, Int>;

// Divisor class in the reduced basis: D_1..D_n for a Bott tower (the primed
// divisors eliminated by the linear equivalences), a single hyperplane
// multiple for projective space.
struct DivisorClass {
    std::vector<Int> coeffs;

    friend bool operator==(const DivisorClass& a, const DivisorClass& b) {
        return a.coeffs == b.coeffs;
    }
    std::string str() const;
};

// Numerical class of a curve in the dual basis of D_1..D_n (single coordinate
// on projective space).
struct CurveClass {
    std::vector<Int> coords;

    friend bool operator==(const CurveClass& a, const CurveClass& b) {
        return a.coords == b.coords;
    }
    std::string str() const;
};

// Invariant curve: a wall (codimension-one cone) shared by exactly two
// maximal cones, with its integer wall relation
//   v_a + v_b + sum_k b_k v_{i_k} = 0
// and the primitive generator of the orthogonal line that is positive on the
// first adjacent cone.
struct InvariantCurve {
    std::string label;
    std::vector<int> wall_rays;       // ray indices, sorted, size n-1
    int cone_a = -1, cone_b = -1;     // adjacent maximal cones
    int ray_a = -1, ray_b = -1;       // opposite rays: ray_a in cone_a \ wall
    std::vector<Int> relation_coeffs; // b_k aligned with wall_rays
    LatticeVec m_tau;                 // <m_tau, v_a> = 1, zero on wall rays
};

class Fan {
public:
    // Bott tower X_n from its twisting integers; all must be >= 1.
    static Fan bott_tower(int n, const BottNumbers& numbers);
    // Projective n-space, n >= 1. n = 1 is degenerate (one wall, the whole
    // curve) and flagged as such.
    static Fan projective_space(int n);

    FanFamily family() const { return family_; }
    int dim() const { return n_; }
    bool degenerate_p1() const { return degenerate_p1_; }
    const BottNumbers& bott_numbers() const { return bott_; }
    Int bott_number(int i, int j) const;

    const std::vector<LatticeVec>& rays() const { return rays_; }
    const std::vector<std::string>& ray_labels() const { return ray_labels_; }
    const std::vector<std::vector<int>>& max_cones() const { return cones_; }
    std::string cone_label(int cone) const;
    int cone_index(std::vector<int> ray_indices) const;

    const std::vector<InvariantCurve>& walls() const { return walls_; }
    const InvariantCurve& wall(const std::string& label) const;
    int wall_index(const std::string& label) const;

    // Number of independent divisor-class coordinates (n for Bott, 1 for Pn).
    std::size_t picard_rank() const;

    // Intersection of the prime divisor of a single ray with an invariant
    // curve, read off the wall relation.
    Int ray_curve_intersection(int ray, const InvariantCurve& curve) const;

    // Reduce a divisor given on all rays to the D-basis.
    DivisorClass reduce_divisor(const std::vector<Int>& ray_coeffs) const;
    // The class of the prime divisor of one ray.
    DivisorClass ray_divisor_class(int ray) const;

    Int intersection_number(const DivisorClass& d, const InvariantCurve& curve) const;
    CurveClass curve_class(const InvariantCurve& curve) const;

    bool divisor_nef(const DivisorClass& d) const;
    bool divisor_ample(const DivisorClass& d) const;

    // Index of the ray carrying D_i (unprimed) resp. D'_i, 1-based i.
    int unprimed_ray(int i) const;
    int primed_ray(int i) const;

private:
    Fan() = default;
    void compute_walls();
    void label_walls();

    FanFamily family_ = FanFamily::ProjectiveSpace;
    int n_ = 0;
    bool degenerate_p1_ = false;
    BottNumbers bott_;
    std::vector<LatticeVec> rays_;
    std::vector<std::string> ray_labels_;
    std::vector<std::vector<int>> cones_;
    std::vector<InvariantCurve> walls_;
    std::map<std::string, int> wall_by_label_;
};

}  // namespace toric
