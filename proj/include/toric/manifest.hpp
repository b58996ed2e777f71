#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "toric/bundle.hpp"
#include "toric/seshadri.hpp"

namespace toric {

// One JSON document describing a variety, a bundle on it, an optional twist
// and optional evaluation points. Schema-validated before any computation;
// unknown keys are rejected.
struct Manifest {
    // variety
    FanFamily family = FanFamily::ProjectiveSpace;
    int n = 0;
    BottNumbers bott;

    // bundle (exactly one of the three groups is set)
    struct Builtin {
        std::string name;
        std::vector<QVec> lines;                 // example bundles
        std::vector<std::vector<Int>> divisors;  // line bundle sums, D-basis
    };
    struct RayFiltration {
        int ray = -1;
        std::vector<std::pair<Int, QMat>> steps;  // threshold -> generators
    };
    struct FiltrationData {
        std::size_t rank = 0;
        std::vector<RayFiltration> per_ray;
    };
    struct CharacterData {
        std::size_t rank = 0;
        std::vector<std::pair<std::vector<int>, std::vector<LatticeVec>>> per_cone;
    };
    std::optional<Builtin> builtin;
    std::optional<FiltrationData> filtration_data;
    std::optional<CharacterData> character_data;

    std::optional<std::vector<Int>> twist;           // D-basis coefficients
    std::vector<std::vector<Rational>> points;       // flat homogeneous tuples
    bool assert_uniform = false;

    static Manifest from_json(const nlohmann::json& doc);
    static Manifest from_file(const std::string& path);

    Fan make_fan() const;
    EquivariantBundle make_bundle(const Fan& fan) const;
    Certificate certificate(const EquivariantBundle& bundle) const;
    nlohmann::ordered_json variety_json() const;
    nlohmann::ordered_json bundle_json() const;
};

}  // namespace toric
