#include "toric/manifest.hpp"

#include <fstream>
#include <set>

#include "toric/errors.hpp"

namespace toric {

namespace {

using nlohmann::json;

void check_keys(const json& obj, const std::set<std::string>& allowed, const std::string& where) {
    if (!obj.is_object()) throw ValidationError(where + ": expected an object");
    for (auto it = obj.begin(); it != obj.end(); ++it)
        if (!allowed.count(it.key()))
            throw ValidationError(where + ": unknown key '" + it.key() + "'");
}

const json& need(const json& obj, const std::string& key, const std::string& where) {
    auto it = obj.find(key);
    if (it == obj.end()) throw ValidationError(where + ": missing key '" + key + "'");
    return *it;
}

Int parse_int_value(const json& v, const std::string& where) {
    if (v.is_number_integer()) return Int(v.get<long long>());
    if (v.is_string()) return parse_int(v.get<std::string>());
    throw ValidationError(where + ": expected an integer (number or string)");
}

Rational parse_rational_value(const json& v, const std::string& where) {
    if (v.is_number_integer()) return Rational(Int(v.get<long long>()));
    if (v.is_string()) return parse_rational(v.get<std::string>());
    throw ValidationError(where + ": expected an exact number (integer or rational string)");
}

int parse_small_int(const json& v, const std::string& where) {
    if (!v.is_number_integer()) throw ValidationError(where + ": expected an integer");
    return v.get<int>();
}

QVec parse_qvec(const json& v, const std::string& where) {
    if (!v.is_array()) throw ValidationError(where + ": expected an array");
    QVec out;
    for (const auto& x : v) out.push_back(parse_rational_value(x, where));
    return out;
}

std::vector<Int> parse_int_vec(const json& v, const std::string& where) {
    if (!v.is_array()) throw ValidationError(where + ": expected an array");
    std::vector<Int> out;
    for (const auto& x : v) out.push_back(parse_int_value(x, where));
    return out;
}

void parse_variety(const json& v, Manifest& m) {
    check_keys(v, {"projective_space", "bott_tower"}, "variety");
    if (v.size() != 1) throw ValidationError("variety: give exactly one family");
    if (v.contains("projective_space")) {
        const json& p = v["projective_space"];
        check_keys(p, {"n"}, "variety.projective_space");
        m.family = FanFamily::ProjectiveSpace;
        m.n = parse_small_int(need(p, "n", "projective_space"), "projective_space.n");
    } else {
        const json& b = v["bott_tower"];
        check_keys(b, {"n", "bott_numbers"}, "variety.bott_tower");
        m.family = FanFamily::BottTower;
        m.n = parse_small_int(need(b, "n", "bott_tower"), "bott_tower.n");
        const json& numbers = need(b, "bott_numbers", "bott_tower");
        if (!numbers.is_object()) throw ValidationError("bott_numbers: expected an object");
        for (auto it = numbers.begin(); it != numbers.end(); ++it) {
            auto comma = it.key().find(',');
            if (comma == std::string::npos)
                throw ValidationError("bott_numbers: keys look like \"i,j\"");
            int i = 0, j = 0;
            try {
                i = std::stoi(it.key().substr(0, comma));
                j = std::stoi(it.key().substr(comma + 1));
            } catch (const std::exception&) {
                throw ValidationError("bott_numbers: keys look like \"i,j\"");
            }
            m.bott[{i, j}] = parse_int_value(it.value(), "bott_numbers");
        }
    }
}

void parse_bundle(const json& v, Manifest& m) {
    check_keys(v, {"builtin", "filtrations", "characters"}, "bundle");
    if (v.size() != 1) throw ValidationError("bundle: give exactly one of builtin/filtrations/characters");
    if (v.contains("builtin")) {
        const json& b = v["builtin"];
        check_keys(b, {"name", "lines", "divisors"}, "bundle.builtin");
        Manifest::Builtin builtin;
        builtin.name = need(b, "name", "builtin").get<std::string>();
        if (b.contains("lines"))
            for (const auto& l : b["lines"]) builtin.lines.push_back(parse_qvec(l, "builtin.lines"));
        if (b.contains("divisors"))
            for (const auto& d : b["divisors"])
                builtin.divisors.push_back(parse_int_vec(d, "builtin.divisors"));
        m.builtin = std::move(builtin);
    } else if (v.contains("filtrations")) {
        const json& f = v["filtrations"];
        check_keys(f, {"rank", "per_ray"}, "bundle.filtrations");
        Manifest::FiltrationData data;
        data.rank = static_cast<std::size_t>(
            parse_small_int(need(f, "rank", "filtrations"), "filtrations.rank"));
        for (const auto& rf : need(f, "per_ray", "filtrations")) {
            check_keys(rf, {"ray", "steps"}, "filtrations.per_ray[]");
            Manifest::RayFiltration ray_filt;
            ray_filt.ray = parse_small_int(need(rf, "ray", "per_ray"), "per_ray.ray");
            for (const auto& st : need(rf, "steps", "per_ray")) {
                check_keys(st, {"from", "generators"}, "filtrations step");
                Int from = parse_int_value(need(st, "from", "step"), "step.from");
                QMat gens;
                for (const auto& g : need(st, "generators", "step"))
                    gens.push_back(parse_qvec(g, "step.generators"));
                ray_filt.steps.push_back({std::move(from), std::move(gens)});
            }
            data.per_ray.push_back(std::move(ray_filt));
        }
        m.filtration_data = std::move(data);
    } else {
        const json& c = v["characters"];
        check_keys(c, {"rank", "per_cone"}, "bundle.characters");
        Manifest::CharacterData data;
        data.rank = static_cast<std::size_t>(
            parse_small_int(need(c, "rank", "characters"), "characters.rank"));
        for (const auto& pc : need(c, "per_cone", "characters")) {
            check_keys(pc, {"rays", "characters"}, "characters.per_cone[]");
            std::vector<int> rays;
            for (const auto& r : need(pc, "rays", "per_cone"))
                rays.push_back(parse_small_int(r, "per_cone.rays"));
            std::vector<LatticeVec> chars;
            for (const auto& u : need(pc, "characters", "per_cone"))
                chars.push_back(LatticeVec(parse_int_vec(u, "per_cone.characters")));
            data.per_cone.push_back({std::move(rays), std::move(chars)});
        }
        m.character_data = std::move(data);
    }
}

}  // namespace

Manifest Manifest::from_json(const nlohmann::json& doc) {
    check_keys(doc, {"variety", "bundle", "twist", "points", "assertions"}, "manifest");
    Manifest m;
    parse_variety(need(doc, "variety", "manifest"), m);
    parse_bundle(need(doc, "bundle", "manifest"), m);
    if (doc.contains("twist")) m.twist = parse_int_vec(doc["twist"], "twist");
    if (doc.contains("points")) {
        if (!doc["points"].is_array()) throw ValidationError("points: expected an array");
        for (const auto& p : doc["points"]) m.points.push_back(parse_qvec(p, "points[]"));
    }
    if (doc.contains("assertions")) {
        const json& a = doc["assertions"];
        check_keys(a, {"uniform_A1"}, "assertions");
        if (a.contains("uniform_A1")) {
            if (!a["uniform_A1"].is_boolean())
                throw ValidationError("assertions.uniform_A1: expected a boolean");
            m.assert_uniform = a["uniform_A1"].get<bool>();
        }
    }
    return m;
}

Manifest Manifest::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open manifest: " + path);
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const std::exception& e) {
        throw ValidationError(std::string("manifest is not valid JSON: ") + e.what());
    }
    return from_json(doc);
}

Fan Manifest::make_fan() const {
    if (family == FanFamily::ProjectiveSpace) return Fan::projective_space(n);
    return Fan::bott_tower(n, bott);
}

EquivariantBundle Manifest::make_bundle(const Fan& fan) const {
    if (builtin) {
        if (builtin->name == "tangent") {
            if (!builtin->lines.empty() || !builtin->divisors.empty())
                throw ValidationError("builtin tangent takes no parameters");
            return make_tangent(fan);
        }
        if (builtin->name == "line_bundle_sum") {
            std::vector<DivisorClass> divisors;
            for (const auto& d : builtin->divisors) divisors.push_back(DivisorClass{d});
            return make_line_bundle_sum(fan, divisors);
        }
        auto default_lines = [&]() -> std::vector<QVec> {
            return {{Rational(1), Rational(0)}, {Rational(0), Rational(1)},
                    {Rational(1), Rational(1)}};
        };
        if (builtin->name == "hirz_indecomposable") {
            auto lines = builtin->lines.empty() ? default_lines() : builtin->lines;
            if (lines.size() != 3)
                throw ValidationError("hirz_indecomposable takes three lines");
            return make_hirz_indecomposable(fan, lines[0], lines[1], lines[2]);
        }
        if (builtin->name == "x3_indecomposable") {
            auto lines = builtin->lines.empty() ? default_lines() : builtin->lines;
            if (lines.size() != 3)
                throw ValidationError("x3_indecomposable takes three lines");
            return make_x3_indecomposable(fan, lines[0], lines[1], lines[2]);
        }
        throw ValidationError("unknown builtin bundle: " + builtin->name);
    }
    if (filtration_data) {
        const auto& data = *filtration_data;
        if (data.per_ray.size() != fan.rays().size())
            throw ValidationError("filtrations: need exactly one entry per ray");
        std::vector<Filtration> per_ray(fan.rays().size());
        std::vector<bool> seen(fan.rays().size(), false);
        for (const auto& rf : data.per_ray) {
            if (rf.ray < 0 || rf.ray >= static_cast<int>(fan.rays().size()))
                throw ValidationError("filtrations: ray index out of range");
            if (seen[static_cast<std::size_t>(rf.ray)])
                throw ValidationError("filtrations: duplicate ray entry");
            seen[static_cast<std::size_t>(rf.ray)] = true;
            std::vector<Filtration::Drop> drops;
            for (const auto& [from, gens] : rf.steps)
                drops.push_back({from, Subspace::span(data.rank, gens)});
            if (drops.empty() || !drops.back().space.is_zero())
                throw ValidationError(
                    "filtrations: steps must end with an explicit empty-generator step");
            per_ray[static_cast<std::size_t>(rf.ray)] = Filtration(data.rank, std::move(drops));
        }
        return EquivariantBundle::from_filtrations(fan, std::move(per_ray));
    }
    if (character_data) {
        const auto& data = *character_data;
        if (data.per_cone.size() != fan.max_cones().size())
            throw ValidationError("characters: need exactly one entry per maximal cone");
        std::vector<std::vector<LatticeVec>> per_cone(fan.max_cones().size());
        std::vector<bool> seen(fan.max_cones().size(), false);
        for (const auto& [rays, chars] : data.per_cone) {
            int cone = fan.cone_index(rays);
            if (seen[static_cast<std::size_t>(cone)])
                throw ValidationError("characters: duplicate cone entry");
            seen[static_cast<std::size_t>(cone)] = true;
            per_cone[static_cast<std::size_t>(cone)] = chars;
        }
        return EquivariantBundle::from_characters(fan, data.rank, std::move(per_cone));
    }
    throw ValidationError("manifest carries no bundle");
}

Certificate Manifest::certificate(const EquivariantBundle& bundle) const {
    if (bundle.known_uniform()) return Certificate::KnownUniform;
    if (assert_uniform) return Certificate::Asserted;
    return Certificate::None;
}

nlohmann::ordered_json Manifest::variety_json() const {
    nlohmann::ordered_json v;
    if (family == FanFamily::ProjectiveSpace) {
        v["family"] = "projective_space";
        v["n"] = n;
    } else {
        v["family"] = "bott_tower";
        v["n"] = n;
        nlohmann::ordered_json numbers;
        for (const auto& [key, val] : bott)
            numbers[std::to_string(key.first) + "," + std::to_string(key.second)] = val.str();
        v["bott_numbers"] = numbers;
    }
    return v;
}

nlohmann::ordered_json Manifest::bundle_json() const {
    nlohmann::ordered_json b;
    if (builtin) {
        b["builtin"] = builtin->name;
    } else if (filtration_data) {
        b["input"] = "filtrations";
        b["rank"] = filtration_data->rank;
    } else {
        b["input"] = "characters";
        b["rank"] = character_data->rank;
    }
    return b;
}

}  // namespace toric
