#include "toric/cli.hpp"

#include <algorithm>
#include <memory>
#include <sstream>

#include "toric/errors.hpp"
#include "toric/oracle.hpp"

namespace toric {
namespace cli {

namespace {

using nlohmann::ordered_json;

std::vector<Rational> parse_point_flag(const std::string& s) {
    std::vector<Rational> out;
    std::string cur;
    std::istringstream is(s);
    while (std::getline(is, cur, ':')) out.push_back(parse_rational(cur));
    return out;
}

std::vector<Int> parse_twist_flag(const std::string& s) {
    std::vector<Int> out;
    std::string cur;
    std::istringstream is(s);
    while (std::getline(is, cur, ',')) out.push_back(parse_int(cur));
    return out;
}

ordered_json int_array(const std::vector<Int>& v) {
    ordered_json a = ordered_json::array();
    for (const auto& x : v) a.push_back(x.str());
    return a;
}

ordered_json lattice_array(const LatticeVec& v) {
    ordered_json a = ordered_json::array();
    for (std::size_t i = 0; i < v.size(); ++i) a.push_back(v[i].str());
    return a;
}

ordered_json splitting_json(const SplittingType& s) { return int_array(s.degrees); }

ordered_json hypotheses_json(const HypothesisReport& rep) {
    ordered_json entries = ordered_json::array();
    for (const auto& e : rep.entries) {
        ordered_json j;
        j["name"] = e.name;
        j["detail"] = e.detail;
        j["pass"] = e.pass;
        j["gating"] = e.gating;
        entries.push_back(std::move(j));
    }
    return entries;
}

ordered_json value_json(const SeshadriValue& v) {
    ordered_json j;
    switch (v.kind) {
        case SeshadriValue::Kind::Exact:
            j["kind"] = "exact";
            j["value"] = v.lower.str();
            break;
        case SeshadriValue::Kind::Interval:
            j["kind"] = "interval";
            j["lower"] = v.lower.str();
            j["upper"] = v.upper->str();
            break;
        case SeshadriValue::Kind::LowerBound:
            j["kind"] = "lower_bound";
            j["lower"] = v.lower.str();
            j["upper"] = nullptr;
            break;
    }
    return j;
}

// The bundle and profile point back at the fan, so the fan lives behind a
// stable address for the instance's lifetime.
struct Instance {
    std::unique_ptr<Fan> fan;
    std::unique_ptr<EquivariantBundle> bundle;
    RestrictionProfile profile;  // twisted when a twist is present
    std::optional<DivisorClass> twist_divisor;
};

Instance build_instance(const Manifest& manifest, const Options& options) {
    Instance inst;
    inst.fan = std::make_unique<Fan>(manifest.make_fan());
    inst.bundle = std::make_unique<EquivariantBundle>(manifest.make_bundle(*inst.fan));
    inst.profile = inst.bundle->restriction_profile();
    std::optional<std::vector<Int>> coeffs = manifest.twist;
    if (options.twist) coeffs = parse_twist_flag(*options.twist);
    if (coeffs) {
        if (coeffs->size() != inst.fan->picard_rank())
            throw ValidationError("twist: expected " + std::to_string(inst.fan->picard_rank()) +
                                  " coefficients");
        inst.twist_divisor = DivisorClass{*coeffs};
        inst.profile = twist(inst.profile, *inst.twist_divisor);
    }
    return inst;
}

struct LabeledPoint {
    TowerPoint point;   // empty coords for projective space (value is point-free)
    std::string label;  // the homogeneous tuple as given
};

std::vector<LabeledPoint> gather_points(const Manifest& manifest, const Options& options,
                                        const Fan& fan) {
    std::vector<std::vector<Rational>> flats = manifest.points;
    if (options.point) flats.push_back(parse_point_flag(*options.point));
    std::vector<LabeledPoint> points;
    for (const auto& flat : flats) {
        std::string label = "[";
        for (std::size_t i = 0; i < flat.size(); ++i) {
            if (i) label += ":";
            label += flat[i].str();
        }
        label += "]";
        if (fan.family() == FanFamily::BottTower) {
            if (flat.size() != 2 * static_cast<std::size_t>(fan.dim()))
                throw ValidationError("tower points need 2n homogeneous coordinates");
            points.push_back({TowerPoint::from_flat(flat), std::move(label)});
        } else {
            if (flat.size() != static_cast<std::size_t>(fan.dim()) + 1)
                throw ValidationError("projective points need n+1 homogeneous coordinates");
            bool all_zero = true;
            for (const auto& c : flat) all_zero = all_zero && c.is_zero();
            if (all_zero) throw ValidationError("projective point has all coordinates zero");
            points.push_back({TowerPoint{}, std::move(label)});
        }
    }
    return points;
}

Theorem governing_theorem(const Fan& fan) {
    if (fan.family() == FanFamily::ProjectiveSpace) return Theorem::Projective;
    if (fan.dim() == 2) return Theorem::Hirzebruch;
    if (fan.dim() == 3) return Theorem::X3;
    throw ValidationError("no closed-form branch for this fan");
}

}  // namespace

Report cmd_fan(const Manifest& manifest, const Options& options) {
    Fan fan = manifest.make_fan();
    ordered_json doc;
    doc["command"] = "fan";
    doc["variety"] = manifest.variety_json();
    if (fan.degenerate_p1()) doc["degenerate"] = true;

    ordered_json rays = ordered_json::array();
    for (std::size_t i = 0; i < fan.rays().size(); ++i) {
        ordered_json r;
        r["index"] = i;
        r["divisor"] = fan.ray_labels()[i];
        r["coords"] = lattice_array(fan.rays()[i]);
        rays.push_back(std::move(r));
    }
    doc["rays"] = rays;

    ordered_json cones = ordered_json::array();
    for (int c = 0; c < static_cast<int>(fan.max_cones().size()); ++c) {
        ordered_json j;
        j["label"] = fan.cone_label(c);
        j["rays"] = fan.max_cones()[static_cast<std::size_t>(c)];
        cones.push_back(std::move(j));
    }
    doc["max_cones"] = cones;

    ordered_json walls = ordered_json::array();
    for (const auto& w : fan.walls()) {
        ordered_json j;
        j["curve"] = w.label;
        j["wall_rays"] = w.wall_rays;
        j["cones"] = {fan.cone_label(w.cone_a), fan.cone_label(w.cone_b)};
        j["opposite_rays"] = {w.ray_a, w.ray_b};
        j["relation"] = int_array(w.relation_coeffs);
        j["m_tau"] = lattice_array(w.m_tau);
        j["curve_class"] = int_array(fan.curve_class(w).coords);
        walls.push_back(std::move(j));
    }
    doc["walls"] = walls;
    doc["nef_criterion"] = "nonnegative coefficients in the D-basis";
    doc["ample_criterion"] = "positive coefficients in the D-basis";

    if (options.oracle) {
        auto table = oracle::intersections(fan);
        bool match = true;
        std::size_t checked = 0;
        for (const auto& [key, value] : table) {
            DivisorClass d{std::vector<Int>(fan.picard_rank(), Int(0))};
            d.coeffs[static_cast<std::size_t>(key.first - 1)] = 1;
            match = match && fan.intersection_number(d, fan.wall(key.second)) == value;
            ++checked;
        }
        ordered_json o;
        o["intersections_match"] = match;
        o["entries_checked"] = checked;
        doc["oracle"] = o;
    }

    Report rep;
    rep.machine = doc;
    rep.human = render(doc);
    return rep;
}

Report cmd_restrict(const Manifest& manifest, const Options& options) {
    Instance inst = build_instance(manifest, options);
    ordered_json doc;
    doc["command"] = "restrict";
    doc["variety"] = manifest.variety_json();
    doc["bundle"] = manifest.bundle_json();
    doc["rank"] = inst.profile.rank();
    if (inst.twist_divisor) doc["twist"] = int_array(inst.twist_divisor->coeffs);

    ordered_json rows = ordered_json::array();
    for (const auto& row : inst.profile.rows()) {
        ordered_json j;
        j["curve"] = row.curve;
        j["degrees"] = splitting_json(row.splitting);
        j["deg"] = row.splitting.deg().str();
        j["mu_min"] = row.splitting.mu_min().str();
        if (row.ambiguous_characters) {
            j["ambiguous_characters"] = true;
            ordered_json alts = ordered_json::array();
            for (const auto& alt : row.pairing_alternatives) alts.push_back(splitting_json(alt));
            j["pairing_alternatives"] = alts;
        }
        rows.push_back(std::move(j));
    }
    doc["rows"] = rows;

    if (options.oracle) {
        bool sums_match = true;
        bool splittings_unique = true;
        for (const auto& w : inst.fan->walls()) {
            Int oracle_deg = oracle::splitting_deg(*inst.bundle, w);
            Int shift = inst.twist_divisor
                            ? inst.fan->intersection_number(*inst.twist_divisor, w) *
                                  Int(static_cast<long long>(inst.profile.rank()))
                            : Int(0);
            sums_match =
                sums_match && inst.profile.splitting(w.label).deg() == oracle_deg + shift;
            if (inst.bundle->has_filtrations()) {
                auto all = oracle::wall_splittings(*inst.bundle, w);
                splittings_unique = splittings_unique && all.size() == 1;
            }
        }
        ordered_json o;
        o["degree_sums_match"] = sums_match;
        if (inst.bundle->has_filtrations()) o["splittings_unique"] = splittings_unique;
        doc["oracle"] = o;
    }

    Report rep;
    rep.machine = doc;
    rep.human = render(doc);
    return rep;
}

Report cmd_nef(const Manifest& manifest, const Options& options) {
    Instance inst = build_instance(manifest, options);
    NefVerdict nef = is_nef(inst.profile);
    NefVerdict ample = is_ample(inst.profile);
    ordered_json doc;
    doc["command"] = "nef";
    doc["variety"] = manifest.variety_json();
    doc["bundle"] = manifest.bundle_json();
    if (inst.twist_divisor) doc["twist"] = int_array(inst.twist_divisor->coeffs);
    doc["nef"] = nef.holds;
    if (!nef.holds) {
        ordered_json w;
        w["curve"] = nef.witness_curve;
        w["degree"] = nef.witness_degree.str();
        doc["witness"] = w;
    }
    doc["ample"] = ample.holds;
    if (!ample.holds && nef.holds) {
        ordered_json w;
        w["curve"] = ample.witness_curve;
        w["degree"] = ample.witness_degree.str();
        doc["ample_witness"] = w;
    }
    Report rep;
    rep.machine = doc;
    rep.human = render(doc);
    return rep;
}

Report cmd_mori(const Manifest& manifest, const Options& options) {
    Instance inst = build_instance(manifest, options);
    MoriGenerators gens = mori_generators(inst.profile);
    ordered_json doc;
    doc["command"] = "mori";
    doc["variety"] = manifest.variety_json();
    doc["bundle"] = manifest.bundle_json();
    if (inst.twist_divisor) doc["twist"] = int_array(inst.twist_divisor->coeffs);
    ordered_json list = ordered_json::array();
    {
        ordered_json j;
        j["name"] = "C0";
        j["xi_product"] = gens.fiber_xi_product.str();
        j["pushforward"] = nullptr;
        list.push_back(std::move(j));
    }
    for (const auto& s : gens.sections) {
        ordered_json j;
        j["name"] = "C(" + s.curve + ")";
        j["curve"] = s.curve;
        j["xi_product"] = s.xi_product.str();
        j["pushforward"] = int_array(s.pushforward.coords);
        list.push_back(std::move(j));
    }
    doc["generators"] = list;
    Report rep;
    rep.machine = doc;
    rep.human = render(doc);
    return rep;
}

Report cmd_check(const Manifest& manifest, const Options& options) {
    Instance inst = build_instance(manifest, options);
    Theorem theorem = governing_theorem(*inst.fan);
    HypothesisReport hyp = check_hypotheses(*inst.fan, inst.profile, theorem,
                                            manifest.certificate(*inst.bundle));
    ordered_json doc;
    doc["command"] = "check";
    doc["variety"] = manifest.variety_json();
    doc["bundle"] = manifest.bundle_json();
    if (inst.twist_divisor) doc["twist"] = int_array(inst.twist_divisor->coeffs);
    doc["theorem"] = theorem == Theorem::Projective  ? "projective"
                     : theorem == Theorem::Hirzebruch ? "hirzebruch"
                                                      : "x3";
    doc["entries"] = hypotheses_json(hyp);
    doc["all_pass"] = hyp.all_pass();
    Report rep;
    rep.machine = doc;
    rep.human = render(doc);
    if (options.strict && !hyp.all_pass()) rep.exit_code = kHypothesis;
    return rep;
}

Report cmd_seshadri(const Manifest& manifest, const Options& options) {
    Instance inst = build_instance(manifest, options);
    Theorem theorem = governing_theorem(*inst.fan);
    std::vector<LabeledPoint> points = gather_points(manifest, options, *inst.fan);
    if (points.empty() && theorem == Theorem::Projective) {
        // Point-independent; evaluate once with no point echo.
        points.push_back({TowerPoint{}, ""});
    }
    if (points.empty())
        throw ValidationError("seshadri: no points given (manifest points or --point)");

    ordered_json doc;
    doc["command"] = "seshadri";
    doc["variety"] = manifest.variety_json();
    doc["bundle"] = manifest.bundle_json();
    if (inst.twist_divisor) doc["twist"] = int_array(inst.twist_divisor->coeffs);
    ordered_json mu_table;
    for (const auto& row : inst.profile.rows())
        mu_table[row.curve] = row.splitting.mu_min().str();
    doc["mu_min_per_curve"] = mu_table;
    bool bounds_only = false;

    ordered_json results = ordered_json::array();
    for (const auto& x : points) {
        SeshadriResult res;
        switch (theorem) {
            case Theorem::Projective:
                res = seshadri_projective(inst.profile, manifest.certificate(*inst.bundle));
                break;
            case Theorem::Hirzebruch:
                res = seshadri_hirzebruch(inst.profile, x.point);
                break;
            case Theorem::X3:
                res = seshadri_x3(inst.profile, x.point);
                break;
        }
        ordered_json j;
        if (!x.label.empty()) j["point"] = x.label;
        if (res.level > 0) j["level"] = res.level;
        j["value"] = value_json(res.value);
        if (!res.per_gamma_mu.empty()) {
            ordered_json mus;
            for (const auto& [level, mu] : res.per_gamma_mu)
                mus[std::to_string(level)] = mu.str();
            j["per_gamma_mu"] = mus;
        }
        j["hypotheses"] = hypotheses_json(res.report);
        if (!res.notes.empty()) j["notes"] = res.notes;
        bounds_only = bounds_only || res.value.kind != SeshadriValue::Kind::Exact;
        results.push_back(std::move(j));
    }
    doc["results"] = results;

    Report rep;
    rep.machine = doc;
    rep.human = render(doc);
    if (options.strict && bounds_only) rep.exit_code = kHypothesis;
    return rep;
}

Report run(const std::string& command, const Manifest& manifest, const Options& options) {
    try {
        if (command == "fan") return cmd_fan(manifest, options);
        if (command == "restrict") return cmd_restrict(manifest, options);
        if (command == "nef") return cmd_nef(manifest, options);
        if (command == "mori") return cmd_mori(manifest, options);
        if (command == "check") return cmd_check(manifest, options);
        if (command == "seshadri") return cmd_seshadri(manifest, options);
        throw ValidationError("unknown command: " + command);
    } catch (const HypothesisError& e) {
        Report rep;
        rep.machine["error"] = e.what();
        rep.machine["kind"] = "hypothesis";
        if (!e.report.empty()) rep.machine["report"] = e.report;
        rep.human = std::string("error: ") + e.what() + "\n" + e.report;
        rep.exit_code = kHypothesis;
        return rep;
    } catch (const BundleDataError& e) {
        Report rep;
        rep.machine["error"] = e.what();
        rep.machine["kind"] = "bundle_data";
        rep.human = std::string("error: ") + e.what() + "\n";
        rep.exit_code = kBundleData;
        return rep;
    } catch (const Error& e) {
        Report rep;
        rep.machine["error"] = e.what();
        rep.machine["kind"] = "validation";
        rep.human = std::string("error: ") + e.what() + "\n";
        rep.exit_code = kValidation;
        return rep;
    }
}

Report run_file(const std::string& command, const std::string& manifest_path,
                const Options& options) {
    try {
        Manifest manifest = Manifest::from_file(manifest_path);
        return run(command, manifest, options);
    } catch (const Error& e) {
        Report rep;
        rep.machine["error"] = e.what();
        rep.machine["kind"] = "validation";
        rep.human = std::string("error: ") + e.what() + "\n";
        rep.exit_code = kValidation;
        return rep;
    }
}

namespace {

std::string pad(const std::string& s, std::size_t w) {
    return s.size() >= w ? s : s + std::string(w - s.size(), ' ');
}

std::string scalar_to_text(const ordered_json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_null()) return "-";
    if (v.is_boolean()) return v.get<bool>() ? "yes" : "no";
    return v.dump();
}

std::string flat_to_text(const ordered_json& v) {
    if (v.is_array()) {
        std::string out = "(";
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i) out += ",";
            out += scalar_to_text(v[i]);
        }
        return out + ")";
    }
    return scalar_to_text(v);
}

void render_table(std::ostringstream& os, const ordered_json& rows,
                  const std::vector<std::string>& cols) {
    std::vector<std::size_t> width(cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) width[c] = cols[c].size();
    std::vector<std::vector<std::string>> cells;
    for (const auto& row : rows) {
        std::vector<std::string> line;
        for (std::size_t c = 0; c < cols.size(); ++c) {
            std::string text = row.contains(cols[c]) ? flat_to_text(row[cols[c]]) : "-";
            width[c] = std::max(width[c], text.size());
            line.push_back(std::move(text));
        }
        cells.push_back(std::move(line));
    }
    for (std::size_t c = 0; c < cols.size(); ++c) os << pad(cols[c], width[c] + 2);
    os << "\n";
    for (const auto& line : cells) {
        for (std::size_t c = 0; c < cols.size(); ++c) os << pad(line[c], width[c] + 2);
        os << "\n";
    }
}

}  // namespace

std::string render(const ordered_json& doc) {
    std::ostringstream os;
    if (doc.contains("error")) {
        os << "error: " << scalar_to_text(doc["error"]) << "\n";
        return os.str();
    }
    const std::string command = doc["command"].get<std::string>();
    os << "# " << command << "\n";
    if (doc.contains("variety")) {
        const auto& v = doc["variety"];
        os << "variety: " << scalar_to_text(v["family"]) << " n=" << v["n"].dump();
        if (v.contains("bott_numbers")) {
            os << " twists:";
            for (auto it = v["bott_numbers"].begin(); it != v["bott_numbers"].end(); ++it)
                os << " c[" << it.key() << "]=" << scalar_to_text(it.value());
        }
        os << "\n";
    }
    if (doc.contains("bundle")) {
        const auto& b = doc["bundle"];
        os << "bundle:";
        for (auto it = b.begin(); it != b.end(); ++it)
            os << " " << it.key() << "=" << scalar_to_text(it.value());
        os << "\n";
    }
    if (doc.contains("twist")) os << "twist: " << flat_to_text(doc["twist"]) << "\n";

    if (command == "fan") {
        os << "\nrays:\n";
        render_table(os, doc["rays"], {"index", "divisor", "coords"});
        os << "\nmaximal cones:\n";
        render_table(os, doc["max_cones"], {"label", "rays"});
        os << "\nwalls:\n";
        render_table(os, doc["walls"],
                     {"curve", "wall_rays", "opposite_rays", "relation", "m_tau", "curve_class"});
        os << "\nnef: " << scalar_to_text(doc["nef_criterion"])
           << "; ample: " << scalar_to_text(doc["ample_criterion"]) << "\n";
    } else if (command == "restrict") {
        os << "rank: " << doc["rank"].dump() << "\n\n";
        render_table(os, doc["rows"],
                     {"curve", "degrees", "deg", "mu_min", "ambiguous_characters",
                      "pairing_alternatives"});
    } else if (command == "nef") {
        os << "nef: " << scalar_to_text(doc["nef"]);
        if (doc.contains("witness"))
            os << "  (witness " << scalar_to_text(doc["witness"]["curve"]) << " with degree "
               << scalar_to_text(doc["witness"]["degree"]) << ")";
        os << "\nample: " << scalar_to_text(doc["ample"]);
        if (doc.contains("ample_witness"))
            os << "  (witness " << scalar_to_text(doc["ample_witness"]["curve"])
               << " with degree " << scalar_to_text(doc["ample_witness"]["degree"]) << ")";
        os << "\n";
    } else if (command == "mori") {
        os << "\ngenerators:\n";
        render_table(os, doc["generators"], {"name", "xi_product", "pushforward"});
    } else if (command == "check") {
        os << "theorem: " << scalar_to_text(doc["theorem"]) << "\n\n";
        render_table(os, doc["entries"], {"name", "detail", "pass", "gating"});
        os << "\nall pass: " << scalar_to_text(doc["all_pass"]) << "\n";
    } else if (command == "seshadri") {
        if (doc.contains("mu_min_per_curve")) {
            os << "minimal degrees per curve:";
            for (auto it = doc["mu_min_per_curve"].begin(); it != doc["mu_min_per_curve"].end();
                 ++it)
                os << " " << it.key() << "=" << scalar_to_text(it.value());
            os << "\n";
        }
        for (const auto& r : doc["results"]) {
            os << "\n";
            if (r.contains("point")) os << "point " << scalar_to_text(r["point"]) << ": ";
            if (r.contains("level")) os << "level " << r["level"].dump() << ", ";
            const auto& v = r["value"];
            const std::string kind = v["kind"].get<std::string>();
            if (kind == "exact") {
                os << "epsilon = " << scalar_to_text(v["value"]) << " (exact)";
            } else if (kind == "interval") {
                os << "epsilon in [" << scalar_to_text(v["lower"]) << ", "
                   << scalar_to_text(v["upper"]) << "]";
            } else {
                os << "epsilon >= " << scalar_to_text(v["lower"]) << " (upper end open)";
            }
            os << "\n";
            if (r.contains("per_gamma_mu")) {
                os << "  per-level minimal degrees:";
                for (auto it = r["per_gamma_mu"].begin(); it != r["per_gamma_mu"].end(); ++it)
                    os << " level" << it.key() << "=" << scalar_to_text(it.value());
                os << "\n";
            }
            for (const auto& e : r["hypotheses"])
                os << "  [" << (e["pass"].get<bool>() ? "pass" : "FAIL") << "] "
                   << scalar_to_text(e["name"]) << ": " << scalar_to_text(e["detail"]) << "\n";
            if (r.contains("notes"))
                for (const auto& note : r["notes"]) os << "  note: " << scalar_to_text(note) << "\n";
        }
    }
    if (doc.contains("oracle")) {
        os << "\noracle:";
        for (auto it = doc["oracle"].begin(); it != doc["oracle"].end(); ++it)
            os << " " << it.key() << "=" << scalar_to_text(it.value());
        os << "\n";
    }
    return os.str();
}

}  // namespace cli
}  // namespace toric
