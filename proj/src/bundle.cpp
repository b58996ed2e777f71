#include "toric/bundle.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <numeric>
#include <set>
#include <sstream>

#include "toric/errors.hpp"

namespace toric {

namespace {

constexpr std::size_t kMaxRank = 6;

QVec to_qvec(const LatticeVec& v) {
    QVec q(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) q[i] = Rational(v[i]);
    return q;
}

// Scale so the first nonzero coordinate is 1; canonical representative of a
// line used for dedup.
QVec canonical_line(QVec v) {
    for (const auto& x : v) {
        if (!x.is_zero()) {
            Rational inv = Rational(1) / x;
            for (auto& y : v) y *= inv;
            return v;
        }
    }
    throw DegenerateInputError("canonical_line of zero vector");
}

// Solve <u, ray_r> = values[r] over the rays of a smooth cone; the solution
// is an integer character.
LatticeVec solve_character(const Fan& fan, const std::vector<int>& cone_rays,
                           const std::vector<Int>& values) {
    const std::size_t n = cone_rays.size();
    QMat rows(n, QVec(n));
    QVec rhs(n);
    for (std::size_t r = 0; r < n; ++r) {
        const LatticeVec& ray = fan.rays()[static_cast<std::size_t>(cone_rays[r])];
        for (std::size_t c = 0; c < n; ++c) rows[r][c] = Rational(ray[c]);
        rhs[r] = Rational(values[r]);
    }
    auto sol = solve_square(rows, rhs);
    if (!sol) throw ValidationError("degenerate cone while solving for a character");
    std::vector<Int> u(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!(*sol)[i].is_integer())
            throw InconsistentDataError("character solve produced a non-integer (non-smooth data)");
        u[i] = (*sol)[i].num();
    }
    return LatticeVec(std::move(u));
}

struct DecompositionSearch {
    const std::vector<Filtration>& fam;
    std::size_t ambient;
    unsigned seed;
    std::map<std::vector<Int>, Subspace> meet_cache;

    const Subspace& meet(const std::vector<Int>& j) {
        auto it = meet_cache.find(j);
        if (it != meet_cache.end()) return it->second;
        Subspace w = Subspace::full(ambient);
        for (std::size_t k = 0; k < fam.size(); ++k) {
            w = w.intersect(fam[k].step(j[k]));
            if (w.is_zero()) break;
        }
        return meet_cache.emplace(std::move(std::vector<Int>(j)), std::move(w)).first->second;
    }

    // --- enumeration of jump-vector multisets with the forced marginals ---

    std::vector<std::vector<Int>> remaining;  // sorted descending, per filtration
    std::vector<std::vector<Int>> rows;

    bool enumerate_rows(std::optional<std::vector<AdaptedLine>>& out) {
        if (rows.size() == ambient) return realize(out);
        std::vector<std::vector<Int>> combos;
        build_combos(0, std::vector<Int>(), combos);
        for (auto& j : combos) {
            if (!rows.empty() && j > rows.back()) continue;  // canonical nonincreasing order
            const Subspace& w = meet(j);
            std::size_t same = 1;
            for (const auto& r : rows)
                if (r == j) ++same;
            if (w.dim() < same) continue;
            for (std::size_t k = 0; k < fam.size(); ++k)
                remove_value(remaining[k], j[k]);
            rows.push_back(j);
            if (enumerate_rows(out)) return true;
            rows.pop_back();
            for (std::size_t k = 0; k < fam.size(); ++k) insert_value(remaining[k], j[k]);
        }
        return false;
    }

    void build_combos(std::size_t k, std::vector<Int> acc, std::vector<std::vector<Int>>& out) {
        if (k == fam.size()) {
            out.push_back(std::move(acc));
            return;
        }
        std::vector<Int> distinct;
        for (const auto& v : remaining[k])
            if (distinct.empty() || distinct.back() != v) distinct.push_back(v);
        for (const auto& v : distinct) {
            auto next = acc;
            next.push_back(v);
            build_combos(k + 1, std::move(next), out);
        }
    }

    static void remove_value(std::vector<Int>& vals, const Int& v) {
        vals.erase(std::find(vals.begin(), vals.end(), v));
    }
    static void insert_value(std::vector<Int>& vals, const Int& v) {
        vals.insert(std::upper_bound(vals.begin(), vals.end(), v, std::greater<Int>()), v);
    }

    // --- realization of one multiset by concrete lines ---

    bool realize(std::optional<std::vector<AdaptedLine>>& out) {
        std::vector<std::size_t> order(rows.size());
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            Int da = 0, db = 0;
            for (const auto& v : rows[a]) da += v;
            for (const auto& v : rows[b]) db += v;
            if (da != db) return da > db;
            return rows[a] > rows[b];
        });
        QMat chosen;
        std::vector<std::size_t> placed;
        if (!place(order, 0, chosen, placed)) return false;
        std::vector<AdaptedLine> lines(rows.size());
        for (std::size_t t = 0; t < placed.size(); ++t)
            lines[order[t]] = AdaptedLine{chosen[t], rows[order[t]]};
        if (!verify(lines)) return false;
        out = std::move(lines);
        return true;
    }

    bool place(const std::vector<std::size_t>& order, std::size_t t, QMat& chosen,
               std::vector<std::size_t>& placed) {
        if (t == order.size()) {
            QMat m = chosen;
            return rref(m) == ambient;
        }
        const auto& j = rows[order[t]];
        const Subspace& w = meet(j);
        auto cands = candidates(w, j, chosen);
        if (!cands.empty() && seed) std::rotate(cands.begin(), cands.begin() + (seed % cands.size()), cands.end());
        for (auto& v : cands) {
            chosen.push_back(v);
            placed.push_back(order[t]);
            if (place(order, t + 1, chosen, placed)) return true;
            chosen.pop_back();
            placed.pop_back();
        }
        return false;
    }

    std::vector<QVec> candidates(const Subspace& w, const std::vector<Int>& j,
                                 const QMat& chosen) {
        const QMat& b = w.basis();
        const std::size_t m = b.size();
        std::vector<QVec> raw = b;
        // Points on the moment curve avoid any fixed finite union of proper
        // subspaces, so enough of them always contains a valid choice.
        const std::size_t span = m * (fam.size() + 2) + 2;
        for (std::size_t s = 1; s <= span && m > 1; ++s) {
            QVec v(w.ambient(), Rational(0));
            Rational p(1);
            for (std::size_t i = 0; i < m; ++i) {
                for (std::size_t c = 0; c < v.size(); ++c) v[c] += p * b[i][c];
                p *= Rational(static_cast<long long>(s));
            }
            raw.push_back(std::move(v));
        }
        std::vector<QVec> good;
        std::set<QVec> seen;
        for (auto& v : raw) {
            if (is_zero_vec(v)) continue;
            QVec cv = canonical_line(v);
            if (!seen.insert(cv).second) continue;
            bool exact = true;
            for (std::size_t k = 0; k < fam.size() && exact; ++k)
                exact = fam[k].jump_of(cv) == j[k];
            if (!exact) continue;
            QMat probe = chosen;
            probe.push_back(cv);
            if (rref(probe) != chosen.size() + 1) continue;
            good.push_back(std::move(cv));
            if (good.size() >= 12) break;
        }
        return good;
    }

    bool verify(const std::vector<AdaptedLine>& lines) const {
        for (std::size_t k = 0; k < fam.size(); ++k) {
            for (const auto& drop : fam[k].drops()) {
                QMat inside;
                for (const auto& l : lines)
                    if (l.jumps[k] >= drop.from) inside.push_back(l.vec);
                if (Subspace::span(ambient, inside) != drop.space) return false;
            }
        }
        return true;
    }
};

}  // namespace

std::optional<std::vector<AdaptedLine>> adapted_decomposition(
    const std::vector<Filtration>& family, unsigned seed) {
    if (family.empty()) throw ValidationError("adapted decomposition of an empty family");
    const std::size_t ambient = family[0].ambient();
    if (ambient == 0 || ambient > kMaxRank)
        throw ValidationError("adapted decomposition supports ranks 1.." +
                              std::to_string(kMaxRank));
    for (const auto& f : family)
        if (f.ambient() != ambient)
            throw DimensionError("filtrations of different ambient dimensions");

    DecompositionSearch search{family, ambient, seed, {}, {}, {}};
    search.remaining.resize(family.size());
    for (std::size_t k = 0; k < family.size(); ++k) {
        search.remaining[k] = family[k].jump_multiset();
        std::sort(search.remaining[k].begin(), search.remaining[k].end(), std::greater<Int>());
    }
    std::optional<std::vector<AdaptedLine>> out;
    search.enumerate_rows(out);
    return out;
}

SplittingType::SplittingType(std::vector<Int> d) : degrees(std::move(d)) {
    std::sort(degrees.begin(), degrees.end());
}

Int SplittingType::deg() const {
    Int s = 0;
    for (const auto& d : degrees) s += d;
    return s;
}

Int SplittingType::mu_min() const {
    if (degrees.empty()) throw DegenerateInputError("mu_min of an empty splitting");
    return degrees.front();
}

std::string SplittingType::str() const {
    std::ostringstream os;
    os << "{";
    for (std::size_t i = 0; i < degrees.size(); ++i) {
        if (i) os << ",";
        os << degrees[i].str();
    }
    os << "}";
    return os.str();
}

RestrictionProfile::RestrictionProfile(const Fan* fan, std::size_t rank,
                                       std::vector<ProfileRow> rows)
    : fan_(fan), rank_(rank), rows_(std::move(rows)) {
    for (std::size_t i = 0; i < rows_.size(); ++i) by_curve_[rows_[i].curve] = i;
}

const ProfileRow& RestrictionProfile::row(const std::string& curve) const {
    auto it = by_curve_.find(curve);
    if (it == by_curve_.end()) throw ValidationError("no profile row for curve " + curve);
    return rows_[it->second];
}

RestrictionProfile twist(const RestrictionProfile& profile, const DivisorClass& d) {
    std::vector<ProfileRow> rows;
    for (const auto& r : profile.rows()) {
        Int shift = profile.fan().intersection_number(d, profile.fan().wall(r.curve));
        ProfileRow out = r;
        for (auto& deg : out.splitting.degrees) deg += shift;
        for (auto& alt : out.pairing_alternatives)
            for (auto& deg : alt.degrees) deg += shift;
        rows.push_back(std::move(out));
    }
    return RestrictionProfile(&profile.fan(), profile.rank(), std::move(rows));
}

EquivariantBundle EquivariantBundle::from_filtrations(const Fan& fan,
                                                      std::vector<Filtration> per_ray,
                                                      BundleKind kind) {
    EquivariantBundle b;
    b.fan_ = &fan;
    b.kind_ = kind;
    if (per_ray.size() != fan.rays().size())
        throw ValidationError("need exactly one filtration per ray");
    b.rank_ = per_ray[0].ambient();
    for (const auto& f : per_ray)
        if (f.ambient() != b.rank_)
            throw DimensionError("filtrations of different ambient dimensions");
    b.filtrations_ = std::move(per_ray);
    b.validate_filtrations();
    return b;
}

void EquivariantBundle::validate_filtrations() {
    chars_.resize(fan_->max_cones().size());
    for (int c = 0; c < static_cast<int>(fan_->max_cones().size()); ++c) {
        const auto& cone = fan_->max_cones()[static_cast<std::size_t>(c)];
        std::vector<Filtration> family;
        for (int r : cone) family.push_back(filtrations_[static_cast<std::size_t>(r)]);
        auto dec = adapted_decomposition(family);
        if (!dec)
            throw CompatibilityError("filtrations admit no adapted decomposition on " +
                                     fan_->cone_label(c));
        std::vector<LatticeVec> us;
        for (const auto& line : *dec) us.push_back(solve_character(*fan_, cone, line.jumps));
        std::sort(us.begin(), us.end());
        chars_[static_cast<std::size_t>(c)] = std::move(us);
    }
}

EquivariantBundle EquivariantBundle::from_characters(
    const Fan& fan, std::size_t rank, std::vector<std::vector<LatticeVec>> per_cone) {
    EquivariantBundle b;
    b.fan_ = &fan;
    b.rank_ = rank;
    if (rank == 0) throw ValidationError("bundle rank must be positive");
    if (per_cone.size() != fan.max_cones().size())
        throw ValidationError("need one character multiset per maximal cone");
    for (auto& multiset : per_cone) {
        if (multiset.size() != rank)
            throw ValidationError("character multiset size must equal the rank");
        for (const auto& u : multiset)
            if (u.size() != static_cast<std::size_t>(fan.dim()))
                throw DimensionError("character of wrong length");
        std::sort(multiset.begin(), multiset.end());
    }
    b.chars_ = std::move(per_cone);
    b.validate_characters();
    return b;
}

void EquivariantBundle::validate_characters() const {
    for (const auto& w : fan_->walls()) {
        std::vector<LatticeVec> res_a, res_b;
        for (const auto& u : chars_[static_cast<std::size_t>(w.cone_a)])
            res_a.push_back(residue_rep(u, w.m_tau));
        for (const auto& u : chars_[static_cast<std::size_t>(w.cone_b)])
            res_b.push_back(residue_rep(u, w.m_tau));
        std::sort(res_a.begin(), res_a.end());
        std::sort(res_b.begin(), res_b.end());
        if (res_a != res_b)
            throw InconsistentDataError(
                "character multisets disagree modulo the wall direction on curve " + w.label);
    }
}

const std::vector<LatticeVec>& EquivariantBundle::characters(int cone) const {
    return chars_.at(static_cast<std::size_t>(cone));
}

SplittingType EquivariantBundle::restrict_to_curve(const InvariantCurve& curve) const {
    if (has_filtrations()) return restrict_by_filtrations(curve).splitting;
    return restrict_by_characters(curve);
}

// Restriction from filtration data. The fiber is graded by the joint levels
// of the wall-ray filtrations; on each graded piece the two opposite rays
// induce a pair of filtrations, and a pair always admits a simultaneous
// adapted decomposition. Degrees come from the characters each line solves
// for on the two adjacent cones.
ProfileRow EquivariantBundle::restrict_by_filtrations(const InvariantCurve& curve) const {
    const auto& cone_a = fan_->max_cones()[static_cast<std::size_t>(curve.cone_a)];
    const auto& cone_b = fan_->max_cones()[static_cast<std::size_t>(curve.cone_b)];
    const Filtration& fa = filtrations_[static_cast<std::size_t>(curve.ray_a)];
    const Filtration& fb = filtrations_[static_cast<std::size_t>(curve.ray_b)];

    std::vector<std::vector<Int>> level_values;
    for (int r : curve.wall_rays)
        level_values.push_back(filtrations_[static_cast<std::size_t>(r)].jump_values());

    std::vector<Int> degrees;
    std::vector<Int> combo(curve.wall_rays.size(), Int(0));
    std::size_t seen = 0;

    auto visit = [&](auto&& self, std::size_t k) -> void {
        if (k < combo.size()) {
            for (const auto& v : level_values[k]) {
                combo[k] = v;
                self(self, k + 1);
            }
            return;
        }
        Subspace piece = Subspace::full(rank_);
        for (std::size_t i = 0; i < combo.size(); ++i)
            piece = piece.intersect(
                filtrations_[static_cast<std::size_t>(curve.wall_rays[i])].step(combo[i]));
        if (piece.is_zero()) return;
        Subspace deeper = Subspace::zero(rank_);
        for (std::size_t i = 0; i < combo.size(); ++i)
            deeper = deeper + piece.intersect(
                                  filtrations_[static_cast<std::size_t>(curve.wall_rays[i])].step(
                                      combo[i] + 1));
        if (deeper.dim() == piece.dim()) return;

        QuotientCoords q(deeper, piece);
        auto induce = [&](const Filtration& f) {
            std::vector<Filtration::Drop> drops;
            Subspace prev = Subspace::full(q.dim());
            for (const auto& d : f.drops()) {
                Subspace img = q.image(d.space.intersect(piece));
                if (img == prev) continue;
                drops.push_back({d.from, img});
                prev = img;
            }
            return Filtration(q.dim(), std::move(drops));
        };
        Filtration ga = induce(fa), gb = induce(fb);
        auto dec = adapted_decomposition({ga, gb});
        if (!dec)
            throw InconsistentDataError("graded piece failed to split on curve " + curve.label);
        for (const auto& line : *dec) {
            std::vector<Int> vals_a, vals_b;
            for (int r : cone_a) {
                if (r == curve.ray_a) {
                    vals_a.push_back(line.jumps[0]);
                } else {
                    auto pos = std::find(curve.wall_rays.begin(), curve.wall_rays.end(), r) -
                               curve.wall_rays.begin();
                    vals_a.push_back(combo[static_cast<std::size_t>(pos)]);
                }
            }
            for (int r : cone_b) {
                if (r == curve.ray_b) {
                    vals_b.push_back(line.jumps[1]);
                } else {
                    auto pos = std::find(curve.wall_rays.begin(), curve.wall_rays.end(), r) -
                               curve.wall_rays.begin();
                    vals_b.push_back(combo[static_cast<std::size_t>(pos)]);
                }
            }
            LatticeVec u = solve_character(*fan_, cone_a, vals_a);
            LatticeVec up = solve_character(*fan_, cone_b, vals_b);
            degrees.push_back(divide_along(u - up, curve.m_tau));
        }
        seen += dec->size();
    };
    visit(visit, 0);

    if (seen != rank_)
        throw InconsistentDataError("wall grading does not exhaust the fiber on curve " +
                                    curve.label);
    ProfileRow row;
    row.curve = curve.label;
    row.splitting = SplittingType(std::move(degrees));
    return row;
}

SplittingType EquivariantBundle::restrict_by_characters(const InvariantCurve& curve) const {
    std::map<ResidueClass, std::pair<std::vector<LatticeVec>, std::vector<LatticeVec>>> classes;
    for (const auto& u : chars_[static_cast<std::size_t>(curve.cone_a)])
        classes[ResidueClass::of(u, curve.m_tau)].first.push_back(u);
    for (const auto& u : chars_[static_cast<std::size_t>(curve.cone_b)])
        classes[ResidueClass::of(u, curve.m_tau)].second.push_back(u);

    std::vector<Int> degrees;
    for (const auto& [rep, pair] : classes) {
        const auto& [side_a, side_b] = pair;
        if (side_a.size() != side_b.size())
            throw InconsistentDataError("unmatched residue class on curve " + curve.label);
        if (side_a.size() > 1) {
            std::ostringstream os;
            os << "AMBIGUOUS_PAIRING on curve " << curve.label
               << ": characters sharing the residue class of " << rep.representative.str()
               << ": ";
            for (const auto& u : side_a) os << u.str() << " ";
            os << "vs ";
            for (const auto& u : side_b) os << u.str() << " ";
            os << "(use filtration input to resolve the pairing)";
            throw AmbiguousPairingError(os.str());
        }
        degrees.push_back(divide_along(side_a[0] - side_b[0], curve.m_tau));
    }
    return SplittingType(std::move(degrees));
}

std::vector<SplittingType> EquivariantBundle::residue_pairings(const InvariantCurve& curve,
                                                               bool* ambiguous) const {
    std::map<ResidueClass, std::pair<std::vector<LatticeVec>, std::vector<LatticeVec>>> classes;
    for (const auto& u : chars_[static_cast<std::size_t>(curve.cone_a)])
        classes[ResidueClass::of(u, curve.m_tau)].first.push_back(u);
    for (const auto& u : chars_[static_cast<std::size_t>(curve.cone_b)])
        classes[ResidueClass::of(u, curve.m_tau)].second.push_back(u);

    if (ambiguous) *ambiguous = false;
    std::vector<std::vector<Int>> partials = {{}};
    for (auto& [rep, pair] : classes) {
        (void)rep;
        auto& [side_a, side_b] = pair;
        if (side_a.size() != side_b.size())
            throw InconsistentDataError("unmatched residue class on curve " + curve.label);
        if (ambiguous && side_a.size() > 1) *ambiguous = true;
        std::sort(side_b.begin(), side_b.end());
        std::set<std::vector<Int>> class_options;
        do {
            std::vector<Int> degs;
            for (std::size_t i = 0; i < side_a.size(); ++i)
                degs.push_back(divide_along(side_a[i] - side_b[i], curve.m_tau));
            std::sort(degs.begin(), degs.end());
            class_options.insert(std::move(degs));
        } while (std::next_permutation(side_b.begin(), side_b.end()));
        std::vector<std::vector<Int>> next;
        for (const auto& p : partials)
            for (const auto& opt : class_options) {
                auto merged = p;
                merged.insert(merged.end(), opt.begin(), opt.end());
                next.push_back(std::move(merged));
            }
        partials = std::move(next);
    }
    std::set<SplittingType> dedup;
    for (auto& p : partials) dedup.insert(SplittingType(std::move(p)));
    return {dedup.begin(), dedup.end()};
}

ProfileRow EquivariantBundle::restriction_row(const InvariantCurve& curve) const {
    ProfileRow row;
    row.curve = curve.label;
    bool ambiguous = false;
    auto pairings = residue_pairings(curve, &ambiguous);
    if (has_filtrations()) {
        row = restrict_by_filtrations(curve);
    } else {
        row.splitting = restrict_by_characters(curve);  // throws when ambiguous
    }
    row.ambiguous_characters = ambiguous;
    if (ambiguous) row.pairing_alternatives = pairings;
    // The computed splitting is always among the residue-compatible pairings.
    if (std::find(pairings.begin(), pairings.end(), row.splitting) == pairings.end())
        throw InconsistentDataError("splitting escaped the residue pairings on curve " +
                                    curve.label);
    return row;
}

const RestrictionProfile& EquivariantBundle::restriction_profile() const {
    if (!profile_cache_) {
        std::vector<ProfileRow> rows;
        for (const auto& w : fan_->walls()) rows.push_back(restriction_row(w));
        profile_cache_ =
            std::make_shared<const RestrictionProfile>(fan_, rank_, std::move(rows));
    }
    return *profile_cache_;
}

EquivariantBundle make_tangent(const Fan& fan) {
    const std::size_t n = static_cast<std::size_t>(fan.dim());
    std::vector<Filtration> per_ray;
    for (const auto& ray : fan.rays()) {
        std::vector<Filtration::Drop> drops;
        Subspace span = Subspace::line(to_qvec(ray));
        // On a curve the ray spans the whole fiber; the step at one is then
        // not a proper drop and the filtration goes full straight to zero.
        if (!span.is_full()) drops.push_back({Int(1), std::move(span)});
        drops.push_back({Int(2), Subspace::zero(n)});
        per_ray.emplace_back(n, std::move(drops));
    }
    return EquivariantBundle::from_filtrations(fan, std::move(per_ray), BundleKind::Tangent);
}

EquivariantBundle make_line_bundle_sum(const Fan& fan,
                                       const std::vector<DivisorClass>& divisors) {
    if (divisors.empty()) throw ValidationError("line bundle sum needs at least one summand");
    const std::size_t r = divisors.size();
    for (const auto& d : divisors)
        if (d.coeffs.size() != fan.picard_rank())
            throw DimensionError("divisor class has wrong number of coordinates");

    // Coefficient of each summand's divisor on each ray.
    auto ray_coeff = [&](const DivisorClass& d, int ray) -> Int {
        if (fan.family() == FanFamily::ProjectiveSpace) return ray == 0 ? d.coeffs[0] : Int(0);
        for (int i = 1; i <= fan.dim(); ++i)
            if (fan.unprimed_ray(i) == ray) return d.coeffs[static_cast<std::size_t>(i - 1)];
        return 0;
    };

    std::vector<Filtration> per_ray;
    for (int ray = 0; ray < static_cast<int>(fan.rays().size()); ++ray) {
        std::vector<Int> vals(r);
        for (std::size_t m = 0; m < r; ++m) vals[m] = ray_coeff(divisors[m], ray);
        std::vector<Int> distinct = vals;
        std::sort(distinct.begin(), distinct.end());
        distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
        std::vector<Filtration::Drop> drops;
        for (const auto& v : distinct) {
            QMat gens;
            for (std::size_t m = 0; m < r; ++m) {
                if (vals[m] >= v + 1) {
                    QVec e(r, Rational(0));
                    e[m] = Rational(1);
                    gens.push_back(std::move(e));
                }
            }
            drops.push_back({v + 1, Subspace::span(r, std::move(gens))});
        }
        per_ray.emplace_back(r, std::move(drops));
    }
    return EquivariantBundle::from_filtrations(fan, std::move(per_ray), BundleKind::LineBundleSum);
}

namespace {

EquivariantBundle make_two_line_example(const Fan& fan, const std::vector<int>& line_rays,
                                        const std::vector<QVec>& lines, BundleKind kind) {
    std::vector<Subspace> spans;
    for (const auto& l : lines) {
        if (l.size() != 2) throw DimensionError("example bundle lines live in a 2-dim space");
        spans.push_back(Subspace::line(l));
    }
    for (std::size_t i = 0; i < spans.size(); ++i)
        for (std::size_t j = i + 1; j < spans.size(); ++j)
            if (spans[i] == spans[j])
                throw ValidationError("example bundle requires pairwise-distinct lines");

    std::vector<Filtration> per_ray(fan.rays().size(), Filtration::trivial(2));
    for (std::size_t k = 0; k < line_rays.size(); ++k) {
        std::vector<Filtration::Drop> drops;
        drops.push_back({Int(1), spans[k]});
        drops.push_back({Int(2), Subspace::zero(2)});
        per_ray[static_cast<std::size_t>(line_rays[k])] = Filtration(2, std::move(drops));
    }
    return EquivariantBundle::from_filtrations(fan, std::move(per_ray), kind);
}

}  // namespace

EquivariantBundle make_hirz_indecomposable(const Fan& fan, const QVec& l1, const QVec& l2,
                                           const QVec& l3) {
    if (fan.family() != FanFamily::BottTower || fan.dim() != 2)
        throw ValidationError("this example bundle lives on a height-2 tower");
    return make_two_line_example(fan, {0, 1, 2}, {l1, l2, l3}, BundleKind::HirzIndecomposable);
}

EquivariantBundle make_x3_indecomposable(const Fan& fan, const QVec& l1, const QVec& l2,
                                         const QVec& l4) {
    if (fan.family() != FanFamily::BottTower || fan.dim() != 3)
        throw ValidationError("this example bundle lives on a height-3 tower");
    return make_two_line_example(fan, {0, 1, 3}, {l1, l2, l4}, BundleKind::X3Indecomposable);
}

}  // namespace toric
