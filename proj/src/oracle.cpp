#include "toric/oracle.hpp"

#include <algorithm>
#include <set>

#include "toric/errors.hpp"

namespace toric {
namespace oracle {

namespace {

// Small deterministic generator; no stdlib distribution quirks in tests.
struct Lcg {
    unsigned long long state;
    explicit Lcg(unsigned seed) : state(seed * 2654435761ull + 1) {}
    unsigned long long next() {
        state = state * 6364136223846793005ull + 1442695040888963407ull;
        return state >> 33;
    }
    long long in_range(long long lo, long long hi) {
        return lo + static_cast<long long>(next() % static_cast<unsigned long long>(hi - lo + 1));
    }
};

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

std::vector<QVec> candidate_lines(const std::vector<Filtration>& family,
                                  const OracleConfig& cfg) {
    const std::size_t ambient = family[0].ambient();
    // Meet-semilattice of the steps.
    std::vector<Subspace> lattice;
    auto add = [&](const Subspace& s) {
        if (s.is_zero()) return;
        if (std::find(lattice.begin(), lattice.end(), s) == lattice.end()) lattice.push_back(s);
    };
    add(Subspace::full(ambient));
    for (const auto& f : family)
        for (const auto& d : f.drops()) add(d.space);
    for (std::size_t grow = 0; grow < lattice.size(); ++grow)
        for (std::size_t other = 0; other < grow; ++other) add(lattice[grow].intersect(lattice[other]));

    std::set<QVec> lines;
    // Lines of the semilattice, plus a spread of lines inside every member
    // so complements inside proper steps are reachable.
    for (const auto& s : lattice) {
        const QMat& b = s.basis();
        for (const auto& row : b) lines.insert(canonical_line(row));
        for (std::size_t i = 0; i < b.size(); ++i)
            for (std::size_t j = i + 1; j < b.size(); ++j)
                for (long long t : {1, -1, 2, -2, 3}) {
                    QVec v = b[i];
                    for (std::size_t c = 0; c < v.size(); ++c)
                        v[c] += Rational(t) * b[j][c];
                    lines.insert(canonical_line(std::move(v)));
                }
    }
    for (std::size_t i = 0; i < ambient; ++i) {
        QVec e(ambient, Rational(0));
        e[i] = Rational(1);
        lines.insert(canonical_line(std::move(e)));
    }
    Lcg rng(cfg.seed);
    for (int k = 0; k < cfg.random_lines; ++k) {
        QVec v(ambient, Rational(0));
        bool nonzero = false;
        for (auto& x : v) {
            x = Rational(rng.in_range(-cfg.coeff_bound, cfg.coeff_bound));
            nonzero = nonzero || !x.is_zero();
        }
        if (nonzero) lines.insert(canonical_line(std::move(v)));
    }
    return {lines.begin(), lines.end()};
}

bool adapted(const std::vector<Filtration>& family, const std::vector<QVec>& lines) {
    const std::size_t ambient = family[0].ambient();
    for (const auto& f : family) {
        for (const auto& d : f.drops()) {
            QMat inside;
            for (const auto& l : lines)
                if (d.space.contains(l)) inside.push_back(l);
            if (Subspace::span(ambient, inside) != d.space) return false;
        }
    }
    return true;
}

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
            throw InconsistentDataError("oracle character solve produced a non-integer");
        u[i] = (*sol)[i].num();
    }
    return LatticeVec(std::move(u));
}

}  // namespace

std::vector<std::vector<AdaptedLine>> decompositions(const std::vector<Filtration>& family,
                                                     const OracleConfig& cfg) {
    if (family.empty()) throw ValidationError("oracle over an empty family");
    const std::size_t ambient = family[0].ambient();
    if (ambient > cfg.max_rank + 3)
        throw ValidationError("oracle rank bound exceeded");
    auto cands = candidate_lines(family, cfg);

    std::vector<std::vector<AdaptedLine>> found;
    std::vector<std::size_t> pick;
    auto search = [&](auto&& self, std::size_t from) -> void {
        if (pick.size() == ambient) {
            QMat m;
            for (auto i : pick) m.push_back(cands[i]);
            QMat probe = m;
            if (rref(probe) != ambient) return;
            std::vector<QVec> lines(m.begin(), m.end());
            if (!adapted(family, lines)) return;
            std::vector<AdaptedLine> dec;
            for (const auto& l : lines) {
                AdaptedLine al;
                al.vec = l;
                for (const auto& f : family) al.jumps.push_back(f.jump_of(l));
                dec.push_back(std::move(al));
            }
            found.push_back(std::move(dec));
            return;
        }
        for (std::size_t i = from; i < cands.size(); ++i) {
            pick.push_back(i);
            self(self, i + 1);
            pick.pop_back();
        }
    };
    search(search, 0);
    return found;
}

std::vector<SplittingType> wall_splittings(const EquivariantBundle& bundle,
                                           const InvariantCurve& curve,
                                           const OracleConfig& cfg) {
    if (!bundle.has_filtrations())
        throw ValidationError("oracle wall splittings need filtration data");
    const Fan& fan = bundle.fan();
    const std::size_t rank = bundle.rank();
    const auto& filts = bundle.filtrations();
    const auto& cone_a = fan.max_cones()[static_cast<std::size_t>(curve.cone_a)];
    const auto& cone_b = fan.max_cones()[static_cast<std::size_t>(curve.cone_b)];

    std::vector<std::vector<Int>> level_values;
    for (int r : curve.wall_rays)
        level_values.push_back(filts[static_cast<std::size_t>(r)].jump_values());

    // Per graded piece, every multiset of degrees induced by some oracle
    // decomposition of the induced filtration pair.
    std::vector<std::vector<std::vector<Int>>> piece_options;
    std::vector<Int> combo(curve.wall_rays.size(), Int(0));
    auto visit = [&](auto&& self, std::size_t k) -> void {
        if (k < combo.size()) {
            for (const auto& v : level_values[k]) {
                combo[k] = v;
                self(self, k + 1);
            }
            return;
        }
        Subspace piece = Subspace::full(rank);
        for (std::size_t i = 0; i < combo.size(); ++i)
            piece = piece.intersect(
                filts[static_cast<std::size_t>(curve.wall_rays[i])].step(combo[i]));
        if (piece.is_zero()) return;
        Subspace deeper = Subspace::zero(rank);
        for (std::size_t i = 0; i < combo.size(); ++i)
            deeper = deeper +
                     piece.intersect(filts[static_cast<std::size_t>(curve.wall_rays[i])].step(
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
        Filtration ga = induce(filts[static_cast<std::size_t>(curve.ray_a)]);
        Filtration gb = induce(filts[static_cast<std::size_t>(curve.ray_b)]);
        auto decs = decompositions({ga, gb}, cfg);
        if (decs.empty())
            throw InconsistentDataError("oracle found no decomposition of a graded piece");
        std::set<std::vector<Int>> options;
        for (const auto& dec : decs) {
            std::vector<Int> degs;
            for (const auto& line : dec) {
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
                LatticeVec u = solve_character(fan, cone_a, vals_a);
                LatticeVec up = solve_character(fan, cone_b, vals_b);
                degs.push_back(divide_along(u - up, curve.m_tau));
            }
            std::sort(degs.begin(), degs.end());
            options.insert(std::move(degs));
        }
        piece_options.push_back({options.begin(), options.end()});
    };
    visit(visit, 0);

    std::vector<std::vector<Int>> partial = {{}};
    for (const auto& options : piece_options) {
        std::vector<std::vector<Int>> next;
        for (const auto& p : partial)
            for (const auto& opt : options) {
                auto merged = p;
                merged.insert(merged.end(), opt.begin(), opt.end());
                next.push_back(std::move(merged));
            }
        partial = std::move(next);
    }
    std::set<SplittingType> dedup;
    for (auto& p : partial) dedup.insert(SplittingType(std::move(p)));
    return {dedup.begin(), dedup.end()};
}

std::map<std::pair<int, std::string>, Int> intersections(const Fan& fan) {
    std::map<std::pair<int, std::string>, Int> table;
    if (fan.family() == FanFamily::ProjectiveSpace) {
        for (const auto& w : fan.walls()) table[{1, w.label}] = 1;
        return table;
    }
    const int n = fan.dim();
    if (n == 1) {
        table[{1, "X1"}] = 1;
        return table;
    }
    if (n == 2) {
        Int c12 = fan.bott_number(1, 2);
        table[{1, "D1'"}] = 0;
        table[{2, "D1'"}] = 1;
        table[{1, "D2'"}] = 1;
        table[{2, "D2'"}] = 0;
        table[{1, "D1"}] = 0;
        table[{2, "D1"}] = 1;
        table[{1, "D2"}] = 1;
        table[{2, "D2"}] = c12;
        return table;
    }
    if (n == 3) {
        Int c12 = fan.bott_number(1, 2), c13 = fan.bott_number(1, 3), c23 = fan.bott_number(2, 3);
        auto put = [&](int j, Int a1, Int a2, Int a3) {
            std::string l = "l" + std::to_string(j);
            table[{1, l}] = a1;
            table[{2, l}] = a2;
            table[{3, l}] = a3;
        };
        put(1, 0, 0, 1);
        put(2, 0, 1, 0);
        put(3, 0, 0, 1);
        put(4, 0, 1, c23);
        put(5, 1, 0, 0);
        put(6, 0, 0, 1);
        put(7, 1, 0, c13);
        put(8, 0, 1, 0);
        put(9, 1, c12, 0);
        put(10, 0, 0, 1);
        put(11, 0, 1, c23);
        put(12, 1, c12, c13 + c12 * c23);
        return table;
    }
    throw ValidationError("closed-form intersection tables cover towers of height <= 3");
}

Int splitting_deg(const EquivariantBundle& bundle, const InvariantCurve& curve) {
    LatticeVec sum_a = LatticeVec::zero(static_cast<std::size_t>(bundle.fan().dim()));
    LatticeVec sum_b = sum_a;
    for (const auto& u : bundle.characters(curve.cone_a)) sum_a = sum_a + u;
    for (const auto& u : bundle.characters(curve.cone_b)) sum_b = sum_b + u;
    return divide_along(sum_a - sum_b, curve.m_tau);
}

}  // namespace oracle
}  // namespace toric
