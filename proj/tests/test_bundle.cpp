#include <doctest.h>

#include <algorithm>
#include <set>

#include "toric/bundle.hpp"

using toric::BottNumbers;
using toric::EquivariantBundle;
using toric::Fan;
using toric::Filtration;
using toric::Int;
using toric::LatticeVec;
using toric::QVec;
using toric::Rational;
using toric::SplittingType;
using toric::Subspace;

namespace {

QVec qv(std::initializer_list<long long> xs) {
    QVec v;
    for (auto x : xs) v.push_back(Rational(x));
    return v;
}

LatticeVec lv(std::initializer_list<long long> xs) {
    std::vector<Int> v;
    for (auto x : xs) v.push_back(Int(x));
    return LatticeVec(std::move(v));
}

std::vector<Int> degrees(std::initializer_list<long long> xs) {
    std::vector<Int> v;
    for (auto x : xs) v.push_back(Int(x));
    std::sort(v.begin(), v.end());
    return v;
}

Filtration line_at_one(std::size_t ambient, QVec line) {
    return Filtration(ambient, {{Int(1), Subspace::line(std::move(line))},
                                {Int(2), Subspace::zero(ambient)}});
}

Fan x2(long long c) { return Fan::bott_tower(2, {{{1, 2}, Int(c)}}); }

Fan x3(long long c12, long long c13, long long c23) {
    return Fan::bott_tower(3, {{{1, 2}, Int(c12)}, {{1, 3}, Int(c13)}, {{2, 3}, Int(c23)}});
}

std::vector<LatticeVec> sorted_chars(std::initializer_list<LatticeVec> us) {
    std::vector<LatticeVec> v(us);
    std::sort(v.begin(), v.end());
    return v;
}

}  // namespace

TEST_CASE("adapted decomposition: pairs of filtrations") {
    // Coinciding lines: the deep line pairs with a complement.
    Filtration f1 = line_at_one(2, qv({1, 0}));
    Filtration f2 = line_at_one(2, qv({1, 0}));
    auto dec = toric::adapted_decomposition({f1, f2});
    REQUIRE(dec.has_value());
    std::set<std::vector<Int>> jumps;
    for (const auto& l : dec.value()) jumps.insert(l.jumps);
    CHECK(jumps == std::set<std::vector<Int>>{{Int(1), Int(1)}, {Int(0), Int(0)}});

    // Distinct lines split crosswise.
    auto dec2 = toric::adapted_decomposition({line_at_one(2, qv({1, 0})),
                                              line_at_one(2, qv({0, 1}))});
    REQUIRE(dec2.has_value());
    std::set<std::vector<Int>> jumps2;
    for (const auto& l : dec2.value()) jumps2.insert(l.jumps);
    CHECK(jumps2 == std::set<std::vector<Int>>{{Int(1), Int(0)}, {Int(0), Int(1)}});
}

TEST_CASE("adapted decomposition: soundness of every returned step") {
    Filtration deep(3, {{Int(0), Subspace::span(3, {qv({1, 0, 0}), qv({0, 1, 0})})},
                        {Int(2), Subspace::line(qv({1, 0, 0}))},
                        {Int(5), Subspace::zero(3)}});
    Filtration other = line_at_one(3, qv({1, 1, 1}));
    auto dec = toric::adapted_decomposition({deep, other});
    REQUIRE(dec.has_value());
    const std::vector<Filtration> family = {deep, other};
    for (std::size_t which = 0; which < family.size(); ++which) {
        for (const auto& drop : family[which].drops()) {
            toric::QMat inside;
            for (const auto& l : dec.value())
                if (l.jumps[which] >= drop.from) inside.push_back(l.vec);
            CHECK(Subspace::span(3, inside) == drop.space);
        }
    }
}

TEST_CASE("adapted decomposition: three distinct lines in the plane fail") {
    auto dec = toric::adapted_decomposition({line_at_one(2, qv({1, 0})),
                                             line_at_one(2, qv({0, 1})),
                                             line_at_one(2, qv({1, 1}))});
    CHECK_FALSE(dec.has_value());
}

TEST_CASE("adapted decomposition enforces the rank bound") {
    std::vector<toric::Filtration> family = {Filtration::trivial(7)};
    CHECK_THROWS_AS(toric::adapted_decomposition(family), toric::ValidationError);
}

TEST_CASE("tangent filtrations on the plane tower are accepted with the known characters") {
    long long c = 2;
    Fan fan = x2(c);
    EquivariantBundle tangent = toric::make_tangent(fan);
    CHECK(tangent.rank() == 2);
    CHECK(tangent.characters(fan.cone_index({0, 1})) ==
          sorted_chars({lv({1, 0}), lv({0, 1})}));
    CHECK(tangent.characters(fan.cone_index({1, 2})) ==
          sorted_chars({lv({c, 1}), lv({-1, 0})}));
    CHECK(tangent.characters(fan.cone_index({2, 3})) ==
          sorted_chars({lv({-1, 0}), lv({-c, -1})}));
    CHECK(tangent.characters(fan.cone_index({0, 3})) ==
          sorted_chars({lv({1, 0}), lv({0, -1})}));
}

TEST_CASE("rank-1 filtrations are always compatible") {
    Fan fan = x2(1);
    std::vector<Filtration> per_ray;
    long long jump = -2;
    for (std::size_t r = 0; r < fan.rays().size(); ++r)
        per_ray.push_back(Filtration(1, {{Int(jump += 1), Subspace::zero(1)}}));
    CHECK_NOTHROW(EquivariantBundle::from_filtrations(fan, std::move(per_ray)));
}

TEST_CASE("incompatible filtrations are rejected with the offending cone") {
    // Three distinct lines jumping on the rays of one maximal cone of P^3.
    Fan fan = Fan::projective_space(3);
    std::vector<Filtration> per_ray(4, Filtration::trivial(2));
    per_ray[1] = line_at_one(2, qv({1, 0}));
    per_ray[2] = line_at_one(2, qv({0, 1}));
    per_ray[3] = line_at_one(2, qv({1, 1}));
    CHECK_THROWS_WITH_AS(EquivariantBundle::from_filtrations(fan, std::move(per_ray)),
                         doctest::Contains("sigma"), toric::CompatibilityError);
}

TEST_CASE("tangent restriction table on the plane tower") {
    for (long long c : {1, 2, 3}) {
        Fan fan = x2(c);
        auto profile = toric::make_tangent(fan).restriction_profile();
        CHECK(profile.splitting("D1'").degrees == degrees({0, 2}));
        CHECK(profile.splitting("D2'").degrees == degrees({-c, 2}));
        CHECK(profile.splitting("D1").degrees == degrees({0, 2}));
        CHECK(profile.splitting("D2").degrees == degrees({c, 2}));
        for (const auto& row : profile.rows()) CHECK_FALSE(row.ambiguous_characters);
    }
}

TEST_CASE("tangent bundle on projective spaces restricts uniformly") {
    for (int n = 2; n <= 4; ++n) {
        Fan fan = Fan::projective_space(n);
        auto profile = toric::make_tangent(fan).restriction_profile();
        std::vector<Int> expected;
        for (int i = 1; i < n; ++i) expected.push_back(Int(1));
        expected.push_back(Int(2));
        for (const auto& row : profile.rows()) CHECK(row.splitting.degrees == expected);
    }
}

TEST_CASE("tangent bundle on a curve is the degree-two line bundle") {
    Fan p1 = Fan::projective_space(1);
    auto profile = toric::make_tangent(p1).restriction_profile();
    REQUIRE(profile.rows().size() == 1);
    CHECK(profile.rows()[0].splitting.degrees == degrees({2}));

    Fan x1 = Fan::bott_tower(1, {});
    auto tower = toric::make_tangent(x1).restriction_profile();
    CHECK(tower.splitting("X1").degrees == degrees({2}));
}

TEST_CASE("character multisets are independent of the search order") {
    Fan fan = x3(1, 1, 1);
    auto bundle = toric::make_x3_indecomposable(fan, qv({1, 0}), qv({0, 1}), qv({1, 1}));
    for (int c = 0; c < static_cast<int>(fan.max_cones().size()); ++c) {
        std::vector<Filtration> family;
        for (int r : fan.max_cones()[static_cast<std::size_t>(c)])
            family.push_back(bundle.filtrations()[static_cast<std::size_t>(r)]);
        auto base = toric::adapted_decomposition(family, 0);
        REQUIRE(base.has_value());
        for (unsigned seed : {1u, 2u, 5u}) {
            auto other = toric::adapted_decomposition(family, seed);
            REQUIRE(other.has_value());
            std::multiset<std::vector<Int>> a, b;
            for (const auto& l : base.value()) a.insert(l.jumps);
            for (const auto& l : other.value()) b.insert(l.jumps);
            CHECK(a == b);
        }
    }
}

TEST_CASE("example bundle on the plane tower: characters and the ambiguous wall") {
    long long c = 1;
    Fan fan = x2(c);
    auto bundle = toric::make_hirz_indecomposable(fan, qv({1, 0}), qv({0, 1}), qv({1, 1}));
    CHECK(bundle.characters(fan.cone_index({0, 1})) == sorted_chars({lv({1, 0}), lv({0, 1})}));
    CHECK(bundle.characters(fan.cone_index({1, 2})) == sorted_chars({lv({c, 1}), lv({-1, 0})}));
    CHECK(bundle.characters(fan.cone_index({2, 3})) == sorted_chars({lv({-1, 0}), lv({0, 0})}));
    CHECK(bundle.characters(fan.cone_index({0, 3})) == sorted_chars({lv({1, 0}), lv({0, 0})}));

    auto profile = bundle.restriction_profile();
    CHECK(profile.splitting("D1'").degrees == degrees({0, 1}));
    CHECK(profile.splitting("D2'").degrees == degrees({-c, 2}));
    CHECK(profile.splitting("D1").degrees == degrees({0, 1}));

    // The wall whose residue classes collide: the filtration algorithm pairs
    // the distinct lines crosswise, and the other reading stays on record.
    const auto& row = profile.row("D2");
    CHECK(row.splitting.degrees == degrees({1, 1}));
    CHECK(row.ambiguous_characters);
    bool has_published_reading = false;
    for (const auto& alt : row.pairing_alternatives)
        has_published_reading = has_published_reading || alt.degrees == degrees({0, 2});
    CHECK(has_published_reading);
}

TEST_CASE("coincident lines are rejected by the example builders") {
    Fan fan = x2(1);
    CHECK_THROWS_AS(toric::make_hirz_indecomposable(fan, qv({1, 0}), qv({2, 0}), qv({1, 1})),
                    toric::ValidationError);
}

TEST_CASE("height-3 example bundle reproduces the character tables") {
    long long c12 = 1;
    Fan fan = x3(c12, 1, 1);
    auto bundle = toric::make_x3_indecomposable(fan, qv({1, 0}), qv({0, 1}), qv({1, 1}));
    auto chars = [&](std::vector<int> rays) { return bundle.characters(fan.cone_index(rays)); };
    CHECK(chars({0, 1, 2}) == sorted_chars({lv({1, 0, 0}), lv({0, 1, 0})}));
    CHECK(chars({0, 1, 5}) == sorted_chars({lv({1, 0, 0}), lv({0, 1, 0})}));
    CHECK(chars({2, 3, 4}) == sorted_chars({lv({-1, 0, 0}), lv({0, 0, 0})}));
    CHECK(chars({0, 4, 5}) == sorted_chars({lv({1, 0, 0}), lv({0, 0, 0})}));
    CHECK(chars({3, 4, 5}) == sorted_chars({lv({-1, 0, 0}), lv({0, 0, 0})}));
    CHECK(chars({1, 3, 5}) == sorted_chars({lv({c12, 1, 0}), lv({-1, 0, 0})}));
    CHECK(chars({0, 2, 4}) == sorted_chars({lv({1, 0, 0}), lv({0, 0, 0})}));
    CHECK(chars({1, 2, 3}) == sorted_chars({lv({c12, 1, 0}), lv({-1, 0, 0})}));
}

TEST_CASE("height-3 example bundle restriction table") {
    for (long long c12 : {1, 2}) {
        Fan fan = x3(c12, 1, 1);
        auto profile =
            toric::make_x3_indecomposable(fan, qv({1, 0}), qv({0, 1}), qv({1, 1}))
                .restriction_profile();
        CHECK(profile.splitting("l1").degrees == degrees({0, 0}));
        CHECK(profile.splitting("l2").degrees == degrees({0, 1}));
        CHECK(profile.splitting("l3").degrees == degrees({0, 0}));
        CHECK(profile.splitting("l4").degrees == degrees({0, 1}));
        CHECK(profile.splitting("l5").degrees == degrees({-c12, 2}));
        CHECK(profile.splitting("l6").degrees == degrees({0, 0}));
        CHECK(profile.splitting("l7").degrees == degrees({-c12, 2}));
        CHECK(profile.splitting("l8").degrees == degrees({0, 1}));
        CHECK(profile.splitting("l10").degrees == degrees({0, 0}));
        CHECK(profile.splitting("l11").degrees == degrees({0, 1}));
        // The two walls with colliding residue classes; both record the
        // alternative reading {0, 2}.
        for (const char* l : {"l9", "l12"}) {
            const auto& row = profile.row(l);
            CHECK(row.splitting.degrees == degrees({1, 1}));
            CHECK(row.ambiguous_characters);
            bool has_alt = false;
            for (const auto& alt : row.pairing_alternatives)
                has_alt = has_alt || alt.degrees == degrees({0, 2});
            CHECK(has_alt);
        }
    }
}

TEST_CASE("line bundle sums restrict by intersection numbers") {
    Fan fan = x2(2);
    toric::DivisorClass d1{{Int(1), Int(0)}}, d2{{Int(0), Int(1)}};
    auto bundle = toric::make_line_bundle_sum(fan, {d1, d2});
    auto profile = bundle.restriction_profile();
    for (const auto& w : fan.walls()) {
        std::vector<Int> expected = {fan.intersection_number(d1, w),
                                     fan.intersection_number(d2, w)};
        std::sort(expected.begin(), expected.end());
        CHECK(profile.splitting(w.label).degrees == expected);
    }
}

TEST_CASE("character input reproduces the tangent table") {
    long long c = 2;
    Fan fan = x2(c);
    std::vector<std::vector<LatticeVec>> per_cone(4);
    per_cone[static_cast<std::size_t>(fan.cone_index({0, 1}))] = {lv({1, 0}), lv({0, 1})};
    per_cone[static_cast<std::size_t>(fan.cone_index({1, 2}))] = {lv({c, 1}), lv({-1, 0})};
    per_cone[static_cast<std::size_t>(fan.cone_index({2, 3}))] = {lv({-1, 0}), lv({-c, -1})};
    per_cone[static_cast<std::size_t>(fan.cone_index({0, 3}))] = {lv({1, 0}), lv({0, -1})};
    auto bundle = EquivariantBundle::from_characters(fan, 2, std::move(per_cone));
    auto profile = bundle.restriction_profile();
    CHECK(profile.splitting("D2'").degrees == degrees({-c, 2}));
    CHECK(profile.splitting("D2").degrees == degrees({c, 2}));
}

TEST_CASE("character input: ambiguous residue classes are a hard error") {
    Fan fan = x2(1);
    std::vector<std::vector<LatticeVec>> per_cone(4);
    per_cone[static_cast<std::size_t>(fan.cone_index({0, 1}))] = {lv({1, 0}), lv({0, 1})};
    per_cone[static_cast<std::size_t>(fan.cone_index({1, 2}))] = {lv({1, 1}), lv({-1, 0})};
    per_cone[static_cast<std::size_t>(fan.cone_index({2, 3}))] = {lv({-1, 0}), lv({0, 0})};
    per_cone[static_cast<std::size_t>(fan.cone_index({0, 3}))] = {lv({1, 0}), lv({0, 0})};
    auto bundle = EquivariantBundle::from_characters(fan, 2, std::move(per_cone));
    CHECK_THROWS_WITH_AS(bundle.restriction_profile(), doctest::Contains("AMBIGUOUS_PAIRING"),
                         toric::AmbiguousPairingError);
}

TEST_CASE("character input: wall-inconsistent multisets are rejected") {
    Fan fan = x2(1);
    std::vector<std::vector<LatticeVec>> per_cone(4);
    per_cone[static_cast<std::size_t>(fan.cone_index({0, 1}))] = {lv({1, 0}), lv({0, 1})};
    per_cone[static_cast<std::size_t>(fan.cone_index({1, 2}))] = {lv({1, 1}), lv({-1, 0})};
    per_cone[static_cast<std::size_t>(fan.cone_index({2, 3}))] = {lv({-1, 0}), lv({0, 5})};
    per_cone[static_cast<std::size_t>(fan.cone_index({0, 3}))] = {lv({1, 0}), lv({0, -1})};
    CHECK_THROWS_AS(EquivariantBundle::from_characters(fan, 2, std::move(per_cone)),
                    toric::InconsistentDataError);
}

TEST_CASE("wall consistency of computed characters") {
    Fan fan = x3(2, 1, 3);
    auto bundle = toric::make_tangent(fan);
    for (const auto& w : fan.walls()) {
        std::vector<LatticeVec> ra, rb;
        for (const auto& u : bundle.characters(w.cone_a)) ra.push_back(toric::residue_rep(u, w.m_tau));
        for (const auto& u : bundle.characters(w.cone_b)) rb.push_back(toric::residue_rep(u, w.m_tau));
        std::sort(ra.begin(), ra.end());
        std::sort(rb.begin(), rb.end());
        CHECK(ra == rb);
    }
}

TEST_CASE("twisting shifts degrees by intersection numbers") {
    Fan fan = x2(1);
    auto profile = toric::make_tangent(fan).restriction_profile();
    toric::DivisorClass d{{Int(2), Int(1)}};

    auto twisted = toric::twist(profile, d);
    CHECK(twisted.splitting("D2'").degrees == degrees({2 - 1, 2 + 2}));
    CHECK(twisted.splitting("D1'").degrees == degrees({1, 3}));

    // Identity and additivity.
    auto zero = toric::twist(profile, toric::DivisorClass{{Int(0), Int(0)}});
    for (const auto& row : profile.rows())
        CHECK(zero.splitting(row.curve).degrees == row.splitting.degrees);
    toric::DivisorClass d2{{Int(1), Int(3)}};
    auto once = toric::twist(toric::twist(profile, d), d2);
    auto both = toric::twist(profile, toric::DivisorClass{{Int(3), Int(4)}});
    for (const auto& row : once.rows())
        CHECK(row.splitting.degrees == both.splitting(row.curve).degrees);
}

TEST_CASE("height-3 example: twisted degrees on the last wall") {
    Fan fan = x3(1, 1, 1);
    auto profile = toric::make_x3_indecomposable(fan, qv({1, 0}), qv({0, 1}), qv({1, 1}))
                       .restriction_profile();
    toric::DivisorClass d{{Int(2), Int(1), Int(1)}};
    auto twisted = toric::twist(profile, d);
    // Shift on the last wall is a1 + c12 a2 + (c13 + c12 c23) a3 = 2 + 1 + 2.
    CHECK(twisted.splitting("l12").degrees == degrees({5 + 1, 5 + 1}));
    CHECK(twisted.splitting("l5").degrees == degrees({2 - 1, 2 + 2}));
}
