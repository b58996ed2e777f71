#include <doctest.h>

#include <algorithm>

#include "toric/seshadri.hpp"

using toric::Certificate;
using toric::DivisorClass;
using toric::Fan;
using toric::Int;
using toric::Rational;
using toric::SeshadriValue;
using toric::Theorem;
using toric::TowerPoint;

namespace {

toric::QVec qv(std::initializer_list<long long> xs) {
    toric::QVec v;
    for (auto x : xs) v.push_back(Rational(x));
    return v;
}

Fan x2(long long c) { return Fan::bott_tower(2, {{{1, 2}, Int(c)}}); }

Fan x3(long long c12, long long c13, long long c23) {
    return Fan::bott_tower(3, {{{1, 2}, Int(c12)}, {{1, 3}, Int(c13)}, {{2, 3}, Int(c23)}});
}

TowerPoint pt(std::initializer_list<long long> flat) {
    std::vector<Rational> v;
    for (auto x : flat) v.push_back(Rational(x));
    return TowerPoint::from_flat(v);
}

toric::RestrictionProfile twisted_tangent(const Fan& fan, std::vector<long long> a) {
    std::vector<Int> coeffs(a.begin(), a.end());
    return toric::twist(toric::make_tangent(fan).restriction_profile(), DivisorClass{coeffs});
}

toric::RestrictionProfile twisted_x3_example(const Fan& fan, long long a1, long long a2,
                                             long long a3) {
    auto bundle = toric::make_x3_indecomposable(fan, qv({1, 0}), qv({0, 1}), qv({1, 1}));
    return toric::twist(bundle.restriction_profile(),
                        DivisorClass{{Int(a1), Int(a2), Int(a3)}});
}

}  // namespace

TEST_CASE("level classification from the zero pattern") {
    Fan fan3 = x3(1, 1, 1);
    CHECK(toric::gamma_level(fan3, pt({1, 1, 0, 1, 0, 1})) == 1);
    CHECK(toric::gamma_level(fan3, pt({1, 1, 1, 1, 0, 1})) == 2);
    CHECK(toric::gamma_level(fan3, pt({1, 1, 0, 1, 2, 1})) == 3);
    Fan fan2 = x2(1);
    CHECK(toric::gamma_level(fan2, pt({1, 0, 1, 1})) == 2);
    CHECK(toric::gamma_level(fan2, pt({0, 1, 0, 5})) == 1);
    CHECK_THROWS_AS(toric::gamma_level(fan2, pt({0, 0, 1, 1})), toric::ValidationError);
}

TEST_CASE("per-level minimal degrees on the twisted height-3 example") {
    long long c12 = 1, a1 = 2, a2 = 1, a3 = 1;
    Fan fan = x3(c12, 1, 1);
    auto profile = twisted_x3_example(fan, a1, a2, a3);
    CHECK(toric::gamma_mu(profile, 1) == a1 - c12);
    CHECK(toric::gamma_mu(profile, 2) == a2);
    CHECK(toric::gamma_mu(profile, 3) == a3);
}

TEST_CASE("per-level degrees refuse profiles outside the governing conditions") {
    Fan fan = x3(1, 1, 2);
    auto profile = twisted_x3_example(fan, 2, 3, 0);  // slope ladder broken
    CHECK_THROWS_AS(toric::gamma_mu(profile, 2), toric::PreconditionError);
}

TEST_CASE("hypothesis report for the twisted tangent bundle") {
    long long c = 2, a1 = 3, a2 = 1;
    Fan fan = x2(c);
    auto profile = twisted_tangent(fan, {a1, a2});
    auto rep = toric::check_hypotheses(fan, profile, Theorem::Hirzebruch);
    CHECK(rep.all_pass());
    for (const auto& e : rep.entries) CHECK(e.pass);  // includes the exactness entry
}

TEST_CASE("hypothesis report on projective space distinguishes certificates") {
    Fan fan = Fan::projective_space(3);
    auto profile = toric::make_tangent(fan).restriction_profile();
    auto certified =
        toric::check_hypotheses(fan, profile, Theorem::Projective, Certificate::KnownUniform);
    CHECK(certified.all_pass());
    auto uncertified =
        toric::check_hypotheses(fan, profile, Theorem::Projective, Certificate::None);
    CHECK_FALSE(uncertified.all_pass());
}

TEST_CASE("height-3 hypothesis report on the twisted example") {
    for (long long a3 : {1, 2}) {
        Fan fan = x3(1, 1, 1);
        auto profile = twisted_x3_example(fan, 2, 1, a3);
        auto rep = toric::check_hypotheses(fan, profile, Theorem::X3);
        CHECK(rep.all_pass());
    }
    // With a steeper second twist, a3 < a2 breaks the slope ladder:
    // mu4 = a2 + c23*a3 drops below c23*mu8 = c23*a2.
    Fan fan = x3(1, 1, 2);
    auto profile = twisted_x3_example(fan, 2, 3, 0);
    auto rep = toric::check_hypotheses(fan, profile, Theorem::X3);
    CHECK_FALSE(rep.all_pass());
}

TEST_CASE("projective branch: tangent bundles give exactly one") {
    for (int n = 2; n <= 4; ++n) {
        Fan fan = Fan::projective_space(n);
        auto profile = toric::make_tangent(fan).restriction_profile();
        auto res = toric::seshadri_projective(profile, Certificate::KnownUniform);
        CHECK(res.value.kind == SeshadriValue::Kind::Exact);
        CHECK(res.value.lower == Rational(1));
    }
}

TEST_CASE("projective branch: line bundles and sums") {
    Fan fan = Fan::projective_space(2);
    for (long long d : {0, 1, 3}) {
        auto profile =
            toric::make_line_bundle_sum(fan, {DivisorClass{{Int(d)}}}).restriction_profile();
        auto res = toric::seshadri_projective(profile, Certificate::KnownUniform);
        CHECK(res.value.kind == SeshadriValue::Kind::Exact);
        CHECK(res.value.lower == Rational(Int(d)));
    }
    auto sum = toric::make_line_bundle_sum(fan, {DivisorClass{{Int(0)}}, DivisorClass{{Int(1)}}})
                   .restriction_profile();
    auto res = toric::seshadri_projective(sum, Certificate::KnownUniform);
    CHECK(res.value.kind == SeshadriValue::Kind::Exact);
    CHECK(res.value.lower == Rational(0));
}

TEST_CASE("projective branch without a certificate reports the open lower bound") {
    Fan fan = Fan::projective_space(2);
    auto profile = toric::make_tangent(fan).restriction_profile();
    auto res = toric::seshadri_projective(profile, Certificate::None);
    CHECK(res.value.kind == SeshadriValue::Kind::LowerBound);
    CHECK(res.value.lower == Rational(1));
    CHECK_FALSE(res.value.upper.has_value());
    CHECK_FALSE(res.notes.empty());
}

TEST_CASE("non-nef profiles are rejected by the closed-form branches") {
    Fan fan = x2(1);
    auto profile = toric::make_tangent(fan).restriction_profile();  // not nef
    CHECK_THROWS_AS(toric::seshadri_hirzebruch(profile, pt({1, 1, 1, 1})),
                    toric::PreconditionError);
    Fan p2 = Fan::projective_space(2);
    auto neg = toric::make_line_bundle_sum(p2, {DivisorClass{{Int(-1)}}}).restriction_profile();
    CHECK_THROWS_AS(toric::seshadri_projective(neg, Certificate::KnownUniform),
                    toric::PreconditionError);
}

TEST_CASE("height-2 branch on the twisted tangent bundle") {
    for (long long c : {1, 2, 3}) {
        Fan fan = x2(c);
        for (long long a1 = c; a1 <= c + 2; ++a1)
            for (long long a2 = 0; a2 <= 2; ++a2) {
                auto profile = twisted_tangent(fan, {a1, a2});
                auto on = toric::seshadri_hirzebruch(profile, pt({1, 1, 0, 1}));
                CHECK(on.value.kind == SeshadriValue::Kind::Exact);
                CHECK(on.value.lower == Rational(Int(std::min(a1 - c, a2))));
                CHECK(on.level == 1);
                auto off = toric::seshadri_hirzebruch(profile, pt({1, 1, 1, 1}));
                CHECK(off.value.kind == SeshadriValue::Kind::Exact);
                CHECK(off.value.lower == Rational(Int(a2)));
                CHECK(off.level == 2);
            }
    }
}

TEST_CASE("height-2 branch on a rank-1 bundle") {
    Fan fan = x2(2);
    auto profile = toric::make_line_bundle_sum(fan, {DivisorClass{{Int(1), Int(1)}}})
                       .restriction_profile();
    // Slopes: first stage 1/1, section curve 1, last curve 1 + c.
    for (auto p : {pt({1, 1, 0, 1}), pt({1, 1, 1, 1})}) {
        auto res = toric::seshadri_hirzebruch(profile, p);
        CHECK(res.value.kind == SeshadriValue::Kind::Exact);
        CHECK(res.value.lower == Rational(1));
    }
}

TEST_CASE("height-2 branch fails loudly without the equal-slope hypothesis") {
    Fan fan = x2(1);
    // Hand-built profile with mu1 != mu1'.
    std::vector<toric::ProfileRow> rows;
    auto row = [&](const char* curve, std::initializer_list<long long> degs) {
        toric::ProfileRow r;
        r.curve = curve;
        std::vector<Int> d;
        for (auto x : degs) d.push_back(Int(x));
        r.splitting = toric::SplittingType(std::move(d));
        rows.push_back(std::move(r));
    };
    row("D1'", {2, 3});
    row("D2'", {1, 2});
    row("D1", {0, 3});
    row("D2", {4, 4});
    toric::RestrictionProfile profile(&fan, 2, rows);
    CHECK_THROWS_AS(toric::seshadri_hirzebruch(profile, pt({1, 1, 0, 1})),
                    toric::HypothesisError);
}

TEST_CASE("height-2 branch reports an interval when the exactness condition fails") {
    Fan fan = x2(1);
    std::vector<toric::ProfileRow> rows;
    auto row = [&](const char* curve, std::initializer_list<long long> degs) {
        toric::ProfileRow r;
        r.curve = curve;
        std::vector<Int> d;
        for (auto x : degs) d.push_back(Int(x));
        r.splitting = toric::SplittingType(std::move(d));
        rows.push_back(std::move(r));
    };
    // mu1 = mu1' = 3, mu2 = 1 < mu1, mu2' = 2.
    row("D1'", {3, 5});
    row("D2'", {2, 4});
    row("D1", {3, 6});
    row("D2", {1, 7});
    toric::RestrictionProfile profile(&fan, 2, rows);

    auto on = toric::seshadri_hirzebruch(profile, pt({1, 1, 0, 1}));
    CHECK(on.value.kind == SeshadriValue::Kind::Interval);
    CHECK(on.value.lower == Rational(1));   // min{mu1, mu2, mu2'}
    CHECK(*on.value.upper == Rational(2));  // min{mu1, mu2'}

    auto off = toric::seshadri_hirzebruch(profile, pt({1, 1, 1, 1}));
    CHECK(off.value.kind == SeshadriValue::Kind::Interval);
    CHECK(off.value.lower == Rational(1));  // min{mu1, mu2}
    CHECK(*off.value.upper == Rational(3)); // mu1
}

TEST_CASE("height-3 branch: the example grid") {
    for (long long c12 : {1, 2})
        for (long long a1 = c12; a1 <= c12 + 2; ++a1)
            for (long long a2 = 0; a2 <= 2; ++a2)
                for (long long a3 = a2; a3 <= a2 + 2; ++a3) {
                    Fan fan = x3(c12, 1, 1);
                    auto profile = twisted_x3_example(fan, a1, a2, a3);
                    auto level1 = toric::seshadri_x3(profile, pt({1, 1, 0, 1, 0, 1}));
                    CHECK(level1.value.kind == SeshadriValue::Kind::Exact);
                    CHECK(level1.value.lower == Rational(Int(std::min(a1 - c12, a2))));
                    auto level2 = toric::seshadri_x3(profile, pt({1, 1, 1, 1, 0, 1}));
                    CHECK(level2.value.lower == Rational(Int(a2)));
                    auto level3 = toric::seshadri_x3(profile, pt({1, 1, 1, 1, 1, 1}));
                    CHECK(level3.value.lower == Rational(Int(a3)));
                }
}

TEST_CASE("height-3 value equals the slice recursion on random parameters") {
    // Direct per-level minimum versus the recursive form through the
    // height-2 slice, recomputed here from the raw slopes.
    struct Lcg {
        unsigned long long s = 31337ull;
        long long next(long long lo, long long hi) {
            s = s * 6364136223846793005ull + 1442695040888963407ull;
            return lo +
                   static_cast<long long>((s >> 33) % static_cast<unsigned long long>(hi - lo + 1));
        }
    } rng;
    int checked = 0;
    while (checked < 100) {
        long long c12 = rng.next(1, 3), c13 = rng.next(1, 3), c23 = rng.next(1, 3);
        long long a2 = rng.next(0, 4), a3 = a2 + rng.next(0, 4), a1 = c12 + rng.next(0, 4);
        Fan fan = x3(c12, c13, c23);
        auto profile = twisted_x3_example(fan, a1, a2, a3);
        if (!toric::check_hypotheses(fan, profile, Theorem::X3).all_pass()) continue;
        Int mu5 = profile.mu_min("l5"), mu8 = profile.mu_min("l8"), mu10 = profile.mu_min("l10");
        struct Case {
            TowerPoint point;
            int level;
        };
        for (const auto& c : {Case{pt({1, 1, 0, 1, 0, 1}), 1}, Case{pt({1, 1, 2, 1, 0, 1}), 2},
                              Case{pt({1, 1, 2, 1, 3, 1}), 3}}) {
            Int slice = c.level <= 2 ? std::min(mu10, mu8) : mu10;
            Int recursive = c.level == 1 ? std::min(mu5, slice) : slice;
            auto res = toric::seshadri_x3(profile, c.point);
            CHECK(res.value.lower == toric::Rational(recursive));
        }
        ++checked;
    }
    CHECK(checked == 100);
}

TEST_CASE("height-3 branch rejects when conditions fail, carrying the report") {
    Fan fan = x3(1, 1, 2);
    auto profile = twisted_x3_example(fan, 2, 3, 0);  // a3 < a2 with c23 = 2
    CHECK_THROWS_AS(toric::seshadri_x3(profile, pt({1, 1, 1, 1, 1, 1})), toric::HypothesisError);
    try {
        toric::seshadri_x3(profile, pt({1, 1, 1, 1, 1, 1}));
    } catch (const toric::HypothesisError& e) {
        CHECK_FALSE(e.report.empty());
    }
}
