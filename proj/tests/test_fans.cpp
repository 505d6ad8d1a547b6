#include <doctest.h>

#include "equibundle/fan.hpp"

#include <algorithm>

using namespace equibundle;

namespace {

std::shared_ptr<const RootDatum> adjoint(char f, int r) {
    return RootDatum::build_adjoint(CartanType{{{f, r}}, 0});
}

Coweight cw(std::initializer_list<long> cs) { return Coweight{IntVec(cs)}; }

}  // namespace

TEST_CASE("sigma0 shapes") {
    auto a1 = Fan::sigma0(adjoint('A', 1));
    CHECK(a1->rays().size() == 1);
    CHECK(a1->rays()[0].coords == IntVec{1});
    CHECK(a1->max_cones().size() == 1);

    auto a2 = Fan::sigma0(adjoint('A', 2));
    CHECK(a2->rays().size() == 2);
    REQUIRE(a2->max_cones().size() == 1);
    CHECK(a2->max_cones()[0].size() == 2);
    // 2^r cones in the face closure of the single maximal cone
    CHECK((1u << a2->rays().size()) == 4);

    // simply connected A1: the primitive generator of the omega ray is the coroot
    auto sc = RootDatum::build_simply_connected(CartanType{{{'A', 1}}, 0});
    auto s = Fan::sigma0(sc);
    CHECK(s->rays()[0].coords == IntVec{1});  // alpha^vee in coroot coordinates
    CHECK(sc->pairing(s->rays()[0], sc->simple_root(0)) == 2);
}

TEST_CASE("smoothness") {
    auto d = adjoint('A', 2);
    CHECK(is_smooth(*d, Cone{{cw({1, 0}), cw({0, 1})}}));
    CHECK_FALSE(is_smooth(*d, Cone{{cw({1, 0}), cw({1, 2})}}));  // index 2
    auto s0 = Fan::sigma0(d);
    for (const auto& mc : s0->max_cones()) CHECK(is_smooth(*d, s0->cone_of(mc)));
    // permutation invariance
    CHECK(is_smooth(*d, Cone{{cw({0, 1}), cw({1, 0})}}));
    CHECK_FALSE(is_smooth(*d, Cone{{cw({1, 2}), cw({1, 0})}}));
}

TEST_CASE("strong convexity and membership") {
    CHECK(is_strongly_convex(Cone{{cw({1, 0}), cw({0, 1})}}));
    CHECK_FALSE(is_strongly_convex(Cone{{cw({1, 0}), cw({-1, 0})}}));
    CHECK(is_strongly_convex(Cone{}));

    Cone c{{cw({1, 0}), cw({1, 2})}};
    CHECK(cone_contains(c, {Rational(2), Rational(2)}));
    CHECK_FALSE(cone_contains(c, {Rational(-1), Rational(0)}));
    CHECK(cone_contains(c, {Rational(0), Rational(0)}));
    CHECK_FALSE(cone_contains(c, {Rational(0), Rational(1)}));
}

TEST_CASE("maps to sigma0") {
    auto d = adjoint('A', 1);
    CHECK(maps_to_sigma0(*Fan::sigma0(d)));
    auto bad = Fan::from_max_cones(d, {cw({-1})}, {{0}});
    CHECK_FALSE(maps_to_sigma0(*bad));
    CHECK(maps_to_sigma0(*Fan::origin_only(d)));
}

TEST_CASE("validate_fan") {
    auto d = adjoint('A', 1);
    CHECK(validate_fan(*Fan::sigma0(d)).ok());
    CHECK(validate_fan(*Fan::origin_only(d)).ok());

    auto d2 = adjoint('A', 2);
    auto nonsmooth = Fan::from_max_cones(d2, {cw({1, 0}), cw({1, 2})}, {{0, 1}});
    FanReport r = validate_fan(*nonsmooth);
    CHECK_FALSE(r.ok());
    CHECK_FALSE(r.smooth);
    bool named = false;
    for (const auto& f : r.failures)
        if (f.find("cone 0") != std::string::npos) named = true;
    CHECK(named);

    // two cones overlapping off a common face
    auto overlap = Fan::from_max_cones(d2, {cw({1, 0}), cw({0, 1}), cw({1, 1})}, {{0, 1}, {0, 2}});
    FanReport r2 = validate_fan(*overlap);
    CHECK_FALSE(r2.pairwise_faces);

    // two cones meeting along a shared ray: fine
    auto good = Fan::from_max_cones(d2, {cw({1, 0}), cw({0, 1}), cw({2, 1})}, {{0, 2}, {1, 2}});
    CHECK(validate_fan(*good).pairwise_faces);
}

TEST_CASE("sigma0 validates for adjoint data of rank <= 4") {
    for (auto [f, r] : std::vector<std::pair<char, int>>{{'A', 1}, {'A', 2}, {'A', 3}, {'A', 4},
                                                         {'B', 2}, {'B', 3}, {'C', 3}, {'D', 4},
                                                         {'G', 2}, {'F', 4}}) {
        auto d = adjoint(f, r);
        FanReport rep = validate_fan(*Fan::sigma0(d));
        INFO(f, r);
        CHECK(rep.ok());
    }
}

TEST_CASE("rays of accepted fans are dominant coweights") {
    for (auto dfan : {Fan::sigma0(adjoint('A', 2)), Fan::sigma0(adjoint('B', 2))}) {
        REQUIRE(validate_fan(*dfan).ok());
        const RootDatum& d = *dfan->datum();
        for (const Coweight& tau : dfan->rays())
            for (const Root& a : d.positive_roots()) CHECK(d.pairing(tau, a) >= 0);
    }
}
