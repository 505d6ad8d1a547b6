#include <doctest.h>

#include "equibundle/root_datum.hpp"

using namespace equibundle;

namespace {

Weight wt(const RootDatum& d, std::initializer_list<long> cs) {
    IntVec v(cs);
    v.resize(d.total_rank(), 0);
    return Weight{v};
}

Coweight cwt(const RootDatum& d, std::initializer_list<long> cs) {
    IntVec v(cs);
    v.resize(d.total_rank(), 0);
    return Coweight{v};
}

}  // namespace

TEST_CASE("cartan type validation") {
    auto check = [](char f, int r) {
        CartanType t{{{f, r}}, 0};
        t.validate();
    };
    CHECK_THROWS_AS(check('B', 1), std::invalid_argument);
    CHECK_THROWS_AS(check('D', 2), std::invalid_argument);
    CHECK_THROWS_AS(check('E', 9), std::invalid_argument);
    CHECK_THROWS_AS(check('F', 3), std::invalid_argument);
    CHECK_THROWS_AS(check('Z', 1), std::invalid_argument);
    CartanType mixed{{{'A', 1}, {'G', 2}}, 2};
    CHECK_NOTHROW(mixed.validate());
}

TEST_CASE("A1 adjoint datum") {
    auto d = RootDatum::build_adjoint(CartanType{{{'A', 1}}, 0});
    CHECK(d->positive_roots().size() == 1);
    CHECK(d->positive_roots()[0] == wt(*d, {2}));
    CHECK(d->central_quotient().torsion_order() == 2);  // X*(T~)/X*(T) for PGL2
    CHECK(d->weight_in_lattice(wt(*d, {2})));
    CHECK_FALSE(d->weight_in_lattice(wt(*d, {1})));
}

TEST_CASE("A2 full weight lattice") {
    auto d = RootDatum::build_simply_connected(CartanType{{{'A', 2}}, 0});
    CHECK(d->positive_roots().size() == 3);
    CHECK(d->central_quotient().torsion_order() == 1);
}

TEST_CASE("G2 root lattice is self dual") {
    auto d = RootDatum::build_adjoint(CartanType{{{'G', 2}}, 0});
    CHECK(d->positive_roots().size() == 6);
    CHECK(d->central_quotient().torsion_order() == 1);  // X*(T~) = X*(T)
    auto sc = RootDatum::build_simply_connected(CartanType{{{'G', 2}}, 0});
    CHECK(sc->central_quotient().torsion_order() == 1);
}

TEST_CASE("positive root counts for several types") {
    auto count = [](char f, int r) {
        return RootDatum::build_simply_connected(CartanType{{{f, r}}, 0})->positive_roots().size();
    };
    CHECK(count('A', 3) == 6);
    CHECK(count('B', 2) == 4);
    CHECK(count('B', 3) == 9);
    CHECK(count('C', 3) == 9);
    CHECK(count('D', 4) == 12);
    CHECK(count('G', 2) == 6);
    CHECK(count('F', 4) == 24);
    CHECK(count('E', 6) == 36);
}

TEST_CASE("pairing conventions") {
    auto d = RootDatum::build_adjoint(CartanType{{{'A', 2}}, 0});
    // <omega_i^vee, alpha_j> = delta_ij; adjoint coweight coords are the
    // fundamental coweights themselves.
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) {
            Coweight c = cwt(*d, {i == 0 ? 1 : 0, i == 1 ? 1 : 0});
            CHECK(d->pairing(c, d->simple_root(j)) == (i == j ? 1 : 0));
        }
    Coweight zero = cwt(*d, {0, 0});
    CHECK(d->pairing(zero, wt(*d, {5, -7})) == 0);

    // A1: <omega^vee, varpi> = 1/2
    auto a1 = RootDatum::build_adjoint(CartanType{{{'A', 1}}, 0});
    CHECK(a1->pairing(cwt(*a1, {1}), wt(*a1, {1})) == Rational(1, 2));
}

TEST_CASE("dominance") {
    auto d = RootDatum::build_simply_connected(CartanType{{{'A', 2}}, 0});
    CHECK(d->is_dominant(wt(*d, {1, 0})));
    CHECK_FALSE(d->is_dominant(wt(*d, {-1, 0})));
    // alpha_1 = 2 pi_1 - pi_2 is not dominant; the Cartan column is the oracle.
    Root a1 = d->simple_root(0);
    CHECK(a1 == wt(*d, {2, -1}));
    CHECK_FALSE(d->is_dominant(a1));
}

TEST_CASE("parabolic split") {
    auto a1 = RootDatum::build_adjoint(CartanType{{{'A', 1}}, 0});
    ParabolicSplit s = a1->parabolic_split(cwt(*a1, {1}));
    CHECK(s.level_zero.empty());
    CHECK(s.level_positive.size() == 1);
    CHECK(s.level_negative.size() == 1);

    ParabolicSplit all_zero = a1->parabolic_split(cwt(*a1, {0}));
    CHECK(all_zero.level_zero.size() == 2);
    CHECK(all_zero.level_positive.empty());

    auto a2 = RootDatum::build_adjoint(CartanType{{{'A', 2}}, 0});
    ParabolicSplit t = a2->parabolic_split(cwt(*a2, {1, 0}));
    CHECK(t.level_zero.size() == 2);      // {±alpha_2}
    CHECK(t.level_positive.size() == 2);  // {alpha_1, alpha_1 + alpha_2}
    CHECK(t.level_negative.size() == 2);

    // partition and negation symmetry
    CHECK(t.level_zero.size() + t.level_positive.size() + t.level_negative.size() ==
          a2->all_roots().size());
    for (const Root& a : t.level_positive) {
        IntVec neg(a.coords.size());
        for (std::size_t i = 0; i < neg.size(); ++i) neg[i] = -a.coords[i];
        bool found = false;
        for (const Root& b : t.level_negative)
            if (b.coords == neg) found = true;
        CHECK(found);
    }
}

TEST_CASE("pairing is integral on the lattice pair") {
    for (auto datum : {RootDatum::build_adjoint(CartanType{{{'A', 2}}, 0}),
                       RootDatum::build_simply_connected(CartanType{{{'A', 2}}, 0}),
                       RootDatum::build_adjoint(CartanType{{{'B', 2}}, 1})}) {
        // coweight basis rows pair integrally with X*(T) basis rows
        for (std::size_t i = 0; i < datum->total_rank(); ++i) {
            IntVec ci(datum->total_rank(), 0);
            ci[i] = 1;
            for (std::size_t k = 0; k < datum->total_rank(); ++k) {
                IntVec wk(datum->total_rank());
                for (std::size_t j = 0; j < datum->total_rank(); ++j)
                    wk[j] = datum->weight_lattice_basis().at(k, j).get_si();
                Rational v = datum->pairing(Coweight{ci}, Weight{wk});
                CHECK(v.get_den() == 1);
            }
        }
    }
}

TEST_CASE("lattice sandwich rejects bad bases") {
    // A lattice not containing the root lattice: spanned by 2*alpha for A1.
    MatrixZ bad(1, 1);
    bad.at(0, 0) = 4;  // 4 varpi = 2 alpha
    CHECK_THROWS_AS(RootDatum::build(CartanType{{{'A', 1}}, 0}, bad), std::invalid_argument);
}
