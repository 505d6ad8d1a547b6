#include <doctest.h>

#include "equibundle/rep.hpp"

#include <set>
#include <algorithm>

using namespace equibundle;

namespace {

std::shared_ptr<const RootDatum> a1_adjoint() {
    return RootDatum::build_adjoint(CartanType{{{'A', 1}}, 0});
}
std::shared_ptr<const RootDatum> a2_adjoint() {
    return RootDatum::build_adjoint(CartanType{{{'A', 2}}, 0});
}
std::shared_ptr<const RootDatum> a2_sc() {
    return RootDatum::build_simply_connected(CartanType{{{'A', 2}}, 0});
}

Weight wt(const RootDatum& d, std::initializer_list<long> cs) {
    IntVec v(cs);
    v.resize(d.total_rank(), 0);
    return Weight{v};
}

}  // namespace

TEST_CASE("central character groups") {
    CHECK(a1_adjoint()->central_quotient().torsion == std::vector<Integer>{Integer(2)});
    CHECK(a2_sc()->central_quotient().torsion.empty());
    CHECK(a2_adjoint()->central_quotient().torsion == std::vector<Integer>{Integer(3)});
}

TEST_CASE("sl2 irreps") {
    auto d = a1_adjoint();
    Rep v0 = Rep::sl2_irrep(d, 0);
    CHECK(v0.dim() == 1);

    Rep v2 = Rep::sl2_irrep(d, 2);
    CHECK(v2.dim() == 3);
    CHECK(v2.weights()[0] == wt(*d, {2}));
    CHECK(v2.weights()[1] == wt(*d, {0}));
    CHECK(v2.weights()[2] == wt(*d, {-2}));

    // n = 3: [e, f] acts on each weight space by the pairing value.
    Rep v3 = Rep::sl2_irrep(d, 3);
    MatrixQ comm = v3.raise(0) * v3.lower(0) - v3.lower(0) * v3.raise(0);
    for (std::size_t k = 0; k < 4; ++k) CHECK(comm.at(k, k) == Rational(v3.weights()[k].coords[0]));

    CHECK_THROWS_AS(Rep::sl2_irrep(d, -1), std::invalid_argument);
}

TEST_CASE("fundamental representations of type A") {
    auto d = a2_sc();
    Rep f1 = Rep::fundamental_rep_A(d, 1);
    CHECK(f1.dim() == 3);
    Rep f2 = Rep::fundamental_rep_A(d, 2);
    CHECK(f2.dim() == 3);

    // wedge-square weights are the negatives of the dual pattern of f1
    std::vector<IntVec> w1, w2;
    for (const Weight& w : f1.weights()) {
        IntVec neg(w.coords.size());
        for (std::size_t i = 0; i < neg.size(); ++i) neg[i] = -w.coords[i];
        w1.push_back(neg);
    }
    for (const Weight& w : f2.weights()) w2.push_back(w.coords);
    std::sort(w1.begin(), w1.end());
    std::sort(w2.begin(), w2.end());
    CHECK(w1 == w2);

    auto d3 = RootDatum::build_simply_connected(CartanType{{{'A', 3}}, 0});
    CHECK(Rep::fundamental_rep_A(d3, 2).dim() == 6);
    CHECK_THROWS_AS(Rep::fundamental_rep_A(d3, 4), std::invalid_argument);
}

TEST_CASE("tensor products") {
    auto d = a1_adjoint();
    Rep v1 = Rep::sl2_irrep(d, 1);
    Rep t = v1.tensor(Rep::trivial(d));
    CHECK(t.dim() == v1.dim());

    Rep vv = v1.tensor(v1);
    CHECK(vv.dim() == 4);
    std::multiset<long> weights;
    for (const Weight& w : vv.weights()) weights.insert(w.coords[0]);
    CHECK(weights == std::multiset<long>{2, 0, 0, -2});

    Rep v2 = Rep::sl2_irrep(d, 2);
    CHECK(v1.tensor(v2).dim() == v1.dim() * v2.dim());
}

TEST_CASE("highest weight submodules") {
    auto d = a1_adjoint();
    Rep v1 = Rep::sl2_irrep(d, 1);
    Rep sub = v1.tensor(v1).highest_weight_submodule(wt(*d, {2}));
    CHECK(sub.dim() == 3);
    sub.validate();

    Rep v2 = Rep::sl2_irrep(d, 2);
    Rep same = v2.highest_weight_submodule(wt(*d, {2}));
    CHECK(same.dim() == v2.dim());

    auto dsc = a2_sc();
    Rep adj = Rep::fundamental_rep_A(dsc, 1).tensor(Rep::fundamental_rep_A(dsc, 2))
                  .highest_weight_submodule(wt(*dsc, {1, 1}));
    CHECK(adj.dim() == 8);
    adj.validate();

    CHECK_THROWS_AS(v2.highest_weight_submodule(wt(*d, {4})), std::invalid_argument);
}

TEST_CASE("weyl dimension and freudenthal") {
    auto d = a1_adjoint();
    CHECK(weyl_dim(*d, wt(*d, {0})) == 1);
    for (long n = 0; n <= 6; ++n) CHECK(weyl_dim(*d, wt(*d, {n})) == n + 1);

    auto d2 = a2_sc();
    CHECK(weyl_dim(*d2, wt(*d2, {1, 1})) == 8);
    auto mult = freudenthal(*d2, wt(*d2, {1, 1}));
    CHECK(mult.at(IntVec{0, 0}) == 2);
    Integer total = 0;
    for (const auto& [w, m] : mult) total += m;
    CHECK(total == 8);

    auto m0 = freudenthal(*d2, wt(*d2, {0, 0}));
    CHECK(m0.size() == 1);
    CHECK(m0.at(IntVec{0, 0}) == 1);

    CHECK_THROWS_AS(weyl_dim(*d2, wt(*d2, {-1, 0})), std::invalid_argument);
}

TEST_CASE("oracle triangle on small dominant weights") {
    auto d = a1_adjoint();
    for (long n = 0; n <= 5; ++n) {
        Weight lam = wt(*d, {n});
        Rep irr = Rep::irreducible(d, lam);
        Integer wd = weyl_dim(*d, lam);
        Integer fsum = 0;
        for (const auto& [w, m] : freudenthal(*d, lam)) fsum += m;
        CHECK(Integer(static_cast<long>(irr.dim())) == wd);
        CHECK(fsum == wd);
    }
    auto d2 = a2_sc();
    for (auto [a, b] : std::vector<std::pair<long, long>>{{0, 0}, {1, 0}, {0, 1}, {1, 1}, {2, 0}, {2, 1}}) {
        Weight lam = wt(*d2, {a, b});
        Rep irr = Rep::irreducible(d2, lam);
        Integer wd = weyl_dim(*d2, lam);
        Integer fsum = 0;
        for (const auto& [w, m] : freudenthal(*d2, lam)) fsum += m;
        CHECK(Integer(static_cast<long>(irr.dim())) == wd);
        CHECK(fsum == wd);
    }
}

TEST_CASE("freudenthal is Weyl symmetric") {
    auto d2 = a2_sc();
    auto mult = freudenthal(*d2, wt(*d2, {2, 1}));
    for (const auto& [wc, m] : mult) {
        Weight w{wc};
        for (std::size_t i = 0; i < 2; ++i) {
            Weight s = w;
            long c = s.coords[i];
            Root alpha = d2->simple_root(i);
            for (std::size_t t = 0; t < s.coords.size(); ++t) s.coords[t] -= c * alpha.coords[t];
            CHECK(mult.at(s.coords) == m);
        }
    }
}

TEST_CASE("root actions") {
    auto d2 = a2_sc();
    Rep adj = Rep::adjoint_rep_A(d2);
    CHECK(adj.dim() == 8);
    adj.validate();

    CHECK(adj.root_action(d2->simple_root(0)) == adj.raise(0));

    Root theta = Root{wt(*d2, {1, 1}).coords};  // alpha_1 + alpha_2
    MatrixQ e_theta = adj.root_action(theta);
    CHECK_FALSE(e_theta.is_zero());
    for (std::size_t p = 0; p < adj.dim(); ++p)
        for (std::size_t q = 0; q < adj.dim(); ++q)
            if (e_theta.at(p, q) != 0) {
                for (std::size_t t = 0; t < 2; ++t)
                    CHECK(adj.weights()[p].coords[t] == adj.weights()[q].coords[t] + theta.coords[t]);
            }

    Rep triv = Rep::trivial(d2);
    CHECK(triv.root_action(theta).is_zero());

    IntVec bogus{1, 0};
    bogus.resize(d2->total_rank(), 0);
    bogus[0] = 7;
    CHECK_THROWS_AS(adj.root_action(Root{bogus}), std::invalid_argument);
}

TEST_CASE("central characters of reps") {
    auto d = a1_adjoint();
    Rep v1 = Rep::sl2_irrep(d, 1);
    auto chi = v1.uniform_character();
    REQUIRE(chi.has_value());
    CHECK_FALSE(d->is_trivial_character(*chi));

    Rep v2 = Rep::sl2_irrep(d, 2);
    auto chi2 = v2.uniform_character();
    REQUIRE(chi2.has_value());
    CHECK(d->is_trivial_character(*chi2));

    // tensor characters add
    auto chi_tt = v1.tensor(v1).uniform_character();
    REQUIRE(chi_tt.has_value());
    CHECK(*chi_tt == d->add_characters(*chi, *chi));
    CHECK(d->is_trivial_character(*chi_tt));

    // mixed sum has no uniform character
    Rep mixed = direct_sum_rep(v1, v2);
    CHECK_FALSE(mixed.uniform_character().has_value());
}

TEST_CASE("irreducible decomposition") {
    auto d = a1_adjoint();
    Rep v1 = Rep::sl2_irrep(d, 1);
    Rep vv = v1.tensor(v1);  // V_2 + V_0
    auto pieces = vv.irreducible_decomposition();
    REQUIRE(pieces.size() == 2);
    std::multiset<std::size_t> dims;
    for (const auto& p : pieces) dims.insert(p.space.dim());
    CHECK(dims == std::multiset<std::size_t>{1, 3});
    for (const auto& p : pieces) {
        // lowest weight is the negated highest for sl2
        IntVec neg(p.highest.coords.size());
        for (std::size_t i = 0; i < neg.size(); ++i) neg[i] = -p.highest.coords[i];
        CHECK(p.lowest.coords == neg);
    }
}
