#include <doctest.h>

#include "equibundle/filtration.hpp"

#include <set>

using namespace equibundle;

namespace {

std::shared_ptr<const RootDatum> a1ad() { return RootDatum::build_adjoint(CartanType{{{'A', 1}}, 0}); }
std::shared_ptr<const RootDatum> a2ad() { return RootDatum::build_adjoint(CartanType{{{'A', 2}}, 0}); }

Weight wt(const RootDatum& d, std::initializer_list<long> cs) {
    IntVec v(cs);
    v.resize(d.total_rank(), 0);
    return Weight{v};
}

// adjoint A1 module: basis e_alpha, e_{-alpha}, h (adjoint_rep_A order)
struct Sl2Adjoint {
    std::shared_ptr<const RootDatum> datum;
    std::shared_ptr<const Rep> rep;
    std::shared_ptr<const Fan> fan;
    SubspaceQ line_e, line_f, line_h, plane_eh;
    Sl2Adjoint() {
        datum = a1ad();
        rep = std::make_shared<Rep>(Rep::adjoint_rep_A(datum));
        fan = Fan::sigma0(datum);
        auto unit = [&](std::size_t k) {
            std::vector<Rational> v(3);
            v[k] = 1;
            return v;
        };
        line_e = SubspaceQ::span_rows(3, {unit(0)});
        line_f = SubspaceQ::span_rows(3, {unit(1)});
        line_h = SubspaceQ::span_rows(3, {unit(2)});
        plane_eh = sum(line_e, line_h);
    }
    FiltrationObject object(std::vector<std::pair<Coord, SubspaceQ>> bps) const {
        return FiltrationObject::create(rep, fan, {Filtration::from_breakpoints(3, std::move(bps))});
    }
};

}  // namespace

TEST_CASE("filtration canonical form") {
    SubspaceQ z = SubspaceQ::zero(2);
    SubspaceQ line = SubspaceQ::span_rows(2, {{Rational(1), Rational(0)}});
    Filtration f = Filtration::from_breakpoints(2, {{3, z}, {1, line}});
    CHECK(f.at(0).is_full());
    CHECK(f.at(1) == line);
    CHECK(f.at(2) == line);
    CHECK(f.at(3).is_zero());
    CHECK(f.at(100).is_zero());
    CHECK(f.steps().size() == 2);

    Filtration g = f.shifted(2);
    CHECK(g.at(2).is_full());
    CHECK(g.at(3) == line);

    // drops non-jumps, rejects non-nested and non-exhaustive data
    Filtration h = Filtration::from_breakpoints(2, {{0, SubspaceQ::full(2)}, {1, z}});
    CHECK(h.steps().size() == 1);
    SubspaceQ other = SubspaceQ::span_rows(2, {{Rational(0), Rational(1)}});
    CHECK_THROWS_AS(Filtration::from_breakpoints(2, {{0, line}, {1, other}}), std::invalid_argument);
    CHECK_THROWS_AS(Filtration::from_breakpoints(2, {{0, line}}), std::invalid_argument);
}

TEST_CASE("check_standard on the sl2 adjoint module") {
    Sl2Adjoint S;

    FiltrationObject null_obj = f_null(S.rep, S.fan);
    CHECK(check_standard(null_obj, 0).ok);
    CHECK(check_transversal(null_obj, 0).ok);

    // tangent-bundle filtration: F(1) = kH + ke_alpha, F(0) = g
    FiltrationObject tx = S.object({{1, S.plane_eh}, {2, SubspaceQ::zero(3)}});
    CHECK(check_standard(tx, 0).ok);

    // ke_{-alpha} is not b-stable
    FiltrationObject bad = S.object({{1, S.line_f}, {2, SubspaceQ::zero(3)}});
    CheckResult r = check_standard(bad, 0);
    CHECK_FALSE(r.ok);
    CHECK(r.failure.find("not stable") != std::string::npos);
}

TEST_CASE("check_transversal on the sl2 adjoint module") {
    Sl2Adjoint S;

    FiltrationObject fm = f_max(S.rep, S.fan);
    CHECK(check_standard(fm, 0).ok);
    CHECK(check_transversal(fm, 0).ok);

    // the full jump ladder e+h at 1, e at 2, zero at 3
    FiltrationObject ladder = S.object({{1, S.plane_eh}, {2, S.line_e}, {3, SubspaceQ::zero(3)}});
    CHECK(check_standard(ladder, 0).ok);
    CHECK(check_transversal(ladder, 0).ok);

    // a repeated intermediate step violates transversality:
    // F(2) = F(1) = ke_alpha needs e_{-alpha} e_alpha = -h inside F(1)
    FiltrationObject gap = S.object({{1, S.line_e}, {3, SubspaceQ::zero(3)}});
    CHECK(check_standard(gap, 0).ok);
    CheckResult r = check_transversal(gap, 0);
    CHECK_FALSE(r.ok);
    CHECK(r.failure.find("root") != std::string::npos);
}

TEST_CASE("validate classifies") {
    Sl2Adjoint S;
    CHECK(validate(f_null(S.rep, S.fan)).cls == ObjectClass::Full);

    FiltrationObject gap = S.object({{1, S.line_e}, {3, SubspaceQ::zero(3)}});
    CHECK(validate(gap).cls == ObjectClass::LOnly);

    FiltrationObject bad = S.object({{1, S.line_f}, {2, SubspaceQ::zero(3)}});
    CHECK(validate(bad).cls == ObjectClass::NotAnObject);
}

TEST_CASE("A2 tangent bundle object validates") {
    auto datum = a2ad();
    auto rep = std::make_shared<Rep>(Rep::adjoint_rep_A(datum));
    auto fan = Fan::sigma0(datum);
    // adjoint_rep_A basis: three positive e_alpha, three negative, h_1, h_2
    auto unit = [&](std::size_t k) {
        std::vector<Rational> v(8);
        v[k] = 1;
        return v;
    };
    // toral direction of the ray: H with alpha_j(H) = delta_ij, expanded
    // over the coroot elements h_k through the inverse Cartan matrix
    MatrixQ cartan = datum->cartan_matrix().to_rational();
    MatrixQ cartan_aug = cartan.hstack(MatrixQ::identity(2));
    cartan_aug.rref_in_place();
    auto toral_row = [&](std::size_t i) {
        std::vector<Rational> v(8);
        for (std::size_t k = 0; k < 2; ++k) v[6 + k] = cartan_aug.at(i, 2 + k);
        return v;
    };
    enum class HChoice { None, Toral, Coroot };
    auto build = [&](HChoice h) {
        std::vector<Filtration> filts;
        for (std::size_t i = 0; i < 2; ++i) {
            Coweight tau = fan->rays()[i];
            std::vector<std::vector<Rational>> f1_rows, f2_rows;
            for (std::size_t k = 0; k < rep->dim(); ++k) {
                const Weight& mu = rep->weights()[k];
                bool is_root = false;
                for (const Root& a : datum->all_roots())
                    if (a == mu) is_root = true;
                if (!is_root) continue;
                Rational p = datum->pairing(tau, mu);
                if (p >= 1) f1_rows.push_back(unit(k));
                if (p >= 2) f2_rows.push_back(unit(k));
            }
            if (h == HChoice::Toral) f1_rows.push_back(toral_row(i));
            if (h == HChoice::Coroot) f1_rows.push_back(unit(6 + i));
            SubspaceQ f1 = SubspaceQ::span_rows(8, f1_rows);
            SubspaceQ f2 = SubspaceQ::span_rows(8, f2_rows);
            std::vector<std::pair<Coord, SubspaceQ>> bps;
            bps.emplace_back(1, f1);
            if (!f2.is_zero()) bps.emplace_back(2, f2);
            bps.emplace_back(f2.is_zero() ? 2 : 3, SubspaceQ::zero(8));
            filts.push_back(Filtration::from_breakpoints(8, bps));
        }
        return FiltrationObject::create(rep, fan, filts);
    };
    CHECK(validate(build(HChoice::Toral)).cls == ObjectClass::Full);  // tangent bundle data
    CHECK(validate(build(HChoice::None)).cls == ObjectClass::Full);   // logarithmic variant
    // the coroot element is not Levi-stable at rank two: [e_2, h_1] = e_2
    // escapes the degree-one piece of the first ray
    CHECK(validate(build(HChoice::Coroot)).cls == ObjectClass::NotAnObject);
}

TEST_CASE("f_max breakpoints") {
    auto d = a1ad();
    auto fan = Fan::sigma0(d);

    auto v1 = std::make_shared<Rep>(Rep::sl2_irrep(d, 1));
    FiltrationObject fm = f_max(v1, fan);
    CHECK(fm.filtration(0).at(0).is_full());
    CHECK(fm.filtration(0).at(1) == v1->weight_space(wt(*d, {1})));
    CHECK(fm.filtration(0).at(2).is_zero());

    auto triv = std::make_shared<Rep>(Rep::trivial(d));
    FiltrationObject ft = f_max(triv, fan);
    CHECK(ft.filtration(0).at(0).is_full());
    CHECK(ft.filtration(0).at(1).is_zero());

    // reducible module via irreducible decomposition: V_1 tensor V_1
    auto vv = std::make_shared<Rep>(v1->tensor(*v1));
    FiltrationObject fvv = f_max(vv, fan);
    CHECK(fvv.filtration(0).at(0).is_full());
    CHECK(fvv.filtration(0).at(1).dim() == 2);
    CHECK(fvv.filtration(0).at(2).dim() == 1);
    CHECK(fvv.filtration(0).at(3).is_zero());
    CHECK(validate(fvv).cls == ObjectClass::Full);
}

TEST_CASE("f_max is transversal for small sl2 irreps") {
    auto d = a1ad();
    auto fan = Fan::sigma0(d);
    for (long n = 0; n <= 6; ++n) {
        auto rep = std::make_shared<Rep>(Rep::sl2_irrep(d, n));
        CHECK(validate(f_max(rep, fan)).cls == ObjectClass::Full);
    }
}

TEST_CASE("f_can breakpoints") {
    auto d = a1ad();
    auto fan = Fan::sigma0(d);
    auto adj = std::make_shared<Rep>(Rep::adjoint_rep_A(d));
    FiltrationObject fc = f_can(adj, fan);
    CHECK(fc.filtration(0).at(-1).is_full());
    CHECK(fc.filtration(0).at(0).dim() == 2);  // h and e_alpha
    CHECK(fc.filtration(0).at(1).is_zero());
    CHECK(validate(fc).cls == ObjectClass::Full);

    auto triv = std::make_shared<Rep>(Rep::trivial(d));
    FiltrationObject ft = f_can(triv, fan);
    CHECK(ft.filtration(0).at(0).is_full());
    CHECK(ft.filtration(0).at(1).is_zero());

    auto d2 = a2ad();
    auto adj2 = std::make_shared<Rep>(Rep::adjoint_rep_A(d2));
    FiltrationObject fc2 = f_can(adj2, Fan::sigma0(d2));
    // pairing histogram along omega_1: values -1 (x2), 0 (x4), 1 (x2)
    CHECK(fc2.filtration(0).at(-1).dim() == 8);
    CHECK(fc2.filtration(0).at(0).dim() == 6);
    CHECK(fc2.filtration(0).at(1).dim() == 0);
    CHECK(validate(fc2).cls == ObjectClass::Full);

    auto v1 = std::make_shared<Rep>(Rep::sl2_irrep(d, 1));
    CHECK_THROWS_AS(f_can(v1, fan), std::invalid_argument);
}

TEST_CASE("twist") {
    Sl2Adjoint S;
    FiltrationObject tx = S.object({{1, S.plane_eh}, {2, SubspaceQ::zero(3)}});

    FiltrationObject same = twist(tx, wt(*S.datum, {0}));
    CHECK(same == tx);

    // alpha has pairing 1: degrees shift by one
    FiltrationObject up = twist(tx, wt(*S.datum, {2}));
    CHECK(up.filtration(0).at(2) == S.plane_eh);
    CHECK(up.filtration(0).at(1).is_full());
    CHECK(S.datum->is_trivial_character(up.chi_offset()));

    // varpi has pairing 1/2: floor 0, character flips
    FiltrationObject flip = twist(tx, wt(*S.datum, {1}));
    CHECK(flip.filtration(0).steps() == tx.filtration(0).steps());
    CHECK_FALSE(S.datum->is_trivial_character(flip.chi_offset()));

    FiltrationObject rt = twist(twist(tx, wt(*S.datum, {2})), wt(*S.datum, {-2}));
    CHECK(rt == tx);

    // half-integral round trip: floor(1/2) + floor(-1/2) = -1 total shift
    FiltrationObject hrt = twist(twist(tx, wt(*S.datum, {1})), wt(*S.datum, {-1}));
    CHECK(hrt.filtration(0).steps()[0].first == tx.filtration(0).steps()[0].first - 1);
    CHECK(S.datum->is_trivial_character(hrt.chi_offset()));
}

TEST_CASE("direct sum and isotypical split") {
    auto d = a1ad();
    auto fan = Fan::sigma0(d);
    auto v1 = std::make_shared<Rep>(Rep::sl2_irrep(d, 1));
    auto v2 = std::make_shared<Rep>(Rep::sl2_irrep(d, 2));

    FiltrationObject a = f_max(v1, fan);
    FiltrationObject b = f_max(v2, fan);
    FiltrationObject s = direct_sum(a, b);
    CHECK(s.rep()->dim() == 5);
    for (Coord n = -2; n <= 4; ++n)
        CHECK(s.filtration(0).at(n).dim() ==
              a.filtration(0).at(n).dim() + b.filtration(0).at(n).dim());

    auto zero_rep = std::make_shared<Rep>(Rep::create(
        d, {}, std::vector<MatrixQ>(1, MatrixQ(0, 0)), std::vector<MatrixQ>(1, MatrixQ(0, 0)), false));
    FiltrationObject z = f_null(zero_rep, fan);
    FiltrationObject az = direct_sum(a, z);
    CHECK(az.rep()->dim() == a.rep()->dim());
    CHECK(az.filtration(0).steps() == a.filtration(0).steps());

    auto pieces = isotypical_split(s);
    REQUIRE(pieces.size() == 2);
    std::multiset<std::size_t> dims{pieces[0].rep()->dim(), pieces[1].rep()->dim()};
    CHECK(dims == std::multiset<std::size_t>{2, 3});
    for (const auto& p : pieces) {
        REQUIRE(p.uniform_character().has_value());
        if (p.rep()->dim() == 2) CHECK(p.filtration(0).steps() == a.filtration(0).steps());
        if (p.rep()->dim() == 3) CHECK(p.filtration(0).steps() == b.filtration(0).steps());
    }

    FiltrationObject resum = direct_sum(pieces[0], pieces[1]);
    for (Coord n = -2; n <= 4; ++n)
        CHECK(resum.filtration(0).at(n).dim() == s.filtration(0).at(n).dim());
}

TEST_CASE("monomial closure on valid objects") {
    // Composites of two negative-level root actions land in the doubly
    // shifted piece, so the per-root check covers monomials.
    auto d2 = a2ad();
    auto fan = Fan::sigma0(d2);
    auto adj = std::make_shared<Rep>(Rep::adjoint_rep_A(d2));
    std::vector<FiltrationObject> objs{f_can(adj, fan), f_max(adj, fan), f_null(adj, fan)};
    for (const auto& obj : objs) {
        REQUIRE(validate(obj).cls == ObjectClass::Full);
        for (std::size_t r = 0; r < fan->rays().size(); ++r) {
            ParabolicSplit split = d2->parabolic_split(fan->rays()[r]);
            for (const Root& a : split.level_negative)
                for (const Root& b : split.level_negative) {
                    Coord ca = d2->pairing(fan->rays()[r], a).get_num().get_si();
                    Coord cb = d2->pairing(fan->rays()[r], b).get_num().get_si();
                    MatrixQ m = adj->root_action(a) * adj->root_action(b);
                    const Filtration& f = obj.filtration(r);
                    for (const auto& [deg, s] : f.steps())
                        CHECK(contains(f.at(deg + ca + cb), apply(m, s)));
                }
        }
    }
}

TEST_CASE("zero dimensional module is a valid object") {
    auto d = a1ad();
    auto fan = Fan::sigma0(d);
    auto zero_rep = std::make_shared<Rep>(Rep::create(
        d, {}, std::vector<MatrixQ>(1, MatrixQ(0, 0)), std::vector<MatrixQ>(1, MatrixQ(0, 0)), false));
    FiltrationObject z = f_null(zero_rep, fan);
    CHECK(validate(z).cls == ObjectClass::Full);
}
