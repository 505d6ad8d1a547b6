#include <doctest.h>

#include "equibundle/adapted.hpp"
#include "equibundle/snf.hpp"
#include "equibundle/subspace.hpp"

#include <random>

using namespace equibundle;

namespace {

MatrixQ mat(const std::vector<std::vector<long>>& rows) {
    std::vector<std::vector<Rational>> q;
    for (const auto& r : rows) {
        std::vector<Rational> row;
        for (long v : r) row.emplace_back(v);
        q.push_back(row);
    }
    return MatrixQ::from_rows(q);
}

SubspaceQ coord_span(std::size_t ambient, const std::vector<std::size_t>& axes) {
    std::vector<std::vector<Rational>> rows;
    for (std::size_t a : axes) {
        std::vector<Rational> v(ambient);
        v[a] = 1;
        rows.push_back(v);
    }
    return SubspaceQ::span_rows(ambient, rows);
}

SubspaceQ random_subspace(std::mt19937& rng, std::size_t ambient, std::size_t dim) {
    std::uniform_int_distribution<int> coeff(-3, 3);
    while (true) {
        std::vector<std::vector<Rational>> rows(dim, std::vector<Rational>(ambient));
        for (auto& r : rows)
            for (auto& c : r) c = coeff(rng);
        SubspaceQ s = SubspaceQ::span_rows(ambient, rows);
        if (s.dim() == dim) return s;
    }
}

}  // namespace

TEST_CASE("rref basics") {
    CHECK(mat({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}).rref() == MatrixQ::identity(3));
    CHECK(mat({{2, 4}, {1, 2}}).rref() == mat({{1, 2}, {0, 0}}));

    std::mt19937 rng(7);
    std::uniform_int_distribution<int> coeff(-5, 5);
    int invertible_seen = 0;
    for (int trial = 0; trial < 40; ++trial) {
        MatrixQ m(4, 4);
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j) m.at(i, j) = coeff(rng);
        if (m.det() != 0) {
            ++invertible_seen;
            CHECK(m.rref() == MatrixQ::identity(4));
        } else {
            CHECK(m.rank() < 4);
        }
    }
    CHECK(invertible_seen > 10);
}

TEST_CASE("kernel and solve") {
    MatrixQ m = mat({{1, 2, 3}, {2, 4, 6}});
    MatrixQ k = m.kernel();
    CHECK(k.rows() == 2);
    CHECK((m * k.transpose()).is_zero());

    std::vector<Rational> x;
    CHECK(mat({{2, 0}, {0, 4}}).solve({Rational(6), Rational(8)}, x));
    CHECK(x[0] == 3);
    CHECK(x[1] == 2);
    CHECK_FALSE(mat({{1, 1}, {1, 1}}).solve({Rational(0), Rational(1)}, x));
}

TEST_CASE("subspace operations on coordinate spans") {
    SubspaceQ a = coord_span(3, {0, 1});
    SubspaceQ b = coord_span(3, {1, 2});
    CHECK(intersect(a, b) == coord_span(3, {1}));
    CHECK(intersect(a, a) == a);
    CHECK(sum(coord_span(3, {0}), coord_span(3, {1})) == coord_span(3, {0, 1}));
    CHECK(sum(a, SubspaceQ::zero(3)) == a);
    CHECK(contains(SubspaceQ::full(3), coord_span(3, {0})));
    CHECK_FALSE(contains(coord_span(3, {0}), coord_span(3, {1})));
    CHECK_THROWS_AS(intersect(coord_span(3, {0}), coord_span(2, {0})), std::invalid_argument);
}

TEST_CASE("modular law and containment on random pairs") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<std::size_t> dims(0, 6);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t n = 1 + trial % 6;
        SubspaceQ u = random_subspace(rng, n, dims(rng) % (n + 1));
        SubspaceQ w = random_subspace(rng, n, dims(rng) % (n + 1));
        CHECK(sum(u, w).dim() + intersect(u, w).dim() == u.dim() + w.dim());
        CHECK(contains(sum(u, w), u));
        CHECK(contains(u, intersect(u, w)));
    }
}

TEST_CASE("canonical form is order independent") {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 20; ++trial) {
        SubspaceQ u = random_subspace(rng, 4, 2);
        SubspaceQ w = random_subspace(rng, 4, 2);
        SubspaceQ x = random_subspace(rng, 4, 1);
        CHECK(sum(sum(u, w), x) == sum(x, sum(w, u)));
        CHECK(intersect(intersect(u, w), x) == intersect(x, intersect(w, u)));
    }
}

TEST_CASE("adapted basis: single chain and complementary lines") {
    SubspaceQ e1 = coord_span(2, {0});
    AdaptedResult r = common_adapted_basis({e1});
    REQUIRE(r.found());
    CHECK(r.basis->vectors.rows() == 2);
    CHECK(r.basis->assignment[0].size() == 1);

    SubspaceQ diag = SubspaceQ::span_rows(2, {{Rational(1), Rational(1)}});
    r = common_adapted_basis({e1, diag});
    REQUIRE(r.found());
    CHECK(r.basis->assignment[0].size() == 1);
    CHECK(r.basis->assignment[1].size() == 1);
    CHECK(r.basis->assignment[0] != r.basis->assignment[1]);
}

TEST_CASE("adapted basis: three distinct lines are absent") {
    SubspaceQ a = coord_span(2, {0});
    SubspaceQ b = coord_span(2, {1});
    SubspaceQ c = SubspaceQ::span_rows(2, {{Rational(1), Rational(1)}});
    CHECK(common_adapted_basis({a, b, c}).status == AdaptedStatus::Absent);
    CHECK(common_adapted_basis_bruteforce({a, b, c}).status == AdaptedStatus::Absent);
}

TEST_CASE("adapted basis assignment spans exactly") {
    std::mt19937 rng(37);
    for (int trial = 0; trial < 30; ++trial) {
        std::size_t n = 2 + trial % 3;
        // Build chains from prefixes of a random full flag: always adapted.
        SubspaceQ big = random_subspace(rng, n, n);
        std::vector<SubspaceQ> family;
        for (std::size_t d = 1; d < n; ++d) {
            family.push_back(SubspaceQ::span(n, big.basis().submatrix(0, 0, d, n)));
        }
        AdaptedResult r = common_adapted_basis(family);
        REQUIRE(r.found());
        for (std::size_t k = 0; k < family.size(); ++k) {
            std::vector<std::vector<Rational>> rows;
            for (std::size_t idx : r.basis->assignment[k]) rows.push_back(r.basis->vectors.row(idx));
            CHECK(SubspaceQ::span_rows(n, rows) == family[k]);
        }
    }
}

TEST_CASE("multigraded algorithm agrees with brute force on random chain families") {
    std::mt19937 rng(101);
    std::uniform_int_distribution<std::size_t> pick_dim(1, 4);
    std::uniform_int_distribution<std::size_t> pick_chains(1, 4);
    int compared = 0, indeterminate = 0;
    for (int trial = 0; trial < 150; ++trial) {
        std::size_t n = pick_dim(rng);
        std::size_t nchains = pick_chains(rng);
        std::vector<std::vector<SubspaceQ>> chains;
        std::vector<SubspaceQ> family;
        for (std::size_t c = 0; c < nchains; ++c) {
            // random chain: nested spans obtained by extending a random seed
            std::vector<SubspaceQ> chain;
            SubspaceQ cur = random_subspace(rng, n, rng() % (n + 1));
            if (!cur.is_zero() && !cur.is_full()) chain.push_back(cur);
            SubspaceQ ext = sum(cur, random_subspace(rng, n, 1));
            if (ext.dim() > cur.dim() && !ext.is_full()) chain.push_back(ext);
            if (chain.empty()) chain.push_back(SubspaceQ::zero(n));
            chains.push_back(chain);
            for (const auto& s : chain) family.push_back(s);
        }
        AdaptedResult fast = common_adapted_basis_chains(n, chains);
        AdaptedResult slow = common_adapted_basis_bruteforce(family, 600);
        if (slow.status == AdaptedStatus::Indeterminate) {
            ++indeterminate;  // generated sublattices can be infinite
            continue;
        }
        CHECK(fast.found() == slow.found());
        ++compared;
    }
    CHECK(compared >= 100);
    CHECK(indeterminate < 50);
}

TEST_CASE("smith normal form") {
    MatrixZ a = MatrixZ::from_rows({{Integer(2), Integer(4), Integer(4)},
                                    {Integer(-6), Integer(6), Integer(12)},
                                    {Integer(10), Integer(4), Integer(16)}});
    SmithNormalForm s = smith_normal_form(a);
    CHECK(s.U * a * s.V == s.D);
    std::vector<Integer> f = s.invariant_factors();
    REQUIRE(f.size() == 3);
    // d1 = gcd of entries, d1 d2 = gcd of 2x2 minors, d1 d2 d3 = |det| = 624
    CHECK(f[0] == 2);
    CHECK(f[1] == 2);
    CHECK(f[2] == 156);
    for (std::size_t i = 0; i + 1 < f.size(); ++i) CHECK(f[i + 1] % f[i] == 0);

    // quotient Z^2 / <(2,0),(0,3)> = Z/2 x Z/3
    AbelianQuotient q = abelian_quotient(2, MatrixZ::from_rows({{Integer(2), Integer(0)}, {Integer(0), Integer(3)}}));
    CHECK(q.torsion_order() == 6);
    CHECK(q.free_rank == 0);
    CHECK(q.is_trivial_class({Integer(2), Integer(3)}));
    CHECK_FALSE(q.is_trivial_class({Integer(1), Integer(0)}));
}
