#include "equibundle/morphisms.hpp"

#include "equibundle/adapted.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace equibundle {

namespace {

Coord floor_rational(const Rational& q) {
    Integer f;
    mpz_fdiv_q(f.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return f.get_si();
}

}  // namespace

std::vector<MatrixQ> hom_equivariant(const Rep& a, const Rep& b) {
    if (a.datum() != b.datum()) throw std::invalid_argument("intertwiners need a common datum");
    const std::size_t da = a.dim(), db = b.dim();

    // Variables: entries X[p][q] on weight-matching positions only.
    std::vector<std::pair<std::size_t, std::size_t>> vars;
    std::vector<std::vector<long>> var_at(db, std::vector<long>(da, -1));
    for (std::size_t p = 0; p < db; ++p)
        for (std::size_t q = 0; q < da; ++q)
            if (b.weights()[p] == a.weights()[q]) {
                var_at[p][q] = static_cast<long>(vars.size());
                vars.emplace_back(p, q);
            }
    if (vars.empty()) return {};

    // Equations: X G_a - G_b X = 0 for every generator.
    std::vector<std::vector<Rational>> rows;
    const std::size_t l = a.datum()->ss_rank();
    for (std::size_t i = 0; i < l; ++i) {
        for (int which = 0; which < 2; ++which) {
            const MatrixQ& ga = which ? a.lower(i) : a.raise(i);
            const MatrixQ& gb = which ? b.lower(i) : b.raise(i);
            for (std::size_t p = 0; p < db; ++p)
                for (std::size_t q = 0; q < da; ++q) {
                    std::vector<Rational> row(vars.size(), Rational(0));
                    bool nonzero = false;
                    for (std::size_t t = 0; t < da; ++t) {
                        if (var_at[p][t] >= 0 && ga.at(t, q) != 0) {
                            row[var_at[p][t]] += ga.at(t, q);
                            nonzero = true;
                        }
                    }
                    for (std::size_t t = 0; t < db; ++t) {
                        if (gb.at(p, t) != 0 && var_at[t][q] >= 0) {
                            row[var_at[t][q]] -= gb.at(p, t);
                            nonzero = true;
                        }
                    }
                    if (nonzero) rows.push_back(std::move(row));
                }
        }
    }

    MatrixQ eq = rows.empty() ? MatrixQ(0, vars.size()) : MatrixQ::from_rows(rows);
    MatrixQ ker = eq.rows() == 0 ? MatrixQ::identity(vars.size()) : eq.kernel();

    std::vector<MatrixQ> basis;
    for (std::size_t r = 0; r < ker.rows(); ++r) {
        MatrixQ m(db, da);
        for (std::size_t v = 0; v < vars.size(); ++v) m.at(vars[v].first, vars[v].second) = ker.at(r, v);
        basis.push_back(std::move(m));
    }
    return basis;
}

std::vector<MatrixQ> hom_c(const FiltrationObject& a, const FiltrationObject& b) {
    if (!(*a.fan() == *b.fan()) || a.rep()->datum() != b.rep()->datum())
        throw std::invalid_argument("morphisms need matching fan and datum");
    // Morphisms live inside one isotypical component: unequal twist offsets
    // shift the character of every vector, so the space is zero.
    if (!(a.chi_offset() == b.chi_offset())) return {};

    std::vector<MatrixQ> eq = hom_equivariant(*a.rep(), *b.rep());
    if (eq.empty()) return {};

    // Filtration constraints: ann(F_b(n)) . X . basis(F_a(n))^T = 0, linear
    // in the coordinates over the equivariant basis.
    std::vector<std::vector<Rational>> rows;
    for (std::size_t r = 0; r < a.fan()->rays().size(); ++r) {
        std::set<Coord> degrees;
        for (const auto& [d, s] : a.filtration(r).steps()) degrees.insert(d);
        for (const auto& [d, s] : b.filtration(r).steps()) degrees.insert(d);
        for (Coord d : degrees) {
            SubspaceQ src = a.filtration(r).at(d);
            if (src.is_zero()) continue;
            SubspaceQ tgt = b.filtration(r).at(d);
            MatrixQ ann = annihilator(tgt);
            if (ann.rows() == 0) continue;
            for (std::size_t i = 0; i < ann.rows(); ++i)
                for (std::size_t j = 0; j < src.dim(); ++j) {
                    std::vector<Rational> row(eq.size(), Rational(0));
                    bool nonzero = false;
                    for (std::size_t k = 0; k < eq.size(); ++k) {
                        // ann_i . (X_k src_j)
                        Rational v = 0;
                        for (std::size_t p = 0; p < eq[k].rows(); ++p) {
                            if (ann.at(i, p) == 0) continue;
                            for (std::size_t q = 0; q < eq[k].cols(); ++q)
                                if (eq[k].at(p, q) != 0 && src.basis().at(j, q) != 0)
                                    v += ann.at(i, p) * eq[k].at(p, q) * src.basis().at(j, q);
                        }
                        row[k] = v;
                        if (v != 0) nonzero = true;
                    }
                    if (nonzero) rows.push_back(std::move(row));
                }
        }
    }
    if (rows.empty()) return eq;
    MatrixQ constraints = MatrixQ::from_rows(rows);
    MatrixQ ker = constraints.kernel();
    std::vector<MatrixQ> basis;
    for (std::size_t r = 0; r < ker.rows(); ++r) {
        MatrixQ m(b.rep()->dim(), a.rep()->dim());
        for (std::size_t k = 0; k < eq.size(); ++k)
            if (ker.at(r, k) != 0) m = m + eq[k].scaled(ker.at(r, k));
        basis.push_back(std::move(m));
    }
    return basis;
}

bool is_c_morphism(const FiltrationObject& a, const FiltrationObject& b, const MatrixQ& f) {
    if (!(a.chi_offset() == b.chi_offset())) return false;
    // intertwiner check
    const Rep& ra = *a.rep();
    const Rep& rb = *b.rep();
    for (std::size_t i = 0; i < ra.datum()->ss_rank(); ++i) {
        if (!((f * ra.raise(i)) == (rb.raise(i) * f))) return false;
        if (!((f * ra.lower(i)) == (rb.lower(i) * f))) return false;
    }
    for (std::size_t p = 0; p < rb.dim(); ++p)
        for (std::size_t q = 0; q < ra.dim(); ++q)
            if (f.at(p, q) != 0 && !(rb.weights()[p] == ra.weights()[q])) return false;
    // filtration containment
    for (std::size_t r = 0; r < a.fan()->rays().size(); ++r) {
        for (const auto& [d, s] : a.filtration(r).steps()) {
            if (!contains(b.filtration(r).at(d), apply(f, s))) return false;
        }
    }
    return true;
}

StrictCheck is_strict_morphism(const FiltrationObject& a, const FiltrationObject& b,
                               const MatrixQ& f) {
    if (!is_c_morphism(a, b, f)) throw std::invalid_argument("not a morphism of the filtered category");
    SubspaceQ image = apply(f, SubspaceQ::full(a.rep()->dim()));
    // (L): f(F_a(n)) = f(V) cap F_b(n) at every jump of either side
    for (std::size_t r = 0; r < a.fan()->rays().size(); ++r) {
        std::set<Coord> degrees;
        for (const auto& [d, s] : a.filtration(r).steps()) degrees.insert(d);
        for (const auto& [d, s] : b.filtration(r).steps()) degrees.insert(d);
        for (Coord d : degrees) {
            SubspaceQ lhs = apply(f, a.filtration(r).at(d));
            SubspaceQ rhs = intersect(image, b.filtration(r).at(d));
            if (!(lhs == rhs)) {
                std::ostringstream os;
                os << "condition (L) fails at ray " << r << " degree " << d;
                return {false, os.str()};
            }
        }
    }
    // (R): {f(V)} joins each cone's breakpoint family distributively
    for (std::size_t c = 0; c < a.fan()->max_cones().size(); ++c) {
        std::vector<std::vector<SubspaceQ>> chains;
        chains.push_back({image});
        for (std::size_t ray : a.fan()->max_cones()[c]) {
            std::vector<SubspaceQ> chain;
            for (const auto& [d, s] : b.filtration(ray).steps()) chain.push_back(s);
            chains.push_back(std::move(chain));
        }
        if (!common_adapted_basis_chains(b.rep()->dim(), chains).found()) {
            std::ostringstream os;
            os << "condition (R) fails at cone " << c;
            return {false, os.str()};
        }
    }
    return {true, ""};
}

KostantReport kostant_check(const FiltrationObject& obj) {
    const Rep& rep = *obj.rep();
    auto chi = obj.uniform_character();
    if (!chi || !rep.datum()->is_trivial_character(*chi))
        throw std::invalid_argument("Kostant conditions need a trivial central character");
    KostantReport report;
    report.passed = true;
    for (std::size_t r = 0; r < obj.fan()->rays().size(); ++r) {
        const Coweight& tau = obj.fan()->rays()[r];
        for (const Weight& mu : rep.distinct_weights()) {
            Rational p = rep.datum()->pairing(tau, mu);
            Coord half = floor_rational(p / 2);
            SubspaceQ vmu = rep.weight_space(mu);
            bool conv = intersect(vmu, obj.filtration(r).at(half + 1)).is_zero();
            bool maxi = contains(obj.filtration(r).at(half), vmu);
            report.verdicts.push_back({r, mu.coords, conv, maxi});
            if (!conv || !maxi) report.passed = false;
        }
    }
    return report;
}

std::optional<MatrixQ> kostant_embedding(const FiltrationObject& obj,
                                         const FiltrationObject& canonical) {
    if (!(*obj.rep() == *canonical.rep()))
        throw std::invalid_argument("embedding target must share the module");
    if (!kostant_check(obj).passed) throw std::invalid_argument("source fails the Kostant conditions");

    auto qualifies = [&](const MatrixQ& f) {
        if (!is_c_morphism(obj, canonical, f)) return false;
        if (f.rank() != obj.rep()->dim()) return false;  // injectivity
        return is_strict_morphism(obj, canonical, f).ok;
    };

    MatrixQ id = MatrixQ::identity(obj.rep()->dim());
    if (qualifies(id)) return id;

    std::vector<MatrixQ> basis = hom_c(obj, canonical);
    for (const MatrixQ& f : basis)
        if (qualifies(f)) return f;
    // small integer combinations of the morphism basis
    if (basis.size() >= 2 && basis.size() <= 4) {
        std::vector<long> coeff(basis.size(), -2);
        while (true) {
            MatrixQ f(canonical.rep()->dim(), obj.rep()->dim());
            for (std::size_t k = 0; k < basis.size(); ++k)
                if (coeff[k] != 0) f = f + basis[k].scaled(Rational(coeff[k]));
            if (qualifies(f)) return f;
            std::size_t k = 0;
            while (k < coeff.size() && ++coeff[k] > 2) coeff[k++] = -2;
            if (k == coeff.size()) break;
        }
    }
    return std::nullopt;
}

SplitOutcome split_check(const FiltrationObject& obj) {
    const Rep& rep = *obj.rep();
    const RootDatum& datum = *rep.datum();
    auto sigma0 = Fan::sigma0(rep.datum());
    if (!(*obj.fan() == *sigma0))
        throw std::invalid_argument("splitting analysis runs on the dominant-chamber fan");

    SplitOutcome out;
    // Trivial fiber action: zero generator matrices, equivalently all
    // semisimple weight coordinates vanish.
    for (std::size_t i = 0; i < datum.ss_rank(); ++i) {
        if (!rep.raise(i).is_zero() || !rep.lower(i).is_zero()) {
            std::ostringstream os;
            os << "generator for simple root " << i + 1 << " acts nontrivially";
            out.obstruction = os.str();
            return out;
        }
    }
    for (std::size_t k = 0; k < rep.dim(); ++k)
        for (std::size_t i = 0; i < datum.ss_rank(); ++i)
            if (rep.weights()[k].coords[i] != 0) {
                out.obstruction = "fiber carries a nonzero semisimple weight";
                return out;
            }

    // Per weight block (this refines the isotypical pieces), one adapted
    // basis over the maximal cone splits the object into stable lines.
    std::map<IntVec, std::vector<std::size_t>> groups;
    for (std::size_t k = 0; k < rep.dim(); ++k) groups[rep.weights()[k].coords].push_back(k);

    std::vector<std::vector<Rational>> all_rows(rep.dim());
    std::vector<Weight> row_weight;
    SplitDecomposition dec;
    std::size_t placed = 0;
    for (const auto& [weight_coords, indices] : groups) {
        // block span of the piece
        std::vector<std::vector<Rational>> rows;
        for (std::size_t k : indices) {
            std::vector<Rational> v(rep.dim());
            v[k] = 1;
            rows.push_back(std::move(v));
        }
        SubspaceQ block = SubspaceQ::span_rows(rep.dim(), rows);

        std::vector<std::vector<SubspaceQ>> chains;
        for (std::size_t r = 0; r < obj.fan()->rays().size(); ++r) {
            std::vector<SubspaceQ> chain;
            for (const auto& [d, s] : obj.filtration(r).steps()) chain.push_back(intersect(s, block));
            chains.push_back(std::move(chain));
        }
        chains.push_back({block});
        AdaptedResult res = common_adapted_basis_chains(rep.dim(), chains);
        if (!res.found()) {
            out.obstruction = "breakpoints admit no adapted basis over the maximal cone";
            return out;
        }
        // keep only the basis vectors inside this weight block
        for (std::size_t i = 0; i < res.basis->vectors.rows(); ++i) {
            std::vector<Rational> v = res.basis->vectors.row(i);
            if (!block.contains_vector(v)) continue;
            all_rows[placed] = v;
            row_weight.push_back(Weight{weight_coords});
            ++placed;
        }
    }
    if (placed != rep.dim()) {
        out.obstruction = "adapted bases of the pieces do not assemble";
        return out;
    }

    dec.basis = MatrixQ::from_rows(all_rows);
    for (std::size_t i = 0; i < rep.dim(); ++i) {
        std::vector<Rational> v = all_rows[i];
        auto line_rep = std::make_shared<Rep>(Rep::trivial_with_weight(rep.datum(), row_weight[i]));
        std::vector<Filtration> filts;
        for (std::size_t r = 0; r < obj.fan()->rays().size(); ++r) {
            // the line sits inside F(n) or meets it trivially
            std::vector<std::pair<Coord, SubspaceQ>> bps;
            bool dead = false;
            for (const auto& [d, s] : obj.filtration(r).steps()) {
                if (!dead && !s.contains_vector(v)) {
                    bps.emplace_back(d, SubspaceQ::zero(1));
                    dead = true;
                }
            }
            if (!dead) throw std::logic_error("line survives past the zero tail");
            filts.push_back(Filtration::from_breakpoints(1, bps));
        }
        dec.lines.push_back(
            FiltrationObject::create(line_rep, obj.fan(), std::move(filts)).with_offset(obj.chi_offset()));
    }
    out.decomposition = std::move(dec);
    return out;
}

long minimal_rep_dim(char family, int rank) {
    CartanType t{{{family, rank}}, 0};
    t.validate();
    switch (family) {
        case 'A':
            return rank + 1;
        case 'B':
            return 2 * rank + 1;
        case 'C':
        case 'D':
            return 2 * rank;
        case 'E':
            return rank == 6 ? 27 : rank == 7 ? 56 : 248;
        case 'F':
            return 26;
        case 'G':
            return 7;
    }
    throw std::invalid_argument("not a simple type");
}

}  // namespace equibundle
