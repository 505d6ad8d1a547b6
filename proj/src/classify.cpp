#include "equibundle/classify.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace equibundle {

CharacterTable character_table(const FiltrationObject& obj, std::size_t ray) {
    CharacterTable table;
    const Rep& rep = *obj.rep();
    const Filtration& f = obj.filtration(ray);
    Coord lo = f.first_degree() - 1, hi = f.zero_degree();
    for (Coord n = lo; n <= hi; ++n) {
        SubspaceQ s = f.at(n);
        std::map<IntVec, std::size_t> row;
        for (const Weight& mu : rep.distinct_weights()) {
            std::size_t d = intersect(s, rep.weight_space(mu)).dim();
            if (d > 0) row[mu.coords] = d;
        }
        table[n] = std::move(row);
    }
    return table;
}

bool tables_match_up_to_shift(const CharacterTable& a, const CharacterTable& b) {
    if (a.size() != b.size()) return false;
    if (a.empty()) return true;
    Coord shift = b.begin()->first - a.begin()->first;
    for (auto ita = a.begin(), itb = b.begin(); ita != a.end(); ++ita, ++itb) {
        if (itb->first - ita->first != shift) return false;
        if (ita->second != itb->second) return false;
    }
    return true;
}

namespace {

std::string table_key(const CharacterTable& t) {
    std::ostringstream os;
    for (const auto& [deg, row] : t) {
        os << deg << ":";
        for (const auto& [w, d] : row) {
            for (long c : w) os << c << ",";
            os << "=" << d << ";";
        }
        os << "|";
    }
    return os.str();
}

}  // namespace

std::vector<ClassifiedObject> classify_pgl2(std::size_t rank, ExecMode mode) {
    if (rank < 1) throw std::invalid_argument("rank must be positive");
    auto datum = RootDatum::build_adjoint(CartanType{{{'A', 1}}, 0});
    auto rep = std::make_shared<Rep>(Rep::sl2_irrep(datum, static_cast<long>(rank) - 1));
    auto fan = Fan::sigma0(datum);
    const std::size_t dim = rep->dim();

    // All subspaces stable under the torus and the raising operator; the
    // torus forces coordinate spans since the weights are multiplicity free.
    std::vector<SubspaceQ> stable;
    for (std::size_t mask = 1; mask + 1 < (1u << dim); ++mask) {
        std::vector<std::vector<Rational>> rows;
        for (std::size_t k = 0; k < dim; ++k) {
            if (mask & (1u << k)) {
                std::vector<Rational> v(dim);
                v[k] = 1;
                rows.push_back(std::move(v));
            }
        }
        SubspaceQ s = SubspaceQ::span_rows(dim, rows);
        if (contains(s, apply(rep->raise(0), s))) stable.push_back(s);
    }
    std::sort(stable.begin(), stable.end(),
              [](const SubspaceQ& a, const SubspaceQ& b) { return a.dim() > b.dim(); });

    // Candidates: a strictly decreasing sequence of stable subspaces placed
    // at degrees with gaps in {1, 2}, first jump at degree one, then the
    // zero subspace one or two degrees later.
    struct Candidate {
        std::vector<std::size_t> chain;  // indices into `stable`, by decreasing dim
        std::vector<int> gaps;           // gap before each entry after the first, plus the zero tail
    };
    std::vector<Candidate> candidates;
    std::vector<std::size_t> chain;
    auto expand_gaps = [&](const std::vector<std::size_t>& members) {
        std::size_t levels = members.size();  // gaps needed: levels (incl. tail to zero)
        std::vector<int> gaps(levels, 1);
        while (true) {
            candidates.push_back({members, gaps});
            std::size_t k = 0;
            while (k < gaps.size() && gaps[k] == 2) gaps[k++] = 1;
            if (k == gaps.size()) break;
            gaps[k] = 2;
        }
        if (levels == 0) candidates.push_back({members, {}});
    };
    // enumerate subsets of `stable` that are strictly decreasing chains
    std::vector<std::size_t> subset;
    auto rec = [&](auto&& self, std::size_t from) -> void {
        expand_gaps(subset);
        for (std::size_t i = from; i < stable.size(); ++i) {
            if (!subset.empty()) {
                const SubspaceQ& prev = stable[subset.back()];
                if (stable[i].dim() >= prev.dim() || !contains(prev, stable[i])) continue;
            }
            subset.push_back(i);
            self(self, i + 1);
            subset.pop_back();
        }
    };
    rec(rec, 0);

    std::vector<std::optional<ClassifiedObject>> accepted(candidates.size());
    parallel_for(candidates.size(), mode, [&](std::size_t ci) {
        const Candidate& cand = candidates[ci];
        std::vector<std::pair<Coord, SubspaceQ>> bps;
        Coord deg = 1;
        for (std::size_t k = 0; k < cand.chain.size(); ++k) {
            if (k > 0) deg += cand.gaps[k - 1];
            bps.emplace_back(deg, stable[cand.chain[k]]);
        }
        Coord zero_deg = cand.chain.empty() ? 1 : deg + cand.gaps.back();
        bps.emplace_back(zero_deg, SubspaceQ::zero(dim));
        FiltrationObject obj = FiltrationObject::create(
            rep, fan, {Filtration::from_breakpoints(dim, std::move(bps))});
        if (validate(obj, ExecMode::Serial).cls == ObjectClass::Full)
            accepted[ci] = ClassifiedObject{obj, character_table(obj, 0)};
    });

    // normalize (first jump already at degree one), dedupe, deterministic order
    std::map<std::string, ClassifiedObject> unique;
    for (auto& c : accepted)
        if (c) unique.emplace(table_key(c->table), std::move(*c));
    std::vector<ClassifiedObject> out;
    for (auto& [k, v] : unique) out.push_back(std::move(v));
    return out;
}

bool objects_isomorphic(const FiltrationObject& a, const FiltrationObject& b) {
    if (a.rep()->dim() != b.rep()->dim()) return false;
    for (std::size_t r = 0; r < a.fan()->rays().size(); ++r)
        if (!(character_table(a, r) == character_table(b, r))) return false;
    // invertible morphism both ways
    std::vector<MatrixQ> fwd = hom_c(a, b);
    for (const MatrixQ& f : fwd) {
        if (f.rank() != a.rep()->dim()) continue;
        MatrixQ aug = f.hstack(MatrixQ::identity(f.rows()));
        aug.rref_in_place();
        MatrixQ inv = aug.submatrix(0, f.cols(), f.rows(), f.rows());
        if (is_c_morphism(b, a, inv)) return true;
    }
    return false;
}

}  // namespace equibundle
