#include "equibundle/adapted.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace equibundle {

namespace {

// Rows of `candidate` that extend span(base) to a larger space, greedily.
std::vector<std::vector<Rational>> extend_basis(const SubspaceQ& base, const SubspaceQ& candidate) {
    std::vector<std::vector<Rational>> picked;
    MatrixQ running = base.basis();
    std::size_t rank = base.dim();
    for (std::size_t i = 0; i < candidate.dim(); ++i) {
        std::vector<Rational> v = candidate.basis().row(i);
        MatrixQ trial = running.vstack(MatrixQ::row_vector(v));
        if (trial.rank() > rank) {
            picked.push_back(v);
            running = trial;
            ++rank;
        }
    }
    return picked;
}

// Normalized chain: full space at level 0 strictly down to zero at the end.
std::vector<SubspaceQ> normalize_chain(std::size_t ambient, const std::vector<SubspaceQ>& chain) {
    std::vector<SubspaceQ> levels;
    levels.push_back(SubspaceQ::full(ambient));
    std::vector<SubspaceQ> sorted = chain;
    std::sort(sorted.begin(), sorted.end(),
              [](const SubspaceQ& a, const SubspaceQ& b) { return a.dim() > b.dim(); });
    for (const auto& s : sorted) {
        if (s.ambient_dim() != ambient) throw std::invalid_argument("chain member has wrong ambient dimension");
        if (s == levels.back()) continue;
        if (!contains(levels.back(), s)) throw std::invalid_argument("input family is not a chain");
        levels.push_back(s);
    }
    if (!levels.back().is_zero()) levels.push_back(SubspaceQ::zero(ambient));
    return levels;
}

AdaptedResult verify_and_pack(std::size_t ambient, const std::vector<std::vector<Rational>>& vectors,
                              const std::vector<SubspaceQ>& family) {
    AdaptedResult res;
    if (vectors.size() != ambient) return res;
    MatrixQ basis_matrix = vectors.empty() ? MatrixQ(0, ambient) : MatrixQ::from_rows(vectors);
    if (basis_matrix.rank() != ambient) return res;
    AdaptedBasis ab;
    ab.vectors = basis_matrix;
    ab.assignment.resize(family.size());
    for (std::size_t k = 0; k < family.size(); ++k) {
        std::vector<std::vector<Rational>> span_rows;
        for (std::size_t i = 0; i < vectors.size(); ++i) {
            if (family[k].contains_vector(vectors[i])) {
                ab.assignment[k].push_back(i);
                span_rows.push_back(vectors[i]);
            }
        }
        if (!(SubspaceQ::span_rows(ambient, span_rows) == family[k])) return res;
    }
    res.status = AdaptedStatus::Found;
    res.basis = std::move(ab);
    return res;
}

}  // namespace

AdaptedResult common_adapted_basis_chains(std::size_t ambient,
                                          const std::vector<std::vector<SubspaceQ>>& chains) {
    std::vector<SubspaceQ> family;
    for (const auto& c : chains) family.insert(family.end(), c.begin(), c.end());

    std::vector<std::vector<SubspaceQ>> levels;
    for (const auto& c : chains) levels.push_back(normalize_chain(ambient, c));
    if (levels.empty()) levels.push_back(normalize_chain(ambient, {}));

    const std::size_t k = levels.size();
    std::vector<std::size_t> extent(k), stride(k);
    std::size_t cells = 1;
    for (std::size_t i = 0; i < k; ++i) extent[i] = levels[i].size();
    for (std::size_t i = k; i-- > 0;) {
        stride[i] = cells;
        cells *= extent[i];
    }

    // V(n) by dynamic programming in row-major order: each cell intersects a
    // predecessor cell with one chain level, so every cell is computed once.
    std::vector<SubspaceQ> cell(cells);
    std::vector<std::size_t> idx(k, 0);
    for (std::size_t flat = 0; flat < cells; ++flat) {
        std::size_t j = k;
        for (std::size_t i = 0; i < k; ++i)
            if (idx[i] > 0) { j = i; break; }
        if (j == k) {
            cell[flat] = SubspaceQ::full(ambient);
        } else {
            cell[flat] = intersect(cell[flat - stride[j]], levels[j][idx[j]]);
        }
        for (std::size_t i = k; i-- > 0;) {
            if (++idx[i] < extent[i]) break;
            idx[i] = 0;
        }
    }

    // Multigraded pieces gr(n) = V(n) / sum_j V(n + e_j); lift a basis of
    // each piece and count dimensions.
    std::vector<std::vector<Rational>> picked;
    std::size_t total = 0;
    idx.assign(k, 0);
    for (std::size_t flat = 0; flat < cells; ++flat) {
        SubspaceQ boundary = SubspaceQ::zero(ambient);
        for (std::size_t j = 0; j < k; ++j)
            if (idx[j] + 1 < extent[j]) boundary = sum(boundary, cell[flat + stride[j]]);
        std::size_t gr = cell[flat].dim() - intersect(cell[flat], boundary).dim();
        total += gr;
        if (gr > 0) {
            SubspaceQ base = intersect(boundary, cell[flat]);
            for (auto& v : extend_basis(base, cell[flat])) picked.push_back(std::move(v));
        }
        for (std::size_t i = k; i-- > 0;) {
            if (++idx[i] < extent[i]) break;
            idx[i] = 0;
        }
    }

    if (total != ambient) return AdaptedResult{};
    AdaptedResult res = verify_and_pack(ambient, picked, family);
    if (!res.found()) {
        // The dimension count certifies distributivity; a failed lift is not
        // a counterexample, so settle it with the exhaustive search.
        return common_adapted_basis_bruteforce(family);
    }
    return res;
}

std::vector<SubspaceQ> lattice_closure(const std::vector<SubspaceQ>& family, std::size_t cap,
                                       bool& capped) {
    capped = false;
    std::set<SubspaceQ> seen(family.begin(), family.end());
    std::vector<SubspaceQ> work(seen.begin(), seen.end());
    // Sublattices of subspace lattices need not be finite; besides the
    // element cap, bound the pair scans so degenerate inputs terminate.
    std::size_t pair_budget = 2000000;
    for (std::size_t i = 0; i < work.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            if (pair_budget-- == 0) {
                capped = true;
                return work;
            }
            for (const SubspaceQ& s : {sum(work[i], work[j]), intersect(work[i], work[j])}) {
                if (seen.insert(s).second) work.push_back(s);
            }
            if (work.size() > cap) {
                capped = true;
                return work;
            }
        }
    }
    return work;
}

bool distributive_law_holds(const std::vector<SubspaceQ>& closed) {
    for (const auto& x : closed)
        for (const auto& y : closed)
            for (const auto& z : closed)
                if (!(intersect(x, sum(y, z)) == sum(intersect(x, y), intersect(x, z)))) return false;
    return true;
}

AdaptedResult common_adapted_basis_bruteforce(const std::vector<SubspaceQ>& family,
                                              std::size_t closure_cap) {
    AdaptedResult res;
    if (family.empty()) throw std::invalid_argument("empty family");
    const std::size_t ambient = family.front().ambient_dim();
    for (const auto& s : family)
        if (s.ambient_dim() != ambient) throw std::invalid_argument("ambient dimension mismatch");

    bool capped = false;
    std::vector<SubspaceQ> closed = lattice_closure(family, closure_cap, capped);
    if (capped) {
        res.status = AdaptedStatus::Indeterminate;
        return res;
    }
    if (!distributive_law_holds(closed)) return res;  // Absent

    // Greedy construction: lift each element over the sum of its proper
    // subelements, processing by increasing dimension; the ambient space is
    // appended so the lifts complete to a full basis.
    std::vector<SubspaceQ> order = closed;
    SubspaceQ full = SubspaceQ::full(ambient);
    if (std::find(order.begin(), order.end(), full) == order.end()) order.push_back(full);
    std::sort(order.begin(), order.end(),
              [](const SubspaceQ& a, const SubspaceQ& b) { return a.dim() < b.dim(); });

    std::vector<std::vector<Rational>> picked;
    for (const auto& u : order) {
        SubspaceQ below = SubspaceQ::zero(ambient);
        for (const auto& w : order) {
            if (w.dim() < u.dim() && contains(u, w)) below = sum(below, w);
        }
        if (below == u) continue;
        for (auto& v : extend_basis(below, u)) picked.push_back(std::move(v));
    }

    res = verify_and_pack(ambient, picked, family);
    if (!res.found())
        throw std::logic_error("distributive family admitted no adapted basis lift");
    return res;
}

AdaptedResult common_adapted_basis(const std::vector<SubspaceQ>& family) {
    if (family.empty()) throw std::invalid_argument("empty family");
    const std::size_t ambient = family.front().ambient_dim();
    for (const auto& s : family)
        if (s.ambient_dim() != ambient) throw std::invalid_argument("ambient dimension mismatch");

    // Greedy chain partition: each subspace joins the first chain whose
    // smallest member contains it.
    std::vector<std::size_t> order(family.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return family[a].dim() > family[b].dim(); });
    std::vector<std::vector<std::size_t>> chain_members;
    for (std::size_t i : order) {
        bool placed = false;
        for (auto& chain : chain_members) {
            if (contains(family[chain.back()], family[i])) {
                chain.push_back(i);
                placed = true;
                break;
            }
        }
        if (!placed) chain_members.push_back({i});
    }

    std::size_t cells = 1;
    bool too_big = false;
    for (const auto& chain : chain_members) {
        cells *= chain.size() + 2;
        if (cells > 100000) {
            too_big = true;
            break;
        }
    }
    if (too_big) return common_adapted_basis_bruteforce(family);

    std::vector<std::vector<SubspaceQ>> chains;
    for (const auto& chain : chain_members) {
        std::vector<SubspaceQ> c;
        for (std::size_t i : chain) c.push_back(family[i]);
        chains.push_back(std::move(c));
    }
    AdaptedResult res = common_adapted_basis_chains(ambient, chains);
    if (!res.found()) return res;

    // Reindex the assignment from chain-major order back to input order.
    AdaptedBasis remapped;
    remapped.vectors = res.basis->vectors;
    remapped.assignment.resize(family.size());
    std::size_t flat = 0;
    for (const auto& chain : chain_members)
        for (std::size_t i : chain) remapped.assignment[i] = res.basis->assignment[flat++];
    res.basis = std::move(remapped);
    return res;
}

}  // namespace equibundle
