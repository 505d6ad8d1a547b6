#include "equibundle/rep.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace equibundle {

namespace {

Weight add_weights(const Weight& a, const Weight& b) {
    Weight c = a;
    for (std::size_t i = 0; i < c.coords.size(); ++i) c.coords[i] += b.coords[i];
    return c;
}

Weight sub_weights(const Weight& a, const Weight& b) {
    Weight c = a;
    for (std::size_t i = 0; i < c.coords.size(); ++i) c.coords[i] -= b.coords[i];
    return c;
}

}  // namespace

Rep Rep::create(std::shared_ptr<const RootDatum> datum, std::vector<Weight> weights,
                std::vector<MatrixQ> raise, std::vector<MatrixQ> lower, bool validate) {
    Rep r;
    r.datum_ = std::move(datum);
    r.dim_ = weights.size();
    r.weights_ = std::move(weights);
    r.raise_ = std::move(raise);
    r.lower_ = std::move(lower);
    if (validate) r.validate();
    return r;
}

void Rep::validate() const {
    const std::size_t l = datum_->ss_rank();
    if (raise_.size() != l || lower_.size() != l)
        throw std::invalid_argument("need one raising and one lowering matrix per simple root");
    for (const Weight& w : weights_)
        if (w.coords.size() != datum_->total_rank()) throw std::invalid_argument("weight size mismatch");
    for (std::size_t i = 0; i < l; ++i) {
        if (raise_[i].rows() != dim_ || raise_[i].cols() != dim_ || lower_[i].rows() != dim_ ||
            lower_[i].cols() != dim_)
            throw std::invalid_argument("generator matrix has wrong shape");
        Root alpha = datum_->simple_root(i);
        for (std::size_t p = 0; p < dim_; ++p)
            for (std::size_t q = 0; q < dim_; ++q) {
                if (raise_[i].at(p, q) != 0 && !(weights_[p] == add_weights(weights_[q], alpha)))
                    throw std::invalid_argument("raising operator violates weight grading");
                if (lower_[i].at(p, q) != 0 && !(weights_[p] == sub_weights(weights_[q], alpha)))
                    throw std::invalid_argument("lowering operator violates weight grading");
            }
    }
    for (std::size_t i = 0; i < l; ++i)
        for (std::size_t j = 0; j < l; ++j) {
            MatrixQ c = raise_[i] * lower_[j] - lower_[j] * raise_[i];
            for (std::size_t p = 0; p < dim_; ++p)
                for (std::size_t q = 0; q < dim_; ++q) {
                    Rational expected = 0;
                    if (i == j && p == q) expected = Rational(weights_[q].coords[i]);
                    if (c.at(p, q) != expected)
                        throw std::invalid_argument("commutator [e_i, f_j] has wrong value");
                }
        }
}

Rep Rep::trivial(std::shared_ptr<const RootDatum> datum) {
    return trivial_with_weight(datum, Weight{IntVec(datum->total_rank(), 0)});
}

Rep Rep::trivial_with_weight(std::shared_ptr<const RootDatum> datum, const Weight& w) {
    for (std::size_t i = 0; i < datum->ss_rank(); ++i)
        if (w.coords[i] != 0) throw std::invalid_argument("trivial module must have torus-only weight");
    std::size_t l = datum->ss_rank();
    return create(datum, {w}, std::vector<MatrixQ>(l, MatrixQ(1, 1)), std::vector<MatrixQ>(l, MatrixQ(1, 1)));
}

Rep Rep::sl2_irrep(std::shared_ptr<const RootDatum> datum, long n) {
    if (n < 0) throw std::invalid_argument("highest weight must be nonnegative");
    if (datum->cartan().factors.size() != 1 || datum->cartan().factors[0].family != 'A' ||
        datum->cartan().factors[0].rank != 1)
        throw std::invalid_argument("sl2_irrep needs a single A1 factor");
    std::size_t d = static_cast<std::size_t>(n + 1);
    std::vector<Weight> weights;
    for (std::size_t k = 0; k < d; ++k) {
        IntVec w(datum->total_rank(), 0);
        w[0] = n - 2 * static_cast<long>(k);
        weights.push_back(Weight{w});
    }
    MatrixQ e(d, d), f(d, d);
    for (std::size_t k = 1; k < d; ++k) e.at(k - 1, k) = Rational(static_cast<long>(k) * (n - static_cast<long>(k) + 1));
    for (std::size_t k = 0; k + 1 < d; ++k) f.at(k + 1, k) = 1;
    return create(datum, std::move(weights), {e}, {f});
}

Rep Rep::fundamental_rep_A(std::shared_ptr<const RootDatum> datum, std::size_t i) {
    if (datum->cartan().factors.size() != 1 || datum->cartan().factors[0].family != 'A')
        throw std::invalid_argument("fundamental_rep_A needs a single A factor");
    std::size_t r = static_cast<std::size_t>(datum->cartan().factors[0].rank);
    if (i < 1 || i > r) throw std::invalid_argument("fundamental representation index out of range");

    // epsilon_k (0-indexed, k = 0..r) in fundamental-weight coordinates.
    auto eps = [&](std::size_t k) {
        IntVec w(datum->total_rank(), 0);
        if (k < r) w[k] += 1;
        if (k >= 1) w[k - 1] -= 1;
        return w;
    };

    // Basis: sorted i-element subsets of {0..r} in lexicographic order.
    std::vector<std::vector<std::size_t>> subsets;
    std::vector<std::size_t> cur(i);
    for (std::size_t k = 0; k < i; ++k) cur[k] = k;
    while (true) {
        subsets.push_back(cur);
        bool advanced = false;
        std::size_t k = i;
        while (k-- > 0) {
            if (cur[k] < r - i + 1 + k) {
                ++cur[k];
                for (std::size_t m = k + 1; m < i; ++m) cur[m] = cur[m - 1] + 1;
                advanced = true;
                break;
            }
        }
        if (!advanced) break;
    }
    std::map<std::vector<std::size_t>, std::size_t> index;
    for (std::size_t k = 0; k < subsets.size(); ++k) index[subsets[k]] = k;

    std::size_t d = subsets.size();
    std::vector<Weight> weights;
    for (const auto& s : subsets) {
        IntVec w(datum->total_rank(), 0);
        for (std::size_t k : s) {
            IntVec ek = eps(k);
            for (std::size_t t = 0; t < w.size(); ++t) w[t] += ek[t];
        }
        weights.push_back(Weight{w});
    }

    std::vector<MatrixQ> raise(r, MatrixQ(d, d)), lower(r, MatrixQ(d, d));
    for (std::size_t m = 1; m <= r; ++m) {
        // e_m: u_m -> u_{m-1}; f_m: u_{m-1} -> u_m (0-indexed members).
        for (std::size_t q = 0; q < d; ++q) {
            const auto& s = subsets[q];
            if (std::count(s.begin(), s.end(), m) && !std::count(s.begin(), s.end(), m - 1)) {
                auto t = s;
                *std::find(t.begin(), t.end(), m) = m - 1;
                std::sort(t.begin(), t.end());
                raise[m - 1].at(index[t], q) = 1;
            }
            if (std::count(s.begin(), s.end(), m - 1) && !std::count(s.begin(), s.end(), m)) {
                auto t = s;
                *std::find(t.begin(), t.end(), m - 1) = m;
                std::sort(t.begin(), t.end());
                lower[m - 1].at(index[t], q) = 1;
            }
        }
    }
    return create(datum, std::move(weights), std::move(raise), std::move(lower));
}

Rep Rep::adjoint_rep_A(std::shared_ptr<const RootDatum> datum) {
    if (datum->cartan().factors.size() != 1 || datum->cartan().factors[0].family != 'A')
        throw std::invalid_argument("adjoint_rep_A needs a single A factor");
    std::size_t r = static_cast<std::size_t>(datum->cartan().factors[0].rank);
    std::size_t nn = r + 1;

    // Concrete sl_{r+1} basis elements in the datum's root order.
    auto matrix_unit = [&](std::size_t i, std::size_t j) {
        MatrixQ m(nn, nn);
        m.at(i, j) = 1;
        return m;
    };
    // positive root with simple coords consecutive ones i..j-1 -> E_{i,j}
    auto root_to_pair = [&](const IntVec& c) {
        std::size_t i = 0;
        while (i < r && c[i] == 0) ++i;
        std::size_t j = i;
        while (j < r && c[j] == 1) ++j;
        return std::pair<std::size_t, std::size_t>(i, j);  // E_{i, j} with j > i (0-indexed cols)
    };

    std::vector<MatrixQ> basis_elems;
    std::vector<Weight> weights;
    const auto& pos = datum->positive_roots();
    const auto& pos_simple = datum->positive_roots_simple_coords();
    for (std::size_t k = 0; k < pos.size(); ++k) {
        auto [i, j] = root_to_pair(pos_simple[k]);
        basis_elems.push_back(matrix_unit(i, j));
        weights.push_back(pos[k]);
    }
    for (std::size_t k = 0; k < pos.size(); ++k) {
        auto [i, j] = root_to_pair(pos_simple[k]);
        basis_elems.push_back(matrix_unit(j, i));
        IntVec neg(pos[k].coords.size());
        for (std::size_t t = 0; t < neg.size(); ++t) neg[t] = -pos[k].coords[t];
        weights.push_back(Weight{neg});
    }
    for (std::size_t i = 0; i < r; ++i) {
        MatrixQ h(nn, nn);
        h.at(i, i) = 1;
        h.at(i + 1, i + 1) = -1;
        basis_elems.push_back(h);
        weights.push_back(Weight{IntVec(datum->total_rank(), 0)});
    }

    std::size_t d = basis_elems.size();
    // Flattened basis matrix for expressing brackets in the basis.
    MatrixQ flat(d, nn * nn);
    for (std::size_t k = 0; k < d; ++k)
        for (std::size_t i = 0; i < nn; ++i)
            for (std::size_t j = 0; j < nn; ++j) flat.at(k, i * nn + j) = basis_elems[k].at(i, j);
    MatrixQ flat_t = flat.transpose();

    auto express = [&](const MatrixQ& m) {
        std::vector<Rational> rhs(nn * nn);
        for (std::size_t i = 0; i < nn; ++i)
            for (std::size_t j = 0; j < nn; ++j) rhs[i * nn + j] = m.at(i, j);
        std::vector<Rational> x;
        if (!flat_t.solve(rhs, x)) throw std::logic_error("bracket left the adjoint basis span");
        return x;
    };

    std::vector<MatrixQ> raise(r, MatrixQ(d, d)), lower(r, MatrixQ(d, d));
    for (std::size_t m = 0; m < r; ++m) {
        MatrixQ e = matrix_unit(m, m + 1), f = matrix_unit(m + 1, m);
        for (std::size_t q = 0; q < d; ++q) {
            MatrixQ be = e * basis_elems[q] - basis_elems[q] * e;
            MatrixQ bf = f * basis_elems[q] - basis_elems[q] * f;
            std::vector<Rational> xe = express(be), xf = express(bf);
            for (std::size_t p = 0; p < d; ++p) {
                raise[m].at(p, q) = xe[p];
                lower[m].at(p, q) = xf[p];
            }
        }
    }
    return create(datum, std::move(weights), std::move(raise), std::move(lower));
}

Rep Rep::tensor(const Rep& other) const {
    if (datum_ != other.datum_) throw std::invalid_argument("tensor factors over different data");
    std::size_t da = dim_, db = other.dim_, d = da * db;
    std::vector<Weight> weights;
    weights.reserve(d);
    for (std::size_t p = 0; p < da; ++p)
        for (std::size_t q = 0; q < db; ++q) weights.push_back(add_weights(weights_[p], other.weights_[q]));
    std::size_t l = datum_->ss_rank();
    std::vector<MatrixQ> raise(l, MatrixQ(d, d)), lower(l, MatrixQ(d, d));
    for (std::size_t i = 0; i < l; ++i) {
        for (std::size_t p = 0; p < da; ++p)
            for (std::size_t pp = 0; pp < da; ++pp) {
                if (raise_[i].at(pp, p) != 0)
                    for (std::size_t q = 0; q < db; ++q)
                        raise[i].at(pp * db + q, p * db + q) += raise_[i].at(pp, p);
                if (lower_[i].at(pp, p) != 0)
                    for (std::size_t q = 0; q < db; ++q)
                        lower[i].at(pp * db + q, p * db + q) += lower_[i].at(pp, p);
            }
        for (std::size_t q = 0; q < db; ++q)
            for (std::size_t qq = 0; qq < db; ++qq) {
                if (other.raise_[i].at(qq, q) != 0)
                    for (std::size_t p = 0; p < da; ++p)
                        raise[i].at(p * db + qq, p * db + q) += other.raise_[i].at(qq, q);
                if (other.lower_[i].at(qq, q) != 0)
                    for (std::size_t p = 0; p < da; ++p)
                        lower[i].at(p * db + qq, p * db + q) += other.lower_[i].at(qq, q);
            }
    }
    return create(datum_, std::move(weights), std::move(raise), std::move(lower));
}

std::vector<Weight> Rep::distinct_weights() const {
    std::set<IntVec> seen;
    std::vector<Weight> out;
    for (const Weight& w : weights_)
        if (seen.insert(w.coords).second) out.push_back(w);
    std::sort(out.begin(), out.end());
    return out;
}

SubspaceQ Rep::weight_space(const Weight& mu) const {
    std::vector<std::vector<Rational>> rows;
    for (std::size_t k = 0; k < dim_; ++k) {
        if (weights_[k] == mu) {
            std::vector<Rational> v(dim_);
            v[k] = 1;
            rows.push_back(std::move(v));
        }
    }
    return SubspaceQ::span_rows(dim_, rows);
}

SubspaceQ Rep::submodule_closure(const SubspaceQ& s) const {
    SubspaceQ cur = s;
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < datum_->ss_rank(); ++i) {
            for (const MatrixQ* g : {&raise_[i], &lower_[i]}) {
                SubspaceQ image = apply(*g, cur);
                SubspaceQ next = sum(cur, image);
                if (next.dim() > cur.dim()) {
                    cur = next;
                    changed = true;
                }
            }
        }
    }
    return cur;
}

SubspaceQ Rep::highest_weight_vectors() const {
    MatrixQ stacked(0, dim_);
    for (const MatrixQ& e : raise_) stacked = stacked.vstack(e);
    if (stacked.rows() == 0) return SubspaceQ::full(dim_);
    return SubspaceQ::span(dim_, stacked.kernel());
}

SubspaceQ Rep::lowest_weight_vectors() const {
    MatrixQ stacked(0, dim_);
    for (const MatrixQ& f : lower_) stacked = stacked.vstack(f);
    if (stacked.rows() == 0) return SubspaceQ::full(dim_);
    return SubspaceQ::span(dim_, stacked.kernel());
}

Rep Rep::highest_weight_submodule(const Weight& lambda) const {
    if (!datum_->is_dominant(lambda)) throw std::invalid_argument("highest weight must be dominant");
    SubspaceQ hw = intersect(highest_weight_vectors(), weight_space(lambda));
    if (hw.is_zero()) throw std::invalid_argument("no highest-weight vector of the requested weight");
    // Deterministic choice: first row of the canonical (RREF) basis.
    SubspaceQ seed = SubspaceQ::span(dim_, MatrixQ::row_vector(hw.basis().row(0)));

    SubspaceQ piece = submodule_closure(seed);

    // Re-express on a weight-adapted basis of the piece.
    std::vector<Weight> new_weights;
    std::vector<std::vector<Rational>> new_rows;
    for (const Weight& mu : distinct_weights()) {
        SubspaceQ comp = intersect(piece, weight_space(mu));
        for (std::size_t k = 0; k < comp.dim(); ++k) {
            new_rows.push_back(comp.basis().row(k));
            new_weights.push_back(mu);
        }
    }
    if (new_rows.size() != piece.dim()) throw std::logic_error("piece is not weight graded");
    MatrixQ basis = MatrixQ::from_rows(new_rows);
    MatrixQ basis_t = basis.transpose();

    std::size_t m = new_rows.size(), l = datum_->ss_rank();
    std::vector<MatrixQ> raise(l, MatrixQ(m, m)), lower(l, MatrixQ(m, m));
    for (std::size_t i = 0; i < l; ++i) {
        for (std::size_t q = 0; q < m; ++q) {
            for (int which = 0; which < 2; ++which) {
                const MatrixQ& g = which ? lower_[i] : raise_[i];
                std::vector<Rational> image(dim_, Rational(0));
                for (std::size_t p = 0; p < dim_; ++p)
                    for (std::size_t t = 0; t < dim_; ++t)
                        if (g.at(p, t) != 0 && new_rows[q][t] != 0) image[p] += g.at(p, t) * new_rows[q][t];
                std::vector<Rational> x;
                if (!basis_t.solve(image, x)) throw std::logic_error("generator left the submodule");
                for (std::size_t p = 0; p < m; ++p) (which ? lower : raise)[i].at(p, q) = x[p];
            }
        }
    }
    Rep out = create(datum_, std::move(new_weights), std::move(raise), std::move(lower));
    Integer expected = weyl_dim(*datum_, lambda);
    if (Integer(static_cast<long>(out.dim())) != expected)
        throw std::logic_error("cyclic submodule dimension disagrees with the Weyl formula");
    return out;
}

Rep Rep::irreducible(std::shared_ptr<const RootDatum> datum, const Weight& lambda) {
    if (!datum->is_dominant(lambda)) throw std::invalid_argument("highest weight must be dominant");
    const auto& factors = datum->cartan().factors;
    if (factors.size() != 1 || factors[0].family != 'A')
        throw std::invalid_argument("irreducible construction is available for a single A factor");
    for (std::size_t i = static_cast<std::size_t>(factors[0].rank); i < lambda.coords.size(); ++i)
        if (lambda.coords[i] != 0)
            throw std::invalid_argument("torus coordinates of the highest weight must vanish here");
    std::size_t r = static_cast<std::size_t>(factors[0].rank);
    if (r == 1) return sl2_irrep(datum, lambda.coords[0]);
    std::optional<Rep> acc;
    for (std::size_t i = 0; i < r; ++i) {
        for (long c = 0; c < lambda.coords[i]; ++c) {
            Rep f = fundamental_rep_A(datum, i + 1);
            acc = acc ? acc->tensor(f) : f;
        }
    }
    if (!acc) return trivial(datum);
    return acc->highest_weight_submodule(lambda);
}

MatrixQ Rep::root_action(const Root& alpha) const {
    IntVec neg(alpha.coords.size());
    for (std::size_t i = 0; i < neg.size(); ++i) neg[i] = -alpha.coords[i];
    bool positive = true;
    std::size_t idx = datum_->positive_root_index(alpha);
    if (idx == SIZE_MAX) {
        idx = datum_->positive_root_index(Root{neg});
        positive = false;
        if (idx == SIZE_MAX) throw std::invalid_argument("not a root");
    }
    const auto& ladder = datum_->root_ladder();
    // Left-normed commutators along the height-increasing decomposition.
    std::vector<std::size_t> steps;
    std::size_t cur = idx;
    while (ladder[cur].lower_index != SIZE_MAX) {
        steps.push_back(ladder[cur].simple_index);
        cur = ladder[cur].lower_index;
    }
    MatrixQ m = positive ? raise_[ladder[cur].simple_index] : lower_[ladder[cur].simple_index];
    for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
        const MatrixQ& g = positive ? raise_[*it] : lower_[*it];
        m = g * m - m * g;
    }
    return m;
}

std::optional<CentralCharacter> Rep::uniform_character() const {
    if (dim_ == 0) return datum_->trivial_character();
    CentralCharacter c = datum_->class_of_weight(weights_[0]);
    for (std::size_t k = 1; k < dim_; ++k)
        if (!(datum_->class_of_weight(weights_[k]) == c)) return std::nullopt;
    return c;
}

CentralCharacter Rep::character_of_vector(std::size_t k) const {
    return datum_->class_of_weight(weights_.at(k));
}

bool Rep::operator==(const Rep& other) const {
    return datum_ == other.datum_ && weights_ == other.weights_ && raise_ == other.raise_ &&
           lower_ == other.lower_;
}

std::vector<Rep::IrreduciblePiece> Rep::irreducible_decomposition() const {
    // Independent highest-weight vectors of a fixed weight generate
    // independent cyclic submodules, and these exhaust the module.
    std::vector<IrreduciblePiece> unique;
    SubspaceQ hw = highest_weight_vectors();
    for (const Weight& mu : distinct_weights()) {
        SubspaceQ comp = intersect(hw, weight_space(mu));
        for (std::size_t k = 0; k < comp.dim(); ++k) {
            IrreduciblePiece p;
            p.highest = mu;
            p.space = submodule_closure(
                SubspaceQ::span(dim_, MatrixQ::row_vector(comp.basis().row(k))));
            unique.push_back(std::move(p));
        }
    }
    std::size_t covered = 0;
    for (auto& p : unique) {
        for (const Weight& mu : distinct_weights()) {
            SubspaceQ comp = intersect(p.space, weight_space(mu));
            if (!comp.is_zero()) p.weight_components[mu.coords] = comp;
        }
        SubspaceQ low = intersect(p.space, lowest_weight_vectors());
        if (low.is_zero()) throw std::logic_error("irreducible piece has no lowest weight vector");
        // The lowest weight is the weight of that (one-dimensional) space.
        bool found = false;
        for (const auto& [wc, comp] : p.weight_components) {
            if (contains(comp, low)) {
                p.lowest = Weight{wc};
                found = true;
                break;
            }
        }
        if (!found) throw std::logic_error("lowest weight vector is not weight homogeneous");
        covered += p.space.dim();
    }
    if (covered != dim_) throw std::logic_error("irreducible decomposition does not exhaust the module");
    return unique;
}

Rep direct_sum_rep(const Rep& a, const Rep& b) {
    if (a.datum() != b.datum()) throw std::invalid_argument("direct sum over different data");
    std::size_t d = a.dim() + b.dim(), l = a.datum()->ss_rank();
    std::vector<Weight> weights = a.weights();
    weights.insert(weights.end(), b.weights().begin(), b.weights().end());
    std::vector<MatrixQ> raise(l, MatrixQ(d, d)), lower(l, MatrixQ(d, d));
    for (std::size_t i = 0; i < l; ++i) {
        for (std::size_t p = 0; p < a.dim(); ++p)
            for (std::size_t q = 0; q < a.dim(); ++q) {
                raise[i].at(p, q) = a.raise(i).at(p, q);
                lower[i].at(p, q) = a.lower(i).at(p, q);
            }
        for (std::size_t p = 0; p < b.dim(); ++p)
            for (std::size_t q = 0; q < b.dim(); ++q) {
                raise[i].at(a.dim() + p, a.dim() + q) = b.raise(i).at(p, q);
                lower[i].at(a.dim() + p, a.dim() + q) = b.lower(i).at(p, q);
            }
    }
    return Rep::create(a.datum(), std::move(weights), std::move(raise), std::move(lower), false);
}

Integer weyl_dim(const RootDatum& datum, const Weight& lambda) {
    if (!datum.is_dominant(lambda)) throw std::invalid_argument("weight is not dominant");
    Weight rho{IntVec(datum.total_rank(), 0)};
    for (std::size_t i = 0; i < datum.ss_rank(); ++i) rho.coords[i] = 1;
    Rational num = 1, den = 1;
    for (const Root& alpha : datum.positive_roots()) {
        Weight lr = lambda;
        for (std::size_t i = 0; i < lr.coords.size(); ++i) lr.coords[i] += rho.coords[i];
        num *= datum.weight_form(lr, alpha);
        den *= datum.weight_form(rho, alpha);
    }
    Rational q = num / den;
    if (q.get_den() != 1) throw std::logic_error("Weyl dimension is not an integer");
    return q.get_num();
}

Weight dominant_representative(const RootDatum& datum, const Weight& w) {
    Weight cur = w;
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < datum.ss_rank(); ++i) {
            if (cur.coords[i] < 0) {
                long c = cur.coords[i];
                Root alpha = datum.simple_root(i);
                for (std::size_t t = 0; t < cur.coords.size(); ++t) cur.coords[t] -= c * alpha.coords[t];
                changed = true;
            }
        }
    }
    return cur;
}

std::map<IntVec, Integer> freudenthal(const RootDatum& datum, const Weight& lambda) {
    if (!datum.is_dominant(lambda)) throw std::invalid_argument("weight is not dominant");
    const std::size_t l = datum.ss_rank();
    Weight rho{IntVec(datum.total_rank(), 0)};
    for (std::size_t i = 0; i < l; ++i) rho.coords[i] = 1;
    auto shifted_norm = [&](const Weight& w) {
        Weight s = w;
        for (std::size_t i = 0; i < s.coords.size(); ++i) s.coords[i] += rho.coords[i];
        return datum.weight_form(s, s);
    };
    const Rational top = shifted_norm(lambda);

    // Every weight of V_lambda sits between w0(lambda) and lambda in the
    // root order, so the deficits lambda - mu fill a box in simple-root
    // coordinates with corner lambda - w0(lambda).
    Weight neg = lambda;
    for (auto& c : neg.coords) c = -c;
    Weight lowest = dominant_representative(datum, neg);
    for (auto& c : lowest.coords) c = -c;  // w0(lambda)
    Weight delta = sub_weights(lambda, lowest);
    std::vector<long> box(l, 0);
    {
        // simple-root coordinates of delta: solve A c = delta_ss
        MatrixQ a = datum.cartan_matrix().to_rational();
        std::vector<Rational> rhs(l), c;
        for (std::size_t i = 0; i < l; ++i) rhs[i] = Rational(delta.coords[i]);
        if (!a.solve(rhs, c)) throw std::logic_error("weight difference left the root lattice");
        for (std::size_t i = 0; i < l; ++i) {
            if (c[i].get_den() != 1 || c[i] < 0) throw std::logic_error("bad deficit box");
            box[i] = static_cast<long>(c[i].get_num().get_si());
        }
    }

    // Deficit coordinates of each candidate, for bounded string walks.
    std::map<IntVec, IntVec> deficit_of;
    std::vector<Weight> dominants;
    {
        IntVec k(l, 0);
        while (true) {
            Weight mu = lambda;
            for (std::size_t i = 0; i < l; ++i) {
                if (k[i] == 0) continue;
                Root alpha = datum.simple_root(i);
                for (std::size_t t = 0; t < mu.coords.size(); ++t) mu.coords[t] -= k[i] * alpha.coords[t];
            }
            deficit_of[mu.coords] = k;
            if (datum.is_dominant(mu)) dominants.push_back(mu);
            std::size_t i = l;
            bool advanced = false;
            while (i-- > 0) {
                if (k[i] < box[i]) {
                    ++k[i];
                    for (std::size_t t = i + 1; t < l; ++t) k[t] = 0;
                    advanced = true;
                    break;
                }
            }
            if (!advanced) break;
        }
    }
    std::sort(dominants.begin(), dominants.end(), [&](const Weight& a, const Weight& b) {
        Rational na = shifted_norm(a), nb = shifted_norm(b);
        if (na != nb) return na > nb;
        return a.coords < b.coords;
    });

    std::map<IntVec, Integer> mult;  // dominants only during recursion
    for (const Weight& mu : dominants) {
        if (mu == lambda) {
            mult[mu.coords] = 1;
            continue;
        }
        Rational denom = top - shifted_norm(mu);
        if (denom == 0) {
            mult[mu.coords] = 0;
            continue;
        }
        Rational rhs = 0;
        const auto& pos_simple = datum.positive_roots_simple_coords();
        for (std::size_t ai = 0; ai < datum.positive_roots().size(); ++ai) {
            const Root& alpha = datum.positive_roots()[ai];
            const IntVec& ac = pos_simple[ai];
            IntVec def = deficit_of.at(mu.coords);
            Weight w = mu;
            while (true) {
                bool inside = true;
                for (std::size_t i = 0; i < l; ++i) {
                    def[i] -= ac[i];
                    if (def[i] < 0) inside = false;
                }
                if (!inside) break;
                w = add_weights(w, alpha);
                Weight rep = dominant_representative(datum, w);
                auto it = mult.find(rep.coords);
                if (it != mult.end() && it->second != 0)
                    rhs += 2 * datum.weight_form(w, alpha) * Rational(it->second);
            }
        }
        Rational m = rhs / denom;
        if (m.get_den() != 1) throw std::logic_error("Freudenthal recursion gave a non-integer");
        mult[mu.coords] = m.get_num();
    }

    // Spread over Weyl orbits.
    std::map<IntVec, Integer> full;
    for (const auto& [wc, m] : mult) {
        if (m == 0) continue;
        std::set<IntVec> orbit;
        std::vector<Weight> work{Weight{wc}};
        orbit.insert(wc);
        while (!work.empty()) {
            Weight w = work.back();
            work.pop_back();
            full[w.coords] = m;
            for (std::size_t i = 0; i < datum.ss_rank(); ++i) {
                long c = w.coords[i];
                if (c == 0) continue;
                Weight s = w;
                Root alpha = datum.simple_root(i);
                for (std::size_t t = 0; t < s.coords.size(); ++t) s.coords[t] -= c * alpha.coords[t];
                if (orbit.insert(s.coords).second) work.push_back(s);
            }
        }
    }
    return full;
}

}  // namespace equibundle
