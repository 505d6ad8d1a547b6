#include "equibundle/root_datum.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace equibundle {

int CartanType::ss_rank() const {
    int r = 0;
    for (const auto& f : factors) r += f.rank;
    return r;
}

void CartanType::validate() const {
    if (torus_rank < 0) throw std::invalid_argument("negative torus rank");
    for (const auto& f : factors) {
        switch (f.family) {
            case 'A':
                if (f.rank < 1) throw std::invalid_argument("A_r needs r >= 1");
                break;
            case 'B':
            case 'C':
                if (f.rank < 2) throw std::invalid_argument("B_r/C_r need r >= 2");
                break;
            case 'D':
                if (f.rank < 3) throw std::invalid_argument("D_r needs r >= 3");
                break;
            case 'E':
                if (f.rank < 6 || f.rank > 8) throw std::invalid_argument("E_r needs r in {6,7,8}");
                break;
            case 'F':
                if (f.rank != 4) throw std::invalid_argument("F_r needs r = 4");
                break;
            case 'G':
                if (f.rank != 2) throw std::invalid_argument("G_r needs r = 2");
                break;
            default:
                throw std::invalid_argument(std::string("unknown family ") + f.family);
        }
    }
    if (factors.empty() && torus_rank == 0) throw std::invalid_argument("empty Cartan type");
}

std::string CartanType::to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < factors.size(); ++i)
        os << (i ? "x" : "") << factors[i].family << factors[i].rank;
    if (torus_rank > 0) os << (factors.empty() ? "" : "x") << "T" << torus_rank;
    return os.str();
}

MatrixZ cartan_matrix_for(const CartanType& type) {
    int l = type.ss_rank();
    MatrixZ a(l, l);
    int base = 0;
    for (const auto& f : type.factors) {
        int r = f.rank;
        auto set = [&](int i, int j, long v) { a.at(base + i, base + j) = v; };
        for (int i = 0; i < r; ++i) set(i, i, 2);
        auto chain = [&](int i, int j) { set(i, j, -1); set(j, i, -1); };
        switch (f.family) {
            case 'A':
                for (int i = 0; i + 1 < r; ++i) chain(i, i + 1);
                break;
            case 'B':
                for (int i = 0; i + 1 < r; ++i) chain(i, i + 1);
                set(r - 1, r - 2, -2);  // alpha_r short
                break;
            case 'C':
                for (int i = 0; i + 1 < r; ++i) chain(i, i + 1);
                set(r - 2, r - 1, -2);  // alpha_r long
                break;
            case 'D':
                for (int i = 0; i + 1 < r - 1; ++i) chain(i, i + 1);
                chain(r - 3, r - 1);
                break;
            case 'E':
                // Bourbaki numbering: chain 1-3-4-5-6(-7)(-8), node 2 on 4.
                chain(0, 2);
                chain(2, 3);
                chain(3, 4);
                chain(4, 5);
                if (r >= 7) chain(5, 6);
                if (r >= 8) chain(6, 7);
                chain(1, 3);
                break;
            case 'F':
                chain(0, 1);
                chain(1, 2);
                chain(2, 3);
                set(2, 1, -2);  // alpha_3, alpha_4 short
                break;
            case 'G':
                set(0, 1, -3);  // alpha_1 short
                set(1, 0, -1);
                break;
        }
        base += r;
    }
    return a;
}

std::shared_ptr<const RootDatum> RootDatum::build(const CartanType& type, const MatrixZ& basis) {
    type.validate();
    auto rd = std::make_shared<RootDatum>();
    rd->type_ = type;
    rd->ss_rank_ = static_cast<std::size_t>(type.ss_rank());
    rd->torus_rank_ = static_cast<std::size_t>(type.torus_rank);
    rd->total_ = rd->ss_rank_ + rd->torus_rank_;
    rd->cartan_ = cartan_matrix_for(type);

    const std::size_t l = rd->ss_rank_, n = rd->total_;
    MatrixQ aq = rd->cartan_.to_rational();
    MatrixQ aug = aq.hstack(MatrixQ::identity(l));
    if (aug.rref_in_place().size() != l) throw std::logic_error("singular Cartan matrix");
    rd->cartan_inv_ = aug.submatrix(0, l, l, l);

    rd->pairing_matrix_ = MatrixQ(n, n);
    for (std::size_t i = 0; i < l; ++i)
        for (std::size_t j = 0; j < l; ++j) rd->pairing_matrix_.at(i, j) = rd->cartan_inv_.at(i, j);
    for (std::size_t i = l; i < n; ++i) rd->pairing_matrix_.at(i, i) = 1;

    if (basis.rows() != n || basis.cols() != n) throw std::invalid_argument("weight lattice basis must be square of full rank");
    rd->weight_basis_ = basis;
    if (basis.to_rational().rank() != n) throw std::invalid_argument("weight lattice basis is not full rank");

    rd->enumerate_roots();
    rd->compute_symmetrizer();

    // Sandwich: every simple root must lie in X*(T).
    for (std::size_t i = 0; i < l; ++i) {
        if (!rd->weight_in_lattice(rd->simple_root(i)))
            throw std::invalid_argument("lattice does not contain the root lattice");
    }

    // X_*(T) is dual to X*(T): basis rows C = (M B^T)^{-1}.
    MatrixQ g = rd->pairing_matrix_ * rd->weight_basis_.to_rational().transpose();
    MatrixQ gaug = g.hstack(MatrixQ::identity(n));
    gaug.rref_in_place();
    rd->coweight_basis_ = gaug.submatrix(0, n, n, n);
    rd->coweight_basis_inv_ = g;

    rd->central_ = abelian_quotient(n, rd->weight_basis_);

    // Weight-space Gram matrix (pi_i, pi_j) = (A^{-1})_{ij} d_i.
    rd->weight_gram_ = MatrixQ(l, l);
    for (std::size_t i = 0; i < l; ++i)
        for (std::size_t j = 0; j < l; ++j)
            rd->weight_gram_.at(i, j) = rd->cartan_inv_.at(i, j) * Rational(rd->sym_[i]);
    return rd;
}

std::shared_ptr<const RootDatum> RootDatum::build_adjoint(const CartanType& type) {
    type.validate();
    int l = type.ss_rank(), n = l + type.torus_rank;
    MatrixZ a = cartan_matrix_for(type);
    MatrixZ b(n, n);
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j) b.at(i, j) = a.at(j, i);  // row i = alpha_i in pi-coords
    for (int i = l; i < n; ++i) b.at(i, i) = 1;
    return build(type, b);
}

std::shared_ptr<const RootDatum> RootDatum::build_simply_connected(const CartanType& type) {
    type.validate();
    return build(type, MatrixZ::identity(type.total_rank()));
}

void RootDatum::enumerate_roots() {
    const std::size_t l = ss_rank_;
    // BFS over heights using root strings: beta + alpha_i is a root iff
    // q = p - <alpha_i^vee, beta> >= 1, where p is the depth of the string.
    std::set<IntVec> known;
    std::vector<IntVec> by_height;
    std::vector<std::pair<std::size_t, std::size_t>> parent;  // (lower root pos, simple)
    std::vector<IntVec> order;

    for (std::size_t i = 0; i < l; ++i) {
        IntVec e(l, 0);
        e[i] = 1;
        known.insert(e);
        order.push_back(e);
        parent.emplace_back(SIZE_MAX, i);
    }
    std::size_t lo = 0, hi = order.size();
    while (lo < hi) {
        std::vector<IntVec> next;
        std::vector<std::pair<std::size_t, std::size_t>> next_parent;
        for (std::size_t pos = lo; pos < hi; ++pos) {
            IntVec beta = order[pos];
            for (std::size_t i = 0; i < l; ++i) {
                long cart = 0;
                for (std::size_t j = 0; j < l; ++j) cart += cartan_.at(i, j).get_si() * beta[j];
                long p = 0;
                IntVec down = beta;
                while (true) {
                    down[i] -= 1;
                    bool zero = std::all_of(down.begin(), down.end(), [](long v) { return v == 0; });
                    if (zero || !known.count(down)) break;
                    ++p;
                }
                if (p - cart >= 1) {
                    IntVec up = beta;
                    up[i] += 1;
                    if (!known.count(up)) {
                        known.insert(up);
                        next.push_back(up);
                        next_parent.emplace_back(pos, i);
                    }
                }
            }
        }
        // Deterministic order inside each height: lexicographic.
        std::vector<std::size_t> idx(next.size());
        for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
        std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return next[a] < next[b]; });
        lo = hi;
        for (std::size_t i : idx) {
            order.push_back(next[i]);
            parent.push_back(next_parent[i]);
        }
        hi = order.size();
    }

    positive_roots_simple_coords_ = order;
    positive_roots_.clear();
    ladder_.clear();
    for (std::size_t k = 0; k < order.size(); ++k) {
        IntVec w(total_, 0);
        for (std::size_t i = 0; i < l; ++i) {
            long v = 0;
            for (std::size_t j = 0; j < l; ++j) v += cartan_.at(i, j).get_si() * order[k][j];
            w[i] = v;
        }
        positive_roots_.push_back(Root{w});
        ladder_.push_back(RootLadder{k, parent[k].second, parent[k].first});
    }
}

void RootDatum::compute_symmetrizer() {
    const std::size_t l = ss_rank_;
    std::vector<Rational> d(l, Rational(0));
    for (std::size_t start = 0; start < l; ++start) {
        if (d[start] != 0) continue;
        d[start] = 1;
        std::vector<std::size_t> stack{start};
        while (!stack.empty()) {
            std::size_t i = stack.back();
            stack.pop_back();
            for (std::size_t j = 0; j < l; ++j) {
                if (cartan_.at(i, j) == 0 || d[j] != 0) continue;
                // d_j = d_i * A_ij / A_ji
                d[j] = d[i] * Rational(cartan_.at(i, j)) / Rational(cartan_.at(j, i));
                stack.push_back(j);
            }
        }
    }
    Integer denom = 1;
    for (const auto& q : d)
        if (q != 0) denom = lcm(denom, q.get_den());
    sym_.assign(l, Integer(1));
    for (std::size_t i = 0; i < l; ++i)
        if (d[i] != 0) sym_[i] = d[i].get_num() * (denom / d[i].get_den());
}

Root RootDatum::simple_root(std::size_t i) const {
    if (i >= ss_rank_) throw std::invalid_argument("simple root index out of range");
    IntVec w(total_, 0);
    for (std::size_t k = 0; k < ss_rank_; ++k) w[k] = cartan_.at(k, i).get_si();
    return Root{w};
}

std::vector<Root> RootDatum::all_roots() const {
    std::vector<Root> r = positive_roots_;
    for (const Root& a : positive_roots_) {
        IntVec neg(a.coords.size());
        for (std::size_t i = 0; i < neg.size(); ++i) neg[i] = -a.coords[i];
        r.push_back(Root{neg});
    }
    return r;
}

Weight RootDatum::fundamental_weight(std::size_t i) const {
    if (i >= ss_rank_) throw std::invalid_argument("fundamental weight index out of range");
    IntVec w(total_, 0);
    w[i] = 1;
    return Weight{w};
}

Weight RootDatum::zero_weight() const { return Weight{IntVec(total_, 0)}; }

std::vector<Rational> RootDatum::fundamental_coweight(std::size_t i) const {
    if (i >= ss_rank_) throw std::invalid_argument("fundamental coweight index out of range");
    // omega_i^vee has omega-coordinates e_i; X_* coordinates are row i of C^{-1}.
    std::vector<Rational> x(total_);
    for (std::size_t j = 0; j < total_; ++j) x[j] = coweight_basis_inv_.at(i, j);
    return x;
}

Rational RootDatum::pairing(const Coweight& c, const Weight& w) const {
    if (c.coords.size() != total_ || w.coords.size() != total_)
        throw std::invalid_argument("pairing coordinate size mismatch");
    // raw omega-coords of c = c * C; value = (cC) M w^T
    Rational value = 0;
    for (std::size_t j = 0; j < total_; ++j) {
        Rational cj = 0;
        for (std::size_t i = 0; i < total_; ++i)
            if (c.coords[i] != 0) cj += Rational(c.coords[i]) * coweight_basis_.at(i, j);
        if (cj == 0) continue;
        for (std::size_t k = 0; k < total_; ++k)
            if (w.coords[k] != 0) value += cj * pairing_matrix_.at(j, k) * Rational(w.coords[k]);
    }
    return value;
}

bool RootDatum::is_dominant(const Weight& w) const {
    if (w.coords.size() != total_) throw std::invalid_argument("weight size mismatch");
    for (std::size_t i = 0; i < ss_rank_; ++i)
        if (w.coords[i] < 0) return false;
    return true;
}

bool RootDatum::weight_in_lattice(const Weight& w) const {
    if (w.coords.size() != total_) throw std::invalid_argument("weight size mismatch");
    // Solve x B = w and test integrality.
    std::vector<Rational> rhs(total_);
    for (std::size_t i = 0; i < total_; ++i) rhs[i] = Rational(w.coords[i]);
    std::vector<Rational> x;
    if (!weight_basis_.to_rational().transpose().solve(rhs, x)) return false;
    for (const auto& q : x)
        if (q.get_den() != 1) return false;
    return true;
}

ParabolicSplit RootDatum::parabolic_split(const Coweight& tau) const {
    ParabolicSplit s;
    for (const Root& a : all_roots()) {
        Rational v = pairing(tau, a);
        if (v == 0)
            s.level_zero.push_back(a);
        else if (v > 0)
            s.level_positive.push_back(a);
        else
            s.level_negative.push_back(a);
    }
    return s;
}

CentralCharacter RootDatum::class_of_weight(const Weight& w) const {
    std::vector<Integer> x(total_);
    for (std::size_t i = 0; i < total_; ++i) x[i] = w.coords[i];
    return central_.class_of(x);
}

CentralCharacter RootDatum::trivial_character() const {
    return CentralCharacter(central_.class_of(std::vector<Integer>(total_, 0)));
}

CentralCharacter RootDatum::add_characters(const CentralCharacter& a, const CentralCharacter& b) const {
    if (a.size() != b.size()) throw std::invalid_argument("character size mismatch");
    CentralCharacter c(a.size());
    std::size_t t = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        c[i] = a[i] + b[i];
        if (t < central_.torsion.size()) {
            c[i] %= central_.torsion[t];
            if (c[i] < 0) c[i] += central_.torsion[t];
            ++t;
        }
    }
    return c;
}

bool RootDatum::is_trivial_character(const CentralCharacter& c) const {
    return std::all_of(c.begin(), c.end(), [](const Integer& v) { return v == 0; });
}

Rational RootDatum::weight_form(const Weight& a, const Weight& b) const {
    Rational v = 0;
    for (std::size_t i = 0; i < ss_rank_; ++i) {
        if (a.coords[i] == 0) continue;
        for (std::size_t j = 0; j < ss_rank_; ++j)
            if (b.coords[j] != 0) v += Rational(a.coords[i]) * weight_gram_.at(i, j) * Rational(b.coords[j]);
    }
    return v;
}

Rational RootDatum::coroot_pairing(const Root& alpha, const Weight& lambda) const {
    Rational aa = weight_form(alpha, alpha);
    if (aa == 0) throw std::invalid_argument("not a root");
    return 2 * weight_form(lambda, alpha) / aa;
}

std::size_t RootDatum::positive_root_index(const Root& alpha) const {
    for (std::size_t i = 0; i < positive_roots_.size(); ++i)
        if (positive_roots_[i] == alpha) return i;
    return SIZE_MAX;
}

}  // namespace equibundle
