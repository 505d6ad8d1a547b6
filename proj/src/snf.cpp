#include "equibundle/snf.hpp"

#include <stdexcept>

namespace equibundle {

MatrixZ MatrixZ::identity(std::size_t n) {
    MatrixZ m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

MatrixZ MatrixZ::from_rows(const std::vector<std::vector<Integer>>& rows) {
    if (rows.empty()) return MatrixZ();
    MatrixZ m(rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols()) throw std::invalid_argument("ragged rows");
        for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

MatrixZ MatrixZ::operator*(const MatrixZ& other) const {
    if (cols_ != other.rows_) throw std::invalid_argument("matrix product shape mismatch");
    MatrixZ m(rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            if (at(i, k) == 0) continue;
            for (std::size_t j = 0; j < other.cols_; ++j) m.at(i, j) += at(i, k) * other.at(k, j);
        }
    return m;
}

bool MatrixZ::operator==(const MatrixZ& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
}

MatrixQ MatrixZ::to_rational() const {
    MatrixQ m(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m.at(i, j) = Rational(at(i, j));
    return m;
}

MatrixZ MatrixZ::unimodular_inverse() const {
    if (rows_ != cols_) throw std::invalid_argument("inverse of non-square matrix");
    MatrixQ aug = to_rational().hstack(MatrixQ::identity(rows_));
    std::vector<std::size_t> pivots = aug.rref_in_place();
    if (pivots.size() != rows_) throw std::invalid_argument("matrix is singular");
    MatrixZ inv(rows_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < rows_; ++j) {
            Rational q = aug.at(i, rows_ + j);
            if (q.get_den() != 1) throw std::invalid_argument("matrix is not unimodular");
            inv.at(i, j) = q.get_num();
        }
    return inv;
}

namespace {

void swap_rows(MatrixZ& a, MatrixZ& u, std::size_t i, std::size_t j) {
    for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a.at(i, c), a.at(j, c));
    for (std::size_t c = 0; c < u.cols(); ++c) std::swap(u.at(i, c), u.at(j, c));
}

void swap_cols(MatrixZ& a, MatrixZ& v, std::size_t i, std::size_t j) {
    for (std::size_t r = 0; r < a.rows(); ++r) std::swap(a.at(r, i), a.at(r, j));
    for (std::size_t r = 0; r < v.rows(); ++r) std::swap(v.at(r, i), v.at(r, j));
}

// row[i] -= q * row[j]
void add_row(MatrixZ& a, MatrixZ& u, std::size_t i, std::size_t j, const Integer& q) {
    for (std::size_t c = 0; c < a.cols(); ++c) a.at(i, c) -= q * a.at(j, c);
    for (std::size_t c = 0; c < u.cols(); ++c) u.at(i, c) -= q * u.at(j, c);
}

void add_col(MatrixZ& a, MatrixZ& v, std::size_t i, std::size_t j, const Integer& q) {
    for (std::size_t r = 0; r < a.rows(); ++r) a.at(r, i) -= q * a.at(r, j);
    for (std::size_t r = 0; r < v.rows(); ++r) v.at(r, i) -= q * v.at(r, j);
}

void negate_row(MatrixZ& a, MatrixZ& u, std::size_t i) {
    for (std::size_t c = 0; c < a.cols(); ++c) a.at(i, c) = -a.at(i, c);
    for (std::size_t c = 0; c < u.cols(); ++c) u.at(i, c) = -u.at(i, c);
}

}  // namespace

SmithNormalForm smith_normal_form(const MatrixZ& input) {
    SmithNormalForm s;
    s.D = input;
    s.U = MatrixZ::identity(input.rows());
    s.V = MatrixZ::identity(input.cols());
    MatrixZ& a = s.D;
    const std::size_t n = std::min(a.rows(), a.cols());

    for (std::size_t t = 0; t < n; ++t) {
        // Locate the minimal nonzero entry of the trailing block.
        std::size_t pi = t, pj = t;
        bool found = false;
        Integer best;
        for (std::size_t i = t; i < a.rows(); ++i)
            for (std::size_t j = t; j < a.cols(); ++j) {
                if (a.at(i, j) == 0) continue;
                Integer v = abs(a.at(i, j));
                if (!found || v < best) {
                    best = v;
                    pi = i;
                    pj = j;
                    found = true;
                }
            }
        if (!found) break;
        if (pi != t) swap_rows(a, s.U, t, pi);
        if (pj != t) swap_cols(a, s.V, t, pj);

        bool clean = false;
        while (!clean) {
            clean = true;
            for (std::size_t i = t + 1; i < a.rows(); ++i) {
                if (a.at(i, t) == 0) continue;
                Integer q = a.at(i, t) / a.at(t, t);
                add_row(a, s.U, i, t, q);
                if (a.at(i, t) != 0) {
                    swap_rows(a, s.U, t, i);
                    clean = false;
                }
            }
            for (std::size_t j = t + 1; j < a.cols(); ++j) {
                if (a.at(t, j) == 0) continue;
                Integer q = a.at(t, j) / a.at(t, t);
                add_col(a, s.V, j, t, q);
                if (a.at(t, j) != 0) {
                    swap_cols(a, s.V, t, j);
                    clean = false;
                }
            }
            if (clean) {
                // Enforce the divisibility chain: fold any non-multiple into
                // the pivot column and restart the reduction.
                for (std::size_t i = t + 1; i < a.rows() && clean; ++i)
                    for (std::size_t j = t + 1; j < a.cols() && clean; ++j) {
                        if (a.at(i, j) % a.at(t, t) != 0) {
                            add_row(a, s.U, t, i, Integer(-1));
                            clean = false;
                        }
                    }
            }
        }
        if (a.at(t, t) < 0) negate_row(a, s.U, t);
    }
    return s;
}

std::vector<Integer> SmithNormalForm::invariant_factors() const {
    std::vector<Integer> f;
    const std::size_t n = std::min(D.rows(), D.cols());
    for (std::size_t i = 0; i < n; ++i)
        if (D.at(i, i) != 0) f.push_back(D.at(i, i));
    return f;
}

std::size_t SmithNormalForm::rank() const { return invariant_factors().size(); }

AbelianQuotient abelian_quotient(std::size_t ambient_rank, const MatrixZ& relations) {
    if (relations.rows() > 0 && relations.cols() != ambient_rank)
        throw std::invalid_argument("relation width mismatch");
    AbelianQuotient q;
    q.ambient_rank = ambient_rank;
    MatrixZ rel = relations.rows() == 0 ? MatrixZ(0, ambient_rank) : relations;
    SmithNormalForm s = smith_normal_form(rel);
    q.diag = s.invariant_factors();
    q.rel_rank = q.diag.size();
    q.free_rank = ambient_rank - q.rel_rank;
    for (const Integer& d : q.diag)
        if (d > 1) q.torsion.push_back(d);
    q.vmat = s.V;
    return q;
}

std::vector<Integer> AbelianQuotient::class_of(const std::vector<Integer>& x) const {
    if (x.size() != ambient_rank) throw std::invalid_argument("element has wrong rank");
    // y = x * V; x lies in the relation lattice iff y_i is divisible by d_i
    // on the torsion block and vanishes on the free block.
    std::vector<Integer> y(ambient_rank);
    for (std::size_t j = 0; j < ambient_rank; ++j)
        for (std::size_t i = 0; i < ambient_rank; ++i) y[j] += x[i] * vmat.at(i, j);
    std::vector<Integer> cls;
    for (std::size_t i = 0; i < rel_rank; ++i) {
        if (diag[i] == 1) continue;
        Integer m = y[i] % diag[i];
        if (m < 0) m += diag[i];
        cls.push_back(m);
    }
    for (std::size_t i = rel_rank; i < ambient_rank; ++i) cls.push_back(y[i]);
    return cls;
}

bool AbelianQuotient::is_trivial_class(const std::vector<Integer>& x) const {
    for (const Integer& c : class_of(x))
        if (c != 0) return false;
    return true;
}

Integer AbelianQuotient::torsion_order() const {
    Integer o = 1;
    for (const Integer& d : torsion) o *= d;
    return o;
}

Integer AbelianQuotient::order() const {
    if (!is_finite()) throw std::domain_error("group is infinite");
    return torsion_order();
}

}  // namespace equibundle
