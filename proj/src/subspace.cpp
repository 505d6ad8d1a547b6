#include "equibundle/subspace.hpp"

#include <sstream>
#include <stdexcept>

namespace equibundle {

SubspaceQ SubspaceQ::zero(std::size_t ambient) {
    SubspaceQ s;
    s.ambient_ = ambient;
    s.basis_ = MatrixQ(0, ambient);
    return s;
}

SubspaceQ SubspaceQ::full(std::size_t ambient) {
    SubspaceQ s;
    s.ambient_ = ambient;
    s.basis_ = MatrixQ::identity(ambient);
    return s;
}

SubspaceQ SubspaceQ::span(std::size_t ambient, const MatrixQ& vectors) {
    if (vectors.rows() > 0 && vectors.cols() != ambient)
        throw std::invalid_argument("spanning vectors have wrong ambient dimension");
    SubspaceQ s;
    s.ambient_ = ambient;
    MatrixQ m = vectors;
    std::vector<std::size_t> pivots = m.rref_in_place();
    s.basis_ = MatrixQ(pivots.size(), ambient);
    for (std::size_t i = 0; i < pivots.size(); ++i)
        for (std::size_t j = 0; j < ambient; ++j) s.basis_.at(i, j) = m.at(i, j);
    return s;
}

SubspaceQ SubspaceQ::span_rows(std::size_t ambient, const std::vector<std::vector<Rational>>& rows) {
    if (rows.empty()) return zero(ambient);
    return span(ambient, MatrixQ::from_rows(rows));
}

bool SubspaceQ::operator<(const SubspaceQ& other) const {
    if (ambient_ != other.ambient_) return ambient_ < other.ambient_;
    if (dim() != other.dim()) return dim() < other.dim();
    return basis_.compare(other.basis_) < 0;
}

bool SubspaceQ::contains_vector(const std::vector<Rational>& v) const {
    if (v.size() != ambient_) throw std::invalid_argument("vector has wrong ambient dimension");
    // Reduce v against the RREF basis; membership iff the residue is zero.
    std::vector<Rational> r = v;
    for (std::size_t i = 0; i < basis_.rows(); ++i) {
        std::size_t piv = 0;
        while (piv < ambient_ && basis_.at(i, piv) == 0) ++piv;
        if (piv == ambient_) continue;
        if (r[piv] == 0) continue;
        Rational f = r[piv];
        for (std::size_t j = piv; j < ambient_; ++j) r[j] -= f * basis_.at(i, j);
    }
    for (const auto& q : r)
        if (q != 0) return false;
    return true;
}

std::string SubspaceQ::to_string() const {
    std::ostringstream os;
    os << "span" << basis_.to_string() << " in Q^" << ambient_;
    return os.str();
}

SubspaceQ intersect(const SubspaceQ& a, const SubspaceQ& b) {
    if (a.ambient_dim() != b.ambient_dim()) throw std::invalid_argument("ambient dimension mismatch");
    std::size_t n = a.ambient_dim();
    if (a.is_zero() || b.is_zero()) return SubspaceQ::zero(n);
    if (a.is_full()) return b;
    if (b.is_full()) return a;
    // Zassenhaus: reduce [A A; B 0]; rows with vanishing left half carry the
    // intersection in the right half.
    std::size_t ra = a.dim(), rb = b.dim();
    MatrixQ block(ra + rb, 2 * n);
    for (std::size_t i = 0; i < ra; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            block.at(i, j) = a.basis().at(i, j);
            block.at(i, n + j) = a.basis().at(i, j);
        }
    for (std::size_t i = 0; i < rb; ++i)
        for (std::size_t j = 0; j < n; ++j) block.at(ra + i, j) = b.basis().at(i, j);
    block.rref_in_place();
    std::vector<std::vector<Rational>> inter;
    for (std::size_t i = 0; i < block.rows(); ++i) {
        bool left_zero = true;
        for (std::size_t j = 0; j < n && left_zero; ++j)
            if (block.at(i, j) != 0) left_zero = false;
        if (!left_zero) continue;
        std::vector<Rational> v(n);
        bool nonzero = false;
        for (std::size_t j = 0; j < n; ++j) {
            v[j] = block.at(i, n + j);
            if (v[j] != 0) nonzero = true;
        }
        if (nonzero) inter.push_back(std::move(v));
    }
    return SubspaceQ::span_rows(n, inter);
}

SubspaceQ sum(const SubspaceQ& a, const SubspaceQ& b) {
    if (a.ambient_dim() != b.ambient_dim()) throw std::invalid_argument("ambient dimension mismatch");
    return SubspaceQ::span(a.ambient_dim(), a.basis().vstack(b.basis()));
}

bool contains(const SubspaceQ& a, const SubspaceQ& b) {
    if (a.ambient_dim() != b.ambient_dim()) throw std::invalid_argument("ambient dimension mismatch");
    if (b.dim() > a.dim()) return false;
    for (std::size_t i = 0; i < b.dim(); ++i)
        if (!a.contains_vector(b.basis().row(i))) return false;
    return true;
}

SubspaceQ apply(const MatrixQ& m, const SubspaceQ& s) {
    if (m.cols() != s.ambient_dim()) throw std::invalid_argument("map domain mismatch");
    if (s.is_zero()) return SubspaceQ::zero(m.rows());
    return SubspaceQ::span(m.rows(), s.basis() * m.transpose());
}

MatrixQ annihilator(const SubspaceQ& s) {
    // q annihilates s iff basis(s) q^T = 0.
    return s.basis().kernel();
}

}  // namespace equibundle
