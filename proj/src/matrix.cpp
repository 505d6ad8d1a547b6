#include "equibundle/matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace equibundle {

MatrixQ MatrixQ::identity(std::size_t n) {
    MatrixQ m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

MatrixQ MatrixQ::from_rows(const std::vector<std::vector<Rational>>& rows) {
    if (rows.empty()) return MatrixQ();
    MatrixQ m(rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols_) throw std::invalid_argument("ragged rows");
        for (std::size_t j = 0; j < m.cols_; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

MatrixQ MatrixQ::row_vector(const std::vector<Rational>& v) {
    MatrixQ m(1, v.size());
    for (std::size_t j = 0; j < v.size(); ++j) m.at(0, j) = v[j];
    return m;
}

std::vector<Rational> MatrixQ::row(std::size_t i) const {
    return std::vector<Rational>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
}

MatrixQ MatrixQ::transpose() const {
    MatrixQ m(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
    return m;
}

MatrixQ MatrixQ::operator*(const MatrixQ& other) const {
    if (cols_ != other.rows_) throw std::invalid_argument("matrix product shape mismatch");
    MatrixQ m(rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational& a = at(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < other.cols_; ++j) {
                if (other.at(k, j) != 0) m.at(i, j) += a * other.at(k, j);
            }
        }
    return m;
}

MatrixQ MatrixQ::operator+(const MatrixQ& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_) throw std::invalid_argument("matrix sum shape mismatch");
    MatrixQ m(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] = data_[i] + other.data_[i];
    return m;
}

MatrixQ MatrixQ::operator-(const MatrixQ& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_) throw std::invalid_argument("matrix diff shape mismatch");
    MatrixQ m(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] = data_[i] - other.data_[i];
    return m;
}

MatrixQ MatrixQ::scaled(const Rational& c) const {
    MatrixQ m(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] = data_[i] * c;
    return m;
}

bool MatrixQ::operator==(const MatrixQ& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
}

bool MatrixQ::is_zero() const {
    for (const auto& q : data_)
        if (q != 0) return false;
    return true;
}

MatrixQ MatrixQ::vstack(const MatrixQ& below) const {
    if (rows_ == 0) return below;
    if (below.rows_ == 0) return *this;
    if (cols_ != below.cols_) throw std::invalid_argument("vstack column mismatch");
    MatrixQ m(rows_ + below.rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] = data_[i];
    for (std::size_t i = 0; i < below.data_.size(); ++i) m.data_[data_.size() + i] = below.data_[i];
    return m;
}

MatrixQ MatrixQ::hstack(const MatrixQ& right) const {
    if (rows_ != right.rows_) throw std::invalid_argument("hstack row mismatch");
    MatrixQ m(rows_, cols_ + right.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) m.at(i, j) = at(i, j);
        for (std::size_t j = 0; j < right.cols_; ++j) m.at(i, cols_ + j) = right.at(i, j);
    }
    return m;
}

MatrixQ MatrixQ::submatrix(std::size_t row0, std::size_t col0, std::size_t nrows, std::size_t ncols) const {
    MatrixQ m(nrows, ncols);
    for (std::size_t i = 0; i < nrows; ++i)
        for (std::size_t j = 0; j < ncols; ++j) m.at(i, j) = at(row0 + i, col0 + j);
    return m;
}

std::vector<std::size_t> MatrixQ::rref_in_place() {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
        std::size_t p = r;
        while (p < rows_ && at(p, c) == 0) ++p;
        if (p == rows_) continue;
        if (p != r)
            for (std::size_t j = 0; j < cols_; ++j) std::swap(at(p, j), at(r, j));
        Rational inv = 1 / at(r, c);
        for (std::size_t j = c; j < cols_; ++j) at(r, j) *= inv;
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == r || at(i, c) == 0) continue;
            Rational f = at(i, c);
            for (std::size_t j = c; j < cols_; ++j) at(i, j) -= f * at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

MatrixQ MatrixQ::rref() const {
    MatrixQ m = *this;
    m.rref_in_place();
    return m;
}

std::size_t MatrixQ::rank() const {
    MatrixQ m = *this;
    return m.rref_in_place().size();
}

Rational MatrixQ::det() const {
    if (rows_ != cols_) throw std::invalid_argument("determinant of non-square matrix");
    MatrixQ m = *this;
    Rational d = 1;
    for (std::size_t c = 0; c < cols_; ++c) {
        std::size_t p = c;
        while (p < rows_ && m.at(p, c) == 0) ++p;
        if (p == rows_) return 0;
        if (p != c) {
            for (std::size_t j = 0; j < cols_; ++j) std::swap(m.at(p, j), m.at(c, j));
            d = -d;
        }
        d *= m.at(c, c);
        Rational inv = 1 / m.at(c, c);
        for (std::size_t i = c + 1; i < rows_; ++i) {
            if (m.at(i, c) == 0) continue;
            Rational f = m.at(i, c) * inv;
            for (std::size_t j = c; j < cols_; ++j) m.at(i, j) -= f * m.at(c, j);
        }
    }
    return d;
}

MatrixQ MatrixQ::kernel() const {
    MatrixQ m = *this;
    std::vector<std::size_t> pivots = m.rref_in_place();
    std::vector<bool> is_pivot(cols_, false);
    for (std::size_t c : pivots) is_pivot[c] = true;
    std::size_t nfree = cols_ - pivots.size();
    MatrixQ k(nfree, cols_);
    std::size_t kr = 0;
    for (std::size_t c = 0; c < cols_; ++c) {
        if (is_pivot[c]) continue;
        k.at(kr, c) = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) k.at(kr, pivots[r]) = -m.at(r, c);
        ++kr;
    }
    return k;
}

bool MatrixQ::solve(const std::vector<Rational>& b, std::vector<Rational>& x) const {
    if (b.size() != rows_) throw std::invalid_argument("solve rhs size mismatch");
    MatrixQ aug(rows_, cols_ + 1);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
        aug.at(i, cols_) = b[i];
    }
    std::vector<std::size_t> pivots = aug.rref_in_place();
    x.assign(cols_, Rational(0));
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        if (pivots[r] == cols_) return false;  // inconsistent row 0...0 | 1
        x[pivots[r]] = aug.at(r, cols_);
    }
    return true;
}

std::string MatrixQ::to_string() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i ? "; " : "");
        for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << at(i, j).get_str();
    }
    os << "]";
    return os.str();
}

int MatrixQ::compare(const MatrixQ& other) const {
    if (rows_ != other.rows_) return rows_ < other.rows_ ? -1 : 1;
    if (cols_ != other.cols_) return cols_ < other.cols_ ? -1 : 1;
    for (std::size_t i = 0; i < data_.size(); ++i) {
        int c = cmp(data_[i], other.data_[i]);
        if (c != 0) return c;
    }
    return 0;
}

Rational rational_from_string(const std::string& s) {
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
    q.canonicalize();
    return q;
}

std::string rational_to_string(const Rational& q) { return q.get_str(); }

}  // namespace equibundle
