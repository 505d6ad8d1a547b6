#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

namespace equibundle {

using Rational = mpq_class;
using Integer = mpz_class;
using Coord = long;
using IntVec = std::vector<Coord>;

// Dense matrix over the rationals. Entries are exact; there is no floating
// point anywhere in the library.
class MatrixQ {
public:
    MatrixQ() = default;
    MatrixQ(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static MatrixQ identity(std::size_t n);
    static MatrixQ from_rows(const std::vector<std::vector<Rational>>& rows);
    static MatrixQ row_vector(const std::vector<Rational>& v);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    Rational& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::vector<Rational> row(std::size_t i) const;
    MatrixQ transpose() const;
    MatrixQ operator*(const MatrixQ& other) const;
    MatrixQ operator+(const MatrixQ& other) const;
    MatrixQ operator-(const MatrixQ& other) const;
    MatrixQ scaled(const Rational& c) const;
    bool operator==(const MatrixQ& other) const;

    bool is_zero() const;

    // Stacks rows of `below` under this matrix; column counts must agree.
    MatrixQ vstack(const MatrixQ& below) const;
    // Concatenates columns; row counts must agree.
    MatrixQ hstack(const MatrixQ& right) const;
    MatrixQ submatrix(std::size_t row0, std::size_t col0, std::size_t nrows, std::size_t ncols) const;

    // In-place Gauss-Jordan reduction to reduced row echelon form.
    // Returns the pivot column of each nonzero row, in order.
    std::vector<std::size_t> rref_in_place();
    MatrixQ rref() const;
    std::size_t rank() const;
    Rational det() const;

    // Basis of {x : M x = 0}, returned as rows.
    MatrixQ kernel() const;

    // One solution of M x = b, if any.
    bool solve(const std::vector<Rational>& b, std::vector<Rational>& x) const;

    std::string to_string() const;

    // Total ordering used for canonical sorting of canonical-form matrices.
    int compare(const MatrixQ& other) const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

Rational rational_from_string(const std::string& s);
std::string rational_to_string(const Rational& q);

}  // namespace equibundle
