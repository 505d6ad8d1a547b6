#pragma once

#include "equibundle/matrix.hpp"

namespace equibundle {

// Dense integer matrix, just enough surface for lattice computations.
class MatrixZ {
public:
    MatrixZ() = default;
    MatrixZ(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static MatrixZ identity(std::size_t n);
    static MatrixZ from_rows(const std::vector<std::vector<Integer>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Integer& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Integer& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    MatrixZ operator*(const MatrixZ& other) const;
    bool operator==(const MatrixZ& other) const;

    MatrixQ to_rational() const;
    // Inverse of a unimodular matrix (throws if the inverse is not integral).
    MatrixZ unimodular_inverse() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> data_;
};

// U * A * V = D with U, V unimodular and D diagonal with d_1 | d_2 | ...
struct SmithNormalForm {
    MatrixZ U, V, D;
    std::vector<Integer> invariant_factors() const;  // nonzero diagonal entries
    std::size_t rank() const;
};

SmithNormalForm smith_normal_form(const MatrixZ& a);

// The finitely generated abelian group Z^m / rowspace(relations), with the
// class map in Smith coordinates.
struct AbelianQuotient {
    std::size_t ambient_rank = 0;
    std::vector<Integer> torsion;  // invariant factors > 1
    std::size_t free_rank = 0;
    // Internal data for class_of.
    MatrixZ vmat;  // V of the SNF of the relations: x in L iff xV = wD
    std::vector<Integer> diag;  // all invariant factors incl. 1s
    std::size_t rel_rank = 0;

    // Canonical coordinates of the class of x: first the torsion components
    // (mod their invariant factors, entries with factor 1 dropped), then the
    // free components.
    std::vector<Integer> class_of(const std::vector<Integer>& x) const;
    bool is_trivial_class(const std::vector<Integer>& x) const;
    Integer torsion_order() const;
    bool is_finite() const { return free_rank == 0; }
    Integer order() const;  // throws if infinite
};

AbelianQuotient abelian_quotient(std::size_t ambient_rank, const MatrixZ& relations);

}  // namespace equibundle
