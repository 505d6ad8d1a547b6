#pragma once

#include "equibundle/matrix.hpp"

namespace equibundle {

// Linear subspace of Q^n in canonical form: the stored basis is the RREF of
// any spanning set, with strictly increasing pivot columns and no zero rows.
// Two SubspaceQ are mathematically equal iff they compare equal.
class SubspaceQ {
public:
    SubspaceQ() = default;

    static SubspaceQ zero(std::size_t ambient);
    static SubspaceQ full(std::size_t ambient);
    // Canonicalizes the row space of `vectors` (each row one spanning vector).
    static SubspaceQ span(std::size_t ambient, const MatrixQ& vectors);
    static SubspaceQ span_rows(std::size_t ambient, const std::vector<std::vector<Rational>>& rows);

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.rows(); }
    const MatrixQ& basis() const { return basis_; }

    bool is_zero() const { return dim() == 0; }
    bool is_full() const { return dim() == ambient_; }

    bool operator==(const SubspaceQ& other) const {
        return ambient_ == other.ambient_ && basis_ == other.basis_;
    }
    bool operator<(const SubspaceQ& other) const;

    bool contains_vector(const std::vector<Rational>& v) const;

    std::string to_string() const;

private:
    std::size_t ambient_ = 0;
    MatrixQ basis_;  // RREF, rows = basis vectors
};

SubspaceQ intersect(const SubspaceQ& a, const SubspaceQ& b);
SubspaceQ sum(const SubspaceQ& a, const SubspaceQ& b);
// true iff b is contained in a
bool contains(const SubspaceQ& a, const SubspaceQ& b);

// Image of s under the linear map with matrix m (columns index the ambient
// space of s): row space of basis(s) * m^T.
SubspaceQ apply(const MatrixQ& m, const SubspaceQ& s);

// Rows spanning the annihilator {q : q.v = 0 for all v in s}.
MatrixQ annihilator(const SubspaceQ& s);

}  // namespace equibundle
