#pragma once

#include "equibundle/snf.hpp"

#include <memory>
#include <string>

namespace equibundle {

struct SimpleFactor {
    char family = 'A';  // A..G
    int rank = 1;
};

// Cartan type of the cover G~ = T~0 x G~s: simple factors plus the rank of
// the central torus factor.
struct CartanType {
    std::vector<SimpleFactor> factors;
    int torus_rank = 0;

    int ss_rank() const;
    int total_rank() const { return ss_rank() + torus_rank; }
    void validate() const;  // throws on invalid family/rank combinations
    std::string to_string() const;
};

// A weight of X*(T~) in fundamental-weight + torus-character coordinates.
struct Weight {
    IntVec coords;
    bool operator==(const Weight& o) const { return coords == o.coords; }
    bool operator<(const Weight& o) const { return coords < o.coords; }
};

// A coweight of X_*(T) in the computed basis of that lattice.
struct Coweight {
    IntVec coords;
    bool operator==(const Coweight& o) const { return coords == o.coords; }
};

using Root = Weight;  // roots live in X*(T)
using CentralCharacter = std::vector<Integer>;

struct ParabolicSplit {
    std::vector<Root> level_zero;      // roots of the Levi l^tau
    std::vector<Root> level_positive;  // roots of the unipotent radical u^tau_+
    std::vector<Root> level_negative;  // roots of u^tau_-
};

// Root system data plus the sandwich root lattice <= X*(T) <= X*(T~), with
// the Z-bilinear pairing X_*(T) x X*(T~) -> Q evaluated through the inverse
// Cartan matrix. Immutable after construction.
class RootDatum {
public:
    static std::shared_ptr<const RootDatum> build(const CartanType& type, const MatrixZ& weight_lattice_basis);
    static std::shared_ptr<const RootDatum> build_adjoint(const CartanType& type);
    static std::shared_ptr<const RootDatum> build_simply_connected(const CartanType& type);

    const CartanType& cartan() const { return type_; }
    std::size_t ss_rank() const { return ss_rank_; }
    std::size_t torus_rank() const { return torus_rank_; }
    std::size_t total_rank() const { return total_; }

    const MatrixZ& cartan_matrix() const { return cartan_; }
    const MatrixZ& weight_lattice_basis() const { return weight_basis_; }
    // Rows = a Z-basis of X_*(T) in fundamental-coweight + cochar coordinates.
    const MatrixQ& coweight_lattice_basis() const { return coweight_basis_; }

    Root simple_root(std::size_t i) const;
    const std::vector<Root>& positive_roots() const { return positive_roots_; }
    std::vector<Root> all_roots() const;
    Weight fundamental_weight(std::size_t i) const;
    Weight zero_weight() const;
    // Fundamental coweight in X_*(T) coordinates (rational in general).
    std::vector<Rational> fundamental_coweight(std::size_t i) const;

    Rational pairing(const Coweight& c, const Weight& w) const;
    bool is_dominant(const Weight& w) const;
    bool weight_in_lattice(const Weight& w) const;  // w in X*(T)
    ParabolicSplit parabolic_split(const Coweight& tau) const;

    // X*(T~)/X*(T) data: the central character group Z~(G)^vee.
    const AbelianQuotient& central_quotient() const { return central_; }
    CentralCharacter class_of_weight(const Weight& w) const;
    CentralCharacter trivial_character() const;
    CentralCharacter add_characters(const CentralCharacter& a, const CentralCharacter& b) const;
    bool is_trivial_character(const CentralCharacter& c) const;

    // Symmetrizer d with d_i A_ij = d_j A_ji (positive integers, minimal).
    const std::vector<Integer>& symmetrizer() const { return sym_; }
    // W-invariant form evaluated on weights in fundamental coordinates.
    Rational weight_form(const Weight& a, const Weight& b) const;
    // <lambda, alpha^vee> for a (not necessarily simple) root alpha.
    Rational coroot_pairing(const Root& alpha, const Weight& lambda) const;

private:
    CartanType type_;
    std::size_t ss_rank_ = 0, torus_rank_ = 0, total_ = 0;
    MatrixZ cartan_;
    MatrixQ cartan_inv_;
    MatrixZ weight_basis_;
    MatrixQ coweight_basis_;      // C = (M B^T)^{-1}
    MatrixQ coweight_basis_inv_;  // M B^T
    MatrixQ pairing_matrix_;      // blockdiag(A^{-1}, I)
    std::vector<Root> positive_roots_;
    std::vector<IntVec> positive_roots_simple_coords_;
    std::vector<Integer> sym_;
    MatrixQ weight_gram_;  // (pi_i, pi_j)
    AbelianQuotient central_;

public:
    // Positive roots as coefficient vectors over the simple roots, in the
    // same order as positive_roots().
    const std::vector<IntVec>& positive_roots_simple_coords() const { return positive_roots_simple_coords_; }

    // Decomposition of a positive root as (index of lower root, simple index)
    // along the fixed (height, lex) order; used for iterated-commutator root
    // vectors. Simple roots map to themselves.
    struct RootLadder {
        std::size_t root_index;            // index into positive_roots()
        std::size_t simple_index;          // last simple root added
        std::size_t lower_index = SIZE_MAX;  // positive root it extends, SIZE_MAX for simple
    };
    const std::vector<RootLadder>& root_ladder() const { return ladder_; }
    // Index of alpha in positive_roots(), or SIZE_MAX.
    std::size_t positive_root_index(const Root& alpha) const;

private:
    std::vector<RootLadder> ladder_;
    void enumerate_roots();
    void compute_symmetrizer();
};

MatrixZ cartan_matrix_for(const CartanType& type);

}  // namespace equibundle
