#pragma once

#include "equibundle/root_datum.hpp"
#include "equibundle/subspace.hpp"

#include <map>
#include <memory>
#include <optional>

namespace equibundle {

// Finite-dimensional representation with a weight-labeled basis and explicit
// Chevalley generator matrices over Q. Generators act on column vectors;
// raise(i) is e_{alpha_i}, lower(i) is e_{-alpha_i}.
class Rep {
public:
    static Rep create(std::shared_ptr<const RootDatum> datum, std::vector<Weight> weights,
                      std::vector<MatrixQ> raise, std::vector<MatrixQ> lower, bool validate = true);

    static Rep trivial(std::shared_ptr<const RootDatum> datum);
    static Rep trivial_with_weight(std::shared_ptr<const RootDatum> datum, const Weight& w);
    // Irreducible sl2 module of highest weight n; e.v_k = k(n-k+1) v_{k-1},
    // f.v_k = v_{k+1}, weights n-2k. Requires a single A1 factor.
    static Rep sl2_irrep(std::shared_ptr<const RootDatum> datum, long n);
    // i-th fundamental representation of a single A_r factor as the i-th
    // exterior power of the vector representation (1 <= i <= r).
    static Rep fundamental_rep_A(std::shared_ptr<const RootDatum> datum, std::size_t i);
    // Adjoint representation of a single A_r factor via ad on sl_{r+1};
    // basis: e_alpha (positive roots in datum order), e_{-alpha}, then h_i.
    static Rep adjoint_rep_A(std::shared_ptr<const RootDatum> datum);
    // Irreducible module of dominant highest weight, built inside a tensor
    // product of fundamental representations (A-type factors only).
    static Rep irreducible(std::shared_ptr<const RootDatum> datum, const Weight& lambda);

    const std::shared_ptr<const RootDatum>& datum() const { return datum_; }
    std::size_t dim() const { return dim_; }
    const std::vector<Weight>& weights() const { return weights_; }
    const MatrixQ& raise(std::size_t i) const { return raise_[i]; }
    const MatrixQ& lower(std::size_t i) const { return lower_[i]; }

    Rep tensor(const Rep& other) const;
    Rep highest_weight_submodule(const Weight& lambda) const;

    // Matrix of the fixed root vector e_alpha, built by left-normed
    // commutators along the deterministic root ladder.
    MatrixQ root_action(const Root& alpha) const;

    std::vector<Weight> distinct_weights() const;
    SubspaceQ weight_space(const Weight& mu) const;
    // Smallest subspace containing s and stable under all raise/lower.
    SubspaceQ submodule_closure(const SubspaceQ& s) const;
    // Joint kernel of all raising operators.
    SubspaceQ highest_weight_vectors() const;
    // Joint kernel of all lowering operators.
    SubspaceQ lowest_weight_vectors() const;

    std::optional<CentralCharacter> uniform_character() const;
    CentralCharacter character_of_vector(std::size_t k) const;

    bool operator==(const Rep& other) const;

    struct IrreduciblePiece {
        Weight highest;
        Weight lowest;
        SubspaceQ space;  // the whole piece inside the ambient rep
        std::map<IntVec, SubspaceQ> weight_components;
    };
    // Explicit decomposition into irreducible summands (cyclic closures of a
    // basis of the highest-weight-vector space).
    std::vector<IrreduciblePiece> irreducible_decomposition() const;

    void validate() const;

private:
    std::shared_ptr<const RootDatum> datum_;
    std::size_t dim_ = 0;
    std::vector<Weight> weights_;
    std::vector<MatrixQ> raise_, lower_;
};

Rep direct_sum_rep(const Rep& a, const Rep& b);

// Weyl dimension formula.
Integer weyl_dim(const RootDatum& datum, const Weight& lambda);
// Freudenthal multiplicities of all weights of V_lambda.
std::map<IntVec, Integer> freudenthal(const RootDatum& datum, const Weight& lambda);
// Dominant representative of the Weyl orbit (simple-reflection descent).
Weight dominant_representative(const RootDatum& datum, const Weight& w);

}  // namespace equibundle
