#pragma once

#include "equibundle/subspace.hpp"

#include <optional>

namespace equibundle {

enum class AdaptedStatus { Found, Absent, Indeterminate };

// A basis of the ambient space together with, for each input subspace, the
// indices of the basis vectors spanning it.
struct AdaptedBasis {
    MatrixQ vectors;  // rows = basis vectors, exactly ambient_dim of them
    std::vector<std::vector<std::size_t>> assignment;
};

struct AdaptedResult {
    AdaptedStatus status = AdaptedStatus::Absent;
    std::optional<AdaptedBasis> basis;
    bool found() const { return status == AdaptedStatus::Found; }
};

// Multigraded-dimension algorithm for a family given as a union of chains
// (each inner vector totally ordered by inclusion, any order, duplicates ok).
// Computes all multi-index intersections V(n) = cap_i F_i(n_i) and succeeds
// iff the multigraded pieces V(n) / sum_j V(n + e_j) account for the whole
// ambient dimension. The returned assignment is indexed by the flattened
// chain-major input order.
AdaptedResult common_adapted_basis_chains(std::size_t ambient,
                                          const std::vector<std::vector<SubspaceQ>>& chains);

// Lattice-closure fallback for arbitrary families: closes the family under
// sum and intersection (capped; Indeterminate beyond), tests the distributive
// law x cap (y + z) = (x cap y) + (x cap z) on all triples, and constructs a
// basis by lifting join-irreducible quotients.
AdaptedResult common_adapted_basis_bruteforce(const std::vector<SubspaceQ>& family,
                                              std::size_t closure_cap = 10000);

// Generic entry point: greedily partitions the family into chains and runs
// the multigraded algorithm; falls back to the brute-force search when the
// partition grid would be too large.
AdaptedResult common_adapted_basis(const std::vector<SubspaceQ>& family);

// Exhaustive check used by the brute-force path and the test oracles:
// closure under sum/intersect. Returns false through `capped` if the cap hit.
std::vector<SubspaceQ> lattice_closure(const std::vector<SubspaceQ>& family, std::size_t cap,
                                       bool& capped);

bool distributive_law_holds(const std::vector<SubspaceQ>& closed);

}  // namespace equibundle
