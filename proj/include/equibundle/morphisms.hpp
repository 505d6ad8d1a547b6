#pragma once

#include "equibundle/filtration.hpp"

namespace equibundle {

// Basis of the intertwiner space Hom(a, b): matrices commuting with all
// generator actions and respecting the weight grading.
std::vector<MatrixQ> hom_equivariant(const Rep& a, const Rep& b);

// Basis of the morphism space in the filtered category: intertwiners with
// f(F_a(n)) inside F_b(n) at every ray and degree, and equal twist offsets.
std::vector<MatrixQ> hom_c(const FiltrationObject& a, const FiltrationObject& b);

bool is_c_morphism(const FiltrationObject& a, const FiltrationObject& b, const MatrixQ& f);

struct StrictCheck {
    bool ok = true;
    std::string failure;
};
// Conditions (L): f(F_a(n)) = f(V_a) and F_b(n) agree on the image; and (R):
// the image joins every cone's breakpoint family in a distributive lattice.
StrictCheck is_strict_morphism(const FiltrationObject& a, const FiltrationObject& b,
                               const MatrixQ& f);

// Kostant conditions per ray and weight: the weight space dies above the
// halved-pairing threshold (convergence) and survives at it (maximality).
struct KostantVerdict {
    std::size_t ray;
    IntVec weight;
    bool convergence_ok;
    bool maximality_ok;
};
struct KostantReport {
    std::vector<KostantVerdict> verdicts;
    bool passed = false;
};
KostantReport kostant_check(const FiltrationObject& obj);

// Injective strict morphism from obj into the canonical object on the same
// module: the identity when it qualifies, otherwise a search through hom_c.
std::optional<MatrixQ> kostant_embedding(const FiltrationObject& obj, const FiltrationObject& canonical);

// Rank-one decomposition of an object with trivially-acting fiber over the
// dominant-chamber fan.
struct SplitDecomposition {
    std::vector<FiltrationObject> lines;
    MatrixQ basis;  // rows = the adapted basis witnessing the decomposition
};
struct SplitOutcome {
    std::optional<SplitDecomposition> decomposition;
    std::string obstruction;  // nonempty when absent
};
SplitOutcome split_check(const FiltrationObject& obj);

// Minimal dimension of a nontrivial representation of the simply connected
// cover, by simple type.
long minimal_rep_dim(char family, int rank);

}  // namespace equibundle
