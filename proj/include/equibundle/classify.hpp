#pragma once

#include "equibundle/morphisms.hpp"

#include <map>

namespace equibundle {

// Per-degree character table: degree -> (weight -> dimension of the weight
// component of F(degree)). Recorded between the first jump minus one and the
// degree where the filtration dies.
using CharacterTable = std::map<Coord, std::map<IntVec, std::size_t>>;

CharacterTable character_table(const FiltrationObject& obj, std::size_t ray);

struct ClassifiedObject {
    FiltrationObject object;
    CharacterTable table;
};

// All isomorphism classes of objects over the A1 wonderful fan whose module
// is the irreducible fiber of the given rank, normalized so the first jump
// sits at degree one. Enumerates the b-stable subspace chains with degree
// gaps of one or two and keeps what the validators accept; transversality
// admits no wider gaps, so the candidate set is exhaustive.
std::vector<ClassifiedObject> classify_pgl2(std::size_t rank, ExecMode mode = ExecMode::Parallel);

// Character tables agree after some common degree shift.
bool tables_match_up_to_shift(const CharacterTable& a, const CharacterTable& b);

// Signature comparison first, then an invertibility search through hom_c.
bool objects_isomorphic(const FiltrationObject& a, const FiltrationObject& b);

}  // namespace equibundle
