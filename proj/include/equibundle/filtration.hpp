#pragma once

#include "equibundle/fan.hpp"
#include "equibundle/parallel.hpp"
#include "equibundle/rep.hpp"

namespace equibundle {

// Decreasing exhaustive Z-filtration stored by breakpoints: value is the
// full space below the first stored degree, the subspace of the largest
// stored degree <= n otherwise; the last stored subspace must be zero.
class Filtration {
public:
    // Breakpoints (degree d, subspace S) mean F(d) = S (constant until the
    // next stored degree). Canonicalizes; throws if the data is not strictly
    // decreasing or not exhaustive.
    static Filtration from_breakpoints(std::size_t ambient,
                                       std::vector<std::pair<Coord, SubspaceQ>> breakpoints);
    static Filtration null_filtration(std::size_t ambient);  // V at n<=0, 0 at n>=1

    std::size_t ambient_dim() const { return ambient_; }
    const std::vector<std::pair<Coord, SubspaceQ>>& steps() const { return steps_; }
    SubspaceQ at(Coord n) const;
    Coord first_degree() const { return steps_.front().first; }
    Coord zero_degree() const { return steps_.back().first; }
    Filtration shifted(Coord s) const;
    // Proper subspaces appearing in the filtration (excludes full and zero).
    std::vector<SubspaceQ> proper_subspaces() const;

    bool operator==(const Filtration& o) const {
        return ambient_ == o.ambient_ && steps_ == o.steps_;
    }

private:
    std::size_t ambient_ = 0;
    std::vector<std::pair<Coord, SubspaceQ>> steps_;
};

// An object of the linear-algebra category: a module with one filtration per
// fan ray. The central character of a basis vector is the class of its
// weight shifted by the twist offset.
class FiltrationObject {
public:
    static FiltrationObject create(std::shared_ptr<const Rep> rep, std::shared_ptr<const Fan> fan,
                                   std::vector<Filtration> per_ray_filtrations);

    const std::shared_ptr<const Rep>& rep() const { return rep_; }
    const std::shared_ptr<const Fan>& fan() const { return fan_; }
    const Filtration& filtration(std::size_t ray) const { return filts_.at(ray); }
    const std::vector<Filtration>& filtrations() const { return filts_; }
    const CentralCharacter& chi_offset() const { return chi_offset_; }

    CentralCharacter character_of_vector(std::size_t k) const;
    std::optional<CentralCharacter> uniform_character() const;

    FiltrationObject with_offset(CentralCharacter offset) const;
    bool operator==(const FiltrationObject& o) const;

private:
    std::shared_ptr<const Rep> rep_;
    std::shared_ptr<const Fan> fan_;
    std::vector<Filtration> filts_;
    CentralCharacter chi_offset_;
};

struct CheckResult {
    bool ok = true;
    std::string failure;  // names the offending ray/root/degree when not ok
};

// Stability of every filtration step under the torus and the nonnegative-
// level root vectors of the ray.
CheckResult check_standard(const FiltrationObject& obj, std::size_t ray);
// e_alpha F(n) <= F(n + <tau, alpha>) for all negative-level roots alpha.
CheckResult check_transversal(const FiltrationObject& obj, std::size_t ray);
// Common adapted basis for all breakpoint subspaces of the cone's rays.
bool check_distributive(const FiltrationObject& obj, const std::vector<std::size_t>& cone_rays);

enum class ObjectClass { NotAnObject, LOnly, Full };

struct ValidationReport {
    std::vector<CheckResult> standard_per_ray;
    std::vector<CheckResult> transversal_per_ray;
    std::vector<bool> distributive_per_cone;  // per maximal cone
    ObjectClass cls = ObjectClass::NotAnObject;
    bool all_standard() const;
    bool all_transversal() const;
    bool all_distributive() const;
    std::vector<std::string> failures() const;
};

ValidationReport validate(const FiltrationObject& obj, ExecMode mode = ExecMode::Parallel);

// Constructors of distinguished objects.
FiltrationObject f_null(std::shared_ptr<const Rep> rep, std::shared_ptr<const Fan> fan);
// Maximal filtrations: per irreducible piece, weight spaces graded by the
// pairing of the ray against (weight - lowest weight).
FiltrationObject f_max(std::shared_ptr<const Rep> rep, std::shared_ptr<const Fan> fan);
// Kostant's canonical filtration on the dominant-chamber fan of an adjoint
// datum: F(n) = span of weight spaces pairing >= 2n against the ray.
FiltrationObject f_can(std::shared_ptr<const Rep> rep, std::shared_ptr<const Fan> fan);

// Degree shift by floor(<tau, lambda>) per ray; the character offset moves
// by the class of lambda.
FiltrationObject twist(const FiltrationObject& obj, const Weight& lambda);

FiltrationObject direct_sum(const FiltrationObject& a, const FiltrationObject& b);
std::vector<FiltrationObject> isotypical_split(const FiltrationObject& obj);

}  // namespace equibundle
