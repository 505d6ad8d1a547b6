#pragma once

#include "equibundle/fan.hpp"

#include <map>
#include <optional>

namespace equibundle {

// Z-linear combination of the boundary divisors D_tau, keyed by ray index.
struct EquivariantDivisor {
    std::map<std::size_t, Integer> coefficients;
    Integer coefficient(std::size_t ray) const;
    EquivariantDivisor operator+(const EquivariantDivisor& o) const;
};

// Rational divisor with an integrality flag, as produced by pairing a
// character against the rays.
struct RationalDivisor {
    std::map<std::size_t, Rational> coefficients;
    bool integral = true;
    std::optional<EquivariantDivisor> as_integral() const;
};

// The equivariant Picard group presented as
//   (free group on the D_tau and on X*(T~)) / (lambda = sum <tau,lambda> D_tau)
// for lambda running over a basis of X*(T), in Smith normal form.
class PicardGroup {
public:
    PicardGroup(std::shared_ptr<const Fan> fan);

    const AbelianQuotient& group() const { return quotient_; }
    std::size_t free_rank() const { return quotient_.free_rank; }
    const std::vector<Integer>& torsion() const { return quotient_.torsion; }

    // canonical coordinates of generators and general elements
    std::vector<Integer> class_of_divisor(const EquivariantDivisor& d) const;
    std::vector<Integer> class_of_weight_lift(const Weight& lambda) const;
    std::vector<Integer> add(const std::vector<Integer>& a, const std::vector<Integer>& b) const;

    // the character map: divisor part dies, the weight part maps to its
    // class modulo X*(T)
    CentralCharacter kappa_of_weight_lift(const Weight& lambda) const;
    CentralCharacter kappa_of_divisor(const EquivariantDivisor& d) const;

    // order of Pic / (subgroup generated by the D_tau); equals the order of
    // the central character group when the presented sequence is exact
    Integer cokernel_order_of_divisor_map() const;

    const std::shared_ptr<const Fan>& fan() const { return fan_; }

private:
    std::shared_ptr<const Fan> fan_;
    AbelianQuotient quotient_;
    std::size_t nrays_ = 0, nweights_ = 0;
};

// D^lambda = sum <tau, lambda> D_tau; integral iff all pairings are integers.
RationalDivisor divisor_of_weight(const Fan& fan, const Weight& lambda);

// The boundary torus acts on the fiber of O(D) at the ray point by -n_tau.
Integer boundary_weight(const EquivariantDivisor& d, std::size_t ray);

// Lexicographically least dominant lift of each central character class.
std::vector<Weight> representative_lifts(const RootDatum& datum);

}  // namespace equibundle
