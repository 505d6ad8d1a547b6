#pragma once

#include "equibundle/root_datum.hpp"

#include <memory>
#include <string>

namespace equibundle {

// Exact feasibility of { x : lhs[i] . x <= rhs[i] } by Fourier-Motzkin
// elimination. Intended for the small systems cone checks produce.
bool fm_feasible(std::vector<std::vector<Rational>> lhs, std::vector<Rational> rhs);

struct Cone {
    std::vector<Coweight> rays;  // generators in X_*(T) coordinates
};

bool is_primitive(const Coweight& c);
// Ray generators extend to a Z-basis of X_*(T): all SNF invariant factors 1.
bool is_smooth(const RootDatum& datum, const Cone& c);
bool is_strongly_convex(const Cone& c);
// v in cone(rays)? exact nonnegative solve.
bool cone_contains(const Cone& c, const std::vector<Rational>& v);

// Fan given by maximal cones; faces are computed internally (valid fans in
// scope are simplicial, so faces are the ray subsets).
class Fan {
public:
    static std::shared_ptr<const Fan> from_max_cones(std::shared_ptr<const RootDatum> datum,
                                                     std::vector<Coweight> rays,
                                                     std::vector<std::vector<std::size_t>> max_cones);
    // Dominant Weyl co-chamber fan: rays are the primitive generators of the
    // rays through the fundamental coweights, one maximal cone spanning all.
    static std::shared_ptr<const Fan> sigma0(std::shared_ptr<const RootDatum> datum);
    static std::shared_ptr<const Fan> origin_only(std::shared_ptr<const RootDatum> datum);

    const std::shared_ptr<const RootDatum>& datum() const { return datum_; }
    const std::vector<Coweight>& rays() const { return rays_; }
    const std::vector<std::vector<std::size_t>>& max_cones() const { return max_cones_; }
    Cone cone_of(const std::vector<std::size_t>& ray_indices) const;

    bool operator==(const Fan& other) const;

private:
    std::shared_ptr<const RootDatum> datum_;
    std::vector<Coweight> rays_;
    std::vector<std::vector<std::size_t>> max_cones_;
};

// True iff the quotient image of every cone lands in a single cone of
// Sigma_0, equivalently every ray pairs nonnegatively with every simple root.
bool maps_to_sigma0(const Fan& fan);

struct FanReport {
    bool primitive_rays = true;
    bool strongly_convex = true;
    bool simplicial = true;
    bool smooth = true;
    bool pairwise_faces = true;
    bool to_sigma0 = true;
    std::vector<std::string> failures;
    bool ok() const {
        return primitive_rays && strongly_convex && simplicial && smooth && pairwise_faces && to_sigma0;
    }
};

FanReport validate_fan(const Fan& fan);

}  // namespace equibundle
