#include "equibundle/picard.hpp"

#include <algorithm>
#include <stdexcept>

namespace equibundle {

Integer EquivariantDivisor::coefficient(std::size_t ray) const {
    auto it = coefficients.find(ray);
    return it == coefficients.end() ? Integer(0) : it->second;
}

EquivariantDivisor EquivariantDivisor::operator+(const EquivariantDivisor& o) const {
    EquivariantDivisor d = *this;
    for (const auto& [ray, c] : o.coefficients) {
        d.coefficients[ray] += c;
        if (d.coefficients[ray] == 0) d.coefficients.erase(ray);
    }
    return d;
}

std::optional<EquivariantDivisor> RationalDivisor::as_integral() const {
    EquivariantDivisor d;
    for (const auto& [ray, c] : coefficients) {
        if (c.get_den() != 1) return std::nullopt;
        if (c != 0) d.coefficients[ray] = c.get_num();
    }
    return d;
}

PicardGroup::PicardGroup(std::shared_ptr<const Fan> fan) : fan_(std::move(fan)) {
    const RootDatum& datum = *fan_->datum();
    nrays_ = fan_->rays().size();
    nweights_ = datum.total_rank();
    // generators: D_tau (rays), then the standard basis of X*(T~);
    // one relation per basis vector of X*(T).
    MatrixZ rel(nweights_, nrays_ + nweights_);
    for (std::size_t k = 0; k < nweights_; ++k) {
        IntVec wk(nweights_);
        for (std::size_t j = 0; j < nweights_; ++j)
            wk[j] = datum.weight_lattice_basis().at(k, j).get_si();
        Weight lambda{wk};
        for (std::size_t r = 0; r < nrays_; ++r) {
            Rational p = datum.pairing(fan_->rays()[r], lambda);
            if (p.get_den() != 1) throw std::logic_error("lattice weight pairs non-integrally with a ray");
            rel.at(k, r) = -p.get_num();
        }
        for (std::size_t j = 0; j < nweights_; ++j) rel.at(k, nrays_ + j) = wk[j];
    }
    quotient_ = abelian_quotient(nrays_ + nweights_, rel);
}

std::vector<Integer> PicardGroup::class_of_divisor(const EquivariantDivisor& d) const {
    std::vector<Integer> x(nrays_ + nweights_, Integer(0));
    for (const auto& [ray, c] : d.coefficients) {
        if (ray >= nrays_) throw std::invalid_argument("unknown ray");
        x[ray] = c;
    }
    return quotient_.class_of(x);
}

std::vector<Integer> PicardGroup::class_of_weight_lift(const Weight& lambda) const {
    if (lambda.coords.size() != nweights_) throw std::invalid_argument("weight size mismatch");
    std::vector<Integer> x(nrays_ + nweights_, Integer(0));
    for (std::size_t j = 0; j < nweights_; ++j) x[nrays_ + j] = lambda.coords[j];
    return quotient_.class_of(x);
}

std::vector<Integer> PicardGroup::add(const std::vector<Integer>& a, const std::vector<Integer>& b) const {
    if (a.size() != b.size()) throw std::invalid_argument("class size mismatch");
    std::vector<Integer> c(a.size());
    std::size_t t = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        c[i] = a[i] + b[i];
        if (t < quotient_.torsion.size()) {
            c[i] %= quotient_.torsion[t];
            if (c[i] < 0) c[i] += quotient_.torsion[t];
            ++t;
        }
    }
    return c;
}

CentralCharacter PicardGroup::kappa_of_weight_lift(const Weight& lambda) const {
    return fan_->datum()->class_of_weight(lambda);
}

CentralCharacter PicardGroup::kappa_of_divisor(const EquivariantDivisor&) const {
    return fan_->datum()->trivial_character();
}

Integer PicardGroup::cokernel_order_of_divisor_map() const {
    // quotient by the images of the D_tau as well: append the ray generators
    // to the relations.
    const RootDatum& datum = *fan_->datum();
    MatrixZ rel(nweights_ + nrays_, nrays_ + nweights_);
    for (std::size_t k = 0; k < nweights_; ++k) {
        IntVec wk(nweights_);
        for (std::size_t j = 0; j < nweights_; ++j)
            wk[j] = datum.weight_lattice_basis().at(k, j).get_si();
        Weight lambda{wk};
        for (std::size_t r = 0; r < nrays_; ++r)
            rel.at(k, r) = -datum.pairing(fan_->rays()[r], lambda).get_num();
        for (std::size_t j = 0; j < nweights_; ++j) rel.at(k, nrays_ + j) = wk[j];
    }
    for (std::size_t r = 0; r < nrays_; ++r) rel.at(nweights_ + r, r) = 1;
    AbelianQuotient q = abelian_quotient(nrays_ + nweights_, rel);
    return q.order();
}

RationalDivisor divisor_of_weight(const Fan& fan, const Weight& lambda) {
    RationalDivisor d;
    for (std::size_t r = 0; r < fan.rays().size(); ++r) {
        Rational p = fan.datum()->pairing(fan.rays()[r], lambda);
        if (p != 0) d.coefficients[r] = p;
        if (p.get_den() != 1) d.integral = false;
    }
    return d;
}

Integer boundary_weight(const EquivariantDivisor& d, std::size_t ray) {
    return -d.coefficient(ray);
}

std::vector<Weight> representative_lifts(const RootDatum& datum) {
    Integer order = datum.central_quotient().torsion_order();
    std::size_t needed = order.get_ui();
    std::map<CentralCharacter, Weight> reps;
    // dominant weights in lexicographic order of coordinates, by total size
    std::size_t n = datum.total_rank();
    for (long bound = 0; reps.size() < needed && bound <= 64; ++bound) {
        // enumerate dominant weights with max coordinate = bound, torus
        // coordinates in [-bound, bound], in lexicographic order
        std::vector<long> c(n, 0);
        std::vector<long> lo(n), hi(n);
        for (std::size_t i = 0; i < n; ++i) {
            lo[i] = i < datum.ss_rank() ? 0 : -bound;
            hi[i] = bound;
        }
        for (std::size_t i = 0; i < n; ++i) c[i] = lo[i];
        while (true) {
            if (*std::max_element(c.begin(), c.end()) == bound ||
                (bound == 0 && std::all_of(c.begin(), c.end(), [](long v) { return v == 0; }))) {
                Weight w{IntVec(c.begin(), c.end())};
                CentralCharacter chi = datum.class_of_weight(w);
                reps.try_emplace(chi, w);
            }
            std::size_t k = n;
            bool advanced = false;
            while (k-- > 0) {
                if (c[k] < hi[k]) {
                    ++c[k];
                    for (std::size_t t = k + 1; t < n; ++t) c[t] = lo[t];
                    advanced = true;
                    break;
                }
            }
            if (!advanced) break;
        }
    }
    if (reps.size() < needed) throw std::logic_error("representative search did not saturate the classes");
    std::vector<Weight> out;
    for (auto& [chi, w] : reps) out.push_back(w);
    return out;
}

}  // namespace equibundle
