#include "equibundle/filtration.hpp"

#include "equibundle/adapted.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace equibundle {

namespace {

Coord floor_rational(const Rational& q) {
    Integer f;
    mpz_fdiv_q(f.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return f.get_si();
}

Weight sub_weights(const Weight& a, const Weight& b) {
    Weight c = a;
    for (std::size_t i = 0; i < c.coords.size(); ++i) c.coords[i] -= b.coords[i];
    return c;
}

}  // namespace

Filtration Filtration::from_breakpoints(std::size_t ambient,
                                        std::vector<std::pair<Coord, SubspaceQ>> breakpoints) {
    std::sort(breakpoints.begin(), breakpoints.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    Filtration f;
    f.ambient_ = ambient;
    SubspaceQ prev = SubspaceQ::full(ambient);
    for (auto& [d, s] : breakpoints) {
        if (s.ambient_dim() != ambient) throw std::invalid_argument("filtration subspace has wrong ambient");
        if (!f.steps_.empty() && f.steps_.back().first == d) {
            if (!(f.steps_.back().second == s))
                throw std::invalid_argument("conflicting subspaces at one degree");
            continue;
        }
        if (s == prev) continue;  // no jump, canonical form drops it
        if (!contains(prev, s)) throw std::invalid_argument("filtration is not decreasing");
        f.steps_.emplace_back(d, s);
        prev = s;
    }
    if (ambient == 0) {
        f.steps_.assign(1, {1, SubspaceQ::zero(0)});
        return f;
    }
    if (f.steps_.empty() || !f.steps_.back().second.is_zero()) {
        throw std::invalid_argument("filtration is not exhaustive (must reach zero)");
    }
    return f;
}

Filtration Filtration::null_filtration(std::size_t ambient) {
    return from_breakpoints(ambient, {{1, SubspaceQ::zero(ambient)}});
}

SubspaceQ Filtration::at(Coord n) const {
    if (n < steps_.front().first) return SubspaceQ::full(ambient_);
    SubspaceQ cur = steps_.front().second;
    for (const auto& [d, s] : steps_) {
        if (d > n) break;
        cur = s;
    }
    return cur;
}

Filtration Filtration::shifted(Coord s) const {
    Filtration f = *this;
    for (auto& [d, sub] : f.steps_) d += s;
    return f;
}

std::vector<SubspaceQ> Filtration::proper_subspaces() const {
    std::vector<SubspaceQ> out;
    for (const auto& [d, s] : steps_)
        if (!s.is_zero() && !s.is_full()) out.push_back(s);
    return out;
}

FiltrationObject FiltrationObject::create(std::shared_ptr<const Rep> rep,
                                          std::shared_ptr<const Fan> fan,
                                          std::vector<Filtration> per_ray_filtrations) {
    if (per_ray_filtrations.size() != fan->rays().size())
        throw std::invalid_argument("need one filtration per fan ray");
    for (const Filtration& f : per_ray_filtrations)
        if (f.ambient_dim() != rep->dim()) throw std::invalid_argument("filtration ambient mismatch");
    FiltrationObject o;
    o.rep_ = std::move(rep);
    o.fan_ = std::move(fan);
    o.filts_ = std::move(per_ray_filtrations);
    o.chi_offset_ = o.rep_->datum()->trivial_character();
    return o;
}

CentralCharacter FiltrationObject::character_of_vector(std::size_t k) const {
    return rep_->datum()->add_characters(rep_->character_of_vector(k), chi_offset_);
}

std::optional<CentralCharacter> FiltrationObject::uniform_character() const {
    auto chi = rep_->uniform_character();
    if (!chi) return std::nullopt;
    return rep_->datum()->add_characters(*chi, chi_offset_);
}

FiltrationObject FiltrationObject::with_offset(CentralCharacter offset) const {
    FiltrationObject o = *this;
    o.chi_offset_ = std::move(offset);
    return o;
}

bool FiltrationObject::operator==(const FiltrationObject& o) const {
    return *rep_ == *o.rep_ && *fan_ == *o.fan_ && filts_ == o.filts_ && chi_offset_ == o.chi_offset_;
}

namespace {

std::string root_name(const Root& a) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < a.coords.size(); ++i) os << (i ? "," : "") << a.coords[i];
    os << ")";
    return os.str();
}

}  // namespace

CheckResult check_standard(const FiltrationObject& obj, std::size_t ray) {
    const Rep& rep = *obj.rep();
    const RootDatum& datum = *rep.datum();
    if (ray >= obj.fan()->rays().size()) throw std::invalid_argument("unknown ray");
    const Coweight& tau = obj.fan()->rays()[ray];
    const Filtration& f = obj.filtration(ray);

    ParabolicSplit split = datum.parabolic_split(tau);
    std::vector<Root> stable_roots = split.level_zero;
    stable_roots.insert(stable_roots.end(), split.level_positive.begin(), split.level_positive.end());
    std::vector<std::pair<Root, MatrixQ>> actions;
    for (const Root& a : stable_roots) actions.emplace_back(a, rep.root_action(a));

    for (const auto& [deg, s] : f.steps()) {
        if (s.is_zero() || s.is_full()) continue;
        // torus stability: weight-space components must fill the subspace
        SubspaceQ wsum = SubspaceQ::zero(rep.dim());
        for (const Weight& mu : rep.distinct_weights())
            wsum = sum(wsum, intersect(s, rep.weight_space(mu)));
        if (!(wsum == s)) {
            std::ostringstream os;
            os << "ray " << ray << ": F(" << deg << ") is not spanned by weight vectors";
            return {false, os.str()};
        }
        for (const auto& [alpha, m] : actions) {
            if (!contains(s, apply(m, s))) {
                std::ostringstream os;
                os << "ray " << ray << ": F(" << deg << ") is not stable under root " << root_name(alpha);
                return {false, os.str()};
            }
        }
    }
    return {true, ""};
}

CheckResult check_transversal(const FiltrationObject& obj, std::size_t ray) {
    const Rep& rep = *obj.rep();
    const RootDatum& datum = *rep.datum();
    if (ray >= obj.fan()->rays().size()) throw std::invalid_argument("unknown ray");
    const Coweight& tau = obj.fan()->rays()[ray];
    const Filtration& f = obj.filtration(ray);

    ParabolicSplit split = datum.parabolic_split(tau);
    for (const Root& alpha : split.level_negative) {
        Rational level = datum.pairing(tau, alpha);
        if (level.get_den() != 1) throw std::invalid_argument("ray pairs non-integrally with a root");
        Coord c = level.get_num().get_si();
        MatrixQ m = rep.root_action(alpha);
        // Each constant piece is checked at its top degree (the strongest n):
        // the implicit full piece tops out just below the first breakpoint,
        // the k-th stored piece just below the next stored degree.
        for (std::size_t k = 0; k < f.steps().size(); ++k) {
            Coord top;
            SubspaceQ s = SubspaceQ::full(rep.dim());
            if (k == 0) {
                top = f.steps().front().first - 1;
            } else {
                top = f.steps()[k].first - 1;
                s = f.steps()[k - 1].second;
            }
            if (s.is_zero()) continue;
            if (!contains(f.at(top + c), apply(m, s))) {
                std::ostringstream os;
                os << "ray " << ray << ": root " << root_name(alpha) << " maps F(" << top
                   << ") outside F(" << top + c << ")";
                return {false, os.str()};
            }
        }
    }
    return {true, ""};
}

bool check_distributive(const FiltrationObject& obj, const std::vector<std::size_t>& cone_rays) {
    if (cone_rays.empty()) return true;
    std::vector<std::vector<SubspaceQ>> chains;
    for (std::size_t ray : cone_rays) {
        std::vector<SubspaceQ> chain;
        for (const auto& [d, s] : obj.filtration(ray).steps()) chain.push_back(s);
        chains.push_back(std::move(chain));
    }
    return common_adapted_basis_chains(obj.rep()->dim(), chains).found();
}

bool ValidationReport::all_standard() const {
    return std::all_of(standard_per_ray.begin(), standard_per_ray.end(),
                       [](const CheckResult& c) { return c.ok; });
}
bool ValidationReport::all_transversal() const {
    return std::all_of(transversal_per_ray.begin(), transversal_per_ray.end(),
                       [](const CheckResult& c) { return c.ok; });
}
bool ValidationReport::all_distributive() const {
    return std::all_of(distributive_per_cone.begin(), distributive_per_cone.end(),
                       [](bool b) { return b; });
}
std::vector<std::string> ValidationReport::failures() const {
    std::vector<std::string> out;
    for (const auto& c : standard_per_ray)
        if (!c.ok) out.push_back(c.failure);
    for (const auto& c : transversal_per_ray)
        if (!c.ok) out.push_back(c.failure);
    for (std::size_t i = 0; i < distributive_per_cone.size(); ++i)
        if (!distributive_per_cone[i])
            out.push_back("cone " + std::to_string(i) + " breakpoints admit no adapted basis");
    return out;
}

ValidationReport validate(const FiltrationObject& obj, ExecMode mode) {
    ValidationReport rep;
    std::size_t nrays = obj.fan()->rays().size();
    std::size_t ncones = obj.fan()->max_cones().size();
    rep.standard_per_ray.resize(nrays);
    rep.transversal_per_ray.resize(nrays);
    rep.distributive_per_cone.assign(ncones, false);

    parallel_for(nrays + ncones, mode, [&](std::size_t i) {
        if (i < nrays) {
            rep.standard_per_ray[i] = check_standard(obj, i);
            rep.transversal_per_ray[i] = rep.standard_per_ray[i].ok
                                             ? check_transversal(obj, i)
                                             : CheckResult{false, "standardness not established"};
        } else {
            std::size_t c = i - nrays;
            rep.distributive_per_cone[c] = check_distributive(obj, obj.fan()->max_cones()[c]);
        }
    });

    if (rep.all_standard() && rep.all_distributive())
        rep.cls = rep.all_transversal() ? ObjectClass::Full : ObjectClass::LOnly;
    else
        rep.cls = ObjectClass::NotAnObject;
    return rep;
}

FiltrationObject f_null(std::shared_ptr<const Rep> rep, std::shared_ptr<const Fan> fan) {
    std::vector<Filtration> filts(fan->rays().size(), Filtration::null_filtration(rep->dim()));
    return FiltrationObject::create(std::move(rep), std::move(fan), std::move(filts));
}

FiltrationObject f_max(std::shared_ptr<const Rep> rep, std::shared_ptr<const Fan> fan) {
    auto pieces = rep->irreducible_decomposition();
    std::vector<Filtration> filts;
    for (const Coweight& tau : fan->rays()) {
        // degree n collects piece components with <tau, mu - lowest> = n
        std::map<Coord, SubspaceQ> graded;
        for (const auto& p : pieces) {
            for (const auto& [wc, comp] : p.weight_components) {
                Rational deg = rep->datum()->pairing(tau, sub_weights(Weight{wc}, p.lowest));
                if (deg.get_den() != 1) throw std::logic_error("weight ladder pairs non-integrally");
                Coord n = deg.get_num().get_si();
                auto it = graded.find(n);
                if (it == graded.end())
                    graded.emplace(n, comp);
                else
                    it->second = sum(it->second, comp);
            }
        }
        // F(m) = sum of pieces graded >= m: it jumps just above each realized
        // degree, so store (n + 1, suffix sum strictly above n).
        std::vector<std::pair<Coord, SubspaceQ>> breakpoints;
        SubspaceQ acc = SubspaceQ::zero(rep->dim());
        for (auto it = graded.rbegin(); it != graded.rend(); ++it) {
            breakpoints.emplace_back(it->first + 1, acc);
            acc = sum(acc, it->second);
        }
        if (graded.empty()) breakpoints.emplace_back(1, SubspaceQ::zero(rep->dim()));
        filts.push_back(Filtration::from_breakpoints(rep->dim(), std::move(breakpoints)));
    }
    return FiltrationObject::create(std::move(rep), std::move(fan), std::move(filts));
}

FiltrationObject f_can(std::shared_ptr<const Rep> rep, std::shared_ptr<const Fan> fan) {
    auto chi = rep->uniform_character();
    if (!chi || !rep->datum()->is_trivial_character(*chi))
        throw std::invalid_argument("canonical filtration needs a trivial central character");
    std::vector<Filtration> filts;
    for (const Coweight& tau : fan->rays()) {
        std::map<Rational, SubspaceQ> graded;
        Rational lo = 0, hi = 0;
        for (const Weight& mu : rep->distinct_weights()) {
            Rational p = rep->datum()->pairing(tau, mu);
            auto it = graded.find(p);
            if (it == graded.end())
                graded.emplace(p, rep->weight_space(mu));
            else
                it->second = sum(it->second, rep->weight_space(mu));
            lo = std::min(lo, p);
            hi = std::max(hi, p);
        }
        // F(n) = sum of weight spaces pairing >= 2n against the ray
        Coord nmin = floor_rational(lo / 2), nmax = floor_rational(hi / 2) + 1;
        std::vector<std::pair<Coord, SubspaceQ>> breakpoints;
        for (Coord n = nmin; n <= nmax; ++n) {
            SubspaceQ s = SubspaceQ::zero(rep->dim());
            for (const auto& [p, space] : graded)
                if (p >= Rational(2) * Rational(n)) s = sum(s, space);
            breakpoints.emplace_back(n, s);
        }
        filts.push_back(Filtration::from_breakpoints(rep->dim(), std::move(breakpoints)));
    }
    return FiltrationObject::create(std::move(rep), std::move(fan), std::move(filts));
}

FiltrationObject twist(const FiltrationObject& obj, const Weight& lambda) {
    std::vector<Filtration> filts;
    for (std::size_t r = 0; r < obj.fan()->rays().size(); ++r) {
        Rational p = obj.rep()->datum()->pairing(obj.fan()->rays()[r], lambda);
        filts.push_back(obj.filtration(r).shifted(floor_rational(p)));
    }
    FiltrationObject out = FiltrationObject::create(obj.rep(), obj.fan(), std::move(filts));
    return out.with_offset(obj.rep()->datum()->add_characters(
        obj.chi_offset(), obj.rep()->datum()->class_of_weight(lambda)));
}

namespace {

SubspaceQ embed_block(const SubspaceQ& s, std::size_t total, std::size_t offset) {
    if (s.is_zero()) return SubspaceQ::zero(total);
    MatrixQ m(s.dim(), total);
    for (std::size_t i = 0; i < s.dim(); ++i)
        for (std::size_t j = 0; j < s.ambient_dim(); ++j) m.at(i, offset + j) = s.basis().at(i, j);
    return SubspaceQ::span(total, m);
}

}  // namespace

FiltrationObject direct_sum(const FiltrationObject& a, const FiltrationObject& b) {
    if (!(*a.fan() == *b.fan()) || a.rep()->datum() != b.rep()->datum())
        throw std::invalid_argument("direct sum needs matching fan and datum");
    if (!(a.chi_offset() == b.chi_offset()))
        throw std::invalid_argument("direct sum needs matching twist offsets");
    auto rep = std::make_shared<Rep>(direct_sum_rep(*a.rep(), *b.rep()));
    std::size_t da = a.rep()->dim(), total = rep->dim();
    std::vector<Filtration> filts;
    for (std::size_t r = 0; r < a.fan()->rays().size(); ++r) {
        std::set<Coord> degrees;
        for (const auto& [d, s] : a.filtration(r).steps()) degrees.insert(d);
        for (const auto& [d, s] : b.filtration(r).steps()) degrees.insert(d);
        std::vector<std::pair<Coord, SubspaceQ>> breakpoints;
        for (Coord d : degrees) {
            SubspaceQ s = sum(embed_block(a.filtration(r).at(d), total, 0),
                              embed_block(b.filtration(r).at(d), total, da));
            breakpoints.emplace_back(d, s);
        }
        filts.push_back(Filtration::from_breakpoints(total, std::move(breakpoints)));
    }
    FiltrationObject out = FiltrationObject::create(rep, a.fan(), std::move(filts));
    return out.with_offset(a.chi_offset());
}

std::vector<FiltrationObject> isotypical_split(const FiltrationObject& obj) {
    const Rep& rep = *obj.rep();
    // Group basis vectors by central character; the common offset shifts all
    // classes equally, so this is the weight-class partition.
    std::map<CentralCharacter, std::vector<std::size_t>> groups;
    for (std::size_t k = 0; k < rep.dim(); ++k) groups[rep.character_of_vector(k)].push_back(k);

    std::vector<FiltrationObject> out;
    for (const auto& [chi, indices] : groups) {
        std::size_t m = indices.size(), l = rep.datum()->ss_rank();
        std::vector<Weight> weights;
        for (std::size_t k : indices) weights.push_back(rep.weights()[k]);
        std::vector<MatrixQ> raise(l, MatrixQ(m, m)), lower(l, MatrixQ(m, m));
        for (std::size_t i = 0; i < l; ++i)
            for (std::size_t p = 0; p < m; ++p)
                for (std::size_t q = 0; q < m; ++q) {
                    raise[i].at(p, q) = rep.raise(i).at(indices[p], indices[q]);
                    lower[i].at(p, q) = rep.lower(i).at(indices[p], indices[q]);
                }
        auto piece_rep = std::make_shared<Rep>(Rep::create(rep.datum(), std::move(weights),
                                                           std::move(raise), std::move(lower), false));

        std::vector<std::vector<Rational>> rows;
        for (std::size_t k : indices) {
            std::vector<Rational> v(rep.dim());
            v[k] = 1;
            rows.push_back(std::move(v));
        }
        SubspaceQ block = SubspaceQ::span_rows(rep.dim(), rows);

        std::vector<Filtration> filts;
        for (std::size_t r = 0; r < obj.fan()->rays().size(); ++r) {
            std::vector<std::pair<Coord, SubspaceQ>> breakpoints;
            for (const auto& [d, s] : obj.filtration(r).steps()) {
                SubspaceQ inter = intersect(s, block);
                // the intersection's basis is supported on this block;
                // restrict coordinates to the group's columns
                MatrixQ small(inter.dim(), m);
                for (std::size_t i = 0; i < inter.dim(); ++i)
                    for (std::size_t j = 0; j < m; ++j) small.at(i, j) = inter.basis().at(i, indices[j]);
                breakpoints.emplace_back(d, SubspaceQ::span(m, small));
            }
            filts.push_back(Filtration::from_breakpoints(m, std::move(breakpoints)));
        }
        out.push_back(FiltrationObject::create(piece_rep, obj.fan(), std::move(filts))
                          .with_offset(obj.chi_offset()));
    }
    return out;
}

}  // namespace equibundle
