#include "equibundle/fan.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace equibundle {

bool fm_feasible(std::vector<std::vector<Rational>> lhs, std::vector<Rational> rhs) {
    if (lhs.empty()) return true;
    std::size_t nvars = lhs.front().size();
    for (std::size_t v = 0; v < nvars; ++v) {
        std::vector<std::vector<Rational>> pos, neg, zero;
        std::vector<Rational> pos_r, neg_r, zero_r;
        for (std::size_t i = 0; i < lhs.size(); ++i) {
            Rational c = lhs[i][v];
            if (c > 0) {
                pos.push_back(lhs[i]);
                pos_r.push_back(rhs[i]);
            } else if (c < 0) {
                neg.push_back(lhs[i]);
                neg_r.push_back(rhs[i]);
            } else {
                zero.push_back(lhs[i]);
                zero_r.push_back(rhs[i]);
            }
        }
        std::vector<std::vector<Rational>> next = zero;
        std::vector<Rational> next_r = zero_r;
        for (std::size_t p = 0; p < pos.size(); ++p)
            for (std::size_t q = 0; q < neg.size(); ++q) {
                Rational cp = pos[p][v], cq = -neg[q][v];
                std::vector<Rational> row(nvars);
                for (std::size_t t = 0; t < nvars; ++t) row[t] = pos[p][t] * cq + neg[q][t] * cp;
                next.push_back(std::move(row));
                next_r.push_back(pos_r[p] * cq + neg_r[q] * cp);
            }
        // Dedup to limit blowup on the tiny systems we feed this.
        std::set<std::pair<std::vector<Rational>, Rational>> seen;
        std::vector<std::vector<Rational>> dl;
        std::vector<Rational> dr;
        for (std::size_t i = 0; i < next.size(); ++i) {
            if (seen.emplace(next[i], next_r[i]).second) {
                dl.push_back(next[i]);
                dr.push_back(next_r[i]);
            }
        }
        lhs = std::move(dl);
        rhs = std::move(dr);
        if (lhs.empty()) return true;
    }
    for (std::size_t i = 0; i < lhs.size(); ++i)
        if (rhs[i] < 0) return false;  // 0 <= rhs violated
    return true;
}

namespace {

// Feasibility of {A x = b, x >= 0}.
bool nonneg_solve_feasible(const std::vector<std::vector<Rational>>& a, const std::vector<Rational>& b) {
    if (a.empty()) return true;
    std::size_t nvars = a.front().size();
    std::vector<std::vector<Rational>> lhs;
    std::vector<Rational> rhs;
    for (std::size_t i = 0; i < a.size(); ++i) {
        lhs.push_back(a[i]);
        rhs.push_back(b[i]);
        std::vector<Rational> negrow(nvars);
        for (std::size_t t = 0; t < nvars; ++t) negrow[t] = -a[i][t];
        lhs.push_back(std::move(negrow));
        rhs.push_back(-b[i]);
    }
    for (std::size_t v = 0; v < nvars; ++v) {
        std::vector<Rational> row(nvars);
        row[v] = -1;
        lhs.push_back(std::move(row));
        rhs.push_back(Rational(0));
    }
    return fm_feasible(std::move(lhs), std::move(rhs));
}

}  // namespace

bool is_primitive(const Coweight& c) {
    Integer g = 0;
    for (long v : c.coords) g = gcd(g, Integer(v));
    return g == 1;
}

bool is_smooth(const RootDatum& datum, const Cone& c) {
    if (c.rays.empty()) return true;
    const std::size_t n = datum.total_rank();
    MatrixZ m(c.rays.size(), n);
    for (std::size_t i = 0; i < c.rays.size(); ++i) {
        if (c.rays[i].coords.size() != n) throw std::invalid_argument("ray coordinate size mismatch");
        for (std::size_t j = 0; j < n; ++j) m.at(i, j) = c.rays[i].coords[j];
    }
    SmithNormalForm s = smith_normal_form(m);
    std::vector<Integer> f = s.invariant_factors();
    if (f.size() != c.rays.size()) return false;  // dependent generators
    return std::all_of(f.begin(), f.end(), [](const Integer& d) { return d == 1; });
}

bool is_strongly_convex(const Cone& c) {
    if (c.rays.empty()) return true;
    // Nonzero nonnegative combination summing to zero, normalized.
    std::size_t k = c.rays.size(), n = c.rays.front().coords.size();
    std::vector<std::vector<Rational>> a(n + 1, std::vector<Rational>(k));
    std::vector<Rational> b(n + 1, Rational(0));
    for (std::size_t j = 0; j < k; ++j)
        for (std::size_t i = 0; i < n; ++i) a[i][j] = Rational(c.rays[j].coords[i]);
    for (std::size_t j = 0; j < k; ++j) a[n][j] = 1;
    b[n] = 1;
    return !nonneg_solve_feasible(a, b);
}

bool cone_contains(const Cone& c, const std::vector<Rational>& v) {
    std::size_t n = v.size();
    if (c.rays.empty()) return std::all_of(v.begin(), v.end(), [](const Rational& q) { return q == 0; });
    std::size_t k = c.rays.size();
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(k));
    for (std::size_t j = 0; j < k; ++j)
        for (std::size_t i = 0; i < n; ++i) a[i][j] = Rational(c.rays[j].coords[i]);
    return nonneg_solve_feasible(a, v);
}

std::shared_ptr<const Fan> Fan::from_max_cones(std::shared_ptr<const RootDatum> datum,
                                               std::vector<Coweight> rays,
                                               std::vector<std::vector<std::size_t>> max_cones) {
    auto f = std::make_shared<Fan>();
    const std::size_t n = datum->total_rank();
    for (const Coweight& r : rays)
        if (r.coords.size() != n) throw std::invalid_argument("ray coordinate size mismatch");
    for (auto& cone : max_cones) {
        std::sort(cone.begin(), cone.end());
        cone.erase(std::unique(cone.begin(), cone.end()), cone.end());
        for (std::size_t i : cone)
            if (i >= rays.size()) throw std::invalid_argument("cone references unknown ray");
    }
    if (max_cones.empty()) max_cones.push_back({});
    f->datum_ = std::move(datum);
    f->rays_ = std::move(rays);
    f->max_cones_ = std::move(max_cones);
    return f;
}

std::shared_ptr<const Fan> Fan::sigma0(std::shared_ptr<const RootDatum> datum) {
    if (datum->ss_rank() == 0) throw std::invalid_argument("sigma0 needs a nonempty semisimple part");
    std::vector<Coweight> rays;
    for (std::size_t i = 0; i < datum->ss_rank(); ++i) {
        // primitive generator of the ray through omega_i^vee inside X_*(T)
        std::vector<Rational> x = datum->fundamental_coweight(i);
        Integer denom = 1;
        for (const auto& q : x) denom = lcm(denom, q.get_den());
        std::vector<Integer> z(x.size());
        Integer g = 0;
        for (std::size_t j = 0; j < x.size(); ++j) {
            z[j] = x[j].get_num() * (denom / x[j].get_den());
            g = gcd(g, z[j]);
        }
        IntVec coords(x.size());
        for (std::size_t j = 0; j < x.size(); ++j) coords[j] = Integer(z[j] / g).get_si();
        rays.push_back(Coweight{coords});
    }
    std::vector<std::size_t> top(rays.size());
    std::iota(top.begin(), top.end(), 0);
    return from_max_cones(datum, std::move(rays), {top});
}

std::shared_ptr<const Fan> Fan::origin_only(std::shared_ptr<const RootDatum> datum) {
    return from_max_cones(datum, {}, {{}});
}

Cone Fan::cone_of(const std::vector<std::size_t>& ray_indices) const {
    Cone c;
    for (std::size_t i : ray_indices) c.rays.push_back(rays_.at(i));
    return c;
}

bool Fan::operator==(const Fan& other) const {
    return rays_.size() == other.rays_.size() &&
           std::equal(rays_.begin(), rays_.end(), other.rays_.begin(),
                      [](const Coweight& a, const Coweight& b) { return a.coords == b.coords; }) &&
           max_cones_ == other.max_cones_;
}

bool maps_to_sigma0(const Fan& fan) {
    const RootDatum& d = *fan.datum();
    for (const Coweight& tau : fan.rays())
        for (std::size_t j = 0; j < d.ss_rank(); ++j)
            if (d.pairing(tau, d.simple_root(j)) < 0) return false;
    return true;
}

namespace {

// Simplicial cones meet in a common face iff no common point pays a positive
// value to the dual functional of c1's unshared rays.
bool pairwise_face_ok(const Fan& fan, const std::vector<std::size_t>& c1,
                      const std::vector<std::size_t>& c2) {
    std::vector<std::size_t> shared;
    std::set_intersection(c1.begin(), c1.end(), c2.begin(), c2.end(), std::back_inserter(shared));
    std::vector<std::size_t> extra1;
    std::set_difference(c1.begin(), c1.end(), shared.begin(), shared.end(), std::back_inserter(extra1));
    if (extra1.empty()) return true;  // c1 is a face of c2 already

    const std::size_t n = fan.datum()->total_rank();
    std::size_t k1 = c1.size();
    MatrixQ r(k1, n);
    for (std::size_t i = 0; i < k1; ++i)
        for (std::size_t j = 0; j < n; ++j) r.at(i, j) = Rational(fan.rays()[c1[i]].coords[j]);
    MatrixQ gram = r * r.transpose();
    MatrixQ aug = gram.hstack(MatrixQ::identity(k1));
    if (aug.rref_in_place().size() != k1) return true;  // non-simplicial; reported elsewhere
    MatrixQ gram_inv = aug.submatrix(0, k1, k1, k1);
    MatrixQ duals = gram_inv * r;  // row i pairs to delta_ij with c1's rays

    std::vector<Rational> w(n, Rational(0));
    for (std::size_t i = 0; i < k1; ++i) {
        bool is_shared = std::find(shared.begin(), shared.end(), c1[i]) != shared.end();
        if (is_shared) continue;
        for (std::size_t j = 0; j < n; ++j) w[j] += duals.at(i, j);
    }

    // x = sum a_i r1_i = sum b_j r2_j, a,b >= 0, w.x = 1: feasible iff the
    // intersection leaves the shared face.
    std::size_t k2 = c2.size();
    std::size_t nv = k1 + k2;
    std::vector<std::vector<Rational>> eq;
    std::vector<Rational> rhs;
    for (std::size_t coord = 0; coord < n; ++coord) {
        std::vector<Rational> row(nv, Rational(0));
        for (std::size_t i = 0; i < k1; ++i) row[i] = Rational(fan.rays()[c1[i]].coords[coord]);
        for (std::size_t j = 0; j < k2; ++j) row[k1 + j] = -Rational(fan.rays()[c2[j]].coords[coord]);
        eq.push_back(std::move(row));
        rhs.push_back(Rational(0));
    }
    std::vector<Rational> wrow(nv, Rational(0));
    for (std::size_t i = 0; i < k1; ++i) {
        Rational val = 0;
        for (std::size_t j = 0; j < n; ++j) val += w[j] * Rational(fan.rays()[c1[i]].coords[j]);
        wrow[i] = val;
    }
    eq.push_back(std::move(wrow));
    rhs.push_back(Rational(1));
    return !nonneg_solve_feasible(eq, rhs);
}

}  // namespace

FanReport validate_fan(const Fan& fan) {
    FanReport rep;
    const RootDatum& d = *fan.datum();
    std::ostringstream msg;
    for (std::size_t i = 0; i < fan.rays().size(); ++i) {
        if (!is_primitive(fan.rays()[i])) {
            rep.primitive_rays = false;
            msg.str("");
            msg << "ray " << i << " is not primitive";
            rep.failures.push_back(msg.str());
        }
    }
    for (std::size_t ci = 0; ci < fan.max_cones().size(); ++ci) {
        Cone c = fan.cone_of(fan.max_cones()[ci]);
        if (!is_strongly_convex(c)) {
            rep.strongly_convex = false;
            msg.str("");
            msg << "cone " << ci << " is not strongly convex";
            rep.failures.push_back(msg.str());
        }
        if (!c.rays.empty()) {
            MatrixQ m(c.rays.size(), d.total_rank());
            for (std::size_t i = 0; i < c.rays.size(); ++i)
                for (std::size_t j = 0; j < d.total_rank(); ++j) m.at(i, j) = Rational(c.rays[i].coords[j]);
            if (m.rank() != c.rays.size()) {
                rep.simplicial = false;
                msg.str("");
                msg << "cone " << ci << " is not simplicial";
                rep.failures.push_back(msg.str());
            }
        }
        if (!is_smooth(d, c)) {
            rep.smooth = false;
            msg.str("");
            msg << "cone " << ci << " is not smooth";
            rep.failures.push_back(msg.str());
        }
    }
    if (rep.simplicial) {
        for (std::size_t i = 0; i < fan.max_cones().size(); ++i)
            for (std::size_t j = i + 1; j < fan.max_cones().size(); ++j) {
                if (!pairwise_face_ok(fan, fan.max_cones()[i], fan.max_cones()[j]) ||
                    !pairwise_face_ok(fan, fan.max_cones()[j], fan.max_cones()[i])) {
                    rep.pairwise_faces = false;
                    msg.str("");
                    msg << "cones " << i << " and " << j << " do not meet in a common face";
                    rep.failures.push_back(msg.str());
                }
            }
    }
    if (!maps_to_sigma0(fan)) {
        rep.to_sigma0 = false;
        rep.failures.push_back("a ray pairs negatively with a simple root");
    }
    return rep;
}

}  // namespace equibundle
