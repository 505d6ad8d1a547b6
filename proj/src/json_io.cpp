#include "equibundle/json_io.hpp"

#include <cstdlib>
#include <fstream>

namespace equibundle {

namespace {

std::string idx_path(const std::string& base, std::size_t i) {
    return base + "[" + std::to_string(i) + "]";
}

IntVec int_vector(const Json& j, const std::string& path) {
    if (!j.is_array()) throw SchemaError(path, "expected an array of integers");
    IntVec v;
    for (std::size_t i = 0; i < j.size(); ++i) {
        if (!j[i].is_number_integer()) throw SchemaError(idx_path(path, i), "expected an integer");
        v.push_back(j[i].get<long>());
    }
    return v;
}

}  // namespace

Json rational_json(const Rational& q) {
    if (q.get_den() == 1 && q.get_num().fits_slong_p()) return Json(q.get_num().get_si());
    return Json(q.get_str());
}

Rational rational_from_json(const Json& j, const std::string& path) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (j.is_string()) {
        try {
            return rational_from_string(j.get<std::string>());
        } catch (const std::invalid_argument&) {
            throw SchemaError(path, "bad rational literal " + j.get<std::string>());
        }
    }
    throw SchemaError(path, "expected an integer or a \"p/q\" string");
}

std::vector<std::string> schema_check_group(const Json& j) {
    std::vector<std::string> out;
    if (!j.is_object()) return {"group: expected an object"};
    if (!j.contains("type") || !j["type"].is_array())
        out.push_back("group.type: expected an array of [family, rank] pairs");
    else {
        for (std::size_t i = 0; i < j["type"].size(); ++i) {
            const Json& f = j["type"][i];
            if (!f.is_array() || f.size() != 2 || !f[0].is_string() || !f[1].is_number_integer())
                out.push_back("group.type[" + std::to_string(i) + "]: expected [\"A\", rank]");
        }
    }
    if (j.contains("torus_rank") && !j["torus_rank"].is_number_integer())
        out.push_back("group.torus_rank: expected an integer");
    if (!j.contains("weight_lattice"))
        out.push_back("group.weight_lattice: required (\"adjoint\", \"sc\", or an integer matrix)");
    else if (!j["weight_lattice"].is_string() && !j["weight_lattice"].is_array())
        out.push_back("group.weight_lattice: expected \"adjoint\", \"sc\", or an integer matrix");
    return out;
}

std::shared_ptr<const RootDatum> parse_group(const Json& j) {
    auto problems = schema_check_group(j);
    if (!problems.empty()) throw SchemaError("group", problems.front());
    CartanType type;
    for (const Json& f : j["type"]) {
        std::string fam = f[0].get<std::string>();
        if (fam.size() != 1) throw SchemaError("group.type", "family must be a single letter A-G");
        type.factors.push_back({fam[0], f[1].get<int>()});
    }
    type.torus_rank = j.value("torus_rank", 0);
    type.validate();
    const Json& wl = j["weight_lattice"];
    if (wl.is_string()) {
        std::string s = wl.get<std::string>();
        if (s == "adjoint") return RootDatum::build_adjoint(type);
        if (s == "sc") return RootDatum::build_simply_connected(type);
        throw SchemaError("group.weight_lattice", "unknown shorthand " + s);
    }
    std::size_t n = static_cast<std::size_t>(type.total_rank());
    if (wl.size() != n) throw SchemaError("group.weight_lattice", "expected " + std::to_string(n) + " rows");
    MatrixZ b(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        IntVec row = int_vector(wl[i], idx_path("group.weight_lattice", i));
        if (row.size() != n)
            throw SchemaError(idx_path("group.weight_lattice", i), "expected " + std::to_string(n) + " entries");
        for (std::size_t k = 0; k < n; ++k) b.at(i, k) = row[k];
    }
    return RootDatum::build(type, b);
}

std::vector<std::string> schema_check_fan(const Json& j) {
    std::vector<std::string> out;
    if (!j.is_object()) return {"fan: expected an object"};
    if (!j.contains("rays") || !j["rays"].is_array())
        out.push_back("fan.rays: expected an array of integer vectors");
    if (!j.contains("max_cones") || !j["max_cones"].is_array())
        out.push_back("fan.max_cones: expected an array of ray index lists");
    if (j.contains("rays") && j["rays"].is_array() && j.contains("max_cones") && j["max_cones"].is_array()) {
        std::size_t nrays = j["rays"].size();
        for (std::size_t c = 0; c < j["max_cones"].size(); ++c) {
            const Json& cone = j["max_cones"][c];
            if (!cone.is_array()) {
                out.push_back(idx_path("fan.max_cones", c) + ": expected an array of ray indices");
                continue;
            }
            for (const Json& e : cone)
                if (!e.is_number_unsigned() || e.get<std::size_t>() >= nrays)
                    out.push_back(idx_path("fan.max_cones", c) + ": ray index out of range");
        }
    }
    return out;
}

std::shared_ptr<const Fan> parse_fan(const Json& j, std::shared_ptr<const RootDatum> datum) {
    auto problems = schema_check_fan(j);
    if (!problems.empty()) throw SchemaError("fan", problems.front());
    std::vector<Coweight> rays;
    for (std::size_t i = 0; i < j["rays"].size(); ++i)
        rays.push_back(Coweight{int_vector(j["rays"][i], idx_path("fan.rays", i))});
    std::vector<std::vector<std::size_t>> cones;
    for (const Json& cone : j["max_cones"]) cones.push_back(cone.get<std::vector<std::size_t>>());
    return Fan::from_max_cones(std::move(datum), std::move(rays), std::move(cones));
}

std::vector<std::string> schema_check_rep(const Json& j) {
    std::vector<std::string> out;
    if (!j.is_object()) return {"rep: expected an object"};
    if (j.contains("construct")) {
        if (!j["construct"].is_string()) out.push_back("rep.construct: expected a string");
        return out;
    }
    if (!j.contains("weights") || !j["weights"].is_array())
        out.push_back("rep.weights: expected an array of integer vectors");
    if (!j.contains("generators") || !j["generators"].is_object())
        out.push_back("rep.generators: expected an object with e1, f1, ...");
    return out;
}

namespace {

MatrixQ parse_matrix(const Json& j, const std::string& path, std::size_t dim) {
    if (!j.is_array() || j.size() != dim) throw SchemaError(path, "expected " + std::to_string(dim) + " rows");
    MatrixQ m(dim, dim);
    for (std::size_t r = 0; r < dim; ++r) {
        if (!j[r].is_array() || j[r].size() != dim)
            throw SchemaError(idx_path(path, r), "expected " + std::to_string(dim) + " entries");
        for (std::size_t c = 0; c < dim; ++c) m.at(r, c) = rational_from_json(j[r][c], idx_path(path, r));
    }
    return m;
}

}  // namespace

std::shared_ptr<const Rep> parse_rep(const Json& j, std::shared_ptr<const RootDatum> datum,
                                     std::size_t max_dim) {
    auto problems = schema_check_rep(j);
    if (!problems.empty()) throw SchemaError("rep", problems.front());

    if (j.contains("construct")) {
        std::string kind = j["construct"].get<std::string>();
        Rep r = [&]() {
            if (kind == "trivial") return Rep::trivial(datum);
            if (kind == "adjoint") return Rep::adjoint_rep_A(datum);
            if (kind == "sl2") {
                if (!j.contains("n") || !j["n"].is_number_integer())
                    throw SchemaError("rep.n", "sl2 constructor needs an integer n");
                return Rep::sl2_irrep(datum, j["n"].get<long>());
            }
            if (kind == "irreducible") {
                if (!j.contains("highest_weight"))
                    throw SchemaError("rep.highest_weight", "irreducible constructor needs a weight");
                IntVec w = int_vector(j["highest_weight"], "rep.highest_weight");
                w.resize(datum->total_rank(), 0);
                return Rep::irreducible(datum, Weight{w});
            }
            throw SchemaError("rep.construct", "unknown constructor " + kind);
        }();
        if (r.dim() > max_dim) throw SchemaError("rep", "dimension exceeds the configured cap");
        return std::make_shared<Rep>(std::move(r));
    }

    std::size_t dim = j["weights"].size();
    if (dim > max_dim) throw SchemaError("rep.weights", "dimension exceeds the configured cap");
    std::vector<Weight> weights;
    for (std::size_t i = 0; i < dim; ++i) {
        IntVec w = int_vector(j["weights"][i], idx_path("rep.weights", i));
        if (w.size() != datum->total_rank())
            throw SchemaError(idx_path("rep.weights", i), "weight has wrong coordinate count");
        weights.push_back(Weight{w});
    }
    std::size_t l = datum->ss_rank();
    std::vector<MatrixQ> raise, lower;
    for (std::size_t i = 1; i <= l; ++i) {
        std::string ek = "e" + std::to_string(i), fk = "f" + std::to_string(i);
        if (!j["generators"].contains(ek) || !j["generators"].contains(fk))
            throw SchemaError("rep.generators", "missing " + ek + " or " + fk);
        raise.push_back(parse_matrix(j["generators"][ek], "rep.generators." + ek, dim));
        lower.push_back(parse_matrix(j["generators"][fk], "rep.generators." + fk, dim));
    }
    try {
        return std::make_shared<Rep>(Rep::create(std::move(datum), std::move(weights), std::move(raise),
                                                 std::move(lower), true));
    } catch (const std::invalid_argument& e) {
        throw SchemaError("rep", e.what());
    }
}

std::vector<std::string> schema_check_object(const Json& j) {
    std::vector<std::string> out;
    if (!j.is_object()) return {"object: expected an object"};
    if (!j.contains("rep"))
        out.push_back("object.rep: required");
    else {
        for (auto& p : schema_check_rep(j["rep"])) out.push_back("object." + p);
    }
    if (j.contains("fan"))
        for (auto& p : schema_check_fan(j["fan"])) out.push_back("object." + p);
    if (!j.contains("filtrations") || !j["filtrations"].is_object())
        out.push_back("object.filtrations: expected an object keyed by ray index");
    return out;
}

FiltrationObject parse_object(const Json& j, std::shared_ptr<const RootDatum> datum,
                              std::shared_ptr<const Fan> fan, std::size_t max_dim) {
    auto problems = schema_check_object(j);
    if (!problems.empty()) throw SchemaError("object", problems.front());
    if (!fan) {
        if (!j.contains("fan")) throw SchemaError("object.fan", "no fan given on the command line or inline");
        fan = parse_fan(j["fan"], datum);
    }
    std::shared_ptr<const Rep> rep = parse_rep(j["rep"], datum, max_dim);

    std::vector<Filtration> filts;
    for (std::size_t r = 0; r < fan->rays().size(); ++r) {
        std::string key = std::to_string(r);
        if (!j["filtrations"].contains(key))
            throw SchemaError("object.filtrations." + key, "missing filtration for this ray");
        const Json& bps = j["filtrations"][key];
        if (!bps.is_array()) throw SchemaError("object.filtrations." + key, "expected an array");
        std::vector<std::pair<Coord, SubspaceQ>> breakpoints;
        for (std::size_t b = 0; b < bps.size(); ++b) {
            const Json& e = bps[b];
            std::string path = "object.filtrations." + key + "[" + std::to_string(b) + "]";
            if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_array())
                throw SchemaError(path, "expected [degree, [basis vectors]]");
            std::vector<std::vector<Rational>> rows;
            for (std::size_t v = 0; v < e[1].size(); ++v) {
                const Json& vec = e[1][v];
                if (!vec.is_array() || vec.size() != rep->dim())
                    throw SchemaError(path, "basis vector has wrong length");
                std::vector<Rational> row;
                for (std::size_t t = 0; t < vec.size(); ++t)
                    row.push_back(rational_from_json(vec[t], path));
                rows.push_back(std::move(row));
            }
            breakpoints.emplace_back(e[0].get<long>(), SubspaceQ::span_rows(rep->dim(), rows));
        }
        try {
            filts.push_back(Filtration::from_breakpoints(rep->dim(), std::move(breakpoints)));
        } catch (const std::invalid_argument& e) {
            throw SchemaError("object.filtrations." + key, e.what());
        }
    }
    return FiltrationObject::create(rep, fan, std::move(filts));
}

Json object_to_json(const FiltrationObject& obj) {
    Json j;
    const Rep& rep = *obj.rep();
    Json weights = Json::array();
    for (const Weight& w : rep.weights()) weights.push_back(w.coords);
    Json gens = Json::object();
    for (std::size_t i = 0; i < rep.datum()->ss_rank(); ++i) {
        Json e = Json::array(), f = Json::array();
        for (std::size_t p = 0; p < rep.dim(); ++p) {
            Json er = Json::array(), fr = Json::array();
            for (std::size_t q = 0; q < rep.dim(); ++q) {
                er.push_back(rational_json(rep.raise(i).at(p, q)));
                fr.push_back(rational_json(rep.lower(i).at(p, q)));
            }
            e.push_back(er);
            f.push_back(fr);
        }
        gens["e" + std::to_string(i + 1)] = e;
        gens["f" + std::to_string(i + 1)] = f;
    }
    j["rep"] = Json{{"weights", weights}, {"generators", gens}};

    Json rays = Json::array();
    for (const Coweight& r : obj.fan()->rays()) rays.push_back(r.coords);
    Json cones = Json::array();
    for (const auto& c : obj.fan()->max_cones()) cones.push_back(c);
    j["fan"] = Json{{"rays", rays}, {"max_cones", cones}};

    Json filts = Json::object();
    for (std::size_t r = 0; r < obj.fan()->rays().size(); ++r) {
        Json list = Json::array();
        for (const auto& [d, s] : obj.filtration(r).steps()) {
            Json rows = Json::array();
            for (std::size_t i = 0; i < s.dim(); ++i) {
                Json row = Json::array();
                for (std::size_t t = 0; t < s.ambient_dim(); ++t)
                    row.push_back(rational_json(s.basis().at(i, t)));
                rows.push_back(row);
            }
            list.push_back(Json::array({Json(d), rows}));
        }
        filts[std::to_string(r)] = list;
    }
    j["filtrations"] = filts;
    return j;
}

Json validation_report_json(const ValidationReport& r) {
    Json j;
    Json st = Json::array(), tr = Json::array(), dist = Json::array();
    for (const auto& c : r.standard_per_ray) st.push_back(c.ok);
    for (const auto& c : r.transversal_per_ray) tr.push_back(c.ok);
    for (bool b : r.distributive_per_cone) dist.push_back(b);
    j["standard_per_ray"] = st;
    j["transversal_per_ray"] = tr;
    j["distributive_per_cone"] = dist;
    j["failures"] = r.failures();
    j["class"] = r.cls == ObjectClass::Full      ? "C(Sigma)_c"
                 : r.cls == ObjectClass::LOnly   ? "C(Sigma)_c^l-only"
                                                 : "not-an-object";
    return j;
}

Json character_table_json(const CharacterTable& t) {
    Json j = Json::object();
    for (const auto& [deg, row] : t) {
        Json r = Json::object();
        for (const auto& [w, d] : row) {
            std::string key;
            for (std::size_t i = 0; i < w.size(); ++i) key += (i ? "," : "") + std::to_string(w[i]);
            r[key] = d;
        }
        j[std::to_string(deg)] = r;
    }
    return j;
}

Json kostant_report_json(const KostantReport& r) {
    Json j;
    j["passed"] = r.passed;
    Json v = Json::array();
    for (const auto& ver : r.verdicts) {
        v.push_back(Json{{"ray", ver.ray},
                         {"weight", ver.weight},
                         {"convergence", ver.convergence_ok},
                         {"maximality", ver.maximality_ok}});
    }
    j["verdicts"] = v;
    return j;
}

Json fan_report_json(const FanReport& r) {
    return Json{{"ok", r.ok()},          {"primitive_rays", r.primitive_rays},
                {"strongly_convex", r.strongly_convex}, {"simplicial", r.simplicial},
                {"smooth", r.smooth},    {"pairwise_faces", r.pairwise_faces},
                {"maps_to_sigma0", r.to_sigma0},        {"failures", r.failures}};
}

Json picard_json(const PicardGroup& g) {
    Json j;
    j["free_rank"] = g.free_rank();
    Json tor = Json::array();
    for (const Integer& d : g.torsion()) tor.push_back(d.get_str());
    j["torsion"] = tor;
    Json gens = Json::object();
    for (std::size_t r = 0; r < g.fan()->rays().size(); ++r) {
        EquivariantDivisor d;
        d.coefficients[r] = 1;
        Json cls = Json::array();
        for (const Integer& c : g.class_of_divisor(d)) cls.push_back(c.get_str());
        gens["D" + std::to_string(r)] = cls;
    }
    j["divisor_classes"] = gens;
    j["cokernel_order_of_divisor_map"] = g.cokernel_order_of_divisor_map().get_str();
    return j;
}

Json read_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    Json j;
    try {
        in >> j;
    } catch (const Json::parse_error& e) {
        throw std::runtime_error("parse error in " + path.string() + ": " + e.what());
    }
    return j;
}

void atomic_write_json(const std::filesystem::path& path, const Json& j) {
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp);
        if (!out) throw std::runtime_error("cannot write " + tmp.string());
        out << j.dump(2) << "\n";
    }
    std::filesystem::rename(tmp, path);
}

std::size_t max_dim_from_env() {
    const char* v = std::getenv("EQUIBUNDLE_MAX_DIM");
    if (!v) return 512;
    long n = std::atol(v);
    return n > 0 ? static_cast<std::size_t>(n) : 512;
}

}  // namespace equibundle
