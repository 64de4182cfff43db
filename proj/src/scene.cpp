#include "orbitstab/scene.hpp"

#include <fstream>

namespace orbitstab {

namespace {

FieldElem parse_elem(const FieldSpecPtr& spec, const Json& j) {
    if (!j.is_string()) throw ParseError("field element must be a string: " + j.dump());
    return parse_field_elem(spec, j.get<std::string>());
}

[[noreturn]] void missing(const std::string& what, const std::string& name) {
    throw ParseError("unknown " + what + " \"" + name + "\"");
}

} // namespace

const PlaneAut& Scene::aut(const std::string& name) const {
    auto it = automorphisms.find(name);
    if (it == automorphisms.end()) missing("automorphism", name);
    return it->second;
}

const Point& Scene::point(const std::string& name) const {
    auto it = points.find(name);
    if (it == points.end()) missing("point", name);
    return it->second;
}

const std::vector<Point>& Scene::set(const std::string& name) const {
    auto it = sets.find(name);
    if (it == sets.end()) missing("point set", name);
    return it->second;
}

const CurveDescriptor& Scene::curve(const std::string& name) const {
    auto it = curves.find(name);
    if (it == curves.end()) missing("curve", name);
    return it->second;
}

FieldSpecPtr parse_field_spec(const Json& j) {
    if (!j.is_object() || !j.contains("kind")) throw ParseError("field declaration requires a \"kind\"");
    std::string kind = j.at("kind").get<std::string>();
    try {
        if (kind == "rationals") return FieldSpec::rationals();
        if (kind == "quad_ext") return FieldSpec::quad_ext(j.at("d").get<std::int64_t>());
        if (kind == "prime_field") return FieldSpec::prime_field(j.at("p").get<std::int64_t>());
        if (kind == "finite_ext")
            return FieldSpec::finite_ext(j.at("p").get<std::int64_t>(),
                                         j.at("modulus").get<std::vector<std::int64_t>>());
    } catch (const Json::exception& e) {
        throw ParseError(std::string("malformed field declaration: ") + e.what());
    }
    throw ParseError("unknown field kind \"" + kind + "\"");
}

UnivarPoly parse_univar(const FieldSpecPtr& spec, const Json& j) {
    if (!j.is_array()) throw ParseError("polynomial must be an array of coefficient strings (low degree first)");
    std::vector<FieldElem> coeffs;
    for (const auto& c : j) coeffs.push_back(parse_elem(spec, c));
    return UnivarPoly(spec, std::move(coeffs));
}

PlaneAut parse_aut(const FieldSpecPtr& spec, const Json& j) {
    if (!j.is_array()) throw ParseError("automorphism must be an array of generators (outermost first)");
    std::vector<Generator> word;
    for (const auto& gj : j) {
        if (!gj.is_object() || !gj.contains("type")) throw ParseError("generator requires a \"type\"");
        std::string type = gj.at("type").get<std::string>();
        if (type == "affine") {
            const auto& m = gj.at("m");
            const auto& v = gj.at("v");
            if (!m.is_array() || m.size() != 2 || !m[0].is_array() || m[0].size() != 2 || m[1].size() != 2 ||
                !v.is_array() || v.size() != 2)
                throw ParseError("affine generator requires a 2x2 matrix \"m\" and a vector \"v\"");
            word.push_back(AffineGen{parse_elem(spec, m[0][0]), parse_elem(spec, m[0][1]), parse_elem(spec, m[1][0]),
                                     parse_elem(spec, m[1][1]), parse_elem(spec, v[0]), parse_elem(spec, v[1])});
        } else if (type == "elementary") {
            word.push_back(ElementaryGen{parse_elem(spec, gj.at("a")), parse_elem(spec, gj.at("b")),
                                         parse_univar(spec, gj.value("P", Json::array()))});
        } else if (type == "swap") {
            word.push_back(SwapGen{});
        } else {
            throw ParseError("unknown generator type \"" + type + "\"");
        }
    }
    return PlaneAut::from_word(spec, std::move(word));
}

namespace {

Point parse_point(const FieldSpecPtr& spec, const Json& j) {
    if (!j.is_array() || j.size() != 2) throw ParseError("point must be a coordinate pair");
    return {parse_elem(spec, j[0]), parse_elem(spec, j[1])};
}

CurveDescriptor parse_curve(const FieldSpecPtr& spec, const Json& j) {
    if (!j.is_object() || !j.contains("type")) throw ParseError("curve requires a \"type\"");
    std::string type = j.at("type").get<std::string>();
    if (type == "1")
        return make_t1(spec, j.at("a").get<int>(), j.at("b").get<int>(), parse_elem(spec, j.at("lambda")));
    if (type == "2")
        return make_t2(spec, j.at("a").get<int>(), j.at("b").get<int>(), parse_elem(spec, j.at("lambda")));
    if (type == "3") return make_t3(spec, parse_elem(spec, j.at("lambda")));
    if (type == "4") return make_t4(spec, parse_elem(spec, j.at("lambda")), parse_elem(spec, j.at("nu")));
    if (type == "5") return make_t5(spec, parse_elem(spec, j.at("mu")));
    if (type == "6") return make_t6(spec);
    if (type == "fence") return make_fence(parse_univar(spec, j.at("P")));
    throw ParseError("unknown curve type \"" + type + "\"");
}

} // namespace

Scene parse_scene(const Json& j) {
    if (!j.is_object()) throw ParseError("scene must be a JSON object");
    if (!j.contains("field")) throw ParseError("scene requires a \"field\"");
    Scene s;
    s.field = parse_field_spec(j.at("field"));
    const Json empty = Json::object();
    const Json& auts = j.contains("automorphisms") ? j.at("automorphisms") : empty;
    for (const auto& [name, aj] : auts.items()) s.automorphisms.emplace(name, parse_aut(s.field, aj));
    const Json& points = j.contains("points") ? j.at("points") : empty;
    for (const auto& [name, pj] : points.items()) s.points.emplace(name, parse_point(s.field, pj));
    const Json& sets = j.contains("sets") ? j.at("sets") : empty;
    for (const auto& [name, sj] : sets.items()) {
        if (!sj.is_array()) throw ParseError("point set must be an array of points");
        std::vector<Point> pts;
        for (const auto& pj : sj) pts.push_back(parse_point(s.field, pj));
        s.sets.emplace(name, std::move(pts));
    }
    const Json& curves = j.contains("curves") ? j.at("curves") : empty;
    for (const auto& [name, cj] : curves.items()) s.curves.emplace(name, parse_curve(s.field, cj));
    if (j.contains("options")) {
        const auto& o = j.at("options");
        s.N = o.value("N", s.N);
        s.L = o.value("L", s.L);
        s.D = o.value("D", s.D);
        s.lmax = o.value("lmax", s.lmax);
        s.bit_cap = o.value("bit_cap", s.bit_cap);
    }
    return s;
}

Scene load_scene(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open scene file: " + path);
    Json j;
    try {
        j = Json::parse(in);
    } catch (const Json::exception& e) {
        throw ParseError("scene " + path + ": " + e.what());
    }
    try {
        return parse_scene(j);
    } catch (const ParseError& e) {
        throw ParseError("scene " + path + ": " + e.what());
    }
}

Json field_spec_json(const FieldSpecPtr& spec) {
    Json j;
    switch (spec->kind()) {
        case FieldKind::Rationals: j["kind"] = "rationals"; break;
        case FieldKind::QuadExt:
            j["kind"] = "quad_ext";
            j["d"] = spec->quad_d();
            break;
        case FieldKind::PrimeField:
            j["kind"] = "prime_field";
            j["p"] = spec->prime();
            break;
        case FieldKind::FiniteExt:
            j["kind"] = "finite_ext";
            j["p"] = spec->prime();
            j["modulus"] = spec->modulus();
            break;
    }
    return j;
}

Json univar_json(const UnivarPoly& p) {
    Json arr = Json::array();
    for (const auto& c : p.coeffs()) arr.push_back(c.str());
    return arr;
}

Json aut_json(const PlaneAut& g) {
    Json arr = Json::array();
    for (const auto& gen : g.word()) {
        Json gj;
        if (const auto* a = std::get_if<AffineGen>(&gen)) {
            gj["type"] = "affine";
            gj["m"] = Json::array({Json::array({a->m00.str(), a->m01.str()}), Json::array({a->m10.str(), a->m11.str()})});
            gj["v"] = Json::array({a->v0.str(), a->v1.str()});
        } else if (const auto* e = std::get_if<ElementaryGen>(&gen)) {
            gj["type"] = "elementary";
            gj["a"] = e->a.str();
            gj["b"] = e->b.str();
            gj["P"] = univar_json(e->P);
        } else {
            gj["type"] = "swap";
        }
        arr.push_back(std::move(gj));
    }
    return arr;
}

Json point_json(const Point& p) { return Json::array({p.x.str(), p.y.str()}); }

} // namespace orbitstab
