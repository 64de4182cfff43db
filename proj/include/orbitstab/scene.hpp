#ifndef ORBITSTAB_SCENE_HPP
#define ORBITSTAB_SCENE_HPP

#include <map>
#include <string>

#include "json.hpp"

#include "orbitstab/classify.hpp"
#include "orbitstab/orbit.hpp"

namespace orbitstab {

using Json = nlohmann::ordered_json;

/// One self-describing input document: a field, named automorphism words,
/// named points and point sets, named canonical curves, and bounds.
struct Scene {
    FieldSpecPtr field;
    std::map<std::string, PlaneAut> automorphisms;
    std::map<std::string, Point> points;
    std::map<std::string, std::vector<Point>> sets;
    std::map<std::string, CurveDescriptor> curves;
    int N = 50;
    int L = 8;
    int D = 4;
    int lmax = 6;
    std::size_t bit_cap = 1000000;

    const PlaneAut& aut(const std::string& name) const;
    const Point& point(const std::string& name) const;
    const std::vector<Point>& set(const std::string& name) const;
    const CurveDescriptor& curve(const std::string& name) const;
};

Scene parse_scene(const Json& j);
Scene load_scene(const std::string& path);

FieldSpecPtr parse_field_spec(const Json& j);
UnivarPoly parse_univar(const FieldSpecPtr& spec, const Json& j);
PlaneAut parse_aut(const FieldSpecPtr& spec, const Json& j);

Json field_spec_json(const FieldSpecPtr& spec);
Json univar_json(const UnivarPoly& p);
Json aut_json(const PlaneAut& g);
Json point_json(const Point& p);

} // namespace orbitstab

#endif
