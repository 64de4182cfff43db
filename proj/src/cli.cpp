#include "orbitstab/cli.hpp"

#include <iostream>

#include "CLI11.hpp"

#include "orbitstab/oracle.hpp"
#include "orbitstab/scene.hpp"
#include "orbitstab/stabilizer.hpp"

namespace orbitstab {

namespace {

Json poly_list_json(const std::vector<BivarPoly>& polys) {
    Json arr = Json::array();
    for (const auto& f : polys) arr.push_back(f.str());
    return arr;
}

Json orbit_json(const OrbitSample& s) {
    Json j;
    j["base_point"] = point_json(s.base_point);
    j["bound"] = s.bound;
    if (s.periodic) j["periodic"] = *s.periodic;
    j["exhausted"] = s.exhausted;
    j["forward_truncated"] = s.forward_truncated;
    j["backward_truncated"] = s.backward_truncated;
    Json pts = Json::array();
    for (const auto& [w, q] : s.points) {
        Json e;
        e["word"] = OrbitSample::word_label(w);
        e["point"] = point_json(q);
        pts.push_back(std::move(e));
    }
    j["points"] = std::move(pts);
    return j;
}

Json closure_json(const ClosureReport& r) {
    Json j;
    switch (r.verdict) {
        case ClosureReport::Verdict::Finite: j["verdict"] = "finite"; break;
        case ClosureReport::Verdict::Curve: j["verdict"] = "curve"; break;
        case ClosureReport::Verdict::NoCurveUpToDegree: j["verdict"] = "no_curve_up_to_degree"; break;
    }
    if (r.verdict == ClosureReport::Verdict::Finite) j["finite_count"] = r.finite_count;
    if (r.curve) j["curve"] = r.curve->str();
    if (r.stable) j["stable"] = *r.stable;
    j["half_window_stable"] = r.half_window_stable;
    j["degree_bound"] = r.degree_bound;
    j["ideal_basis"] = poly_list_json(r.ideal_basis);
    return j;
}

Json hat_vs_bar_json(const HatVsBarReport& r) {
    Json j;
    j["bar_basis"] = poly_list_json(r.bar_basis);
    j["hat_basis"] = poly_list_json(r.hat_basis);
    j["galois_orbit_count"] = r.galois_orbit_count;
    j["strict"] = r.strict;
    j["cross_check_ok"] = r.cross_check_ok;
    return j;
}

Json components_json(const ComponentCycle& c) {
    Json j;
    j["ell"] = c.ell;
    j["k"] = c.k;
    j["s"] = c.k * c.ell;
    j["components"] = poly_list_json(c.components);
    j["cycle_verified"] = c.cycle_verified;
    j["product_matches_full"] = c.product_matches_full;
    j["full_closure"] = c.full_closure.str();
    return j;
}

Json expansion_json(const PlaneAut& g) {
    const auto& [f, h] = g.expand();
    return Json::array({f.str(), h.str()});
}

Json curve_desc_json(const CurveDescriptor& d) {
    Json j;
    j["type"] = curve_type_name(d.type);
    if (d.type == CurveType::T1 || d.type == CurveType::T2) {
        j["a"] = d.a;
        j["b"] = d.b;
    }
    if (d.lambda) j["lambda"] = d.lambda->str();
    if (d.nu) j["nu"] = d.nu->str();
    if (d.mu) j["mu"] = d.mu->str();
    if (d.fence_poly) j["P"] = univar_json(*d.fence_poly);
    j["defining_poly"] = d.defining_poly.str();
    j["side_conditions_ok"] = d.side_conditions_ok;
    if (!d.note.empty()) j["note"] = d.note;
    return j;
}

Json group_desc_json(const GroupDescriptor& g) {
    Json j;
    using S = GroupDescriptor::Shape;
    switch (g.shape) {
        case S::TorusWeights: j["shape"] = "torus_weights"; break;
        case S::TorusExtInvolution: j["shape"] = "torus_ext_involution"; break;
        case S::JonquieresLine: j["shape"] = "jonquieres_line"; break;
        case S::FenceFamily: j["shape"] = "fence_family"; break;
        case S::Finite: j["shape"] = "finite"; break;
        case S::LowerBoundOnly: j["shape"] = "lower_bound_only"; break;
    }
    if (g.shape == S::TorusWeights || (g.shape == S::TorusExtInvolution && g.split_torus)) {
        j["weights"] = Json::array({g.weight_a, g.weight_b});
    }
    j["split_torus"] = g.split_torus;
    if (g.involution) j["involution"] = expansion_json(*g.involution);
    switch (g.countability) {
        case GroupDescriptor::Countability::Finite: j["countability"] = "finite"; break;
        case GroupDescriptor::Countability::CountablyInfinite: j["countability"] = "countably_infinite"; break;
        case GroupDescriptor::Countability::ContinuumParametrized: j["countability"] = "continuum_parametrized"; break;
    }
    j["is_algebraic"] = g.is_algebraic;
    if (!g.elements.empty()) j["element_count"] = g.elements.size();
    j["family"] = g.note;
    return j;
}

Json params_json(const std::vector<std::vector<FieldElem>>& params) {
    Json arr = Json::array();
    for (const auto& u : params) {
        Json e = Json::array();
        for (const auto& c : u) e.push_back(c.str());
        arr.push_back(std::move(e));
    }
    return arr;
}

Json stab_json(const StabilizerDescriptor& s) {
    Json j;
    j["case"] = case_tag_name(s.case_tag);
    j["curve_type"] = curve_type_name(s.curve_type);
    j["torus_generators"] = params_json(s.torus_gens);
    if (s.coset_t) j["coset_parameter"] = params_json({*s.coset_t})[0];
    if (s.tau_p) j["tau_p"] = expansion_json(*s.tau_p);
    Json gens = Json::array();
    for (const auto& g : s.generators) gens.push_back(expansion_json(g));
    j["generators"] = std::move(gens);
    if (s.driver) j["driver"] = expansion_json(*s.driver);
    if (s.relation_exponent) j["relation_exponent"] = *s.relation_exponent;
    if (s.relation_bound) j["search_bound"] = s.relation_bound;
    j["has_kernel_part"] = s.has_kernel_part;
    j["ell"] = s.ell;
    if (s.index2_recorded) j["index2_recorded"] = true;
    j["complete"] = s.complete;
    j["is_algebraic"] = s.is_algebraic;
    Json v;
    v["window"] = s.verification.window;
    v["checks"] = s.verification.checks;
    v["all_passed"] = s.verification.all_passed;
    v["notes"] = s.verification.notes;
    j["verification"] = std::move(v);
    if (!s.note.empty()) j["note"] = s.note;
    return j;
}

Json isotropy_json(const IsotropyReport& r) {
    Json j;
    j["type"] = curve_type_name(r.type);
    j["point"] = point_json(r.p);
    Json elems = Json::array();
    for (const auto& g : r.elements) elems.push_back(expansion_json(g));
    j["elements"] = std::move(elems);
    if (r.involution) j["involution"] = expansion_json(*r.involution);
    if (r.involution_param) j["involution_parameter"] = params_json({*r.involution_param})[0];
    if (r.parametrized_family) {
        j["parametrized_family"] = "(a x, b y + P(x))";
        j["family_constraint"] = r.family_constraint;
    }
    return j;
}

Json grid_json(const VerificationGrid& g) {
    Json j;
    j["instances"] = g.instances;
    j["matches"] = g.matches;
    j["skips"] = g.skips;
    j["mismatches"] = g.mismatches;
    j["all_matched"] = g.all_matched();
    Json recs = Json::array();
    for (const auto& r : g.records) {
        Json e;
        e["field"] = r.field;
        e["type"] = r.type;
        e["params"] = r.params;
        e["point"] = r.point;
        e["subgroup"] = r.subgroup;
        if (r.skipped) e["skipped"] = true;
        if (!r.hypothesis_note.empty()) e["hypothesis_note"] = r.hypothesis_note;
        if (!r.skipped) {
            e["match"] = r.match;
            e["brute_size"] = r.brute_size;
            e["predicted_size"] = r.predicted_size;
            e["case"] = r.case_tag;
        }
        recs.push_back(std::move(e));
    }
    j["records"] = std::move(recs);
    return j;
}

struct Options {
    std::string scene_path;
    std::vector<std::string> auts;
    std::string point, curve, set_name, driver, grid = "default";
    int N = -1, L = -1, D = -1, lmax = -1, M = 6;
    bool saturate = false;
};

OrbitOptions orbit_opts(const Scene& scene) { return OrbitOptions{scene.bit_cap}; }

OrbitSample resolve_orbit(const Scene& scene, const Options& opt) {
    if (!opt.set_name.empty()) {
        auto pts = scene.set(opt.set_name);
        if (opt.saturate) pts = galois_saturate(pts);
        return sample_from_points(std::move(pts));
    }
    std::string driver = !opt.driver.empty() ? opt.driver : (opt.auts.empty() ? "" : opt.auts.front());
    if (driver.empty() || opt.point.empty())
        throw ParseError("an orbit requires --set, or --point together with --aut/--driver");
    return cyclic_orbit(scene.aut(driver), scene.point(opt.point), opt.N, orbit_opts(scene));
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"orbit-stabilizer computations for plane automorphisms"};
    app.require_subcommand(1);
    Options opt;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--scene", opt.scene_path, "scene file (JSON)");
        sub->add_option("--aut", opt.auts, "automorphism name(s) from the scene");
        sub->add_option("--point", opt.point, "point name from the scene");
        sub->add_option("--curve", opt.curve, "curve name from the scene");
        sub->add_option("--set", opt.set_name, "point-set name from the scene");
        sub->add_option("--driver", opt.driver, "driving automorphism for the orbit window");
        sub->add_option("-N", opt.N, "two-sided window bound");
        sub->add_option("-L", opt.L, "word-length bound for group orbits");
        sub->add_option("-D", opt.D, "interpolation degree bound");
        sub->add_option("--lmax", opt.lmax, "component-period bound");
        sub->add_option("-M", opt.M, "iterate count for degree growth");
        sub->add_flag("--saturate", opt.saturate, "close the point set under the Galois action");
        sub->add_option("--grid", opt.grid, "verification grid (\"default\")");
    };
    const char* names[] = {"orbit", "closure", "components", "classify", "isotropy",
                           "stabilizer", "cyclic", "membership", "ddeg", "verify"};
    for (const char* n : names) add_common(app.add_subcommand(n));

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) { // --help
            out << app.help();
            return 0;
        }
        err << "argument error: " << e.what() << "\n";
        return 1;
    }
    std::string cmd = app.get_subcommands().front()->get_name();

    try {
        Json report;
        if (cmd == "verify") {
            if (opt.grid != "default") throw ParseError("only the default grid is built in");
            report = grid_json(verify_theorem_grid(default_grid()));
            report["summary"] = "instances=" + std::to_string(report["instances"].get<int>()) +
                                " matches=" + std::to_string(report["matches"].get<int>()) +
                                " skips=" + std::to_string(report["skips"].get<int>());
        } else {
            if (opt.scene_path.empty()) throw ParseError("this subcommand requires --scene");
            Scene scene = load_scene(opt.scene_path);
            if (opt.N < 0) opt.N = scene.N;
            if (opt.L < 0) opt.L = scene.L;
            if (opt.D < 0) opt.D = scene.D;
            if (opt.lmax < 0) opt.lmax = scene.lmax;

            if (cmd == "orbit") {
                if (opt.auts.size() > 1) {
                    std::vector<PlaneAut> gens;
                    for (const auto& n : opt.auts) gens.push_back(scene.aut(n));
                    report = orbit_json(group_orbit(gens, scene.point(opt.point), opt.L, orbit_opts(scene)));
                } else {
                    report = orbit_json(resolve_orbit(scene, opt));
                }
            } else if (cmd == "closure") {
                OrbitSample s = resolve_orbit(scene, opt);
                report["orbit"] = orbit_json(s);
                report["closure"] = closure_json(trichotomy(s, opt.D));
                if (scene.field->is_extension()) report["hat_vs_bar"] = hat_vs_bar_json(hat_vs_bar(s, opt.D));
            } else if (cmd == "components") {
                report = components_json(component_cycle(scene.aut(opt.auts.at(0)), scene.point(opt.point), opt.D,
                                                         opt.lmax, opt.N, orbit_opts(scene)));
            } else if (cmd == "classify") {
                CurveDescriptor desc;
                if (!opt.curve.empty()) {
                    desc = scene.curve(opt.curve);
                } else {
                    OrbitSample s = resolve_orbit(scene, opt);
                    ClosureReport rep = trichotomy(s, opt.D);
                    if (rep.verdict != ClosureReport::Verdict::Curve)
                        throw HypothesisError("orbit closure is not a curve up to the degree bound");
                    desc = classify_canonical(*rep.curve);
                }
                report["curve"] = curve_desc_json(desc);
                if (desc.side_conditions_ok && desc.type != CurveType::Other) {
                    GroupDescriptor g = symmetry_group(desc);
                    report["symmetry_group"] = group_desc_json(g);
                    auto alg = algebraicity(g);
                    report["algebraicity"] = Json{{"is_algebraic", alg.is_algebraic}, {"reason", alg.reason}};
                }
            } else if (cmd == "isotropy") {
                report = isotropy_json(isotropy(scene.curve(opt.curve), scene.point(opt.point)));
            } else if (cmd == "stabilizer") {
                std::vector<PlaneAut> gens;
                for (const auto& n : opt.auts) gens.push_back(scene.aut(n));
                const CurveDescriptor& desc = scene.curve(opt.curve);
                const Point& p = scene.point(opt.point);
                HDescriptor H = subgroup_normal_form(gens, desc, p);
                report = stab_json(orbit_stabilizer(desc, p, H));
            } else if (cmd == "cyclic") {
                const PlaneAut& phi = scene.aut(opt.auts.at(0));
                const Point& p = scene.point(opt.point);
                OrbitSample s = cyclic_orbit(phi, p, opt.N, orbit_opts(scene));
                report["orbit"] = orbit_json(s);
                report["closure"] = closure_json(trichotomy(s, opt.D));
                if (scene.field->is_extension()) report["hat_vs_bar"] = hat_vs_bar_json(hat_vs_bar(s, opt.D));
                report["components"] =
                    components_json(component_cycle(phi, p, opt.D, opt.lmax, opt.N, orbit_opts(scene)));
                report["stabilizer"] = stab_json(cyclic_orbit_stabilizer(phi, p, {opt.N, opt.D, opt.lmax}));
            } else if (cmd == "membership") {
                if (opt.auts.empty()) throw ParseError("membership requires --aut (the candidate map)");
                const PlaneAut& psi = scene.aut(opt.auts.front());
                OrbitSample s;
                if (!opt.set_name.empty()) {
                    auto pts = scene.set(opt.set_name);
                    if (opt.saturate) pts = galois_saturate(pts);
                    s = sample_from_points(std::move(pts));
                } else {
                    if (opt.driver.empty() || opt.point.empty())
                        throw ParseError("membership requires --set, or --driver with --point");
                    s = cyclic_orbit(scene.aut(opt.driver), scene.point(opt.point), opt.N, orbit_opts(scene));
                }
                std::optional<StabilizerDescriptor> stab;
                if (!opt.driver.empty() && !opt.point.empty() && !s.exhausted)
                    stab = cyclic_orbit_stabilizer(scene.aut(opt.driver), scene.point(opt.point),
                                                   {opt.N, opt.D, opt.lmax});
                MembershipReport m = membership(psi, s, stab ? &*stab : nullptr);
                switch (m.verdict) {
                    case MembershipVerdict::In: report["verdict"] = "in"; break;
                    case MembershipVerdict::Out: report["verdict"] = "out"; break;
                    case MembershipVerdict::VerifiedUpToBound: report["verdict"] = "verified_up_to_bound"; break;
                }
                report["reason"] = m.reason;
                report["image_proper_subset"] = m.image_proper_subset;
            } else if (cmd == "ddeg") {
                DynamicalDegreeReport d = dynamical_degree(scene.aut(opt.auts.at(0)), opt.M);
                report["degrees"] = d.degrees;
                report["estimate"] = d.estimate;
                if (d.exact_hint) report["exact_hint"] = *d.exact_hint;
            }
        }
        out << report.dump(2) << "\n";
        return 0;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return 1;
    } catch (const HypothesisError& e) {
        err << "hypothesis not met: " << e.what() << "\n";
        return 2;
    } catch (const SizeLimitError& e) {
        err << "size limit: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace orbitstab
