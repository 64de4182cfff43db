#include "orbitstab/closure.hpp"

#include <algorithm>

namespace orbitstab {

namespace {

std::vector<Exp> monomials_up_to(int D) {
    std::vector<Exp> mons;
    for (int i = 0; i <= D; ++i)
        for (int j = 0; i + j <= D; ++j) mons.push_back({i, j});
    std::sort(mons.begin(), mons.end(), [](const Exp& a, const Exp& b) { return grlex_less(b, a); });
    return mons; // grlex descending
}

std::optional<BivarPoly> minimal_element(const std::vector<BivarPoly>& basis) {
    if (basis.empty()) return std::nullopt;
    return basis.front(); // basis is sorted ascending by leading term
}

} // namespace

std::vector<BivarPoly> interpolate_ideal(const std::vector<Point>& points, int D, CoeffField field) {
    if (points.empty()) throw Error("interpolate_ideal requires a nonempty point set");
    if (D < 1) throw Error("interpolate_ideal requires D >= 1");
    const FieldSpecPtr& spec = points[0].x.spec();
    auto mons = monomials_up_to(D);
    bool split = field == CoeffField::Base && spec->is_extension();
    FieldSpecPtr coeff_spec = split ? spec->base() : spec;

    Matrix M;
    for (const auto& p : points) {
        std::vector<FieldElem> vals;
        vals.reserve(mons.size());
        for (const auto& e : mons) vals.push_back(p.x.pow(e.first) * p.y.pow(e.second));
        if (!split) {
            M.push_back(std::move(vals));
        } else {
            int r = spec->extension_degree();
            std::vector<std::vector<FieldElem>> rows(r, std::vector<FieldElem>());
            for (auto& row : rows) row.reserve(mons.size());
            for (const auto& v : vals) {
                auto coords = v.base_coords();
                for (int t = 0; t < r; ++t) rows[t].push_back(coords[t]);
            }
            for (auto& row : rows) M.push_back(std::move(row));
        }
    }

    auto ns = nullspace(M, coeff_spec, mons.size());
    // canonicalize: reduced echelon over grlex-descending coordinates, so
    // each basis polynomial is monic with a distinct leading monomial
    ns = row_reduce(std::move(ns), coeff_spec);
    std::vector<BivarPoly> basis;
    for (auto it = ns.rbegin(); it != ns.rend(); ++it) { // ascending leading term
        BivarPoly f(spec);
        for (std::size_t c = 0; c < mons.size(); ++c) {
            if ((*it)[c].is_zero()) continue;
            FieldElem coef = split ? FieldElem::embed(spec, (*it)[c]) : (*it)[c];
            f.set_coeff(mons[c], coef);
        }
        basis.push_back(std::move(f));
    }
    return basis;
}

ClosureReport trichotomy(const OrbitSample& sample, int D) {
    if (sample.points.empty()) throw Error("trichotomy requires a nonempty sample");
    ClosureReport rep;
    rep.degree_bound = D;
    if (sample.exhausted) {
        rep.verdict = ClosureReport::Verdict::Finite;
        rep.finite_count = static_cast<int>(sample.points.size());
        rep.ideal_basis = interpolate_ideal(sample.point_list(), D, CoeffField::Extension);
        return rep;
    }
    auto pts = sample.point_list();
    rep.ideal_basis = interpolate_ideal(pts, D, CoeffField::Extension);
    auto F = minimal_element(rep.ideal_basis);
    if (F) {
        // stability of the interpolation under halving the window
        std::vector<Point> half(pts.begin(), pts.begin() + (pts.size() + 1) / 2);
        auto half_basis = interpolate_ideal(half, D, CoeffField::Extension);
        auto Fh = minimal_element(half_basis);
        rep.half_window_stable = Fh && *Fh == *F;
    }
    if (F && rep.half_window_stable) {
        rep.verdict = ClosureReport::Verdict::Curve;
        rep.curve = *F;
        if (sample.driver) rep.stable = stabilizes_curve(*sample.driver, *F);
    } else {
        rep.verdict = ClosureReport::Verdict::NoCurveUpToDegree;
    }
    return rep;
}

HatVsBarReport hat_vs_bar(const OrbitSample& sample, int D) {
    if (sample.points.empty()) throw Error("hat_vs_bar requires a nonempty sample");
    auto pts = sample.point_list();
    HatVsBarReport rep;
    rep.bar_basis = interpolate_ideal(pts, D, CoeffField::Extension);
    rep.hat_basis = interpolate_ideal(pts, D, CoeffField::Base);
    // second route to the hat ideal: saturate, then interpolate over the extension
    auto sat = galois_saturate(pts);
    auto hat2 = interpolate_ideal(sat, D, CoeffField::Extension);
    rep.cross_check_ok = hat2 == rep.hat_basis;
    rep.strict = rep.bar_basis != rep.hat_basis;
    auto F = minimal_element(rep.bar_basis);
    if (!F) {
        rep.galois_orbit_count = 0;
        return rep;
    }
    std::vector<BivarPoly> orbit{*F};
    BivarPoly g = F->galois_apply().monic();
    while (!(g == *F)) {
        if (std::find(orbit.begin(), orbit.end(), g) != orbit.end()) break;
        orbit.push_back(g);
        g = g.galois_apply().monic();
    }
    rep.galois_orbit_count = static_cast<int>(orbit.size());
    return rep;
}

ComponentCycle component_cycle(const PlaneAut& phi, const Point& p, int D, int ellmax, int N, const OrbitOptions& opt) {
    if (ellmax < 1) throw Error("component_cycle requires ellmax >= 1");
    auto minimal_of_power = [&](int m) -> std::optional<BivarPoly> {
        auto sample = cyclic_orbit(phi.pow(m), p, N, opt);
        if (sample.exhausted) throw HypothesisError("orbit is finite; no component cycle");
        auto rep = trichotomy(sample, D);
        if (rep.verdict != ClosureReport::Verdict::Curve) return std::nullopt;
        return rep.curve;
    };

    auto full = minimal_of_power(1);
    if (!full) throw HypothesisError("orbit closure is not a curve up to the degree bound");

    for (int m = 1; m <= ellmax; ++m) {
        auto Fm = minimal_of_power(m);
        if (!Fm) continue;
        if (!stabilizes_curve(phi.pow(m), *Fm)) continue;
        auto F2m = minimal_of_power(2 * m);
        if (!F2m || !Fm->is_associate_of(*F2m)) continue;

        ComponentCycle cc;
        cc.ell = m;
        cc.full_closure = *full;
        for (int i = 1; i <= m; ++i)
            cc.components.push_back(poly_pullback(*Fm, phi.pow(1 - i)).monic());
        // the pullback of C_{i+1} by phi is an associate of C_i, cyclically
        cc.cycle_verified = true;
        for (int i = 0; i < m; ++i) {
            const BivarPoly& next = cc.components[(i + 1) % m];
            if (!poly_pullback(next, phi).is_associate_of(cc.components[i])) cc.cycle_verified = false;
        }
        BivarPoly prod = BivarPoly::constant(phi.spec(), FieldElem::one(phi.spec()));
        for (const auto& c : cc.components) prod = prod * c;
        cc.product_matches_full = prod.is_associate_of(*full);
        if (p.x.spec()->is_extension()) {
            auto sample_ell = cyclic_orbit(phi.pow(m), p, N, opt);
            cc.k = std::max(1, hat_vs_bar(sample_ell, D).galois_orbit_count);
        } else {
            cc.k = 1;
        }
        return cc;
    }
    throw HypothesisError("component cycle not resolved up to ellmax");
}

} // namespace orbitstab
