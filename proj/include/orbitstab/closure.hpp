#ifndef ORBITSTAB_CLOSURE_HPP
#define ORBITSTAB_CLOSURE_HPP

#include "orbitstab/linalg.hpp"
#include "orbitstab/orbit.hpp"
#include "orbitstab/poly.hpp"

namespace orbitstab {

/// Which field the vanishing ideal is interpolated over: the scene field
/// itself, or its base field (coordinates split through the extension basis).
enum class CoeffField { Base, Extension };

/// Exact basis of the space of polynomials of total degree <= D vanishing on
/// all points, grlex-monic, sorted ascending by grlex leading term. With
/// CoeffField::Base the coefficients are constrained to the base field (the
/// result is embedded back into the scene field).
std::vector<BivarPoly> interpolate_ideal(const std::vector<Point>& points, int D, CoeffField field);

struct ClosureReport {
    enum class Verdict { Finite, Curve, NoCurveUpToDegree };
    Verdict verdict;
    int finite_count = 0;
    std::optional<BivarPoly> curve;    // unique monic minimal-grlex element
    std::optional<bool> stable;        // pullback-associate under the driver
    bool half_window_stable = false;
    int degree_bound = 0;
    std::vector<BivarPoly> ideal_basis;
};

/// Decide finite / curve / no-curve-detected for an orbit window. The curve
/// verdict is corroborated by half-window stability of the interpolation and,
/// when the sample has a driving automorphism, by the pullback-associate test.
ClosureReport trichotomy(const OrbitSample& sample, int D);

struct HatVsBarReport {
    std::vector<BivarPoly> bar_basis; // ideal over the extension
    std::vector<BivarPoly> hat_basis; // ideal with base-field coefficients
    int galois_orbit_count = 0;       // k: Galois translates of the minimal bar polynomial
    bool strict = false;              // ideals differ at degree <= D
    bool cross_check_ok = false;      // hat side recomputed via Galois saturation agrees
};

HatVsBarReport hat_vs_bar(const OrbitSample& sample, int D);

struct ComponentCycle {
    int ell = 0; // period of the component cycle under phi
    int k = 1;   // Galois translates per phi-cycle; s = k * ell
    std::vector<BivarPoly> components;
    bool cycle_verified = false;        // pullback cyclically permutes the components
    bool product_matches_full = false;  // product of components is an associate of the full closure polynomial
    BivarPoly full_closure;             // minimal polynomial of the phi-orbit
};

ComponentCycle component_cycle(const PlaneAut& phi, const Point& p, int D, int ellmax, int N = 24,
                               const OrbitOptions& opt = {});

} // namespace orbitstab

#endif
