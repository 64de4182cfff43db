#include <random>

#include "doctest.h"

#include "orbitstab/stabilizer.hpp"

using namespace orbitstab;

namespace {

PlaneAut shear(const FieldSpecPtr& spec, int a, int b, std::vector<std::int64_t> P) {
    std::vector<FieldElem> coeffs;
    for (auto c : P) coeffs.push_back(FieldElem::from_int(spec, c));
    return PlaneAut::elementary(spec, FieldElem::from_int(spec, a), FieldElem::from_int(spec, b),
                                UnivarPoly(spec, std::move(coeffs)));
}

std::vector<FieldElem> qparam(const FieldSpecPtr& spec, std::int64_t n) {
    return {FieldElem::from_int(spec, n)};
}

} // namespace

TEST_CASE("hyperbola isotropy is the swap conjugated by the torus") {
    auto Q = FieldSpec::rationals();
    CurveDescriptor t3 = make_t3(Q, FieldElem::one(Q));
    std::mt19937 rng(90210);
    std::uniform_int_distribution<int> num(1, 9), den(1, 9);
    for (int trial = 0; trial < 40; ++trial) {
        FieldElem xp = FieldElem::from_rational(Q, Rat(num(rng), den(rng)));
        Point p{xp, xp.inverse()};
        IsotropyReport rep = isotropy(t3, p);
        CHECK(rep.elements.size() == 2);
        REQUIRE(rep.involution);
        CHECK(rep.involution->apply(p) == p);
        CHECK(stabilizes_curve(*rep.involution, t3.defining_poly));
        CHECK(is_involution(*rep.involution));
        REQUIRE(rep.involution_param);
        CHECK((*rep.involution_param)[0] == p.x * p.y.inverse());
    }
    // at (1, 1) the involution is the plain swap
    IsotropyReport at_one = isotropy(t3, {FieldElem::one(Q), FieldElem::one(Q)});
    CHECK(at_one.involution->equals(PlaneAut::swap(Q)));
}

TEST_CASE("circle isotropy at Pythagorean points is a reflection") {
    auto Q = FieldSpec::rationals();
    CurveDescriptor t4 = make_t4(Q, FieldElem::one(Q), FieldElem::one(Q));
    for (int m = 2; m <= 6; ++m)
        for (int n = 1; n < m; ++n) {
            Rat den = Rat(m) * m + Rat(n) * n;
            Point p{FieldElem::from_rational(Q, (Rat(m) * m - Rat(n) * n) / den),
                    FieldElem::from_rational(Q, 2 * Rat(m) * n / den)};
            REQUIRE(t4.defining_poly.eval(p.x, p.y).is_zero());
            IsotropyReport rep = isotropy(t4, p);
            REQUIRE(rep.involution);
            CHECK(rep.involution->apply(p) == p);
            CHECK(stabilizes_curve(*rep.involution, t4.defining_poly));
            CHECK(is_involution(*rep.involution));
        }
    // at (1, 0) the reflection is the distinguished involution itself
    IsotropyReport axis = isotropy(t4, {FieldElem::one(Q), FieldElem::zero(Q)});
    CHECK(axis.involution->equals(distinguished_involution(t4)));
}

TEST_CASE("char-2 conic isotropy at every F_2 and F_4 point") {
    auto F2 = FieldSpec::prime_field(2);
    auto F4 = FieldSpec::finite_ext(2, {1, 1, 1});
    for (const FieldSpecPtr& F : {F2, F4}) {
        for (const auto& mu : all_field_elements(F)) {
            if (mu.is_zero()) continue;
            std::optional<CurveDescriptor> maybe;
            try {
                maybe = make_t5(F, mu);
            } catch (const Error&) {
                continue; // x^2 + mu x + 1 has a root: not a valid parameter
            }
            const CurveDescriptor& t5 = *maybe;
            for (const auto& x : all_field_elements(F))
                for (const auto& y : all_field_elements(F)) {
                    if (!t5.defining_poly.eval(x, y).is_zero()) continue;
                    IsotropyReport rep = isotropy(t5, {x, y});
                    REQUIRE(rep.involution);
                    CHECK(rep.involution->apply({x, y}) == Point{x, y});
                    CHECK(stabilizes_curve(*rep.involution, t5.defining_poly));
                    CHECK(is_involution(*rep.involution));
                }
        }
    }
}

TEST_CASE("line isotropy is the constrained Jonquieres family") {
    auto Q = FieldSpec::rationals();
    CurveDescriptor t6 = make_t6(Q);
    Point p{FieldElem::zero(Q), FieldElem::from_int(Q, 3)};
    IsotropyReport rep = isotropy(t6, p);
    CHECK(rep.parametrized_family);
    CHECK(!rep.family_constraint.empty());

    // P(0) = (1 - b) y_p fixes p; anything else is rejected
    FieldElem a = FieldElem::from_int(Q, 2), b = FieldElem::from_int(Q, 5);
    UnivarPoly good(Q, {FieldElem::from_int(Q, -12), FieldElem::from_int(Q, 7)}); // P(0) = (1-5)*3
    PlaneAut g = isotropy_family_element(t6, p, a, b, good);
    CHECK(g.apply(p) == p);
    CHECK(stabilizes_curve(g, t6.defining_poly));
    UnivarPoly bad(Q, {FieldElem::one(Q)});
    CHECK_THROWS_AS(isotropy_family_element(t6, p, a, b, bad), Error);
}

TEST_CASE("types (1) and (2) have trivial isotropy off the axes") {
    auto Q = FieldSpec::rationals();
    CurveDescriptor t1 = make_t1(Q, 2, 3, FieldElem::one(Q));
    IsotropyReport rep = isotropy(t1, {FieldElem::one(Q), FieldElem::one(Q)});
    CHECK(rep.elements.size() == 1);
    CHECK(rep.elements[0].is_identity());
    CHECK(!rep.involution);
}

TEST_CASE("rational torus membership is decided by prime exponents") {
    auto Q = FieldSpec::rationals();
    TorusOps ops(make_t3(Q, FieldElem::one(Q)));

    SUBCASE("powers of 4") {
        TorusSubgroup H(ops, {qparam(Q, 4)});
        CHECK(H.contains(qparam(Q, 16)).value == true);
        CHECK(H.contains(qparam(Q, 4)).value == true);
        CHECK(H.contains(qparam(Q, 1)).value == true);
        auto r = H.contains(qparam(Q, 2));
        REQUIRE(r.value.has_value());
        CHECK(*r.value == false);
        CHECK(H.contains(qparam(Q, -4)).value == false);
        CHECK(H.contains({FieldElem::from_rational(Q, Rat(1, 4))}).value == true);
    }
    SUBCASE("two independent generators") {
        TorusSubgroup H(ops, {qparam(Q, 2), qparam(Q, 3)});
        CHECK(H.contains(qparam(Q, 12)).value == true);
        CHECK(H.contains({FieldElem::from_rational(Q, Rat(9, 8))}).value == true);
        CHECK(H.contains(qparam(Q, 5)).value == false);
    }
    SUBCASE("finite subgroup enumerates") {
        TorusSubgroup H(ops, {qparam(Q, -1)});
        auto closure = H.enumerate();
        REQUIRE(closure);
        CHECK(closure->size() == 2);
        TorusSubgroup infinite(ops, {qparam(Q, 2)});
        CHECK(!infinite.enumerate(100));
    }
}

TEST_CASE("subgroup normal form reproduces the worked coset example") {
    auto Q = FieldSpec::rationals();
    CurveDescriptor t3 = make_t3(Q, FieldElem::one(Q));
    Point p{FieldElem::one(Q), FieldElem::one(Q)};
    TorusOps ops(t3);
    PlaneAut g4 = ops.element(qparam(Q, 4));
    PlaneAut coset2 = compose(ops.element(qparam(Q, 2)), PlaneAut::swap(Q)); // (2y, x/2)

    HDescriptor H = subgroup_normal_form({g4, coset2}, t3, p);
    REQUIRE(H.torus_gens.size() == 1);
    CHECK(H.torus_gens[0] == qparam(Q, 4));
    REQUIRE(H.coset_t0);
    CHECK(*H.coset_t0 == qparam(Q, 2)); // relative to tau_p = swap at (1,1)
    CHECK(!H.coset_is_Gp);
    REQUIRE(H.t0_in_H0.has_value());
    CHECK(*H.t0_in_H0 == false);
    REQUIRE(H.t0sq_in_H0.has_value());
    CHECK(*H.t0sq_in_H0 == true);
}

TEST_CASE("stabilizer case dispatch on the hyperbola") {
    auto Q = FieldSpec::rationals();
    CurveDescriptor t3 = make_t3(Q, FieldElem::one(Q));
    Point p{FieldElem::one(Q), FieldElem::one(Q)};
    TorusOps ops(t3);
    auto torus = [&](std::int64_t n) { return ops.element(qparam(Q, n)); };

    SUBCASE("pure torus subgroup gains the isotropy involution") {
        HDescriptor H = subgroup_normal_form({torus(4)}, t3, p);
        StabilizerDescriptor s = orbit_stabilizer(t3, p, H);
        CHECK(s.case_tag == StabilizerDescriptor::CaseTag::H0_extended_by_Gp);
        REQUIRE(s.tau_p);
        CHECK(s.tau_p->equals(PlaneAut::swap(Q)));
        CHECK(s.complete);
        CHECK(s.verification.all_passed);
        CHECK(!algebraicity(s).is_algebraic);
    }
    SUBCASE("coset representative outside H0 with square inside extends by index 2") {
        HDescriptor H = subgroup_normal_form({torus(4), compose(torus(2), PlaneAut::swap(Q))}, t3, p);
        StabilizerDescriptor s = orbit_stabilizer(t3, p, H);
        CHECK(s.case_tag == StabilizerDescriptor::CaseTag::A0_index2_extension);
        CHECK(s.index2_recorded);
        REQUIRE(s.coset_t);
        CHECK(*s.coset_t == qparam(Q, 2));
        CHECK(s.torus_gens.size() == 2); // H0 generators plus t0
        CHECK(s.verification.all_passed);
    }
    SUBCASE("coset equal to the isotropy leaves H unchanged") {
        HDescriptor H = subgroup_normal_form({torus(4), PlaneAut::swap(Q)}, t3, p);
        StabilizerDescriptor s = orbit_stabilizer(t3, p, H);
        CHECK(s.case_tag == StabilizerDescriptor::CaseTag::H_unchanged);
        CHECK(s.complete);
    }
    SUBCASE("coset element of infinite relative order leaves H unchanged") {
        // t0 = 3, t0^2 = 9 not in <4>
        HDescriptor H = subgroup_normal_form({torus(4), compose(torus(3), PlaneAut::swap(Q))}, t3, p);
        StabilizerDescriptor s = orbit_stabilizer(t3, p, H);
        CHECK(s.case_tag == StabilizerDescriptor::CaseTag::H_unchanged);
    }
}

TEST_CASE("type-(1) subgroups are their own stabilizers") {
    auto Q = FieldSpec::rationals();
    CurveDescriptor t1 = make_t1(Q, 2, 3, FieldElem::one(Q));
    Point p{FieldElem::one(Q), FieldElem::one(Q)};
    TorusOps ops(t1);
    HDescriptor H = subgroup_normal_form({ops.element(qparam(Q, 2))}, t1, p);
    StabilizerDescriptor s = orbit_stabilizer(t1, p, H);
    CHECK(s.case_tag == StabilizerDescriptor::CaseTag::A_equals_H);
    CHECK(s.complete);
    CHECK(s.verification.all_passed);
}

TEST_CASE("line orbits only admit a lower bound") {
    auto Q = FieldSpec::rationals();
    CurveDescriptor t6 = make_t6(Q);
    Point p{FieldElem::zero(Q), FieldElem::one(Q)};
    PlaneAut g = shear(Q, 1, 2, {});
    HDescriptor H;
    H.original_gens = {g}; // no torus split on the line: the raw generators stand
    StabilizerDescriptor s = orbit_stabilizer(t6, p, H);
    CHECK(s.case_tag == StabilizerDescriptor::CaseTag::Type6_lower_bound);
    CHECK(!s.complete);
    CHECK(s.has_kernel_part);
    CHECK(algebraicity(s).reason == "unbounded degree");
}

TEST_CASE("hypothesis violations are rejected") {
    auto Q = FieldSpec::rationals();
    CurveDescriptor t3 = make_t3(Q, FieldElem::one(Q));
    // (1, 2) is not on xy = 1
    CHECK_THROWS_AS(subgroup_normal_form({PlaneAut::swap(Q)}, t3, {FieldElem::one(Q), FieldElem::from_int(Q, 2)}),
                    Error);
    // a generator that does not stabilize the curve
    CHECK_THROWS_AS(
        subgroup_normal_form({shear(Q, 1, 1, {1})}, t3, {FieldElem::one(Q), FieldElem::one(Q)}), Error);
}

TEST_CASE("cyclic stabilizer fixtures") {
    auto Q = FieldSpec::rationals();
    Point p{FieldElem::one(Q), FieldElem::one(Q)};

    SUBCASE("(4x, 8y): closure x^3 - y^2, A = <phi>") {
        PlaneAut phi = PlaneAut::diagonal(Q, FieldElem::from_int(Q, 4), FieldElem::from_int(Q, 8));
        StabilizerDescriptor s = cyclic_orbit_stabilizer(phi, p);
        CHECK(s.case_tag == StabilizerDescriptor::CaseTag::Cyclic_a);
        CHECK(s.curve_type == CurveType::T1);
        CHECK(s.complete);
        CHECK(s.ell == 1);
        REQUIRE(s.driver);
        CHECK(s.driver->equals(phi));
        CHECK(s.verification.all_passed);
        CHECK(!algebraicity(s).is_algebraic);
        CHECK(algebraicity(s).reason == "countably infinite");
    }
    SUBCASE("(2x, y/2): A = <phi> extended by the swap, relation sigma phi = phi^-1 sigma") {
        PlaneAut phi = PlaneAut::diagonal(Q, FieldElem::from_int(Q, 2), FieldElem::from_rational(Q, Rat(1, 2)));
        StabilizerDescriptor s = cyclic_orbit_stabilizer(phi, p);
        CHECK(s.case_tag == StabilizerDescriptor::CaseTag::Cyclic_b_i);
        CHECK(s.curve_type == CurveType::T3);
        REQUIRE(s.relation_exponent);
        CHECK(*s.relation_exponent == -1);
        REQUIRE(s.tau_p);
        CHECK(s.tau_p->equals(PlaneAut::swap(Q)));
        CHECK(s.complete);
        CHECK(s.verification.all_passed);
    }
    SUBCASE("(x, 2y + x - 1): fence orbit, membership semidecision") {
        PlaneAut phi = shear(Q, 1, 2, {-1, 1});
        StabilizerDescriptor s = cyclic_orbit_stabilizer(phi, p);
        CHECK(s.case_tag == StabilizerDescriptor::CaseTag::Cyclic_c);
        CHECK(!s.complete);
        CHECK(s.has_kernel_part);
        CHECK(s.ell == 1);

        OrbitSample o = cyclic_orbit(phi, p, 10);
        PlaneAut psi = shear(Q, 1, 1, {1, -2, 1}); // (x, y + (x-1)^2)
        MembershipReport m = membership(psi, o, &s);
        CHECK(m.verdict == MembershipVerdict::In);

        PlaneAut out = PlaneAut::diagonal(Q, FieldElem::from_int(Q, 3), FieldElem::from_int(Q, 3));
        CHECK(membership(out, o, &s).verdict == MembershipVerdict::Out);
    }
    SUBCASE("(-x, 2y + x^2 - 1): two components, bounded verification") {
        PlaneAut phi = shear(Q, -1, 2, {-1, 0, 1});
        StabilizerDescriptor s = cyclic_orbit_stabilizer(phi, p);
        CHECK(s.ell == 2);
        CHECK(!s.complete);
    }
}

TEST_CASE("membership verdicts on the line orbit") {
    auto Q = FieldSpec::rationals();
    Point origin{FieldElem::zero(Q), FieldElem::zero(Q)};
    PlaneAut phi = shear(Q, 1, 2, {1}); // (x, 2y + 1)
    StabilizerDescriptor s = cyclic_orbit_stabilizer(phi, origin, {10, 4, 6});
    REQUIRE(s.case_tag == StabilizerDescriptor::CaseTag::Cyclic_c);
    OrbitSample o = cyclic_orbit(phi, origin, 10);

    // x-scalings fix the line pointwise on the orbit
    MembershipReport in = membership(shear(Q, 3, 1, {}), o, &s);
    CHECK(in.verdict == MembershipVerdict::In);

    // the shift orbit (0, n): doubling maps the window into itself forward
    // but its inverse leaves it, so only the bounded verdict is available
    PlaneAut unit = shear(Q, 1, 1, {1});
    OrbitSample shift_orbit = cyclic_orbit(unit, origin, 10);
    MembershipReport bounded = membership(shear(Q, 1, 2, {}), shift_orbit);
    CHECK(bounded.verdict == MembershipVerdict::VerifiedUpToBound);
    CHECK(bounded.image_proper_subset);
}

TEST_CASE("exhausted orbits decide membership exactly") {
    auto K = FieldSpec::quad_ext(2);
    FieldElem s = FieldElem::quad(K, 0, 1);
    OrbitSample hat = sample_from_points({{s, FieldElem::zero(K)}, {-s, FieldElem::zero(K)}});
    OrbitSample bare = sample_from_points({{s, FieldElem::zero(K)}});
    PlaneAut phi = shear(K, -1, 1, {-2, 0, 1}); // (-x, y + x^2 - 2)
    CHECK(membership(phi, hat).verdict == MembershipVerdict::In);
    CHECK(membership(phi, bare).verdict == MembershipVerdict::Out);
    CHECK(membership(compose(phi, phi), bare).verdict == MembershipVerdict::In);
}

TEST_CASE("dynamical degree of a Henon word") {
    auto Q = FieldSpec::rationals();
    UnivarPoly P(Q, {FieldElem::zero(Q), FieldElem::zero(Q), FieldElem::one(Q)});
    PlaneAut henon = compose(PlaneAut::elementary(Q, FieldElem::one(Q), FieldElem::from_int(Q, -1), P),
                             PlaneAut::swap(Q));
    DynamicalDegreeReport rep = dynamical_degree(henon, 6);
    CHECK(rep.degrees == std::vector<int>{2, 4, 8, 16, 32, 64});
    REQUIRE(rep.exact_hint);
    CHECK(*rep.exact_hint == 2);
    CHECK(rep.estimate == doctest::Approx(2.0));

    DynamicalDegreeReport lin = dynamical_degree(PlaneAut::swap(Q), 4);
    CHECK(lin.degrees == std::vector<int>{1, 1, 1, 1});
    CHECK(!lin.exact_hint);
}

TEST_CASE("torus coset elements t * tau_p are involutions") {
    auto Q = FieldSpec::rationals();
    std::mt19937 rng(3141);
    std::uniform_int_distribution<int> num(1, 9), den(1, 9);
    CurveDescriptor t3 = make_t3(Q, FieldElem::one(Q));
    TorusOps ops(t3);
    for (int trial = 0; trial < 60; ++trial) {
        FieldElem xp = FieldElem::from_rational(Q, Rat(num(rng), den(rng)));
        Point p{xp, xp.inverse()};
        PlaneAut tau_p = *isotropy(t3, p).involution;
        FieldElem t = FieldElem::from_rational(Q, Rat(num(rng), den(rng)));
        // conjugating the involution by any torus element gives an involution
        PlaneAut g = ops.element({t});
        CHECK(is_involution(compose(compose(g, tau_p), invert(g))));
    }
}
