#include <random>

#include "doctest.h"

#include "orbitstab/classify.hpp"

using namespace orbitstab;

TEST_CASE("template recognition for the canonical list") {
    auto Q = FieldSpec::rationals();
    BivarPoly x = BivarPoly::var_x(Q), y = BivarPoly::var_y(Q);
    BivarPoly one = BivarPoly::constant(Q, FieldElem::one(Q));

    SUBCASE("unit circle is a type-(4) conic") {
        CurveDescriptor d = classify_canonical(x * x + y * y - one);
        CHECK(d.type == CurveType::T4);
        CHECK(d.side_conditions_ok);
        CHECK(d.lambda->is_one());
        CHECK(d.nu->is_one());
    }
    SUBCASE("hyperbola xy - 1 is type (3), never type (2)") {
        CurveDescriptor d = classify_canonical(x * y - one);
        CHECK(d.type == CurveType::T3);
        CHECK(d.lambda->is_one());
    }
    SUBCASE("x^2 y - 3 is type (2)") {
        CurveDescriptor d = classify_canonical(x * x * y - one.scalar_mul(FieldElem::from_int(Q, 3)));
        CHECK(d.type == CurveType::T2);
        CHECK(d.a == 1);
        CHECK(d.b == 2);
        CHECK(d.lambda->str() == "3");
    }
    SUBCASE("cuspidal x^3 - y^2 is type (1)") {
        CurveDescriptor d = classify_canonical(x.pow(3) - y.pow(2));
        CHECK(d.type == CurveType::T1);
        CHECK(d.a == 2);
        CHECK(d.b == 3);
        CHECK(d.lambda->is_one());
    }
    SUBCASE("the line x = 0 is type (6)") {
        CHECK(classify_canonical(x).type == CurveType::T6);
        CHECK(classify_canonical(x.scalar_mul(FieldElem::from_int(Q, 7))).type == CurveType::T6);
    }
    SUBCASE("x^2 - 1 is a fence") {
        CurveDescriptor d = classify_canonical(x * x - one);
        CHECK(d.type == CurveType::Fence);
        REQUIRE(d.fence_poly);
        CHECK(d.fence_poly->degree() == 2);
    }
    SUBCASE("a generic dense polynomial is Other") {
        CHECK(classify_canonical(x * x + x * y + y - one).type == CurveType::Other);
    }
}

TEST_CASE("char-2 norm conic is type (5)") {
    auto F2 = FieldSpec::prime_field(2);
    BivarPoly x = BivarPoly::var_x(F2), y = BivarPoly::var_y(F2);
    BivarPoly one = BivarPoly::constant(F2, FieldElem::one(F2));
    CurveDescriptor d = classify_canonical(x * x + x * y + y * y + one); // -1 = 1 mod 2
    CHECK(d.type == CurveType::T5);
    CHECK(d.mu->is_one());
    CHECK(d.side_conditions_ok);
}

TEST_CASE("side-condition failures are flagged, not silently accepted") {
    auto Q = FieldSpec::rationals();
    BivarPoly x = BivarPoly::var_x(Q), y = BivarPoly::var_y(Q);
    BivarPoly one = BivarPoly::constant(Q, FieldElem::one(Q));
    // x^2 - y^2 = 1: -lambda*nu = 1 is a square, so the conic is not of the
    // canonical non-split kind
    CurveDescriptor d = classify_canonical(x * x - y * y - one);
    CHECK(d.type == CurveType::T4);
    CHECK(!d.side_conditions_ok);
    CHECK(!d.note.empty());
    CHECK_THROWS_AS(symmetry_group(d), HypothesisError);

    // x^2 y^2 - 5: gcd(a, b) = 2
    CurveDescriptor e = classify_canonical(x * x * y * y - one.scalar_mul(FieldElem::from_int(Q, 5)));
    CHECK(e.type == CurveType::T2);
    CHECK(!e.side_conditions_ok);
}

TEST_CASE("descriptor constructors validate their parameters") {
    auto Q = FieldSpec::rationals();
    FieldElem one = FieldElem::one(Q);
    CHECK_THROWS_AS(make_t1(Q, 1, 3, one), Error);            // a > 1 required
    CHECK_THROWS_AS(make_t1(Q, 2, 4, one), Error);            // gcd
    CHECK_THROWS_AS(make_t2(Q, 1, 1, one), Error);            // ab != 1
    CHECK_THROWS_AS(make_t3(Q, FieldElem::zero(Q)), Error);   // lambda != 0
    CHECK_THROWS_AS(make_t4(Q, one, -one), Error);            // -lambda*nu = 1 square
    CHECK_THROWS_AS(make_t5(Q, one), Error);                  // wrong characteristic
    auto F2 = FieldSpec::prime_field(2);
    CHECK_THROWS_AS(make_t4(F2, FieldElem::one(F2), FieldElem::one(F2)), Error);
    CHECK_THROWS_AS(make_fence(UnivarPoly(Q, {one})), Error); // constant
}

TEST_CASE("classification round-trips the canonical constructors") {
    auto Q = FieldSpec::rationals();
    auto F7 = FieldSpec::prime_field(7);
    std::mt19937 rng(314159);
    std::uniform_int_distribution<int> l(1, 40), ab(2, 7);
    for (int trial = 0; trial < 100; ++trial) {
        FieldElem lam = FieldElem::from_int(Q, l(rng));
        int a = ab(rng), b = ab(rng);
        if (std::gcd(a, b) == 1) {
            CurveDescriptor d = classify_canonical(make_t1(Q, a, b, lam).defining_poly);
            CHECK(d.type == CurveType::T1);
            CHECK(d.a == a);
            CHECK(d.b == b);
            CHECK(*d.lambda == lam);

            CurveDescriptor e = classify_canonical(make_t2(Q, a, b, lam).defining_poly);
            CHECK(e.type == CurveType::T2);
            CHECK(e.a == a);
            CHECK(e.b == b);
        }
        CurveDescriptor t3 = classify_canonical(make_t3(Q, lam).defining_poly);
        CHECK(t3.type == CurveType::T3);
        CHECK(*t3.lambda == lam);

        // scalar multiples classify identically (monic normalization)
        BivarPoly scaled = make_t3(Q, lam).defining_poly.scalar_mul(FieldElem::from_int(Q, -7));
        CHECK(classify_canonical(scaled).type == CurveType::T3);

        FieldElem lam7 = FieldElem::from_int(F7, 1 + trial % 6), nu7 = FieldElem::from_int(F7, 1 + (trial / 6) % 6);
        try {
            CurveDescriptor t4 = make_t4(F7, lam7, nu7);
            CurveDescriptor back = classify_canonical(t4.defining_poly);
            CHECK(back.type == CurveType::T4);
            CHECK(*back.lambda == lam7);
            CHECK(*back.nu == nu7);
        } catch (const Error&) {
            // -lambda*nu was a square; nothing to round-trip
        }
    }
}

TEST_CASE("torus arithmetic obeys the group law") {
    auto Q = FieldSpec::rationals();
    std::mt19937 rng(246810);
    std::uniform_int_distribution<int> c(-9, 9);

    SUBCASE("split torus of the hyperbola") {
        TorusOps ops(make_t3(Q, FieldElem::one(Q)));
        for (int i = 0; i < 100; ++i) {
            int n = c(rng);
            if (n == 0) continue;
            std::vector<FieldElem> u{FieldElem::from_int(Q, n)};
            CHECK(ops.is_identity(ops.mul(u, ops.inv(u))));
            CHECK(ops.element(u).apply({FieldElem::one(Q), FieldElem::one(Q)}).x == u[0]);
            auto round = ops.param_of(ops.element(u));
            REQUIRE(round);
            CHECK(*round == u);
        }
    }
    SUBCASE("norm-one torus of the circle via Pythagorean triples") {
        TorusOps ops(make_t4(Q, FieldElem::one(Q), FieldElem::one(Q)));
        for (int m = 2; m <= 6; ++m)
            for (int n = 1; n < m; ++n) {
                Rat den = Rat(m) * m + Rat(n) * n;
                std::vector<FieldElem> u{FieldElem::from_rational(Q, (Rat(m) * m - Rat(n) * n) / den),
                                         FieldElem::from_rational(Q, 2 * Rat(m) * n / den)};
                REQUIRE(ops.valid(u));
                CHECK(ops.is_identity(ops.mul(u, ops.inv(u))));
                CHECK(ops.valid(ops.mul(u, u)));
                auto round = ops.param_of(ops.element(u));
                REQUIRE(round);
                CHECK(*round == u);
                // rotations preserve the circle
                CHECK(stabilizes_curve(ops.element(u), ops.descriptor().defining_poly));
            }
    }
}

TEST_CASE("split_element separates torus and involution cosets") {
    auto Q = FieldSpec::rationals();
    CurveDescriptor t3 = make_t3(Q, FieldElem::one(Q));
    TorusOps ops(t3);
    PlaneAut two = ops.element({FieldElem::from_int(Q, 2)});
    auto s1 = ops.split_element(two);
    REQUIRE(s1);
    CHECK(!s1->second);
    PlaneAut coset = compose(two, distinguished_involution(t3)); // (2y, x/2)
    auto s2 = ops.split_element(coset);
    REQUIRE(s2);
    CHECK(s2->second);
    CHECK(s2->first == std::vector<FieldElem>{FieldElem::from_int(Q, 2)});
    CHECK(!ops.split_element(PlaneAut::elementary(Q, FieldElem::one(Q), FieldElem::one(Q),
                                                  UnivarPoly(Q, {FieldElem::one(Q)}))));
}

TEST_CASE("symmetry group families per type") {
    auto Q = FieldSpec::rationals();
    SUBCASE("type (1) split torus with weights (a, b)") {
        GroupDescriptor g = symmetry_group(make_t1(Q, 2, 3, FieldElem::one(Q)));
        CHECK(g.shape == GroupDescriptor::Shape::TorusWeights);
        CHECK(g.weight_a == 2);
        CHECK(g.weight_b == 3);
        CHECK(g.is_algebraic);
    }
    SUBCASE("type (2) flips the second weight") {
        GroupDescriptor g = symmetry_group(make_t2(Q, 1, 2, FieldElem::one(Q)));
        CHECK(g.weight_a == 1);
        CHECK(g.weight_b == -2);
    }
    SUBCASE("type (4) over Q is a non-split torus extended by an involution") {
        GroupDescriptor g = symmetry_group(make_t4(Q, FieldElem::one(Q), FieldElem::one(Q)));
        CHECK(g.shape == GroupDescriptor::Shape::TorusExtInvolution);
        CHECK(!g.split_torus);
        REQUIRE(g.involution);
        CHECK(is_involution(*g.involution));
        CHECK(g.countability == GroupDescriptor::Countability::ContinuumParametrized);
        CHECK(algebraicity(g).is_algebraic);
    }
    SUBCASE("type (6) is not algebraic") {
        GroupDescriptor g = symmetry_group(make_t6(Q));
        CHECK(g.shape == GroupDescriptor::Shape::JonquieresLine);
        CHECK(!g.is_algebraic);
        CHECK(algebraicity(g).reason == "unbounded degree");
    }
    SUBCASE("fences give lower-bound families") {
        UnivarPoly P(Q, {FieldElem::from_int(Q, -1), FieldElem::zero(Q), FieldElem::one(Q)}); // x^2 - 1
        GroupDescriptor g = symmetry_group(make_fence(P));
        CHECK(g.shape == GroupDescriptor::Shape::FenceFamily);
        CHECK(!algebraicity(g).is_algebraic);
    }
}

TEST_CASE("finite-field symmetry groups have the closed-form cardinalities") {
    for (std::int64_t q : {3, 5, 7, 11, 13}) {
        auto F = FieldSpec::prime_field(q);
        GroupDescriptor g3 = symmetry_group(make_t3(F, FieldElem::one(F)));
        CHECK(g3.elements.size() == 2 * (q - 1));
        for (std::int64_t n = 1; n < q; ++n) {
            try {
                CurveDescriptor t4 = make_t4(F, FieldElem::one(F), FieldElem::from_int(F, n));
                CHECK(symmetry_group(t4).elements.size() == 2 * (q + 1));
            } catch (const Error&) {
                // -nu is a square: not a valid type-(4) parameter choice
            }
        }
    }
    auto F2 = FieldSpec::prime_field(2);
    CHECK(symmetry_group(make_t5(F2, FieldElem::one(F2))).elements.size() == 6);
}

TEST_CASE("every listed symmetry element stabilizes the curve") {
    auto F5 = FieldSpec::prime_field(5);
    auto F4 = FieldSpec::finite_ext(2, {1, 1, 1});
    std::vector<CurveDescriptor> descs{make_t3(F5, FieldElem::from_int(F5, 2)),
                                       make_t4(FieldSpec::prime_field(3), FieldElem::one(FieldSpec::prime_field(3)),
                                               FieldElem::one(FieldSpec::prime_field(3)))};
    for (const auto& mu : all_field_elements(F4)) {
        if (mu.is_zero()) continue;
        try {
            descs.push_back(make_t5(F4, mu));
        } catch (const Error&) {
        }
    }
    for (const auto& desc : descs) {
        auto elems = enumerate_symmetry_elements(desc);
        CHECK(!elems.empty());
        for (const auto& g : elems) CHECK(stabilizes_curve(g, desc.defining_poly));
    }
}

TEST_CASE("make_family_element respects membership and stabilizes the curve") {
    auto Q = FieldSpec::rationals();
    std::mt19937 rng(112358);
    std::uniform_int_distribution<int> c(-6, 6), nz(1, 6);

    CurveDescriptor t1 = make_t1(Q, 2, 3, FieldElem::from_int(Q, 4));
    CurveDescriptor t3 = make_t3(Q, FieldElem::from_int(Q, 2));
    CurveDescriptor t6 = make_t6(Q);
    UnivarPoly fenceP(Q, {FieldElem::from_int(Q, -1), FieldElem::zero(Q), FieldElem::one(Q)});
    CurveDescriptor fence = make_fence(fenceP);

    for (int trial = 0; trial < 50; ++trial) {
        FieldElem t = FieldElem::from_int(Q, nz(rng));
        for (const auto& desc : {t1, t3}) {
            PlaneAut g = make_family_element(desc, {.scalars = {t}});
            CHECK(stabilizes_curve(g, desc.defining_poly));
        }
        PlaneAut coset = make_family_element(t3, {.scalars = {t}, .involution_flag = true});
        CHECK(stabilizes_curve(coset, t3.defining_poly));

        UnivarPoly P(Q, {FieldElem::zero(Q), FieldElem::from_int(Q, c(rng))}); // P(0) = 0
        PlaneAut j = make_family_element(t6, {.scalars = {FieldElem::from_int(Q, nz(rng)), FieldElem::one(Q)},
                                              .poly = P});
        CHECK(stabilizes_curve(j, t6.defining_poly));

        // alpha = -1 maps the fence x^2 - 1 to itself
        PlaneAut f = make_family_element(
            fence, {.poly = UnivarPoly(Q, {FieldElem::from_int(Q, c(rng))}),
                    .alpha = FieldElem::from_int(Q, trial % 2 ? 1 : -1),
                    .beta = FieldElem::zero(Q),
                    .gamma = FieldElem::from_int(Q, nz(rng))});
        CHECK(stabilizes_curve(f, fence.defining_poly));
    }
    CHECK_THROWS_AS(make_family_element(t3, {.scalars = {FieldElem::zero(Q)}}), Error);
    CHECK_THROWS_AS(make_family_element(t1, {.scalars = {FieldElem::from_int(Q, 2)}, .involution_flag = true}),
                    Error);
    CHECK_THROWS_AS(
        make_family_element(fence, {.alpha = FieldElem::from_int(Q, 2), .gamma = FieldElem::one(Q)}), Error);
}

TEST_CASE("distinguished involutions square to the identity and stabilize") {
    auto Q = FieldSpec::rationals();
    auto F2 = FieldSpec::prime_field(2);
    std::vector<CurveDescriptor> descs{make_t3(Q, FieldElem::from_int(Q, 3)),
                                       make_t4(Q, FieldElem::one(Q), FieldElem::one(Q)),
                                       make_t5(F2, FieldElem::one(F2))};
    for (const auto& desc : descs) {
        PlaneAut iota = distinguished_involution(desc);
        CHECK(is_involution(iota));
        CHECK(stabilizes_curve(iota, desc.defining_poly));
    }
    CHECK_THROWS_AS(distinguished_involution(make_t6(Q)), Error);
}
