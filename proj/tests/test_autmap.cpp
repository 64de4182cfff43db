#include <random>

#include "doctest.h"

#include "orbitstab/autmap.hpp"

using namespace orbitstab;

namespace {

PlaneAut random_aut(const FieldSpecPtr& spec, std::mt19937& rng, int len) {
    std::uniform_int_distribution<int> kind(0, 2), c(-4, 4), nz(1, 4);
    std::vector<Generator> word;
    for (int i = 0; i < len; ++i) {
        switch (kind(rng)) {
            case 0: {
                // invertible triangular matrix plus translation
                FieldElem a = FieldElem::from_int(spec, nz(rng));
                FieldElem d = FieldElem::from_int(spec, nz(rng));
                word.push_back(AffineGen{a, FieldElem::from_int(spec, c(rng)), FieldElem::zero(spec), d,
                                         FieldElem::from_int(spec, c(rng)), FieldElem::from_int(spec, c(rng))});
                break;
            }
            case 1: {
                UnivarPoly P(spec, {FieldElem::from_int(spec, c(rng)), FieldElem::from_int(spec, c(rng))});
                word.push_back(ElementaryGen{FieldElem::from_int(spec, nz(rng)), FieldElem::from_int(spec, nz(rng)), P});
                break;
            }
            default: word.push_back(SwapGen{});
        }
    }
    return PlaneAut::from_word(spec, std::move(word));
}

} // namespace

TEST_CASE("expansion of the basic generators") {
    auto Q = FieldSpec::rationals();
    auto x = BivarPoly::var_x(Q), y = BivarPoly::var_y(Q);

    CHECK(PlaneAut::swap(Q).expand() == std::pair{y, x});
    CHECK(PlaneAut::identity(Q).expand() == std::pair{x, y});

    UnivarPoly P(Q, {FieldElem::from_int(Q, -2), FieldElem::zero(Q), FieldElem::one(Q)}); // x^2 - 2
    PlaneAut phi = PlaneAut::elementary(Q, FieldElem::from_int(Q, -1), FieldElem::one(Q), P);
    const auto& [f, g] = phi.expand();
    CHECK(f == -x);
    CHECK(g == y + x * x - BivarPoly::constant(Q, FieldElem::from_int(Q, 2)));
    CHECK(phi.degree() == 2);
}

TEST_CASE("composition squares the shear over V(x^2 - 2)") {
    auto Q = FieldSpec::rationals();
    UnivarPoly P(Q, {FieldElem::from_int(Q, -2), FieldElem::zero(Q), FieldElem::one(Q)});
    PlaneAut phi = PlaneAut::elementary(Q, FieldElem::from_int(Q, -1), FieldElem::one(Q), P);
    PlaneAut sq = compose(phi, phi); // (x, y + 2x^2 - 4)
    auto x = BivarPoly::var_x(Q), y = BivarPoly::var_y(Q);
    CHECK(sq.expand().first == x);
    CHECK(sq.expand().second ==
          y + (x * x).scalar_mul(FieldElem::from_int(Q, 2)) - BivarPoly::constant(Q, FieldElem::from_int(Q, 4)));
}

TEST_CASE("apply swaps the conjugate points of x^2 - 2") {
    auto K = FieldSpec::quad_ext(2);
    FieldElem s = FieldElem::quad(K, 0, 1);
    UnivarPoly P(K, {FieldElem::from_int(K, -2), FieldElem::zero(K), FieldElem::one(K)});
    PlaneAut phi = PlaneAut::elementary(K, FieldElem::from_int(K, -1), FieldElem::one(K), P);
    Point p{s, FieldElem::zero(K)};
    Point q = phi.apply(p);
    CHECK(q == Point{-s, FieldElem::zero(K)});
    CHECK(phi.apply(q) == p);
}

TEST_CASE("inversion round-trips on random words") {
    auto Q = FieldSpec::rationals();
    auto F7 = FieldSpec::prime_field(7);
    std::mt19937 rng(1203);
    for (int i = 0; i < 120; ++i) {
        for (const auto& spec : {Q, F7}) {
            PlaneAut g = random_aut(spec, rng, 3);
            CHECK(compose(g, invert(g)).is_identity());
            CHECK(compose(invert(g), g).is_identity());
            Point p{FieldElem::from_int(spec, 2), FieldElem::from_int(spec, 3)};
            CHECK(invert(g).apply(g.apply(p)) == p);
        }
    }
}

TEST_CASE("apply agrees with the polynomial expansion") {
    auto F11 = FieldSpec::prime_field(11);
    std::mt19937 rng(88);
    std::uniform_int_distribution<int> c(0, 10);
    for (int i = 0; i < 100; ++i) {
        PlaneAut g = random_aut(F11, rng, 3);
        Point p{FieldElem::from_int(F11, c(rng)), FieldElem::from_int(F11, c(rng))};
        const auto& [f, h] = g.expand();
        CHECK(g.apply(p) == Point{f.eval(p.x, p.y), h.eval(p.x, p.y)});
    }
}

TEST_CASE("pullback is contravariant") {
    auto Q = FieldSpec::rationals();
    std::mt19937 rng(9911);
    std::uniform_int_distribution<int> c(-3, 3);
    for (int i = 0; i < 100; ++i) {
        PlaneAut g = random_aut(Q, rng, 2);
        PlaneAut h = random_aut(Q, rng, 2);
        BivarPoly F(Q);
        F.set_coeff({1, 1}, FieldElem::from_int(Q, c(rng)));
        F.set_coeff({2, 0}, FieldElem::one(Q));
        F.set_coeff({0, 0}, FieldElem::from_int(Q, c(rng)));
        CHECK(poly_pullback(F, compose(g, h)) == poly_pullback(poly_pullback(F, g), h));
    }
}

TEST_CASE("stabilizes_curve on the sign-flip shear") {
    auto Q = FieldSpec::rationals();
    UnivarPoly P(Q, {FieldElem::from_int(Q, -2), FieldElem::zero(Q), FieldElem::one(Q)});
    PlaneAut phi = PlaneAut::elementary(Q, FieldElem::from_int(Q, -1), FieldElem::one(Q), P);
    BivarPoly F = BivarPoly::var_x(Q) * BivarPoly::var_x(Q) - BivarPoly::constant(Q, FieldElem::from_int(Q, 2));
    CHECK(stabilizes_curve(phi, F));
    CHECK(!stabilizes_curve(phi, BivarPoly::var_x(Q) - BivarPoly::var_y(Q)));
}

TEST_CASE("involution detection") {
    auto Q = FieldSpec::rationals();
    CHECK(is_involution(PlaneAut::swap(Q)));
    CHECK(is_involution(PlaneAut::diagonal(Q, FieldElem::one(Q), FieldElem::from_int(Q, -1))));
    CHECK(!is_involution(PlaneAut::diagonal(Q, FieldElem::from_int(Q, 2), FieldElem::one(Q))));
    CHECK(!is_involution(PlaneAut::identity(Q))); // order exactly 2
}

TEST_CASE("powers and degree growth of a Henon word") {
    auto Q = FieldSpec::rationals();
    // (x, y) -> (y, -x + y^2), as shear-then-swap
    UnivarPoly P(Q, {FieldElem::zero(Q), FieldElem::zero(Q), FieldElem::one(Q)});
    PlaneAut henon = compose(PlaneAut::elementary(Q, FieldElem::one(Q), FieldElem::from_int(Q, -1), P),
                             PlaneAut::swap(Q));
    CHECK(henon.expand().first == BivarPoly::var_y(Q));
    for (int m = 1; m <= 5; ++m) CHECK(henon.pow(m).degree() == 1 << m);
    CHECK(henon.pow(0).is_identity());
    CHECK(henon.pow(-2).equals(invert(henon.pow(2))));
}

TEST_CASE("diagonal and affine accessors validate invertibility") {
    auto Q = FieldSpec::rationals();
    CHECK_THROWS_AS(PlaneAut::diagonal(Q, FieldElem::zero(Q), FieldElem::one(Q)), Error);
    CHECK_THROWS_AS(PlaneAut::linear(Q, FieldElem::one(Q), FieldElem::one(Q), FieldElem::one(Q), FieldElem::one(Q)),
                    Error); // singular matrix
    CHECK_THROWS_AS(PlaneAut::elementary(Q, FieldElem::zero(Q), FieldElem::one(Q), UnivarPoly(Q)), Error);
}
