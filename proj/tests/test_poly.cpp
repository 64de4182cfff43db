#include <algorithm>
#include <random>

#include "doctest.h"

#include "orbitstab/linalg.hpp"
#include "orbitstab/poly.hpp"

using namespace orbitstab;

namespace {

BivarPoly random_poly(const FieldSpecPtr& spec, std::mt19937& rng, int max_deg, int terms) {
    std::uniform_int_distribution<int> e(0, max_deg), c(-9, 9);
    BivarPoly F(spec);
    for (int i = 0; i < terms; ++i) F.set_coeff({e(rng), e(rng)}, FieldElem::from_int(spec, c(rng)));
    return F;
}

} // namespace

TEST_CASE("univariate evaluation and argument scaling") {
    auto Q = FieldSpec::rationals();
    UnivarPoly P(Q, {FieldElem::from_int(Q, -2), FieldElem::zero(Q), FieldElem::one(Q)}); // x^2 - 2
    CHECK(P.degree() == 2);
    CHECK(P.eval(FieldElem::from_int(Q, 3)).str() == "7");
    UnivarPoly P2 = P.scale_arg(FieldElem::from_int(Q, 2)); // 4x^2 - 2
    CHECK(P2.eval(FieldElem::one(Q)).str() == "2");
    CHECK(P.scalar_mul(FieldElem::from_int(Q, 3)).coeff(2).str() == "3");
    CHECK(UnivarPoly(Q).is_zero());
    CHECK(UnivarPoly(Q).degree() == -1);
}

TEST_CASE("grlex term order puts the leading term first") {
    auto Q = FieldSpec::rationals();
    BivarPoly F(Q);
    F.set_coeff({0, 0}, FieldElem::from_int(Q, 5));
    F.set_coeff({1, 2}, FieldElem::one(Q));
    F.set_coeff({2, 0}, FieldElem::one(Q));
    CHECK(F.leading_exp() == Exp{1, 2}); // degree 3 beats degree 2
    CHECK(F.degree() == 3);

    BivarPoly G(Q);
    G.set_coeff({2, 1}, FieldElem::one(Q));
    G.set_coeff({1, 2}, FieldElem::one(Q));
    CHECK(G.leading_exp() == Exp{2, 1}); // same degree, larger x exponent
}

TEST_CASE("setting a coefficient to zero erases the term") {
    auto Q = FieldSpec::rationals();
    BivarPoly F(Q);
    F.set_coeff({1, 1}, FieldElem::one(Q));
    F.set_coeff({1, 1}, FieldElem::zero(Q));
    CHECK(F.is_zero());
    CHECK((F - F).is_zero());
}

TEST_CASE("substitution expands compositions") {
    auto Q = FieldSpec::rationals();
    BivarPoly x = BivarPoly::var_x(Q), y = BivarPoly::var_y(Q);
    BivarPoly F = x * x - y; // x^2 - y
    // F(y, x^2) = y^2 - x^2
    BivarPoly G = F.subst(y, x * x);
    CHECK(G == y * y - x * x);
    CHECK(F.subst(x, y) == F);
    CHECK(F.eval(FieldElem::from_int(Q, 3), FieldElem::from_int(Q, 4)).str() == "5");
}

TEST_CASE("monic normalization and associates") {
    auto Q = FieldSpec::rationals();
    BivarPoly x = BivarPoly::var_x(Q), y = BivarPoly::var_y(Q);
    BivarPoly F = (x * y - BivarPoly::constant(Q, FieldElem::one(Q))).scalar_mul(FieldElem::from_int(Q, 3));
    CHECK(F.monic().leading_coeff().is_one());
    CHECK(F.is_associate_of(F.monic()));
    CHECK(F.associate_scalar(F.monic())->str() == "1/3");
    CHECK(!F.is_associate_of(x * y));
    CHECK(!BivarPoly::zero(Q).is_associate_of(F));
}

TEST_CASE("exact division") {
    auto Q = FieldSpec::rationals();
    BivarPoly x = BivarPoly::var_x(Q), y = BivarPoly::var_y(Q);
    BivarPoly A = x + y;
    BivarPoly B = A * A;
    auto quot = poly_divides(A, B);
    REQUIRE(quot);
    CHECK(*quot == A);
    CHECK(!poly_divides(x + BivarPoly::constant(Q, FieldElem::one(Q)), x * y));
}

TEST_CASE("univariate-in-x recognition") {
    auto Q = FieldSpec::rationals();
    BivarPoly x = BivarPoly::var_x(Q), y = BivarPoly::var_y(Q);
    BivarPoly F = x * x - BivarPoly::constant(Q, FieldElem::from_int(Q, 2));
    CHECK(F.is_univariate_x());
    auto P = F.to_univar_x();
    REQUIRE(P);
    CHECK(P->degree() == 2);
    CHECK(BivarPoly::from_univar_x(*P) == F);
    CHECK(!(F + y).is_univariate_x());
    CHECK(!BivarPoly::zero(Q).is_univariate_x()); // zero is not a curve equation
}

TEST_CASE("galois action on coefficients") {
    auto K = FieldSpec::quad_ext(2);
    FieldElem s = FieldElem::quad(K, 0, 1);
    BivarPoly F = BivarPoly::var_x(K) - BivarPoly::constant(K, s); // x - sqrt(2)
    BivarPoly Fc = F.galois_apply();
    CHECK(Fc == BivarPoly::var_x(K) + BivarPoly::constant(K, s));
    CHECK((F * Fc).has_base_coeffs()); // x^2 - 2
    CHECK(!F.has_base_coeffs());
}

TEST_CASE("ring axioms on random polynomials") {
    auto F5 = FieldSpec::prime_field(5);
    auto Q = FieldSpec::rationals();
    std::mt19937 rng(424242);
    for (int i = 0; i < 250; ++i) {
        for (const auto& spec : {F5, Q}) {
            BivarPoly A = random_poly(spec, rng, 3, 4);
            BivarPoly B = random_poly(spec, rng, 3, 4);
            BivarPoly C = random_poly(spec, rng, 3, 4);
            CHECK(A * B == B * A);
            CHECK(A * (B + C) == A * B + A * C);
            CHECK((A + B) - B == A);
            CHECK((A * B) * C == A * (B * C));
        }
    }
}

TEST_CASE("pow matches repeated multiplication") {
    auto Q = FieldSpec::rationals();
    BivarPoly A = BivarPoly::var_x(Q) + BivarPoly::var_y(Q) + BivarPoly::constant(Q, FieldElem::one(Q));
    BivarPoly prod = BivarPoly::constant(Q, FieldElem::one(Q));
    for (int n = 0; n <= 5; ++n) {
        CHECK(A.pow(n) == prod);
        prod = prod * A;
    }
}

TEST_CASE("nullspace dimension and exactness") {
    auto Q = FieldSpec::rationals();
    auto e = [&](int n) { return FieldElem::from_int(Q, n); };
    // rank-2 matrix with a 1-dimensional nullspace: rows (1,2,3), (4,5,6)
    Matrix M = {{e(1), e(2), e(3)}, {e(4), e(5), e(6)}};
    auto basis = nullspace(M, Q, 3);
    REQUIRE(basis.size() == 1);
    const auto& v = basis[0];
    for (const auto& row : M) {
        FieldElem dot = FieldElem::zero(Q);
        for (std::size_t j = 0; j < 3; ++j) dot = dot + row[j] * v[j];
        CHECK(dot.is_zero());
    }

    CHECK(nullspace({{e(1), e(0)}, {e(0), e(1)}}, Q, 2).empty());
    CHECK(nullspace({}, Q, 3).size() == 3);
}

TEST_CASE("nullspace over a finite field on random matrices") {
    auto F7 = FieldSpec::prime_field(7);
    std::mt19937 rng(777);
    std::uniform_int_distribution<int> c(0, 6);
    for (int trial = 0; trial < 100; ++trial) {
        Matrix M(3, std::vector<FieldElem>(5, FieldElem::zero(F7)));
        for (auto& row : M)
            for (auto& x : row) x = FieldElem::from_int(F7, c(rng));
        auto basis = nullspace(M, F7, 5);
        CHECK(basis.size() >= 2); // 5 columns, rank <= 3
        for (const auto& v : basis) {
            for (const auto& row : M) {
                FieldElem dot = FieldElem::zero(F7);
                for (std::size_t j = 0; j < 5; ++j) dot = dot + row[j] * v[j];
                CHECK(dot.is_zero());
            }
        }
    }
}

TEST_CASE("row_reduce is idempotent") {
    auto Q = FieldSpec::rationals();
    std::mt19937 rng(31337);
    std::uniform_int_distribution<int> c(-5, 5);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<std::vector<FieldElem>> rows(4, std::vector<FieldElem>(4, FieldElem::zero(Q)));
        for (auto& row : rows)
            for (auto& x : row) x = FieldElem::from_int(Q, c(rng));
        auto r1 = row_reduce(rows, Q);
        auto r2 = row_reduce(r1, Q);
        CHECK(r1 == r2);
        for (const auto& row : r1) {
            auto lead = std::find_if(row.begin(), row.end(), [](const FieldElem& x) { return !x.is_zero(); });
            REQUIRE(lead != row.end());
            CHECK(lead->is_one());
        }
    }
}
