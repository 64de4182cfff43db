#include "orbitstab/classify.hpp"

#include <numeric>

namespace orbitstab {

namespace {

// u*a + v*b = gcd(a, b) over the integers
void ext_gcd(std::int64_t a, std::int64_t b, std::int64_t& u, std::int64_t& v) {
    u = 1;
    v = 0;
    std::int64_t u1 = 0, v1 = 1;
    while (b != 0) {
        std::int64_t q = a / b;
        std::swap(a -= q * b, b);
        std::swap(u -= q * u1, u1);
        std::swap(v -= q * v1, v1);
    }
    if (a < 0) {
        u = -u;
        v = -v;
    }
}

BivarPoly t1_template(const FieldSpecPtr& spec, int a, int b, const FieldElem& lambda) {
    BivarPoly F(spec);
    F.set_coeff({b, 0}, FieldElem::one(spec));
    F.set_coeff({0, a}, -lambda);
    return F;
}

BivarPoly t2_template(const FieldSpecPtr& spec, int a, int b, const FieldElem& lambda) {
    BivarPoly F(spec);
    F.set_coeff({b, a}, FieldElem::one(spec));
    F.set_coeff({0, 0}, -lambda);
    return F;
}

BivarPoly t4_template(const FieldSpecPtr& spec, const FieldElem& lambda, const FieldElem& nu) {
    BivarPoly F(spec);
    F.set_coeff({2, 0}, lambda);
    F.set_coeff({0, 2}, nu);
    F.set_coeff({0, 0}, -FieldElem::one(spec));
    return F;
}

BivarPoly t5_template(const FieldSpecPtr& spec, const FieldElem& mu) {
    BivarPoly F(spec);
    FieldElem one = FieldElem::one(spec);
    F.set_coeff({2, 0}, one);
    F.set_coeff({1, 1}, mu);
    F.set_coeff({0, 2}, one);
    F.set_coeff({0, 0}, -one);
    return F;
}

std::vector<Exp> support_of(const BivarPoly& F) {
    std::vector<Exp> s;
    for (const auto& [e, c] : F.terms()) s.push_back(e);
    return s;
}

CurveDescriptor flagged(CurveType type, const BivarPoly& F, std::string note) {
    CurveDescriptor d;
    d.type = type;
    d.defining_poly = F;
    d.side_conditions_ok = false;
    d.note = std::move(note);
    return d;
}

} // namespace

std::string curve_type_name(CurveType t) {
    switch (t) {
        case CurveType::T1: return "1";
        case CurveType::T2: return "2";
        case CurveType::T3: return "3";
        case CurveType::T4: return "4";
        case CurveType::T5: return "5";
        case CurveType::T6: return "6";
        case CurveType::Fence: return "fence";
        case CurveType::Other: return "other";
    }
    return "other";
}

CurveDescriptor make_t1(const FieldSpecPtr& spec, int a, int b, const FieldElem& lambda) {
    if (a <= 1 || b <= 1) throw Error("type (1) requires a, b > 1");
    if (std::gcd(a, b) != 1) throw Error("type (1) requires gcd(a, b) = 1");
    if (lambda.is_zero()) throw Error("type (1) requires lambda != 0");
    CurveDescriptor d;
    d.type = CurveType::T1;
    d.a = a;
    d.b = b;
    d.lambda = lambda;
    d.defining_poly = t1_template(spec, a, b, lambda);
    d.side_conditions_ok = true;
    return d;
}

CurveDescriptor make_t2(const FieldSpecPtr& spec, int a, int b, const FieldElem& lambda) {
    if (a < 1 || b < 1) throw Error("type (2) requires a, b >= 1");
    if (a * b == 1) throw Error("type (2) requires ab != 1");
    if (std::gcd(a, b) != 1) throw Error("type (2) requires gcd(a, b) = 1");
    if (lambda.is_zero()) throw Error("type (2) requires lambda != 0");
    CurveDescriptor d;
    d.type = CurveType::T2;
    d.a = a;
    d.b = b;
    d.lambda = lambda;
    d.defining_poly = t2_template(spec, a, b, lambda);
    d.side_conditions_ok = true;
    return d;
}

CurveDescriptor make_t3(const FieldSpecPtr& spec, const FieldElem& lambda) {
    if (lambda.is_zero()) throw Error("type (3) requires lambda != 0");
    CurveDescriptor d;
    d.type = CurveType::T3;
    d.a = 1;
    d.b = 1;
    d.lambda = lambda;
    BivarPoly F(spec);
    F.set_coeff({1, 1}, FieldElem::one(spec));
    F.set_coeff({0, 0}, -lambda);
    d.defining_poly = F;
    d.side_conditions_ok = true;
    return d;
}

CurveDescriptor make_t4(const FieldSpecPtr& spec, const FieldElem& lambda, const FieldElem& nu) {
    if (spec->characteristic() == 2) throw Error("type (4) requires characteristic != 2");
    if (lambda.is_zero() || nu.is_zero()) throw Error("type (4) requires lambda, nu != 0");
    CurveDescriptor d;
    d.type = CurveType::T4;
    d.lambda = lambda;
    d.nu = nu;
    d.defining_poly = t4_template(spec, lambda, nu);
    d.side_conditions_ok = true;
    try {
        if (is_square(-(lambda * nu))) throw Error("type (4) requires -lambda*nu to be a non-square");
    } catch (const Error& e) {
        std::string what = e.what();
        if (what.find("non-square") != std::string::npos) throw;
        d.side_conditions_ok = false;
        d.note = "non-square condition not decidable: " + what;
    }
    return d;
}

CurveDescriptor make_t5(const FieldSpecPtr& spec, const FieldElem& mu) {
    if (spec->characteristic() != 2) throw Error("type (5) requires characteristic 2");
    if (mu.is_zero()) throw Error("type (5) requires mu != 0");
    if (quadratic_has_root(mu)) throw Error("type (5) requires x^2 + mu*x + 1 without roots");
    CurveDescriptor d;
    d.type = CurveType::T5;
    d.mu = mu;
    d.defining_poly = t5_template(spec, mu);
    d.side_conditions_ok = true;
    return d;
}

CurveDescriptor make_t6(const FieldSpecPtr& spec) {
    CurveDescriptor d;
    d.type = CurveType::T6;
    d.defining_poly = BivarPoly::var_x(spec);
    d.side_conditions_ok = true;
    return d;
}

CurveDescriptor make_fence(const UnivarPoly& P) {
    if (P.degree() < 1) throw Error("a fence requires a nonconstant polynomial in x");
    CurveDescriptor d;
    d.type = CurveType::Fence;
    d.fence_poly = P;
    d.defining_poly = BivarPoly::from_univar_x(P);
    d.side_conditions_ok = true;
    return d;
}

CurveDescriptor classify_canonical(const BivarPoly& F) {
    if (F.is_zero()) throw Error("classify_canonical requires a nonzero polynomial");
    const FieldSpecPtr& spec = F.spec();
    BivarPoly M = F.monic();
    auto supp = support_of(M);
    std::int64_t p = spec->characteristic();
    FieldElem one = FieldElem::one(spec);

    // conics first
    if (p != 2 && supp == std::vector<Exp>{{2, 0}, {0, 2}, {0, 0}}) {
        FieldElem c = M.coeff({0, 2}), e = M.coeff({0, 0});
        FieldElem lambda = -e.inverse(), nu = c * lambda;
        try {
            return make_t4(spec, lambda, nu);
        } catch (const Error& err) {
            auto d = flagged(CurveType::T4, M, err.what());
            d.lambda = lambda;
            d.nu = nu;
            return d;
        }
    }
    if (p == 2 && supp == std::vector<Exp>{{2, 0}, {1, 1}, {0, 2}, {0, 0}}) {
        if (M.coeff({0, 2}) == one && M.coeff({0, 0}) == one) {
            FieldElem mu = M.coeff({1, 1});
            try {
                return make_t5(spec, mu);
            } catch (const Error& err) {
                auto d = flagged(CurveType::T5, M, err.what());
                d.mu = mu;
                return d;
            }
        }
        return flagged(CurveType::Other, M, "characteristic-2 conic not in the canonical norm form");
    }

    if (supp.size() == 2 && supp[1] == Exp{0, 0}) {
        Exp lead = supp[0];
        FieldElem lambda = -M.coeff({0, 0});
        if (lead == Exp{1, 1}) return make_t3(spec, lambda); // xy - lambda; never type (2)
        if (lead.first >= 1 && lead.second >= 1) {
            int b = lead.first, a = lead.second;
            try {
                return make_t2(spec, a, b, lambda);
            } catch (const Error& err) {
                auto d = flagged(CurveType::T2, M, err.what());
                d.a = a;
                d.b = b;
                d.lambda = lambda;
                return d;
            }
        }
    }

    if (supp.size() == 2 && supp[0].second == 0 && supp[1].first == 0 && supp[1].second >= 1) {
        // x^b + c*y^a; after monic rescaling lambda = -c
        int b = supp[0].first, a = supp[1].second;
        FieldElem lambda = -M.coeff({0, a});
        try {
            return make_t1(spec, a, b, lambda);
        } catch (const Error& err) {
            auto d = flagged(CurveType::T1, M, err.what());
            d.a = a;
            d.b = b;
            d.lambda = lambda;
            return d;
        }
    }
    if (supp.size() == 2 && supp[0].first == 0 && supp[1].second == 0 && supp[1].first >= 1) {
        // y^a + c*x^b, leading term in y: associate x^b + c^{-1} y^a
        int a = supp[0].second, b = supp[1].first;
        FieldElem lambda = -M.coeff({b, 0}).inverse();
        try {
            return make_t1(spec, a, b, lambda);
        } catch (const Error& err) {
            auto d = flagged(CurveType::T1, M.scalar_mul(M.coeff({b, 0}).inverse()), err.what());
            d.a = a;
            d.b = b;
            d.lambda = lambda;
            return d;
        }
    }

    if (M == BivarPoly::var_x(spec)) return make_t6(spec);
    if (M.is_univariate_x() && M.degree() >= 1) return make_fence(*M.to_univar_x());

    return flagged(CurveType::Other, M, "no canonical template matches the monomial support");
}

PlaneAut distinguished_involution(const CurveDescriptor& desc) {
    const FieldSpecPtr& spec = desc.spec();
    FieldElem one = FieldElem::one(spec), zero = FieldElem::zero(spec);
    switch (desc.type) {
        case CurveType::T3: return PlaneAut::swap(spec);
        case CurveType::T4: return PlaneAut::linear(spec, one, zero, zero, -one);
        case CurveType::T5: return PlaneAut::linear(spec, one, *desc.mu, zero, one);
        default: throw Error("the distinguished involution exists for types (3)-(5) only");
    }
}

TorusOps::TorusOps(const CurveDescriptor& desc) : desc_(desc), spec_(desc.spec()) {
    switch (desc.type) {
        case CurveType::T1:
        case CurveType::T2:
        case CurveType::T3:
        case CurveType::T4:
        case CurveType::T5: break;
        default: throw Error("torus arithmetic exists for types (1)-(5) only");
    }
}

std::vector<FieldElem> TorusOps::identity() const {
    FieldElem one = FieldElem::one(spec_);
    if (desc_.type == CurveType::T4 || desc_.type == CurveType::T5) return {one, FieldElem::zero(spec_)};
    return {one};
}

std::vector<FieldElem> TorusOps::mul(const std::vector<FieldElem>& u, const std::vector<FieldElem>& v) const {
    if (desc_.type == CurveType::T4) {
        const FieldElem &a = u[0], &b = u[1], &c = v[0], &d = v[1];
        return {a * c - (*desc_.lambda) * (*desc_.nu) * b * d, a * d + c * b};
    }
    if (desc_.type == CurveType::T5) {
        const FieldElem &a = u[0], &b = u[1], &c = v[0], &d = v[1];
        return {a * c + b * d, a * d + c * b + (*desc_.mu) * b * d};
    }
    return {u[0] * v[0]};
}

std::vector<FieldElem> TorusOps::inv(const std::vector<FieldElem>& u) const {
    if (desc_.type == CurveType::T4) return {u[0], -u[1]};
    if (desc_.type == CurveType::T5) return {u[0] + (*desc_.mu) * u[1], u[1]};
    return {u[0].inverse()};
}

std::vector<FieldElem> TorusOps::power(const std::vector<FieldElem>& u, std::int64_t n) const {
    std::vector<FieldElem> base = n < 0 ? inv(u) : u;
    std::uint64_t e = n < 0 ? static_cast<std::uint64_t>(-(n + 1)) + 1 : static_cast<std::uint64_t>(n);
    std::vector<FieldElem> r = identity();
    while (e > 0) {
        if (e & 1) r = mul(r, base);
        base = mul(base, base);
        e >>= 1;
    }
    return r;
}

bool TorusOps::is_identity(const std::vector<FieldElem>& u) const { return u == identity(); }

bool TorusOps::valid(const std::vector<FieldElem>& u) const {
    FieldElem one = FieldElem::one(spec_);
    if (desc_.type == CurveType::T4) {
        if (u.size() != 2) return false;
        return u[0] * u[0] + (*desc_.lambda) * (*desc_.nu) * u[1] * u[1] == one;
    }
    if (desc_.type == CurveType::T5) {
        if (u.size() != 2) return false;
        return u[0] * u[0] + (*desc_.mu) * u[0] * u[1] + u[1] * u[1] == one;
    }
    return u.size() == 1 && !u[0].is_zero();
}

PlaneAut TorusOps::element(const std::vector<FieldElem>& u) const {
    if (!valid(u)) throw Error("parameter violates the torus membership equation");
    FieldElem zero = FieldElem::zero(spec_);
    switch (desc_.type) {
        case CurveType::T1: return PlaneAut::diagonal(spec_, u[0].pow(desc_.a), u[0].pow(desc_.b));
        case CurveType::T2: return PlaneAut::diagonal(spec_, u[0].pow(desc_.a), u[0].pow(-desc_.b));
        case CurveType::T3: return PlaneAut::diagonal(spec_, u[0], u[0].inverse());
        case CurveType::T4: return PlaneAut::linear(spec_, u[0], -(*desc_.nu) * u[1], (*desc_.lambda) * u[1], u[0]);
        case CurveType::T5: return PlaneAut::linear(spec_, u[0], u[1], u[1], u[0] + (*desc_.mu) * u[1]);
        default: throw Error("unreachable");
    }
}

std::optional<std::vector<FieldElem>> TorusOps::param_of(const PlaneAut& g) const {
    const auto& [f, h] = g.expand();
    Exp ex{1, 0}, ey{0, 1};
    auto linear_only = [&](const BivarPoly& q) {
        for (const auto& [e, c] : q.terms())
            if (e != ex && e != ey) return false;
        return true;
    };
    if (!linear_only(f) || !linear_only(h)) return std::nullopt;
    FieldElem m00 = f.coeff(ex), m01 = f.coeff(ey), m10 = h.coeff(ex), m11 = h.coeff(ey);
    FieldElem zero = FieldElem::zero(spec_);

    switch (desc_.type) {
        case CurveType::T1:
        case CurveType::T2: {
            if (m01 != zero || m10 != zero || m00.is_zero() || m11.is_zero()) return std::nullopt;
            std::int64_t w1 = desc_.a, w2 = desc_.type == CurveType::T1 ? desc_.b : -desc_.b;
            std::int64_t u, v;
            ext_gcd(w1, w2, u, v);
            FieldElem t = m00.pow(u) * m11.pow(v);
            if (t.is_zero() || m00 != t.pow(w1) || m11 != t.pow(w2)) return std::nullopt;
            return std::vector<FieldElem>{t};
        }
        case CurveType::T3: {
            if (m01 != zero || m10 != zero || m00.is_zero()) return std::nullopt;
            if (m11 != m00.inverse()) return std::nullopt;
            return std::vector<FieldElem>{m00};
        }
        case CurveType::T4: {
            if (m00 != m11) return std::nullopt;
            FieldElem b = m10 / *desc_.lambda;
            if (m01 != -(*desc_.nu) * b) return std::nullopt;
            std::vector<FieldElem> u{m00, b};
            if (!valid(u)) return std::nullopt;
            return u;
        }
        case CurveType::T5: {
            if (m01 != m10) return std::nullopt;
            if (m11 != m00 + (*desc_.mu) * m10) return std::nullopt;
            std::vector<FieldElem> u{m00, m10};
            if (!valid(u)) return std::nullopt;
            return u;
        }
        default: return std::nullopt;
    }
}

std::optional<std::pair<std::vector<FieldElem>, bool>> TorusOps::split_element(const PlaneAut& g) const {
    if (auto u = param_of(g)) return std::make_pair(*u, false);
    if (desc_.type == CurveType::T3 || desc_.type == CurveType::T4 || desc_.type == CurveType::T5) {
        PlaneAut h = compose(g, distinguished_involution(desc_));
        if (auto u = param_of(h)) return std::make_pair(*u, true);
    }
    return std::nullopt;
}

std::vector<std::vector<FieldElem>> TorusOps::enumerate_params() const {
    if (!spec_->is_finite()) throw Error("torus enumeration requires a finite field");
    std::vector<std::vector<FieldElem>> out;
    if (desc_.type == CurveType::T4 || desc_.type == CurveType::T5) {
        auto elems = all_field_elements(spec_);
        for (const auto& a : elems)
            for (const auto& b : elems) {
                std::vector<FieldElem> u{a, b};
                if (valid(u)) out.push_back(std::move(u));
            }
        return out;
    }
    for (const auto& t : all_field_elements(spec_))
        if (!t.is_zero()) out.push_back({t});
    return out;
}

std::vector<PlaneAut> enumerate_symmetry_elements(const CurveDescriptor& desc) {
    if (desc.type != CurveType::T3 && desc.type != CurveType::T4 && desc.type != CurveType::T5)
        throw Error("element enumeration covers types (3)-(5) only");
    if (!desc.side_conditions_ok) throw Error("element enumeration requires verified side conditions");
    if (!desc.spec()->is_finite()) throw Error("element enumeration requires a finite field");
    TorusOps ops(desc);
    PlaneAut iota = distinguished_involution(desc);
    std::vector<PlaneAut> out;
    auto params = ops.enumerate_params();
    for (const auto& u : params) out.push_back(ops.element(u));
    for (const auto& u : params) out.push_back(compose(ops.element(u), iota));
    return out;
}

GroupDescriptor symmetry_group(const CurveDescriptor& desc) {
    if (!desc.side_conditions_ok) throw HypothesisError("symmetry group requires a verified canonical descriptor");
    const FieldSpecPtr& spec = desc.spec();
    GroupDescriptor g;
    bool finite_field = spec->is_finite();
    g.countability = finite_field ? GroupDescriptor::Countability::Finite
                                  : GroupDescriptor::Countability::ContinuumParametrized;
    switch (desc.type) {
        case CurveType::T1:
            g.shape = GroupDescriptor::Shape::TorusWeights;
            g.weight_a = desc.a;
            g.weight_b = desc.b;
            g.note = "{(t^a x, t^b y) : t in k*}";
            break;
        case CurveType::T2:
            g.shape = GroupDescriptor::Shape::TorusWeights;
            g.weight_a = desc.a;
            g.weight_b = -desc.b;
            g.note = "{(t^a x, t^-b y) : t in k*}";
            break;
        case CurveType::T3:
            g.shape = GroupDescriptor::Shape::TorusExtInvolution;
            g.weight_a = 1;
            g.weight_b = -1;
            g.involution = distinguished_involution(desc);
            g.note = "{(t x, t^-1 y) : t in k*} extended by (y, x)";
            break;
        case CurveType::T4:
            g.shape = GroupDescriptor::Shape::TorusExtInvolution;
            g.split_torus = false;
            g.involution = distinguished_involution(desc);
            g.note = "norm-one torus {a^2 + lambda*nu*b^2 = 1} extended by (x, -y)";
            break;
        case CurveType::T5:
            g.shape = GroupDescriptor::Shape::TorusExtInvolution;
            g.split_torus = false;
            g.involution = distinguished_involution(desc);
            g.note = "norm-one torus {a^2 + mu*a*b + b^2 = 1} extended by (x + mu*y, y)";
            break;
        case CurveType::T6:
            g.shape = GroupDescriptor::Shape::JonquieresLine;
            g.is_algebraic = false;
            g.countability = finite_field ? GroupDescriptor::Countability::CountablyInfinite
                                          : GroupDescriptor::Countability::ContinuumParametrized;
            g.note = "{(a x, b y + P(x)) : a, b in k*}; kernel on the line: {(a x, y + P(x)) : P(0) = 0}";
            break;
        case CurveType::Fence:
            g.shape = GroupDescriptor::Shape::FenceFamily;
            g.is_algebraic = false;
            g.countability = finite_field ? GroupDescriptor::Countability::CountablyInfinite
                                          : GroupDescriptor::Countability::ContinuumParametrized;
            g.note = "{(alpha x + beta, gamma y + Q(x)) : F(alpha x + beta) in k* F(x)}; lower bound only";
            break;
        default: throw HypothesisError("no symmetry-group family for an unclassified curve");
    }
    if (finite_field) {
        if (desc.type == CurveType::T3 || desc.type == CurveType::T4 || desc.type == CurveType::T5) {
            g.elements = enumerate_symmetry_elements(desc);
        } else if (desc.type == CurveType::T1 || desc.type == CurveType::T2) {
            TorusOps ops(desc);
            for (const auto& u : ops.enumerate_params()) g.elements.push_back(ops.element(u));
        }
    }
    return g;
}

AlgebraicityReport algebraicity(const GroupDescriptor& g) {
    if (g.shape == GroupDescriptor::Shape::Finite) return {true, "finite group"};
    if (g.shape == GroupDescriptor::Shape::JonquieresLine || g.shape == GroupDescriptor::Shape::FenceFamily ||
        g.shape == GroupDescriptor::Shape::LowerBoundOnly)
        return {false, "unbounded degree"};
    if (g.countability == GroupDescriptor::Countability::Finite) return {true, "finite group"};
    if (g.countability == GroupDescriptor::Countability::CountablyInfinite)
        return {false, "countably infinite"};
    return {true, "algebraic torus, possibly extended by an involution"};
}

PlaneAut make_family_element(const CurveDescriptor& desc, const FamilyParams& params) {
    const FieldSpecPtr& spec = desc.spec();
    switch (desc.type) {
        case CurveType::T1:
        case CurveType::T2:
        case CurveType::T3:
        case CurveType::T4:
        case CurveType::T5: {
            TorusOps ops(desc);
            PlaneAut g = ops.element(params.scalars); // validates membership
            if (params.involution_flag) {
                if (desc.type == CurveType::T1 || desc.type == CurveType::T2)
                    throw Error("types (1) and (2) have no involution coset");
                g = compose(g, distinguished_involution(desc));
            }
            return g;
        }
        case CurveType::T6: {
            if (params.scalars.size() != 2 || params.scalars[0].is_zero() || params.scalars[1].is_zero())
                throw Error("type (6) requires nonzero scalars a, b");
            UnivarPoly P = params.poly ? *params.poly : UnivarPoly(spec);
            return PlaneAut::elementary(spec, params.scalars[0], params.scalars[1], P);
        }
        case CurveType::Fence: {
            if (!params.alpha || !params.gamma) throw Error("a fence element requires alpha and gamma");
            FieldElem alpha = *params.alpha, gamma = *params.gamma;
            FieldElem beta = params.beta ? *params.beta : FieldElem::zero(spec);
            if (alpha.is_zero() || gamma.is_zero()) throw Error("a fence element requires alpha, gamma != 0");
            BivarPoly Fx = desc.defining_poly;
            BivarPoly arg = BivarPoly::var_x(spec).scalar_mul(alpha) + BivarPoly::constant(spec, beta);
            if (!Fx.subst(arg, BivarPoly::var_y(spec)).is_associate_of(Fx))
                throw Error("alpha, beta do not preserve the fence");
            UnivarPoly Q = params.poly ? *params.poly : UnivarPoly(spec);
            PlaneAut shear = PlaneAut::elementary(spec, FieldElem::one(spec), gamma, Q);
            PlaneAut aff = PlaneAut::affine(spec, alpha, FieldElem::zero(spec), FieldElem::zero(spec),
                                            FieldElem::one(spec), beta, FieldElem::zero(spec));
            return compose(aff, shear); // (alpha x + beta, gamma y + Q(x))
        }
        default: throw Error("no parametrized family for an unclassified curve");
    }
}

} // namespace orbitstab
