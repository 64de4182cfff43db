#include "orbitstab/poly.hpp"

#include <sstream>

namespace orbitstab {

UnivarPoly::UnivarPoly(FieldSpecPtr spec, std::vector<FieldElem> coeffs)
    : spec_(std::move(spec)), coeffs_(std::move(coeffs)) {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

FieldElem UnivarPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return FieldElem::zero(spec_);
    return coeffs_[i];
}

FieldElem UnivarPoly::eval(const FieldElem& x) const {
    FieldElem r = FieldElem::zero(spec_);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = r * x + *it;
    return r;
}

UnivarPoly UnivarPoly::scale_arg(const FieldElem& c) const {
    std::vector<FieldElem> out;
    out.reserve(coeffs_.size());
    FieldElem ci = FieldElem::one(spec_);
    for (const auto& a : coeffs_) {
        out.push_back(a * ci);
        ci = ci * c;
    }
    return UnivarPoly(spec_, std::move(out));
}

UnivarPoly UnivarPoly::scalar_mul(const FieldElem& c) const {
    std::vector<FieldElem> out;
    out.reserve(coeffs_.size());
    for (const auto& a : coeffs_) out.push_back(a * c);
    return UnivarPoly(spec_, std::move(out));
}

UnivarPoly UnivarPoly::operator+(const UnivarPoly& o) const {
    std::vector<FieldElem> out(std::max(coeffs_.size(), o.coeffs_.size()), FieldElem::zero(spec_));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] = out[i] + coeffs_[i];
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) out[i] = out[i] + o.coeffs_[i];
    return UnivarPoly(spec_, std::move(out));
}

// ---------------------------------------------------------------------------

BivarPoly BivarPoly::constant(const FieldSpecPtr& spec, const FieldElem& c) {
    BivarPoly p(spec);
    p.set_coeff({0, 0}, c);
    return p;
}

BivarPoly BivarPoly::monomial(const FieldSpecPtr& spec, Exp e, const FieldElem& c) {
    BivarPoly p(spec);
    p.set_coeff(e, c);
    return p;
}

BivarPoly BivarPoly::var_x(const FieldSpecPtr& spec) {
    return monomial(spec, {1, 0}, FieldElem::one(spec));
}

BivarPoly BivarPoly::var_y(const FieldSpecPtr& spec) {
    return monomial(spec, {0, 1}, FieldElem::one(spec));
}

BivarPoly BivarPoly::from_univar_x(const UnivarPoly& p) {
    BivarPoly out(p.spec());
    for (int i = 0; i <= p.degree(); ++i) out.set_coeff({i, 0}, p.coeff(i));
    return out;
}

int BivarPoly::degree() const {
    if (terms_.empty()) return -1;
    auto e = terms_.begin()->first;
    return e.first + e.second;
}

Exp BivarPoly::leading_exp() const {
    if (terms_.empty()) throw Error("leading term of the zero polynomial");
    return terms_.begin()->first;
}

FieldElem BivarPoly::leading_coeff() const {
    if (terms_.empty()) throw Error("leading term of the zero polynomial");
    return terms_.begin()->second;
}

FieldElem BivarPoly::coeff(Exp e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? FieldElem::zero(spec_) : it->second;
}

void BivarPoly::set_coeff(Exp e, const FieldElem& c) {
    if (c.is_zero())
        terms_.erase(e);
    else
        terms_.insert_or_assign(e, c);
}

BivarPoly BivarPoly::operator+(const BivarPoly& o) const {
    BivarPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.set_coeff(e, r.coeff(e) + c);
    return r;
}

BivarPoly BivarPoly::operator-() const {
    BivarPoly r(spec_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

BivarPoly BivarPoly::operator-(const BivarPoly& o) const {
    return *this + (-o);
}

BivarPoly BivarPoly::operator*(const BivarPoly& o) const {
    BivarPoly r(spec_);
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) {
            Exp e{e1.first + e2.first, e1.second + e2.second};
            auto [it, inserted] = r.terms_.try_emplace(e, c1 * c2);
            if (!inserted) it->second = it->second + c1 * c2;
        }
    for (auto it = r.terms_.begin(); it != r.terms_.end();) {
        if (it->second.is_zero())
            it = r.terms_.erase(it);
        else
            ++it;
    }
    return r;
}

BivarPoly BivarPoly::scalar_mul(const FieldElem& c) const {
    BivarPoly r(spec_);
    if (c.is_zero()) return r;
    for (const auto& [e, a] : terms_) r.terms_.emplace(e, a * c);
    return r;
}

BivarPoly BivarPoly::pow(int n) const {
    BivarPoly r = constant(spec_, FieldElem::one(spec_));
    BivarPoly base = *this;
    while (n > 0) {
        if (n & 1) r = r * base;
        base = base * base;
        n >>= 1;
    }
    return r;
}

FieldElem BivarPoly::eval(const FieldElem& x, const FieldElem& y) const {
    FieldElem r = FieldElem::zero(spec_);
    for (const auto& [e, c] : terms_) r = r + c * x.pow(e.first) * y.pow(e.second);
    return r;
}

BivarPoly BivarPoly::subst(const BivarPoly& f, const BivarPoly& g) const {
    // cache powers of f and g
    std::vector<BivarPoly> fpow{constant(spec_, FieldElem::one(spec_))};
    std::vector<BivarPoly> gpow{constant(spec_, FieldElem::one(spec_))};
    BivarPoly r(spec_);
    for (const auto& [e, c] : terms_) {
        while (static_cast<int>(fpow.size()) <= e.first) fpow.push_back(fpow.back() * f);
        while (static_cast<int>(gpow.size()) <= e.second) gpow.push_back(gpow.back() * g);
        r = r + (fpow[e.first] * gpow[e.second]).scalar_mul(c);
    }
    return r;
}

BivarPoly BivarPoly::monic() const {
    if (terms_.empty()) return *this;
    return scalar_mul(leading_coeff().inverse());
}

std::optional<FieldElem> BivarPoly::associate_scalar(const BivarPoly& o) const {
    if (terms_.empty() || o.terms_.empty()) return std::nullopt;
    if (terms_.size() != o.terms_.size()) return std::nullopt;
    auto it1 = terms_.begin();
    auto it2 = o.terms_.begin();
    FieldElem c = it2->second / it1->second;
    for (; it1 != terms_.end(); ++it1, ++it2) {
        if (it1->first != it2->first) return std::nullopt;
        if (!(it1->second * c == it2->second)) return std::nullopt;
    }
    return c;
}

bool BivarPoly::has_base_coeffs() const {
    for (const auto& [e, c] : terms_)
        if (!c.in_base()) return false;
    return true;
}

BivarPoly BivarPoly::galois_apply() const {
    BivarPoly r(spec_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, c.galois_apply());
    return r;
}

bool BivarPoly::is_univariate_x() const {
    for (const auto& [e, c] : terms_)
        if (e.second != 0) return false;
    return !terms_.empty();
}

std::optional<UnivarPoly> BivarPoly::to_univar_x() const {
    if (!is_univariate_x() && !terms_.empty()) return std::nullopt;
    std::vector<FieldElem> coeffs(degree() + 1, FieldElem::zero(spec_));
    for (const auto& [e, c] : terms_) {
        if (e.second != 0) return std::nullopt;
        coeffs[e.first] = c;
    }
    return UnivarPoly(spec_, std::move(coeffs));
}

std::string BivarPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")";
        if (e.first > 0) os << "*x^" << e.first;
        if (e.second > 0) os << "*y^" << e.second;
    }
    return os.str();
}

std::optional<BivarPoly> poly_divides(const BivarPoly& A, const BivarPoly& B) {
    if (A.is_zero()) throw Error("division by the zero polynomial");
    BivarPoly r = B;
    BivarPoly q(A.spec());
    Exp la = A.leading_exp();
    FieldElem lc = A.leading_coeff();
    while (!r.is_zero()) {
        Exp lr = r.leading_exp();
        if (lr.first < la.first || lr.second < la.second) return std::nullopt;
        Exp m{lr.first - la.first, lr.second - la.second};
        FieldElem c = r.leading_coeff() / lc;
        BivarPoly t = BivarPoly::monomial(A.spec(), m, c);
        q = q + t;
        r = r - A * t;
    }
    return q;
}

} // namespace orbitstab
