#ifndef ORBITSTAB_POLY_HPP
#define ORBITSTAB_POLY_HPP

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "orbitstab/field.hpp"

namespace orbitstab {

/// Exponent pair (i, j) for x^i y^j.
using Exp = std::pair<int, int>;

/// Graded lexicographic order with x > y: compare total degree first, then i.
inline bool grlex_less(const Exp& a, const Exp& b) {
    int da = a.first + a.second, db = b.first + b.second;
    if (da != db) return da < db;
    return a.first < b.first;
}

struct GrlexDescending {
    bool operator()(const Exp& a, const Exp& b) const { return grlex_less(b, a); }
};

/// Univariate polynomial in x, dense low-to-high coefficient vector.
class UnivarPoly {
public:
    UnivarPoly() = default;
    explicit UnivarPoly(FieldSpecPtr spec) : spec_(std::move(spec)) {}
    UnivarPoly(FieldSpecPtr spec, std::vector<FieldElem> coeffs);

    const FieldSpecPtr& spec() const { return spec_; }
    const std::vector<FieldElem>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; } // -1 for zero
    FieldElem coeff(int i) const;

    FieldElem eval(const FieldElem& x) const;
    /// P(c*x) for a scalar c.
    UnivarPoly scale_arg(const FieldElem& c) const;
    UnivarPoly scalar_mul(const FieldElem& c) const;
    UnivarPoly operator+(const UnivarPoly& o) const;
    bool operator==(const UnivarPoly& o) const { return coeffs_ == o.coeffs_; }

private:
    FieldSpecPtr spec_;
    std::vector<FieldElem> coeffs_; // no trailing zeros
};

/// Sparse bivariate polynomial over a FieldSpec. No zero coefficients are
/// stored; the zero polynomial has empty support. Terms are kept in grlex
/// descending order so the leading term is first.
class BivarPoly {
public:
    BivarPoly() = default;
    explicit BivarPoly(FieldSpecPtr spec) : spec_(std::move(spec)) {}

    static BivarPoly zero(const FieldSpecPtr& spec) { return BivarPoly(spec); }
    static BivarPoly constant(const FieldSpecPtr& spec, const FieldElem& c);
    static BivarPoly monomial(const FieldSpecPtr& spec, Exp e, const FieldElem& c);
    static BivarPoly var_x(const FieldSpecPtr& spec);
    static BivarPoly var_y(const FieldSpecPtr& spec);
    static BivarPoly from_univar_x(const UnivarPoly& p);

    const FieldSpecPtr& spec() const { return spec_; }
    const std::map<Exp, FieldElem, GrlexDescending>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int degree() const; // -1 for zero
    Exp leading_exp() const;
    FieldElem leading_coeff() const;
    FieldElem coeff(Exp e) const;

    void set_coeff(Exp e, const FieldElem& c);

    BivarPoly operator+(const BivarPoly& o) const;
    BivarPoly operator-(const BivarPoly& o) const;
    BivarPoly operator-() const;
    BivarPoly operator*(const BivarPoly& o) const;
    BivarPoly scalar_mul(const FieldElem& c) const;
    BivarPoly pow(int n) const;
    bool operator==(const BivarPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const BivarPoly& o) const { return !(*this == o); }

    FieldElem eval(const FieldElem& x, const FieldElem& y) const;
    /// F(f(x,y), g(x,y)), fully expanded.
    BivarPoly subst(const BivarPoly& f, const BivarPoly& g) const;

    /// Monic under grlex: leading coefficient scaled to 1. Zero stays zero.
    BivarPoly monic() const;
    /// If o == c * this for a nonzero scalar c, return c.
    std::optional<FieldElem> associate_scalar(const BivarPoly& o) const;
    bool is_associate_of(const BivarPoly& o) const { return associate_scalar(o).has_value(); }

    /// True if every coefficient lies in the base field of the spec.
    bool has_base_coeffs() const;
    /// Apply the Galois generator to every coefficient.
    BivarPoly galois_apply() const;
    /// True iff the support lies in k[x] (all exponents have j = 0).
    bool is_univariate_x() const;
    std::optional<UnivarPoly> to_univar_x() const;

    std::string str() const;

private:
    FieldSpecPtr spec_;
    std::map<Exp, FieldElem, GrlexDescending> terms_;
};

/// Exact single-divisor division: returns Q with B = A*Q when A divides B
/// (grlex leading-term elimination, zero remainder), otherwise empty.
std::optional<BivarPoly> poly_divides(const BivarPoly& A, const BivarPoly& B);

} // namespace orbitstab

#endif
