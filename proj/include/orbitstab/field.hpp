#ifndef ORBITSTAB_FIELD_HPP
#define ORBITSTAB_FIELD_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace orbitstab {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ParseError : Error {
    using Error::Error;
};
struct HypothesisError : Error {
    using Error::Error;
};
struct SizeLimitError : Error {
    using Error::Error;
};

enum class FieldKind { Rationals, QuadExt, PrimeField, FiniteExt };

/// An exact coefficient field: Q, Q(sqrt(d)), F_p, or F_{p^k}.
///
/// Specs are immutable and shared; elements carry a pointer to their spec.
/// Validity (d squarefree, p prime, modulus irreducible) is checked at
/// construction.
class FieldSpec {
public:
    static std::shared_ptr<const FieldSpec> rationals();
    static std::shared_ptr<const FieldSpec> quad_ext(std::int64_t d);
    static std::shared_ptr<const FieldSpec> prime_field(std::int64_t p);
    /// modulus: monic coefficients low-to-high, degree k >= 2, entries mod p.
    static std::shared_ptr<const FieldSpec> finite_ext(std::int64_t p, std::vector<std::int64_t> modulus);

    FieldKind kind() const { return kind_; }
    std::int64_t quad_d() const { return d_; }
    std::int64_t prime() const { return p_; }
    const std::vector<std::int64_t>& modulus() const { return modulus_; }
    int extension_degree() const;        // 1, 2, or k
    std::int64_t characteristic() const; // 0 or p
    bool is_finite() const { return kind_ == FieldKind::PrimeField || kind_ == FieldKind::FiniteExt; }
    std::int64_t order() const; // finite fields only: p or p^k

    /// The base field: Q for Q(sqrt d), F_p for F_{p^k}, self otherwise.
    std::shared_ptr<const FieldSpec> base() const;
    bool is_extension() const { return kind_ == FieldKind::QuadExt || kind_ == FieldKind::FiniteExt; }

    bool operator==(const FieldSpec& o) const;
    std::string str() const;

private:
    FieldKind kind_ = FieldKind::Rationals;
    std::int64_t d_ = 0;
    std::int64_t p_ = 0;
    std::vector<std::int64_t> modulus_;
};

using FieldSpecPtr = std::shared_ptr<const FieldSpec>;

/// An exact element of a FieldSpec. Canonical form is maintained by every
/// operation: fractions in lowest terms, residues in [0, p), extension
/// coefficient vectors reduced mod (p, modulus). Equality is representation
/// equality.
class FieldElem {
public:
    struct QuadVal {
        Rat a, b; // a + b*sqrt(d)

        bool operator==(const QuadVal& o) const { return a == o.a && b == o.b; }
    };

    FieldElem() = default;

    static FieldElem zero(const FieldSpecPtr& spec);
    static FieldElem one(const FieldSpecPtr& spec);
    static FieldElem from_int(const FieldSpecPtr& spec, std::int64_t n);
    static FieldElem from_rational(const FieldSpecPtr& spec, const Rat& r);
    /// Q(sqrt d) element a + b*sqrt(d).
    static FieldElem quad(const FieldSpecPtr& spec, const Rat& a, const Rat& b);
    /// F_{p^k} element from coefficient vector (low degree first, any length).
    static FieldElem ext_coeffs(const FieldSpecPtr& spec, std::vector<std::int64_t> coeffs);

    const FieldSpecPtr& spec() const { return spec_; }

    bool is_zero() const;
    bool is_one() const;
    bool operator==(const FieldElem& o) const;
    bool operator!=(const FieldElem& o) const { return !(*this == o); }

    FieldElem operator+(const FieldElem& o) const;
    FieldElem operator-(const FieldElem& o) const;
    FieldElem operator*(const FieldElem& o) const;
    FieldElem operator/(const FieldElem& o) const;
    FieldElem operator-() const;
    FieldElem inverse() const;
    FieldElem pow(std::int64_t n) const;

    /// True if the element lies in the base field (extension part zero).
    bool in_base() const;
    /// Coordinates over the base field, as elements of spec()->base().
    /// Q(sqrt d): {a, b}; F_{p^k}: the k coefficients; otherwise {self}.
    std::vector<FieldElem> base_coords() const;
    /// Embed an element of spec->base() into spec.
    static FieldElem embed(const FieldSpecPtr& spec, const FieldElem& base_elem);
    /// If the element lies in the base field, return it as an element of
    /// spec()->base().
    std::optional<FieldElem> to_base() const;

    /// Apply the generator of the extension's automorphism group over its
    /// base: conjugation for Q(sqrt d), Frobenius x -> x^p for F_{p^k}.
    /// Identity on base fields.
    FieldElem galois_apply() const;

    const Rat& rational() const;
    const QuadVal& quad_val() const;
    std::int64_t residue() const;
    const std::vector<std::int64_t>& ext_val() const;

    /// Canonical string form: "p/q" or "p"; "a+b*s"; residue; "[c0,c1,...]".
    std::string str() const;
    /// Rough size in bits, for enumeration caps.
    std::size_t bit_size() const;

private:
    FieldSpecPtr spec_;
    std::variant<Rat, QuadVal, std::int64_t, std::vector<std::int64_t>> val_;

    void check_same(const FieldElem& o) const;
};

/// Full Galois orbit of x over the base field, without repetition.
std::vector<FieldElem> galois_conjugates(const FieldElem& x);

/// True iff x = y^2 for some y in the base field containing x. For Q(sqrt d)
/// elements the element must lie in the base field Q.
bool is_square(const FieldElem& x);

/// True iff x^2 + mu*x + 1 has a root in mu's field.
bool quadratic_has_root(const FieldElem& mu);

/// All elements of a finite field, in a fixed deterministic order.
std::vector<FieldElem> all_field_elements(const FieldSpecPtr& spec);

/// Parse an element from its canonical string form.
FieldElem parse_field_elem(const FieldSpecPtr& spec, const std::string& text);

} // namespace orbitstab

#endif
