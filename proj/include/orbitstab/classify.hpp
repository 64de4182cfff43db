#ifndef ORBITSTAB_CLASSIFY_HPP
#define ORBITSTAB_CLASSIFY_HPP

#include <optional>
#include <string>

#include "orbitstab/autmap.hpp"
#include "orbitstab/poly.hpp"

namespace orbitstab {

/// Canonical curve types: x^b = lambda y^a; x^b y^a = lambda; xy = lambda;
/// the two conic norm forms (char != 2 and char 2); the line x = 0; fences
/// P(x) = 0; anything else.
enum class CurveType { T1, T2, T3, T4, T5, T6, Fence, Other };

std::string curve_type_name(CurveType t);

struct CurveDescriptor {
    CurveType type = CurveType::Other;
    int a = 0, b = 0;                     // exponents for T1/T2
    std::optional<FieldElem> lambda;      // T1/T2/T3/T4
    std::optional<FieldElem> nu;          // T4
    std::optional<FieldElem> mu;          // T5
    std::optional<UnivarPoly> fence_poly; // Fence
    BivarPoly defining_poly;
    std::optional<PlaneAut> conjugator; // supplied by the caller, never searched for
    bool side_conditions_ok = false;
    std::string note;

    const FieldSpecPtr& spec() const { return defining_poly.spec(); }
};

/// Validated canonical descriptors built from parameters.
CurveDescriptor make_t1(const FieldSpecPtr& spec, int a, int b, const FieldElem& lambda);
CurveDescriptor make_t2(const FieldSpecPtr& spec, int a, int b, const FieldElem& lambda);
CurveDescriptor make_t3(const FieldSpecPtr& spec, const FieldElem& lambda);
CurveDescriptor make_t4(const FieldSpecPtr& spec, const FieldElem& lambda, const FieldElem& nu);
CurveDescriptor make_t5(const FieldSpecPtr& spec, const FieldElem& mu);
CurveDescriptor make_t6(const FieldSpecPtr& spec);
CurveDescriptor make_fence(const UnivarPoly& P);

/// Pattern-match a monic polynomial against the canonical templates, in the
/// priority order conics -> xy-lambda -> x^b y^a -> x^b-lambda y^a -> line /
/// fence. Side-condition failures yield Other with a diagnostic note.
CurveDescriptor classify_canonical(const BivarPoly& F);

/// The distinguished involution of a type-(3)/(4)/(5) symmetry group:
/// sigma = (y,x), tau = (x,-y), sigma_mu = (x+mu y, y).
PlaneAut distinguished_involution(const CurveDescriptor& desc);

/// Torus parameter arithmetic for the symmetry groups of types (1)-(5).
/// Parameters are {t} for the split tori and {a, b} for the norm-one tori.
class TorusOps {
public:
    explicit TorusOps(const CurveDescriptor& desc);

    std::vector<FieldElem> identity() const;
    std::vector<FieldElem> mul(const std::vector<FieldElem>& u, const std::vector<FieldElem>& v) const;
    std::vector<FieldElem> inv(const std::vector<FieldElem>& u) const;
    std::vector<FieldElem> power(const std::vector<FieldElem>& u, std::int64_t n) const;
    bool is_identity(const std::vector<FieldElem>& u) const;
    bool valid(const std::vector<FieldElem>& u) const; // membership equation

    PlaneAut element(const std::vector<FieldElem>& u) const;
    /// Parse a torus element back to its parameter; empty if the map is not
    /// in the torus.
    std::optional<std::vector<FieldElem>> param_of(const PlaneAut& g) const;
    /// Split g in G = T x| <iota>: returns (param, is_coset). For a coset
    /// element g = t * iota the parameter of t is returned with is_coset set.
    std::optional<std::pair<std::vector<FieldElem>, bool>> split_element(const PlaneAut& g) const;

    /// All torus parameters over a finite field.
    std::vector<std::vector<FieldElem>> enumerate_params() const;

    const CurveDescriptor& descriptor() const { return desc_; }

private:
    CurveDescriptor desc_;
    FieldSpecPtr spec_;
};

struct GroupDescriptor {
    enum class Shape { TorusWeights, TorusExtInvolution, JonquieresLine, FenceFamily, Finite, LowerBoundOnly };
    enum class Countability { Finite, CountablyInfinite, ContinuumParametrized };

    Shape shape;
    int weight_a = 0, weight_b = 0; // split-torus weights
    bool split_torus = true;
    std::optional<PlaneAut> involution;
    std::vector<PlaneAut> elements; // explicit listing, finite fields types (3)-(5)
    Countability countability = Countability::ContinuumParametrized;
    bool is_algebraic = true;
    std::string note;
};

/// The full symmetry group of a canonical curve, per type.
GroupDescriptor symmetry_group(const CurveDescriptor& desc);

struct AlgebraicityReport {
    bool is_algebraic;
    std::string reason;
};

AlgebraicityReport algebraicity(const GroupDescriptor& g);

/// Parameters for make_family_element. scalars is {t} (types 1-3), {a, b}
/// (types 4-6); poly is P for type 6 and Q for fences; affine holds
/// (alpha, beta, gamma) for fence elements.
struct FamilyParams {
    std::vector<FieldElem> scalars;
    std::optional<UnivarPoly> poly;
    std::optional<FieldElem> alpha, beta, gamma;
    bool involution_flag = false; // types 3-5: right-multiply by the involution
};

/// Construct the group element of desc's symmetry group with the given
/// parameters; rejects parameters violating the membership equation.
PlaneAut make_family_element(const CurveDescriptor& desc, const FamilyParams& params);

/// Complete element list of the symmetry group over a finite field,
/// types (3)-(5): torus elements followed by the involution coset.
std::vector<PlaneAut> enumerate_symmetry_elements(const CurveDescriptor& desc);

} // namespace orbitstab

#endif
