#ifndef ORBITSTAB_STABILIZER_HPP
#define ORBITSTAB_STABILIZER_HPP

#include "orbitstab/classify.hpp"
#include "orbitstab/closure.hpp"
#include "orbitstab/orbit.hpp"

namespace orbitstab {

struct IsotropyReport {
    CurveType type = CurveType::Other;
    Point p;
    std::vector<PlaneAut> elements;                         // identity first, then the involution
    std::optional<PlaneAut> involution;                     // tau_p, types (3)-(5)
    std::optional<std::vector<FieldElem>> involution_param; // torus parameter of its t-part
    bool parametrized_family = false;                       // type (6): (a x, b y + P(x))
    std::string family_constraint;
};

/// The isotropy group of the canonical curve's symmetry group at p:
/// trivial for types (1)/(2), {Id, tau_p} for types (3)-(5), and for the
/// line x = 0 the family (a x, b y + P(x)) with P(0) = (1 - b) y_p.
/// Every listed element is verified to fix p and stabilize the curve.
IsotropyReport isotropy(const CurveDescriptor& desc, const Point& p);

/// A member (a x, b y + P(x)) of the type-(6) isotropy family at p;
/// rejects parameters that fail to fix p.
PlaneAut isotropy_family_element(const CurveDescriptor& desc, const Point& p, const FieldElem& a,
                                 const FieldElem& b, const UnivarPoly& P);

/// Membership of a torus parameter in the subgroup generated by a finite
/// parameter list. Exact over finite fields and for rational split-torus
/// parameters (prime-exponent vectors); otherwise bounded word search with
/// the bound recorded and value left empty when undecided.
struct TorusMembership {
    std::optional<bool> value;
    std::int64_t bound = 0; // 0 when decided exactly
};

class TorusSubgroup {
public:
    TorusSubgroup(TorusOps ops, std::vector<std::vector<FieldElem>> gens);

    TorusMembership contains(const std::vector<FieldElem>& u) const;
    /// Full closure under the group law; empty when not finite within cap.
    std::optional<std::vector<std::vector<FieldElem>>> enumerate(std::size_t cap = 100000) const;
    const std::vector<std::vector<FieldElem>>& generators() const { return gens_; }

private:
    TorusOps ops_;
    std::vector<std::vector<FieldElem>> gens_;
};

struct HDescriptor {
    std::vector<std::vector<FieldElem>> torus_gens;  // generators of H0, as torus parameters
    std::optional<std::vector<FieldElem>> coset_t0;  // coset representative t0 * tau_p
    bool coset_is_Gp = false;                        // t0 is the identity
    std::optional<bool> t0_in_H0;                    // empty when undecided within bound
    std::optional<bool> t0sq_in_H0;
    std::int64_t search_bound = 0;
    std::vector<PlaneAut> original_gens;
};

/// Split generators of a subgroup of the symmetry group into the torus part
/// H0 and an involution coset t0 * tau_p, with the membership flags of the
/// case analysis recomputed from the data.
HDescriptor subgroup_normal_form(const std::vector<PlaneAut>& gens, const CurveDescriptor& desc, const Point& p);

struct VerificationTranscript {
    int window = 0;
    int checks = 0;
    bool all_passed = false;
    std::vector<std::string> notes;
};

struct StabilizerDescriptor {
    enum class CaseTag {
        A_equals_H,
        H0_extended_by_Gp,
        H_unchanged,
        A0_index2_extension,
        Type6_lower_bound,
        Cyclic_a,
        Cyclic_b_i,
        Cyclic_b_ii,
        Cyclic_c
    };

    CaseTag case_tag = CaseTag::A_equals_H;
    CurveType curve_type = CurveType::Other;
    std::vector<std::vector<FieldElem>> torus_gens; // generators of A0, as torus parameters
    std::optional<std::vector<FieldElem>> coset_t;  // coset representative t * tau_p
    std::optional<PlaneAut> tau_p;
    std::vector<PlaneAut> generators; // explicit generating maps of the described part
    std::optional<PlaneAut> driver;   // cyclic cases: phi
    std::optional<int> relation_exponent; // Cyclic_b_i: tau_p o phi = phi^i o tau_p
    std::int64_t relation_bound = 0;      // every bounded search reports its bound
    bool has_kernel_part = false;         // type-6/fence lower bound H * Ker(R)
    int ell = 1;                          // component count in the cyclic case
    bool index2_recorded = false;         // [A0 : <H0>] = 2 in the index-2 case
    bool complete = true;                 // false where only a lower bound is known
    bool is_algebraic = false;
    VerificationTranscript verification;
    std::string note;
};

std::string case_tag_name(StabilizerDescriptor::CaseTag tag);

/// The stabilizer of the orbit of p under H inside the plane automorphisms,
/// by case dispatch on the subgroup normal form. Requires the corroborated
/// hypothesis: the orbit window of p under H is not exhausted and its
/// detected curve is the descriptor's curve.
StabilizerDescriptor orbit_stabilizer(const CurveDescriptor& desc, const Point& p, const HDescriptor& H);

/// The same case dispatch on the formal data alone, without the orbit-window
/// hypothesis; shared with the exhaustive finite-field verification harness.
StabilizerDescriptor orbit_stabilizer_formal(const CurveDescriptor& desc, const Point& p, const HDescriptor& H);

struct CyclicBounds {
    int N = 24;
    int D = 4;
    int ellmax = 6;
};

/// The stabilizer of the cyclic orbit of p under phi, classified through the
/// phi^ell-stable component of the orbit closure.
StabilizerDescriptor cyclic_orbit_stabilizer(const PlaneAut& phi, const Point& p, const CyclicBounds& bounds = {});

enum class MembershipVerdict { In, Out, VerifiedUpToBound };

struct MembershipReport {
    MembershipVerdict verdict = MembershipVerdict::VerifiedUpToBound;
    std::string reason;
    bool image_proper_subset = false; // forward image misses some window points
};

/// Semidecision for psi stabilizing the orbit setwise: "out" when an interior
/// window point leaves the window; "in" when psi matches a complete
/// descriptor exactly or fixes the orbit through a kernel-shaped factor;
/// otherwise verified up to the window bound (both psi and its inverse).
MembershipReport membership(const PlaneAut& psi, const OrbitSample& orbit,
                            const StabilizerDescriptor* stab = nullptr);

struct DynamicalDegreeReport {
    std::vector<int> degrees;      // deg phi^m for m = 1..M
    double estimate = 1.0;         // the artifact's only floating-point value
    std::optional<int> exact_hint; // deg P when phi expands to (y, -delta*x + P(y))
};

DynamicalDegreeReport dynamical_degree(const PlaneAut& phi, int M);

AlgebraicityReport algebraicity(const StabilizerDescriptor& s);

/// Explicit element list described by a finite-field descriptor of
/// types (3)-(5): the torus closure of its generators, plus the coset.
std::vector<PlaneAut> materialize_elements(const StabilizerDescriptor& s, const CurveDescriptor& desc);

} // namespace orbitstab

#endif
