#ifndef ORBITSTAB_ORACLE_HPP
#define ORBITSTAB_ORACLE_HPP

#include "orbitstab/stabilizer.hpp"

namespace orbitstab {

/// The complete symmetry group of a type-(3)/(4)/(5) canonical curve over a
/// finite field: the torus followed by the involution coset.
std::vector<PlaneAut> enumerate_G(const CurveDescriptor& desc);

/// All points of the curve with coordinates in the (finite) base field.
std::vector<Point> curve_points(const CurveDescriptor& desc);

/// The literal setwise stabilizer of the orbit of p under the given
/// generators, found by exhausting the orbit and scanning enumerate_G.
std::vector<PlaneAut> brute_stabilizer(const CurveDescriptor& desc, const Point& p,
                                       const std::vector<PlaneAut>& H_gens);

struct GridRecord {
    std::string field;
    std::string type;
    std::string params;
    std::string point;
    std::string subgroup; // "torus order d" / "torus order d, coset g^r"
    bool skipped = false;
    std::string hypothesis_note;
    bool match = false;
    std::size_t brute_size = 0;
    std::size_t predicted_size = 0;
    std::string case_tag;
};

struct VerificationGrid {
    int instances = 0;
    int matches = 0;
    int skips = 0;
    int mismatches = 0;
    std::vector<GridRecord> records; // skips and mismatches always; all when requested

    bool all_matched() const { return mismatches == 0; }
};

struct GridSpec {
    std::vector<CurveDescriptor> curves;
    bool keep_all_records = false;
};

/// The default sweep: types (3)-(5) over small fields, all curve parameters
/// within the documented restrictions, all base-field points with free torus
/// action, and every subgroup of G (cyclic torus lattice times coset choices).
GridSpec default_grid();

/// For every grid instance, compare the brute-forced stabilizer of the orbit
/// of p under H inside G with the formal case dispatch, element set against
/// element set. Points with nontrivial torus isotropy are skipped with a
/// note. Mismatches are data, not exceptions.
VerificationGrid verify_theorem_grid(const GridSpec& spec);

} // namespace orbitstab

#endif
