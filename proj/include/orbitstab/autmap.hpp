#ifndef ORBITSTAB_AUTMAP_HPP
#define ORBITSTAB_AUTMAP_HPP

#include <memory>
#include <mutex>
#include <variant>
#include <vector>

#include "orbitstab/poly.hpp"

namespace orbitstab {

/// A point of the affine plane over the current field.
struct Point {
    FieldElem x, y;

    bool operator==(const Point& o) const { return x == o.x && y == o.y; }
    bool operator!=(const Point& o) const { return !(*this == o); }
    std::string str() const { return "(" + x.str() + "," + y.str() + ")"; }
    std::size_t bit_size() const { return x.bit_size() + y.bit_size(); }
};

/// (x,y) -> M.(x,y) + v with M invertible.
struct AffineGen {
    FieldElem m00, m01, m10, m11, v0, v1;
};

/// (x,y) -> (a x, b y + P(x)) with a, b nonzero.
struct ElementaryGen {
    FieldElem a, b;
    UnivarPoly P;
};

/// (x,y) -> (y,x).
struct SwapGen {};

using Generator = std::variant<AffineGen, ElementaryGen, SwapGen>;

Generator invert_generator(const Generator& g);

/// A plane automorphism stored as a word of invertible generators.
///
/// The word is outermost-first: word = [g1, ..., gn] means g1 o ... o gn.
/// Words are never simplified; equality of automorphisms is equality of the
/// expanded polynomial pairs. The expansion is computed lazily and memoized
/// (write-once, shared between copies).
class PlaneAut {
public:
    static PlaneAut identity(const FieldSpecPtr& spec);
    static PlaneAut from_word(const FieldSpecPtr& spec, std::vector<Generator> word);
    static PlaneAut affine(const FieldSpecPtr& spec, const FieldElem& m00, const FieldElem& m01,
                           const FieldElem& m10, const FieldElem& m11, const FieldElem& v0, const FieldElem& v1);
    static PlaneAut linear(const FieldSpecPtr& spec, const FieldElem& m00, const FieldElem& m01,
                           const FieldElem& m10, const FieldElem& m11);
    static PlaneAut diagonal(const FieldSpecPtr& spec, const FieldElem& t, const FieldElem& u);
    static PlaneAut elementary(const FieldSpecPtr& spec, const FieldElem& a, const FieldElem& b, UnivarPoly P);
    static PlaneAut swap(const FieldSpecPtr& spec);

    const FieldSpecPtr& spec() const { return spec_; }
    const std::vector<Generator>& word() const { return word_; }

    /// The expanded polynomial pair (f, g) with phi(x,y) = (f(x,y), g(x,y)).
    const std::pair<BivarPoly, BivarPoly>& expand() const;
    int degree() const;

    Point apply(const Point& p) const; // generator by generator, not via expansion

    bool equals(const PlaneAut& o) const; // expansion equality
    bool is_identity() const;

    friend PlaneAut compose(const PlaneAut& phi, const PlaneAut& psi); // phi o psi
    friend PlaneAut invert(const PlaneAut& phi);

    PlaneAut pow(int n) const;

private:
    FieldSpecPtr spec_;
    std::vector<Generator> word_;

    struct Cache {
        std::once_flag flag;
        std::pair<BivarPoly, BivarPoly> value;
    };
    std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

PlaneAut compose(const PlaneAut& phi, const PlaneAut& psi);
PlaneAut invert(const PlaneAut& phi);
bool is_involution(const PlaneAut& phi);

/// F(f, g) for (f, g) = expand(phi).
BivarPoly poly_pullback(const BivarPoly& F, const PlaneAut& phi);

/// True iff pullback of F by phi is a nonzero scalar multiple of F.
bool stabilizes_curve(const PlaneAut& phi, const BivarPoly& F);

} // namespace orbitstab

#endif
