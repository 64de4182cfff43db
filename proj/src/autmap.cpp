#include "orbitstab/autmap.hpp"

namespace orbitstab {

Generator invert_generator(const Generator& g) {
    if (const auto* a = std::get_if<AffineGen>(&g)) {
        FieldElem det = a->m00 * a->m11 - a->m01 * a->m10;
        FieldElem di = det.inverse();
        AffineGen inv;
        inv.m00 = a->m11 * di;
        inv.m01 = -a->m01 * di;
        inv.m10 = -a->m10 * di;
        inv.m11 = a->m00 * di;
        // -M^{-1} v
        inv.v0 = -(inv.m00 * a->v0 + inv.m01 * a->v1);
        inv.v1 = -(inv.m10 * a->v0 + inv.m11 * a->v1);
        return inv;
    }
    if (const auto* e = std::get_if<ElementaryGen>(&g)) {
        // (a x, b y + P(x))^{-1} = (a^{-1} x, b^{-1} y - b^{-1} P(a^{-1} x))
        FieldElem ai = e->a.inverse();
        FieldElem bi = e->b.inverse();
        UnivarPoly Q = e->P.scale_arg(ai).scalar_mul(-bi);
        return ElementaryGen{ai, bi, std::move(Q)};
    }
    return SwapGen{};
}

PlaneAut PlaneAut::identity(const FieldSpecPtr& spec) {
    PlaneAut a;
    a.spec_ = spec;
    return a;
}

PlaneAut PlaneAut::from_word(const FieldSpecPtr& spec, std::vector<Generator> word) {
    for (const auto& g : word) {
        if (const auto* a = std::get_if<AffineGen>(&g)) {
            if ((a->m00 * a->m11 - a->m01 * a->m10).is_zero())
                throw Error("affine generator must be invertible");
        } else if (const auto* e = std::get_if<ElementaryGen>(&g)) {
            if (e->a.is_zero() || e->b.is_zero())
                throw Error("elementary generator requires nonzero scalings");
        }
    }
    PlaneAut a;
    a.spec_ = spec;
    a.word_ = std::move(word);
    return a;
}

PlaneAut PlaneAut::affine(const FieldSpecPtr& spec, const FieldElem& m00, const FieldElem& m01,
                          const FieldElem& m10, const FieldElem& m11, const FieldElem& v0, const FieldElem& v1) {
    return from_word(spec, {AffineGen{m00, m01, m10, m11, v0, v1}});
}

PlaneAut PlaneAut::linear(const FieldSpecPtr& spec, const FieldElem& m00, const FieldElem& m01,
                          const FieldElem& m10, const FieldElem& m11) {
    return affine(spec, m00, m01, m10, m11, FieldElem::zero(spec), FieldElem::zero(spec));
}

PlaneAut PlaneAut::diagonal(const FieldSpecPtr& spec, const FieldElem& t, const FieldElem& u) {
    return linear(spec, t, FieldElem::zero(spec), FieldElem::zero(spec), u);
}

PlaneAut PlaneAut::elementary(const FieldSpecPtr& spec, const FieldElem& a, const FieldElem& b, UnivarPoly P) {
    return from_word(spec, {ElementaryGen{a, b, std::move(P)}});
}

PlaneAut PlaneAut::swap(const FieldSpecPtr& spec) {
    return from_word(spec, {SwapGen{}});
}

const std::pair<BivarPoly, BivarPoly>& PlaneAut::expand() const {
    std::call_once(cache_->flag, [this] {
        BivarPoly f = BivarPoly::var_x(spec_);
        BivarPoly g = BivarPoly::var_y(spec_);
        // innermost generator first
        for (auto it = word_.rbegin(); it != word_.rend(); ++it) {
            if (const auto* a = std::get_if<AffineGen>(&*it)) {
                BivarPoly nf = f.scalar_mul(a->m00) + g.scalar_mul(a->m01) + BivarPoly::constant(spec_, a->v0);
                BivarPoly ng = f.scalar_mul(a->m10) + g.scalar_mul(a->m11) + BivarPoly::constant(spec_, a->v1);
                f = std::move(nf);
                g = std::move(ng);
            } else if (const auto* e = std::get_if<ElementaryGen>(&*it)) {
                BivarPoly pf = BivarPoly::from_univar_x(e->P).subst(f, g);
                BivarPoly nf = f.scalar_mul(e->a);
                g = g.scalar_mul(e->b) + pf;
                f = std::move(nf);
            } else {
                std::swap(f, g);
            }
        }
        cache_->value = {std::move(f), std::move(g)};
    });
    return cache_->value;
}

int PlaneAut::degree() const {
    const auto& [f, g] = expand();
    return std::max(f.degree(), g.degree());
}

Point PlaneAut::apply(const Point& p) const {
    Point q = p;
    for (auto it = word_.rbegin(); it != word_.rend(); ++it) {
        if (const auto* a = std::get_if<AffineGen>(&*it)) {
            FieldElem nx = a->m00 * q.x + a->m01 * q.y + a->v0;
            FieldElem ny = a->m10 * q.x + a->m11 * q.y + a->v1;
            q = {std::move(nx), std::move(ny)};
        } else if (const auto* e = std::get_if<ElementaryGen>(&*it)) {
            FieldElem nx = e->a * q.x;
            FieldElem ny = e->b * q.y + e->P.eval(q.x);
            q = {std::move(nx), std::move(ny)};
        } else {
            std::swap(q.x, q.y);
        }
    }
    return q;
}

bool PlaneAut::equals(const PlaneAut& o) const {
    const auto& a = expand();
    const auto& b = o.expand();
    return a.first == b.first && a.second == b.second;
}

bool PlaneAut::is_identity() const {
    const auto& [f, g] = expand();
    return f == BivarPoly::var_x(spec_) && g == BivarPoly::var_y(spec_);
}

PlaneAut compose(const PlaneAut& phi, const PlaneAut& psi) {
    if (!(*phi.spec_ == *psi.spec_)) throw Error("composing automorphisms over different fields");
    std::vector<Generator> word = phi.word_;
    word.insert(word.end(), psi.word_.begin(), psi.word_.end());
    return PlaneAut::from_word(phi.spec_, std::move(word));
}

PlaneAut invert(const PlaneAut& phi) {
    std::vector<Generator> word;
    word.reserve(phi.word_.size());
    for (auto it = phi.word_.rbegin(); it != phi.word_.rend(); ++it) word.push_back(invert_generator(*it));
    return PlaneAut::from_word(phi.spec_, std::move(word));
}

PlaneAut PlaneAut::pow(int n) const {
    PlaneAut base = n < 0 ? invert(*this) : *this;
    int m = n < 0 ? -n : n;
    PlaneAut r = identity(spec_);
    for (int i = 0; i < m; ++i) r = compose(r, base);
    return r;
}

bool is_involution(const PlaneAut& phi) {
    return !phi.is_identity() && compose(phi, phi).is_identity();
}

BivarPoly poly_pullback(const BivarPoly& F, const PlaneAut& phi) {
    const auto& [f, g] = phi.expand();
    return F.subst(f, g);
}

bool stabilizes_curve(const PlaneAut& phi, const BivarPoly& F) {
    return F.is_associate_of(poly_pullback(F, phi));
}

} // namespace orbitstab
