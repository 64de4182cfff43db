#include "orbitstab/field.hpp"

#include <algorithm>
#include <sstream>

namespace orbitstab {

namespace {

bool is_prime_i64(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t q = 2; q * q <= n; ++q)
        if (n % q == 0) return false;
    return true;
}

bool is_squarefree_i64(std::int64_t d) {
    std::int64_t n = d < 0 ? -d : d;
    for (std::int64_t q = 2; q * q <= n; ++q) {
        if (n % (q * q) == 0) return false;
        while (n % q == 0) n /= q;
    }
    return true;
}

std::int64_t mod_norm(std::int64_t a, std::int64_t p) {
    a %= p;
    if (a < 0) a += p;
    return a;
}

std::int64_t mul_mod(std::int64_t a, std::int64_t b, std::int64_t p) {
    return static_cast<std::int64_t>(static_cast<__int128>(a) * b % p);
}

std::int64_t pow_mod(std::int64_t a, std::int64_t e, std::int64_t p) {
    std::int64_t r = 1 % p;
    a = mod_norm(a, p);
    while (e > 0) {
        if (e & 1) r = mul_mod(r, a, p);
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    return r;
}

std::int64_t inv_mod(std::int64_t a, std::int64_t p) {
    a = mod_norm(a, p);
    if (a == 0) throw Error("division by zero in F_p");
    // extended Euclid
    std::int64_t t = 0, nt = 1, r = p, nr = a;
    while (nr != 0) {
        std::int64_t q = r / nr;
        std::swap(t -= q * nt, nt);
        std::swap(r -= q * nr, nr);
    }
    return mod_norm(t, p);
}

using PolyFp = std::vector<std::int64_t>; // low degree first, no trailing zeros

void trim(PolyFp& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

PolyFp poly_mul(const PolyFp& f, const PolyFp& g, std::int64_t p) {
    if (f.empty() || g.empty()) return {};
    PolyFp r(f.size() + g.size() - 1, 0);
    for (std::size_t i = 0; i < f.size(); ++i)
        for (std::size_t j = 0; j < g.size(); ++j)
            r[i + j] = mod_norm(r[i + j] + mul_mod(f[i], g[j], p), p);
    trim(r);
    return r;
}

// remainder of f mod m (m monic)
PolyFp poly_rem(PolyFp f, const PolyFp& m, std::int64_t p) {
    trim(f);
    while (f.size() >= m.size()) {
        std::int64_t c = f.back();
        std::size_t shift = f.size() - m.size();
        for (std::size_t i = 0; i < m.size(); ++i)
            f[shift + i] = mod_norm(f[shift + i] - mul_mod(c, m[i], p), p);
        trim(f);
    }
    return f;
}

PolyFp poly_sub(PolyFp f, const PolyFp& g, std::int64_t p) {
    if (f.size() < g.size()) f.resize(g.size(), 0);
    for (std::size_t i = 0; i < g.size(); ++i) f[i] = mod_norm(f[i] - g[i], p);
    trim(f);
    return f;
}

// inverse of f modulo m, m monic with gcd(f, m) = 1
PolyFp poly_inv_mod(PolyFp f, const PolyFp& m, std::int64_t p) {
    trim(f);
    if (f.empty()) throw Error("division by zero in finite extension field");
    PolyFp r0 = m, r1 = f, s0 = {}, s1 = {1};
    while (!r1.empty()) {
        // divide r0 by r1
        PolyFp q;
        PolyFp rem = r0;
        trim(rem);
        if (rem.size() >= r1.size()) {
            q.assign(rem.size() - r1.size() + 1, 0);
            std::int64_t lead_inv = inv_mod(r1.back(), p);
            while (rem.size() >= r1.size() && !rem.empty()) {
                std::int64_t c = mul_mod(rem.back(), lead_inv, p);
                std::size_t shift = rem.size() - r1.size();
                q[shift] = c;
                for (std::size_t i = 0; i < r1.size(); ++i)
                    rem[shift + i] = mod_norm(rem[shift + i] - mul_mod(c, r1[i], p), p);
                trim(rem);
            }
        }
        PolyFp s2 = poly_sub(s0, poly_mul(q, s1, p), p);
        r0 = r1;
        r1 = rem;
        s0 = s1;
        s1 = s2;
    }
    if (r0.size() != 1) throw Error("element not invertible in finite extension field");
    std::int64_t li = inv_mod(r0[0], p);
    for (auto& c : s0) c = mul_mod(c, li, p);
    return poly_rem(s0, m, p);
}

bool poly_is_irreducible(const PolyFp& m, std::int64_t p) {
    // exhaustive trial division by monic polynomials of degree 1..deg/2;
    // feasible since p^k is small here
    int deg = static_cast<int>(m.size()) - 1;
    for (int dd = 1; 2 * dd <= deg; ++dd) {
        // enumerate monic polynomials of degree dd
        std::vector<std::int64_t> c(dd, 0);
        while (true) {
            PolyFp g(c.begin(), c.end());
            g.push_back(1);
            if (poly_rem(m, g, p).empty()) return false;
            int i = 0;
            for (; i < dd; ++i) {
                if (++c[i] < p) break;
                c[i] = 0;
            }
            if (i == dd) break;
        }
    }
    return true;
}

Rat parse_rational(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(s));
        Int num(s.substr(0, slash));
        Int den(s.substr(slash + 1));
        if (den == 0) throw ParseError("zero denominator: " + s);
        return Rat(num, den);
    } catch (const std::exception&) {
        throw ParseError("malformed rational: " + s);
    }
}

std::string rational_str(const Rat& r) {
    std::ostringstream os;
    os << numerator(r);
    if (denominator(r) != 1) os << "/" << denominator(r);
    return os.str();
}

} // namespace

std::shared_ptr<const FieldSpec> FieldSpec::rationals() {
    static auto spec = std::make_shared<FieldSpec>();
    return spec;
}

std::shared_ptr<const FieldSpec> FieldSpec::quad_ext(std::int64_t d) {
    if (d == 0 || d == 1) throw Error("quadratic extension requires d != 0, 1");
    if (!is_squarefree_i64(d)) throw Error("quadratic extension requires squarefree d");
    auto spec = std::make_shared<FieldSpec>();
    spec->kind_ = FieldKind::QuadExt;
    spec->d_ = d;
    return spec;
}

std::shared_ptr<const FieldSpec> FieldSpec::prime_field(std::int64_t p) {
    if (!is_prime_i64(p)) throw Error("prime field requires a prime modulus");
    auto spec = std::make_shared<FieldSpec>();
    spec->kind_ = FieldKind::PrimeField;
    spec->p_ = p;
    return spec;
}

std::shared_ptr<const FieldSpec> FieldSpec::finite_ext(std::int64_t p, std::vector<std::int64_t> modulus) {
    if (!is_prime_i64(p)) throw Error("finite extension requires a prime characteristic");
    for (auto& c : modulus) c = mod_norm(c, p);
    trim(modulus);
    if (modulus.size() < 3) throw Error("finite extension modulus must have degree >= 2");
    if (modulus.back() != 1) throw Error("finite extension modulus must be monic");
    if (!poly_is_irreducible(modulus, p)) throw Error("finite extension modulus must be irreducible");
    auto spec = std::make_shared<FieldSpec>();
    spec->kind_ = FieldKind::FiniteExt;
    spec->p_ = p;
    spec->modulus_ = std::move(modulus);
    return spec;
}

int FieldSpec::extension_degree() const {
    switch (kind_) {
        case FieldKind::QuadExt: return 2;
        case FieldKind::FiniteExt: return static_cast<int>(modulus_.size()) - 1;
        default: return 1;
    }
}

std::int64_t FieldSpec::characteristic() const {
    return (kind_ == FieldKind::PrimeField || kind_ == FieldKind::FiniteExt) ? p_ : 0;
}

std::int64_t FieldSpec::order() const {
    if (kind_ == FieldKind::PrimeField) return p_;
    if (kind_ == FieldKind::FiniteExt) {
        std::int64_t q = 1;
        for (int i = 0; i < extension_degree(); ++i) q *= p_;
        return q;
    }
    throw Error("order() requires a finite field");
}

std::shared_ptr<const FieldSpec> FieldSpec::base() const {
    switch (kind_) {
        case FieldKind::QuadExt: return rationals();
        case FieldKind::FiniteExt: return prime_field(p_);
        default: return kind_ == FieldKind::Rationals ? rationals() : prime_field(p_);
    }
}

bool FieldSpec::operator==(const FieldSpec& o) const {
    return kind_ == o.kind_ && d_ == o.d_ && p_ == o.p_ && modulus_ == o.modulus_;
}

std::string FieldSpec::str() const {
    std::ostringstream os;
    switch (kind_) {
        case FieldKind::Rationals: os << "Q"; break;
        case FieldKind::QuadExt: os << "Q(sqrt(" << d_ << "))"; break;
        case FieldKind::PrimeField: os << "F_" << p_; break;
        case FieldKind::FiniteExt: os << "F_" << order(); break;
    }
    return os.str();
}

// ---------------------------------------------------------------------------

FieldElem FieldElem::zero(const FieldSpecPtr& spec) {
    return from_int(spec, 0);
}

FieldElem FieldElem::one(const FieldSpecPtr& spec) {
    return from_int(spec, 1);
}

FieldElem FieldElem::from_int(const FieldSpecPtr& spec, std::int64_t n) {
    FieldElem e;
    e.spec_ = spec;
    switch (spec->kind()) {
        case FieldKind::Rationals: e.val_ = Rat(n); break;
        case FieldKind::QuadExt: e.val_ = QuadVal{Rat(n), Rat(0)}; break;
        case FieldKind::PrimeField: e.val_ = mod_norm(n, spec->prime()); break;
        case FieldKind::FiniteExt: {
            std::vector<std::int64_t> v(spec->extension_degree(), 0);
            v[0] = mod_norm(n, spec->prime());
            e.val_ = std::move(v);
            break;
        }
    }
    return e;
}

FieldElem FieldElem::from_rational(const FieldSpecPtr& spec, const Rat& r) {
    switch (spec->kind()) {
        case FieldKind::Rationals: {
            FieldElem e;
            e.spec_ = spec;
            e.val_ = r;
            return e;
        }
        case FieldKind::QuadExt: {
            FieldElem e;
            e.spec_ = spec;
            e.val_ = QuadVal{r, Rat(0)};
            return e;
        }
        default: {
            // reduce p/q mod the characteristic
            std::int64_t p = spec->prime();
            Int num = numerator(r) % p;
            Int den = denominator(r) % p;
            std::int64_t n = mod_norm(static_cast<std::int64_t>(num), p);
            std::int64_t d = mod_norm(static_cast<std::int64_t>(den), p);
            if (d == 0) throw Error("rational with denominator divisible by the characteristic");
            return from_int(spec, mul_mod(n, inv_mod(d, p), p));
        }
    }
}

FieldElem FieldElem::quad(const FieldSpecPtr& spec, const Rat& a, const Rat& b) {
    if (spec->kind() != FieldKind::QuadExt) throw Error("quad() requires a quadratic extension spec");
    FieldElem e;
    e.spec_ = spec;
    e.val_ = QuadVal{a, b};
    return e;
}

FieldElem FieldElem::ext_coeffs(const FieldSpecPtr& spec, std::vector<std::int64_t> coeffs) {
    if (spec->kind() != FieldKind::FiniteExt) throw Error("ext_coeffs() requires a finite extension spec");
    std::int64_t p = spec->prime();
    for (auto& c : coeffs) c = mod_norm(c, p);
    coeffs = poly_rem(std::move(coeffs), spec->modulus(), p);
    coeffs.resize(spec->extension_degree(), 0);
    FieldElem e;
    e.spec_ = spec;
    e.val_ = std::move(coeffs);
    return e;
}

void FieldElem::check_same(const FieldElem& o) const {
    if (!spec_ || !o.spec_ || !(*spec_ == *o.spec_))
        throw Error("field element operands belong to different fields");
}

bool FieldElem::is_zero() const {
    switch (spec_->kind()) {
        case FieldKind::Rationals: return std::get<Rat>(val_) == 0;
        case FieldKind::QuadExt: {
            const auto& q = std::get<QuadVal>(val_);
            return q.a == 0 && q.b == 0;
        }
        case FieldKind::PrimeField: return std::get<std::int64_t>(val_) == 0;
        case FieldKind::FiniteExt: {
            const auto& v = std::get<std::vector<std::int64_t>>(val_);
            return std::all_of(v.begin(), v.end(), [](std::int64_t c) { return c == 0; });
        }
    }
    return false;
}

bool FieldElem::is_one() const {
    return *this == one(spec_);
}

bool FieldElem::operator==(const FieldElem& o) const {
    check_same(o);
    return val_ == o.val_;
}

FieldElem FieldElem::operator+(const FieldElem& o) const {
    check_same(o);
    FieldElem r;
    r.spec_ = spec_;
    switch (spec_->kind()) {
        case FieldKind::Rationals: r.val_ = std::get<Rat>(val_) + std::get<Rat>(o.val_); break;
        case FieldKind::QuadExt: {
            const auto &x = std::get<QuadVal>(val_), &y = std::get<QuadVal>(o.val_);
            r.val_ = QuadVal{x.a + y.a, x.b + y.b};
            break;
        }
        case FieldKind::PrimeField:
            r.val_ = mod_norm(std::get<std::int64_t>(val_) + std::get<std::int64_t>(o.val_), spec_->prime());
            break;
        case FieldKind::FiniteExt: {
            auto v = std::get<std::vector<std::int64_t>>(val_);
            const auto& w = std::get<std::vector<std::int64_t>>(o.val_);
            for (std::size_t i = 0; i < v.size(); ++i) v[i] = mod_norm(v[i] + w[i], spec_->prime());
            r.val_ = std::move(v);
            break;
        }
    }
    return r;
}

FieldElem FieldElem::operator-() const {
    FieldElem r;
    r.spec_ = spec_;
    switch (spec_->kind()) {
        case FieldKind::Rationals: r.val_ = -std::get<Rat>(val_); break;
        case FieldKind::QuadExt: {
            const auto& x = std::get<QuadVal>(val_);
            r.val_ = QuadVal{-x.a, -x.b};
            break;
        }
        case FieldKind::PrimeField:
            r.val_ = mod_norm(-std::get<std::int64_t>(val_), spec_->prime());
            break;
        case FieldKind::FiniteExt: {
            auto v = std::get<std::vector<std::int64_t>>(val_);
            for (auto& c : v) c = mod_norm(-c, spec_->prime());
            r.val_ = std::move(v);
            break;
        }
    }
    return r;
}

FieldElem FieldElem::operator-(const FieldElem& o) const {
    return *this + (-o);
}

FieldElem FieldElem::operator*(const FieldElem& o) const {
    check_same(o);
    FieldElem r;
    r.spec_ = spec_;
    switch (spec_->kind()) {
        case FieldKind::Rationals: r.val_ = std::get<Rat>(val_) * std::get<Rat>(o.val_); break;
        case FieldKind::QuadExt: {
            const auto &x = std::get<QuadVal>(val_), &y = std::get<QuadVal>(o.val_);
            Rat d(spec_->quad_d());
            r.val_ = QuadVal{x.a * y.a + d * x.b * y.b, x.a * y.b + x.b * y.a};
            break;
        }
        case FieldKind::PrimeField:
            r.val_ = mul_mod(std::get<std::int64_t>(val_), std::get<std::int64_t>(o.val_), spec_->prime());
            break;
        case FieldKind::FiniteExt: {
            const auto& v = std::get<std::vector<std::int64_t>>(val_);
            const auto& w = std::get<std::vector<std::int64_t>>(o.val_);
            auto prod = poly_rem(poly_mul(v, w, spec_->prime()), spec_->modulus(), spec_->prime());
            prod.resize(spec_->extension_degree(), 0);
            r.val_ = std::move(prod);
            break;
        }
    }
    return r;
}

FieldElem FieldElem::inverse() const {
    if (is_zero()) throw Error("division by zero");
    FieldElem r;
    r.spec_ = spec_;
    switch (spec_->kind()) {
        case FieldKind::Rationals: r.val_ = Rat(1) / std::get<Rat>(val_); break;
        case FieldKind::QuadExt: {
            const auto& x = std::get<QuadVal>(val_);
            Rat d(spec_->quad_d());
            Rat n = x.a * x.a - d * x.b * x.b; // field norm; nonzero since d is not a rational square
            r.val_ = QuadVal{x.a / n, -x.b / n};
            break;
        }
        case FieldKind::PrimeField:
            r.val_ = inv_mod(std::get<std::int64_t>(val_), spec_->prime());
            break;
        case FieldKind::FiniteExt: {
            auto v = poly_inv_mod(std::get<std::vector<std::int64_t>>(val_), spec_->modulus(), spec_->prime());
            v.resize(spec_->extension_degree(), 0);
            r.val_ = std::move(v);
            break;
        }
    }
    return r;
}

FieldElem FieldElem::operator/(const FieldElem& o) const {
    return *this * o.inverse();
}

FieldElem FieldElem::pow(std::int64_t n) const {
    FieldElem base = n < 0 ? inverse() : *this;
    std::uint64_t e = n < 0 ? static_cast<std::uint64_t>(-(n + 1)) + 1 : static_cast<std::uint64_t>(n);
    FieldElem r = one(spec_);
    while (e > 0) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

bool FieldElem::in_base() const {
    switch (spec_->kind()) {
        case FieldKind::QuadExt: return std::get<QuadVal>(val_).b == 0;
        case FieldKind::FiniteExt: {
            const auto& v = std::get<std::vector<std::int64_t>>(val_);
            for (std::size_t i = 1; i < v.size(); ++i)
                if (v[i] != 0) return false;
            return true;
        }
        default: return true;
    }
}

std::vector<FieldElem> FieldElem::base_coords() const {
    auto bspec = spec_->base();
    switch (spec_->kind()) {
        case FieldKind::QuadExt: {
            const auto& q = std::get<QuadVal>(val_);
            return {from_rational(bspec, q.a), from_rational(bspec, q.b)};
        }
        case FieldKind::FiniteExt: {
            const auto& v = std::get<std::vector<std::int64_t>>(val_);
            std::vector<FieldElem> out;
            out.reserve(v.size());
            for (auto c : v) out.push_back(from_int(bspec, c));
            return out;
        }
        default: return {*this};
    }
}

FieldElem FieldElem::embed(const FieldSpecPtr& spec, const FieldElem& base_elem) {
    switch (spec->kind()) {
        case FieldKind::QuadExt:
            return quad(spec, base_elem.rational(), Rat(0));
        case FieldKind::FiniteExt:
            return ext_coeffs(spec, {base_elem.residue()});
        default:
            return base_elem;
    }
}

std::optional<FieldElem> FieldElem::to_base() const {
    if (!in_base()) return std::nullopt;
    return base_coords()[0];
}

FieldElem FieldElem::galois_apply() const {
    switch (spec_->kind()) {
        case FieldKind::QuadExt: {
            const auto& q = std::get<QuadVal>(val_);
            return quad(spec_, q.a, -q.b);
        }
        case FieldKind::FiniteExt:
            return pow(spec_->prime());
        default:
            return *this;
    }
}

const Rat& FieldElem::rational() const {
    return std::get<Rat>(val_);
}
const FieldElem::QuadVal& FieldElem::quad_val() const {
    return std::get<QuadVal>(val_);
}
std::int64_t FieldElem::residue() const {
    return std::get<std::int64_t>(val_);
}
const std::vector<std::int64_t>& FieldElem::ext_val() const {
    return std::get<std::vector<std::int64_t>>(val_);
}

std::string FieldElem::str() const {
    std::ostringstream os;
    switch (spec_->kind()) {
        case FieldKind::Rationals: os << rational_str(std::get<Rat>(val_)); break;
        case FieldKind::QuadExt: {
            const auto& q = std::get<QuadVal>(val_);
            if (q.b == 0) {
                os << rational_str(q.a);
            } else if (q.a == 0) {
                os << rational_str(q.b) << "*s";
            } else {
                os << rational_str(q.a);
                if (q.b > 0) os << "+";
                os << rational_str(q.b) << "*s";
            }
            break;
        }
        case FieldKind::PrimeField: os << std::get<std::int64_t>(val_); break;
        case FieldKind::FiniteExt: {
            const auto& v = std::get<std::vector<std::int64_t>>(val_);
            os << "[";
            for (std::size_t i = 0; i < v.size(); ++i) {
                if (i) os << ",";
                os << v[i];
            }
            os << "]";
            break;
        }
    }
    return os.str();
}

std::size_t FieldElem::bit_size() const {
    auto rat_bits = [](const Rat& r) {
        return msb(numerator(r) == 0 ? Int(1) : abs(numerator(r))) + msb(abs(denominator(r))) + 2;
    };
    switch (spec_->kind()) {
        case FieldKind::Rationals: return rat_bits(std::get<Rat>(val_));
        case FieldKind::QuadExt: {
            const auto& q = std::get<QuadVal>(val_);
            return rat_bits(q.a) + rat_bits(q.b);
        }
        default: return 64;
    }
}

std::vector<FieldElem> galois_conjugates(const FieldElem& x) {
    std::vector<FieldElem> orbit{x};
    FieldElem y = x.galois_apply();
    while (!(y == x)) {
        if (std::find(orbit.begin(), orbit.end(), y) != orbit.end()) break;
        orbit.push_back(y);
        y = y.galois_apply();
    }
    return orbit;
}

bool is_square(const FieldElem& x) {
    const auto& spec = x.spec();
    switch (spec->kind()) {
        case FieldKind::Rationals: {
            const Rat& r = x.rational();
            if (r < 0) return false;
            Int n = numerator(r), d = denominator(r);
            Int sn = sqrt(n), sd = sqrt(d);
            return sn * sn == n && sd * sd == d;
        }
        case FieldKind::QuadExt: {
            auto b = x.to_base();
            if (!b) throw Error("is_square over Q(sqrt d) requires a base-field element");
            return is_square(*b);
        }
        default: {
            for (const auto& y : all_field_elements(spec))
                if (y * y == x) return true;
            return false;
        }
    }
}

bool quadratic_has_root(const FieldElem& mu) {
    const auto& spec = mu.spec();
    if (spec->is_finite()) {
        for (const auto& y : all_field_elements(spec))
            if (y * y + mu * y + FieldElem::one(spec) == FieldElem::zero(spec)) return true;
        return false;
    }
    // discriminant test over Q (and base-field elements of Q(sqrt d))
    FieldElem disc = mu * mu - FieldElem::from_int(spec, 4);
    if (spec->kind() == FieldKind::QuadExt) {
        auto b = disc.to_base();
        if (!b) throw Error("quadratic_has_root over Q(sqrt d) requires a base-field element");
        return is_square(*b);
    }
    return is_square(disc);
}

std::vector<FieldElem> all_field_elements(const FieldSpecPtr& spec) {
    if (!spec->is_finite()) throw Error("all_field_elements requires a finite field");
    std::vector<FieldElem> out;
    if (spec->kind() == FieldKind::PrimeField) {
        for (std::int64_t i = 0; i < spec->prime(); ++i) out.push_back(FieldElem::from_int(spec, i));
        return out;
    }
    int k = spec->extension_degree();
    std::int64_t p = spec->prime();
    std::vector<std::int64_t> c(k, 0);
    while (true) {
        out.push_back(FieldElem::ext_coeffs(spec, c));
        int i = 0;
        for (; i < k; ++i) {
            if (++c[i] < p) break;
            c[i] = 0;
        }
        if (i == k) break;
    }
    return out;
}

FieldElem parse_field_elem(const FieldSpecPtr& spec, const std::string& text) {
    std::string s;
    for (char ch : text)
        if (!isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    if (s.empty()) throw ParseError("empty field element");
    switch (spec->kind()) {
        case FieldKind::Rationals:
            return FieldElem::from_rational(spec, parse_rational(s));
        case FieldKind::PrimeField:
            return FieldElem::from_rational(spec, parse_rational(s));
        case FieldKind::FiniteExt: {
            if (s.front() == '[' && s.back() == ']') {
                std::vector<std::int64_t> coeffs;
                std::string body = s.substr(1, s.size() - 2);
                std::stringstream ss(body);
                std::string tok;
                while (std::getline(ss, tok, ','))
                    if (!tok.empty()) coeffs.push_back(std::stoll(tok));
                return FieldElem::ext_coeffs(spec, std::move(coeffs));
            }
            return FieldElem::from_rational(spec, parse_rational(s));
        }
        case FieldKind::QuadExt: {
            // forms: "a", "a+b*s", "a-b*s", "b*s", "s", "-s"
            auto star = s.find("*s");
            if (star == std::string::npos && s.find('s') == std::string::npos)
                return FieldElem::from_rational(spec, parse_rational(s));
            std::string a_part, b_part;
            std::size_t split = std::string::npos;
            // split at the last '+' or '-' that is not the leading sign and
            // precedes the b*s term
            for (std::size_t i = s.size(); i-- > 1;) {
                if ((s[i] == '+' || s[i] == '-') && s[i - 1] != '/') {
                    split = i;
                    break;
                }
                if (s[i] == 's' || s[i] == '*') continue;
            }
            std::string bs;
            if (split != std::string::npos && s.find('s', split) != std::string::npos && split > 0) {
                a_part = s.substr(0, split);
                bs = s.substr(split); // includes sign
            } else {
                a_part = "0";
                bs = s;
            }
            // bs is like "+b*s", "-b*s", "b*s", "s", "-s", "+s"
            std::string sign = "";
            if (!bs.empty() && (bs[0] == '+' || bs[0] == '-')) {
                if (bs[0] == '-') sign = "-";
                bs = bs.substr(1);
            }
            if (bs == "s") {
                b_part = sign + "1";
            } else {
                auto st = bs.find("*s");
                if (st == std::string::npos) throw ParseError("malformed quadratic element: " + text);
                b_part = sign + bs.substr(0, st);
            }
            return FieldElem::quad(spec, parse_rational(a_part), parse_rational(b_part));
        }
    }
    throw ParseError("unreachable");
}

} // namespace orbitstab
