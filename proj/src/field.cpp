#include "okb/field.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <numeric>
#include <optional>
#include <sstream>

namespace okb {
namespace {

using Poly = std::vector<std::uint32_t>;  // low degree first, no trailing zeros; zero = {}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::uint32_t mod_inv(std::uint32_t a, std::uint32_t p) {
    // Fermat; p is prime and a != 0 mod p.
    std::uint64_t r = 1, b = a % p, e = p - 2;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return static_cast<std::uint32_t>(r);
}

void trim(Poly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

int deg(const Poly& f) { return static_cast<int>(f.size()) - 1; }  // deg 0-poly = -1

Poly poly_add(const Poly& f, const Poly& g, std::uint32_t p) {
    Poly r(std::max(f.size(), g.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
        std::uint64_t s = (i < f.size() ? f[i] : 0u) + (i < g.size() ? g[i] : 0u);
        r[i] = static_cast<std::uint32_t>(s % p);
    }
    trim(r);
    return r;
}

Poly poly_neg(const Poly& f, std::uint32_t p) {
    Poly r = f;
    for (auto& c : r) c = (p - c) % p;
    return r;
}

Poly poly_sub(const Poly& f, const Poly& g, std::uint32_t p) { return poly_add(f, poly_neg(g, p), p); }

Poly poly_mul(const Poly& f, const Poly& g, std::uint32_t p) {
    if (f.empty() || g.empty()) return {};
    Poly r(f.size() + g.size() - 1, 0);
    for (std::size_t i = 0; i < f.size(); ++i)
        for (std::size_t j = 0; j < g.size(); ++j)
            r[i + j] = static_cast<std::uint32_t>((r[i + j] + std::uint64_t(f[i]) * g[j]) % p);
    trim(r);
    return r;
}

Poly poly_scale(const Poly& f, std::uint32_t c, std::uint32_t p) {
    Poly r = f;
    for (auto& x : r) x = static_cast<std::uint32_t>(std::uint64_t(x) * c % p);
    trim(r);
    return r;
}

// f = q*g + r with deg r < deg g; g nonzero.
std::pair<Poly, Poly> poly_divmod(Poly f, const Poly& g, std::uint32_t p) {
    assert(!g.empty());
    Poly q;
    std::uint32_t glead_inv = mod_inv(g.back(), p);
    while (deg(f) >= deg(g)) {
        int shift = deg(f) - deg(g);
        std::uint32_t c = static_cast<std::uint32_t>(std::uint64_t(f.back()) * glead_inv % p);
        if (static_cast<int>(q.size()) <= shift) q.resize(shift + 1, 0);
        q[shift] = c;
        for (std::size_t i = 0; i < g.size(); ++i) {
            std::uint64_t sub = std::uint64_t(c) * g[i] % p;
            f[i + shift] = static_cast<std::uint32_t>((f[i + shift] + p - sub) % p);
        }
        trim(f);
    }
    trim(q);
    return {q, f};
}

Poly poly_mod(const Poly& f, const Poly& g, std::uint32_t p) { return poly_divmod(f, g, p).second; }

Poly poly_gcd(Poly a, Poly b, std::uint32_t p) {
    while (!b.empty()) {
        Poly r = poly_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty() && a.back() != 1) a = poly_scale(a, mod_inv(a.back(), p), p);
    return a;
}

// Extended Euclid: returns (g, s) with s*f = g mod m, g monic = gcd(f, m).
std::pair<Poly, Poly> poly_half_ext_gcd(Poly f, Poly m, std::uint32_t p) {
    Poly r0 = std::move(f), r1 = std::move(m);
    Poly s0 = {1}, s1 = {};
    while (!r1.empty()) {
        auto [q, r] = poly_divmod(r0, r1, p);
        Poly s = poly_sub(s0, poly_mul(q, s1, p), p);
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
    }
    if (!r0.empty() && r0.back() != 1) {
        std::uint32_t c = mod_inv(r0.back(), p);
        r0 = poly_scale(r0, c, p);
        s0 = poly_scale(s0, c, p);
    }
    return {r0, s0};
}

bool poly_irreducible(const Poly& f, std::uint32_t p) {
    // Trial division by every monic polynomial of degree 1..deg(f)/2.
    int d = deg(f);
    if (d <= 0) return false;
    if (d == 1) return true;
    for (int e = 1; 2 * e <= d; ++e) {
        std::uint64_t count = 1;
        for (int i = 0; i < e; ++i) count *= p;
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            Poly g(e + 1, 0);
            g[e] = 1;
            std::uint64_t v = idx;
            for (int i = 0; i < e; ++i) {
                g[i] = static_cast<std::uint32_t>(v % p);
                v /= p;
            }
            if (poly_mod(f, g, p).empty()) return false;
        }
    }
    return true;
}

Poly default_modulus(std::uint32_t p, std::uint32_t k) {
    // Lexicographically smallest monic irreducible of degree k over GF(p),
    // comparing coefficient tuples (c_{k-1}, ..., c_0).
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < k; ++i) count *= p;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        Poly f(k + 1, 0);
        f[k] = 1;
        std::uint64_t v = idx;  // c_0 least significant, so idx order = lex on (c_{k-1},...,c_0)
        for (std::uint32_t i = 0; i < k; ++i) {
            f[i] = static_cast<std::uint32_t>(v % p);
            v /= p;
        }
        if (poly_irreducible(f, p)) return f;
    }
    throw FieldError(FieldError::Code::ReducibleModulus, "no irreducible modulus found");
}

std::string poly_to_string(const Poly& f) {
    if (f.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = deg(f); i >= 0; --i) {
        if (f[i] == 0) continue;
        if (!first) os << "+";
        first = false;
        if (i == 0) {
            os << f[i];
        } else {
            if (f[i] != 1) os << f[i];
            os << "t";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

Poly poly_parse(std::string_view text, std::uint32_t p) {
    // Terms c, t, t^e, ct^e (optionally c*t^e) joined by + or -.
    Poly f;
    std::size_t i = 0;
    auto fail = [&]() -> Poly {
        throw FieldError(FieldError::Code::ParseError,
                         "bad polynomial literal: " + std::string(text));
    };
    bool neg = false;
    while (i < text.size()) {
        if (text[i] == ' ') { ++i; continue; }
        if (text[i] == '+') { neg = false; ++i; continue; }
        if (text[i] == '-') { neg = true; ++i; continue; }
        std::uint64_t c = 0;
        bool saw_digit = false;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            c = c * 10 + (text[i] - '0');
            saw_digit = true;
            ++i;
        }
        if (!saw_digit) c = 1;
        if (i < text.size() && text[i] == '*') ++i;
        std::size_t e = 0;
        if (i < text.size() && text[i] == 't') {
            ++i;
            e = 1;
            if (i < text.size() && text[i] == '^') {
                ++i;
                if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i]))) fail();
                e = 0;
                while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
                    e = e * 10 + (text[i] - '0');
                    ++i;
                }
            }
        } else if (!saw_digit) {
            fail();
        }
        std::uint32_t cm = static_cast<std::uint32_t>(c % p);
        if (neg) cm = (p - cm) % p;
        if (f.size() <= e) f.resize(e + 1, 0);
        f[e] = static_cast<std::uint32_t>((f[e] + cm) % p);
    }
    trim(f);
    return f;
}

}  // namespace

FieldPtr Field::make(FieldSpec spec) {
    if (!is_prime(spec.p))
        throw FieldError(FieldError::Code::NonPrimeP,
                         "p = " + std::to_string(spec.p) + " is not prime");
    switch (spec.kind) {
        case FieldKind::Prime:
            spec.k = 1;
            spec.modulus.clear();
            break;
        case FieldKind::Extension: {
            if (spec.k < 1 || spec.k > 8)
                throw FieldError(FieldError::Code::UnsupportedDegree,
                                 "extension degree " + std::to_string(spec.k) + " unsupported");
            if (spec.modulus.empty()) {
                spec.modulus = default_modulus(spec.p, spec.k);
            } else {
                for (auto& c : spec.modulus) c %= spec.p;
                Poly m = spec.modulus;
                trim(m);
                if (deg(m) != static_cast<int>(spec.k) || m.back() != 1)
                    throw FieldError(FieldError::Code::ReducibleModulus,
                                     "modulus must be monic of degree k");
                if (!poly_irreducible(m, spec.p))
                    throw FieldError(FieldError::Code::ReducibleModulus,
                                     "modulus " + poly_to_string(m) + " is reducible over GF(" +
                                         std::to_string(spec.p) + ")");
                spec.modulus = m;
            }
            break;
        }
        case FieldKind::RationalFunction:
            spec.k = 1;
            spec.modulus.clear();
            break;
    }
    return FieldPtr(new Field(std::move(spec)));
}

FieldPtr Field::parse_spec(std::string_view text) {
    FieldSpec spec;
    std::string s(text);
    auto fail = [&]() { throw FieldError(FieldError::Code::ParseError, "bad field spec: " + s); };
    std::size_t caret = s.find('^');
    std::size_t paren = s.find('(');
    try {
        if (paren != std::string::npos) {
            if (s.substr(paren) != "(t)") fail();
            spec.kind = FieldKind::RationalFunction;
            spec.p = static_cast<std::uint32_t>(std::stoul(s.substr(0, paren)));
        } else if (caret != std::string::npos) {
            spec.kind = FieldKind::Extension;
            spec.p = static_cast<std::uint32_t>(std::stoul(s.substr(0, caret)));
            std::string rest = s.substr(caret + 1);
            std::size_t slash = rest.find('/');
            spec.k = static_cast<std::uint32_t>(std::stoul(rest.substr(0, slash)));
            if (slash != std::string::npos) {
                // c_k,...,c_0 high to low
                std::vector<std::uint32_t> high_to_low;
                std::istringstream is(rest.substr(slash + 1));
                std::string tok;
                while (std::getline(is, tok, ',')) high_to_low.push_back(static_cast<std::uint32_t>(std::stoul(tok)));
                if (high_to_low.size() != spec.k + 1) fail();
                spec.modulus.assign(high_to_low.rbegin(), high_to_low.rend());
            }
        } else {
            spec.kind = FieldKind::Prime;
            spec.p = static_cast<std::uint32_t>(std::stoul(s));
        }
    } catch (const std::logic_error&) {
        fail();
    }
    return make(spec);
}

std::uint64_t Field::order() const {
    if (!finite())
        throw FieldError(FieldError::Code::InfiniteField, "GF(p)(t) is infinite");
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < spec_.k; ++i) q *= spec_.p;
    return q;
}

std::string Field::spec_string() const {
    switch (spec_.kind) {
        case FieldKind::Prime:
            return std::to_string(spec_.p);
        case FieldKind::Extension: {
            std::string s = std::to_string(spec_.p) + "^" + std::to_string(spec_.k) + "/";
            for (int i = static_cast<int>(spec_.k); i >= 0; --i) {
                s += std::to_string(spec_.modulus[i]);
                if (i > 0) s += ",";
            }
            return s;
        }
        case FieldKind::RationalFunction:
            return std::to_string(spec_.p) + "(t)";
    }
    return {};
}

FieldElement Field::zero() const {
    if (finite()) return FieldElement{Poly(spec_.k, 0), {}};
    return FieldElement{{}, {1}};
}

FieldElement Field::one() const { return from_int(1); }

FieldElement Field::from_int(std::int64_t n) const {
    std::int64_t r = n % spec_.p;
    if (r < 0) r += spec_.p;
    if (finite()) {
        Poly c(spec_.k, 0);
        c[0] = static_cast<std::uint32_t>(r);
        return FieldElement{std::move(c), {}};
    }
    Poly num = r ? Poly{static_cast<std::uint32_t>(r)} : Poly{};
    return FieldElement{std::move(num), {1}};
}

FieldElement Field::t_element() const {
    if (spec_.kind == FieldKind::Extension) {
        if (spec_.k < 2)
            throw FieldError(FieldError::Code::ParseError, "degree-1 extension has no t");
        Poly c(spec_.k, 0);
        c[1] = 1;
        return FieldElement{std::move(c), {}};
    }
    if (spec_.kind == FieldKind::RationalFunction) return FieldElement{{0, 1}, {1}};
    throw FieldError(FieldError::Code::ParseError, "prime field has no t");
}

void Field::check(const FieldElement& a) const {
    if (finite()) {
        if (a.num.size() != spec_.k || !a.den.empty())
            throw FieldError(FieldError::Code::MixedFields, "element does not belong to this field");
        for (auto c : a.num)
            if (c >= spec_.p)
                throw FieldError(FieldError::Code::MixedFields, "element coefficient out of range");
    } else {
        if (a.den.empty() || a.den.back() != 1)
            throw FieldError(FieldError::Code::MixedFields, "element does not belong to this field");
    }
}

bool Field::is_zero(const FieldElement& a) const {
    check(a);
    if (finite()) return std::all_of(a.num.begin(), a.num.end(), [](auto c) { return c == 0; });
    return a.num.empty();
}

bool Field::is_one(const FieldElement& a) const { return a == one(); }

namespace {

// Canonicalize a fraction: gcd-reduce, monic denominator.
FieldElement make_frac(Poly num, Poly den, std::uint32_t p) {
    if (den.empty()) throw FieldError(FieldError::Code::DivisionByZero, "division by zero");
    if (num.empty()) return FieldElement{{}, {1}};
    Poly g = poly_gcd(num, den, p);
    if (deg(g) > 0 || (!g.empty() && g.back() != 1)) {
        num = poly_divmod(num, g, p).first;
        den = poly_divmod(den, g, p).first;
    }
    if (den.back() != 1) {
        std::uint32_t c = mod_inv(den.back(), p);
        num = poly_scale(num, c, p);
        den = poly_scale(den, c, p);
    }
    return FieldElement{std::move(num), std::move(den)};
}

}  // namespace

FieldElement Field::add(const FieldElement& a, const FieldElement& b) const {
    check(a);
    check(b);
    std::uint32_t p = spec_.p;
    if (finite()) {
        FieldElement r = a;
        for (std::size_t i = 0; i < r.num.size(); ++i) r.num[i] = (r.num[i] + b.num[i]) % p;
        return r;
    }
    Poly num = poly_add(poly_mul(a.num, b.den, p), poly_mul(b.num, a.den, p), p);
    return make_frac(std::move(num), poly_mul(a.den, b.den, p), p);
}

FieldElement Field::neg(const FieldElement& a) const {
    check(a);
    FieldElement r = a;
    for (auto& c : r.num) c = (spec_.p - c) % spec_.p;
    return r;
}

FieldElement Field::sub(const FieldElement& a, const FieldElement& b) const { return add(a, neg(b)); }

FieldElement Field::mul(const FieldElement& a, const FieldElement& b) const {
    check(a);
    check(b);
    std::uint32_t p = spec_.p;
    if (spec_.kind == FieldKind::Prime) {
        Poly c{static_cast<std::uint32_t>(std::uint64_t(a.num[0]) * b.num[0] % p)};
        return FieldElement{std::move(c), {}};
    }
    if (spec_.kind == FieldKind::Extension) {
        Poly prod = poly_mod(poly_mul(a.num, b.num, p), spec_.modulus, p);
        prod.resize(spec_.k, 0);
        return FieldElement{std::move(prod), {}};
    }
    return make_frac(poly_mul(a.num, b.num, p), poly_mul(a.den, b.den, p), p);
}

FieldElement Field::inv(const FieldElement& a) const {
    check(a);
    if (is_zero(a)) throw FieldError(FieldError::Code::DivisionByZero, "inverse of zero");
    std::uint32_t p = spec_.p;
    if (spec_.kind == FieldKind::Prime)
        return FieldElement{{mod_inv(a.num[0], p)}, {}};
    if (spec_.kind == FieldKind::Extension) {
        Poly f = a.num;
        trim(f);
        auto [g, s] = poly_half_ext_gcd(f, spec_.modulus, p);
        assert(deg(g) == 0);
        Poly r = poly_mod(s, spec_.modulus, p);
        r.resize(spec_.k, 0);
        return FieldElement{std::move(r), {}};
    }
    return make_frac(a.den, a.num, p);
}

FieldElement Field::div(const FieldElement& a, const FieldElement& b) const { return mul(a, inv(b)); }

FieldElement Field::pow(const FieldElement& a, std::uint64_t e) const {
    FieldElement r = one();
    FieldElement b = a;
    while (e) {
        if (e & 1) r = mul(r, b);
        b = mul(b, b);
        e >>= 1;
    }
    return r;
}

std::uint64_t Field::element_count() const { return order(); }

FieldElement Field::element_at(std::uint64_t index) const {
    if (!finite())
        throw FieldError(FieldError::Code::InfiniteField, "cannot enumerate GF(p)(t)");
    Poly c(spec_.k, 0);
    for (std::uint32_t i = 0; i < spec_.k; ++i) {  // c_0 least significant
        c[i] = static_cast<std::uint32_t>(index % spec_.p);
        index /= spec_.p;
    }
    return FieldElement{std::move(c), {}};
}

std::uint64_t Field::index_of(const FieldElement& a) const {
    check(a);
    if (!finite())
        throw FieldError(FieldError::Code::InfiniteField, "cannot enumerate GF(p)(t)");
    std::uint64_t idx = 0;
    for (std::uint32_t i = spec_.k; i-- > 0;) idx = idx * spec_.p + a.num[i];
    return idx;
}

std::vector<FieldElement> Field::enumerate_elements() const {
    std::uint64_t q = order();
    std::vector<FieldElement> out;
    out.reserve(q);
    for (std::uint64_t i = 0; i < q; ++i) out.push_back(element_at(i));
    return out;
}

std::vector<FieldElement> Field::primitive_cube_roots() const {
    if (!finite()) {
        auto base = Field::make({FieldKind::Prime, spec_.p, 1, {}});
        std::vector<FieldElement> out;
        for (const auto& r : base->primitive_cube_roots()) {
            Poly num = r.num[0] ? Poly{r.num[0]} : Poly{};
            out.push_back(FieldElement{std::move(num), {1}});
        }
        return out;
    }
    if (spec_.p == 3) return {};  // x^2+x+1 = (x-1)^2 in characteristic 3
    std::uint64_t q = order();
    if (q % 3 != 1) return {};
    // First element (in enumeration order) whose (q-1)/3 power is a nontrivial cube root.
    FieldElement omega = zero();
    for (std::uint64_t i = 1; i < q; ++i) {
        FieldElement w = pow(element_at(i), (q - 1) / 3);
        if (!is_one(w)) {
            omega = w;
            break;
        }
    }
    FieldElement omega2 = mul(omega, omega);
    if (index_of(omega) > index_of(omega2)) std::swap(omega, omega2);
    return {omega, omega2};
}

namespace {

// Monic cube root of a monic polynomial, or nullopt. In characteristic 3 use
// f = g(t)^3 = (Frobenius g)(t^3); otherwise solve coefficients top-down
// (the unknown enters with factor 3, invertible).
std::optional<Poly> poly_cube_root(const Poly& f, std::uint32_t p) {
    int d = deg(f);
    if (d < 0 || d % 3 != 0) return std::nullopt;
    int m = d / 3;
    Poly g(m + 1, 0);
    if (p == 3) {
        for (int i = 0; i <= d; ++i) {
            if (f[i] == 0) continue;
            if (i % 3 != 0) return std::nullopt;
            // cube root of coefficient in GF(3): Frobenius is the identity
            g[i / 3] = f[i];
        }
    } else {
        g[m] = 1;
        std::uint32_t inv3 = mod_inv(3 % p, p);
        for (int j = 1; j <= m; ++j) {
            Poly cube = poly_mul(poly_mul(g, g, p), g, p);
            std::uint32_t have = (3 * m - j < static_cast<int>(cube.size())) ? cube[3 * m - j] : 0;
            std::uint32_t want = f[3 * m - j];
            std::uint32_t delta = (want + p - have) % p;
            g[m - j] = static_cast<std::uint32_t>(std::uint64_t(delta) * inv3 % p);
        }
    }
    Poly cube = poly_mul(poly_mul(g, g, p), g, p);
    if (cube != f) return std::nullopt;
    return g;
}

}  // namespace

bool Field::is_cube(const FieldElement& a) const {
    check(a);
    if (is_zero(a)) return true;
    if (finite()) {
        std::uint64_t q = order();
        std::uint64_t g = std::gcd<std::uint64_t>(3, q - 1);
        return is_one(pow(a, (q - 1) / g));
    }
    // a = c * n0/d0 with n0, d0 monic coprime: a cube iff c, n0, d0 all are.
    std::uint32_t p = spec_.p;
    std::uint32_t c = a.num.back();
    Poly n0 = poly_scale(a.num, mod_inv(c, p), p);
    auto base = Field::make({FieldKind::Prime, p, 1, {}});
    if (!base->is_cube(base->from_int(c))) return false;
    return poly_cube_root(n0, p).has_value() && poly_cube_root(a.den, p).has_value();
}

std::string Field::print(const FieldElement& a) const {
    check(a);
    if (spec_.kind == FieldKind::Prime) return std::to_string(a.num[0]);
    if (spec_.kind == FieldKind::Extension) {
        Poly f = a.num;
        trim(f);
        return poly_to_string(f);
    }
    if (a.den == Poly{1}) return poly_to_string(a.num);
    return "(" + poly_to_string(a.num) + ")/(" + poly_to_string(a.den) + ")";
}

FieldElement Field::parse(std::string_view text) const {
    std::uint32_t p = spec_.p;
    if (spec_.kind == FieldKind::Prime) {
        Poly f = poly_parse(text, p);
        if (deg(f) > 0) throw FieldError(FieldError::Code::ParseError, "prime field literal has t");
        return from_int(f.empty() ? 0 : f[0]);
    }
    if (spec_.kind == FieldKind::Extension) {
        Poly f = poly_parse(text, p);
        f = poly_mod(f, spec_.modulus, p);
        f.resize(spec_.k, 0);
        return FieldElement{std::move(f), {}};
    }
    // fraction: "(num)/(den)" or a plain polynomial
    std::string s(text);
    if (!s.empty() && s.front() == '(') {
        std::size_t close = s.find(')');
        if (close == std::string::npos)
            throw FieldError(FieldError::Code::ParseError, "unbalanced parens: " + s);
        Poly num = poly_parse(s.substr(1, close - 1), p);
        std::string rest = s.substr(close + 1);
        if (rest.empty()) return make_frac(std::move(num), {1}, p);
        if (rest.size() < 4 || rest[0] != '/' || rest[1] != '(' || rest.back() != ')')
            throw FieldError(FieldError::Code::ParseError, "bad fraction literal: " + s);
        Poly den = poly_parse(rest.substr(2, rest.size() - 3), p);
        return make_frac(std::move(num), std::move(den), p);
    }
    return make_frac(poly_parse(s, p), {1}, p);
}

}  // namespace okb
