#include "okb/okubo.hpp"

#include <sstream>

namespace okb {

namespace {

// One entry of the structure table: product z_row * z_col is coeff * z_target,
// with the coefficient drawn from {1, -1, a, -a, b, -b, ab, -ab}.
enum Coeff { C0, P1, M1, PA, MA, PB, MB, PAB, MAB };

struct Entry {
    int target;
    Coeff coeff;
};

// Basis order: z10, z20, z01, z02, z11, z22, z12, z21.
constexpr Entry kTable[8][8] = {
    {{1, P1}, {-1, C0}, {4, M1}, {-1, C0}, {7, M1}, {-1, C0}, {-1, C0}, {2, MA}},
    {{-1, C0}, {0, PA}, {-1, C0}, {5, M1}, {-1, C0}, {6, MA}, {3, MA}, {-1, C0}},
    {{-1, C0}, {7, M1}, {3, P1}, {-1, C0}, {-1, C0}, {1, MB}, {-1, C0}, {5, M1}},
    {{6, M1}, {-1, C0}, {-1, C0}, {2, PB}, {0, MB}, {-1, C0}, {4, MB}, {-1, C0}},
    {{-1, C0}, {2, MA}, {6, M1}, {-1, C0}, {5, P1}, {-1, C0}, {1, MB}, {-1, C0}},
    {{3, MA}, {-1, C0}, {-1, C0}, {7, MB}, {-1, C0}, {4, PAB}, {-1, C0}, {0, MAB}},
    {{5, M1}, {-1, C0}, {0, MB}, {-1, C0}, {-1, C0}, {2, MAB}, {7, PB}, {-1, C0}},
    {{-1, C0}, {4, MA}, {-1, C0}, {1, MB}, {3, MA}, {-1, C0}, {-1, C0}, {6, PA}},
};

constexpr const char* kBasisNames[8] = {"z10", "z20", "z01", "z02",
                                        "z11", "z22", "z12", "z21"};

// (i, j) labels of the basis vectors z_{i,j}, used when scaling idempotents
// between parameter choices.
constexpr int kLabelI[8] = {1, 2, 0, 0, 1, 2, 1, 2};
constexpr int kLabelJ[8] = {0, 0, 1, 2, 1, 2, 2, 1};

// Cube root in characteristic 3, where the cube map is bijective. Finite
// fields use x -> x^(3^(k-1)); over GF(3)(t) the numerator and denominator
// are cubes of polynomials with the same coefficients at one third the degree.
FieldElement char3_cube_root(const Field& f, const FieldElement& x) {
    if (f.finite()) {
        std::uint64_t e = 1;
        for (std::uint32_t i = 1; i < f.spec().k; ++i) e *= 3;
        return f.pow(x, e);
    }
    auto poly_root = [&](const std::vector<std::uint32_t>& c) {
        FieldElement t = f.t_element();
        FieldElement out = f.zero();
        for (std::size_t d = 0; d < c.size(); ++d) {
            if (c[d] == 0) continue;
            if (d % 3 != 0)
                throw FieldError(FieldError::Code::NoCubeRoot, "element is not a cube");
            out = f.add(out, f.mul(f.from_int(c[d]), f.pow(t, d / 3)));
        }
        return out;
    };
    std::vector<std::uint32_t> den = x.den.empty() ? std::vector<std::uint32_t>{1} : x.den;
    return f.div(poly_root(x.num), poly_root(den));
}

[[noreturn]] void rethrow_mixed(const FieldError& e) {
    if (e.code() == FieldError::Code::MixedFields)
        throw OkuboError(OkuboError::Code::MixedAlgebras, e.what());
    throw e;
}

}  // namespace

Algebra::Algebra(FieldPtr field, FieldElement alpha, FieldElement beta)
    : field_(std::move(field)), alpha_(std::move(alpha)), beta_(std::move(beta)) {
    const Field& f = *field_;
    if (f.is_zero(alpha_) || f.is_zero(beta_))
        throw OkuboError(OkuboError::Code::ZeroParameter, "alpha and beta must be nonzero");
    FieldElement ab = f.mul(alpha_, beta_);
    auto coeff_value = [&](Coeff c) {
        switch (c) {
            case P1: return f.one();
            case M1: return f.neg(f.one());
            case PA: return alpha_;
            case MA: return f.neg(alpha_);
            case PB: return beta_;
            case MB: return f.neg(beta_);
            case PAB: return ab;
            case MAB: return f.neg(ab);
            default: return f.zero();
        }
    };
    for (int i = 0; i < 8; ++i) {
        for (int j = 0; j < 8; ++j) {
            Vec8 v;
            v.fill(f.zero());
            const Entry& e = kTable[i][j];
            if (e.target >= 0) v[e.target] = coeff_value(e.coeff);
            structure_[i][j] = v;
        }
    }
    gram_ = MatrixFE(f, 8, 8);
    gram_.at(0, 1) = gram_.at(1, 0) = alpha_;
    gram_.at(2, 3) = gram_.at(3, 2) = beta_;
    gram_.at(4, 5) = gram_.at(5, 4) = ab;
    gram_.at(6, 7) = gram_.at(7, 6) = ab;
}

const char* Algebra::basis_name(int i) { return kBasisNames[i]; }

Vec8 Algebra::zero_vec() const {
    Vec8 v;
    v.fill(field_->zero());
    return v;
}

Vec8 Algebra::basis_vec(int i) const {
    Vec8 v = zero_vec();
    v[i] = field_->one();
    return v;
}

bool Algebra::is_zero_vec(const Vec8& x) const {
    for (const auto& c : x)
        if (!field_->is_zero(c)) return false;
    return true;
}

bool Algebra::equal(const Vec8& x, const Vec8& y) const { return x == y; }

Vec8 Algebra::add(const Vec8& x, const Vec8& y) const {
    Vec8 out;
    for (int i = 0; i < 8; ++i) out[i] = field_->add(x[i], y[i]);
    return out;
}

Vec8 Algebra::sub(const Vec8& x, const Vec8& y) const {
    Vec8 out;
    for (int i = 0; i < 8; ++i) out[i] = field_->sub(x[i], y[i]);
    return out;
}

Vec8 Algebra::neg(const Vec8& x) const {
    Vec8 out;
    for (int i = 0; i < 8; ++i) out[i] = field_->neg(x[i]);
    return out;
}

Vec8 Algebra::scale(const FieldElement& c, const Vec8& x) const {
    Vec8 out;
    for (int i = 0; i < 8; ++i) out[i] = field_->mul(c, x[i]);
    return out;
}

Vec8 Algebra::mul(const Vec8& x, const Vec8& y) const {
    try {
        const Field& f = *field_;
        Vec8 out = zero_vec();
        for (int i = 0; i < 8; ++i) {
            if (f.is_zero(x[i])) continue;
            for (int j = 0; j < 8; ++j) {
                if (f.is_zero(y[j])) continue;
                const Vec8& prod = structure_[i][j];
                FieldElement c = f.mul(x[i], y[j]);
                for (int k = 0; k < 8; ++k) {
                    if (f.is_zero(prod[k])) continue;
                    out[k] = f.add(out[k], f.mul(c, prod[k]));
                }
            }
        }
        return out;
    } catch (const FieldError& e) {
        rethrow_mixed(e);
    }
}

FieldElement Algebra::bilin(const Vec8& x, const Vec8& y) const {
    try {
        const Field& f = *field_;
        FieldElement out = f.zero();
        for (int i = 0; i < 8; ++i) {
            if (f.is_zero(x[i])) continue;
            for (int j = 0; j < 8; ++j) {
                if (f.is_zero(gram_.at(i, j))) continue;
                out = f.add(out, f.mul(x[i], f.mul(gram_.at(i, j), y[j])));
            }
        }
        return out;
    } catch (const FieldError& e) {
        rethrow_mixed(e);
    }
}

FieldElement Algebra::qnorm(const Vec8& x) const {
    try {
        const Field& f = *field_;
        FieldElement ab = f.mul(alpha_, beta_);
        FieldElement out = f.mul(alpha_, f.mul(x[0], x[1]));
        out = f.add(out, f.mul(beta_, f.mul(x[2], x[3])));
        out = f.add(out, f.mul(ab, f.add(f.mul(x[4], x[5]), f.mul(x[6], x[7]))));
        return out;
    } catch (const FieldError& e) {
        rethrow_mixed(e);
    }
}

bool Algebra::is_zero_divisor(const Vec8& x) const {
    return !is_zero_vec(x) && field_->is_zero(qnorm(x));
}

MatrixFE Algebra::left_mult_matrix(const Vec8& x) const {
    MatrixFE m(*field_, 8, 8);
    for (int j = 0; j < 8; ++j) {
        Vec8 col = mul(x, basis_vec(j));
        for (int r = 0; r < 8; ++r) m.at(r, j) = col[r];
    }
    return m;
}

MatrixFE Algebra::right_mult_matrix(const Vec8& x) const {
    MatrixFE m(*field_, 8, 8);
    for (int j = 0; j < 8; ++j) {
        Vec8 col = mul(basis_vec(j), x);
        for (int r = 0; r < 8; ++r) m.at(r, j) = col[r];
    }
    return m;
}

Subspace Algebra::left_ann(const Vec8& x) const {
    if (!is_zero_divisor(x))
        throw OkuboError(OkuboError::Code::NotZeroDivisor, "left_ann needs a zero divisor");
    return kernel(*field_, right_mult_matrix(x));
}

Subspace Algebra::right_ann(const Vec8& x) const {
    if (!is_zero_divisor(x))
        throw OkuboError(OkuboError::Code::NotZeroDivisor, "right_ann needs a zero divisor");
    return kernel(*field_, left_mult_matrix(x));
}

Subspace Algebra::orthogonalizer(const Vec8& x) const {
    if (!is_zero_divisor(x))
        throw OkuboError(OkuboError::Code::NotZeroDivisor, "orthogonalizer needs a zero divisor");
    MatrixFE l = left_mult_matrix(x);
    MatrixFE r = right_mult_matrix(x);
    MatrixFE stacked(*field_, 16, 8);
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) {
            stacked.at(i, j) = l.at(i, j);
            stacked.at(8 + i, j) = r.at(i, j);
        }
    return kernel(*field_, stacked);
}

Subspace Algebra::ann_intersection(const Vec8& x, const Vec8& y) const {
    if (!is_zero_divisor(x) || !is_zero_divisor(y))
        throw OkuboError(OkuboError::Code::NotZeroDivisor, "ann_intersection needs zero divisors");
    std::vector<Vec8> left_image, right_image;
    for (int i = 0; i < 8; ++i) {
        left_image.push_back(mul(x, basis_vec(i)));
        right_image.push_back(mul(basis_vec(i), y));
    }
    return intersect(*field_, span8(*field_, left_image), span8(*field_, right_image));
}

ZeroDivisorClass Algebra::classify(const Vec8& x) const {
    if (!is_zero_divisor(x))
        throw OkuboError(OkuboError::Code::NotZeroDivisor, "classify needs a zero divisor");
    Vec8 xx = mul(x, x);
    if (is_zero_vec(xx)) return ZeroDivisorClass::TypeC;
    if (!field_->is_zero(bilin(x, xx))) return ZeroDivisorClass::TypeA;
    return ZeroDivisorClass::TypeB;
}

bool Algebra::is_idempotent(const Vec8& x) const {
    return !is_zero_vec(x) && mul(x, x) == x;
}

bool Algebra::split_char3() const {
    if (field_->characteristic() != 3)
        throw OkuboError(OkuboError::Code::NotChar3, "splitness test is specific to characteristic 3");
    return field_->is_cube(alpha_) && field_->is_cube(beta_);
}

Vec8 Algebra::quaternionic_idempotent() const {
    if (field_->characteristic() != 3)
        throw OkuboError(OkuboError::Code::NotChar3, "quaternionic idempotent needs characteristic 3");
    if (!split_char3())
        throw OkuboError(OkuboError::Code::NotSplit, "quaternionic idempotent needs a split algebra");
    const Field& f = *field_;
    FieldElement a = char3_cube_root(f, alpha_);
    FieldElement b = char3_cube_root(f, beta_);
    // Rescaling z_{i,j} by a^i b^j carries O_{1,1} to O_{a^3,b^3}; try both
    // orientations of the scaling.
    for (const FieldElement& sa : {a, f.inv(a)}) {
        for (const FieldElement& sb : {b, f.inv(b)}) {
            Vec8 e;
            for (int k = 0; k < 8; ++k)
                e[k] = f.mul(f.pow(sa, kLabelI[k]), f.pow(sb, kLabelJ[k]));
            if (is_idempotent(e)) return e;
        }
    }
    throw std::logic_error("no quaternionic idempotent found despite split parameters");
}

Subspace Algebra::centralizer(const Vec8& e) const {
    if (!is_idempotent(e))
        throw OkuboError(OkuboError::Code::NotIdempotent, "centralizer needs an idempotent");
    MatrixFE l = left_mult_matrix(e);
    MatrixFE r = right_mult_matrix(e);
    MatrixFE diff(*field_, 8, 8);
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) diff.at(i, j) = field_->sub(l.at(i, j), r.at(i, j));
    return kernel(*field_, diff);
}

Char3Subclass Algebra::char3_subclass(const Vec8& x) const {
    if (field_->characteristic() != 3 || !split_char3())
        throw OkuboError(OkuboError::Code::NotChar3Split,
                         "subclassification needs a split algebra in characteristic 3");
    if (classify(x) != ZeroDivisorClass::TypeC)
        throw OkuboError(OkuboError::Code::NotTypeC, "subclassification applies to square-zero elements");
    Vec8 e = quaternionic_idempotent();
    Subspace c = centralizer(e);
    if (!contains8(*field_, c, x))
        throw std::logic_error("square-zero element outside the idempotent centralizer");
    for (const auto& row : c.basis)
        if (!field_->is_zero(bilin(x, to_vec8(row)))) return Char3Subclass::QuadraticType;
    return Char3Subclass::SingularType;
}

std::string Algebra::print(const Vec8& x) const {
    const Field& f = *field_;
    std::string out;
    for (int i = 0; i < 8; ++i) {
        if (f.is_zero(x[i])) continue;
        bool minus_one = x[i] == f.neg(f.one());
        std::string term;
        if (f.is_one(x[i])) {
            term = kBasisNames[i];
        } else if (minus_one) {
            term = kBasisNames[i];
        } else {
            std::string c = f.print(x[i]);
            if (c.find_first_of("+-/ ") != std::string::npos) c = "(" + c + ")";
            term = c + "*" + kBasisNames[i];
        }
        if (out.empty()) {
            out = minus_one ? "-" + term : term;
        } else {
            out += minus_one ? " - " + term : " + " + term;
        }
    }
    return out.empty() ? "0" : out;
}

FieldElement random_field_element(const Field& f, std::mt19937_64& rng) {
    if (f.finite()) {
        std::uniform_int_distribution<std::uint64_t> d(0, f.order() - 1);
        return f.element_at(d(rng));
    }
    std::uniform_int_distribution<int> dc(0, static_cast<int>(f.characteristic()) - 1);
    std::uniform_int_distribution<int> dd(0, 2);
    auto rand_poly = [&](bool nonzero) {
        FieldElement out = f.zero();
        FieldElement t = f.t_element();
        int deg = dd(rng);
        for (int k = 0; k <= deg; ++k)
            out = f.add(out, f.mul(f.from_int(dc(rng)), f.pow(t, k)));
        if (nonzero && f.is_zero(out)) out = f.one();
        return out;
    };
    return f.div(rand_poly(false), rand_poly(true));
}

Vec8 Algebra::random_element(std::mt19937_64& rng) const {
    Vec8 v;
    for (auto& c : v) c = random_field_element(*field_, rng);
    return v;
}

Vec8 Algebra::random_zero_divisor(std::mt19937_64& rng) const {
    const Field& f = *field_;
    if (f.finite()) {
        for (;;) {
            Vec8 v = random_element(rng);
            if (is_zero_divisor(v)) return v;
        }
    }
    // Infinite field: isotropic vectors are too sparse for rejection, so
    // solve the last hyperbolic coordinate instead.
    FieldElement ab = f.mul(alpha_, beta_);
    for (;;) {
        Vec8 v = random_element(rng);
        if (f.is_zero(v[6])) continue;
        FieldElement rest = f.add(f.mul(alpha_, f.mul(v[0], v[1])),
                                  f.add(f.mul(beta_, f.mul(v[2], v[3])),
                                        f.mul(ab, f.mul(v[4], v[5]))));
        v[7] = f.neg(f.div(rest, f.mul(ab, v[6])));
        if (!is_zero_vec(v)) return v;
    }
}

IdentityReport Algebra::identity_suite(int trials, std::uint64_t seed) const {
    const Field& f = *field_;
    std::mt19937_64 rng(seed);
    auto fail = [&](const char* name, const Vec8& x, const Vec8& y, const Vec8& z) {
        IdentityReport r;
        r.pass = false;
        r.failed_identity = name;
        r.counterexample = "x = " + print(x) + ", y = " + print(y) + ", z = " + print(z);
        return r;
    };
    for (int i = 0; i < trials; ++i) {
        Vec8 x = random_element(rng);
        Vec8 y = random_element(rng);
        Vec8 z = random_element(rng);
        Vec8 xy = mul(x, y);
        if (qnorm(xy) != f.mul(qnorm(x), qnorm(y)))
            return fail("composition n(x*y) = n(x) n(y)", x, y, z);
        if (bilin(xy, z) != bilin(x, mul(y, z)))
            return fail("associativity n(x*y, z) = n(x, y*z)", x, y, z);
        Vec8 nxy = scale(qnorm(x), y);
        if (mul(xy, x) != nxy || mul(x, mul(y, x)) != nxy)
            return fail("flexible law (x*y)*x = x*(y*x) = n(x) y", x, y, z);
        Vec8 lin = scale(bilin(x, z), y);
        if (add(mul(xy, z), mul(mul(z, y), x)) != lin ||
            add(mul(x, mul(y, z)), mul(z, mul(y, x))) != lin)
            return fail("linearized flexible law", x, y, z);
        Vec8 xx = mul(x, x);
        Vec8 rhs = sub(scale(bilin(x, xx), x), scale(qnorm(x), xx));
        if (mul(xx, xx) != rhs)
            return fail("fourth power (x*x)*(x*x) = n(x, x*x) x - n(x) x*x", x, y, z);
    }
    return IdentityReport{};
}

Algebra Algebra::patched(int i, int j, Vec8 replacement) const {
    Algebra copy = *this;
    copy.structure_[i][j] = std::move(replacement);
    return copy;
}

}  // namespace okb
