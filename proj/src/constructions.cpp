#include "okb/constructions.hpp"

#include <functional>

namespace okb {

namespace {

FieldElement dot3(const Field& f, const std::array<FieldElement, 3>& x,
                  const std::array<FieldElement, 3>& y) {
    FieldElement out = f.zero();
    for (int i = 0; i < 3; ++i) out = f.add(out, f.mul(x[i], y[i]));
    return out;
}

std::array<FieldElement, 3> cross3(const Field& f, const std::array<FieldElement, 3>& x,
                                   const std::array<FieldElement, 3>& y) {
    return {f.sub(f.mul(x[1], y[2]), f.mul(x[2], y[1])),
            f.sub(f.mul(x[2], y[0]), f.mul(x[0], y[2])),
            f.sub(f.mul(x[0], y[1]), f.mul(x[1], y[0]))};
}

MatrixFE mat8_mul(const Field& f, const MatrixFE& a, const MatrixFE& b) {
    MatrixFE out(f, 8, 8);
    for (int i = 0; i < 8; ++i)
        for (int k = 0; k < 8; ++k) {
            if (f.is_zero(a.at(i, k))) continue;
            for (int j = 0; j < 8; ++j)
                out.at(i, j) = f.add(out.at(i, j), f.mul(a.at(i, k), b.at(k, j)));
        }
    return out;
}

Vec8 apply8(const Field& f, const MatrixFE& m, const Vec8& x) {
    return to_vec8(apply(f, m, to_vec(x)));
}

}  // namespace

Mat3 mat3_zero(const Field& f) {
    Mat3 m;
    m.fill(f.zero());
    return m;
}

Mat3 mat3_identity(const Field& f) {
    Mat3 m = mat3_zero(f);
    m[0] = m[4] = m[8] = f.one();
    return m;
}

Mat3 mat3_unit(const Field& f, int r, int c) {
    Mat3 m = mat3_zero(f);
    m[r * 3 + c] = f.one();
    return m;
}

Mat3 mat3_add(const Field& f, const Mat3& x, const Mat3& y) {
    Mat3 out;
    for (int i = 0; i < 9; ++i) out[i] = f.add(x[i], y[i]);
    return out;
}

Mat3 mat3_sub(const Field& f, const Mat3& x, const Mat3& y) {
    Mat3 out;
    for (int i = 0; i < 9; ++i) out[i] = f.sub(x[i], y[i]);
    return out;
}

Mat3 mat3_scale(const Field& f, const FieldElement& c, const Mat3& x) {
    Mat3 out;
    for (int i = 0; i < 9; ++i) out[i] = f.mul(c, x[i]);
    return out;
}

Mat3 mat3_mul(const Field& f, const Mat3& x, const Mat3& y) {
    Mat3 out = mat3_zero(f);
    for (int i = 0; i < 3; ++i)
        for (int k = 0; k < 3; ++k) {
            if (f.is_zero(x[i * 3 + k])) continue;
            for (int j = 0; j < 3; ++j)
                out[i * 3 + j] = f.add(out[i * 3 + j], f.mul(x[i * 3 + k], y[k * 3 + j]));
        }
    return out;
}

bool mat3_is_zero(const Field& f, const Mat3& x) {
    for (const auto& e : x)
        if (!f.is_zero(e)) return false;
    return true;
}

FieldElement mat3_trace(const Field& f, const Mat3& x) {
    return f.add(x[0], f.add(x[4], x[8]));
}

FieldElement mat3_det(const Field& f, const Mat3& x) {
    FieldElement out = f.mul(x[0], f.sub(f.mul(x[4], x[8]), f.mul(x[5], x[7])));
    out = f.sub(out, f.mul(x[1], f.sub(f.mul(x[3], x[8]), f.mul(x[5], x[6]))));
    return f.add(out, f.mul(x[2], f.sub(f.mul(x[3], x[7]), f.mul(x[4], x[6]))));
}

FieldElement mat3_minor_sum(const Field& f, const Mat3& x) {
    FieldElement out = f.sub(f.mul(x[4], x[8]), f.mul(x[5], x[7]));
    out = f.add(out, f.sub(f.mul(x[0], x[8]), f.mul(x[2], x[6])));
    return f.add(out, f.sub(f.mul(x[0], x[4]), f.mul(x[1], x[3])));
}

bool mat3_is_nilpotent(const Field& f, const Mat3& x) {
    Mat3 x2 = mat3_mul(f, x, x);
    return mat3_is_zero(f, mat3_mul(f, x2, x));
}

std::vector<Mat3> nilpotents(const Field& f) {
    if (!f.finite())
        throw ConstructionError(ConstructionError::Code::InfiniteField,
                                "nilpotent enumeration needs a finite field");
    std::uint64_t q = f.order();
    std::uint64_t total = 1;
    for (int i = 0; i < 8; ++i) total *= q;
    std::vector<Mat3> out;
    // free coordinates: the first eight entries; the last diagonal entry
    // closes the trace
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        std::uint64_t rem = idx;
        Mat3 m;
        for (int i = 0; i < 8; ++i) {
            m[i] = f.element_at(rem % q);
            rem /= q;
        }
        m[8] = f.neg(f.add(m[0], m[4]));
        if (mat3_is_nilpotent(f, m)) out.push_back(m);
    }
    return out;
}

PseudoOctonion::PseudoOctonion(FieldPtr field) : field_(std::move(field)) {
    const Field& f = *field_;
    if (f.characteristic() == 3)
        throw ConstructionError(ConstructionError::Code::Char3,
                                "the matrix model needs characteristic distinct from 3");
    auto roots = f.primitive_cube_roots();
    if (roots.empty())
        throw ConstructionError(ConstructionError::Code::NoCubeRoot,
                                "the matrix model needs a primitive cube root of unity");
    omega_ = roots[0];
    third_ = f.inv(f.from_int(3));
    mu_ = f.mul(f.sub(f.one(), f.mul(omega_, omega_)), third_);
}

Mat3 PseudoOctonion::omega_matrix() const {
    const Field& f = *field_;
    Mat3 m = mat3_zero(f);
    m[0] = f.one();
    m[4] = omega_;
    m[8] = f.mul(omega_, omega_);
    return m;
}

Mat3 PseudoOctonion::mul(const Mat3& x, const Mat3& y) const {
    const Field& f = *field_;
    Mat3 xy = mat3_mul(f, x, y);
    Mat3 yx = mat3_mul(f, y, x);
    Mat3 out = mat3_add(f, mat3_scale(f, mu_, xy),
                        mat3_scale(f, f.sub(f.one(), mu_), yx));
    FieldElement shift = f.mul(mat3_trace(f, xy), third_);
    return mat3_sub(f, out, mat3_scale(f, shift, mat3_identity(f)));
}

FieldElement PseudoOctonion::norm(const Mat3& x) const {
    return field_->neg(field_->mul(mat3_minor_sum(*field_, x), third_));
}

FieldElement PseudoOctonion::bilin(const Mat3& x, const Mat3& y) const {
    return field_->mul(mat3_trace(*field_, mat3_mul(*field_, x, y)), third_);
}

P8Class PseudoOctonion::classify_zero_divisor(const Mat3& x) const {
    const Field& f = *field_;
    if (mat3_is_zero(f, x) || !f.is_zero(norm(x)))
        throw ConstructionError(ConstructionError::Code::NotZeroDivisor,
                                "classification applies to nonzero norm-zero matrices");
    return f.is_zero(mat3_det(f, x)) ? P8Class::Nilpotent : P8Class::OmegaType;
}

std::pair<bool, bool> PseudoOctonion::orth_equiv_check(const Mat3& x, const Mat3& y) const {
    const Field& f = *field_;
    if (!mat3_is_nilpotent(f, x) || !mat3_is_nilpotent(f, y))
        throw ConstructionError(ConstructionError::Code::NotNilpotent,
                                "the orthogonality equivalence is about nilpotent pairs");
    bool assoc = mat3_is_zero(f, mat3_mul(f, x, y)) && mat3_is_zero(f, mat3_mul(f, y, x));
    bool star = mat3_is_zero(f, mul(x, y)) && mat3_is_zero(f, mul(y, x));
    return {assoc, star};
}

ZornElement Zorn::zero() const {
    const Field& f = *field_;
    return {f.zero(), f.zero(), {f.zero(), f.zero(), f.zero()}, {f.zero(), f.zero(), f.zero()}};
}

ZornElement Zorn::one() const {
    ZornElement x = zero();
    x.a = field_->one();
    x.b = field_->one();
    return x;
}

ZornElement Zorn::e1() const {
    ZornElement x = zero();
    x.a = field_->one();
    return x;
}

ZornElement Zorn::e2() const {
    ZornElement x = zero();
    x.b = field_->one();
    return x;
}

ZornElement Zorn::u(int i) const {
    ZornElement x = zero();
    x.u[i - 1] = field_->neg(field_->one());
    return x;
}

ZornElement Zorn::v(int i) const {
    ZornElement x = zero();
    x.v[i - 1] = field_->one();
    return x;
}

ZornElement Zorn::add(const ZornElement& x, const ZornElement& y) const {
    const Field& f = *field_;
    ZornElement out;
    out.a = f.add(x.a, y.a);
    out.b = f.add(x.b, y.b);
    for (int i = 0; i < 3; ++i) {
        out.u[i] = f.add(x.u[i], y.u[i]);
        out.v[i] = f.add(x.v[i], y.v[i]);
    }
    return out;
}

ZornElement Zorn::mul(const ZornElement& x, const ZornElement& y) const {
    const Field& f = *field_;
    ZornElement out;
    out.a = f.add(f.mul(x.a, y.a), dot3(f, x.u, y.v));
    out.b = f.add(f.mul(x.b, y.b), dot3(f, x.v, y.u));
    auto vv = cross3(f, x.v, y.v);
    auto uu = cross3(f, x.u, y.u);
    for (int i = 0; i < 3; ++i) {
        out.u[i] = f.sub(f.add(f.mul(x.a, y.u[i]), f.mul(y.b, x.u[i])), vv[i]);
        out.v[i] = f.add(f.add(f.mul(y.a, x.v[i]), f.mul(x.b, y.v[i])), uu[i]);
    }
    return out;
}

ZornElement Zorn::conj(const ZornElement& x) const {
    const Field& f = *field_;
    ZornElement out;
    out.a = x.b;
    out.b = x.a;
    for (int i = 0; i < 3; ++i) {
        out.u[i] = f.neg(x.u[i]);
        out.v[i] = f.neg(x.v[i]);
    }
    return out;
}

FieldElement Zorn::norm(const ZornElement& x) const {
    return field_->sub(field_->mul(x.a, x.b), dot3(*field_, x.u, x.v));
}

MatrixFE tau_from_idempotent(const Algebra& a, const Vec8& e) {
    if (!a.is_idempotent(e))
        throw ConstructionError(ConstructionError::Code::NotIdempotent,
                                "tau needs a nonzero idempotent");
    const Field& f = a.field();
    MatrixFE m(f, 8, 8);
    for (int j = 0; j < 8; ++j) {
        Vec8 bj = a.basis_vec(j);
        Vec8 col = a.mul(e, a.mul(e, bj));
        Vec8 alt = a.sub(a.scale(a.bilin(e, bj), e), a.mul(bj, e));
        if (col != alt)
            throw std::logic_error("the two closed forms of tau disagree");
        for (int r = 0; r < 8; ++r) m.at(r, j) = col[r];
    }
    return m;
}

Vec8 hurwitz_mul(const Algebra& a, const Vec8& e, const Vec8& x, const Vec8& y) {
    return a.mul(a.mul(e, x), a.mul(y, e));
}

ReconstructReport petersson_reconstruct_check(const Algebra& a, const Vec8& e, int trials,
                                              std::uint64_t seed, const MatrixFE* tau_override) {
    const Field& f = a.field();
    MatrixFE tau = tau_override ? *tau_override : tau_from_idempotent(a, e);
    MatrixFE tau2 = mat8_mul(f, tau, tau);
    auto conj = [&](const Vec8& x) { return a.sub(a.scale(a.bilin(e, x), e), x); };
    auto check_pair = [&](const Vec8& x, const Vec8& y) {
        Vec8 lhs = a.mul(x, y);
        Vec8 rhs = hurwitz_mul(a, e, apply8(f, tau, conj(x)), apply8(f, tau2, conj(y)));
        return lhs == rhs;
    };
    ReconstructReport rep;
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) {
            if (!check_pair(a.basis_vec(i), a.basis_vec(j))) {
                rep.pass = false;
                rep.counterexample = "basis pair " + std::string(Algebra::basis_name(i)) + ", " +
                                     Algebra::basis_name(j);
                return rep;
            }
        }
    std::mt19937_64 rng(seed);
    for (int i = 0; i < trials; ++i) {
        Vec8 x = a.random_element(rng);
        Vec8 y = a.random_element(rng);
        if (!check_pair(x, y)) {
            rep.pass = false;
            rep.counterexample = "x = " + a.print(x) + ", y = " + a.print(y);
            return rep;
        }
    }
    return rep;
}

namespace {

// Coefficients of the split-octonion structure table in the order
// (e1, e2, u1, u2, u3, v1, v2, v3), derived from the vector-matrix model.
std::array<std::array<Vec8, 8>, 8> zorn_structure(const Field& f) {
    Zorn z(Field::make(f.spec()));
    std::array<ZornElement, 8> basis = {z.e1(), z.e2(), z.u(1), z.u(2), z.u(3),
                                        z.v(1), z.v(2), z.v(3)};
    auto coords = [&](const ZornElement& x) {
        Vec8 c;
        c[0] = x.a;
        c[1] = x.b;
        for (int i = 0; i < 3; ++i) {
            c[2 + i] = f.neg(x.u[i]);
            c[5 + i] = x.v[i];
        }
        return c;
    };
    std::array<std::array<Vec8, 8>, 8> out;
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) out[i][j] = coords(z.mul(basis[i], basis[j]));
    return out;
}

// Enumerates c . basis for all coefficient tuples c over a finite field.
void each_in_span(const Field& f, const Subspace& s,
                  const std::function<bool(const Vec8&)>& fn) {
    std::uint64_t q = f.order();
    std::uint64_t total = 1;
    for (int i = 0; i < s.dim(); ++i) total *= q;
    for (std::uint64_t idx = 1; idx < total; ++idx) {
        std::uint64_t rem = idx;
        Vec8 v;
        v.fill(f.zero());
        for (int i = 0; i < s.dim(); ++i) {
            FieldElement c = f.element_at(rem % q);
            rem /= q;
            if (f.is_zero(c)) continue;
            for (int k = 0; k < 8; ++k) v[k] = f.add(v[k], f.mul(c, s.basis[i][k]));
        }
        if (!fn(v)) return;
    }
}

}  // namespace

ZornAlignment align_zorn_basis(const Algebra& a, const Vec8& e, long max_candidates) {
    ZornAlignment result;
    const Field& f = a.field();
    if (!f.finite() || f.order() > 9) return result;

    MatrixFE tau = tau_from_idempotent(a, e);
    MatrixFE nil(f, 8, 8);
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j)
            nil.at(i, j) = f.sub(tau.at(i, j), i == j ? f.one() : f.zero());
    Subspace fix = kernel(f, nil);

    auto hm = [&](const Vec8& x, const Vec8& y) { return hurwitz_mul(a, e, x, y); };
    auto structure = zorn_structure(f);

    // peel subspaces relative to a primitive idempotent split e = E1 + E2:
    // U = {x : E1.x = x, x.E2 = x}, V likewise with the roles swapped
    auto peel = [&](const Vec8& left, const Vec8& right) {
        MatrixFE m(f, 16, 8);
        for (int j = 0; j < 8; ++j) {
            Vec8 bj = a.basis_vec(j);
            Vec8 lc = hm(left, bj);
            Vec8 rc = hm(bj, right);
            for (int r = 0; r < 8; ++r) {
                m.at(r, j) = f.sub(lc[r], r == j ? f.one() : f.zero());
                m.at(8 + r, j) = f.sub(rc[r], r == j ? f.one() : f.zero());
            }
        }
        return kernel(f, m);
    };

    long budget = max_candidates;
    bool done = false;
    each_in_span(f, fix, [&](const Vec8& cand) {
        if (done || budget <= 0) return false;
        if (hm(cand, cand) != cand || cand == e) return true;
        Vec8 E1 = cand;
        Vec8 E2 = a.sub(e, E1);
        Subspace uspace = peel(E1, E2);
        Subspace vspace = peel(E2, E1);
        if (uspace.dim() != 3 || vspace.dim() != 3) return true;

        std::vector<Vec8> u3s, v2s;
        each_in_span(f, uspace, [&](const Vec8& u) {
            if (!a.is_zero_vec(a.sub(apply8(f, tau, u), u))) u3s.push_back(u);
            return true;
        });
        each_in_span(f, vspace, [&](const Vec8& v) {
            if (!a.is_zero_vec(a.sub(apply8(f, tau, v), v))) v2s.push_back(v);
            return true;
        });

        for (const Vec8& U3 : u3s) {
            for (const Vec8& V2 : v2s) {
                if (--budget <= 0) return false;
                Vec8 U2 = a.sub(apply8(f, tau, U3), U3);
                Vec8 V3 = a.sub(V2, apply8(f, tau, V2));
                Vec8 V1 = hm(U2, U3);
                Vec8 U1 = hm(V2, V3);
                std::array<Vec8, 8> basis = {E1, E2, U1, U2, U3, V1, V2, V3};
                if (span8(f, {basis.begin(), basis.end()}).dim() != 8) continue;
                bool ok = true;
                for (int i = 0; i < 8 && ok; ++i)
                    for (int j = 0; j < 8 && ok; ++j) {
                        Vec8 want = a.zero_vec();
                        for (int k = 0; k < 8; ++k)
                            want = a.add(want, a.scale(structure[i][j][k], basis[k]));
                        if (hm(basis[i], basis[j]) != want) ok = false;
                    }
                if (ok) {
                    result.found = true;
                    result.basis = basis;
                    done = true;
                    return false;
                }
            }
        }
        return true;
    });
    return result;
}

}  // namespace okb
