#pragma once

#include "okb/okubo.hpp"

namespace okb {

class ConstructionError : public std::runtime_error {
public:
    enum class Code {
        Char3,
        NoCubeRoot,
        NotZeroDivisor,
        NotNilpotent,
        InfiniteField,
        NotIdempotent,
    };

    ConstructionError(Code code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
    Code code() const { return code_; }

private:
    Code code_;
};

/// Row-major 3x3 matrix over a field.
using Mat3 = std::array<FieldElement, 9>;

Mat3 mat3_zero(const Field& f);
Mat3 mat3_identity(const Field& f);
Mat3 mat3_unit(const Field& f, int r, int c);
Mat3 mat3_add(const Field& f, const Mat3& x, const Mat3& y);
Mat3 mat3_sub(const Field& f, const Mat3& x, const Mat3& y);
Mat3 mat3_scale(const Field& f, const FieldElement& c, const Mat3& x);
Mat3 mat3_mul(const Field& f, const Mat3& x, const Mat3& y);
bool mat3_is_zero(const Field& f, const Mat3& x);
FieldElement mat3_trace(const Field& f, const Mat3& x);
FieldElement mat3_det(const Field& f, const Mat3& x);
/// Sum of the principal 2x2 minors, the degree-one coefficient of the
/// characteristic polynomial.
FieldElement mat3_minor_sum(const Field& f, const Mat3& x);
bool mat3_is_nilpotent(const Field& f, const Mat3& x);  // x^3 = 0

/// All nilpotent 3x3 matrices over a finite field (zero included), in the
/// enumeration order of the traceless coefficient tuples.
std::vector<Mat3> nilpotents(const Field& f);

enum class P8Class { Nilpotent, OmegaType };

/// The eight-dimensional algebra of traceless 3x3 matrices with the twisted
/// product mu*xy + (1-mu)*yx - tr(xy)/3, where mu = (1 - w^2)/3 for a
/// primitive cube root of unity w. Needs characteristic != 3 and w in the
/// field.
class PseudoOctonion {
public:
    explicit PseudoOctonion(FieldPtr field);

    const Field& field() const { return *field_; }
    const FieldElement& omega() const { return omega_; }
    const FieldElement& mu() const { return mu_; }

    /// diag(1, w, w^2), the canonical non-nilpotent zero divisor.
    Mat3 omega_matrix() const;

    Mat3 mul(const Mat3& x, const Mat3& y) const;
    FieldElement norm(const Mat3& x) const;   // -s(x)/3, valid in char 2
    FieldElement bilin(const Mat3& x, const Mat3& y) const;  // tr(xy)/3

    P8Class classify_zero_divisor(const Mat3& x) const;

    /// (xy = yx = 0, x*y = y*x = 0) for nilpotent x, y; the two agree.
    std::pair<bool, bool> orth_equiv_check(const Mat3& x, const Mat3& y) const;

private:
    FieldPtr field_;
    FieldElement omega_;
    FieldElement mu_;
    FieldElement third_;  // 1/3
};

/// An element a, b in F, u, v in F^3 of the split octonion algebra in its
/// 2x2 vector-matrix form; the norm is ab - (u|v).
struct ZornElement {
    FieldElement a, b;
    std::array<FieldElement, 3> u, v;

    friend bool operator==(const ZornElement&, const ZornElement&) = default;
};

class Zorn {
public:
    explicit Zorn(FieldPtr field) : field_(std::move(field)) {}

    const Field& field() const { return *field_; }

    ZornElement zero() const;
    ZornElement one() const;
    ZornElement e1() const;
    ZornElement e2() const;
    ZornElement u(int i) const;  // i = 1, 2, 3
    ZornElement v(int i) const;

    ZornElement add(const ZornElement& x, const ZornElement& y) const;
    ZornElement mul(const ZornElement& x, const ZornElement& y) const;
    ZornElement conj(const ZornElement& x) const;  // n(1,x) 1 - x
    FieldElement norm(const ZornElement& x) const;

private:
    FieldPtr field_;
};

/// The 8x8 matrix of x -> e*(e*x) for a nonzero idempotent e; an order-3
/// automorphism of the algebra. Both closed forms, e*(e*x) and
/// n(e,x)e - x*e, are computed and must agree.
MatrixFE tau_from_idempotent(const Algebra& a, const Vec8& e);

/// The unital product (e*x)*(y*e) derived from an idempotent; e is its unit.
Vec8 hurwitz_mul(const Algebra& a, const Vec8& e, const Vec8& x, const Vec8& y);

struct ReconstructReport {
    bool pass = true;
    std::string counterexample;
};

/// Checks x*y = tau(conj(x)) . tau^2(conj(y)) over all 64 basis pairs plus
/// random pairs, where . is the derived unital product and conj is its
/// standard conjugation. An explicit tau matrix may be substituted to test
/// that corruption is detected.
ReconstructReport petersson_reconstruct_check(const Algebra& a, const Vec8& e, int trials,
                                              std::uint64_t seed,
                                              const MatrixFE* tau_override = nullptr);

/// A basis (e1, e2, u1, u2, u3, v1, v2, v3) of the derived unital algebra
/// realizing the split-octonion structure table, chosen so that tau fixes
/// e1, e2, u1, u2, v1, v3 and maps u3 -> u3 + u2, v2 -> v2 - v3.
struct ZornAlignment {
    bool found = false;
    std::array<Vec8, 8> basis;
};

/// Bounded search for the aligned basis; examines at most max_candidates
/// (e1, u3, v2) combinations.
ZornAlignment align_zorn_basis(const Algebra& a, const Vec8& e, long max_candidates = 100000);

}  // namespace okb
