#pragma once

#include "okb/linalg.hpp"

#include <random>

namespace okb {

class OkuboError : public std::runtime_error {
public:
    enum class Code {
        ZeroParameter,
        MixedAlgebras,
        NotZeroDivisor,
        NotChar3,
        NotSplit,
        NotIdempotent,
        NotTypeC,
        NotChar3Split,
    };

    OkuboError(Code code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
    Code code() const { return code_; }

private:
    Code code_;
};

/// Classification of a nonzero norm-zero element x:
/// TypeA when n(x, x*x) != 0, TypeC when x*x = 0, TypeB otherwise.
enum class ZeroDivisorClass { TypeA, TypeB, TypeC };

/// Subclassification of TypeC elements over characteristic 3 split algebras,
/// by whether x is orthogonal to the centralizer of the canonical idempotent.
enum class Char3Subclass { SingularType, QuadraticType };

struct IdentityReport {
    bool pass = true;
    std::string failed_identity;   // empty when pass
    std::string counterexample;    // printed witness tuple when !pass
};

/// The eight-dimensional algebra O_{alpha,beta} over a fixed field, in the
/// basis order {z10, z20, z01, z02, z11, z22, z12, z21}. Immutable after
/// construction; every operation is pure, so a const instance is shareable
/// across threads.
class Algebra {
public:
    Algebra(FieldPtr field, FieldElement alpha, FieldElement beta);

    const Field& field() const { return *field_; }
    const FieldPtr& field_ptr() const { return field_; }
    const FieldElement& alpha() const { return alpha_; }
    const FieldElement& beta() const { return beta_; }
    const MatrixFE& gram() const { return gram_; }

    static const char* basis_name(int i);

    Vec8 zero_vec() const;
    Vec8 basis_vec(int i) const;
    bool is_zero_vec(const Vec8& x) const;
    bool equal(const Vec8& x, const Vec8& y) const;

    Vec8 add(const Vec8& x, const Vec8& y) const;
    Vec8 sub(const Vec8& x, const Vec8& y) const;
    Vec8 neg(const Vec8& x) const;
    Vec8 scale(const FieldElement& c, const Vec8& x) const;

    /// Structure constant z_i * z_j as a coefficient vector.
    const Vec8& basis_product(int i, int j) const { return structure_[i][j]; }

    Vec8 mul(const Vec8& x, const Vec8& y) const;
    FieldElement bilin(const Vec8& x, const Vec8& y) const;
    FieldElement qnorm(const Vec8& x) const;

    bool is_zero_divisor(const Vec8& x) const;

    /// {y : y*x = 0}; equals x * O, dimension 4 for every zero divisor.
    Subspace left_ann(const Vec8& x) const;
    /// {y : x*y = 0}; equals O * x, dimension 4 for every zero divisor.
    Subspace right_ann(const Vec8& x) const;
    /// {y : x*y = y*x = 0}; span{x*x} when x*x != 0, dimension 3 otherwise.
    Subspace orthogonalizer(const Vec8& x) const;
    /// (x * O) intersected with (O * y); span{x*y} when x*y != 0, else dim 3.
    Subspace ann_intersection(const Vec8& x, const Vec8& y) const;

    ZeroDivisorClass classify(const Vec8& x) const;

    /// Zero is excluded: only nonzero solutions of x*x = x count.
    bool is_idempotent(const Vec8& x) const;

    /// Characteristic 3, split case only: the idempotent whose centralizer has
    /// dimension 6. Over O_{1,1} this is the sum of all eight basis vectors.
    Vec8 quaternionic_idempotent() const;

    /// {y : e*y = y*e} for an idempotent e.
    Subspace centralizer(const Vec8& e) const;

    /// Splitness criterion in characteristic 3: both parameters are cubes.
    bool split_char3() const;

    Char3Subclass char3_subclass(const Vec8& x) const;

    /// Matrix of y -> x*y in the fixed basis.
    MatrixFE left_mult_matrix(const Vec8& x) const;
    /// Matrix of y -> y*x.
    MatrixFE right_mult_matrix(const Vec8& x) const;

    /// Randomized check of the composition, associativity-of-the-form,
    /// flexible-law and fourth-power identities. Exact equality throughout.
    IdentityReport identity_suite(int trials, std::uint64_t seed) const;

    /// Copy with one structure constant replaced. Fault-injection hook for
    /// testing that the identity suite detects table corruption.
    Algebra patched(int i, int j, Vec8 replacement) const;

    /// Human-readable signed combination, e.g. "z01 - z11" or "(t+1)*z20".
    std::string print(const Vec8& x) const;

    Vec8 random_element(std::mt19937_64& rng) const;
    /// Rejection-samples a nonzero element with qnorm = 0.
    Vec8 random_zero_divisor(std::mt19937_64& rng) const;

private:
    FieldPtr field_;
    FieldElement alpha_;
    FieldElement beta_;
    std::array<std::array<Vec8, 8>, 8> structure_;
    MatrixFE gram_;
};

/// Uniform element of a finite field, or a bounded-degree random fraction
/// over GF(p)(t).
FieldElement random_field_element(const Field& f, std::mt19937_64& rng);

}  // namespace okb
