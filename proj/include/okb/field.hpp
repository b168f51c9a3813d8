#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace okb {

enum class FieldKind { Prime, Extension, RationalFunction };

/// Description of a coefficient field: GF(p), GF(p^k) with an explicit monic
/// irreducible modulus, or the rational-function field GF(p)(t).
struct FieldSpec {
    FieldKind kind = FieldKind::Prime;
    std::uint32_t p = 2;
    std::uint32_t k = 1;
    std::vector<std::uint32_t> modulus;  // monic degree-k polynomial, low degree first (Extension only)
};

class FieldError : public std::runtime_error {
public:
    enum class Code {
        NonPrimeP,
        ReducibleModulus,
        UnsupportedDegree,
        DivisionByZero,
        MixedFields,
        InfiniteField,
        NoCubeRoot,
        ParseError,
    };

    FieldError(Code code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
    Code code() const { return code_; }

private:
    Code code_;
};

/// An exact field element in canonical form.
///
/// Prime and Extension elements store the coefficient vector in `num`
/// (length k, low degree first, reduced mod p); `den` stays empty.
/// RationalFunction elements store a gcd-reduced fraction num/den of
/// polynomials over GF(p) with monic denominator; the zero polynomial is the
/// empty vector. Equality of canonical forms is structural equality.
struct FieldElement {
    std::vector<std::uint32_t> num;
    std::vector<std::uint32_t> den;

    friend auto operator<=>(const FieldElement&, const FieldElement&) = default;
};

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// Immutable arithmetic context for a FieldSpec. All operations are pure and
/// return canonical-form results, so a handle can be shared across threads.
class Field {
public:
    /// Validates the spec (primality, irreducibility, degree cap) and returns a handle.
    static FieldPtr make(FieldSpec spec);

    /// Parses the spec grammar `p`, `p^k`, `p^k/c_k,...,c_0` (high to low), `p(t)`.
    static FieldPtr parse_spec(std::string_view text);

    const FieldSpec& spec() const { return spec_; }
    FieldKind kind() const { return spec_.kind; }
    std::uint32_t characteristic() const { return spec_.p; }
    bool finite() const { return spec_.kind != FieldKind::RationalFunction; }
    std::uint64_t order() const;  // throws InfiniteField for GF(p)(t)
    std::string spec_string() const;

    FieldElement zero() const;
    FieldElement one() const;
    FieldElement from_int(std::int64_t n) const;
    /// The class of t (Extension, k >= 2) or the polynomial t (RationalFunction).
    FieldElement t_element() const;

    bool is_zero(const FieldElement& a) const;
    bool is_one(const FieldElement& a) const;

    FieldElement add(const FieldElement& a, const FieldElement& b) const;
    FieldElement sub(const FieldElement& a, const FieldElement& b) const;
    FieldElement mul(const FieldElement& a, const FieldElement& b) const;
    FieldElement neg(const FieldElement& a) const;
    FieldElement inv(const FieldElement& a) const;  // throws DivisionByZero
    FieldElement div(const FieldElement& a, const FieldElement& b) const;
    FieldElement pow(const FieldElement& a, std::uint64_t e) const;

    /// Deterministic enumeration of a finite field: residues ascending for
    /// Prime, coefficient vectors in lexicographic order (high coefficient
    /// most significant) for Extension. Index 0 is always zero.
    std::uint64_t element_count() const;              // throws InfiniteField
    FieldElement element_at(std::uint64_t index) const;
    std::uint64_t index_of(const FieldElement& a) const;
    std::vector<FieldElement> enumerate_elements() const;

    /// All solutions of x^2 + x + 1 = 0 with x != 1, in enumeration order.
    /// Empty in characteristic 3 and when |F| = 2 mod 3; size 2 otherwise.
    /// RationalFunction delegates to the base prime field.
    std::vector<FieldElement> primitive_cube_roots() const;

    /// True iff a = c^3 for some c in the field.
    bool is_cube(const FieldElement& a) const;

    std::string print(const FieldElement& a) const;
    FieldElement parse(std::string_view text) const;

private:
    explicit Field(FieldSpec spec) : spec_(std::move(spec)) {}

    void check(const FieldElement& a) const;  // throws MixedFields on shape mismatch

    FieldSpec spec_;
};

}  // namespace okb
