#pragma once

#include "okb/okubo.hpp"

#include <cstdint>

namespace okb {

/// Lookup-table arithmetic for a finite field of order at most 256. Element
/// values are the indices of Field::element_at, so 0 is zero and 1 is one.
/// Intended for exhaustive loops where the generic FieldElement representation
/// is too slow; conversions bridge back to the exact layer.
struct DenseField {
    explicit DenseField(const Field& f);

    std::uint32_t q = 0;
    FieldPtr handle;

    std::uint8_t add(std::uint8_t a, std::uint8_t b) const { return add_t[a * q + b]; }
    std::uint8_t sub(std::uint8_t a, std::uint8_t b) const { return sub_t[a * q + b]; }
    std::uint8_t mul(std::uint8_t a, std::uint8_t b) const { return mul_t[a * q + b]; }
    std::uint8_t neg(std::uint8_t a) const { return neg_t[a]; }
    std::uint8_t inv(std::uint8_t a) const { return inv_t[a]; }  // inv(0) stays 0, callers guard

    std::uint8_t index(const FieldElement& x) const;
    FieldElement element(std::uint8_t i) const;

private:
    std::vector<std::uint8_t> add_t, sub_t, mul_t, neg_t, inv_t;
};

using PackedVec8 = std::array<std::uint8_t, 8>;

/// The structure table and forms of an Algebra translated to DenseField
/// indices. Products expand to at most one target per basis pair, so the
/// table stores (target, coeff) with target 8 meaning zero.
struct PackedAlgebra {
    explicit PackedAlgebra(const Algebra& a);

    DenseField f;

    struct Term {
        std::uint8_t target;  // 8 = product is zero
        std::uint8_t coeff;
    };
    Term table[8][8];
    std::uint8_t gram[8][8];
    std::uint8_t alpha, beta, alphabeta;

    PackedVec8 from_exact(const Vec8& x) const;
    Vec8 to_exact(const PackedVec8& x) const;

    bool is_zero(const PackedVec8& x) const;
    PackedVec8 mul(const PackedVec8& x, const PackedVec8& y) const;
    std::uint8_t bilin(const PackedVec8& x, const PackedVec8& y) const;
    std::uint8_t qnorm(const PackedVec8& x) const;
    PackedVec8 scale(std::uint8_t c, const PackedVec8& x) const;

    /// Canonical projective representative: first nonzero coordinate scaled
    /// to one.
    PackedVec8 normalize(const PackedVec8& x) const;
};

}  // namespace okb
