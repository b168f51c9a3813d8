#include "okb/packed.hpp"

namespace okb {

DenseField::DenseField(const Field& f) {
    if (!f.finite() || f.order() > 256)
        throw FieldError(FieldError::Code::InfiniteField,
                         "dense tables need a finite field of order at most 256");
    q = static_cast<std::uint32_t>(f.order());
    handle = Field::make(f.spec());
    std::vector<FieldElement> elems = f.enumerate_elements();
    add_t.resize(q * q);
    sub_t.resize(q * q);
    mul_t.resize(q * q);
    neg_t.resize(q);
    inv_t.resize(q, 0);
    for (std::uint32_t a = 0; a < q; ++a) {
        neg_t[a] = static_cast<std::uint8_t>(f.index_of(f.neg(elems[a])));
        if (a != 0) inv_t[a] = static_cast<std::uint8_t>(f.index_of(f.inv(elems[a])));
        for (std::uint32_t b = 0; b < q; ++b) {
            add_t[a * q + b] = static_cast<std::uint8_t>(f.index_of(f.add(elems[a], elems[b])));
            sub_t[a * q + b] = static_cast<std::uint8_t>(f.index_of(f.sub(elems[a], elems[b])));
            mul_t[a * q + b] = static_cast<std::uint8_t>(f.index_of(f.mul(elems[a], elems[b])));
        }
    }
}

std::uint8_t DenseField::index(const FieldElement& x) const {
    return static_cast<std::uint8_t>(handle->index_of(x));
}

FieldElement DenseField::element(std::uint8_t i) const { return handle->element_at(i); }

PackedAlgebra::PackedAlgebra(const Algebra& a) : f(a.field()) {
    const Field& field = a.field();
    alpha = f.index(a.alpha());
    beta = f.index(a.beta());
    alphabeta = f.mul(alpha, beta);
    for (int i = 0; i < 8; ++i) {
        for (int j = 0; j < 8; ++j) {
            const Vec8& prod = a.basis_product(i, j);
            table[i][j] = {8, 0};
            for (int k = 0; k < 8; ++k) {
                if (!field.is_zero(prod[k])) {
                    table[i][j] = {static_cast<std::uint8_t>(k), f.index(prod[k])};
                    break;
                }
            }
            gram[i][j] = f.index(a.gram().at(i, j));
        }
    }
}

PackedVec8 PackedAlgebra::from_exact(const Vec8& x) const {
    PackedVec8 out;
    for (int i = 0; i < 8; ++i) out[i] = f.index(x[i]);
    return out;
}

Vec8 PackedAlgebra::to_exact(const PackedVec8& x) const {
    Vec8 out;
    for (int i = 0; i < 8; ++i) out[i] = f.element(x[i]);
    return out;
}

bool PackedAlgebra::is_zero(const PackedVec8& x) const {
    for (auto c : x)
        if (c) return false;
    return true;
}

PackedVec8 PackedAlgebra::mul(const PackedVec8& x, const PackedVec8& y) const {
    PackedVec8 out{};
    for (int i = 0; i < 8; ++i) {
        if (!x[i]) continue;
        for (int j = 0; j < 8; ++j) {
            if (!y[j]) continue;
            const Term& t = table[i][j];
            if (t.target == 8) continue;
            out[t.target] = f.add(out[t.target], f.mul(f.mul(x[i], y[j]), t.coeff));
        }
    }
    return out;
}

std::uint8_t PackedAlgebra::bilin(const PackedVec8& x, const PackedVec8& y) const {
    // only the four hyperbolic pairs contribute
    std::uint8_t out = f.mul(alpha, f.add(f.mul(x[0], y[1]), f.mul(x[1], y[0])));
    out = f.add(out, f.mul(beta, f.add(f.mul(x[2], y[3]), f.mul(x[3], y[2]))));
    std::uint8_t rest = f.add(f.add(f.mul(x[4], y[5]), f.mul(x[5], y[4])),
                              f.add(f.mul(x[6], y[7]), f.mul(x[7], y[6])));
    return f.add(out, f.mul(alphabeta, rest));
}

std::uint8_t PackedAlgebra::qnorm(const PackedVec8& x) const {
    std::uint8_t out = f.mul(alpha, f.mul(x[0], x[1]));
    out = f.add(out, f.mul(beta, f.mul(x[2], x[3])));
    return f.add(out, f.mul(alphabeta, f.add(f.mul(x[4], x[5]), f.mul(x[6], x[7]))));
}

PackedVec8 PackedAlgebra::scale(std::uint8_t c, const PackedVec8& x) const {
    PackedVec8 out;
    for (int i = 0; i < 8; ++i) out[i] = f.mul(c, x[i]);
    return out;
}

PackedVec8 PackedAlgebra::normalize(const PackedVec8& x) const {
    for (int i = 0; i < 8; ++i) {
        if (x[i]) {
            if (x[i] == 1) return x;
            return scale(f.inv(x[i]), x);
        }
    }
    return x;
}

}  // namespace okb
