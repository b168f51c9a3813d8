#pragma once

#include "okb/field.hpp"

#include <array>
#include <vector>

namespace okb {

/// Coefficient vector in the fixed global basis order
/// {z10, z20, z01, z02, z11, z22, z12, z21}.
using Vec8 = std::array<FieldElement, 8>;

class LinalgError : public std::runtime_error {
public:
    enum class Code { DimensionMismatch };
    LinalgError(Code code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
    Code code() const { return code_; }

private:
    Code code_;
};

/// Dense rectangular matrix over a field, row major, entries canonical.
struct MatrixFE {
    int rows = 0;
    int cols = 0;
    std::vector<FieldElement> entries;

    MatrixFE() = default;
    MatrixFE(const Field& f, int r, int c);

    FieldElement& at(int r, int c) { return entries[static_cast<std::size_t>(r) * cols + c]; }
    const FieldElement& at(int r, int c) const {
        return entries[static_cast<std::size_t>(r) * cols + c];
    }
};

/// A linear subspace, stored as a reduced row-echelon basis with distinct
/// pivots. Membership and subspace equality are decided from this form.
struct Subspace {
    int ambient = 0;
    std::vector<std::vector<FieldElement>> basis;  // RREF rows

    int dim() const { return static_cast<int>(basis.size()); }
    friend bool operator==(const Subspace&, const Subspace&) = default;
};

std::vector<FieldElement> to_vec(const Vec8& v);
Vec8 to_vec8(const std::vector<FieldElement>& v);

/// In-place reduced row echelon form; returns the pivot column of each
/// surviving row. First-nonzero pivoting; arithmetic is exact.
std::vector<int> rref(const Field& f, MatrixFE& m);

int rank(const Field& f, MatrixFE m);

/// Echelon basis of {v : m v = 0}; dim = cols - rank(m).
Subspace kernel(const Field& f, const MatrixFE& m);

Subspace span(const Field& f, const std::vector<std::vector<FieldElement>>& vectors);
Subspace span8(const Field& f, const std::vector<Vec8>& vectors);

/// Sum of subspaces (echelonized union of bases).
Subspace join(const Field& f, const Subspace& a, const Subspace& b);

/// Intersection, computed as the kernel of the stacked dual constraints.
Subspace intersect(const Field& f, const Subspace& a, const Subspace& b);

bool contains(const Field& f, const Subspace& s, const std::vector<FieldElement>& v);
bool contains8(const Field& f, const Subspace& s, const Vec8& v);

/// Kernel of the single functional a -> x^T gram a; dim 7 for nonzero x when
/// the form is nondegenerate.
Subspace perp_of_vector(const Field& f, const MatrixFE& gram, const Vec8& x);

/// Matrix-vector product.
std::vector<FieldElement> apply(const Field& f, const MatrixFE& m,
                                const std::vector<FieldElement>& v);

}  // namespace okb
