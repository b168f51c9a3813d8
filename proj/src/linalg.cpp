#include "okb/linalg.hpp"

#include <algorithm>

namespace okb {

MatrixFE::MatrixFE(const Field& f, int r, int c) : rows(r), cols(c) {
    entries.assign(static_cast<std::size_t>(r) * c, f.zero());
}

std::vector<FieldElement> to_vec(const Vec8& v) { return {v.begin(), v.end()}; }

Vec8 to_vec8(const std::vector<FieldElement>& v) {
    Vec8 out;
    std::copy_n(v.begin(), 8, out.begin());
    return out;
}

std::vector<int> rref(const Field& f, MatrixFE& m) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols && row < m.rows; ++col) {
        int pivot = -1;
        for (int r = row; r < m.rows; ++r) {
            if (!f.is_zero(m.at(r, col))) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) continue;
        for (int c = 0; c < m.cols; ++c) std::swap(m.at(row, c), m.at(pivot, c));
        FieldElement scale = f.inv(m.at(row, col));
        for (int c = col; c < m.cols; ++c) m.at(row, c) = f.mul(scale, m.at(row, c));
        for (int r = 0; r < m.rows; ++r) {
            if (r == row || f.is_zero(m.at(r, col))) continue;
            FieldElement factor = m.at(r, col);
            for (int c = col; c < m.cols; ++c)
                m.at(r, c) = f.sub(m.at(r, c), f.mul(factor, m.at(row, c)));
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

int rank(const Field& f, MatrixFE m) { return static_cast<int>(rref(f, m).size()); }

Subspace kernel(const Field& f, const MatrixFE& m) {
    MatrixFE r = m;
    std::vector<int> pivots = rref(f, r);
    std::vector<bool> is_pivot(m.cols, false);
    for (int p : pivots) is_pivot[p] = true;

    Subspace out;
    out.ambient = m.cols;
    for (int free = 0; free < m.cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<FieldElement> v(m.cols, f.zero());
        v[free] = f.one();
        for (std::size_t i = 0; i < pivots.size(); ++i)
            v[pivots[i]] = f.neg(r.at(static_cast<int>(i), free));
        out.basis.push_back(std::move(v));
    }
    // Free columns ascending with unit free coordinates already gives RREF
    // after sorting rows by pivot position.
    std::sort(out.basis.begin(), out.basis.end(), [&](const auto& a, const auto& b) {
        auto lead = [&](const auto& v) {
            for (int i = 0; i < out.ambient; ++i)
                if (!f.is_zero(v[i])) return i;
            return out.ambient;
        };
        return lead(a) < lead(b);
    });
    // Normalize to reduced form.
    MatrixFE b(f, static_cast<int>(out.basis.size()), m.cols);
    for (int i = 0; i < b.rows; ++i)
        for (int c = 0; c < b.cols; ++c) b.at(i, c) = out.basis[i][c];
    rref(f, b);
    for (int i = 0; i < b.rows; ++i)
        for (int c = 0; c < b.cols; ++c) out.basis[i][c] = b.at(i, c);
    return out;
}

Subspace span(const Field& f, const std::vector<std::vector<FieldElement>>& vectors) {
    Subspace out;
    if (vectors.empty()) return out;
    out.ambient = static_cast<int>(vectors[0].size());
    MatrixFE m(f, static_cast<int>(vectors.size()), out.ambient);
    for (int r = 0; r < m.rows; ++r) {
        if (static_cast<int>(vectors[r].size()) != out.ambient)
            throw LinalgError(LinalgError::Code::DimensionMismatch, "ragged span input");
        for (int c = 0; c < m.cols; ++c) m.at(r, c) = vectors[r][c];
    }
    std::vector<int> pivots = rref(f, m);
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        std::vector<FieldElement> v(out.ambient, f.zero());
        for (int c = 0; c < m.cols; ++c) v[c] = m.at(static_cast<int>(i), c);
        out.basis.push_back(std::move(v));
    }
    return out;
}

Subspace span8(const Field& f, const std::vector<Vec8>& vectors) {
    std::vector<std::vector<FieldElement>> vs;
    vs.reserve(vectors.size());
    for (const auto& v : vectors) vs.push_back(to_vec(v));
    Subspace s = span(f, vs);
    s.ambient = 8;
    return s;
}

Subspace join(const Field& f, const Subspace& a, const Subspace& b) {
    if (a.ambient != b.ambient && a.dim() && b.dim())
        throw LinalgError(LinalgError::Code::DimensionMismatch, "ambient mismatch in join");
    std::vector<std::vector<FieldElement>> vs = a.basis;
    vs.insert(vs.end(), b.basis.begin(), b.basis.end());
    Subspace s = span(f, vs);
    s.ambient = std::max(a.ambient, b.ambient);
    return s;
}

namespace {

// Annihilator of s under the standard dot pairing: {w : <v, w> = 0 for v in s}.
Subspace annihilator(const Field& f, const Subspace& s, int ambient) {
    MatrixFE m(f, s.dim(), ambient);
    for (int r = 0; r < m.rows; ++r)
        for (int c = 0; c < m.cols; ++c) m.at(r, c) = s.basis[r][c];
    Subspace k = kernel(f, m);
    if (m.rows == 0) {
        k.ambient = ambient;
    }
    return k;
}

}  // namespace

Subspace intersect(const Field& f, const Subspace& a, const Subspace& b) {
    if (a.ambient != b.ambient)
        throw LinalgError(LinalgError::Code::DimensionMismatch, "ambient mismatch in intersect");
    int n = a.ambient;
    Subspace da = annihilator(f, a, n);
    Subspace db = annihilator(f, b, n);
    MatrixFE stacked(f, da.dim() + db.dim(), n);
    for (int r = 0; r < da.dim(); ++r)
        for (int c = 0; c < n; ++c) stacked.at(r, c) = da.basis[r][c];
    for (int r = 0; r < db.dim(); ++r)
        for (int c = 0; c < n; ++c) stacked.at(da.dim() + r, c) = db.basis[r][c];
    return kernel(f, stacked);
}

bool contains(const Field& f, const Subspace& s, const std::vector<FieldElement>& v) {
    if (static_cast<int>(v.size()) != s.ambient && s.dim() > 0) {
        if (static_cast<int>(v.size()) != s.ambient)
            throw LinalgError(LinalgError::Code::DimensionMismatch, "vector/ambient mismatch");
    }
    // Reduce v against the echelon basis and test for zero remainder.
    std::vector<FieldElement> rem = v;
    for (const auto& row : s.basis) {
        int lead = -1;
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (!f.is_zero(row[i])) {
                lead = static_cast<int>(i);
                break;
            }
        }
        if (lead < 0) continue;
        if (f.is_zero(rem[lead])) continue;
        FieldElement factor = f.div(rem[lead], row[lead]);
        for (std::size_t i = 0; i < rem.size(); ++i)
            rem[i] = f.sub(rem[i], f.mul(factor, row[i]));
    }
    return std::all_of(rem.begin(), rem.end(), [&](const auto& x) { return f.is_zero(x); });
}

bool contains8(const Field& f, const Subspace& s, const Vec8& v) {
    return contains(f, s, to_vec(v));
}

Subspace perp_of_vector(const Field& f, const MatrixFE& gram, const Vec8& x) {
    MatrixFE m(f, 1, 8);
    for (int c = 0; c < 8; ++c) {
        FieldElement s = f.zero();
        for (int r = 0; r < 8; ++r) s = f.add(s, f.mul(x[r], gram.at(r, c)));
        m.at(0, c) = s;
    }
    return kernel(f, m);
}

std::vector<FieldElement> apply(const Field& f, const MatrixFE& m,
                                const std::vector<FieldElement>& v) {
    if (static_cast<int>(v.size()) != m.cols)
        throw LinalgError(LinalgError::Code::DimensionMismatch, "matrix/vector mismatch");
    std::vector<FieldElement> out(m.rows, f.zero());
    for (int r = 0; r < m.rows; ++r)
        for (int c = 0; c < m.cols; ++c)
            out[r] = f.add(out[r], f.mul(m.at(r, c), v[c]));
    return out;
}

}  // namespace okb
