#include "okb/graphs.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <functional>
#include <random>
#include <sstream>
#include <thread>

namespace okb {

namespace {

void parallel_ranges(long long n, int threads, const std::function<void(long long, long long)>& body) {
    if (threads <= 1 || n < 256) {
        body(0, n);
        return;
    }
    long long chunk = (n + threads - 1) / threads;
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) {
        long long lo = t * chunk;
        long long hi = std::min(n, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([&body, lo, hi] { body(lo, hi); });
    }
    for (auto& th : pool) th.join();
}

// In-place reduced row echelon form of a rows x 8 byte matrix; returns the
// pivot columns in ascending order.
std::vector<int> packed_rref(const DenseField& f, std::vector<PackedVec8>& m) {
    std::vector<int> pivots;
    std::size_t row = 0;
    for (int col = 0; col < 8 && row < m.size(); ++col) {
        std::size_t sel = row;
        while (sel < m.size() && m[sel][col] == 0) ++sel;
        if (sel == m.size()) continue;
        std::swap(m[row], m[sel]);
        std::uint8_t lead = m[row][col];
        if (lead != 1) {
            std::uint8_t s = f.inv(lead);
            for (int c = 0; c < 8; ++c) m[row][c] = f.mul(s, m[row][c]);
        }
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == row || m[r][col] == 0) continue;
            std::uint8_t factor = m[r][col];
            for (int c = 0; c < 8; ++c) m[r][c] = f.sub(m[r][c], f.mul(factor, m[row][c]));
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

// Kernel basis of a rows x 8 matrix, one vector per free column.
std::vector<PackedVec8> packed_kernel(const DenseField& f, std::vector<PackedVec8> m) {
    std::vector<int> pivots = packed_rref(f, m);
    std::vector<PackedVec8> basis;
    bool is_pivot[8] = {};
    for (int p : pivots) is_pivot[p] = true;
    for (int col = 0; col < 8; ++col) {
        if (is_pivot[col]) continue;
        PackedVec8 v{};
        v[col] = 1;
        for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = f.neg(m[k][col]);
        basis.push_back(v);
    }
    return basis;
}

// Matrix of y -> x*y over the packed structure table.
std::vector<PackedVec8> left_mult_rows(const PackedAlgebra& pk, const PackedVec8& x) {
    std::vector<PackedVec8> m(8, PackedVec8{});
    for (int i = 0; i < 8; ++i) {
        if (!x[i]) continue;
        for (int j = 0; j < 8; ++j) {
            const PackedAlgebra::Term& t = pk.table[i][j];
            if (t.target == 8) continue;
            m[t.target][j] = pk.f.add(m[t.target][j], pk.f.mul(x[i], t.coeff));
        }
    }
    return m;
}

// Matrix of y -> y*x.
std::vector<PackedVec8> right_mult_rows(const PackedAlgebra& pk, const PackedVec8& x) {
    std::vector<PackedVec8> m(8, PackedVec8{});
    for (int j = 0; j < 8; ++j) {
        for (int i = 0; i < 8; ++i) {
            if (!x[i]) continue;
            const PackedAlgebra::Term& t = pk.table[j][i];
            if (t.target == 8) continue;
            m[t.target][j] = pk.f.add(m[t.target][j], pk.f.mul(x[i], t.coeff));
        }
    }
    return m;
}

// Visits the canonical representative of every projective point of the span.
void for_span_points(const PackedAlgebra& pk, const std::vector<PackedVec8>& basis,
                     const std::function<void(const PackedVec8&)>& fn) {
    int d = static_cast<int>(basis.size());
    std::uint32_t q = pk.f.q;
    for (int lead = 0; lead < d; ++lead) {
        int free_count = d - lead - 1;
        std::vector<std::uint8_t> digits(free_count, 0);
        while (true) {
            PackedVec8 v = basis[lead];
            for (int k = 0; k < free_count; ++k) {
                if (!digits[k]) continue;
                for (int c = 0; c < 8; ++c)
                    v[c] = pk.f.add(v[c], pk.f.mul(digits[k], basis[lead + 1 + k][c]));
            }
            fn(pk.normalize(v));
            int k = free_count - 1;
            while (k >= 0 && digits[k] == q - 1) digits[k--] = 0;
            if (k < 0) break;
            ++digits[k];
        }
    }
}

bool proportional(const Algebra& a, const Vec8& x, const Vec8& y) {
    const Field& f = a.field();
    int lead = -1;
    for (int i = 0; i < 8; ++i)
        if (!f.is_zero(x[i])) { lead = i; break; }
    if (lead < 0) return a.is_zero_vec(y);
    if (f.is_zero(y[lead])) return false;
    FieldElement c = f.div(y[lead], x[lead]);
    return a.equal(a.scale(c, x), y);
}

}  // namespace

const char* component_kind_name(ComponentKind k) {
    switch (k) {
        case ComponentKind::Pair: return "Pair";
        case ComponentKind::Star: return "Star";
        case ComponentKind::Big: return "Big";
    }
    return "?";
}

namespace {
const Algebra& require_finite(const Algebra& a) {
    if (!a.field().finite())
        throw GraphError(GraphError::Code::InfiniteField,
                         "graph enumeration needs a finite base field");
    return a;
}
}  // namespace

OrthGraph::OrthGraph(const Algebra& a, int threads, long long exact_limit)
    : alg_(require_finite(a)), pk_(alg_), threads_(std::max(1, threads)),
      exact_limit_(exact_limit) {
    std::uint64_t q = a.field().order();

    // Canonical candidates are grouped by the position of the leading one:
    // lead l contributes q^(7-l) candidates. A linear index over the whole
    // family keeps the parallel partition deterministic.
    std::uint64_t block[8];
    std::uint64_t total = 0;
    for (int l = 0; l < 8; ++l) {
        std::uint64_t sz = 1;
        for (int k = 0; k < 7 - l; ++k) sz *= q;
        block[l] = sz;
        total += sz;
    }
    std::vector<std::vector<PackedVec8>> found(threads_);
    std::atomic<int> next_worker{0};
    parallel_ranges(static_cast<long long>(total), threads_, [&](long long lo, long long hi) {
        int slot = next_worker.fetch_add(1);
        auto& out = found[slot];
        for (long long idx = lo; idx < hi; ++idx) {
            std::uint64_t rest = static_cast<std::uint64_t>(idx);
            int lead = 0;
            while (lead < 7 && rest >= block[lead]) rest -= block[lead++];
            PackedVec8 v{};
            v[lead] = 1;
            for (int c = 7; c > lead; --c) {
                v[c] = static_cast<std::uint8_t>(rest % q);
                rest /= q;
            }
            if (pk_.qnorm(v) == 0) out.push_back(v);
        }
    });
    for (auto& part : found)
        verts_.insert(verts_.end(), part.begin(), part.end());
    std::sort(verts_.begin(), verts_.end());

    long long n = vertex_count();
    classes_.resize(n);
    adj_.resize(n);
    parallel_ranges(n, threads_, [&](long long lo, long long hi) {
        for (long long id = lo; id < hi; ++id) {
            const PackedVec8& x = verts_[id];
            PackedVec8 xx = pk_.mul(x, x);
            if (pk_.bilin(x, xx) != 0)
                classes_[id] = 0;
            else if (pk_.is_zero(xx))
                classes_[id] = 2;
            else
                classes_[id] = 1;
            if (!pk_.is_zero(xx) && pk_.normalize(xx) == x) degenerate_seen_ = true;

            std::vector<PackedVec8> rows = left_mult_rows(pk_, x);
            std::vector<PackedVec8> rrows = right_mult_rows(pk_, x);
            rows.insert(rows.end(), rrows.begin(), rrows.end());
            std::vector<PackedVec8> basis = packed_kernel(pk_.f, std::move(rows));
            std::vector<int>& nb = adj_[id];
            for_span_points(pk_, basis, [&](const PackedVec8& p) {
                if (p == x) return;
                auto it = std::lower_bound(verts_.begin(), verts_.end(), p);
                if (it == verts_.end() || *it != p)
                    throw GraphError(GraphError::Code::NotVertex,
                                     "orthogonalizer point is not a norm-zero line");
                nb.push_back(static_cast<int>(it - verts_.begin()));
            });
            std::sort(nb.begin(), nb.end());
        }
    });
}

PackedVec8 OrthGraph::canonical(const Vec8& x) const { return pk_.normalize(pk_.from_exact(x)); }

int OrthGraph::index_of(const Vec8& x) const {
    PackedVec8 p = canonical(x);
    auto it = std::lower_bound(verts_.begin(), verts_.end(), p);
    if (pk_.is_zero(p) || it == verts_.end() || *it != p)
        throw GraphError(GraphError::Code::NotVertex, "not a projective zero divisor");
    return static_cast<int>(it - verts_.begin());
}

ZeroDivisorClass OrthGraph::vertex_class(int id) const {
    switch (classes_[id]) {
        case 0: return ZeroDivisorClass::TypeA;
        case 1: return ZeroDivisorClass::TypeB;
        default: return ZeroDivisorClass::TypeC;
    }
}

std::vector<int> OrthGraph::neighbors_brute(int id) const {
    std::vector<int> out;
    const PackedVec8& x = verts_[id];
    for (long long j = 0; j < vertex_count(); ++j) {
        if (j == id) continue;
        const PackedVec8& y = verts_[j];
        if (pk_.is_zero(pk_.mul(x, y)) && pk_.is_zero(pk_.mul(y, x)))
            out.push_back(static_cast<int>(j));
    }
    return out;
}

const std::vector<ComponentReport>& OrthGraph::components() const {
    if (components_) return *components_;
    long long n = vertex_count();
    std::vector<int> comp_of(n, -1);
    std::vector<ComponentReport> comps;
    for (long long s = 0; s < n; ++s) {
        if (comp_of[s] >= 0) continue;
        int cid = static_cast<int>(comps.size());
        ComponentReport rep;
        std::deque<int> queue{static_cast<int>(s)};
        comp_of[s] = cid;
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            rep.members.push_back(v);
            for (int w : adj_[v]) {
                if (comp_of[w] >= 0) continue;
                comp_of[w] = cid;
                queue.push_back(w);
            }
        }
        std::sort(rep.members.begin(), rep.members.end());
        rep.size = static_cast<long long>(rep.members.size());
        for (int v : rep.members) {
            switch (classes_[v]) {
                case 0: ++rep.census.type_a; break;
                case 1: ++rep.census.type_b; break;
                default: ++rep.census.type_c; break;
            }
        }
        rep.degenerate = degenerate_seen_;
        bool omega = alg_.field().characteristic() != 3 &&
                     !alg_.field().primitive_cube_roots().empty();
        bool char3 = alg_.field().characteristic() == 3;
        if (rep.size == 2 && rep.census.type_a == 2 && !rep.degenerate) {
            rep.kind = ComponentKind::Pair;
        } else if (!omega && !char3) {
            rep.kind = ComponentKind::Star;
            for (int v : rep.members) {
                if (static_cast<long long>(adj_[v].size()) == rep.size - 1) {
                    rep.center = v;
                    break;
                }
            }
        } else {
            rep.kind = ComponentKind::Big;
        }

        // Local BFS; members are sorted, so ids translate by binary search.
        auto local = [&](int id) {
            return static_cast<int>(std::lower_bound(rep.members.begin(), rep.members.end(), id) -
                                    rep.members.begin());
        };
        auto eccentricity = [&](int src_local) {
            std::vector<int> dist(rep.members.size(), -1);
            std::deque<int> bfs{src_local};
            dist[src_local] = 0;
            int ecc = 0;
            while (!bfs.empty()) {
                int v = bfs.front();
                bfs.pop_front();
                for (int w : adj_[rep.members[v]]) {
                    int lw = local(w);
                    if (dist[lw] >= 0) continue;
                    dist[lw] = dist[v] + 1;
                    ecc = std::max(ecc, dist[lw]);
                    bfs.push_back(lw);
                }
            }
            return ecc;
        };
        if (rep.size <= exact_limit_) {
            std::vector<int> partial(threads_, 0);
            std::atomic<int> slot{0};
            parallel_ranges(rep.size, threads_, [&](long long lo, long long hi) {
                int me = slot.fetch_add(1);
                int best = 0;
                for (long long i = lo; i < hi; ++i) best = std::max(best, eccentricity((int)i));
                partial[me] = best;
            });
            int diam = *std::max_element(partial.begin(), partial.end());
            rep.diameter = {diam, diam, true};
        } else {
            // Certified interval: sampled eccentricities below, the structural
            // bound (5 for the big component, 2 for stars) above.
            int lower = 0;
            std::mt19937_64 rng(12345);
            for (int k = 0; k < 16; ++k) {
                int src = static_cast<int>(rng() % rep.members.size());
                lower = std::max(lower, eccentricity(src));
            }
            int upper = rep.kind == ComponentKind::Star ? 2 : 5;
            rep.diameter = {lower, upper, false};
        }
        comps.push_back(std::move(rep));
    }
    components_ = std::move(comps);
    return *components_;
}

std::vector<int> OrthGraph::bfs_distances(int src, const std::vector<int>*) const {
    std::vector<int> dist(vertex_count(), -1);
    std::deque<int> queue{src};
    dist[src] = 0;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (int w : adj_[v]) {
            if (dist[w] >= 0) continue;
            dist[w] = dist[v] + 1;
            queue.push_back(w);
        }
    }
    return dist;
}

int OrthGraph::distance(int u, int v) const { return bfs_distances(u)[v]; }

std::pair<int, long long> OrthGraph::geodesic_count(int u, int v) const {
    std::vector<int> dist(vertex_count(), -1);
    std::vector<long long> cnt(vertex_count(), 0);
    std::deque<int> queue{u};
    dist[u] = 0;
    cnt[u] = 1;
    while (!queue.empty()) {
        int x = queue.front();
        queue.pop_front();
        if (dist[v] >= 0 && dist[x] >= dist[v]) break;
        for (int w : adj_[x]) {
            if (dist[w] < 0) {
                dist[w] = dist[x] + 1;
                cnt[w] = cnt[x];
                queue.push_back(w);
            } else if (dist[w] == dist[x] + 1) {
                cnt[w] += cnt[x];
            }
        }
    }
    if (dist[v] < 0)
        throw GraphError(GraphError::Code::Disconnected, "vertices lie in different components");
    return {dist[v], cnt[v]};
}

PathCertificate OrthGraph::certify_distance(const Vec8& xin, const Vec8& yin) const {
    const Algebra& a = alg_;
    auto norm_exact = [&](const Vec8& v) { return pk_.to_exact(pk_.normalize(pk_.from_exact(v))); };
    auto orth2 = [&](const Vec8& u, const Vec8& v) {
        return a.is_zero_vec(a.mul(u, v)) && a.is_zero_vec(a.mul(v, u));
    };
    Vec8 x = norm_exact(xin);
    Vec8 y = norm_exact(yin);
    for (const Vec8* v : {&x, &y}) {
        if (a.is_zero_vec(*v) || !a.is_zero_divisor(*v) ||
            a.classify(*v) == ZeroDivisorClass::TypeA)
            throw GraphError(GraphError::Code::NotVertex,
                             "certificates need TypeB or TypeC endpoints");
    }

    PathCertificate cert;
    if (proportional(a, x, y)) {
        cert.vertices = {x};
        return cert;
    }
    if (orth2(x, y)) {
        cert.vertices = {x, y};
        return cert;
    }

    // TypeB vertices have a single neighbor, the square, so geodesics are
    // forced through it on both ends.
    std::vector<Vec8> prefix{x};
    if (a.classify(x) == ZeroDivisorClass::TypeB) prefix.push_back(norm_exact(a.mul(x, x)));
    std::vector<Vec8> suffix;
    if (a.classify(y) == ZeroDivisorClass::TypeB) suffix.push_back(norm_exact(a.mul(y, y)));
    suffix.push_back(y);
    const Vec8& xp = prefix.back();
    const Vec8& yp = suffix.front();

    std::vector<Vec8> inner;
    auto middle = [&](const Vec8& u, const Vec8& v) {
        Vec8 m = a.mul(v, u);
        if (a.is_zero_vec(m)) m = a.mul(u, v);
        return norm_exact(m);
    };
    if (proportional(a, xp, yp)) {
        // nothing between; the join vertex is shared
    } else if (orth2(xp, yp)) {
        // adjacent join
    } else if (a.field().is_zero(a.bilin(xp, yp))) {
        inner.push_back(middle(xp, yp));
    } else {
        // Distance three: pick a square-zero w in the orthogonalizer of yp
        // independent of yp. The span W of yp and w consists of square-zero
        // elements, and the bilinear-form condition singles out z in W
        // orthogonal to xp, adjacent to yp.
        Subspace orth = a.orthogonalizer(yp);
        Vec8 w = a.zero_vec();
        bool found = false;
        std::function<void(std::size_t, Vec8, bool)> walk = [&](std::size_t i, Vec8 acc,
                                                                bool nonzero) {
            if (found) return;
            if (i == orth.basis.size()) {
                if (!nonzero || proportional(a, acc, yp)) return;
                if (a.is_zero_vec(a.mul(acc, acc))) {
                    w = acc;
                    found = true;
                }
                return;
            }
            for (const FieldElement& c : a.field().enumerate_elements()) {
                walk(i + 1, a.add(acc, a.scale(c, to_vec8(orth.basis[i]))),
                     nonzero || !a.field().is_zero(c));
                if (found) return;
            }
        };
        walk(0, a.zero_vec(), false);
        if (!found)
            throw GraphError(GraphError::Code::NoZeroSquareSubspace,
                             "no square-zero direction in the orthogonalizer; the base field has "
                             "no primitive cube root of unity and characteristic is not 3");
        FieldElement c = a.field().neg(a.field().div(a.bilin(xp, w), a.bilin(xp, yp)));
        Vec8 z = norm_exact(a.add(w, a.scale(c, yp)));
        if (orth2(xp, z)) {
            inner.push_back(z);
        } else {
            inner.push_back(middle(xp, z));
            inner.push_back(z);
        }
    }

    for (const Vec8& v : prefix) cert.vertices.push_back(v);
    for (const Vec8& v : inner) cert.vertices.push_back(v);
    for (const Vec8& v : suffix) cert.vertices.push_back(v);
    // collapse a shared join vertex
    std::vector<Vec8> cleaned;
    for (const Vec8& v : cert.vertices) {
        if (!cleaned.empty() && proportional(a, cleaned.back(), v)) continue;
        cleaned.push_back(v);
    }
    cert.vertices = std::move(cleaned);
    if (!validate(cert))
        throw std::logic_error("constructed path certificate failed validation");
    return cert;
}

bool OrthGraph::validate(const PathCertificate& cert) const {
    const Algebra& a = alg_;
    if (cert.vertices.empty()) return false;
    for (const Vec8& v : cert.vertices)
        if (a.is_zero_vec(v) || !a.field().is_zero(a.qnorm(v))) return false;
    for (std::size_t i = 0; i + 1 < cert.vertices.size(); ++i) {
        const Vec8& u = cert.vertices[i];
        const Vec8& v = cert.vertices[i + 1];
        if (proportional(a, u, v)) return false;
        if (!a.is_zero_vec(a.mul(u, v)) || !a.is_zero_vec(a.mul(v, u))) return false;
    }
    return true;
}

ZdivReport OrthGraph::zdiv_digraph_check(std::uint64_t seed) const {
    ZdivReport rep;
    long long n = vertex_count();
    auto right_points = [&](const PackedVec8& x) {  // {z : x*z = 0}
        std::vector<PackedVec8> pts;
        for_span_points(pk_, packed_kernel(pk_.f, left_mult_rows(pk_, x)),
                        [&](const PackedVec8& p) { pts.push_back(p); });
        return pts;
    };
    if (n <= exact_limit_) {
        rep.exhaustive = true;
        std::size_t words = static_cast<std::size_t>((n + 63) / 64);
        std::vector<std::uint64_t> outs(static_cast<std::size_t>(n) * words, 0);
        std::vector<std::uint64_t> ins(static_cast<std::size_t>(n) * words, 0);
        parallel_ranges(n, threads_, [&](long long lo, long long hi) {
            for (long long id = lo; id < hi; ++id) {
                for_span_points(pk_, packed_kernel(pk_.f, left_mult_rows(pk_, verts_[id])),
                                [&](const PackedVec8& p) {
                                    auto it = std::lower_bound(verts_.begin(), verts_.end(), p);
                                    std::size_t z = static_cast<std::size_t>(it - verts_.begin());
                                    outs[id * words + z / 64] |= 1ull << (z % 64);
                                });
                for_span_points(pk_, packed_kernel(pk_.f, right_mult_rows(pk_, verts_[id])),
                                [&](const PackedVec8& p) {
                                    auto it = std::lower_bound(verts_.begin(), verts_.end(), p);
                                    std::size_t z = static_cast<std::size_t>(it - verts_.begin());
                                    ins[id * words + z / 64] |= 1ull << (z % 64);
                                });
            }
        });
        std::vector<std::uint8_t> fail(threads_, 0), far(threads_, 0);
        std::atomic<int> slot{0};
        parallel_ranges(n, threads_, [&](long long lo, long long hi) {
            int me = slot.fetch_add(1);
            for (long long x = lo; x < hi; ++x) {
                const std::uint64_t* ox = &outs[x * words];
                for (long long y = 0; y < n; ++y) {
                    if (x == y) continue;
                    if (ox[static_cast<std::size_t>(y) / 64] >> (y % 64) & 1) continue;  // x*y = 0
                    far[me] = 1;
                    const std::uint64_t* iy = &ins[y * words];
                    bool hit = false;
                    for (std::size_t wd = 0; wd < words; ++wd) {
                        if (ox[wd] & iy[wd]) {
                            hit = true;
                            break;
                        }
                    }
                    if (!hit) fail[me] = 1;
                }
            }
        });
        bool failed = std::any_of(fail.begin(), fail.end(), [](std::uint8_t b) { return b != 0; });
        bool has_far = std::any_of(far.begin(), far.end(), [](std::uint8_t b) { return b != 0; });
        rep.strongly_connected = !failed;
        rep.directed_diameter = failed ? -1 : (has_far ? 2 : 1);
    } else {
        rep.exhaustive = false;
        std::mt19937_64 rng(seed);
        bool failed = false, has_far = false;
        for (int k = 0; k < 100000 && !failed; ++k) {
            long long x = static_cast<long long>(rng() % static_cast<std::uint64_t>(n));
            long long y = static_cast<long long>(rng() % static_cast<std::uint64_t>(n));
            if (x == y) continue;
            if (pk_.is_zero(pk_.mul(verts_[x], verts_[y]))) continue;
            has_far = true;
            bool hit = false;
            for (const PackedVec8& z : right_points(verts_[x])) {
                if (pk_.is_zero(pk_.mul(z, verts_[y]))) {
                    hit = true;
                    break;
                }
            }
            if (!hit) failed = true;
        }
        rep.strongly_connected = !failed;
        rep.directed_diameter = failed ? -1 : (has_far ? 2 : 1);
    }
    return rep;
}

TrichotomyReport OrthGraph::geodesic_trichotomy(std::uint64_t seed) const {
    TrichotomyReport rep;
    bool omega = alg_.field().characteristic() != 3 &&
                 !alg_.field().primitive_cube_roots().empty();
    for (const ComponentReport& comp : components()) {
        std::vector<int> sources;
        if (comp.size <= exact_limit_) {
            sources.assign(comp.members.begin(), comp.members.end());
        } else {
            rep.sampled = true;
            std::mt19937_64 rng(seed);
            for (int k = 0; k < 40; ++k)
                sources.push_back(comp.members[rng() % comp.members.size()]);
        }
        auto local = [&](int id) {
            return static_cast<int>(std::lower_bound(comp.members.begin(), comp.members.end(), id) -
                                    comp.members.begin());
        };
        for (int src : sources) {
            std::vector<int> dist(comp.members.size(), -1);
            std::vector<long long> cnt(comp.members.size(), 0);
            std::deque<int> queue{local(src)};
            dist[local(src)] = 0;
            cnt[local(src)] = 1;
            while (!queue.empty()) {
                int v = queue.front();
                queue.pop_front();
                for (int w : adj_[comp.members[v]]) {
                    int lw = local(w);
                    if (dist[lw] < 0) {
                        dist[lw] = dist[v] + 1;
                        cnt[lw] = cnt[v];
                        queue.push_back(lw);
                    } else if (dist[lw] == dist[v] + 1) {
                        cnt[lw] += cnt[v];
                    }
                }
            }
            for (std::size_t t = 0; t < comp.members.size(); ++t) {
                if (dist[t] <= 0) continue;
                int id = comp.members[t];
                int c_count = (classes_[src] == 2 ? 1 : 0) + (classes_[id] == 2 ? 1 : 0);
                long long expected = 1;
                if (omega && ((dist[t] == 3 && c_count == 2) || (dist[t] == 4 && c_count == 1) ||
                              dist[t] == 5))
                    expected = 2;
                if (cnt[t] != expected) {
                    rep.pass = false;
                    std::ostringstream os;
                    os << "d(" << alg_.print(this->rep(src)) << ", " << alg_.print(this->rep(id))
                       << ") = " << dist[t] << " with " << cnt[t] << " geodesics, expected "
                       << expected;
                    rep.counterexample = os.str();
                    return rep;
                }
            }
        }
    }
    return rep;
}

std::string OrthGraph::export_dot(const ComponentReport& c) const {
    static const char* tags[] = {"TypeA", "TypeB", "TypeC"};
    std::ostringstream os;
    os << "graph component {\n";
    for (int v : c.members) {
        os << "  v" << v << " [label=\"" << alg_.print(rep(v)) << "\\n" << tags[classes_[v]]
           << "\"";
        if (v == c.center) os << " shape=doublecircle";
        os << "];\n";
    }
    for (int v : c.members)
        for (int w : adj_[v])
            if (v < w) os << "  v" << v << " -- v" << w << ";\n";
    os << "}\n";
    return os.str();
}

std::string OrthGraph::export_dot_zdiv() const {
    if (vertex_count() > exact_limit_)
        throw GraphError(GraphError::Code::TooLarge,
                         "directed export is limited to the exact-mode vertex budget");
    static const char* tags[] = {"TypeA", "TypeB", "TypeC"};
    std::ostringstream os;
    os << "digraph zdiv {\n";
    for (long long v = 0; v < vertex_count(); ++v)
        os << "  v" << v << " [label=\"" << alg_.print(rep(static_cast<int>(v))) << "\\n"
           << tags[classes_[v]] << "\"];\n";
    for (long long x = 0; x < vertex_count(); ++x) {
        std::vector<int> targets;
        for_span_points(pk_, packed_kernel(pk_.f, left_mult_rows(pk_, verts_[x])),
                        [&](const PackedVec8& p) {
                            auto it = std::lower_bound(verts_.begin(), verts_.end(), p);
                            int z = static_cast<int>(it - verts_.begin());
                            if (z != x) targets.push_back(z);
                        });
        std::sort(targets.begin(), targets.end());
        for (int z : targets) os << "  v" << x << " -> v" << z << ";\n";
    }
    os << "}\n";
    return os.str();
}

nlohmann::ordered_json export_report(const OrthGraph& g, std::uint64_t seed) {
    const Algebra& a = g.algebra();
    nlohmann::ordered_json doc;
    doc["field"] = a.field().spec_string();
    doc["alpha"] = a.field().print(a.alpha());
    doc["beta"] = a.field().print(a.beta());
    doc["vertex_count"] = g.vertex_count();
    doc["components"] = nlohmann::ordered_json::array();
    for (const ComponentReport& c : g.components()) {
        nlohmann::ordered_json jc;
        jc["kind"] = component_kind_name(c.kind);
        jc["size"] = c.size;
        if (c.diameter.exact) {
            jc["diameter"] = c.diameter.lower;
        } else {
            jc["diameter"] = {{"lower", c.diameter.lower},
                              {"upper", c.diameter.upper},
                              {"certified", true}};
        }
        if (c.center >= 0) jc["center"] = a.print(g.rep(c.center));
        jc["class_census"] = {{"TypeA", c.census.type_a},
                              {"TypeB", c.census.type_b},
                              {"TypeC", c.census.type_c}};
        doc["components"].push_back(std::move(jc));
    }
    doc["geodesic_trichotomy"] = g.geodesic_trichotomy(seed).pass ? "pass" : "fail";
    ZdivReport z = g.zdiv_digraph_check(seed);
    doc["zdiv"] = {{"strongly_connected", z.strongly_connected},
                   {"directed_diameter", z.directed_diameter}};
    return doc;
}

}  // namespace okb
