#pragma once

#include "okb/packed.hpp"

#include <json.hpp>

#include <atomic>
#include <optional>

namespace okb {

class GraphError : public std::runtime_error {
public:
    enum class Code {
        InfiniteField,
        TooLarge,
        Disconnected,
        NoZeroSquareSubspace,
        NotVertex,
    };

    GraphError(Code code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
    Code code() const { return code_; }

private:
    Code code_;
};

struct ClassCensus {
    long long type_a = 0;
    long long type_b = 0;
    long long type_c = 0;
};

enum class ComponentKind { Pair, Star, Big };

/// Exact when lower == upper and exact is set; otherwise a certified interval.
struct DiameterResult {
    int lower = 0;
    int upper = 0;
    bool exact = true;
};

struct ComponentReport {
    ComponentKind kind = ComponentKind::Pair;
    long long size = 0;
    DiameterResult diameter;
    int center = -1;  // Star components: vertex id of the internal node
    ClassCensus census;
    std::vector<int> members;  // vertex ids, ascending
    bool degenerate = false;   // set if a squaring fixed point was seen (a bug signal)
};

/// A walk witnessing an upper bound on a distance; consecutive entries
/// multiply to zero both ways.
struct PathCertificate {
    std::vector<Vec8> vertices;
};

struct ZdivReport {
    bool strongly_connected = false;
    int directed_diameter = 0;
    bool exhaustive = true;  // false once the pair scan falls back to sampling
};

struct TrichotomyReport {
    bool pass = true;
    bool sampled = false;
    std::string counterexample;
};

/// The orthogonality graph on projective zero divisors of a finite-field
/// algebra: vertices are canonical projective representatives in ascending
/// lexicographic order, adjacency [x] ~ [y] iff x*y = y*x = 0. Immutable
/// after construction apart from lazily cached components.
class OrthGraph {
public:
    explicit OrthGraph(const Algebra& a, int threads = 1, long long exact_limit = 10000);

    const Algebra& algebra() const { return alg_; }
    const PackedAlgebra& packed() const { return pk_; }
    int threads() const { return threads_; }

    long long vertex_count() const { return static_cast<long long>(verts_.size()); }
    const std::vector<PackedVec8>& vertex_reps() const { return verts_; }
    Vec8 rep(int id) const { return pk_.to_exact(verts_[id]); }
    /// Canonicalizes x and locates it; throws NotVertex for non-vertices.
    int index_of(const Vec8& x) const;
    ZeroDivisorClass vertex_class(int id) const;

    /// Adjacency from the orthogonalizer kernel of the representative.
    const std::vector<int>& neighbors(int id) const { return adj_[id]; }
    /// Quadratic-scan oracle for cross-checking the kernel route.
    std::vector<int> neighbors_brute(int id) const;

    const std::vector<ComponentReport>& components() const;

    /// BFS distance; -1 when disconnected.
    int distance(int u, int v) const;
    /// Distances from one source to every vertex; -1 outside the component.
    std::vector<int> distances_from(int src) const { return bfs_distances(src); }
    /// Exact distance plus the number of shortest paths.
    std::pair<int, long long> geodesic_count(int u, int v) const;

    /// Constructs a path between the classes of x and y following the
    /// structural recipes: TypeB endpoints step through their squares, and
    /// square-zero pairs route through product middles or a square-zero
    /// two-dimensional subspace of the orthogonalizer.
    PathCertificate certify_distance(const Vec8& x, const Vec8& y) const;
    bool validate(const PathCertificate& cert) const;

    /// Directed graph check: [x] -> [y] iff x*y = 0. Verifies every ordered
    /// pair is at directed distance at most 2 and that distance 2 occurs.
    ZdivReport zdiv_digraph_check(std::uint64_t seed = 0) const;

    /// Shortest-path count law: in the split omega case counts are 1 or 2
    /// with an exact trichotomy on (distance, endpoint classes); otherwise
    /// all shortest paths are unique.
    TrichotomyReport geodesic_trichotomy(std::uint64_t seed = 0) const;

    std::string export_dot(const ComponentReport& c) const;
    /// Directed graph on all vertices, [x] -> [y] iff x*y = 0; throws
    /// TooLarge above the exact limit.
    std::string export_dot_zdiv() const;

private:
    PackedVec8 canonical(const Vec8& x) const;
    std::vector<PackedVec8> orthogonalizer_points(int id) const;
    std::vector<int> bfs_distances(int src, const std::vector<int>* within = nullptr) const;

    Algebra alg_;
    PackedAlgebra pk_;
    int threads_;
    long long exact_limit_;
    std::vector<PackedVec8> verts_;
    std::vector<std::vector<int>> adj_;
    std::vector<std::uint8_t> classes_;  // 0 = TypeA, 1 = TypeB, 2 = TypeC
    mutable std::optional<std::vector<ComponentReport>> components_;
    std::atomic<bool> degenerate_seen_{false};
};

/// Structured summary with stable key order; schema:
/// {field, alpha, beta, vertex_count, components, geodesic_trichotomy, zdiv}.
nlohmann::ordered_json export_report(const OrthGraph& g, std::uint64_t seed = 0);

const char* component_kind_name(ComponentKind k);

}  // namespace okb
