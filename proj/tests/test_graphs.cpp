#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "okb/constructions.hpp"
#include "okb/graphs.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

using namespace okb;

namespace {

Algebra make_alg(const char* field, std::int64_t a = 1, std::int64_t b = 1) {
    auto f = Field::parse_spec(field);
    return Algebra(f, f->from_int(a), f->from_int(b));
}

Vec8 combo(const Algebra& alg, std::initializer_list<std::pair<int, int>> terms) {
    Vec8 v = alg.zero_vec();
    for (auto [idx, c] : terms) v[idx] = alg.field().from_int(c);
    return v;
}

constexpr int Z10 = 0, Z20 = 1, Z01 = 2, Z02 = 3, Z11 = 4, Z22 = 5, Z12 = 6, Z21 = 7;

const OrthGraph& graph_for(const char* field) {
    static std::map<std::string, std::unique_ptr<OrthGraph>> cache;
    auto& slot = cache[field];
    if (!slot) slot = std::make_unique<OrthGraph>(make_alg(field), 4);
    return *slot;
}

}  // namespace

TEST_CASE("projective vertex counts match the isotropic-line formula") {
    // (q^7 + q^4 - q^3 - 1) / (q - 1) lines
    CHECK(graph_for("2").vertex_count() == 135);
    CHECK(graph_for("3").vertex_count() == 1120);
    CHECK(graph_for("2^2").vertex_count() == 5525);
    CHECK(graph_for("5").vertex_count() == 19656);
}

TEST_CASE("vertices are canonical, sorted and norm-zero") {
    const OrthGraph& g = graph_for("3");
    const Algebra& a = g.algebra();
    const auto& reps = g.vertex_reps();
    for (std::size_t i = 0; i + 1 < reps.size(); ++i) CHECK(reps[i] < reps[i + 1]);
    for (std::size_t i = 0; i < reps.size(); i += 97) {
        Vec8 v = g.rep(static_cast<int>(i));
        CHECK(a.field().is_zero(a.qnorm(v)));
        int lead = -1;
        for (int c = 0; c < 8 && lead < 0; ++c)
            if (!a.field().is_zero(v[c])) lead = c;
        CHECK(a.field().is_one(v[lead]));
    }
}

TEST_CASE("basis vertex neighborhoods") {
    for (const char* fs : {"2", "3", "2^2", "5"}) {
        const OrthGraph& g = graph_for(fs);
        const Algebra& a = g.algebra();
        int z10 = g.index_of(a.basis_vec(Z10));
        int z20 = g.index_of(a.basis_vec(Z20));
        CHECK(g.neighbors(z10) == std::vector<int>{z20});
        CHECK(g.vertex_class(z10) == ZeroDivisorClass::TypeA);
    }
    // a square-zero vertex over GF(2) has q^2 + q = 6 neighbors
    const OrthGraph& g2 = graph_for("2");
    bool seen = false;
    for (int id = 0; id < g2.vertex_count(); ++id) {
        if (g2.vertex_class(id) != ZeroDivisorClass::TypeC) continue;
        CHECK(g2.neighbors(id).size() == 6);
        seen = true;
    }
    CHECK(seen);
}

TEST_CASE("kernel neighbors equal brute-force neighbors") {
    for (const char* fs : {"2", "3"}) {
        const OrthGraph& g = graph_for(fs);
        for (int id = 0; id < g.vertex_count(); ++id)
            REQUIRE(g.neighbors(id) == g.neighbors_brute(id));
    }
    const OrthGraph& g4 = graph_for("2^2");
    std::mt19937_64 rng(7);
    for (int k = 0; k < 500; ++k) {
        int id = static_cast<int>(rng() % g4.vertex_count());
        REQUIRE(g4.neighbors(id) == g4.neighbors_brute(id));
    }
}

TEST_CASE("component census: pairs and stars without a cube root of unity") {
    for (const char* fs : {"2", "5"}) {
        const OrthGraph& g = graph_for(fs);
        const Algebra& a = g.algebra();
        std::uint64_t q = a.field().order();
        long long covered = 0;
        for (const ComponentReport& c : g.components()) {
            CHECK_FALSE(c.degenerate);
            covered += c.size;
            if (c.kind == ComponentKind::Pair) {
                CHECK(c.size == 2);
                CHECK(c.diameter.exact);
                CHECK(c.diameter.lower == 1);
                CHECK(c.census.type_a == 2);
                // the two members swap under squaring
                Vec8 x = g.rep(c.members[0]);
                CHECK(g.index_of(a.mul(x, x)) == c.members[1]);
                Vec8 y = g.rep(c.members[1]);
                CHECK(g.index_of(a.mul(y, y)) == c.members[0]);
            } else {
                REQUIRE(c.kind == ComponentKind::Star);
                CHECK(c.size == static_cast<long long>(q * q + q + 1));
                CHECK(c.diameter.exact);
                CHECK(c.diameter.lower == 2);
                REQUIRE(c.center >= 0);
                CHECK(g.vertex_class(c.center) == ZeroDivisorClass::TypeC);
                CHECK(g.neighbors(c.center).size() == c.size - 1);
                for (int v : c.members)
                    if (v != c.center) CHECK(g.neighbors(v).size() == 1);
            }
        }
        CHECK(covered == g.vertex_count());
    }
}

TEST_CASE("component census: one big component when omega is present or char is 3") {
    for (const char* fs : {"3", "2^2"}) {
        const OrthGraph& g = graph_for(fs);
        int big = 0;
        long long covered = 0;
        for (const ComponentReport& c : g.components()) {
            CHECK_FALSE(c.degenerate);
            covered += c.size;
            if (c.kind == ComponentKind::Big) {
                ++big;
                CHECK(c.census.type_a == 0);
                CHECK(c.diameter.exact);
                CHECK(c.diameter.lower == 5);
            } else {
                CHECK(c.kind == ComponentKind::Pair);
                CHECK(c.census.type_a == 2);
            }
        }
        CHECK(big == 1);
        CHECK(covered == g.vertex_count());
    }
    // GF(4): the big component is exactly the 1365 nilpotent lines of the
    // matrix model
    for (const ComponentReport& c : graph_for("2^2").components())
        if (c.kind == ComponentKind::Big) CHECK(c.size == 1365);
}

TEST_CASE("char-3 big component contains four singular-type lines") {
    const OrthGraph& g = graph_for("3");
    const Algebra& a = g.algebra();
    for (const ComponentReport& c : g.components()) {
        if (c.kind != ComponentKind::Big) continue;
        long long singular = 0;
        for (int v : c.members) {
            if (g.vertex_class(v) != ZeroDivisorClass::TypeC) continue;
            if (a.char3_subclass(g.rep(v)) == Char3Subclass::SingularType) ++singular;
        }
        CHECK(singular == 4);
    }
}

TEST_CASE("distance at most two between square-zero vertices iff the form vanishes") {
    for (const char* fs : {"3", "2^2"}) {
        const OrthGraph& g = graph_for(fs);
        const PackedAlgebra& pk = g.packed();
        std::vector<int> type_c;
        for (int id = 0; id < g.vertex_count(); ++id)
            if (g.vertex_class(id) == ZeroDivisorClass::TypeC) type_c.push_back(id);
        for (int u : type_c) {
            std::vector<int> dist = g.distances_from(u);
            for (int v : type_c) {
                if (u == v) continue;
                bool close = dist[v] >= 0 && dist[v] <= 2;
                bool orth = pk.bilin(g.vertex_reps()[u], g.vertex_reps()[v]) == 0;
                REQUIRE(close == orth);
            }
        }
    }
}

TEST_CASE("geodesic counts: adjacent pairs and the two-path law") {
    const OrthGraph& g = graph_for("2^2");
    int z10 = g.index_of(g.algebra().basis_vec(Z10));
    int z20 = g.index_of(g.algebra().basis_vec(Z20));
    CHECK(g.geodesic_count(z10, z20) == std::pair<int, long long>{1, 1});

    // a square-zero pair at distance 3 has exactly two geodesics
    bool found = false;
    for (int u = 0; u < g.vertex_count() && !found; ++u) {
        if (g.vertex_class(u) != ZeroDivisorClass::TypeC) continue;
        std::vector<int> dist = g.distances_from(u);
        for (int v = 0; v < g.vertex_count(); ++v) {
            if (dist[v] != 3 || g.vertex_class(v) != ZeroDivisorClass::TypeC) continue;
            CHECK(g.geodesic_count(u, v) == std::pair<int, long long>{3, 2});
            found = true;
            break;
        }
    }
    CHECK(found);

    int z01 = g.index_of(g.algebra().basis_vec(Z01));
    int far = g.index_of(g.algebra().basis_vec(Z10));
    CHECK_THROWS_AS((void)g.geodesic_count(z01, far), GraphError);
}

TEST_CASE("geodesic count law holds exhaustively") {
    CHECK(graph_for("2^2").geodesic_trichotomy().pass);
    // without omega all shortest paths are unique
    CHECK(graph_for("3").geodesic_trichotomy().pass);
    CHECK(graph_for("2").geodesic_trichotomy().pass);
}

TEST_CASE("explicit distance-five certificates") {
    {
        const OrthGraph& g = graph_for("2^2");
        const Algebra& a = g.algebra();
        Vec8 x = combo(a, {{Z01, 1}, {Z11, -1}});
        Vec8 y = combo(a, {{Z02, 1}, {Z22, -1}});
        PathCertificate cert = g.certify_distance(x, y);
        CHECK(g.validate(cert));
        CHECK(cert.vertices.size() == 6);
        CHECK(g.distance(g.index_of(x), g.index_of(y)) == 5);
    }
    {
        const OrthGraph& g = graph_for("3");
        const Algebra& a = g.algebra();
        Vec8 x = combo(a, {{Z01, 1}, {Z11, -1}});
        Vec8 y = combo(a, {{Z10, 1}, {Z21, -1}});
        PathCertificate cert = g.certify_distance(x, y);
        CHECK(g.validate(cert));
        CHECK(cert.vertices.size() == 6);
        CHECK(g.distance(g.index_of(x), g.index_of(y)) == 5);
    }
}

TEST_CASE("certificate length equals BFS distance on sampled pairs") {
    const OrthGraph& g = graph_for("2^2");
    const ComponentReport* big = nullptr;
    for (const ComponentReport& c : g.components())
        if (c.kind == ComponentKind::Big) big = &c;
    REQUIRE(big != nullptr);
    std::mt19937_64 rng(99);
    int checked = 0;
    for (int s = 0; s < 50; ++s) {
        int u = big->members[rng() % big->members.size()];
        std::vector<int> dist = g.distances_from(u);
        for (int k = 0; k < 20; ++k) {
            int v = big->members[rng() % big->members.size()];
            PathCertificate cert = g.certify_distance(g.rep(u), g.rep(v));
            REQUIRE(static_cast<int>(cert.vertices.size()) - 1 == dist[v]);
            ++checked;
        }
    }
    CHECK(checked == 1000);
}

TEST_CASE("certificate construction fails without a square-zero direction") {
    // over GF(5) no primitive cube root exists, so two non-orthogonal star
    // centers admit no length-three construction
    const OrthGraph& g = graph_for("5");
    const PackedAlgebra& pk = g.packed();
    std::vector<int> centers;
    for (const ComponentReport& c : g.components())
        if (c.kind == ComponentKind::Star) centers.push_back(c.center);
    REQUIRE(centers.size() >= 2);
    bool exercised = false;
    for (std::size_t i = 0; i < centers.size() && !exercised; ++i) {
        for (std::size_t j = i + 1; j < centers.size(); ++j) {
            if (pk.bilin(g.vertex_reps()[centers[i]], g.vertex_reps()[centers[j]]) == 0) continue;
            CHECK_THROWS_AS((void)g.certify_distance(g.rep(centers[i]), g.rep(centers[j])),
                            GraphError);
            exercised = true;
            break;
        }
    }
    CHECK(exercised);
}

TEST_CASE("directed zero-divisor graph is strongly connected with diameter two") {
    for (const char* fs : {"2", "3"}) {
        ZdivReport rep = graph_for(fs).zdiv_digraph_check();
        CHECK(rep.exhaustive);
        CHECK(rep.strongly_connected);
        CHECK(rep.directed_diameter == 2);
    }
    // explicit witness: z10 * z = 0 = z * z01 for some z
    const OrthGraph& g = graph_for("2");
    const Algebra& a = g.algebra();
    Subspace meet = a.ann_intersection(a.basis_vec(Z01), a.basis_vec(Z10));
    REQUIRE(meet.basis.size() >= 1);
    Vec8 z = to_vec8(meet.basis[0]);
    CHECK(a.is_zero_vec(a.mul(a.basis_vec(Z10), z)));
    CHECK(a.is_zero_vec(a.mul(z, a.basis_vec(Z01))));
}

TEST_CASE("dot and report exports") {
    const OrthGraph& g = graph_for("2");
    const ComponentReport* pair = nullptr;
    const ComponentReport* star = nullptr;
    for (const ComponentReport& c : g.components()) {
        if (c.kind == ComponentKind::Pair && !pair) pair = &c;
        if (c.kind == ComponentKind::Star && !star) star = &c;
    }
    REQUIRE(pair != nullptr);
    REQUIRE(star != nullptr);

    std::string pd = g.export_dot(*pair);
    CHECK(std::count(pd.begin(), pd.end(), '[') == 2);   // two labelled nodes
    CHECK(pd.find(" -- ") != std::string::npos);
    std::string sd = g.export_dot(*star);
    CHECK(std::count(sd.begin(), sd.end(), '[') == 7);
    CHECK(sd.find("doublecircle") != std::string::npos);

    std::string zd = g.export_dot_zdiv();
    CHECK(zd.rfind("digraph", 0) == 0);
    CHECK(zd.find(" -> ") != std::string::npos);

    nlohmann::ordered_json doc = export_report(g);
    CHECK(doc["field"] == "2");
    CHECK(doc["vertex_count"] == 135);
    CHECK(doc["geodesic_trichotomy"] == "pass");
    CHECK(doc["zdiv"]["strongly_connected"] == true);
    CHECK(doc["zdiv"]["directed_diameter"] == 2);
    long long total = 0;
    for (const auto& c : doc["components"]) {
        total += c["size"].get<long long>();
        CHECK((c["kind"] == "Pair" || c["kind"] == "Star"));
    }
    CHECK(total == 135);
    // round-trip through serialization
    auto reparsed = nlohmann::ordered_json::parse(doc.dump());
    CHECK(reparsed == doc);
}

TEST_CASE("reports are identical across thread counts") {
    Algebra a = make_alg("3");
    OrthGraph g1(a, 1);
    OrthGraph g4(a, 4);
    CHECK(export_report(g1).dump() == export_report(g4).dump());
}

TEST_CASE("nilpotent-line graph of the matrix model matches the big component") {
    auto f = Field::parse_spec("2^2");
    PseudoOctonion p8(f);
    DenseField d(*f);

    // byte-packed 3x3 matrices for the exhaustive part
    using M9 = std::array<std::uint8_t, 9>;
    auto pack = [&](const Mat3& m) {
        M9 out;
        for (int i = 0; i < 9; ++i) out[i] = d.index(m[i]);
        return out;
    };
    auto mul9 = [&](const M9& x, const M9& y) {
        M9 out{};
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c) {
                std::uint8_t acc = 0;
                for (int k = 0; k < 3; ++k) acc = d.add(acc, d.mul(x[r * 3 + k], y[k * 3 + c]));
                out[r * 3 + c] = acc;
            }
        return out;
    };
    auto is_zero9 = [](const M9& x) {
        return std::all_of(x.begin(), x.end(), [](std::uint8_t v) { return v == 0; });
    };
    auto norm9 = [&](M9 x) {
        for (int i = 0; i < 9; ++i) {
            if (x[i]) {
                std::uint8_t s = d.inv(x[i]);
                for (int j = 0; j < 9; ++j) x[j] = d.mul(s, x[j]);
                return x;
            }
        }
        return x;
    };

    std::set<M9> lines;
    for (const Mat3& m : nilpotents(*f))
        if (!mat3_is_zero(*f, m)) lines.insert(norm9(pack(m)));
    REQUIRE(lines.size() == 1365);
    std::vector<M9> verts(lines.begin(), lines.end());

    // plain-product adjacency; by the nilpotent orthogonality equivalence this
    // is the twisted-product adjacency as well
    std::vector<std::vector<int>> adj(verts.size());
    for (std::size_t i = 0; i < verts.size(); ++i)
        for (std::size_t j = i + 1; j < verts.size(); ++j)
            if (is_zero9(mul9(verts[i], verts[j])) && is_zero9(mul9(verts[j], verts[i]))) {
                adj[i].push_back(static_cast<int>(j));
                adj[j].push_back(static_cast<int>(i));
            }

    // spot-check the equivalence through the exact twisted product
    std::mt19937_64 rng(5);
    auto unpack = [&](const M9& x) {
        Mat3 out;
        for (int i = 0; i < 9; ++i) out[i] = d.element(x[i]);
        return out;
    };
    for (int k = 0; k < 200; ++k) {
        std::size_t i = rng() % verts.size();
        std::size_t j = rng() % verts.size();
        auto [plain, twisted] = p8.orth_equiv_check(unpack(verts[i]), unpack(verts[j]));
        REQUIRE(plain == twisted);
    }

    // connected with diameter 5, same census as the Okubo big component
    std::vector<int> ecc(verts.size(), 0);
    std::vector<int> dist(verts.size());
    for (std::size_t s = 0; s < verts.size(); ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        std::vector<int> queue{static_cast<int>(s)};
        dist[s] = 0;
        for (std::size_t h = 0; h < queue.size(); ++h) {
            int v = queue[h];
            for (int w : adj[v]) {
                if (dist[w] >= 0) continue;
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
        }
        REQUIRE(queue.size() == verts.size());
        ecc[s] = *std::max_element(dist.begin(), dist.end());
    }
    CHECK(*std::max_element(ecc.begin(), ecc.end()) == 5);

    const OrthGraph& g = graph_for("2^2");
    for (const ComponentReport& c : g.components()) {
        if (c.kind != ComponentKind::Big) continue;
        CHECK(c.size == static_cast<long long>(verts.size()));
        CHECK(c.diameter.lower == 5);
        // degree multisets agree between the two models
        std::multiset<std::size_t> deg_model, deg_okubo;
        for (const auto& nb : adj) deg_model.insert(nb.size());
        for (int v : c.members) deg_okubo.insert(g.neighbors(v).size());
        CHECK(deg_model == deg_okubo);
    }
}

TEST_CASE("infinite fields are rejected") {
    Algebra a = make_alg("3(t)");
    CHECK_THROWS_AS(OrthGraph{a}, GraphError);
}
