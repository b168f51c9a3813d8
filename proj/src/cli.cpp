#include "okb/cli.hpp"

#include "okb/constructions.hpp"

#include <CLI11.hpp>

#include <cctype>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

namespace okb {

namespace {

int basis_index(const std::string& sym) {
    for (int i = 0; i < 8; ++i)
        if (sym == Algebra::basis_name(i)) return i;
    return -1;
}

FieldElement parse_coefficient(const Field& f, std::string cs) {
    // strip one pair of outer parens when they wrap the whole literal;
    // rational-function fields read "(num)" and "(num)/(den)" natively
    if (!cs.empty() && cs.front() == '(') {
        int depth = 0;
        std::size_t k = 0;
        for (; k < cs.size(); ++k) {
            if (cs[k] == '(') ++depth;
            if (cs[k] == ')' && --depth == 0) break;
        }
        if (k == cs.size() - 1 && f.finite()) cs = cs.substr(1, cs.size() - 2);
    }
    return f.parse(cs);
}

}  // namespace

std::string resolve_field_shortcut(const std::string& name) {
    if (name == "gf2") return "2";
    if (name == "gf3") return "3";
    if (name == "gf4") return "2^2";
    if (name == "gf5") return "5";
    if (name == "gf7") return "7";
    if (name == "gf9") return "3^2";
    if (name == "gf13") return "13";
    if (name == "gf3t") return "3(t)";
    return name;
}

Vec8 parse_element(const Algebra& a, std::string_view text) {
    const Field& f = a.field();
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty())
        throw FieldError(FieldError::Code::ParseError, "empty element expression");
    Vec8 acc = a.zero_vec();
    std::size_t i = 0;
    while (i < s.size()) {
        bool negative = false;
        if (s[i] == '+' || s[i] == '-') {
            negative = s[i] == '-';
            ++i;
        }
        int depth = 0;
        std::size_t j = i;
        for (; j < s.size(); ++j) {
            if (s[j] == '(') ++depth;
            else if (s[j] == ')') --depth;
            else if ((s[j] == '+' || s[j] == '-') && depth == 0) break;
        }
        std::string term = s.substr(i, j - i);
        i = j;
        if (term.size() < 3)
            throw FieldError(FieldError::Code::ParseError, "bad term: " + term);
        int idx = basis_index(term.substr(term.size() - 3));
        if (idx < 0)
            throw FieldError(FieldError::Code::ParseError,
                             "term must end in a basis symbol z10..z21: " + term);
        FieldElement coef = f.one();
        if (term.size() > 3) {
            if (term[term.size() - 4] != '*')
                throw FieldError(FieldError::Code::ParseError,
                                 "coefficient must be joined with '*': " + term);
            coef = parse_coefficient(f, term.substr(0, term.size() - 4));
        }
        Vec8 tv = a.scale(coef, a.basis_vec(idx));
        acc = negative ? a.sub(acc, tv) : a.add(acc, tv);
    }
    return acc;
}

std::string format_tuple(const Algebra& a, const Vec8& v) {
    std::string out = "(";
    for (int i = 0; i < 8; ++i) {
        if (i) out += ", ";
        out += a.field().print(v[i]);
    }
    return out + ")";
}

namespace {

struct SuiteOutcome {
    enum class Status { Pass, Fail, Skip } status = Status::Pass;
    std::string detail;

    static SuiteOutcome pass() { return {}; }
    static SuiteOutcome fail(std::string d) { return {Status::Fail, std::move(d)}; }
    static SuiteOutcome skip(std::string d) { return {Status::Skip, std::move(d)}; }
};

// Shared lazily-built graph so `verify all` enumerates only once.
struct GraphCache {
    const Algebra& alg;
    const RunConfig& cfg;
    std::optional<OrthGraph> graph;

    OrthGraph& get() {
        if (!graph) graph.emplace(alg, cfg.threads, cfg.exact_limit);
        return *graph;
    }
};

bool has_omega(const Field& f) {
    return f.characteristic() != 3 && !f.primitive_cube_roots().empty();
}

SuiteOutcome suite_identities(const Algebra& a, const RunConfig& cfg) {
    IdentityReport r = a.identity_suite(1000, cfg.seed);
    if (r.pass) return SuiteOutcome::pass();
    return SuiteOutcome::fail(r.failed_identity + " at " + r.counterexample);
}

SuiteOutcome suite_annihilators(const Algebra& a, const RunConfig& cfg) {
    std::mt19937_64 rng(cfg.seed);
    for (int k = 0; k < 2000; ++k) {
        Vec8 x = a.random_zero_divisor(rng);
        Vec8 y = a.random_zero_divisor(rng);
        if (a.left_ann(x).dim() != 4 || a.right_ann(x).dim() != 4)
            return SuiteOutcome::fail("annihilator of " + a.print(x) + " is not 4-dimensional");
        int odim = a.orthogonalizer(x).dim();
        int expected = a.is_zero_vec(a.mul(x, x)) ? 3 : 1;
        if (odim != expected)
            return SuiteOutcome::fail("orthogonalizer of " + a.print(x) + " has dimension " +
                                      std::to_string(odim));
        Subspace meet = a.ann_intersection(x, y);
        Vec8 xy = a.mul(x, y);
        int mexp = a.is_zero_vec(xy) ? 3 : 1;
        if (meet.dim() != mexp)
            return SuiteOutcome::fail("annihilator intersection has dimension " +
                                      std::to_string(meet.dim()) + " for " + a.print(x) + ", " +
                                      a.print(y));
        if (!a.is_zero_vec(xy) && !contains8(a.field(), meet, xy))
            return SuiteOutcome::fail("x*y missing from the annihilator intersection");
    }
    return SuiteOutcome::pass();
}

SuiteOutcome suite_zdiv(const Algebra& a, const RunConfig& cfg, GraphCache& cache) {
    if (!a.field().finite()) return SuiteOutcome::skip("needs a finite field");
    ZdivReport rep = cache.get().zdiv_digraph_check(cfg.seed);
    if (rep.strongly_connected && rep.directed_diameter == 2) return SuiteOutcome::pass();
    return SuiteOutcome::fail("directed graph not strongly connected with diameter 2");
}

SuiteOutcome suite_orth_components(const Algebra& a, const RunConfig& cfg, GraphCache& cache) {
    if (!a.field().finite()) return SuiteOutcome::skip("needs a finite field");
    OrthGraph& g = cache.get();
    bool omega = has_omega(a.field());
    bool char3 = a.field().characteristic() == 3;
    std::uint64_t q = a.field().order();
    int big = 0;
    long long covered = 0;
    for (const ComponentReport& c : g.components()) {
        covered += c.size;
        if (c.degenerate) return SuiteOutcome::fail("squaring fixed point flagged");
        switch (c.kind) {
            case ComponentKind::Pair: {
                if (c.size != 2 || c.census.type_a != 2 || !c.diameter.exact ||
                    c.diameter.lower != 1)
                    return SuiteOutcome::fail("malformed pair component");
                Vec8 x = g.rep(c.members[0]);
                if (g.index_of(a.mul(x, x)) != c.members[1])
                    return SuiteOutcome::fail("pair members do not swap under squaring");
                break;
            }
            case ComponentKind::Star: {
                if (omega || char3) return SuiteOutcome::fail("unexpected star component");
                if (c.size != static_cast<long long>(q * q + q + 1) || !c.diameter.exact ||
                    c.diameter.lower != 2 || c.center < 0 ||
                    g.neighbors(c.center).size() != static_cast<std::size_t>(c.size - 1))
                    return SuiteOutcome::fail("malformed star component");
                break;
            }
            case ComponentKind::Big: {
                if (!omega && !char3) return SuiteOutcome::fail("unexpected big component");
                ++big;
                if (c.census.type_a != 0)
                    return SuiteOutcome::fail("big component contains a TypeA vertex");
                bool diam_ok = c.diameter.exact
                                   ? c.diameter.lower == 5
                                   : c.diameter.lower <= 5 && c.diameter.upper >= 5;
                if (!diam_ok)
                    return SuiteOutcome::fail("big component diameter is not 5");
                break;
            }
        }
    }
    if (covered != g.vertex_count()) return SuiteOutcome::fail("components do not cover the graph");
    if ((omega || char3) && big != 1)
        return SuiteOutcome::fail("expected exactly one big component, saw " +
                                  std::to_string(big));
    return SuiteOutcome::pass();
}

SuiteOutcome suite_geodesics(const Algebra& a, const RunConfig& cfg, GraphCache& cache) {
    if (!a.field().finite()) return SuiteOutcome::skip("needs a finite field");
    TrichotomyReport rep = cache.get().geodesic_trichotomy(cfg.seed);
    if (rep.pass) return SuiteOutcome::pass();
    return SuiteOutcome::fail(rep.counterexample);
}

SuiteOutcome suite_char3(const Algebra& a, const RunConfig& cfg, GraphCache& cache) {
    if (a.field().characteristic() != 3) return SuiteOutcome::skip("needs characteristic 3");
    if (a.split_char3()) {
        Vec8 e = a.quaternionic_idempotent();
        if (!a.is_idempotent(e)) return SuiteOutcome::fail("quaternionic element is not idempotent");
        Subspace cent = a.centralizer(e);
        if (cent.dim() != 6)
            return SuiteOutcome::fail("centralizer dimension " + std::to_string(cent.dim()));
        if (a.field().finite() && a.field().order() == 3) {
            OrthGraph& g = cache.get();
            long long singular = 0;
            std::vector<int> singular_ids;
            for (int id = 0; id < g.vertex_count(); ++id) {
                if (g.vertex_class(id) != ZeroDivisorClass::TypeC) continue;
                Vec8 x = g.rep(id);
                if (!contains8(a.field(), cent, x))
                    return SuiteOutcome::fail("square-zero element outside the centralizer: " +
                                              a.print(x));
                if (a.char3_subclass(x) == Char3Subclass::SingularType) {
                    ++singular;
                    singular_ids.push_back(id);
                }
            }
            if (singular != 4)
                return SuiteOutcome::fail("singular-type line count " + std::to_string(singular));
            for (std::size_t i = 0; i < singular_ids.size(); ++i)
                for (std::size_t j = i + 1; j < singular_ids.size(); ++j) {
                    Vec8 u = g.rep(singular_ids[i]);
                    Vec8 v = g.rep(singular_ids[j]);
                    if (!a.is_zero_vec(a.mul(u, v)) || !a.is_zero_vec(a.mul(v, u)))
                        return SuiteOutcome::fail("singular-type lines are not orthogonal");
                }
        } else {
            std::mt19937_64 rng(cfg.seed);
            for (int k = 0; k < 500; ++k) {
                Vec8 x = a.random_zero_divisor(rng);
                if (a.classify(x) != ZeroDivisorClass::TypeC) continue;
                if (!contains8(a.field(), cent, x))
                    return SuiteOutcome::fail("square-zero element outside the centralizer: " +
                                              a.print(x));
            }
        }
        return SuiteOutcome::pass();
    }

    // non-split: the explicit distance-three computation
    const Field& f = a.field();
    auto z = [&](int i) { return a.basis_vec(i); };
    Vec8 x = a.sub(z(2), z(4));   // z01 - z11
    Vec8 y = a.sub(z(3), z(5));   // z02 - z22
    Vec8 xx = a.mul(x, x);
    Vec8 yy = a.mul(y, y);
    if (!f.is_zero(a.bilin(xx, yy)))
        return SuiteOutcome::fail("n(x*x, y*y) = 3 beta^2 should vanish in characteristic 3");
    FieldElement k = f.one();
    // u_k = x*x + (k/beta) y*y, v_k = k z01 - z02, w_k = v_k * u_k
    Vec8 uk = a.add(xx, a.scale(f.div(k, a.beta()), yy));
    Vec8 vk = a.sub(a.scale(k, z(2)), z(3));
    if (!f.is_zero(a.bilin(uk, vk))) return SuiteOutcome::fail("v_k is not orthogonal to u_k");
    Vec8 wk = a.mul(vk, uk);
    FieldElement k2 = f.mul(k, k);
    Vec8 expected = a.zero_vec();
    expected[0] = f.mul(a.beta(), k);                   // beta k z10
    expected[1] = f.neg(f.mul(a.beta(), k));            // -beta k z20
    expected[2] = f.neg(a.beta());                      // -beta z01
    expected[3] = k2;                                   // k^2 z02
    expected[4] = a.beta();                             // beta z11
    expected[5] = f.neg(k2);                            // -k^2 z22
    if (!a.equal(wk, expected)) return SuiteOutcome::fail("w_k differs from the closed form");
    // w_k * w_k = beta (beta + k^3) u_k, nonzero for a non-cube beta
    FieldElement scalar = f.mul(a.beta(), f.add(a.beta(), f.mul(k2, k)));
    if (!a.equal(a.mul(wk, wk), a.scale(scalar, uk)))
        return SuiteOutcome::fail("w_k * w_k != beta (beta + k^3) u_k");
    if (f.is_zero(scalar)) return SuiteOutcome::fail("beta (beta + k^3) vanished unexpectedly");
    // x -- x*x -- y*y -- y is a valid distance-three certificate
    const Vec8 path[] = {x, xx, yy, y};
    for (int i = 0; i + 1 < 4; ++i) {
        if (!a.is_zero_vec(a.mul(path[i], path[i + 1])) ||
            !a.is_zero_vec(a.mul(path[i + 1], path[i])))
            return SuiteOutcome::fail("distance-three certificate is not a path");
    }
    return SuiteOutcome::pass();
}

SuiteOutcome suite_section5(const Algebra& a, const RunConfig& cfg) {
    if (!a.field().finite()) return SuiteOutcome::skip("needs a finite field");
    if (!has_omega(a.field()))
        return SuiteOutcome::skip("needs a primitive cube root of unity in the field");
    FieldPtr f = a.field_ptr();
    PseudoOctonion p8(f);
    std::mt19937_64 rng(cfg.seed);
    // traceless basis: diagonal differences plus the six off-diagonal units
    std::vector<Mat3> tbasis;
    Mat3 d0 = mat3_sub(*f, mat3_unit(*f, 0, 0), mat3_unit(*f, 2, 2));
    Mat3 d1 = mat3_sub(*f, mat3_unit(*f, 1, 1), mat3_unit(*f, 2, 2));
    tbasis.push_back(d0);
    tbasis.push_back(d1);
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c)
            if (r != c) tbasis.push_back(mat3_unit(*f, r, c));
    for (int k = 0; k < 2000; ++k) {
        Mat3 x = mat3_zero(*f);
        for (const Mat3& b : tbasis)
            x = mat3_add(*f, x, mat3_scale(*f, random_field_element(*f, rng), b));
        if (!f->is_zero(p8.norm(x))) continue;
        Mat3 x3 = mat3_mul(*f, x, mat3_mul(*f, x, x));
        if (!mat3_is_zero(*f, mat3_sub(*f, x3, mat3_scale(*f, mat3_det(*f, x),
                                                          mat3_identity(*f)))))
            return SuiteOutcome::fail("norm-zero traceless matrix violates x^3 = det(x) I");
    }
    std::vector<Mat3> nil = nilpotents(*f);
    std::uint64_t q = a.field().order();
    if (nil.size() != static_cast<std::size_t>(q * q * q * q * q * q))
        return SuiteOutcome::fail("nilpotent count differs from q^6");
    for (int k = 0; k < 2000; ++k) {
        const Mat3& u = nil[rng() % nil.size()];
        const Mat3& v = nil[rng() % nil.size()];
        auto [plain, twisted] = p8.orth_equiv_check(u, v);
        if (plain != twisted)
            return SuiteOutcome::fail("plain and twisted orthogonality disagree on nilpotents");
    }
    return SuiteOutcome::pass();
}

SuiteOutcome suite_petersson(const Algebra& a, const RunConfig& cfg) {
    const Field& f = a.field();
    Vec8 e;
    bool char3 = f.characteristic() == 3;
    if (char3 && a.split_char3()) {
        e = a.quaternionic_idempotent();
    } else {
        e = a.add(a.basis_vec(0), a.basis_vec(1));  // z10 + z20, idempotent when alpha = 1
        if (!a.is_idempotent(e))
            return SuiteOutcome::skip("no canonical idempotent for these parameters");
    }
    MatrixFE tau = tau_from_idempotent(a, e);
    auto apply_tau = [&](const Vec8& v) {
        return to_vec8(apply(f, tau, to_vec(v)));
    };
    for (int i = 0; i < 8; ++i) {
        Vec8 b = a.basis_vec(i);
        if (!a.equal(apply_tau(apply_tau(apply_tau(b))), b))
            return SuiteOutcome::fail("tau^3 is not the identity");
    }
    // Fix(tau) = C(e)
    MatrixFE shifted = tau;
    for (int i = 0; i < 8; ++i) shifted.at(i, i) = f.sub(shifted.at(i, i), f.one());
    Subspace fix = kernel(f, shifted);
    if (!(fix == a.centralizer(e)))
        return SuiteOutcome::fail("Fix(tau) differs from the centralizer of e");
    if (char3 && a.split_char3()) {
        if (fix.dim() != 6)
            return SuiteOutcome::fail("Fix(tau) dimension " + std::to_string(fix.dim()));
        for (int i = 0; i < 8; ++i) {
            Vec8 b = a.basis_vec(i);
            Vec8 once = a.sub(apply_tau(b), b);
            if (!a.is_zero_vec(a.sub(apply_tau(once), once)))
                return SuiteOutcome::fail("(tau - id)^2 is not zero");
        }
    }
    // the derived product is unital with unit e and composes norms
    std::mt19937_64 rng(cfg.seed);
    for (int k = 0; k < 500; ++k) {
        Vec8 x = a.random_element(rng);
        if (!a.equal(hurwitz_mul(a, e, e, x), x) || !a.equal(hurwitz_mul(a, e, x, e), x))
            return SuiteOutcome::fail("e is not a unit of the derived product");
        Vec8 y = a.random_element(rng);
        FieldElement lhs = a.qnorm(hurwitz_mul(a, e, x, y));
        if (!(lhs == f.mul(a.qnorm(x), a.qnorm(y))))
            return SuiteOutcome::fail("derived product does not compose norms");
    }
    ReconstructReport rep = petersson_reconstruct_check(a, e, 1000, cfg.seed);
    if (!rep.pass) return SuiteOutcome::fail(rep.counterexample);
    return SuiteOutcome::pass();
}

SuiteOutcome suite_appendix(const Algebra& configured, const RunConfig&) {
    // the reference computation fixes alpha = 1 and keeps beta symbolic
    const Field& f = configured.field();
    Algebra a(configured.field_ptr(), f.one(), configured.beta());
    Vec8 x = a.sub(a.basis_vec(2), a.basis_vec(4));  // z01 - z11
    Vec8 y = a.sub(a.basis_vec(3), a.basis_vec(5));  // z02 - z22
    Vec8 xx = a.mul(x, x);
    Vec8 yy = a.mul(y, y);
    const FieldElement& b = a.beta();
    FieldElement b2 = f.mul(b, b);
    Vec8 exx = a.zero_vec();
    exx[3] = f.one();
    exx[5] = f.one();
    exx[6] = f.one();  // {0, 0, 0, 1, 0, 1, 1, 0}
    Vec8 eyy = a.zero_vec();
    eyy[2] = b;
    eyy[4] = b;
    eyy[7] = b;  // {0, 0, b, 0, b, 0, 0, b}
    struct Line {
        std::string got, want;
    };
    Line lines[] = {
        {format_tuple(a, xx), format_tuple(a, exx)},
        {format_tuple(a, yy), format_tuple(a, eyy)},
        {f.print(a.bilin(x, xx)), f.print(f.zero())},
        {f.print(a.bilin(y, yy)), f.print(f.zero())},
        {f.print(a.bilin(xx, yy)),
         f.print(f.mul(f.from_int(3), b2))},  // 3 b^2
    };
    for (const Line& l : lines)
        if (l.got != l.want)
            return SuiteOutcome::fail("got " + l.got + ", reference " + l.want);
    return SuiteOutcome::pass();
}

int cmd_verify(const Algebra& a, const RunConfig& cfg, const std::string& suite,
               std::ostream& os) {
    GraphCache cache{a, cfg, std::nullopt};
    using Runner = std::function<SuiteOutcome()>;
    std::vector<std::pair<std::string, Runner>> suites = {
        {"identities", [&] { return suite_identities(a, cfg); }},
        {"annihilators", [&] { return suite_annihilators(a, cfg); }},
        {"zdiv", [&] { return suite_zdiv(a, cfg, cache); }},
        {"orth-components", [&] { return suite_orth_components(a, cfg, cache); }},
        {"geodesics", [&] { return suite_geodesics(a, cfg, cache); }},
        {"char3", [&] { return suite_char3(a, cfg, cache); }},
        {"section5", [&] { return suite_section5(a, cfg); }},
        {"petersson", [&] { return suite_petersson(a, cfg); }},
        {"appendix", [&] { return suite_appendix(a, cfg); }},
    };
    bool all = suite == "all";
    bool failed = false;
    bool matched = false;
    for (auto& [name, run] : suites) {
        if (!all && name != suite) continue;
        matched = true;
        SuiteOutcome out = run();
        switch (out.status) {
            case SuiteOutcome::Status::Pass:
                os << name << ": pass\n";
                break;
            case SuiteOutcome::Status::Fail:
                os << name << ": FAIL (" << out.detail << ")\n";
                failed = true;
                break;
            case SuiteOutcome::Status::Skip:
                if (!all) {
                    os << name << ": incompatible (" << out.detail << ")\n";
                    return 2;
                }
                os << name << ": skipped (" << out.detail << ")\n";
                break;
        }
    }
    if (!matched) {
        os << "unknown suite: " << suite << "\n";
        return 2;
    }
    return failed ? 1 : 0;
}

std::string orth_dot(const OrthGraph& g) {
    static const char* tags[] = {"TypeA", "TypeB", "TypeC"};
    std::vector<int> centers;
    for (const ComponentReport& c : g.components())
        if (c.center >= 0) centers.push_back(c.center);
    std::sort(centers.begin(), centers.end());
    std::ostringstream os;
    os << "graph okubo {\n";
    for (long long v = 0; v < g.vertex_count(); ++v) {
        int cls = static_cast<int>(g.vertex_class(static_cast<int>(v)));
        os << "  v" << v << " [label=\"" << g.algebra().print(g.rep(static_cast<int>(v)))
           << "\\n" << tags[cls] << "\"";
        if (std::binary_search(centers.begin(), centers.end(), static_cast<int>(v)))
            os << " shape=doublecircle";
        os << "];\n";
    }
    for (long long v = 0; v < g.vertex_count(); ++v)
        for (int w : g.neighbors(static_cast<int>(v)))
            if (v < w) os << "  v" << v << " -- v" << w << ";\n";
    os << "}\n";
    return os.str();
}

int cmd_graph(const Algebra& a, const RunConfig& cfg, const std::string& which,
              const std::string& format, std::ostream& os) {
    OrthGraph g(a, cfg.threads, cfg.exact_limit);
    if (which == "orth") {
        if (format == "dot")
            os << orth_dot(g);
        else
            os << export_report(g, cfg.seed).dump(2) << "\n";
    } else {
        if (format == "dot") {
            os << g.export_dot_zdiv();
        } else {
            ZdivReport z = g.zdiv_digraph_check(cfg.seed);
            nlohmann::ordered_json doc;
            doc["field"] = a.field().spec_string();
            doc["alpha"] = a.field().print(a.alpha());
            doc["beta"] = a.field().print(a.beta());
            doc["vertex_count"] = g.vertex_count();
            doc["zdiv"] = {{"strongly_connected", z.strongly_connected},
                           {"directed_diameter", z.directed_diameter},
                           {"exhaustive", z.exhaustive}};
            os << doc.dump(2) << "\n";
        }
    }
    return 0;
}

int cmd_info(const Algebra& a, std::ostream& os) {
    const Field& f = a.field();
    os << "field: " << f.spec_string() << "\n";
    os << "characteristic: " << f.characteristic() << "\n";
    if (f.finite()) {
        os << "order: " << f.order() << "\n";
    } else {
        os << "order: infinite\n";
    }
    os << "alpha: " << f.print(a.alpha()) << "\n";
    os << "beta: " << f.print(a.beta()) << "\n";
    os << "primitive cube roots of unity: " << f.primitive_cube_roots().size() << "\n";
    if (f.characteristic() == 3)
        os << "char-3 split: " << (a.split_char3() ? "yes" : "no") << "\n";
    if (f.finite()) {
        std::uint64_t q = f.order();
        std::uint64_t q3 = q * q * q;
        std::uint64_t q4 = q3 * q;
        std::uint64_t q7 = q4 * q3;
        os << "projective zero divisors: " << (q7 + q4 - q3 - 1) / (q - 1) << "\n";
    }
    return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    CLI::App app{"Okubo algebras with isotropic norm: exact computation and graph checks"};
    app.add_option("--field", cfg.field,
                   "field spec (p, p^k, p(t)) or shortcut gf2..gf13, gf3t");
    app.add_option("--alpha", cfg.alpha, "first parameter, nonzero");
    app.add_option("--beta", cfg.beta, "second parameter, nonzero");
    app.add_option("--seed", cfg.seed, "seed for randomized checks");
    app.add_option("--threads", cfg.threads, "worker threads")->check(CLI::PositiveNumber);
    app.add_option("--exact-limit", cfg.exact_limit,
                   "largest component size for exact diameters");
    app.add_option("--out", cfg.out, "write output to a file instead of stdout");
    std::vector<int> corrupt;
    app.add_option("--corrupt-entry", corrupt,
                   "self-test hook: zero out structure entry (i, j) before running")
        ->expected(2);
    app.require_subcommand(1);

    std::string xexpr, yexpr, suite = "all", which = "orth", format = "report";
    CLI::App* mult = app.add_subcommand("mult", "multiply two elements");
    mult->add_option("x", xexpr, "left factor")->required();
    mult->add_option("y", yexpr, "right factor")->required();
    CLI::App* norm = app.add_subcommand("norm", "bilinear form of two elements");
    norm->add_option("x", xexpr, "first argument")->required();
    norm->add_option("y", yexpr, "second argument")->required();
    CLI::App* graph = app.add_subcommand("graph", "build a graph artifact");
    graph->add_option("--which", which, "orth or zdiv")
        ->check(CLI::IsMember({"orth", "zdiv"}));
    graph->add_option("--export", format, "report or dot")
        ->check(CLI::IsMember({"report", "dot"}));
    CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("suite", suite, "suite name or 'all'")
        ->check(CLI::IsMember({"identities", "annihilators", "zdiv", "orth-components",
                               "geodesics", "char3", "section5", "petersson", "appendix",
                               "all"}));
    app.add_subcommand("info", "print the configuration summary");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            // --help and friends
            out << app.help();
            return 0;
        }
        err << e.what() << "\n";
        return 2;
    }

    try {
        FieldPtr f = Field::parse_spec(resolve_field_shortcut(cfg.field));
        Algebra alg(f, f->parse(cfg.alpha), f->parse(cfg.beta));
        if (corrupt.size() == 2) {
            if (corrupt[0] < 0 || corrupt[0] > 7 || corrupt[1] < 0 || corrupt[1] > 7) {
                err << "corrupt-entry indices must be in 0..7\n";
                return 2;
            }
            alg = alg.patched(corrupt[0], corrupt[1], alg.zero_vec());
        }

        std::ofstream file;
        if (!cfg.out.empty()) {
            file.open(cfg.out);
            if (!file) {
                err << "cannot open output file: " << cfg.out << "\n";
                return 2;
            }
        }
        std::ostream& os = cfg.out.empty() ? out : file;

        if (mult->parsed()) {
            Vec8 x = parse_element(alg, xexpr);
            Vec8 y = parse_element(alg, yexpr);
            os << format_tuple(alg, alg.mul(x, y)) << "\n";
            return 0;
        }
        if (norm->parsed()) {
            Vec8 x = parse_element(alg, xexpr);
            Vec8 y = parse_element(alg, yexpr);
            os << f->print(alg.bilin(x, y)) << "\n";
            return 0;
        }
        if (graph->parsed()) return cmd_graph(alg, cfg, which, format, os);
        if (verify->parsed()) return cmd_verify(alg, cfg, suite, os);
        return cmd_info(alg, os);
    } catch (const FieldError& e) {
        err << "field error: " << e.what() << "\n";
        return 2;
    } catch (const OkuboError& e) {
        err << "algebra error: " << e.what() << "\n";
        return 2;
    } catch (const GraphError& e) {
        err << "graph error: " << e.what() << "\n";
        return 2;
    } catch (const ConstructionError& e) {
        err << "construction error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace okb
