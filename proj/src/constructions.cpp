#include "fusion/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numeric>

#include "fusion/error.hpp"
#include "fusion/ring_ops.hpp"

namespace fusion {

const char* const kE4Generator = "5";
const char* const kE16_6Generator = "a1";

namespace {

FiniteAbelianGroup trivial_group() { return FiniteAbelianGroup(std::vector<std::int64_t>{}); }

FiniteAbelianGroup cyclic(std::int64_t m) { return FiniteAbelianGroup(std::vector<std::int64_t>{m}); }

Grading trivial_grading(int rank) { return Grading{trivial_group(), std::vector<std::vector<std::int64_t>>(rank)}; }

AdeFamily base_family(AdeFamily f) {
    switch (f) {
        case AdeFamily::AdA: return AdeFamily::A;
        case AdeFamily::AdD: return AdeFamily::D;
        case AdeFamily::AdE6: return AdeFamily::E6;
        case AdeFamily::AdE8: return AdeFamily::E8;
        default: return f;
    }
}

bool is_adjoint(AdeFamily f) { return base_family(f) != f; }

void check_spec(const AdeSpec& s) {
    auto f = base_family(s.family);
    if (f == AdeFamily::A && s.size < 2)
        throw Error(ErrorKind::MalformedInput, "A_N needs N >= 2");
    if (f == AdeFamily::D && (s.size < 4 || s.size % 2 != 0))
        throw Error(ErrorKind::MalformedInput, "D_n needs n even and n >= 4");
}

void add_edge(IntMat& a, int i, int j) {
    a[i][j] = 1;
    a[j][i] = 1;
}

std::vector<int> cyclic_subgroup(const FusionRing& ring, int g) {
    std::vector<int> out{ring.unit()};
    int cur = g;
    while (cur != ring.unit()) {
        out.push_back(cur);
        auto p = ring.product(g, cur);
        if (p.size() != 1 || p[0].n != 1) throw Error(ErrorKind::NonSubgroup, ring.label(g) + " is not invertible");
        cur = p[0].k;
        if (out.size() > static_cast<std::size_t>(ring.rank()))
            throw Error(ErrorKind::NonSubgroup, ring.label(g) + " has no finite order");
    }
    std::sort(out.begin(), out.end());
    return out;
}

// label of the orbit containing i in dequiv_free(ring, h)
std::string orbit_label(const FusionRing& ring, const std::vector<int>& h, int i) {
    int best = i;
    for (int g : h) best = std::min(best, ring.product(g, i)[0].k);
    return "[" + ring.label(best) + "]";
}

}  // namespace

AdeFamily parse_ade_family(const std::string& name) {
    static const std::map<std::string, AdeFamily> names = {
        {"A", AdeFamily::A},       {"D", AdeFamily::D},       {"D-even", AdeFamily::D}, {"E6", AdeFamily::E6},
        {"E8", AdeFamily::E8},     {"adA", AdeFamily::AdA},   {"adD", AdeFamily::AdD},  {"adE6", AdeFamily::AdE6},
        {"adE8", AdeFamily::AdE8},
    };
    auto it = names.find(name);
    if (it == names.end()) throw Error(ErrorKind::UnknownFamily, "unknown ADE family '" + name + "'");
    return it->second;
}

std::string ade_name(const AdeSpec& s) {
    std::string base;
    switch (base_family(s.family)) {
        case AdeFamily::A: base = "A_" + std::to_string(s.size); break;
        case AdeFamily::D: base = "D_" + std::to_string(s.size); break;
        case AdeFamily::E6: base = "E_6"; break;
        default: base = "E_8"; break;
    }
    return is_adjoint(s.family) ? "ad(" + base + ")" : base;
}

std::vector<std::string> ade_labels(const AdeSpec& spec) {
    check_spec(spec);
    std::vector<std::string> l;
    switch (base_family(spec.family)) {
        case AdeFamily::A:
            for (int i = 0; i < spec.size; ++i) l.push_back("f" + std::to_string(i));
            break;
        case AdeFamily::D:
            for (int i = 0; i < spec.size - 2; ++i) l.push_back("f" + std::to_string(i));
            l.push_back("P");
            l.push_back("Q");
            break;
        case AdeFamily::E6: l = {"f0", "f1", "f2", "X", "Y", "Z"}; break;
        default: l = {"f0", "f1", "f2", "f3", "f4", "U", "V", "W"}; break;
    }
    return l;
}

IntMat dynkin_adjacency(const AdeSpec& spec) {
    check_spec(spec);
    auto f = base_family(spec.family);
    int n = static_cast<int>(ade_labels(spec).size());
    IntMat a = zero_matrix(n, n);
    switch (f) {
        case AdeFamily::A:
            for (int i = 0; i + 1 < n; ++i) add_edge(a, i, i + 1);
            break;
        case AdeFamily::D:
            for (int i = 0; i + 1 < n - 2; ++i) add_edge(a, i, i + 1);
            add_edge(a, n - 3, n - 2);
            add_edge(a, n - 3, n - 1);
            break;
        case AdeFamily::E6:
            add_edge(a, 0, 1);
            add_edge(a, 1, 2);
            add_edge(a, 2, 4);
            add_edge(a, 4, 5);
            add_edge(a, 2, 3);
            break;
        default:
            for (int i = 0; i < 4; ++i) add_edge(a, i, i + 1);
            add_edge(a, 4, 6);
            add_edge(a, 6, 7);
            add_edge(a, 4, 5);
            break;
    }
    return a;
}

FusionRing pointed_ring(const FiniteAbelianGroup& group) {
    auto elems = group.elements();
    std::vector<std::string> labels;
    for (const auto& e : elems) {
        std::string s;
        for (std::size_t i = 0; i < e.size(); ++i) s += (i ? "," : "") + std::to_string(e[i]);
        labels.push_back(s.empty() ? "0" : s);
    }
    const int n = static_cast<int>(elems.size());
    std::vector<int> dual(n);
    std::vector<Entry> entries;
    for (int i = 0; i < n; ++i) {
        dual[i] = static_cast<int>(group.index_of(group.negate(elems[i])));
        for (int j = 0; j < n; ++j)
            entries.push_back({i, j, static_cast<int>(group.index_of(group.add(elems[i], elems[j]))), 1});
    }
    return FusionRing(labels, static_cast<int>(group.index_of(group.identity())), dual, entries,
                      Grading{group, elems});
}

FusionRing verlinde_ring(int n) {
    if (n < 1) throw Error(ErrorKind::MalformedInput, "A_N needs N >= 1");
    const int k = n - 1;
    std::vector<std::string> labels;
    std::vector<int> dual(n);
    std::vector<Entry> entries;
    Grading g{cyclic(2), {}};
    for (int a = 0; a < n; ++a) {
        labels.push_back("f" + std::to_string(a));
        dual[a] = a;
        g.deg.push_back({a % 2});
        for (int b = 0; b < n; ++b)
            for (int c = std::abs(a - b); c <= std::min(a + b, 2 * k - a - b); c += 2) entries.push_back({a, b, c, 1});
    }
    return FusionRing(labels, 0, dual, entries, g);
}

FusionRing ade_ring(const AdeSpec& spec) {
    check_spec(spec);
    static std::mutex mu;
    static std::map<std::pair<int, int>, FusionRing> cache;
    const int size = (base_family(spec.family) == AdeFamily::A || base_family(spec.family) == AdeFamily::D) ? spec.size : 0;
    const std::pair<int, int> key{static_cast<int>(spec.family), size};
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    FusionRing ring;
    if (is_adjoint(spec.family)) {
        auto base = ade_ring(AdeSpec{base_family(spec.family), spec.size});
        auto ad = restrict_ring(base, adjoint_subring(base));
        ring = ad.with_grading(trivial_grading(ad.rank()));
    } else if (spec.family == AdeFamily::A) {
        ring = verlinde_ring(spec.size);
    } else {
        auto res = ring_from_generator_graph(dynkin_adjacency(spec), 0, ade_labels(spec));
        if (res.classes.size() != 1)
            throw Error(ErrorKind::SolverNonunique, ade_name(spec) + " graph has " +
                                                        std::to_string(res.classes.size()) + " ring completions");
        ring = res.canonical();
    }
    std::lock_guard<std::mutex> lock(mu);
    cache.emplace(key, ring);
    return ring;
}

FusionRing deligne_product(const FusionRing& a, const FusionRing& b) {
    const int ra = a.rank(), rb = b.rank();
    auto id = [rb](int i, int j) { return i * rb + j; };
    std::vector<std::string> labels;
    std::vector<int> dual;
    for (int i = 0; i < ra; ++i)
        for (int j = 0; j < rb; ++j) {
            labels.push_back(a.label(i) + "|" + b.label(j));
            dual.push_back(id(a.dual(i), b.dual(j)));
        }
    std::vector<Entry> entries;
    for (int i1 = 0; i1 < ra; ++i1)
        for (int i2 = 0; i2 < ra; ++i2)
            for (const auto& s : a.product(i1, i2))
                for (int j1 = 0; j1 < rb; ++j1)
                    for (int j2 = 0; j2 < rb; ++j2)
                        for (const auto& t : b.product(j1, j2))
                            entries.push_back({id(i1, j1), id(i2, j2), id(s.k, t.k), s.n * t.n});
    std::optional<Grading> g;
    if (a.grading() && b.grading()) {
        auto orders = a.grading()->group.orders();
        for (auto o : b.grading()->group.orders()) orders.push_back(o);
        Grading pg{FiniteAbelianGroup(orders), {}};
        for (int i = 0; i < ra; ++i)
            for (int j = 0; j < rb; ++j) {
                auto d = a.grading()->deg[i];
                for (auto x : b.grading()->deg[j]) d.push_back(x);
                pg.deg.push_back(d);
            }
        g = pg;
    }
    return FusionRing(labels, id(a.unit(), b.unit()), dual, entries, g);
}

FusionRing one_one_subring(const FusionRing& ring, const Grading& grading) {
    if (grading.group.factor_count() != 2)
        throw Error(ErrorKind::MalformedInput, "one_one_subring needs a two-factor grading");
    if (!grading_is_multiplicative(ring, grading))
        throw Error(ErrorKind::ConstraintViolation, "supplied grading is not multiplicative");
    const auto& G = grading.group;
    auto target = G.reduce({1, 1});
    std::vector<int> seeds;
    for (int i = 0; i < ring.rank(); ++i)
        if (G.reduce(grading.deg[i]) == target) seeds.push_back(i);
    if (seeds.empty()) throw Error(ErrorKind::Degenerate, "grade (1,1) is empty");
    auto subset = subring_generated(ring, seeds);
    const std::int64_t m1 = G.orders()[0], m2 = G.orders()[1];
    const std::int64_t L = std::lcm(m1, m2);
    Grading cg{cyclic(L), {}};
    for (int i : subset) {
        auto d = G.reduce(grading.deg[i]);
        std::int64_t t = 0;
        while (t < L && (t % m1 != d[0] || t % m2 != d[1])) ++t;
        if (t == L) throw Error(ErrorKind::ConstraintViolation, "degree outside the diagonal subgroup");
        cg.deg.push_back({t});
    }
    return restrict_ring(ring, subset).with_grading(cg);
}

FusionRing dequiv_free(const FusionRing& ring, const std::vector<int>& subgroup) {
    const int n = ring.rank();
    std::vector<int> h = subgroup;
    std::sort(h.begin(), h.end());
    h.erase(std::unique(h.begin(), h.end()), h.end());
    for (int g : h)
        if (g < 0 || g >= n) throw Error(ErrorKind::MalformedInput, "subgroup index out of range");
    auto inv = invertibles(ring);
    for (int g : h)
        if (!std::binary_search(inv.elements.begin(), inv.elements.end(), g))
            throw Error(ErrorKind::NonSubgroup, ring.label(g) + " is not invertible");
    if (!std::binary_search(h.begin(), h.end(), ring.unit()))
        throw Error(ErrorKind::NonSubgroup, "subgroup does not contain the unit");
    for (int g1 : h)
        for (int g2 : h)
            if (!std::binary_search(h.begin(), h.end(), ring.product(g1, g2)[0].k))
                throw Error(ErrorKind::NonSubgroup, "subset is not closed under fusion");
    for (int g : h)
        for (int i = 0; i < n; ++i) {
            auto l = ring.product(g, i), r = ring.product(i, g);
            if (!std::equal(l.begin(), l.end(), r.begin(), r.end()))
                throw Error(ErrorKind::NonCentral, ring.label(g) + " does not commute with " + ring.label(i));
            if (g != ring.unit() && l[0].k == i)
                throw Error(ErrorKind::FixedPoint, "fixed point: " + ring.label(g) + " fixes " + ring.label(i));
        }
    std::vector<int> orbit_min(n);
    for (int i = 0; i < n; ++i) {
        orbit_min[i] = i;
        for (int g : h) orbit_min[i] = std::min(orbit_min[i], ring.product(g, i)[0].k);
    }
    std::vector<int> reps;
    std::vector<int> pos(n, -1);
    for (int i = 0; i < n; ++i)
        if (orbit_min[i] == i) {
            pos[i] = static_cast<int>(reps.size());
            reps.push_back(i);
        }
    auto orbit = [&](int i) { return pos[orbit_min[i]]; };
    const int q = static_cast<int>(reps.size());
    std::vector<std::string> labels;
    std::vector<int> dual;
    std::vector<Entry> entries;
    for (int a = 0; a < q; ++a) {
        labels.push_back("[" + ring.label(reps[a]) + "]");
        dual.push_back(orbit(ring.dual(reps[a])));
        for (int b = 0; b < q; ++b) {
            std::vector<std::int64_t> acc(q, 0);
            for (const auto& t : ring.product(reps[a], reps[b])) acc[orbit(t.k)] += t.n;
            for (int c = 0; c < q; ++c)
                if (acc[c]) entries.push_back({a, b, c, acc[c]});
        }
    }
    std::optional<Grading> g;
    if (ring.grading()) {
        const auto& G = ring.grading()->group;
        const std::size_t r = G.factor_count();
        IntMat rel;
        for (std::size_t i = 0; i < r; ++i) {
            std::vector<std::int64_t> row(r, 0);
            row[i] = G.orders()[i];
            rel.push_back(row);
        }
        for (int x : h) rel.push_back(ring.grading()->deg[x]);
        if (r == 0) {
            g = trivial_grading(q);
        } else {
            QuotientMap qm(rel, r);
            Grading qg{qm.group(), {}};
            for (int a = 0; a < q; ++a) qg.deg.push_back(qm.apply(ring.grading()->deg[reps[a]]));
            g = qg;
        }
    }
    return FusionRing(labels, orbit(ring.unit()), dual, entries, g);
}

PartialRing e4_instance() {
    const double r2 = std::sqrt(2.0);
    const double a = 1 + r2;
    const double s = std::sqrt(2 + r2);
    const double t = std::sqrt(2 * (2 + r2));
    PartialRing p;
    for (int i = 1; i <= 12; ++i) p.labels.push_back(std::to_string(i));
    p.unit = 0;
    p.dims = {1, a, a, 1, s, s, t, r2, 2 + r2, s, s, t};
    p.grading.group = cyclic(4);
    const int deg[12] = {0, 0, 0, 0, 1, 1, 1, 2, 2, 3, 3, 3};
    for (int d : deg) p.grading.deg.push_back({d});
    auto ad = ade_ring(AdeSpec{AdeFamily::AdA, 7});
    const int block[4] = {ad.index_of("f0"), ad.index_of("f2"), ad.index_of("f4"), ad.index_of("f6")};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            for (int k = 0; k < 4; ++k) p.set_known(i, j, k, ad.N(block[i], block[j], block[k]));
    return p;
}

namespace {

// E_7 Dynkin graph: chain c0..c5 with c6 attached to c2.
IntMat e7_adjacency() {
    IntMat a = zero_matrix(7, 7);
    for (int i = 0; i < 5; ++i) add_edge(a, i, i + 1);
    add_edge(a, 2, 6);
    return a;
}

}  // namespace

PartialRing e16_6_instance(bool prefill_module) {
    auto d10 = ade_ring(AdeSpec{AdeFamily::D, 10});
    auto d10dims = fp_dims(d10).dims;
    double gdim = 0;
    for (double d : d10dims) gdim += d * d;
    auto [v, lambda] = perron_vector(e7_adjacency(), 5);
    (void)lambda;
    double ss = 0;
    for (double x : v) ss += x * x;
    const double scale = std::sqrt(gdim / ss);
    // order by parity relative to the end of the long arm, then by dimension
    const int parity[7] = {1, 0, 1, 0, 1, 0, 0};
    std::vector<int> order(7);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int x, int y) {
        if (parity[x] != parity[y]) return parity[x] < parity[y];
        return v[x] < v[y];
    });
    PartialRing p;
    p.labels = d10.labels();
    p.unit = d10.unit();
    p.dims = d10dims;
    p.grading.group = cyclic(3);
    p.grading.deg.assign(10, {0});
    for (char c : {'a', 'b'})
        for (int m = 0; m < 7; ++m) {
            p.labels.push_back(std::string(1, c) + std::to_string(m + 1));
            p.dims.push_back(v[order[m]] * scale);
            p.grading.deg.push_back({c == 'a' ? 1 : 2});
        }
    for (int i = 0; i < 10; ++i)
        for (int j = 0; j < 10; ++j)
            for (int k = 0; k < 10; ++k) p.set_known(i, j, k, d10.N(i, j, k));
    if (prefill_module) {
        std::vector<double> md(p.dims.begin() + 10, p.dims.begin() + 17);
        // the E_7 module and its P <-> Q twist, one per nontrivial component
        auto acts = solve_module(d10, md);
        const int P = d10.index_of("P"), Q = d10.index_of("Q");
        if (acts.size() != 2 || acts[0].matrices[P] != acts[1].matrices[Q] || acts[0].matrices[Q] != acts[1].matrices[P])
            throw Error(ErrorKind::SolverNonunique, "D_10 modules on the E_7 dims are not a P <-> Q twist pair");
        for (int c = 0; c < 2; ++c)
            for (int i = 0; i < 10; ++i)
                for (int m = 0; m < 7; ++m)
                    for (int q = 0; q < 7; ++q)
                        p.set_known(i, 10 + 7 * c + m, 10 + 7 * c + q, acts[c].matrices[i][q][m]);
    }
    return p;
}

const FusionRing& e4_ring() {
    static const FusionRing ring = complete_partial_ring(e4_instance()).canonical();
    return ring;
}

const FusionRing& e16_6_ring() {
    static const FusionRing ring = complete_partial_ring(e16_6_instance()).canonical();
    return ring;
}

namespace {

FusionRing with_universal_grading(const FusionRing& ring) {
    auto g = universal_grading(ring).as_grading();
    if (g.group.factor_count() != 1)
        throw Error(ErrorKind::ConstraintViolation, "universal grading " + g.group.type_string() + " is not cyclic");
    return ring.with_grading(g);
}

}  // namespace

int row_count() { return 14; }

int default_N(int row) {
    switch (row) {
        case 2: return 2;
        case 3: case 4: case 5: return 1;
        case 7: return 2;
        default: return 0;
    }
}

TheoremRow theorem_row(const TheoremRowSpec& spec_in) {
    TheoremRowSpec spec = spec_in;
    if (spec.row < 1 || spec.row > row_count())
        throw Error(ErrorKind::MalformedInput, "row must be between 1 and 14");
    if (spec.M < 1) throw Error(ErrorKind::MalformedInput, "M must be positive");
    if (spec.N == 0) spec.N = default_N(spec.row);
    const int N = spec.N, M = spec.M;
    auto need_N = [&](int lo) {
        if (N < lo) throw Error(ErrorKind::MalformedInput, "row " + std::to_string(spec.row) + " needs N >= " + std::to_string(lo));
    };
    TheoremRow out;
    auto Z = [](std::int64_t m) { return pointed_ring(cyclic(m)); };
    auto one_one = [&](const FusionRing& c, const std::string& cname, std::int64_t m) {
        out.steps.push_back("base " + cname);
        out.steps.push_back("deligne_product with Vec(Z_" + std::to_string(m) + ")");
        auto prod = deligne_product(c, Z(m));
        out.steps.push_back("one_one_subring");
        return one_one_subring(prod, *prod.grading());
    };
    auto quotient = [&](const FusionRing& r, const std::string& g_label, std::string& gen) {
        int g = r.index_of(g_label);
        auto h = cyclic_subgroup(r, g);
        out.steps.push_back("dequiv_free by <" + g_label + ">");
        gen = orbit_label(r, h, r.index_of(gen));
        return dequiv_free(r, h);
    };
    auto ad = [&](AdeFamily f, int size) {
        AdeSpec s{f, size};
        out.adjoint_name = ade_name(s);
        out.expected_adjoint = ade_ring(s);
    };
    std::string gen;
    std::int64_t grade = 1;
    const std::string m2 = std::to_string(2 * M);
    switch (spec.row) {
        case 1:
            out.name = "Vec(Z_M)";
            out.steps.push_back("pointed_ring Z_" + std::to_string(M));
            out.ring = Z(M);
            gen = M > 1 ? "1" : "0";
            grade = M;
            out.adjoint_name = "trivial";
            out.expected_adjoint = pointed_ring(trivial_group());
            break;
        case 2: {
            need_N(1);
            out.name = "ad(A_2N) x Vec(Z_M)";
            AdeSpec s{AdeFamily::AdA, 2 * N};
            out.steps.push_back("base " + ade_name(s));
            out.steps.push_back("deligne_product with Vec(Z_" + std::to_string(M) + ")");
            out.ring = deligne_product(ade_ring(s), Z(M));
            gen = "f" + std::to_string(2 * N - 2) + "|" + (M > 1 ? "1" : "0");
            grade = M;
            ad(AdeFamily::AdA, 2 * N);
            break;
        }
        case 3:
            need_N(1);
            out.name = "[A_2N+1 x Vec(Z_2M)]_1x1";
            out.ring = one_one(ade_ring({AdeFamily::A, 2 * N + 1}), "A_" + std::to_string(2 * N + 1), 2 * M);
            gen = "f1|1";
            grade = 2 * M;
            ad(AdeFamily::AdA, 2 * N + 1);
            break;
        case 4: {
            need_N(1);
            out.name = "[A_4N+1 x Vec(Z_4M)]_1x1 / <f_4N x 2M>";
            auto r = one_one(ade_ring({AdeFamily::A, 4 * N + 1}), "A_" + std::to_string(4 * N + 1), 4 * M);
            gen = "f1|1";
            out.ring = quotient(r, "f" + std::to_string(4 * N) + "|" + m2, gen);
            grade = 2 * M;
            ad(AdeFamily::AdA, 4 * N + 1);
            break;
        }
        case 5: {
            need_N(1);
            out.name = "[A_4N+3 x IVec(Z_4M)]_1x1 / <f_4N+2 x 2M>";
            auto r = one_one(ade_ring({AdeFamily::A, 4 * N + 3}), "A_" + std::to_string(4 * N + 3), 4 * M);
            gen = "f1|1";
            out.ring = quotient(r, "f" + std::to_string(4 * N + 2) + "|" + m2, gen);
            grade = 2 * M;
            ad(AdeFamily::AdA, 4 * N + 3);
            break;
        }
        case 6: {
            out.name = "[A_3 x IVec(Z_8M)]_1x1 / <f_2 x 4M>";
            auto r = one_one(ade_ring({AdeFamily::A, 3}), "A_3", 8 * M);
            gen = "f1|1";
            out.ring = quotient(r, "f2|" + std::to_string(4 * M), gen);
            grade = 4 * M;
            ad(AdeFamily::AdA, 3);
            break;
        }
        case 7:
            need_N(2);
            out.name = "[D_2N x Vec(Z_2M)]_1x1";
            out.ring = one_one(ade_ring({AdeFamily::D, 2 * N}), "D_" + std::to_string(2 * N), 2 * M);
            gen = "f1|1";
            grade = 2 * M;
            ad(AdeFamily::AdD, 2 * N);
            break;
        case 8: {
            out.name = "[D_4 x Vec(Z_18M)]_1x1 / <P x 6M>";
            auto r = one_one(ade_ring({AdeFamily::D, 4}), "D_4", 18 * M);
            gen = "f1|1";
            out.ring = quotient(r, "P|" + std::to_string(6 * M), gen);
            grade = 6 * M;
            ad(AdeFamily::AdD, 4);
            break;
        }
        case 9:
            out.name = "[E_6 x Vec(Z_2M)]_1x1";
            out.ring = one_one(ade_ring({AdeFamily::E6, 0}), "E_6", 2 * M);
            gen = "f1|1";
            grade = 2 * M;
            ad(AdeFamily::AdE6, 0);
            break;
        case 10: {
            out.name = "[E_6 x IVec(Z_4M)]_1x1 / <Z x 2M>";
            auto r = one_one(ade_ring({AdeFamily::E6, 0}), "E_6", 4 * M);
            gen = "f1|1";
            out.ring = quotient(r, "Z|" + m2, gen);
            grade = 2 * M;
            ad(AdeFamily::AdE6, 0);
            break;
        }
        case 11:
            out.name = "[E_8 x Vec(Z_2M)]_1x1";
            out.ring = one_one(ade_ring({AdeFamily::E8, 0}), "E_8", 2 * M);
            gen = "f1|1";
            grade = 2 * M;
            ad(AdeFamily::AdE8, 0);
            break;
        case 12:
            out.name = "[E4 x Vec(Z_4M)]_1x1";
            out.ring = one_one(e4_ring(), "E4", 4 * M);
            gen = std::string(kE4Generator) + "|1";
            grade = 4 * M;
            ad(AdeFamily::AdA, 7);
            break;
        case 13: {
            out.name = "[E4 x IVec(Z_16M)]_1x1 / <4 x 8M>";
            auto r = one_one(e4_ring(), "E4", 16 * M);
            gen = std::string(kE4Generator) + "|1";
            out.ring = quotient(r, "4|" + std::to_string(8 * M), gen);
            grade = 8 * M;
            ad(AdeFamily::AdA, 7);
            break;
        }
        default:
            out.name = "[E16,6 x Vec(Z_6M)]_1x1";
            out.ring = one_one(with_universal_grading(e16_6_ring()), "E16,6 with its Z_6 grading", 6 * M);
            gen = std::string(kE16_6Generator) + "|1";
            grade = 6 * M;
            ad(AdeFamily::AdD, 10);
            break;
    }
    out.spec = spec;
    out.generator = out.ring.index_of(gen);
    out.expected_grading = cyclic(grade);
    return out;
}

}  // namespace fusion
