#include "fusion/ring_ops.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

#include "fusion/error.hpp"

namespace fusion {

namespace {

std::string fmt_indices(const FusionRing& ring, std::initializer_list<int> idx) {
    std::ostringstream os;
    bool first = true;
    for (int i : idx) {
        os << (first ? "" : ",") << ring.label(i);
        first = false;
    }
    return os.str();
}

}  // namespace

bool grading_is_multiplicative(const FusionRing& ring, const Grading& g) {
    if (static_cast<int>(g.deg.size()) != ring.rank()) return false;
    if (g.deg[ring.unit()] != g.group.identity()) return false;
    for (int i = 0; i < ring.rank(); ++i) {
        if (g.group.reduce(g.deg[ring.dual(i)]) != g.group.negate(g.deg[i])) return false;
        for (int j = 0; j < ring.rank(); ++j) {
            auto dij = g.group.add(g.deg[i], g.deg[j]);
            for (const auto& t : ring.product(i, j))
                if (g.group.reduce(g.deg[t.k]) != dij) return false;
        }
    }
    return true;
}

VerificationReport verify_axioms(const FusionRing& ring) {
    VerificationReport rep;
    const int n = ring.rank();
    const int u = ring.unit();
    auto add = [&](std::string id, std::vector<int> idx, std::string detail) {
        rep.pass = false;
        rep.violations.push_back({std::move(id), std::move(idx), std::move(detail)});
    };
    if (ring.dual(u) != u) add("duality", {u}, "unit is not self-dual");
    for (int j = 0; j < n; ++j) {
        for (int k = 0; k < n; ++k) {
            std::int64_t want = (j == k) ? 1 : 0;
            if (ring.N(u, j, k) != want)
                add("unit", {u, j, k}, "N(" + fmt_indices(ring, {u, j, k}) + ") != delta");
            if (ring.N(j, u, k) != want)
                add("unit", {j, u, k}, "N(" + fmt_indices(ring, {j, u, k}) + ") != delta");
        }
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            std::int64_t want = (j == ring.dual(i)) ? 1 : 0;
            if (ring.N(i, j, u) != want)
                add("duality", {i, j}, "N(" + fmt_indices(ring, {i, j, u}) + ") = " +
                                           std::to_string(ring.N(i, j, u)));
        }
    for (const auto& e : ring.entries()) {
        if (ring.N(ring.dual(e.i), e.k, e.j) != e.n)
            add("frobenius", {e.i, e.j, e.k},
                "N(" + fmt_indices(ring, {e.i, e.j, e.k}) + ") != N(" +
                    fmt_indices(ring, {ring.dual(e.i), e.k, e.j}) + ")");
        if (ring.N(e.k, ring.dual(e.j), e.i) != e.n)
            add("frobenius", {e.i, e.j, e.k},
                "N(" + fmt_indices(ring, {e.i, e.j, e.k}) + ") != N(" +
                    fmt_indices(ring, {e.k, ring.dual(e.j), e.i}) + ")");
    }
    std::vector<std::int64_t> lhs(n), rhs(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                std::fill(lhs.begin(), lhs.end(), 0);
                std::fill(rhs.begin(), rhs.end(), 0);
                for (const auto& a : ring.product(i, j))
                    for (const auto& b : ring.product(a.k, k)) lhs[b.k] += a.n * b.n;
                for (const auto& a : ring.product(j, k))
                    for (const auto& b : ring.product(i, a.k)) rhs[b.k] += a.n * b.n;
                for (int l = 0; l < n; ++l)
                    if (lhs[l] != rhs[l])
                        add("associativity", {i, j, k, l},
                            "(" + fmt_indices(ring, {i, j}) + ")" + ring.label(k) + " vs " + ring.label(i) +
                                "(" + fmt_indices(ring, {j, k}) + ") at " + ring.label(l) + ": " +
                                std::to_string(lhs[l]) + " != " + std::to_string(rhs[l]));
            }
    if (ring.grading()) {
        const auto& g = *ring.grading();
        if (g.deg[u] != g.group.identity()) add("grading", {u}, "unit has nonzero degree");
        for (int i = 0; i < n; ++i) {
            if (g.deg[ring.dual(i)] != g.group.negate(g.deg[i]))
                add("grading", {i}, "deg of dual is not inverse for " + ring.label(i));
            for (int j = 0; j < n; ++j) {
                auto dij = g.group.add(g.deg[i], g.deg[j]);
                for (const auto& t : ring.product(i, j))
                    if (g.deg[t.k] != dij)
                        add("grading", {i, j, t.k}, "degree not multiplicative at (" +
                                                        fmt_indices(ring, {i, j, t.k}) + ")");
            }
        }
    }
    return rep;
}

double acceptance_tolerance() {
    if (const char* env = std::getenv("FR_TOLERANCE")) {
        char* end = nullptr;
        double v = std::strtod(env, &end);
        if (end != env && v > 0) return v;
    }
    return 1e-6;
}

FPDimVector fp_dims(const FusionRing& ring, double tolerance, int max_iterations) {
    const int n = ring.rank();
    // S[k][j] = sum_i N_ij^k, accumulated sparsely as (k, j, w)
    std::map<std::pair<int, int>, double> acc;
    for (const auto& e : ring.entries()) acc[{e.k, e.j}] += static_cast<double>(e.n);
    std::vector<std::pair<std::pair<int, int>, double>> S(acc.begin(), acc.end());
    std::vector<double> v(n, 1.0), w(n);
    bool converged = false;
    for (int it = 0; it < max_iterations; ++it) {
        std::fill(w.begin(), w.end(), 0.0);
        for (const auto& [kj, s] : S) w[kj.first] += s * v[kj.second];
        for (int i = 0; i < n; ++i) w[i] += v[i];
        double scale = w[ring.unit()];
        if (!(scale > 0)) break;
        double delta = 0;
        for (int i = 0; i < n; ++i) {
            w[i] /= scale;
            delta = std::max(delta, std::abs(w[i] - v[i]));
        }
        v.swap(w);
        if (delta < tolerance * 1e-3) {
            converged = true;
            break;
        }
    }
    if (!converged) throw Error(ErrorKind::NonConvergence, "power iteration did not converge");
    FPDimVector out;
    out.dims = v;
    double residual = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            double s = 0;
            for (const auto& t : ring.product(i, j)) s += static_cast<double>(t.n) * v[t.k];
            residual = std::max(residual, std::abs(v[i] * v[j] - s));
        }
    out.residual = residual;
    double maxd = *std::max_element(v.begin(), v.end());
    for (double d : v)
        if (d < 1 - tolerance) throw Error(ErrorKind::NonConvergence, "dimension below 1");
    if (residual > 1e-6 * maxd * maxd)
        throw Error(ErrorKind::NonConvergence, "dimension residual above tolerance");
    return out;
}

double global_dimension(const FusionRing&, const FPDimVector& dims) {
    double s = 0;
    for (double d : dims.dims) s += d * d;
    return s;
}

ObjectVector decompose_word(const FusionRing& ring, const Word& word) {
    ObjectVector cur = ObjectVector::simple(ring.rank(), ring.unit());
    for (const auto& [idx, dualed] : word) {
        if (idx < 0 || idx >= ring.rank()) throw Error(ErrorKind::MalformedInput, "word index out of range");
        int s = dualed ? ring.dual(idx) : idx;
        cur = multiply(ring, cur, ObjectVector::simple(ring.rank(), s));
    }
    return cur;
}

KNormalReport is_k_normal(const FusionRing& ring, int x, int k_max) {
    if (x < 0 || x >= ring.rank()) throw Error(ErrorKind::MalformedInput, "object index out of range");
    if (k_max < 1) throw Error(ErrorKind::MalformedInput, "k_max must be positive");
    const int n = ring.rank();
    KNormalReport rep;
    rep.k_max = k_max;
    ObjectVector X = ObjectVector::simple(n, x);
    ObjectVector Xd = ObjectVector::simple(n, ring.dual(x));
    ObjectVector P = X, Q = Xd;
    for (int k = 1; k <= k_max; ++k) {
        if (k > 1) {
            P = multiply(ring, P, X);
            Q = multiply(ring, Q, Xd);
        }
        rep.equal.push_back(multiply(ring, P, Q) == multiply(ring, Q, P));
    }
    for (int K = k_max; K >= 1 && rep.equal[K - 1]; --K) rep.K = K;
    return rep;
}

std::vector<int> subring_generated(const FusionRing& ring, const std::vector<int>& seeds) {
    const int n = ring.rank();
    std::vector<char> in(n, 0);
    std::vector<int> members;
    auto push = [&](int i) {
        if (!in[i]) {
            in[i] = 1;
            members.push_back(i);
        }
    };
    push(ring.unit());
    for (int s : seeds) {
        if (s < 0 || s >= n) throw Error(ErrorKind::MalformedInput, "seed index out of range");
        push(s);
        push(ring.dual(s));
    }
    for (std::size_t a = 0; a < members.size(); ++a) {
        for (std::size_t b = 0; b <= a; ++b) {
            int i = members[a], j = members[b];
            for (const auto& t : ring.product(i, j)) {
                push(t.k);
                push(ring.dual(t.k));
            }
            for (const auto& t : ring.product(j, i)) {
                push(t.k);
                push(ring.dual(t.k));
            }
        }
    }
    std::sort(members.begin(), members.end());
    return members;
}

bool is_generator(const FusionRing& ring, int x) {
    return static_cast<int>(subring_generated(ring, {x}).size()) == ring.rank();
}

std::vector<int> adjoint_subring(const FusionRing& ring) {
    std::vector<int> seeds;
    for (int i = 0; i < ring.rank(); ++i)
        for (const auto& t : ring.product(i, ring.dual(i))) seeds.push_back(t.k);
    return subring_generated(ring, seeds);
}

FusionRing restrict_ring(const FusionRing& ring, const std::vector<int>& subset_in) {
    std::vector<int> subset = subset_in;
    std::sort(subset.begin(), subset.end());
    subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
    std::vector<int> pos(ring.rank(), -1);
    for (std::size_t p = 0; p < subset.size(); ++p) pos[subset[p]] = static_cast<int>(p);
    if (pos[ring.unit()] < 0) throw Error(ErrorKind::MalformedInput, "subset does not contain the unit");
    std::vector<std::string> labels;
    std::vector<int> dual;
    std::vector<Entry> entries;
    for (int i : subset) {
        labels.push_back(ring.label(i));
        if (pos[ring.dual(i)] < 0) throw Error(ErrorKind::MalformedInput, "subset is not closed under duals");
        dual.push_back(pos[ring.dual(i)]);
        for (int j : subset)
            for (const auto& t : ring.product(i, j)) {
                if (pos[t.k] < 0) throw Error(ErrorKind::MalformedInput, "subset is not closed under fusion");
                entries.push_back({pos[i], pos[j], pos[t.k], t.n});
            }
    }
    std::optional<Grading> g;
    if (ring.grading()) {
        Grading gg{ring.grading()->group, {}};
        for (int i : subset) gg.deg.push_back(ring.grading()->deg[i]);
        g = gg;
    }
    return FusionRing(labels, pos[ring.unit()], dual, entries, g);
}

InvertiblesReport invertibles(const FusionRing& ring) {
    InvertiblesReport rep;
    for (int i = 0; i < ring.rank(); ++i) {
        auto p = ring.product(i, ring.dual(i));
        if (p.size() == 1 && p[0].k == ring.unit() && p[0].n == 1) rep.elements.push_back(i);
    }
    std::vector<int> pos(ring.rank(), -1);
    for (std::size_t p = 0; p < rep.elements.size(); ++p) pos[rep.elements[p]] = static_cast<int>(p);
    rep.table.assign(rep.elements.size(), std::vector<int>(rep.elements.size(), -1));
    for (std::size_t a = 0; a < rep.elements.size(); ++a)
        for (std::size_t b = 0; b < rep.elements.size(); ++b) {
            auto p = ring.product(rep.elements[a], rep.elements[b]);
            if (p.size() != 1 || p[0].n != 1 || pos[p[0].k] < 0)
                throw Error(ErrorKind::InconsistentComponents, "product of invertibles is not invertible");
            rep.table[a][b] = pos[p[0].k];
        }
    rep.abelian = is_commutative_table(rep.table);
    if (rep.abelian) {
        auto dec = decompose_abelian_table(rep.table, pos[ring.unit()]);
        rep.group = dec.group;
        rep.coords = dec.coords;
    }
    return rep;
}

UniversalGrading universal_grading(const FusionRing& ring) {
    const int n = ring.rank();
    auto ad = adjoint_subring(ring);
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> root = [&](int x) { return parent[x] == x ? x : parent[x] = root(parent[x]); };
    for (int a : ad)
        for (int j = 0; j < n; ++j)
            for (const auto& t : ring.product(a, j)) {
                int r1 = root(j), r2 = root(t.k);
                if (r1 != r2) parent[std::max(r1, r2)] = std::min(r1, r2);
            }
    UniversalGrading ug;
    ug.component.assign(n, -1);
    std::vector<int> comp_of_root(n, -1);
    std::vector<int> reps;
    for (int i = 0; i < n; ++i) {
        int r = root(i);
        if (comp_of_root[r] < 0) {
            comp_of_root[r] = static_cast<int>(reps.size());
            reps.push_back(i);
        }
        ug.component[i] = comp_of_root[r];
    }
    const int c = static_cast<int>(reps.size());
    ug.component_count = c;
    std::vector<std::vector<int>> table(c, std::vector<int>(c, -1));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int ci = ug.component[i], cj = ug.component[j];
            for (const auto& t : ring.product(i, j)) {
                int ck = ug.component[t.k];
                if (table[ci][cj] < 0)
                    table[ci][cj] = ck;
                else if (table[ci][cj] != ck)
                    throw Error(ErrorKind::InconsistentComponents,
                                "component product is not single-valued at (" + ring.label(i) + "," +
                                    ring.label(j) + ")");
            }
        }
    for (auto& row : table)
        for (int v : row)
            if (v < 0) throw Error(ErrorKind::InconsistentComponents, "component product undefined");
    auto dec = decompose_abelian_table(table, ug.component[ring.unit()]);
    ug.group = dec.group;
    for (int i = 0; i < n; ++i) ug.deg.push_back(dec.coords[ug.component[i]]);
    return ug;
}

std::vector<std::vector<std::int64_t>> simple_signatures(const FusionRing& ring) {
    const int n = ring.rank();
    auto dims = fp_dims(ring);
    std::optional<UniversalGrading> ug;
    try {
        ug = universal_grading(ring);
    } catch (const Error&) {
    }
    std::vector<std::vector<std::int64_t>> sig(n);
    for (int i = 0; i < n; ++i) {
        auto& s = sig[i];
        s.push_back(std::llround(dims.dims[i] * 1e5));
        s.push_back(ring.dual(i) == i ? 1 : 2);
        s.push_back(ug ? ug->group.element_order(ug->deg[i]) : 0);
        auto p = ring.product(i, ring.dual(i));
        std::int64_t sq = 0;
        for (const auto& t : p) sq += t.n * t.n;
        s.push_back(static_cast<std::int64_t>(p.size()));
        s.push_back(sq);
        auto q = ring.product(i, i);
        std::int64_t sq2 = 0;
        for (const auto& t : q) sq2 += t.n * t.n;
        s.push_back(static_cast<std::int64_t>(q.size()));
        s.push_back(sq2);
        s.push_back(ring.N(i, i, i));
    }
    return sig;
}

namespace {

using Bits = std::vector<std::uint64_t>;

struct Domains {
    int n;
    std::vector<Bits> d;
    Domains(int n_) : n(n_), d(n_, Bits((n_ + 63) / 64, 0)) {}
    static bool test(const Bits& b, int x) { return (b[x >> 6] >> (x & 63)) & 1; }
    static void set(Bits& b, int x) { b[x >> 6] |= (std::uint64_t{1} << (x & 63)); }
    static void clear(Bits& b, int x) { b[x >> 6] &= ~(std::uint64_t{1} << (x & 63)); }
    static int count(const Bits& b) {
        int c = 0;
        for (auto w : b) c += __builtin_popcountll(w);
        return c;
    }
    static int first(const Bits& b) {
        for (std::size_t w = 0; w < b.size(); ++w)
            if (b[w]) return static_cast<int>(w * 64 + __builtin_ctzll(b[w]));
        return -1;
    }
};

struct RingIso {
    const FusionRing& A;
    const FusionRing& B;
    int n;
    std::size_t limit;
    std::vector<std::vector<int>> results;

    struct State {
        Domains dom;
        std::vector<int> sigma;
        std::vector<int> assigned;
    };

    bool assign(State& s, int i, int b) {
        std::vector<std::pair<int, int>> queue{{i, b}};
        while (!queue.empty()) {
            auto [x, y] = queue.back();
            queue.pop_back();
            if (s.sigma[x] >= 0) {
                if (s.sigma[x] != y) return false;
                continue;
            }
            if (!Domains::test(s.dom.d[x], y)) return false;
            s.sigma[x] = y;
            s.assigned.push_back(x);
            std::fill(s.dom.d[x].begin(), s.dom.d[x].end(), 0);
            Domains::set(s.dom.d[x], y);
            for (int z = 0; z < n; ++z)
                if (z != x && s.sigma[z] < 0) Domains::clear(s.dom.d[z], y);
            std::vector<int> touched;
            auto restrict_to = [&](int k, const std::vector<std::pair<int, std::int64_t>>& allowed_terms,
                                   std::int64_t mu) {
                Bits keep(s.dom.d[k].size(), 0);
                for (const auto& [c, m] : allowed_terms)
                    if (m == mu) Domains::set(keep, c);
                for (std::size_t w = 0; w < keep.size(); ++w) s.dom.d[k][w] &= keep[w];
                touched.push_back(k);
            };
            int xd = A.dual(x);
            {
                Bits keep(s.dom.d[xd].size(), 0);
                Domains::set(keep, B.dual(y));
                for (std::size_t w = 0; w < keep.size(); ++w) s.dom.d[xd][w] &= keep[w];
                touched.push_back(xd);
            }
            std::vector<int> snapshot = s.assigned;
            for (int j : snapshot) {
                int bj = s.sigma[j];
                for (int pass = 0; pass < 2; ++pass) {
                    int p = pass == 0 ? x : j, q = pass == 0 ? j : x;
                    int bp = s.sigma[p], bq = s.sigma[q];
                    auto pa = A.product(p, q);
                    auto pb = B.product(bp, bq);
                    if (pa.size() != pb.size()) return false;
                    std::vector<std::pair<int, std::int64_t>> bt;
                    for (const auto& t : pb) bt.push_back({t.k, t.n});
                    for (const auto& t : pa) restrict_to(t.k, bt, t.n);
                    if (p == q) break;
                }
                (void)bj;
            }
            for (int k : touched) {
                int c = Domains::count(s.dom.d[k]);
                if (c == 0) return false;
                if (c == 1 && s.sigma[k] < 0) queue.push_back({k, Domains::first(s.dom.d[k])});
            }
        }
        return true;
    }

    bool full_check(const std::vector<int>& sigma) const {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                auto pa = A.product(i, j);
                auto pb = B.product(sigma[i], sigma[j]);
                if (pa.size() != pb.size()) return false;
                for (const auto& t : pa)
                    if (B.N(sigma[i], sigma[j], sigma[t.k]) != t.n) return false;
            }
        return true;
    }

    void search(State s) {
        if (limit && results.size() >= limit) return;
        int best = -1, best_count = 0;
        for (int i = 0; i < n; ++i) {
            if (s.sigma[i] >= 0) continue;
            int c = Domains::count(s.dom.d[i]);
            if (best < 0 || c < best_count) {
                best = i;
                best_count = c;
            }
        }
        if (best < 0) {
            if (full_check(s.sigma)) results.push_back(s.sigma);
            return;
        }
        Bits cand = s.dom.d[best];
        for (int b = 0; b < n; ++b) {
            if (!Domains::test(cand, b)) continue;
            State t = s;
            if (assign(t, best, b)) search(std::move(t));
            if (limit && results.size() >= limit) return;
        }
    }
};

}  // namespace

std::vector<std::vector<int>> find_isomorphisms(const FusionRing& a, const FusionRing& b, std::size_t limit) {
    if (a.rank() != b.rank()) return {};
    const int n = a.rank();
    auto sa = simple_signatures(a);
    auto sb = simple_signatures(b);
    {
        auto ca = sa, cb = sb;
        std::sort(ca.begin(), ca.end());
        std::sort(cb.begin(), cb.end());
        if (ca != cb) return {};
    }
    RingIso iso{a, b, n, limit, {}};
    RingIso::State s{Domains(n), std::vector<int>(n, -1), {}};
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (sa[i] == sb[j]) Domains::set(s.dom.d[i], j);
    if (!iso.assign(s, a.unit(), b.unit())) return {};
    iso.search(std::move(s));
    std::sort(iso.results.begin(), iso.results.end());
    return iso.results;
}

bool are_isomorphic(const FusionRing& a, const FusionRing& b) {
    return !find_isomorphisms(a, b, 1).empty();
}

Digraph fusion_graph(const FusionRing& ring, int x) {
    if (x < 0 || x >= ring.rank()) throw Error(ErrorKind::MalformedInput, "object index out of range");
    Digraph g;
    g.nodes = ring.rank();
    g.names = ring.labels();
    for (int i = 0; i < ring.rank(); ++i)
        for (const auto& t : ring.product(x, i)) g.edges.push_back({{i, t.k}, t.n});
    std::sort(g.edges.begin(), g.edges.end());
    return g;
}

namespace {

struct GraphIso {
    int n;
    std::vector<std::vector<std::int64_t>> mg, mh;
    std::optional<std::vector<int>> found;

    bool consistent(const std::vector<int>& sigma, int x) const {
        int y = sigma[x];
        for (int j = 0; j < n; ++j) {
            if (sigma[j] < 0) continue;
            if (mg[x][j] != mh[y][sigma[j]] || mg[j][x] != mh[sigma[j]][y]) return false;
        }
        return true;
    }

    void search(std::vector<int>& sigma, std::vector<char>& used, const std::vector<std::vector<int>>& cand,
                const std::vector<int>& order, std::size_t pos) {
        if (found) return;
        if (pos == order.size()) {
            found = sigma;
            return;
        }
        int x = order[pos];
        for (int y : cand[x]) {
            if (used[y]) continue;
            sigma[x] = y;
            used[y] = 1;
            if (consistent(sigma, x)) search(sigma, used, cand, order, pos + 1);
            used[y] = 0;
            sigma[x] = -1;
            if (found) return;
        }
    }
};

std::vector<std::vector<std::int64_t>> adjacency(const Digraph& g) {
    std::vector<std::vector<std::int64_t>> m(g.nodes, std::vector<std::int64_t>(g.nodes, 0));
    for (const auto& e : g.edges) m[e.first.first][e.first.second] += e.second;
    return m;
}

std::vector<std::int64_t> profile(const std::vector<std::vector<std::int64_t>>& m, int x) {
    std::vector<std::int64_t> out, in;
    for (std::size_t j = 0; j < m.size(); ++j) {
        if (m[x][j]) out.push_back(m[x][j]);
        if (m[j][x]) in.push_back(m[j][x]);
    }
    std::sort(out.begin(), out.end());
    std::sort(in.begin(), in.end());
    std::vector<std::int64_t> p{static_cast<std::int64_t>(out.size()), static_cast<std::int64_t>(in.size()),
                                m[x][x]};
    p.insert(p.end(), out.begin(), out.end());
    p.push_back(-1);
    p.insert(p.end(), in.begin(), in.end());
    return p;
}

}  // namespace

std::optional<std::vector<int>> digraph_isomorphism(const Digraph& g, const Digraph& h) {
    if (g.nodes != h.nodes) return std::nullopt;
    GraphIso iso{g.nodes, adjacency(g), adjacency(h), std::nullopt};
    const int n = g.nodes;
    std::vector<std::vector<std::int64_t>> pg(n), ph(n);
    for (int i = 0; i < n; ++i) {
        pg[i] = profile(iso.mg, i);
        ph[i] = profile(iso.mh, i);
    }
    // refine profiles with neighbour profiles
    for (int round = 0; round < 3; ++round) {
        auto refine = [&](const std::vector<std::vector<std::int64_t>>& m,
                          const std::vector<std::vector<std::int64_t>>& p) {
            std::vector<std::vector<std::int64_t>> q(n);
            std::map<std::vector<std::int64_t>, std::int64_t> ids;
            for (const auto& v : pg) ids.emplace(v, 0);
            for (const auto& v : ph) ids.emplace(v, 0);
            std::int64_t next = 0;
            for (auto& [k, v] : ids) v = next++;
            for (int i = 0; i < n; ++i) {
                std::vector<std::int64_t> outs, ins;
                for (int j = 0; j < n; ++j) {
                    if (m[i][j]) outs.push_back(ids[p[j]] * 1000 + m[i][j]);
                    if (m[j][i]) ins.push_back(ids[p[j]] * 1000 + m[j][i]);
                }
                std::sort(outs.begin(), outs.end());
                std::sort(ins.begin(), ins.end());
                q[i] = {ids[p[i]]};
                q[i].insert(q[i].end(), outs.begin(), outs.end());
                q[i].push_back(-1);
                q[i].insert(q[i].end(), ins.begin(), ins.end());
            }
            return q;
        };
        auto ng = refine(iso.mg, pg);
        auto nh = refine(iso.mh, ph);
        pg = std::move(ng);
        ph = std::move(nh);
    }
    {
        auto a = pg, b = ph;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b) return std::nullopt;
    }
    std::vector<std::vector<int>> cand(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (pg[i] == ph[j]) cand[i].push_back(j);
    // BFS order from the most constrained node keeps partial maps connected
    std::vector<int> order;
    std::vector<char> seen(n, 0);
    while (static_cast<int>(order.size()) < n) {
        int start = -1;
        for (int i = 0; i < n; ++i)
            if (!seen[i] && (start < 0 || cand[i].size() < cand[start].size())) start = i;
        std::vector<int> q{start};
        seen[start] = 1;
        for (std::size_t p = 0; p < q.size(); ++p) {
            int x = q[p];
            order.push_back(x);
            for (int j = 0; j < n; ++j)
                if (!seen[j] && (iso.mg[x][j] || iso.mg[j][x])) {
                    seen[j] = 1;
                    q.push_back(j);
                }
        }
    }
    std::vector<int> sigma(n, -1);
    std::vector<char> used(n, 0);
    iso.search(sigma, used, cand, order, 0);
    return iso.found;
}

bool digraph_iso(const Digraph& g, const Digraph& h) { return digraph_isomorphism(g, h).has_value(); }

std::string to_dot(const Digraph& g, const std::string& name) {
    std::ostringstream os;
    os << "digraph " << name << " {\n";
    auto nm = [&](int i) {
        std::string s = i < static_cast<int>(g.names.size()) ? g.names[i] : std::to_string(i);
        return "\"" + s + "\"";
    };
    for (int i = 0; i < g.nodes; ++i) os << "  " << nm(i) << ";\n";
    for (const auto& e : g.edges)
        for (std::int64_t m = 0; m < e.second; ++m)
            os << "  " << nm(e.first.first) << " -> " << nm(e.first.second) << ";\n";
    os << "}\n";
    return os.str();
}

}  // namespace fusion
