// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <string>

#include "reference_graphs.hpp"
#include "fusion/audit.hpp"
#include "fusion/catalog.hpp"
#include "fusion/cohomology.hpp"
#include "fusion/constructions.hpp"
#include "fusion/error.hpp"
#include "fusion/ring_ops.hpp"
#include "fusion/solver.hpp"
#include "oracles.hpp"

using namespace fusion;

namespace {

const double kPi = std::acos(-1.0);

struct Checker {
    std::vector<std::string> failures;
    void expect(bool ok, const std::string& what) {
        if (!ok) failures.push_back(what);
    }
};

bool near(double a, double b, double tol = 1e-4) { return std::abs(a - b) < tol; }

bool contains_dim(const std::vector<double>& v, double x) {
    return std::any_of(v.begin(), v.end(), [&](double y) { return near(x, y); });
}

void dimension_tables(Checker& c) {
    const std::vector<std::tuple<std::string, int, std::string, std::vector<double>>> printed = {
        {"adD", 10, "E7even", {1.96962, 3.70167, 4.98724, 5.67128}},
        {"adD", 10, "E7odd", {2.53209, 3.87939, 7.29086}},
        {"adE6", 0, "E6even", {1, 2.73205}},
        {"adE6", 0, "E6odd", {1.93185}},
        {"adE8", 0, "E8odd", {1.98904, 2.40487, 3.21834, 3.89116}},
    };
    for (const auto& [fam, size, id, dims] : printed) {
        auto got = computed_bimodule_dims(bp_catalog(fam, size), id);
        for (double d : dims) c.expect(contains_dim(got, d), id + " lacks " + std::to_string(d));
    }
    for (const auto& [fam, size] : std::vector<std::pair<std::string, int>>{
             {"adA", 3}, {"adA", 7}, {"adA", 9}, {"adA", 11}, {"adD", 4}, {"adD", 8}, {"adD", 10}, {"adE6", 0}, {"adE8", 0}}) {
        auto e = bp_catalog(fam, size);
        for (const auto& b : e.bimodules) {
            auto got = computed_bimodule_dims(e, b.id);
            for (double d : b.dims) c.expect(contains_dim(got, d), fam + " " + b.id + " lacks " + std::to_string(d));
        }
    }
}

std::vector<int> swaps(const FusionRing& r, const std::vector<std::pair<std::string, std::string>>& s) {
    std::vector<int> f(r.rank());
    std::iota(f.begin(), f.end(), 0);
    for (const auto& [a, b] : s) {
        f[r.index_of(a)] = r.index_of(b);
        f[r.index_of(b)] = r.index_of(a);
    }
    return f;
}

void e4_reconstruction(Checker& c) {
    auto res = complete_partial_ring(e4_instance());
    if (res.raw.size() != 4) std::printf("note: E4 search found %zu raw completions\n", res.raw.size());
    c.expect(res.classes.size() == 1, "E4 completions form " + std::to_string(res.classes.size()) + " classes");
    if (res.classes.empty()) return;
    const auto& r = res.canonical();
    auto auts = find_isomorphisms(r, r);
    c.expect(auts.size() == 4, "automorphism group has order " + std::to_string(auts.size()));
    for (const auto& f : {swaps(r, {{"5", "6"}, {"10", "11"}}), swaps(r, {{"2", "3"}, {"5", "10"}, {"6", "11"}, {"7", "12"}}),
                          swaps(r, {{"2", "3"}, {"5", "11"}, {"6", "10"}, {"7", "12"}})})
        c.expect(std::find(auts.begin(), auts.end(), f) != auts.end(), "a listed automorphism is missing");
    const int x = r.index_of("5");
    c.expect(near(fp_dims(r).dims[x], std::sqrt(2 + std::sqrt(2.0))), "FP dim of 5");
    c.expect(digraph_iso(fusion_graph(r, x), reference_graphs::e4_generator_graph()), "fusion graph of 5 differs from the reference drawing");
    auto kn = is_k_normal(r, x, 8);
    c.expect(kn.K && *kn.K == 2 && !kn.equal[0], "5 is not exactly 2-normal");
}

void e16_6_reconstruction(Checker& c) {
    auto res = complete_partial_ring(e16_6_instance());
    c.expect(res.classes.size() == 1, "E16,6 completions form " + std::to_string(res.classes.size()) + " classes");
    if (res.classes.empty()) return;
    const auto& r = res.canonical();
    c.expect(r.rank() == 24, "rank");
    std::map<std::int64_t, int> sizes;
    for (const auto& d : r.grading()->deg) ++sizes[d[0]];
    c.expect(r.grading()->group.type_string() == "Z_3" && sizes[0] == 10 && sizes[1] == 7 && sizes[2] == 7,
             "grading components are not 10/7/7");
    const int x = r.index_of("a1");
    c.expect(near(fp_dims(r).dims[x], 2 * std::cos(kPi / 18)), "FP dim of a1");
    c.expect(digraph_iso(fusion_graph(r, x), reference_graphs::e16_6_generator_graph()), "fusion graph of a1 differs from the reference drawing");
    auto kn = is_k_normal(r, x, 8);
    c.expect(kn.K && *kn.K == 2 && !kn.equal[0], "a1 is not strictly 2-normal");
}

void cohomology_suite(Checker& c) {
    const FiniteAbelianGroup z2({2}), v4({2, 2}), z33({3, 3});
    for (std::int64_t M = 1; M <= 24; ++M) {
        const std::string m = " at M=" + std::to_string(M);
        c.expect((h_cyclic(2, M, z2, trivial_action(z2, M)).order() == 2) == (M % 2 == 0), "H2(Z_2)" + m);
        if (M % 2 == 0) {
            auto s = h_cyclic(2, M, v4, parse_action("swap", v4, M));
            c.expect(s.type_string() == (M % 4 == 0 ? "Z_2" : "trivial"), "H2(Z_2 x Z_2, swap)" + m);
            auto i = h_cyclic(2, M, z33, parse_action("inv2", z33, M));
            c.expect(i.type_string() == (M % 6 == 0 ? "Z_3" : "trivial"), "H2(Z_3 x Z_3, inv2)" + m);
        }
        c.expect(h3_roots_of_unity(M).order() == M && h3_roots_of_unity(M).factors.size() <= 1, "H3" + m);
    }
    for (std::int64_t M = 1; M <= 6; ++M)
        for (const auto& [A, acts] : std::vector<std::pair<FiniteAbelianGroup, std::vector<std::string>>>{
                 {z2, {"trivial"}}, {v4, {"trivial", "swap"}}, {z33, {"trivial", "inv2", "swap"}}, {FiniteAbelianGroup({4}), {"inv1"}}}) {
            for (const auto& a : acts) {
                GroupAction g;
                try {
                    g = parse_action(a, A, M);
                } catch (const Error&) {
                    continue;
                }
                c.expect(brute_force_h2(M, A, g) == h_cyclic(2, M, A, g), "brute force " + a + " at M=" + std::to_string(M));
            }
        }
}

void separation_suite(Checker& c) {
    struct Pair {
        TheoremRowSpec a, b;
        std::string left, right;
    };
    for (const auto& p : std::vector<Pair>{{{3, 2, 2, ""}, {4, 1, 2, ""}, "Z_2 x Z_2", "Z_4"},
                                           {{3, 2, 4, ""}, {4, 1, 4, ""}, "Z_2 x Z_4", "Z_8"},
                                           {{7, 2, 6, ""}, {8, 0, 2, ""}, "Z_3 x Z_6", "Z_18"},
                                           {{12, 0, 4, ""}, {13, 0, 2, ""}, "Z_2 x Z_4", "Z_8"}}) {
        auto v = separation_check(p.a, p.b);
        c.expect(!v.isomorphic && v.invariant == "invertibles" && v.left == p.left && v.right == p.right,
                 "rows " + std::to_string(p.a.row) + "/" + std::to_string(p.b.row) + ": " + v.left + " vs " + v.right);
    }
    for (int N : {2, 3})
        for (int M : {1, 2}) {
            auto a = theorem_row({7, N, M, "+"}), b = theorem_row({7, N, M, "-"});
            c.expect(!find_isomorphisms(a.ring, b.ring, 1).empty(), "sign variants differ at N=" + std::to_string(N));
        }
}

void audit_suite(Checker& c) {
    for (const auto& r : audit_all(2, 8))
        if (!r.passed()) {
            std::string f;
            for (const auto& n : r.failed_checks()) f += " " + n;
            c.expect(false, "row " + std::to_string(r.spec.row) + " M=" + std::to_string(r.spec.M) + ":" + f);
        }
}

void property_suite(Checker& c) {
    std::vector<FusionRing> rings = {e4_ring(), e16_6_ring()};
    for (auto spec : {AdeSpec{AdeFamily::A, 9}, AdeSpec{AdeFamily::D, 10}, AdeSpec{AdeFamily::E6, 0},
                      AdeSpec{AdeFamily::E8, 0}, AdeSpec{AdeFamily::AdD, 10}, AdeSpec{AdeFamily::AdE8, 0}})
        rings.push_back(ade_ring(spec));
    for (int row = 1; row <= row_count(); ++row)
        for (int M = 1; M <= 2; ++M) rings.push_back(theorem_row({row, 0, M, ""}).ring);

    std::mt19937 rng(20261016);
    int violations = 0;
    for (int t = 0; t < 100000; ++t) {
        const auto& r = rings[t % rings.size()];
        std::uniform_int_distribution<int> pick(0, r.rank() - 1);
        int a = pick(rng), b = pick(rng), d = pick(rng);
        if (!oracle::associative_at(r, a, b, d) || !oracle::frobenius_at(r, a, b, d)) ++violations;
    }
    c.expect(violations == 0, std::to_string(violations) + " spot-check violations");

    auto dim_sum = [](const FusionRing& r) {
        double s = 0;
        for (double x : fp_dims(r).dims) s += x * x;
        return s;
    };
    for (int t = 0; t < 20; ++t) {
        const int n = 2 + static_cast<int>(rng() % 6), m = 2 + static_cast<int>(rng() % 7);
        auto r = deligne_product(verlinde_ring(n), pointed_ring(FiniteAbelianGroup({m})));
        const int s = 1 + static_cast<int>(rng() % (m - 1));
        const int g = r.index_of("f0|" + std::to_string(s));
        std::vector<int> h = {r.unit()};
        for (int cur = g; cur != r.unit(); cur = r.product(cur, g)[0].k) h.push_back(cur);
        std::sort(h.begin(), h.end());
        auto q = dequiv_free(r, h);
        c.expect(q.rank() * static_cast<int>(h.size()) == r.rank(), "dequiv rank identity");
        c.expect(std::abs(dim_sum(q) - dim_sum(r) / h.size()) < 1e-6 * dim_sum(r), "dequiv dim-sum identity");
    }

    auto ad = ade_ring({AdeFamily::AdA, 7});
    for (int t = 0; t < 20; ++t) {
        const int M = 1 + static_cast<int>(rng() % 12), N = 1 + static_cast<int>(rng() % 12);
        auto base = deligne_product(ad, pointed_ring(FiniteAbelianGroup({M})));
        Grading g{FiniteAbelianGroup({M}), {}};
        for (int i = 0; i < base.rank(); ++i) g.deg.push_back({base.grading()->deg[i].back()});
        auto prod = deligne_product(base.with_grading(g), pointed_ring(FiniteAbelianGroup({N})));
        auto s = one_one_subring(prod, *prod.grading());
        c.expect(universal_grading(s).group.isomorphic_to(FiniteAbelianGroup({std::lcm(M, N)})),
                 "lcm grading at (" + std::to_string(M) + ", " + std::to_string(N) + ")");
    }
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<void(Checker&)>>> criteria = {
        {"dimension tables", dimension_tables},
        {"E4 reconstruction", e4_reconstruction},
        {"E16,6 reconstruction", e16_6_reconstruction},
        {"cohomology suite", cohomology_suite},
        {"separation suite", separation_suite},
        {"full audit", audit_suite},
        {"property suite", property_suite},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Checker c;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            criteria[i].second(c);
        } catch (const std::exception& e) {
            c.failures.push_back(std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("%s %zu %s (%.2fs)", c.failures.empty() ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), secs);
        if (!c.failures.empty()) {
            ++failed;
            std::printf(": %s", c.failures.front().c_str());
            if (c.failures.size() > 1) std::printf(" (+%zu more)", c.failures.size() - 1);
        }
        std::printf("\n");
    }
    return failed ? 1 : 0;
}
