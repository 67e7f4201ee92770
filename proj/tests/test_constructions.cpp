#include "doctest.h"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>

#include "fusion/constructions.hpp"
#include "fusion/error.hpp"
#include "fusion/json_io.hpp"
#include "fusion/ring_ops.hpp"
#include "oracles.hpp"

using namespace fusion;

namespace {

FusionRing Z(std::int64_t m) { return pointed_ring(FiniteAbelianGroup({m})); }

FusionRing universally_graded(const FusionRing& r) { return r.with_grading(universal_grading(r).as_grading()); }

double dim_sum(const FusionRing& r) {
    double s = 0;
    for (double d : fp_dims(r).dims) s += d * d;
    return s;
}

std::vector<int> cyclic_closure(const FusionRing& r, int g) {
    std::vector<int> out = {r.unit()};
    int cur = g;
    while (cur != r.unit()) {
        out.push_back(cur);
        auto p = r.product(cur, g);
        REQUIRE(p.size() == 1);
        cur = p[0].k;
    }
    std::sort(out.begin(), out.end());
    return out;
}

ErrorKind kind_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("no error thrown");
    return ErrorKind::MalformedInput;
}

}  // namespace

TEST_CASE("ADE family parsing and labels") {
    CHECK(parse_ade_family("adD") == AdeFamily::AdD);
    CHECK(parse_ade_family("E8") == AdeFamily::E8);
    CHECK(kind_of([] { parse_ade_family("F4"); }) == ErrorKind::UnknownFamily);
    CHECK(kind_of([] { ade_ring({AdeFamily::D, 5}); }) == ErrorKind::MalformedInput);
    CHECK(ade_labels({AdeFamily::D, 6}).back() == "Q");
    CHECK(ade_labels({AdeFamily::A, 3}) == std::vector<std::string>{"f0", "f1", "f2"});
}

TEST_CASE("ADE rings: dims and generator graphs") {
    auto a3 = ade_ring({AdeFamily::A, 3});
    auto d = fp_dims(a3).dims;
    CHECK(d[1] == doctest::Approx(std::sqrt(2.0)));
    CHECK(d[2] == doctest::Approx(1.0));

    for (auto spec : {AdeSpec{AdeFamily::A, 6}, AdeSpec{AdeFamily::D, 4}, AdeSpec{AdeFamily::D, 8},
                      AdeSpec{AdeFamily::E6, 0}, AdeSpec{AdeFamily::E8, 0}}) {
        auto r = ade_ring(spec);
        CAPTURE(ade_name(spec));
        auto adj = dynkin_adjacency(spec);
        auto g = fusion_graph(r, 1);
        for (int i = 0; i < r.rank(); ++i)
            for (int k = 0; k < r.rank(); ++k) CHECK(g.multiplicity(i, k) == adj[i][k]);
        CHECK(universal_grading(r).group.type_string() == "Z_2");
    }

    auto ad4 = ade_ring({AdeFamily::AdD, 4});
    CHECK(ad4.rank() == 3);
    CHECK(are_isomorphic(ad4, Z(3)));
    auto ade6 = ade_ring({AdeFamily::AdE6, 0});
    CHECK(ade6.rank() == 3);
    std::vector<double> dims = fp_dims(ade6).dims;
    std::sort(dims.begin(), dims.end());
    CHECK(dims[0] == doctest::Approx(1.0));
    CHECK(dims[2] == doctest::Approx(2.73205).epsilon(1e-5));
    for (auto f : {AdeFamily::AdA, AdeFamily::AdD, AdeFamily::AdE6, AdeFamily::AdE8}) {
        auto r = ade_ring({f, f == AdeFamily::AdA ? 9 : 8});
        CHECK(universal_grading(r).group.is_trivial());
    }
}

TEST_CASE("deligne product") {
    CHECK(are_isomorphic(deligne_product(Z(2), Z(3)), Z(6)));
    auto a = verlinde_ring(5);
    CHECK(are_isomorphic(deligne_product(a, Z(1)), a));
    auto p = deligne_product(verlinde_ring(7), Z(4));
    CHECK(p.rank() == 28);
    CHECK(verify_axioms(p).pass);
    auto dp = fp_dims(p).dims, da = fp_dims(verlinde_ring(7)).dims;
    for (int i = 0; i < 7; ++i)
        for (int j = 0; j < 4; ++j) CHECK(dp[p.index_of("f" + std::to_string(i) + "|" + std::to_string(j))] == doctest::Approx(da[i]));
    CHECK(invertibles(p).group.isomorphic_to(FiniteAbelianGroup({2, 4})));
    REQUIRE(p.grading());
    CHECK(p.grading()->group.orders() == std::vector<std::int64_t>{2, 4});
}

TEST_CASE("one_one subring") {
    auto a7 = verlinde_ring(7);
    auto p = deligne_product(a7, Z(2));
    auto s = one_one_subring(p, *p.grading());
    CHECK(are_isomorphic(s, a7));

    auto e8 = universally_graded(ade_ring({AdeFamily::E8, 0}));
    auto q = deligne_product(e8, Z(4));
    auto t = one_one_subring(q, *q.grading());
    CHECK(t.rank() == 16);
    CHECK(universal_grading(t).group.type_string() == "Z_4");

    auto c = universally_graded(Z(3));
    auto triv = deligne_product(c, Z(1));
    CHECK(are_isomorphic(one_one_subring(triv, *triv.grading()), c));

    CHECK(kind_of([&] { one_one_subring(a7, *a7.grading()); }) == ErrorKind::MalformedInput);
    Grading bad{FiniteAbelianGroup({2, 2}), std::vector<std::vector<std::int64_t>>(p.rank(), {1, 1})};
    CHECK(kind_of([&] { one_one_subring(p, bad); }) == ErrorKind::ConstraintViolation);
}

TEST_CASE("lcm grading identity") {
    auto ad5 = ade_ring({AdeFamily::AdA, 5});
    for (auto [M, N] : std::vector<std::pair<int, int>>{{2, 3}, {4, 6}, {6, 4}, {5, 5}, {1, 7}}) {
        auto base = deligne_product(ad5, Z(M));
        Grading g{FiniteAbelianGroup({M}), {}};
        for (int i = 0; i < base.rank(); ++i) g.deg.push_back({base.grading()->deg[i].back()});
        auto prod = deligne_product(base.with_grading(g), Z(N));
        auto s = one_one_subring(prod, *prod.grading());
        const int L = std::lcm(M, N);
        CHECK(universal_grading(s).group.isomorphic_to(FiniteAbelianGroup({L})));
        CHECK(s.rank() == ad5.rank() * L);
    }
}

TEST_CASE("dequiv_free") {
    auto z4 = Z(4);
    auto q = dequiv_free(z4, {0, z4.index_of("2")});
    CHECK(are_isomorphic(q, Z(2)));

    auto a7 = verlinde_ring(7);
    try {
        dequiv_free(a7, {0, 6});
        FAIL("expected a fixed point");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::FixedPoint);
        CHECK(std::string(e.what()).find("f3") != std::string::npos);
    }
    CHECK(kind_of([&] { dequiv_free(z4, {0, 1}); }) == ErrorKind::NonSubgroup);
    CHECK(kind_of([&] { dequiv_free(a7, {0, 2}); }) == ErrorKind::NonSubgroup);

    auto p = deligne_product(verlinde_ring(5), Z(8));
    auto s = one_one_subring(p, *p.grading());
    const int h = s.index_of("f4|4");
    auto d = dequiv_free(s, cyclic_closure(s, h));
    CHECK(invertibles(d).group.isomorphic_to(FiniteAbelianGroup({4})));
}

TEST_CASE("dequiv_free identities on random inputs") {
    std::mt19937 rng(2024);
    for (int t = 0; t < 20; ++t) {
        const int n = 2 + static_cast<int>(rng() % 6);
        const int m = 2 + static_cast<int>(rng() % 7);
        auto r = deligne_product(verlinde_ring(n), Z(m));
        const int s = 1 + static_cast<int>(rng() % (m - 1));
        const bool flip = (rng() % 2) && (m / std::gcd(m, s)) % 2 == 0;
        const int g = r.index_of("f" + std::to_string(flip ? n - 1 : 0) + "|" + std::to_string(s));
        auto h = cyclic_closure(r, g);
        auto q = dequiv_free(r, h);
        CAPTURE(n);
        CAPTURE(m);
        CAPTURE(s);
        CHECK(q.rank() * static_cast<int>(h.size()) == r.rank());
        CHECK(dim_sum(q) == doctest::Approx(dim_sum(r) / h.size()));
        CHECK(verify_axioms(q).pass);
    }
}

TEST_CASE("classification rows") {
    CHECK(row_count() == 14);
    auto r = theorem_row({2, 2, 3, ""});
    CHECK(r.ring.rank() == 6);
    CHECK(universal_grading(r.ring).group.type_string() == "Z_3");

    CHECK(universal_grading(theorem_row({6, 0, 1, ""}).ring).group.type_string() == "Z_4");

    auto e4row = theorem_row({12, 0, 1, ""});
    CHECK(are_isomorphic(e4row.ring, e4_ring()));
    CHECK(universal_grading(e4row.ring).group.type_string() == "Z_4");

    for (int row = 1; row <= row_count(); ++row) {
        auto tr = theorem_row({row, 0, 1, ""});
        CAPTURE(row);
        CHECK(verify_axioms(tr.ring).pass);
        CHECK(fp_dims(tr.ring).dims[tr.generator] < 2);
        CHECK_FALSE(tr.steps.empty());
        auto j = theorem_row_to_json(tr);
        CHECK(j["provenance"]["row"] == row);
        CHECK(ring_from_json(j["ring"]) == tr.ring);
    }
    CHECK_THROWS_AS(theorem_row({15, 0, 1, ""}), Error);
    CHECK_THROWS_AS(theorem_row({1, 0, 0, ""}), Error);
}
