#include "doctest.h"

#include <cmath>
#include <random>

#include "fusion/constructions.hpp"
#include "fusion/ring_ops.hpp"
#include "oracles.hpp"

using namespace fusion;

namespace {

std::vector<FusionRing> sample_rings() {
    std::vector<FusionRing> out = {verlinde_ring(6),
                                   ade_ring({AdeFamily::D, 8}),
                                   ade_ring({AdeFamily::E6, 0}),
                                   ade_ring({AdeFamily::E8, 0}),
                                   ade_ring({AdeFamily::AdD, 10}),
                                   e4_ring(),
                                   e16_6_ring(),
                                   deligne_product(verlinde_ring(4), pointed_ring(FiniteAbelianGroup({3})))};
    for (int row = 1; row <= row_count(); ++row) out.push_back(theorem_row({row, 0, 2, ""}).ring);
    return out;
}

}  // namespace

TEST_CASE("random associativity and Frobenius spot checks") {
    std::mt19937 rng(99);
    for (const auto& r : sample_rings()) {
        std::uniform_int_distribution<int> pick(0, r.rank() - 1);
        for (int t = 0; t < 400; ++t) {
            int a = pick(rng), b = pick(rng), c = pick(rng);
            CHECK(oracle::associative_at(r, a, b, c));
            CHECK(oracle::frobenius_at(r, a, b, c));
        }
    }
}

TEST_CASE("FP dims form a positive character") {
    for (const auto& r : sample_rings()) {
        auto d = fp_dims(r).dims;
        CHECK(d[r.unit()] == doctest::Approx(1.0));
        for (int i = 0; i < r.rank(); ++i) {
            CHECK(d[i] >= 1 - 1e-9);
            CHECK(d[r.dual(i)] == doctest::Approx(d[i]));
            for (int j = 0; j < r.rank(); ++j) {
                double s = 0;
                for (const auto& t : r.product(i, j)) s += t.n * d[t.k];
                CHECK(s == doctest::Approx(d[i] * d[j]).epsilon(1e-7));
            }
        }
    }
}

TEST_CASE("universal grading is multiplicative and finest") {
    for (const auto& r : sample_rings()) {
        auto ug = universal_grading(r);
        CHECK(grading_is_multiplicative(r, ug.as_grading()));
        if (r.grading()) CHECK(ug.group.order() % r.grading()->group.order() == 0);
        // the trivial component is the adjoint subring
        std::vector<int> trivial;
        for (int i = 0; i < r.rank(); ++i)
            if (ug.component[i] == ug.component[r.unit()]) trivial.push_back(i);
        CHECK(trivial == adjoint_subring(r));
        CHECK(ug.component_count == ug.group.order());
    }
}

TEST_CASE("deligne product invertibles multiply") {
    std::mt19937 rng(3);
    const std::vector<FusionRing> parts = {verlinde_ring(3), verlinde_ring(5), pointed_ring(FiniteAbelianGroup({2})),
                                           pointed_ring(FiniteAbelianGroup({3})), ade_ring({AdeFamily::D, 4})};
    for (const auto& a : parts)
        for (const auto& b : parts) {
            auto p = deligne_product(a, b);
            auto ia = invertibles(a).group, ib = invertibles(b).group;
            std::vector<std::int64_t> orders = ia.orders();
            orders.insert(orders.end(), ib.orders().begin(), ib.orders().end());
            CHECK(invertibles(p).group.isomorphic_to(FiniteAbelianGroup(orders)));
        }
}

TEST_CASE("K-normality is invariant under relabelling") {
    std::mt19937 rng(17);
    for (int row : {5, 10, 12, 14}) {
        auto tr = theorem_row({row, 0, 1, ""});
        auto perm = oracle::random_permutation(tr.ring.rank(), rng);
        auto q = oracle::permuted(tr.ring, perm);
        auto a = is_k_normal(tr.ring, tr.generator, 6), b = is_k_normal(q, perm[tr.generator], 6);
        CHECK(a.equal == b.equal);
        CHECK(a.K == b.K);
    }
}
