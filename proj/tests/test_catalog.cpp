#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>

#include "fusion/catalog.hpp"
#include "fusion/error.hpp"

using namespace fusion;

namespace {

std::int64_t total(const std::vector<ExtensionRecord>& recs) {
    std::int64_t s = 0;
    for (const auto& r : recs) s += r.count;
    return s;
}

std::int64_t count_for(const std::vector<ExtensionRecord>& recs, const std::string& id) {
    for (const auto& r : recs)
        if (r.bimodule == id) return r.count;
    FAIL("no record for " << id);
    return -1;
}

bool contains_dim(const std::vector<double>& v, double x, double tol = 1e-4) {
    return std::any_of(v.begin(), v.end(), [&](double y) { return std::abs(x - y) < tol; });
}

bool has(const std::vector<std::string>& v, const std::string& s) { return std::find(v.begin(), v.end(), s) != v.end(); }

}  // namespace

TEST_CASE("catalog families and fixtures") {
    CHECK(catalog_families() == std::vector<std::string>{"adA", "adD", "adE6", "adE8"});
    for (const auto& f : catalog_families()) CHECK(catalog_fixture(f).find("cases") != std::string::npos);
    try {
        bp_catalog("adF4", 0);
        FAIL("accepted");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::UnknownFamily);
    }
    CHECK_THROWS_AS(catalog_fixture("adB"), Error);
    for (auto [fam, size] : std::vector<std::pair<std::string, int>>{{"adA", 1}, {"adD", 5}, {"adD", 2}}) {
        try {
            bp_catalog(fam, size);
            FAIL("accepted");
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::MalformedInput);
        }
    }
}

TEST_CASE("Brauer-Picard groups and invertible centres") {
    struct Row {
        std::string family;
        int size;
        std::string bp;
        std::string inv;
        std::size_t bimodules;
    };
    for (const auto& r : std::vector<Row>{{"adA", 2, "trivial", "trivial", 1},
                                          {"adA", 3, "Z_2", "Z_2 x Z_2", 2},
                                          {"adA", 5, "Z_2", "Z_2", 2},
                                          {"adA", 7, "D_8", "Z_2", 8},
                                          {"adA", 11, "Z_2 x Z_2", "Z_2", 4},
                                          {"adD", 4, "Z_2 x Z_2", "Z_3 x Z_3", 4},
                                          {"adD", 8, "Z_2 x Z_2", "trivial", 4},
                                          {"adD", 10, "S_3 x S_3", "trivial", 36},
                                          {"adE6", 0, "Z_2", "Z_2", 2},
                                          {"adE8", 0, "Z_2", "trivial", 2}}) {
        CAPTURE(r.family);
        CAPTURE(r.size);
        auto e = bp_catalog(r.family, r.size);
        CHECK(e.brauer_picard == r.bp);
        CHECK(e.inv_center.type_string() == r.inv);
        CHECK(e.bimodules.size() == r.bimodules);
        CHECK_FALSE(e.anchor.empty());
        int mx = 1;
        for (const auto& b : e.bimodules) mx = std::lcm(mx, b.order);
        CHECK(e.exponent == mx);
    }
    CHECK(bp_catalog("adA", 7).exponent == 4);
    CHECK(bp_catalog("adD", 10).exponent == 6);
    CHECK(bp_catalog(AdeSpec{AdeFamily::AdD, 12}).bimodule("PQ:D12odd").order == 2);
    CHECK_THROWS_AS(bp_catalog("adE6").bimodule("nope"), Error);
}

TEST_CASE("D10 bimodule grid") {
    auto e = bp_catalog("adD", 10);
    std::map<int, int> orders;
    for (const auto& b : e.bimodules) ++orders[b.order];
    CHECK(orders == std::map<int, int>{{1, 1}, {2, 15}, {3, 8}, {6, 12}});
    const std::set<std::string> bases = {"D10even", "D10odd", "E7even", "E7bar_even", "E7odd", "E7bar_odd"};
    std::set<std::string> untwisted;
    std::map<std::string, std::multiset<std::string>> rows;
    for (const auto& b : e.bimodules) {
        if (b.twist_of.empty()) {
            untwisted.insert(b.id);
            continue;
        }
        rows[b.id.substr(0, b.id.find(':'))].insert(b.twist_of);
        CHECK(b.id.substr(b.id.find(':') + 1) == b.twist_of);
        CHECK(b.dims == e.bimodule(b.twist_of).dims);
    }
    CHECK(untwisted == bases);
    CHECK(rows.size() == 5);
    for (const auto& [prefix, tw] : rows) {
        CAPTURE(prefix);
        CHECK(std::multiset<std::string>(bases.begin(), bases.end()) == tw);
    }
}

TEST_CASE("printed bimodule dims are reproduced from support graphs") {
    const std::map<std::string, std::vector<double>> printed = {
        {"E7even", {1.96962, 3.70167, 4.98724, 5.67128}},
        {"E7odd", {2.53209, 3.87939, 7.29086}},
    };
    auto d10 = bp_catalog("adD", 10);
    for (const auto& [id, dims] : printed) {
        auto c = computed_bimodule_dims(d10, id);
        for (double x : dims) CHECK(contains_dim(c, x));
        CHECK(d10.bimodule(id).dims == dims);
    }
    auto e6 = bp_catalog("adE6");
    auto e6even = computed_bimodule_dims(e6, "E6even");
    CHECK(contains_dim(e6even, 1));
    CHECK(contains_dim(e6even, 2.73205));
    CHECK(contains_dim(computed_bimodule_dims(e6, "E6odd"), 1.93185));
    auto e8 = bp_catalog("adE8");
    for (double x : {1.98904, 2.40487, 3.21834, 3.89116}) CHECK(contains_dim(computed_bimodule_dims(e8, "E8odd"), x));

    for (const auto& [fam, size] : std::vector<std::pair<std::string, int>>{
             {"adA", 3}, {"adA", 6}, {"adA", 7}, {"adA", 9}, {"adA", 11}, {"adD", 4}, {"adD", 8}, {"adD", 10}, {"adE6", 0}, {"adE8", 0}}) {
        auto e = bp_catalog(fam, size);
        for (const auto& b : e.bimodules) {
            CAPTURE(b.id);
            auto c = computed_bimodule_dims(e, b.id);
            CHECK_FALSE(c.empty());
            CHECK(std::is_sorted(c.begin(), c.end()));
            for (double x : b.dims) CHECK(contains_dim(c, x));
        }
    }
}

TEST_CASE("admissible generator bimodules") {
    CHECK(admissible_generator_bimodules(bp_catalog("adE8")) == std::vector<std::string>{"E8odd"});
    CHECK(has(admissible_generator_bimodules(bp_catalog("adE6")), "E6odd"));
    auto a7 = admissible_generator_bimodules(bp_catalog("adA", 7));
    CHECK_FALSE(has(a7, "D5even"));
    CHECK_FALSE(has(a7, "f2f4:D5even"));
    CHECK(has(a7, "A7odd"));
    CHECK_FALSE(has(admissible_generator_bimodules(bp_catalog("adD", 6)), "D6even"));
    CHECK_FALSE(has(admissible_generator_bimodules(bp_catalog("adA", 11)), "D7even"));
    CHECK(has(admissible_generator_bimodules(bp_catalog("adD", 10)), "E7even"));
}

TEST_CASE("negation orbits") {
    for (auto f : std::vector<std::vector<std::int64_t>>{{}, {2}, {3}, {4}, {3, 3}, {2, 2}, {2, 6}}) {
        FiniteAbelianGroup g(f);
        std::int64_t two_torsion = 0;
        for (const auto& x : g.elements()) two_torsion += g.element_order(x) <= 2;
        CHECK(negation_orbits(CohomologyGroup{f}) == (g.order() + two_torsion) / 2);
    }
}

TEST_CASE("extension counts for M up to 24") {
    for (std::int64_t M = 1; M <= 24; ++M) {
        CAPTURE(M);
        const bool even = M % 2 == 0;
        for (int n : {2, 4, 6, 8}) CHECK(total(extension_count("adA", n, M)) == 1);
        for (int n : {5, 9, 13}) {
            auto r = extension_count("adA", n, M);
            CHECK(total(r) == (even ? 2 : 0));
            CHECK(r.front().applies == even);
        }
        for (int n : {11, 15}) CHECK(total(extension_count("adA", n, M)) == (even ? 2 : 0));

        auto a3 = extension_count("adA", 3, M);
        CHECK(count_for(a3, "A3odd") == (M % 4 == 0 ? 2 : even ? 1 : 0));

        auto a7 = extension_count("adA", 7, M);
        CHECK(count_for(a7, "A7odd") == (even ? 2 : 0));
        CHECK(count_for(a7, "f2f4:A7odd") == (M % 4 == 0 ? 2 : 0));

        for (int n : {8, 12, 14}) {
            auto d = extension_count("adD", n, M);
            CHECK(d.size() == 2);
            for (const auto& r : d) CHECK(r.count == (even ? 1 : 0));
        }
        auto d4 = extension_count("adD", 4, M);
        for (const auto& r : d4) {
            CHECK(r.h2_quotient == "negation");
            CHECK(r.count == (M % 6 == 0 ? 2 : even ? 1 : 0));
        }
        auto d10 = extension_count("adD", 10, M);
        CHECK(count_for(d10, "D10odd") == (even ? 1 : 0));
        CHECK(count_for(d10, "PQ:D10odd") == (even ? 1 : 0));
        CHECK(count_for(d10, "f2QP:E7even") == (M % 6 == 0 ? 1 : 0));
        CHECK(count_for(d10, "PQ:E7even") == (M % 6 == 0 ? 1 : 0));

        CHECK(total(extension_count("adE6", 0, M)) == (even ? 2 : 0));
        CHECK(total(extension_count("adE8", 0, M)) == (even ? 1 : 0));
    }
    auto r = extension_count("adA", 7, 4);
    CHECK(r[1].hom == "1 -> f2f4:A7odd");
    CHECK(r[1].constraint == "4 | M");
    CHECK(r[1].h2.type_string() == "Z_2");
    CHECK_THROWS_AS(extension_count("adA", 7, 0), Error);
}
