#include "doctest.h"

#include <cstdio>

#include "fusion/constructions.hpp"
#include "fusion/error.hpp"
#include "fusion/json_io.hpp"
#include "fusion/ring_ops.hpp"

using namespace fusion;

namespace {

ErrorKind parse_kind(const std::string& text, bool partial = false) {
    try {
        auto j = parse_json_text(text);
        if (partial)
            partial_from_json(j);
        else
            ring_from_json(j);
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("accepted: " << text);
    return ErrorKind::ConstraintViolation;
}

const char* kZ2 = R"({"labels":["1","g"],"unit":"1","dual":[["1","1"],["g","g"]],
  "tensor":[["1","1","1",1],["1","g","g",1],["g","1","g",1],["g","g","1",1]]})";

}  // namespace

TEST_CASE("ring JSON round trip") {
    for (const auto& r : {verlinde_ring(5), pointed_ring(FiniteAbelianGroup({2, 3})), ade_ring({AdeFamily::E6, 0}),
                          e4_ring(), theorem_row({8, 0, 1, ""}).ring}) {
        auto j = ring_to_json(r);
        CHECK(j["rank"] == r.rank());
        auto back = ring_from_json(parse_json_text(j.dump()));
        CHECK(back == r);
        CHECK(back.grading() == r.grading());
    }
    auto z2 = ring_from_json(parse_json_text(kZ2));
    CHECK(z2.rank() == 2);
    CHECK_FALSE(z2.grading());
    CHECK(verify_axioms(z2).pass);
}

TEST_CASE("partial ring JSON round trip") {
    for (const auto& p : {e4_instance(), e16_6_instance()}) {
        auto q = partial_from_json(parse_json_text(partial_to_json(p).dump()));
        CHECK(q.labels == p.labels);
        CHECK(q.unit == p.unit);
        CHECK(q.grading == p.grading);
        CHECK(q.known == p.known);
        REQUIRE(q.dims.size() == p.dims.size());
        for (std::size_t i = 0; i < p.dims.size(); ++i) CHECK(q.dims[i] == doctest::Approx(p.dims[i]).epsilon(1e-12));
    }
}

TEST_CASE("malformed ring JSON") {
    CHECK(parse_kind("{not json") == ErrorKind::MalformedInput);
    CHECK(parse_kind("[]") == ErrorKind::MalformedInput);
    CHECK(parse_kind(R"({"labels":["1"],"unit":"x","dual":[["1","1"]],"tensor":[]})") == ErrorKind::MalformedInput);
    CHECK(parse_kind(R"({"labels":["1","1"],"unit":"1","dual":[],"tensor":[]})") == ErrorKind::MalformedInput);
    CHECK(parse_kind(R"({"rank":3,"labels":["1"],"unit":"1","dual":[["1","1"]],"tensor":[]})") == ErrorKind::MalformedInput);
    CHECK(parse_kind(R"({"labels":["1","g"],"unit":"1","dual":[["1","1"]],"tensor":[]})") == ErrorKind::MalformedInput);
    CHECK(parse_kind(R"({"labels":["1"],"unit":"1","dual":[["1","1"]],"tensor":[["1","1","1"]]})") == ErrorKind::MalformedInput);
    CHECK(parse_kind(R"({"labels":["1"],"unit":"1","dual":[["1","1"]],"tensor":[["1","1","1","a"]]})") == ErrorKind::MalformedInput);
    CHECK(parse_kind(R"({"labels":["1","g","h"],"unit":"1","dual":[["1","1"],["g","h"],["g","g"]],"tensor":[]})") ==
          ErrorKind::MalformedInput);
    CHECK(parse_kind(R"({"labels":["1"],"unit":"1","dual":[["1","1"]],"tensor":[["1","1","1",1]],
                         "grading":{"orders":[2],"deg":[["1",[0,0]]]}})") == ErrorKind::MalformedInput);
    CHECK(parse_kind(R"({"labels":["1"],"unit":"1","dual":[["1","1"]],"tensor":[["1","1","1",1]],
                         "grading":{"orders":[0],"deg":[["1",[0]]]}})") == ErrorKind::MalformedInput);
}

TEST_CASE("malformed partial JSON") {
    const std::string head = R"({"labels":["1","x"],"unit":"1",)";
    CHECK(parse_kind(head + R"("dims":[["1",1],["x",1.5]]})", true) == ErrorKind::MalformedInput);
    CHECK(parse_kind(head + R"("grading":{"orders":[1],"deg":[["1",[0]],["x",[0]]]},"dims":[["1",1]]})", true) ==
          ErrorKind::MalformedInput);
    CHECK(parse_kind(head + R"("grading":{"orders":[1],"deg":[["1",[0]],["x",[0]]]},"dims":[["1",1],["x",0.5]]})", true) ==
          ErrorKind::MalformedInput);
    CHECK(parse_kind(head + R"("grading":{"orders":[1],"deg":[["1",[0]],["x",[0]]]},"dims":[["1",1],["x",2]],
                               "known":[["x","x","1",-1]]})", true) == ErrorKind::MalformedInput);
    auto ok = partial_from_json(parse_json_text(
        head + R"("grading":{"orders":[1],"deg":[["1",[0]],["x",[0]]]},"dims":[["1",1],["x",2]],"known":[["x","x","1",1]]})"));
    CHECK(ok.dual.empty());
    CHECK(ok.known.size() == 1);
}

TEST_CASE("file IO") {
    const std::string path = "fusion_json_io_test.json";
    write_text_file(path, ring_to_json(verlinde_ring(3)).dump());
    CHECK(ring_from_json(read_json_file(path)) == verlinde_ring(3));
    std::remove(path.c_str());
    CHECK_THROWS_AS(read_json_file("/nonexistent/ring.json"), Error);
}

TEST_CASE("report serialisation") {
    auto row = theorem_row({4, 1, 2, ""});
    auto j = theorem_row_to_json(row);
    CHECK(j["provenance"]["N"] == 1);
    CHECK(j["provenance"]["M"] == 2);
    CHECK(j["provenance"]["grading_group"] == row.expected_grading.type_string());
    CHECK(j["provenance"]["steps"].size() == row.steps.size());

    SeparationVerdict v{false, "invertibles", "Z_2 x Z_2", "Z_4"};
    CHECK(separation_to_json(v)["verdict"] == "ring-distinguishable");
    v.isomorphic = true;
    CHECK(separation_to_json(v)["verdict"] == "ring-isomorphic");

    CHECK(group_to_json(FiniteAbelianGroup({2, 2}))["order"] == 4);
    CHECK(cohomology_to_json(CohomologyGroup{{3}})["type"] == "Z_3");
    auto cat = catalog_to_json(bp_catalog("adD", 4));
    CHECK(cat["bimodules"].size() == 4);
    auto ext = extension_to_json(extension_count("adE6", 0, 2).front());
    CHECK(ext["count"] == 2);
}
