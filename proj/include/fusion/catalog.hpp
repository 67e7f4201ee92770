#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fusion/cohomology.hpp"
#include "fusion/constructions.hpp"
#include "fusion/group.hpp"

namespace fusion {

// Graph whose Perron vector, restricted to one bipartition class, yields a bimodule's dims.
struct DimSupport {
    std::string graph;  // "A", "D", "E6", "E7", "E8"
    int size = 0;       // node count for A and D
    int parity = 0;     // bipartition class; class 0 contains node 0
};

struct BimoduleRecord {
    std::string id;
    int order = 1;
    std::vector<double> dims;   // transcribed profile, distinct values ascending
    std::string action = "trivial";  // preset understood by parse_action
    std::string twist_of;       // untwisted bimodule carrying the same dims
    std::optional<DimSupport> support;
    std::string excluded;       // reason this bimodule cannot supply a generator
};

struct HomRecord {
    std::string bimodule;     // homomorphism 1 -> bimodule
    std::string h2_quotient;  // "none" or "negation" (classes identified with their inverses)
    std::vector<std::string> covers;
};

struct BPCatalogEntry {
    std::string family;  // adA, adD, adE6, adE8
    int size = 0;
    std::string anchor;
    int version = 0;
    std::string brauer_picard;
    int exponent = 1;
    FiniteAbelianGroup inv_center;
    std::vector<BimoduleRecord> bimodules;
    std::vector<HomRecord> homs;

    const BimoduleRecord& bimodule(const std::string& id) const;
};

std::vector<std::string> catalog_families();
// Raw fixture text for one family.
const std::string& catalog_fixture(const std::string& family);

BPCatalogEntry bp_catalog(const std::string& family, int size = 0);
BPCatalogEntry bp_catalog(const AdeSpec& spec);

// Bimodules with a non-invertible object of dimension below 2 that is not explicitly excluded.
std::vector<std::string> admissible_generator_bimodules(const BPCatalogEntry& entry);

// Distinct dims from the support graph, scaled to the global dimension of the adjoint category.
std::vector<double> computed_bimodule_dims(const BPCatalogEntry& entry, const std::string& id);

struct ExtensionRecord {
    std::string hom;         // "1 -> id"
    std::string bimodule;
    int order = 1;
    std::string constraint;  // "k | M"
    bool applies = false;
    CohomologyGroup h2;
    std::string h2_quotient;
    std::int64_t count = 0;
};

std::vector<ExtensionRecord> extension_count(const BPCatalogEntry& entry, std::int64_t M);
std::vector<ExtensionRecord> extension_count(const std::string& family, int size, std::int64_t M);

// Number of orbits of x -> -x on the group.
std::int64_t negation_orbits(const CohomologyGroup& group);

}  // namespace fusion
