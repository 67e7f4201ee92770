#pragma once

#include <string>
#include <vector>

#include "fusion/group.hpp"
#include "fusion/intmat.hpp"
#include "fusion/ring.hpp"
#include "fusion/solver.hpp"

namespace fusion {

enum class AdeFamily { A, D, E6, E8, AdA, AdD, AdE6, AdE8 };

// `size` is the subscript: A_N has N simples, D_n needs n even and n >= 4.
// E6/E8 ignore it.
struct AdeSpec {
    AdeFamily family = AdeFamily::A;
    int size = 0;
};

AdeFamily parse_ade_family(const std::string& name);
std::string ade_name(const AdeSpec& spec);

// Dynkin (or A_N path) graph with node order matching the ring labels; node 0 is the unit.
IntMat dynkin_adjacency(const AdeSpec& spec);
std::vector<std::string> ade_labels(const AdeSpec& spec);

FusionRing pointed_ring(const FiniteAbelianGroup& group);
FusionRing verlinde_ring(int n);
FusionRing ade_ring(const AdeSpec& spec);

// Labels "a|b"; product grading when both factors are graded.
FusionRing deligne_product(const FusionRing& a, const FusionRing& b);

// `grading` must be a two-factor Z_{M1} x Z_{M2} grading of `ring`. The result carries the
// cyclic grading of order lcm(M1, M2) induced by (1,1).
FusionRing one_one_subring(const FusionRing& ring, const Grading& grading);

// Orbit ring for a central, fixed-point-free subgroup of invertibles. Labels "[rep]".
FusionRing dequiv_free(const FusionRing& ring, const std::vector<int>& subgroup);

// E4 and E16,6 as graded partial rings with the trivial component fixed.
PartialRing e4_instance();
PartialRing e16_6_instance(bool prefill_module = false);
// Canonical completions, computed once per process.
const FusionRing& e4_ring();
const FusionRing& e16_6_ring();
extern const char* const kE4Generator;     // "5"
extern const char* const kE16_6Generator;  // "a1"

struct TheoremRowSpec {
    int row = 1;       // 1..14
    int N = 0;         // 0 selects the smallest admissible value
    int M = 1;
    std::string variant;  // recorded only ("+", "-")
};

struct TheoremRow {
    TheoremRowSpec spec;
    std::string name;
    FusionRing ring;
    int generator = 0;
    FiniteAbelianGroup expected_grading;
    std::string adjoint_name;
    FusionRing expected_adjoint;
    std::vector<std::string> steps;
};

int row_count();
int default_N(int row);
TheoremRow theorem_row(const TheoremRowSpec& spec);

}  // namespace fusion
