#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fusion/ring.hpp"

namespace fusion {

struct Violation {
    std::string identity;  // "unit", "duality", "frobenius", "associativity", "grading"
    std::vector<int> indices;
    std::string detail;
};

struct VerificationReport {
    bool pass = true;
    std::vector<Violation> violations;
};

VerificationReport verify_axioms(const FusionRing& ring);
bool grading_is_multiplicative(const FusionRing& ring, const Grading& grading);

// Acceptance tolerance for dimension residuals; FR_TOLERANCE overrides the default 1e-6.
double acceptance_tolerance();

FPDimVector fp_dims(const FusionRing& ring, double tolerance = 1e-9, int max_iterations = 200000);
double global_dimension(const FusionRing& ring, const FPDimVector& dims);

using Word = std::vector<std::pair<int, bool>>;  // (index, dualed)
ObjectVector decompose_word(const FusionRing& ring, const Word& word);

struct KNormalReport {
    int k_max = 0;
    std::vector<bool> equal;  // equal[k-1]: X^k (x) X*^k == X*^k (x) X^k
    std::optional<int> K;     // least K with equality on [K, k_max]; horizon-bounded
};

KNormalReport is_k_normal(const FusionRing& ring, int x, int k_max = 8);

std::vector<int> subring_generated(const FusionRing& ring, const std::vector<int>& seeds);
bool is_generator(const FusionRing& ring, int x);
std::vector<int> adjoint_subring(const FusionRing& ring);

// Ring spanned by a fusion-closed, dual-closed index set; labels and grading carried over.
FusionRing restrict_ring(const FusionRing& ring, const std::vector<int>& subset);

struct InvertiblesReport {
    std::vector<int> elements;               // sorted simple indices
    std::vector<std::vector<int>> table;     // positions into `elements`
    bool abelian = true;
    FiniteAbelianGroup group;                // meaningful when abelian
    std::vector<std::vector<std::int64_t>> coords;
};

InvertiblesReport invertibles(const FusionRing& ring);

struct UniversalGrading {
    FiniteAbelianGroup group;
    std::vector<std::vector<std::int64_t>> deg;  // per simple
    std::vector<int> component;                  // component id per simple
    int component_count = 0;

    Grading as_grading() const { return Grading{group, deg}; }
};

UniversalGrading universal_grading(const FusionRing& ring);

// Simple-by-simple invariants used to prune isomorphism search.
std::vector<std::vector<std::int64_t>> simple_signatures(const FusionRing& ring);

std::vector<std::vector<int>> find_isomorphisms(const FusionRing& a, const FusionRing& b,
                                                std::size_t limit = 0);
bool are_isomorphic(const FusionRing& a, const FusionRing& b);

Digraph fusion_graph(const FusionRing& ring, int x);
std::optional<std::vector<int>> digraph_isomorphism(const Digraph& g, const Digraph& h);
bool digraph_iso(const Digraph& g, const Digraph& h);
std::string to_dot(const Digraph& g, const std::string& name = "fusion");

}  // namespace fusion
