#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "fusion/intmat.hpp"
#include "fusion/ring.hpp"

namespace fusion {

struct PartialRing {
    std::vector<std::string> labels;
    int unit = 0;
    std::vector<double> dims;
    Grading grading;
    std::vector<std::optional<int>> dual;                        // empty or one entry per simple
    std::map<std::tuple<int, int, int>, std::int64_t> known;    // absent = unknown

    int rank() const { return static_cast<int>(labels.size()); }
    void set_known(int i, int j, int k, std::int64_t n) { known[{i, j, k}] = n; }
};

struct SolveOptions {
    std::uint64_t search_cap = 10'000'000;
};

struct SolveResult {
    std::vector<FusionRing> raw;                // deterministic order
    std::vector<std::vector<int>> classes;      // indices into raw, one list per isomorphism class
    std::uint64_t nodes = 0;
    int dual_candidates = 0;

    const FusionRing& canonical(std::size_t cls = 0) const { return raw.at(classes.at(cls).front()); }
};

SolveResult complete_partial_ring(const PartialRing& p, const SolveOptions& options = {});

// Dims from the Perron vector of the adjacency matrix; the generator is the unique
// out-neighbour of `unit`; edge i -> k with multiplicity adjacency[i][k] = N_{x,i}^k.
PartialRing partial_from_generator_graph(const IntMat& adjacency, int unit,
                                         std::vector<std::string> labels = {});
SolveResult ring_from_generator_graph(const IntMat& adjacency, int unit, std::vector<std::string> labels = {},
                                      const SolveOptions& options = {});

// Perron eigenvector of a nonnegative matrix (v[unit] = 1) and its eigenvalue.
std::pair<std::vector<double>, double> perron_vector(const IntMat& adjacency, int unit);

struct ModuleAction {
    int module_rank = 0;
    std::vector<double> dims;
    std::vector<IntMat> matrices;  // matrices[a][n][m] = multiplicity of n in a (x) m
};

std::vector<ModuleAction> solve_module(const FusionRing& base, const std::vector<double>& module_dims,
                                       const std::optional<std::pair<int, IntMat>>& generator_row = std::nullopt,
                                       const SolveOptions& options = {});

bool module_action_valid(const FusionRing& base, const ModuleAction& action, const std::vector<double>& base_dims);

}  // namespace fusion
