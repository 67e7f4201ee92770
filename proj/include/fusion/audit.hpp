#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fusion/constructions.hpp"
#include "fusion/ring.hpp"

namespace fusion {

struct AuditCheck {
    std::string name;  // generator_dim, generates, k_normal, grading, adjoint, adjoint_from_generator
    bool passed = false;
    std::string detail;
};

struct AuditReport {
    TheoremRowSpec spec;
    std::string name;
    int rank = 0;
    std::string generator;
    double generator_dim = 0;
    int k_horizon = 8;
    std::vector<bool> k_equal;
    std::optional<int> K;
    std::string grading;
    std::string expected_grading;
    std::string adjoint_name;
    std::vector<std::string> steps;
    std::vector<AuditCheck> checks;

    bool passed() const;
    std::vector<std::string> failed_checks() const;
};

AuditReport audit_row(const TheoremRowSpec& spec, int k_horizon = 8);
// Rows 1..14 for M = 1..max_M, ordered by (row, M); rows are evaluated concurrently.
std::vector<AuditReport> audit_all(int max_M, int k_horizon = 8);

std::string audit_table(const std::vector<AuditReport>& reports);

struct SeparationVerdict {
    bool isomorphic = false;
    std::string invariant;  // rank, invertibles, self_dual_counts, fusion_rules; empty when isomorphic
    std::string left;
    std::string right;
};

SeparationVerdict separation_check(const FusionRing& a, const FusionRing& b);
// Requires both rows to carry the same grading group.
SeparationVerdict separation_check(const TheoremRowSpec& a, const TheoremRowSpec& b);

}  // namespace fusion
