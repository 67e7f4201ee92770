#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fusion/group.hpp"
#include "fusion/intmat.hpp"

namespace fusion {

// Generator of Z_M acting on A = prod Z_{d_i}; column j of `matrix` is the image of e_j.
struct GroupAction {
    std::int64_t M = 1;
    IntMat matrix;
};

GroupAction trivial_action(const FiniteAbelianGroup& coeffs, std::int64_t M);

// Presets: trivial, swap, inv1, inv2, inv12 (inversion of the listed factors).
// Otherwise a comma-separated list of generator images with ':' between coordinates,
// e.g. "0:1,1:0" is the swap of two factors.
GroupAction parse_action(const std::string& spec, const FiniteAbelianGroup& coeffs, std::int64_t M);

// Throws malformed-input unless the matrix is a well-defined automorphism whose order divides M.
void validate_action(const FiniteAbelianGroup& coeffs, const GroupAction& action);

struct CohomologyGroup {
    std::vector<std::int64_t> factors;  // invariant factors, all > 1

    std::int64_t order() const;
    std::string type_string() const;
    bool operator==(const CohomologyGroup& other) const = default;
};

// Endomorphisms g - 1 and sum_{i<M} g^i of A, entries reduced.
IntMat action_difference(const FiniteAbelianGroup& coeffs, const GroupAction& action);
IntMat action_norm(const FiniteAbelianGroup& coeffs, const GroupAction& action);
bool is_zero_endomorphism(const FiniteAbelianGroup& coeffs, const IntMat& m);

// ker(phi) / im(psi) for endomorphisms of A with psi(A) inside ker(phi).
CohomologyGroup subquotient(const FiniteAbelianGroup& coeffs, const IntMat& phi, const IntMat& psi);

CohomologyGroup h_cyclic(int degree, std::int64_t M, const FiniteAbelianGroup& coeffs, const GroupAction& action);
CohomologyGroup h3_roots_of_unity(std::int64_t M);

// Direct enumeration of 2-cocycles modulo coboundaries; M <= 6 and |A| <= 9.
CohomologyGroup brute_force_h2(std::int64_t M, const FiniteAbelianGroup& coeffs, const GroupAction& action);

}  // namespace fusion
