#pragma once

#include <cstdint>
#include <vector>

namespace fusion {

using IntMat = std::vector<std::vector<std::int64_t>>;

IntMat identity_matrix(std::size_t n);
IntMat zero_matrix(std::size_t rows, std::size_t cols);
IntMat multiply(const IntMat& a, const IntMat& b);

// U * A * V = D with U, V unimodular and D diagonal, d_1 | d_2 | ...
struct SmithForm {
    IntMat U;
    IntMat V;
    IntMat D;
    std::vector<std::int64_t> diagonal() const;
    std::size_t rank() const;
};

SmithForm smith_normal_form(const IntMat& a);

std::int64_t mod_floor(std::int64_t a, std::int64_t m);

}  // namespace fusion
