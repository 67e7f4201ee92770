#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fusion/intmat.hpp"

namespace fusion {

// Product of cyclic groups Z_{o_1} x ... x Z_{o_r}; elements are coordinate vectors.
class FiniteAbelianGroup {
public:
    FiniteAbelianGroup() = default;
    explicit FiniteAbelianGroup(std::vector<std::int64_t> orders);

    const std::vector<std::int64_t>& orders() const { return orders_; }
    std::size_t factor_count() const { return orders_.size(); }
    std::int64_t order() const;
    bool is_trivial() const { return order() == 1; }

    // Invariant factors d_1 | d_2 | ... with all d_i > 1.
    std::vector<std::int64_t> invariant_factors() const;
    bool isomorphic_to(const FiniteAbelianGroup& other) const;

    std::vector<std::int64_t> identity() const;
    std::vector<std::int64_t> add(const std::vector<std::int64_t>& a,
                                  const std::vector<std::int64_t>& b) const;
    std::vector<std::int64_t> negate(const std::vector<std::int64_t>& a) const;
    std::vector<std::int64_t> reduce(std::vector<std::int64_t> a) const;
    std::int64_t element_order(const std::vector<std::int64_t>& a) const;
    std::vector<std::vector<std::int64_t>> elements() const;
    std::int64_t index_of(const std::vector<std::int64_t>& a) const;

    // "Z_2 x Z_4" in invariant-factor form, "trivial" for the trivial group.
    std::string type_string() const;

    bool operator==(const FiniteAbelianGroup& other) const { return orders_ == other.orders_; }

private:
    std::vector<std::int64_t> orders_;
};

// Result of identifying an abstract finite abelian group given by a Cayley table.
struct AbelianDecomposition {
    FiniteAbelianGroup group;                       // invariant-factor form
    std::vector<std::vector<std::int64_t>> coords;  // coordinates of each table element
};

// table[a][b] = index of a*b; element `identity` is the neutral element.
// Returns false in `abelian` when the table is not commutative.
bool is_commutative_table(const std::vector<std::vector<int>>& table);
AbelianDecomposition decompose_abelian_table(const std::vector<std::vector<int>>& table,
                                             int identity);

// Z^r modulo the row span of `relations` as a product of cyclic groups, with the
// induced map on coordinate vectors.
class QuotientMap {
public:
    explicit QuotientMap(const IntMat& relations, std::size_t rank);
    const FiniteAbelianGroup& group() const { return group_; }
    std::vector<std::int64_t> apply(const std::vector<std::int64_t>& coords) const;

private:
    FiniteAbelianGroup group_;
    IntMat V_;
    std::vector<std::size_t> kept_;
};

}  // namespace fusion
