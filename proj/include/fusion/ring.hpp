#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fusion/group.hpp"

namespace fusion {

struct Grading {
    FiniteAbelianGroup group;
    std::vector<std::vector<std::int64_t>> deg;  // per simple

    bool operator==(const Grading& other) const = default;
};

struct Term {
    int k;
    std::int64_t n;
    bool operator==(const Term& other) const = default;
};

struct Entry {
    int i, j, k;
    std::int64_t n;
};

class FusionRing {
public:
    FusionRing() = default;
    // Entries with n == 0 are dropped; duplicate (i,j,k) triples are rejected.
    FusionRing(std::vector<std::string> labels, int unit, std::vector<int> dual,
               const std::vector<Entry>& entries, std::optional<Grading> grading = std::nullopt);

    int rank() const { return static_cast<int>(labels_.size()); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(int i) const { return labels_.at(i); }
    int unit() const { return unit_; }
    int dual(int i) const { return dual_.at(i); }
    const std::vector<int>& duals() const { return dual_; }
    const std::optional<Grading>& grading() const { return grading_; }

    std::int64_t N(int i, int j, int k) const;
    std::span<const Term> product(int i, int j) const;
    std::vector<Entry> entries() const;

    int index_of(const std::string& label) const;
    std::optional<int> find(const std::string& label) const;

    FusionRing with_grading(std::optional<Grading> grading) const;
    FusionRing with_labels(std::vector<std::string> labels) const;

    bool operator==(const FusionRing& other) const;

private:
    std::vector<std::string> labels_;
    int unit_ = 0;
    std::vector<int> dual_;
    std::vector<std::size_t> offsets_;  // rank*rank + 1 offsets into terms_
    std::vector<Term> terms_;
    std::optional<Grading> grading_;
};

class ObjectVector {
public:
    ObjectVector() = default;
    explicit ObjectVector(int rank) : c_(rank, 0) {}
    static ObjectVector simple(int rank, int i);

    int rank() const { return static_cast<int>(c_.size()); }
    std::int64_t operator[](int i) const { return c_.at(i); }
    std::int64_t& operator[](int i) { return c_.at(i); }
    const std::vector<std::int64_t>& coefficients() const { return c_; }
    std::vector<int> support() const;
    std::int64_t total() const;

    bool operator==(const ObjectVector& other) const = default;

private:
    std::vector<std::int64_t> c_;
};

ObjectVector multiply(const FusionRing& ring, const ObjectVector& a, const ObjectVector& b);
std::string to_string(const FusionRing& ring, const ObjectVector& v);

struct FPDimVector {
    std::vector<double> dims;
    double residual = 0.0;
};

struct Digraph {
    int nodes = 0;
    std::vector<std::string> names;
    // (from, to) -> multiplicity, sorted
    std::vector<std::pair<std::pair<int, int>, std::int64_t>> edges;

    std::int64_t multiplicity(int from, int to) const;
};

}  // namespace fusion
