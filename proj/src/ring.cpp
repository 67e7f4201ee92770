#include "fusion/ring.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "fusion/error.hpp"

namespace fusion {

const char* error_kind_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::MalformedInput: return "malformed-input";
        case ErrorKind::NonConvergence: return "non-convergence";
        case ErrorKind::InconsistentComponents: return "inconsistent-components";
        case ErrorKind::NonAbelian: return "non-abelian";
        case ErrorKind::SolverNonunique: return "solver-nonunique";
        case ErrorKind::SearchCapExceeded: return "search-cap-exceeded";
        case ErrorKind::NoSolution: return "no-solution";
        case ErrorKind::FixedPoint: return "fixed-point";
        case ErrorKind::NonSubgroup: return "non-subgroup";
        case ErrorKind::NonCentral: return "non-central";
        case ErrorKind::Degenerate: return "degenerate";
        case ErrorKind::BoundsExceeded: return "bounds-exceeded";
        case ErrorKind::UnknownFamily: return "unknown-family";
        case ErrorKind::ConstraintViolation: return "constraint-violation";
    }
    return "error";
}

FusionRing::FusionRing(std::vector<std::string> labels, int unit, std::vector<int> dual,
                       const std::vector<Entry>& entries, std::optional<Grading> grading)
    : labels_(std::move(labels)), unit_(unit), dual_(std::move(dual)), grading_(std::move(grading)) {
    const int n = rank();
    if (n < 1) throw Error(ErrorKind::MalformedInput, "ring must have at least one simple");
    if (unit_ < 0 || unit_ >= n) throw Error(ErrorKind::MalformedInput, "unit index out of range");
    if (static_cast<int>(dual_.size()) != n) throw Error(ErrorKind::MalformedInput, "dual has wrong length");
    for (int i = 0; i < n; ++i) {
        if (dual_[i] < 0 || dual_[i] >= n) throw Error(ErrorKind::MalformedInput, "dual index out of range");
    }
    for (int i = 0; i < n; ++i)
        if (dual_[dual_[i]] != i)
            throw Error(ErrorKind::MalformedInput, "dual is not involutive at " + labels_[i]);
    {
        auto sorted = labels_;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw Error(ErrorKind::MalformedInput, "labels are not distinct");
    }
    if (grading_) {
        if (static_cast<int>(grading_->deg.size()) != n)
            throw Error(ErrorKind::MalformedInput, "grading has wrong length");
        for (auto& d : grading_->deg) d = grading_->group.reduce(d);
    }
    std::vector<std::vector<Term>> buckets(static_cast<std::size_t>(n) * n);
    for (const auto& e : entries) {
        if (e.i < 0 || e.j < 0 || e.k < 0 || e.i >= n || e.j >= n || e.k >= n)
            throw Error(ErrorKind::MalformedInput, "tensor index out of range");
        if (e.n < 0) throw Error(ErrorKind::MalformedInput, "negative fusion coefficient");
        if (e.n == 0) continue;
        buckets[static_cast<std::size_t>(e.i) * n + e.j].push_back({e.k, e.n});
    }
    offsets_.assign(buckets.size() + 1, 0);
    for (std::size_t p = 0; p < buckets.size(); ++p) {
        auto& b = buckets[p];
        std::sort(b.begin(), b.end(), [](const Term& x, const Term& y) { return x.k < y.k; });
        for (std::size_t t = 1; t < b.size(); ++t)
            if (b[t].k == b[t - 1].k) throw Error(ErrorKind::MalformedInput, "duplicate tensor entry");
        offsets_[p + 1] = offsets_[p] + b.size();
    }
    terms_.reserve(offsets_.back());
    for (auto& b : buckets) terms_.insert(terms_.end(), b.begin(), b.end());
}

std::span<const Term> FusionRing::product(int i, int j) const {
    std::size_t p = static_cast<std::size_t>(i) * rank() + j;
    return std::span<const Term>(terms_.data() + offsets_[p], offsets_[p + 1] - offsets_[p]);
}

std::int64_t FusionRing::N(int i, int j, int k) const {
    auto terms = product(i, j);
    auto it = std::lower_bound(terms.begin(), terms.end(), k, [](const Term& t, int key) { return t.k < key; });
    return (it != terms.end() && it->k == k) ? it->n : 0;
}

std::vector<Entry> FusionRing::entries() const {
    std::vector<Entry> out;
    out.reserve(terms_.size());
    for (int i = 0; i < rank(); ++i)
        for (int j = 0; j < rank(); ++j)
            for (const auto& t : product(i, j)) out.push_back({i, j, t.k, t.n});
    return out;
}

std::optional<int> FusionRing::find(const std::string& label) const {
    for (int i = 0; i < rank(); ++i)
        if (labels_[i] == label) return i;
    return std::nullopt;
}

int FusionRing::index_of(const std::string& label) const {
    auto i = find(label);
    if (!i) throw Error(ErrorKind::MalformedInput, "unknown label '" + label + "'");
    return *i;
}

FusionRing FusionRing::with_grading(std::optional<Grading> grading) const {
    FusionRing r = *this;
    if (grading) {
        if (static_cast<int>(grading->deg.size()) != rank())
            throw Error(ErrorKind::MalformedInput, "grading has wrong length");
        for (auto& d : grading->deg) d = grading->group.reduce(d);
    }
    r.grading_ = std::move(grading);
    return r;
}

FusionRing FusionRing::with_labels(std::vector<std::string> labels) const {
    return FusionRing(std::move(labels), unit_, dual_, entries(), grading_);
}

bool FusionRing::operator==(const FusionRing& other) const {
    return labels_ == other.labels_ && unit_ == other.unit_ && dual_ == other.dual_ &&
           offsets_ == other.offsets_ && terms_ == other.terms_ && grading_ == other.grading_;
}

ObjectVector ObjectVector::simple(int rank, int i) {
    ObjectVector v(rank);
    v[i] = 1;
    return v;
}

std::vector<int> ObjectVector::support() const {
    std::vector<int> s;
    for (int i = 0; i < rank(); ++i)
        if (c_[i] != 0) s.push_back(i);
    return s;
}

std::int64_t ObjectVector::total() const {
    std::int64_t t = 0;
    for (auto x : c_) t += x;
    return t;
}

ObjectVector multiply(const FusionRing& ring, const ObjectVector& a, const ObjectVector& b) {
    ObjectVector out(ring.rank());
    for (int i = 0; i < ring.rank(); ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; j < ring.rank(); ++j) {
            if (b[j] == 0) continue;
            std::int64_t w = a[i] * b[j];
            for (const auto& t : ring.product(i, j)) out[t.k] += w * t.n;
        }
    }
    return out;
}

std::string to_string(const FusionRing& ring, const ObjectVector& v) {
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < v.rank(); ++i) {
        if (v[i] == 0) continue;
        if (!first) os << " + ";
        first = false;
        if (v[i] != 1) os << v[i] << "*";
        os << ring.label(i);
    }
    if (first) os << "0";
    return os.str();
}

std::int64_t Digraph::multiplicity(int from, int to) const {
    for (const auto& e : edges)
        if (e.first.first == from && e.first.second == to) return e.second;
    return 0;
}

}  // namespace fusion
