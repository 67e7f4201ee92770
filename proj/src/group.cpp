#include "fusion/group.hpp"

#include <numeric>
#include <sstream>

#include "fusion/error.hpp"

namespace fusion {

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<std::int64_t> orders) : orders_(std::move(orders)) {
    for (auto o : orders_)
        if (o < 1) throw Error(ErrorKind::MalformedInput, "cyclic factor order must be >= 1");
}

std::int64_t FiniteAbelianGroup::order() const {
    std::int64_t n = 1;
    for (auto o : orders_) n *= o;
    return n;
}

std::vector<std::int64_t> FiniteAbelianGroup::invariant_factors() const {
    std::size_t r = orders_.size();
    IntMat d = zero_matrix(r, r);
    for (std::size_t i = 0; i < r; ++i) d[i][i] = orders_[i];
    std::vector<std::int64_t> out;
    for (auto v : smith_normal_form(d).diagonal())
        if (v > 1) out.push_back(v);
    return out;
}

bool FiniteAbelianGroup::isomorphic_to(const FiniteAbelianGroup& other) const {
    return invariant_factors() == other.invariant_factors();
}

std::vector<std::int64_t> FiniteAbelianGroup::identity() const {
    return std::vector<std::int64_t>(orders_.size(), 0);
}

std::vector<std::int64_t> FiniteAbelianGroup::reduce(std::vector<std::int64_t> a) const {
    if (a.size() != orders_.size()) throw Error(ErrorKind::MalformedInput, "group element has wrong length");
    for (std::size_t i = 0; i < a.size(); ++i) a[i] = mod_floor(a[i], orders_[i]);
    return a;
}

std::vector<std::int64_t> FiniteAbelianGroup::add(const std::vector<std::int64_t>& a,
                                                  const std::vector<std::int64_t>& b) const {
    std::vector<std::int64_t> c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
    return reduce(std::move(c));
}

std::vector<std::int64_t> FiniteAbelianGroup::negate(const std::vector<std::int64_t>& a) const {
    std::vector<std::int64_t> c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = -a[i];
    return reduce(std::move(c));
}

std::int64_t FiniteAbelianGroup::element_order(const std::vector<std::int64_t>& a) const {
    std::int64_t l = 1;
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::int64_t v = mod_floor(a[i], orders_[i]);
        std::int64_t oi = orders_[i] / std::gcd(v, orders_[i]);
        l = std::lcm(l, oi);
    }
    return l;
}

std::vector<std::vector<std::int64_t>> FiniteAbelianGroup::elements() const {
    std::vector<std::vector<std::int64_t>> out;
    std::vector<std::int64_t> cur(orders_.size(), 0);
    for (std::int64_t n = 0; n < order(); ++n) {
        out.push_back(cur);
        for (std::size_t i = orders_.size(); i-- > 0;) {
            if (++cur[i] < orders_[i]) break;
            cur[i] = 0;
        }
    }
    return out;
}

std::int64_t FiniteAbelianGroup::index_of(const std::vector<std::int64_t>& a) const {
    auto r = reduce(a);
    std::int64_t idx = 0;
    for (std::size_t i = 0; i < r.size(); ++i) idx = idx * orders_[i] + r[i];
    return idx;
}

std::string FiniteAbelianGroup::type_string() const {
    auto f = invariant_factors();
    if (f.empty()) return "trivial";
    std::ostringstream os;
    for (std::size_t i = 0; i < f.size(); ++i) os << (i ? " x " : "") << "Z_" << f[i];
    return os.str();
}

bool is_commutative_table(const std::vector<std::vector<int>>& table) {
    for (std::size_t a = 0; a < table.size(); ++a)
        for (std::size_t b = a + 1; b < table.size(); ++b)
            if (table[a][b] != table[b][a]) return false;
    return true;
}

AbelianDecomposition decompose_abelian_table(const std::vector<std::vector<int>>& table, int identity) {
    const std::size_t n = table.size();
    if (!is_commutative_table(table)) throw Error(ErrorKind::NonAbelian, "group table is not commutative");
    // Greedy generating set; coords[e] expresses e in the chosen generators.
    std::vector<std::vector<std::int64_t>> coords(n);
    std::vector<char> in_span(n, 0);
    std::vector<int> span{identity};
    in_span[identity] = 1;
    IntMat relations;
    std::size_t k = 0;
    auto coord = [&](int e, std::size_t j) -> std::int64_t {
        return j < coords[e].size() ? coords[e][j] : 0;
    };
    for (std::size_t cand = 0; cand < n; ++cand) {
        if (in_span[cand]) continue;
        int g = static_cast<int>(cand);
        std::vector<int> next = span;
        int power = g;
        std::int64_t m = 1;
        while (!in_span[power]) {
            for (int e : span) {
                int x = table[e][power];
                coords[x].assign(k + 1, 0);
                for (std::size_t j = 0; j < k; ++j) coords[x][j] = coord(e, j);
                coords[x][k] = m;
                next.push_back(x);
            }
            for (std::size_t i = span.size(); i < next.size(); ++i) in_span[next[i]] = 1;
            power = table[power][g];
            ++m;
        }
        std::vector<std::int64_t> rel(k + 1, 0);
        for (std::size_t j = 0; j < k; ++j) rel[j] = -coord(power, j);
        rel[k] = m;
        ++k;
        for (auto& r : relations) r.resize(k, 0);
        relations.push_back(rel);
        span = std::move(next);
    }
    if (k == 0) return AbelianDecomposition{FiniteAbelianGroup{}, std::vector<std::vector<std::int64_t>>(n)};
    QuotientMap q(relations, k);
    AbelianDecomposition out{q.group(), {}};
    for (std::size_t e = 0; e < n; ++e) {
        std::vector<std::int64_t> c(k, 0);
        for (std::size_t j = 0; j < k; ++j) c[j] = coord(static_cast<int>(e), j);
        out.coords.push_back(q.apply(c));
    }
    return out;
}

QuotientMap::QuotientMap(const IntMat& relations, std::size_t rank) {
    IntMat rel = relations;
    for (auto& r : rel)
        if (r.size() != rank) throw Error(ErrorKind::MalformedInput, "relation has wrong length");
    if (rel.size() < rank) rel.resize(rank, std::vector<std::int64_t>(rank, 0));
    SmithForm s = smith_normal_form(rel);
    V_ = s.V;
    std::vector<std::int64_t> orders;
    auto d = s.diagonal();
    for (std::size_t i = 0; i < rank; ++i) {
        if (d[i] == 0) throw Error(ErrorKind::MalformedInput, "quotient group is infinite");
        if (d[i] > 1) {
            kept_.push_back(i);
            orders.push_back(d[i]);
        }
    }
    group_ = FiniteAbelianGroup(orders);
}

std::vector<std::int64_t> QuotientMap::apply(const std::vector<std::int64_t>& coords) const {
    std::vector<std::int64_t> out;
    for (std::size_t idx = 0; idx < kept_.size(); ++idx) {
        std::size_t i = kept_[idx];
        std::int64_t v = 0;
        for (std::size_t j = 0; j < coords.size(); ++j) v += coords[j] * V_[j][i];
        out.push_back(mod_floor(v, group_.orders()[idx]));
    }
    return out;
}

}  // namespace fusion
