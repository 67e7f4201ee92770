#include "fusion/solver.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

#include "csp.hpp"
#include "fusion/error.hpp"
#include "fusion/ring_ops.hpp"

namespace fusion {

namespace {

constexpr double kBoundSlack = 1e-6;

std::int64_t dim_bound(double di, double dj, double dk) {
    return static_cast<std::int64_t>(std::floor(di * dj / dk + kBoundSlack));
}

bool dims_close(double a, double b) { return std::abs(a - b) <= 1e-6 * std::max(1.0, std::max(a, b)); }

struct Operand {
    int var = -1;          // >= 0: CSP variable
    std::int64_t c = 0;    // constant when var < 0
};

std::vector<std::vector<int>> dual_candidates(const PartialRing& p) {
    const int n = p.rank();
    const auto& G = p.grading.group;
    auto allowed = [&](int i, int j) {
        if (!dims_close(p.dims[i], p.dims[j])) return false;
        if (G.reduce(p.grading.deg[j]) != G.negate(p.grading.deg[i])) return false;
        if (!p.dual.empty()) {
            if (p.dual[i] && *p.dual[i] != j) return false;
            if (p.dual[j] && *p.dual[j] != i) return false;
        }
        auto kn = p.known.find({i, j, p.unit});
        if (kn != p.known.end() && kn->second != 1) return false;
        kn = p.known.find({j, i, p.unit});
        if (kn != p.known.end() && kn->second != 1) return false;
        for (int k = 0; k < n; ++k) {
            if (k == j) continue;
            auto f = p.known.find({i, k, p.unit});
            if (f != p.known.end() && f->second > 0) return false;
        }
        return true;
    };
    std::vector<std::vector<int>> out;
    std::vector<int> d(n, -1);
    std::function<void(int)> rec = [&](int i) {
        while (i < n && d[i] >= 0) ++i;
        if (i == n) {
            out.push_back(d);
            return;
        }
        for (int j = i; j < n; ++j) {
            if (d[j] >= 0) continue;
            if (!allowed(i, j) || !allowed(j, i)) continue;
            if ((i == p.unit) != (j == p.unit)) continue;
            d[i] = j;
            d[j] = i;
            rec(i + 1);
            d[i] = -1;
            d[j] = -1;
        }
    };
    rec(0);
    return out;
}

std::vector<std::tuple<int, int, int, std::int64_t>> sorted_entries(const FusionRing& r) {
    std::vector<std::tuple<int, int, int, std::int64_t>> v;
    for (const auto& e : r.entries()) v.emplace_back(e.i, e.j, e.k, e.n);
    return v;
}

void validate_partial(const PartialRing& p) {
    const int n = p.rank();
    if (n < 1) throw Error(ErrorKind::MalformedInput, "partial ring has no simples");
    if (p.unit < 0 || p.unit >= n) throw Error(ErrorKind::MalformedInput, "unit index out of range");
    if (static_cast<int>(p.dims.size()) != n) throw Error(ErrorKind::MalformedInput, "dims have wrong length");
    if (static_cast<int>(p.grading.deg.size()) != n)
        throw Error(ErrorKind::MalformedInput, "grading has wrong length");
    if (!p.dual.empty() && static_cast<int>(p.dual.size()) != n)
        throw Error(ErrorKind::MalformedInput, "dual has wrong length");
    for (double d : p.dims)
        if (!(d > 0)) throw Error(ErrorKind::MalformedInput, "dims must be positive");
    const auto& G = p.grading.group;
    for (const auto& [key, v] : p.known) {
        auto [i, j, k] = key;
        if (i < 0 || j < 0 || k < 0 || i >= n || j >= n || k >= n)
            throw Error(ErrorKind::MalformedInput, "known entry index out of range");
        if (v < 0) throw Error(ErrorKind::MalformedInput, "known entry is negative");
        if (v > 0 && G.add(p.grading.deg[i], p.grading.deg[j]) != G.reduce(p.grading.deg[k]))
            throw Error(ErrorKind::ConstraintViolation, "known entry (" + p.labels[i] + "," + p.labels[j] + "," +
                                                            p.labels[k] + ") violates the grading");
        if (v > dim_bound(p.dims[i], p.dims[j], p.dims[k]))
            throw Error(ErrorKind::ConstraintViolation, "known entry (" + p.labels[i] + "," + p.labels[j] + "," +
                                                            p.labels[k] + ") exceeds the dimension bound");
    }
}

}  // namespace

SolveResult complete_partial_ring(const PartialRing& p, const SolveOptions& options) {
    validate_partial(p);
    const int n = p.rank();
    const int u = p.unit;
    const auto& G = p.grading.group;
    std::vector<std::int64_t> degidx(n);
    for (int i = 0; i < n; ++i) degidx[i] = G.index_of(p.grading.deg[i]);
    auto deg_sum = [&](int i, int j) { return G.index_of(G.add(p.grading.deg[i], p.grading.deg[j])); };
    std::vector<std::vector<int>> by_degree(static_cast<std::size_t>(G.order()));
    for (int i = 0; i < n; ++i) by_degree[degidx[i]].push_back(i);

    auto candidates = dual_candidates(p);
    SolveResult result;
    result.dual_candidates = static_cast<int>(candidates.size());
    std::string first_reason = candidates.empty() ? "no dual involution is compatible with dims and grading" : "";
    bool capped = false;
    std::uint64_t budget = options.search_cap;

    for (const auto& dual : candidates) {
        auto reason = [&](const std::string& r) {
            if (first_reason.empty()) first_reason = r;
        };
        const std::size_t total = static_cast<std::size_t>(n) * n * n;
        auto idx = [n](int i, int j, int k) { return (static_cast<std::size_t>(i) * n + j) * n + k; };
        std::vector<int> orbit_of(total, -1);
        std::vector<std::vector<std::size_t>> orbits;
        for (std::size_t t = 0; t < total; ++t) {
            if (orbit_of[t] >= 0) continue;
            int id = static_cast<int>(orbits.size());
            orbits.emplace_back();
            std::vector<std::size_t> stack{t};
            orbit_of[t] = id;
            while (!stack.empty()) {
                std::size_t s = stack.back();
                stack.pop_back();
                orbits[id].push_back(s);
                int i = static_cast<int>(s / (static_cast<std::size_t>(n) * n));
                int j = static_cast<int>((s / n) % n);
                int k = static_cast<int>(s % n);
                std::size_t img[3] = {idx(dual[i], k, j), idx(k, dual[j], i), idx(dual[j], dual[i], dual[k])};
                for (auto m : img)
                    if (orbit_of[m] < 0) {
                        orbit_of[m] = id;
                        stack.push_back(m);
                    }
            }
        }
        detail::Csp csp;
        std::vector<Operand> op(orbits.size());
        bool bad = false;
        for (std::size_t o = 0; o < orbits.size() && !bad; ++o) {
            std::int64_t val = -1;
            std::int64_t ub = INT64_MAX;
            for (auto s : orbits[o]) {
                int i = static_cast<int>(s / (static_cast<std::size_t>(n) * n));
                int j = static_cast<int>((s / n) % n);
                int k = static_cast<int>(s % n);
                ub = std::min(ub, dim_bound(p.dims[i], p.dims[j], p.dims[k]));
                std::int64_t c = -1;
                if (deg_sum(i, j) != degidx[k])
                    c = 0;
                else if (i == u)
                    c = (j == k);
                else if (j == u)
                    c = (i == k);
                else if (k == u)
                    c = (j == dual[i]);
                else {
                    auto f = p.known.find({i, j, k});
                    if (f != p.known.end()) c = f->second;
                }
                if (c < 0) continue;
                if (val < 0)
                    val = c;
                else if (val != c) {
                    bad = true;
                    reason("known entries disagree under Frobenius reciprocity at (" + p.labels[i] + "," +
                           p.labels[j] + "," + p.labels[k] + ")");
                    break;
                }
            }
            if (bad) break;
            if (val >= 0) {
                if (val > ub) {
                    bad = true;
                    reason("fixed entry exceeds the dimension bound");
                }
                op[o].c = val;
            } else if (ub <= 0) {
                op[o].c = 0;
            } else {
                op[o].var = csp.add_var(ub);
            }
        }
        if (bad) continue;
        auto operand = [&](int i, int j, int k) -> const Operand& { return op[orbit_of[idx(i, j, k)]]; };

        for (int i = 0; i < n && !bad; ++i) {
            if (i == u) continue;
            for (int j = 0; j < n && !bad; ++j) {
                if (j == u) continue;
                double target = p.dims[i] * p.dims[j];
                std::vector<std::pair<int, double>> terms;
                for (int k : by_degree[deg_sum(i, j)]) {
                    const auto& o = operand(i, j, k);
                    if (o.var >= 0)
                        terms.push_back({o.var, p.dims[k]});
                    else
                        target -= static_cast<double>(o.c) * p.dims[k];
                }
                if (terms.empty()) {
                    if (std::abs(target) > 1e-6 * std::max(1.0, p.dims[i] * p.dims[j])) {
                        bad = true;
                        reason("dimension equation fails for " + p.labels[i] + " x " + p.labels[j]);
                    }
                    continue;
                }
                csp.add_linear(terms, target, p.dims[i] * p.dims[j], i * n + j);
            }
        }
        if (bad) continue;

        for (int a = 0; a < n && !bad; ++a) {
            if (a == u) continue;
            for (int b = 0; b < n && !bad; ++b) {
                if (b == u) continue;
                const auto& ab = by_degree[deg_sum(a, b)];
                for (int c = 0; c < n && !bad; ++c) {
                    if (c == u) continue;
                    const auto& bc = by_degree[deg_sum(b, c)];
                    std::int64_t dabc = G.index_of(G.add(G.add(p.grading.deg[a], p.grading.deg[b]), p.grading.deg[c]));
                    for (int e : by_degree[dabc]) {
                        std::int64_t constant = 0;
                        std::vector<std::pair<std::int64_t, std::pair<int, int>>> terms;
                        auto add_term = [&](std::int64_t sign, const Operand& x, const Operand& y) {
                            if ((x.var < 0 && x.c == 0) || (y.var < 0 && y.c == 0)) return;
                            if (x.var < 0 && y.var < 0) {
                                constant += sign * x.c * y.c;
                            } else if (x.var < 0) {
                                terms.push_back({sign * x.c, {y.var, detail::Csp::kOne}});
                            } else if (y.var < 0) {
                                terms.push_back({sign * y.c, {x.var, detail::Csp::kOne}});
                            } else {
                                terms.push_back({sign, {x.var, y.var}});
                            }
                        };
                        for (int m : ab) add_term(1, operand(a, b, m), operand(m, c, e));
                        for (int m : bc) add_term(-1, operand(b, c, m), operand(a, m, e));
                        if (terms.empty()) {
                            if (constant != 0) {
                                bad = true;
                                reason("associativity fails for (" + p.labels[a] + "," + p.labels[b] + "," +
                                       p.labels[c] + ") at " + p.labels[e]);
                            }
                            continue;
                        }
                        csp.add_quadratic(constant, terms, ((a * n + b) * n + c) * n + e);
                    }
                }
            }
        }
        if (bad) continue;

        std::vector<FusionRing> found;
        bool complete = csp.solve(budget, [&](const std::vector<std::int64_t>& values) {
            std::vector<Entry> entries;
            for (std::size_t t = 0; t < total; ++t) {
                const auto& o = op[orbit_of[t]];
                std::int64_t v = o.var >= 0 ? values[o.var] : o.c;
                if (v == 0) continue;
                int i = static_cast<int>(t / (static_cast<std::size_t>(n) * n));
                int j = static_cast<int>((t / n) % n);
                int k = static_cast<int>(t % n);
                entries.push_back({i, j, k, v});
            }
            FusionRing ring(p.labels, u, dual, entries, p.grading);
            if (!verify_axioms(ring).pass) return;
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    double s = 0;
                    for (const auto& t : ring.product(i, j)) s += static_cast<double>(t.n) * p.dims[t.k];
                    if (std::abs(s - p.dims[i] * p.dims[j]) > 1e-6 * std::max(1.0, p.dims[i] * p.dims[j])) return;
                }
            for (const auto& [key, v] : p.known) {
                auto [i, j, k] = key;
                if (ring.N(i, j, k) != v) return;
            }
            found.push_back(std::move(ring));
        });
        result.nodes += csp.nodes();
        budget = csp.nodes() >= budget ? 0 : budget - csp.nodes();
        if (!complete) {
            capped = true;
            break;
        }
        if (csp.root_failed() && first_reason.empty()) {
            const auto& c = csp.first_conflict();
            std::ostringstream os;
            if (c.linear) {
                os << "dimension equation fails for " << p.labels[c.tag / n] << " x " << p.labels[c.tag % n];
            } else {
                int e = c.tag % n, r = c.tag / n;
                int cc = r % n;
                r /= n;
                os << "associativity fails for (" << p.labels[r / n] << "," << p.labels[r % n] << ","
                   << p.labels[cc] << ") at " << p.labels[e];
            }
            first_reason = os.str();
        }
        for (auto& f : found) result.raw.push_back(std::move(f));
    }
    if (capped)
        throw Error(ErrorKind::SearchCapExceeded,
                    "search cap of " + std::to_string(options.search_cap) + " nodes exceeded");
    if (result.raw.empty())
        throw Error(ErrorKind::NoSolution,
                    "no completion: " + (first_reason.empty() ? std::string("exhaustive search failed") : first_reason));
    std::sort(result.raw.begin(), result.raw.end(), [](const FusionRing& a, const FusionRing& b) {
        auto da = a.duals(), db = b.duals();
        if (da != db) return da < db;
        return sorted_entries(a) < sorted_entries(b);
    });
    for (int r = 0; r < static_cast<int>(result.raw.size()); ++r) {
        bool placed = false;
        for (auto& cls : result.classes)
            if (are_isomorphic(result.raw[cls.front()], result.raw[r])) {
                cls.push_back(r);
                placed = true;
                break;
            }
        if (!placed) result.classes.push_back({r});
    }
    return result;
}

std::pair<std::vector<double>, double> perron_vector(const IntMat& adjacency, int unit) {
    const std::size_t n = adjacency.size();
    std::vector<double> v(n, 1.0), w(n);
    double lambda = 0;
    for (int it = 0; it < 200000; ++it) {
        for (std::size_t i = 0; i < n; ++i) {
            double s = v[i];
            for (std::size_t j = 0; j < n; ++j) s += static_cast<double>(adjacency[i][j]) * v[j];
            w[i] = s;
        }
        double scale = w[unit];
        double delta = 0;
        for (std::size_t i = 0; i < n; ++i) {
            w[i] /= scale;
            delta = std::max(delta, std::abs(w[i] - v[i]));
        }
        v.swap(w);
        if (delta < 1e-14) break;
    }
    double s = 0;
    for (std::size_t j = 0; j < n; ++j) s += static_cast<double>(adjacency[unit][j]) * v[j];
    lambda = s / v[unit];
    return {v, lambda};
}

PartialRing partial_from_generator_graph(const IntMat& adjacency, int unit, std::vector<std::string> labels) {
    const int n = static_cast<int>(adjacency.size());
    if (n < 1) throw Error(ErrorKind::MalformedInput, "empty graph");
    for (const auto& row : adjacency)
        if (static_cast<int>(row.size()) != n) throw Error(ErrorKind::MalformedInput, "adjacency is not square");
    if (unit < 0 || unit >= n) throw Error(ErrorKind::MalformedInput, "unit out of range");
    if (labels.empty())
        for (int i = 0; i < n; ++i) labels.push_back("v" + std::to_string(i));
    if (static_cast<int>(labels.size()) != n) throw Error(ErrorKind::MalformedInput, "label count mismatch");
    int x = -1;
    for (int k = 0; k < n; ++k) {
        if (adjacency[unit][k] == 0) continue;
        if (x >= 0 || adjacency[unit][k] != 1)
            throw Error(ErrorKind::MalformedInput, "the unit must have exactly one out-neighbour");
        x = k;
    }
    if (x < 0) throw Error(ErrorKind::MalformedInput, "the unit has no out-neighbour");
    bool symmetric = true;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (adjacency[i][j] != adjacency[j][i]) symmetric = false;
    auto [dims, lambda] = perron_vector(adjacency, unit);
    (void)lambda;
    // bipartite parity from the unit
    std::vector<int> parity(n, -1);
    parity[unit] = 0;
    std::vector<int> queue{unit};
    bool bipartite = true;
    for (std::size_t q = 0; q < queue.size(); ++q) {
        int a = queue[q];
        for (int b = 0; b < n; ++b) {
            if (!adjacency[a][b] && !adjacency[b][a]) continue;
            if (parity[b] < 0) {
                parity[b] = 1 - parity[a];
                queue.push_back(b);
            } else if (parity[b] == parity[a]) {
                bipartite = false;
            }
        }
    }
    if (static_cast<int>(queue.size()) != n) throw Error(ErrorKind::MalformedInput, "graph is not connected");
    PartialRing p;
    p.labels = labels;
    p.unit = unit;
    p.dims = dims;
    if (bipartite) {
        p.grading.group = FiniteAbelianGroup({2});
        for (int i = 0; i < n; ++i) p.grading.deg.push_back({parity[i]});
    } else {
        p.grading.group = FiniteAbelianGroup(std::vector<std::int64_t>{});
        p.grading.deg.assign(n, {});
    }
    p.dual.assign(n, std::nullopt);
    if (symmetric) p.dual[x] = x;
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) p.set_known(x, i, k, adjacency[i][k]);
    return p;
}

SolveResult ring_from_generator_graph(const IntMat& adjacency, int unit, std::vector<std::string> labels,
                                      const SolveOptions& options) {
    return complete_partial_ring(partial_from_generator_graph(adjacency, unit, std::move(labels)), options);
}

bool module_action_valid(const FusionRing& base, const ModuleAction& act, const std::vector<double>& base_dims) {
    const int r = act.module_rank;
    const int n = base.rank();
    if (static_cast<int>(act.matrices.size()) != n) return false;
    for (int p = 0; p < r; ++p)
        for (int m = 0; m < r; ++m)
            if (act.matrices[base.unit()][p][m] != (p == m ? 1 : 0)) return false;
    for (int a = 0; a < n; ++a) {
        for (int m = 0; m < r; ++m) {
            double s = 0;
            for (int q = 0; q < r; ++q) {
                if (act.matrices[a][q][m] < 0) return false;
                s += static_cast<double>(act.matrices[a][q][m]) * act.dims[q];
            }
            if (std::abs(s - base_dims[a] * act.dims[m]) > 1e-6 * std::max(1.0, s)) return false;
        }
        for (int b = 0; b < n; ++b) {
            IntMat lhs = multiply(act.matrices[a], act.matrices[b]);
            IntMat rhs = zero_matrix(r, r);
            for (const auto& t : base.product(a, b))
                for (int p = 0; p < r; ++p)
                    for (int m = 0; m < r; ++m) rhs[p][m] += t.n * act.matrices[t.k][p][m];
            if (lhs != rhs) return false;
        }
    }
    return true;
}

std::vector<ModuleAction> solve_module(const FusionRing& base, const std::vector<double>& mdims,
                                       const std::optional<std::pair<int, IntMat>>& generator_row,
                                       const SolveOptions& options) {
    const int n = base.rank();
    const int r = static_cast<int>(mdims.size());
    if (r < 1) throw Error(ErrorKind::MalformedInput, "module rank must be positive");
    for (double d : mdims)
        if (!(d > 0)) throw Error(ErrorKind::MalformedInput, "module dims must be positive");
    auto bd = fp_dims(base).dims;
    const int u = base.unit();
    auto idx = [&](int a, int p, int m) { return (static_cast<std::size_t>(a) * r + p) * r + m; };
    const std::size_t total = static_cast<std::size_t>(n) * r * r;
    std::vector<Operand> op(total);
    std::vector<int> owner(total, -1);
    detail::Csp csp;
    for (int a = 0; a < n; ++a)
        for (int p = 0; p < r; ++p)
            for (int m = 0; m < r; ++m) {
                std::size_t t = idx(a, p, m);
                if (owner[t] >= 0) continue;
                std::size_t t2 = idx(base.dual(a), m, p);
                owner[t] = static_cast<int>(t);
                owner[t2] = static_cast<int>(t);
                Operand o;
                if (a == u) {
                    o.c = (p == m);
                } else if (generator_row && (a == generator_row->first || base.dual(a) == generator_row->first)) {
                    const IntMat& g = generator_row->second;
                    o.c = (a == generator_row->first) ? g.at(p).at(m) : g.at(m).at(p);
                } else {
                    std::int64_t ub = std::min(dim_bound(bd[a], mdims[m], mdims[p]),
                                               dim_bound(bd[base.dual(a)], mdims[p], mdims[m]));
                    if (ub <= 0)
                        o.c = 0;
                    else
                        o.var = csp.add_var(ub);
                }
                op[t] = o;
                op[t2] = o;
            }
    for (int a = 0; a < n; ++a) {
        if (a == u) continue;
        for (int m = 0; m < r; ++m) {
            double target = bd[a] * mdims[m];
            std::vector<std::pair<int, double>> terms;
            for (int p = 0; p < r; ++p) {
                const auto& o = op[idx(a, p, m)];
                if (o.var >= 0)
                    terms.push_back({o.var, mdims[p]});
                else
                    target -= static_cast<double>(o.c) * mdims[p];
            }
            if (terms.empty()) {
                if (std::abs(target) > 1e-6 * std::max(1.0, bd[a] * mdims[m]))
                    throw Error(ErrorKind::NoSolution, "module dimension equation fails for " + base.label(a));
                continue;
            }
            csp.add_linear(terms, target, bd[a] * mdims[m], a * r + m);
        }
    }
    for (int a = 0; a < n; ++a) {
        if (a == u) continue;
        for (int b = 0; b < n; ++b) {
            if (b == u) continue;
            for (int p = 0; p < r; ++p)
                for (int m = 0; m < r; ++m) {
                    std::int64_t constant = 0;
                    std::vector<std::pair<std::int64_t, std::pair<int, int>>> terms;
                    auto add_term = [&](std::int64_t coef, const Operand& x, const Operand& y) {
                        if ((x.var < 0 && x.c == 0) || (y.var < 0 && y.c == 0)) return;
                        if (x.var < 0 && y.var < 0)
                            constant += coef * x.c * y.c;
                        else if (x.var < 0)
                            terms.push_back({coef * x.c, {y.var, detail::Csp::kOne}});
                        else if (y.var < 0)
                            terms.push_back({coef * y.c, {x.var, detail::Csp::kOne}});
                        else
                            terms.push_back({coef, {x.var, y.var}});
                    };
                    for (int q = 0; q < r; ++q) add_term(1, op[idx(a, p, q)], op[idx(b, q, m)]);
                    Operand one;
                    one.c = 1;
                    for (const auto& t : base.product(a, b)) add_term(-t.n, one, op[idx(t.k, p, m)]);
                    if (terms.empty()) {
                        if (constant != 0)
                            throw Error(ErrorKind::NoSolution, "module associativity fails for " + base.label(a) +
                                                                   " and " + base.label(b));
                        continue;
                    }
                    csp.add_quadratic(constant, terms, 0);
                }
        }
    }
    std::vector<ModuleAction> raw;
    bool complete = csp.solve(options.search_cap, [&](const std::vector<std::int64_t>& values) {
        ModuleAction act;
        act.module_rank = r;
        act.dims = mdims;
        act.matrices.assign(n, zero_matrix(r, r));
        for (int a = 0; a < n; ++a)
            for (int p = 0; p < r; ++p)
                for (int m = 0; m < r; ++m) {
                    const auto& o = op[idx(a, p, m)];
                    act.matrices[a][p][m] = o.var >= 0 ? values[o.var] : o.c;
                }
        if (module_action_valid(base, act, bd)) raw.push_back(std::move(act));
    });
    if (!complete)
        throw Error(ErrorKind::SearchCapExceeded,
                    "search cap of " + std::to_string(options.search_cap) + " nodes exceeded");
    if (raw.empty()) throw Error(ErrorKind::NoSolution, "no module action with the given dims");

    // canonical form under dim-preserving permutations of the module basis
    std::vector<std::vector<int>> classes;
    {
        std::vector<char> seen(r, 0);
        for (int i = 0; i < r; ++i) {
            if (seen[i]) continue;
            std::vector<int> cls;
            for (int j = i; j < r; ++j)
                if (!seen[j] && dims_close(mdims[i], mdims[j])) {
                    seen[j] = 1;
                    cls.push_back(j);
                }
            classes.push_back(cls);
        }
    }
    auto encode = [&](const ModuleAction& act, const std::vector<int>& perm) {
        std::vector<std::int64_t> code;
        std::vector<int> inv(r);
        for (int i = 0; i < r; ++i) inv[perm[i]] = i;
        for (int a = 0; a < n; ++a)
            for (int p = 0; p < r; ++p)
                for (int m = 0; m < r; ++m) code.push_back(act.matrices[a][inv[p]][inv[m]]);
        return code;
    };
    auto for_each_perm = [&](const std::function<void(const std::vector<int>&)>& f) {
        std::vector<std::vector<int>> images = classes;
        std::function<void(std::size_t)> rec = [&](std::size_t c) {
            if (c == classes.size()) {
                std::vector<int> perm(r);
                for (std::size_t k = 0; k < classes.size(); ++k)
                    for (std::size_t t = 0; t < classes[k].size(); ++t) perm[classes[k][t]] = images[k][t];
                f(perm);
                return;
            }
            std::sort(images[c].begin(), images[c].end());
            do {
                rec(c + 1);
            } while (std::next_permutation(images[c].begin(), images[c].end()));
        };
        rec(0);
    };
    std::set<std::vector<std::int64_t>> codes;
    std::vector<ModuleAction> out;
    for (const auto& act : raw) {
        std::vector<std::int64_t> best;
        std::vector<int> best_perm;
        for_each_perm([&](const std::vector<int>& perm) {
            auto c = encode(act, perm);
            if (best.empty() || c < best) {
                best = c;
                best_perm = perm;
            }
        });
        if (!codes.insert(best).second) continue;
        ModuleAction canon = act;
        std::vector<int> inv(r);
        for (int i = 0; i < r; ++i) inv[best_perm[i]] = i;
        for (int a = 0; a < n; ++a)
            for (int p = 0; p < r; ++p)
                for (int m = 0; m < r; ++m) canon.matrices[a][p][m] = act.matrices[a][inv[p]][inv[m]];
        out.push_back(std::move(canon));
    }
    std::sort(out.begin(), out.end(), [&](const ModuleAction& x, const ModuleAction& y) {
        std::vector<int> id(r);
        std::iota(id.begin(), id.end(), 0);
        return encode(x, id) < encode(y, id);
    });
    return out;
}

}  // namespace fusion
