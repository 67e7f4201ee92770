#include "csp.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace fusion::detail {

int Csp::add_var(std::int64_t upper_bound) {
    ub_.push_back(std::max<std::int64_t>(upper_bound, 0));
    value_.push_back(-1);
    lin_of_.emplace_back();
    quad_of_.emplace_back();
    return static_cast<int>(ub_.size()) - 1;
}

int Csp::add_linear(const std::vector<std::pair<int, double>>& terms, double target, double priority, int tag) {
    std::map<int, double> agg;
    for (const auto& [v, w] : terms) agg[v] += w;
    Linear l;
    for (const auto& [v, w] : agg) l.terms.push_back({v, w});
    l.target = target;
    l.residual = target;
    l.unknown = static_cast<int>(l.terms.size());
    l.priority = priority;
    l.tag = tag;
    l.tol = 1e-6 * std::max(1.0, std::abs(target));
    int id = static_cast<int>(lin_.size());
    for (const auto& [v, w] : l.terms) lin_of_[v].push_back({id, w});
    lin_.push_back(std::move(l));
    return id;
}

void Csp::add_quadratic(std::int64_t constant,
                        const std::vector<std::pair<std::int64_t, std::pair<int, int>>>& terms, int tag) {
    Quadratic q;
    q.constant = constant;
    q.tag = tag;
    std::map<int, int> occ;
    for (const auto& t : terms) {
        auto [a, b] = t.second;
        if (a == kOne && b == kOne) {
            q.constant += t.first;
            continue;
        }
        if (a == kOne) std::swap(a, b);
        q.terms.push_back({t.first, {a, b}});
        ++occ[a];
        if (b != kOne) ++occ[b];
    }
    int id = static_cast<int>(quad_.size());
    q.unknown_occ = 0;
    for (const auto& [v, c] : occ) {
        quad_of_[v].push_back({id, c});
        q.unknown_occ += c;
    }
    quad_.push_back(std::move(q));
}

void Csp::note_conflict(bool linear, int tag) {
    if (!have_conflict_) {
        have_conflict_ = true;
        first_conflict_ = {linear, tag};
    }
}

bool Csp::check_linear(int c, std::vector<std::pair<int, std::int64_t>>& queue) {
    const Linear& l = lin_[c];
    if (l.residual < -l.tol) return false;
    if (l.unknown == 0) return std::abs(l.residual) <= l.tol;
    if (l.unknown == 1) {
        for (const auto& [v, w] : l.terms) {
            if (value_[v] >= 0) continue;
            double x = l.residual / w;
            std::int64_t r = std::llround(x);
            if (std::abs(x - static_cast<double>(r)) > 1e-6 * std::max(1.0, std::abs(x))) return false;
            if (r < 0 || r > ub_[v]) return false;
            queue.push_back({v, r});
            return true;
        }
        return true;
    }
    if (l.residual > l.tol) {
        double minw = 1e300;
        for (const auto& [v, w] : l.terms)
            if (value_[v] < 0 && ub_[v] > 0) minw = std::min(minw, w);
        if (minw == 1e300 || l.residual < minw - l.tol) return false;
    }
    return true;
}

bool Csp::check_quadratic(int qi, std::vector<std::pair<int, std::int64_t>>& queue) {
    const Quadratic& q = quad_[qi];
    if (q.unknown_occ > 2) return true;
    std::int64_t c0 = q.constant, a = 0, b = 0;
    int u = -1;
    for (const auto& t : q.terms) {
        int x = t.second.first, y = t.second.second;
        bool xk = value_[x] >= 0;
        bool yk = (y == kOne) || value_[y] >= 0;
        std::int64_t yv = (y == kOne) ? 1 : value_[y];
        if (xk && yk) {
            c0 += t.first * value_[x] * yv;
        } else if (xk || yk) {
            int unk = xk ? y : x;
            std::int64_t kv = xk ? value_[x] : yv;
            if (u >= 0 && u != unk) return true;
            u = unk;
            b += t.first * kv;
        } else {
            if (x != y) return true;
            if (u >= 0 && u != x) return true;
            u = x;
            a += t.first;
        }
    }
    if (u < 0) return c0 == 0;
    if (a == 0) {
        if (b == 0) return c0 == 0;
        if ((-c0) % b != 0) return false;
        std::int64_t r = -c0 / b;
        if (r < 0 || r > ub_[u]) return false;
        queue.push_back({u, r});
        return true;
    }
    std::int64_t root = -1;
    int roots = 0;
    for (std::int64_t r = 0; r <= ub_[u]; ++r)
        if (a * r * r + b * r + c0 == 0) {
            root = r;
            ++roots;
        }
    if (roots == 0) return false;
    if (roots == 1) queue.push_back({u, root});
    return true;
}

bool Csp::assign_and_propagate(std::vector<std::pair<int, std::int64_t>> queue) {
    while (!queue.empty()) {
        auto [v, x] = queue.back();
        queue.pop_back();
        if (value_[v] >= 0) {
            if (value_[v] != x) return false;
            continue;
        }
        if (x < 0 || x > ub_[v]) return false;
        value_[v] = x;
        trail_.push_back(v);
        for (const auto& [c, w] : lin_of_[v]) {
            lin_[c].residual -= w * static_cast<double>(x);
            lin_[c].unknown -= 1;
        }
        for (const auto& [q, occ] : quad_of_[v]) quad_[q].unknown_occ -= occ;
        for (const auto& [c, w] : lin_of_[v])
            if (!check_linear(c, queue)) {
                if (at_root_) note_conflict(true, lin_[c].tag);
                return false;
            }
        for (const auto& [q, occ] : quad_of_[v])
            if (!check_quadratic(q, queue)) {
                if (at_root_) note_conflict(false, quad_[q].tag);
                return false;
            }
    }
    return true;
}

void Csp::undo_to(std::size_t mark) {
    while (trail_.size() > mark) {
        int v = trail_.back();
        trail_.pop_back();
        std::int64_t x = value_[v];
        for (const auto& [c, w] : lin_of_[v]) {
            lin_[c].residual += w * static_cast<double>(x);
            lin_[c].unknown += 1;
        }
        for (const auto& [q, occ] : quad_of_[v]) quad_[q].unknown_occ += occ;
        value_[v] = -1;
    }
}

void Csp::search(const std::function<void(const std::vector<std::int64_t>&)>& on_solution) {
    if (capped_) return;
    int best = -1;
    for (int c = 0; c < static_cast<int>(lin_.size()); ++c) {
        const Linear& l = lin_[c];
        if (l.unknown == 0) continue;
        if (best < 0 || l.unknown < lin_[best].unknown ||
            (l.unknown == lin_[best].unknown && l.priority < lin_[best].priority))
            best = c;
    }
    if (best < 0) {
        for (std::size_t v = 0; v < value_.size(); ++v)
            if (value_[v] < 0) {
                // variables outside every linear constraint: enumerate directly
                for (std::int64_t x = 0; x <= ub_[v]; ++x) {
                    if (++nodes_ > cap_) {
                        capped_ = true;
                        return;
                    }
                    std::size_t mark = trail_.size();
                    if (assign_and_propagate({{static_cast<int>(v), x}})) search(on_solution);
                    undo_to(mark);
                    if (capped_) return;
                }
                return;
            }
        on_solution(value_);
        return;
    }
    const Linear& l = lin_[best];
    std::vector<std::pair<int, double>> unk;
    for (const auto& t : l.terms)
        if (value_[t.first] < 0) unk.push_back(t);
    std::sort(unk.begin(), unk.end(), [](const auto& a, const auto& b) { return a.second > b.second; });
    double tol = l.tol;
    std::vector<std::vector<std::pair<int, std::int64_t>>> completions;
    std::vector<std::pair<int, std::int64_t>> cur;
    std::function<void(std::size_t, double)> rec = [&](std::size_t idx, double rem) {
        if (idx == unk.size()) {
            if (std::abs(rem) <= tol) completions.push_back(cur);
            return;
        }
        auto [v, w] = unk[idx];
        std::int64_t hi = std::min<std::int64_t>(ub_[v], static_cast<std::int64_t>(std::floor((rem + tol) / w)));
        for (std::int64_t x = 0; x <= hi; ++x) {
            cur.push_back({v, x});
            rec(idx + 1, rem - w * static_cast<double>(x));
            cur.pop_back();
        }
    };
    rec(0, l.residual);
    for (const auto& comp : completions) {
        if (++nodes_ > cap_) {
            capped_ = true;
            return;
        }
        std::size_t mark = trail_.size();
        if (assign_and_propagate(comp)) search(on_solution);
        undo_to(mark);
        if (capped_) return;
    }
}

bool Csp::solve(std::uint64_t cap, const std::function<void(const std::vector<std::int64_t>&)>& on_solution) {
    cap_ = cap;
    capped_ = false;
    at_root_ = true;
    // root consistency of every constraint
    std::vector<std::pair<int, std::int64_t>> queue;
    bool ok = true;
    for (int c = 0; c < static_cast<int>(lin_.size()) && ok; ++c)
        if (!check_linear(c, queue)) {
            note_conflict(true, lin_[c].tag);
            ok = false;
        }
    for (int q = 0; q < static_cast<int>(quad_.size()) && ok; ++q)
        if (!check_quadratic(q, queue)) {
            note_conflict(false, quad_[q].tag);
            ok = false;
        }
    if (ok) ok = assign_and_propagate(queue);
    at_root_ = false;
    if (!ok) {
        root_failed_ = true;
        undo_to(0);
        return true;
    }
    search(on_solution);
    undo_to(0);
    return !capped_;
}

}  // namespace fusion::detail
