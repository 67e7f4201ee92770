#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "fusion/ring.hpp"

namespace oracle {

// SU(2) at level n-1 via the S-matrix.
inline std::int64_t verlinde_coefficient(int n, int a, int b, int c) {
    const double pi = std::acos(-1.0);
    auto S = [&](int i, int j) { return std::sqrt(2.0 / (n + 1)) * std::sin((i + 1) * (j + 1) * pi / (n + 1)); };
    double s = 0;
    for (int m = 0; m < n; ++m) s += S(a, m) * S(b, m) * S(c, m) / S(0, m);
    return std::llround(s);
}

inline double a_series_dim(int n, int a) {
    const double pi = std::acos(-1.0);
    return std::sin((a + 1) * pi / (n + 1)) / std::sin(pi / (n + 1));
}

// Relabels simples by a permutation: simple i of the input becomes perm[i].
inline fusion::FusionRing permuted(const fusion::FusionRing& r, const std::vector<int>& perm) {
    const int n = r.rank();
    std::vector<std::string> labels(n);
    std::vector<int> dual(n);
    for (int i = 0; i < n; ++i) {
        labels[perm[i]] = r.label(i);
        dual[perm[i]] = perm[r.dual(i)];
    }
    std::vector<fusion::Entry> e;
    for (const auto& x : r.entries()) e.push_back({perm[x.i], perm[x.j], perm[x.k], x.n});
    std::optional<fusion::Grading> g;
    if (r.grading()) {
        g = fusion::Grading{r.grading()->group, std::vector<std::vector<std::int64_t>>(n)};
        for (int i = 0; i < n; ++i) g->deg[perm[i]] = r.grading()->deg[i];
    }
    return fusion::FusionRing(labels, perm[r.unit()], dual, e, g);
}

inline std::vector<int> random_permutation(int n, std::mt19937& rng) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

// Brute-force associativity and Frobenius check at one index triple.
inline bool associative_at(const fusion::FusionRing& r, int a, int b, int c) {
    const int n = r.rank();
    for (int d = 0; d < n; ++d) {
        std::int64_t l = 0, rr = 0;
        for (int m = 0; m < n; ++m) {
            l += r.N(a, b, m) * r.N(m, c, d);
            rr += r.N(b, c, m) * r.N(a, m, d);
        }
        if (l != rr) return false;
    }
    return true;
}

inline bool frobenius_at(const fusion::FusionRing& r, int a, int b, int c) {
    const std::int64_t v = r.N(a, b, c);
    return v == r.N(r.dual(a), c, b) && v == r.N(c, r.dual(b), a) && v == r.N(r.dual(b), r.dual(a), r.dual(c));
}

// Largest eigenvalue of a nonnegative matrix by plain power iteration, independent of the library.
inline double spectral_radius(const std::vector<std::vector<double>>& a) {
    const std::size_t n = a.size();
    std::vector<double> v(n, 1.0), w(n);
    double lambda = 0;
    for (int it = 0; it < 20000; ++it) {
        for (std::size_t i = 0; i < n; ++i) {
            w[i] = v[i];  // shift by identity to avoid periodicity
            for (std::size_t j = 0; j < n; ++j) w[i] += a[i][j] * v[j];
        }
        double norm = *std::max_element(w.begin(), w.end());
        for (std::size_t i = 0; i < n; ++i) v[i] = w[i] / norm;
        lambda = norm - 1;
    }
    return lambda;
}

inline double object_dim(const fusion::FusionRing& r, int x) {
    std::vector<std::vector<double>> a(r.rank(), std::vector<double>(r.rank()));
    for (int i = 0; i < r.rank(); ++i)
        for (int k = 0; k < r.rank(); ++k) a[k][i] = static_cast<double>(r.N(x, i, k));
    return spectral_radius(a);
}

}  // namespace oracle
