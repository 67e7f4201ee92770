#include "fusion/intmat.hpp"

#include <cstdlib>
#include <utility>

namespace fusion {

IntMat identity_matrix(std::size_t n) {
    IntMat m(n, std::vector<std::int64_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

IntMat zero_matrix(std::size_t rows, std::size_t cols) {
    return IntMat(rows, std::vector<std::int64_t>(cols, 0));
}

IntMat multiply(const IntMat& a, const IntMat& b) {
    if (a.empty()) return {};
    std::size_t inner = b.size();
    std::size_t cols = b.empty() ? 0 : b[0].size();
    IntMat c = zero_matrix(a.size(), cols);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t k = 0; k < inner; ++k) {
            if (a[i][k] == 0) continue;
            for (std::size_t j = 0; j < cols; ++j) c[i][j] += a[i][k] * b[k][j];
        }
    return c;
}

std::int64_t mod_floor(std::int64_t a, std::int64_t m) {
    std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

std::vector<std::int64_t> SmithForm::diagonal() const {
    std::vector<std::int64_t> d;
    std::size_t n = D.empty() ? 0 : std::min(D.size(), D[0].size());
    for (std::size_t i = 0; i < n; ++i) d.push_back(D[i][i]);
    return d;
}

std::size_t SmithForm::rank() const {
    std::size_t r = 0;
    for (auto v : diagonal())
        if (v != 0) ++r;
    return r;
}

namespace {

struct Work {
    IntMat A, U, V;
    std::size_t m, n;

    void swap_rows(std::size_t i, std::size_t j) {
        std::swap(A[i], A[j]);
        std::swap(U[i], U[j]);
    }
    void swap_cols(std::size_t i, std::size_t j) {
        for (auto& row : A) std::swap(row[i], row[j]);
        for (auto& row : V) std::swap(row[i], row[j]);
    }
    // row_i += q * row_j
    void add_row(std::size_t i, std::size_t j, std::int64_t q) {
        for (std::size_t c = 0; c < n; ++c) A[i][c] += q * A[j][c];
        for (std::size_t c = 0; c < m; ++c) U[i][c] += q * U[j][c];
    }
    // col_i += q * col_j
    void add_col(std::size_t i, std::size_t j, std::int64_t q) {
        for (std::size_t r = 0; r < m; ++r) A[r][i] += q * A[r][j];
        for (std::size_t r = 0; r < n; ++r) V[r][i] += q * V[r][j];
    }
    void negate_row(std::size_t i) {
        for (auto& x : A[i]) x = -x;
        for (auto& x : U[i]) x = -x;
    }
};

}  // namespace

SmithForm smith_normal_form(const IntMat& a) {
    Work w;
    w.A = a;
    w.m = a.size();
    w.n = a.empty() ? 0 : a[0].size();
    w.U = identity_matrix(w.m);
    w.V = identity_matrix(w.n);
    std::size_t lim = std::min(w.m, w.n);
    for (std::size_t t = 0; t < lim; ++t) {
        auto pick_pivot = [&]() -> bool {
            std::size_t bi = 0, bj = 0;
            std::int64_t best = 0;
            for (std::size_t i = t; i < w.m; ++i)
                for (std::size_t j = t; j < w.n; ++j) {
                    std::int64_t v = std::llabs(w.A[i][j]);
                    if (v != 0 && (best == 0 || v < best)) {
                        best = v;
                        bi = i;
                        bj = j;
                    }
                }
            if (best == 0) return false;
            if (bi != t) w.swap_rows(bi, t);
            if (bj != t) w.swap_cols(bj, t);
            return true;
        };
        if (!pick_pivot()) break;
        for (;;) {
            bool dirty = false;
            for (std::size_t i = t + 1; i < w.m; ++i) {
                if (w.A[i][t] == 0) continue;
                std::int64_t q = w.A[i][t] / w.A[t][t];
                w.add_row(i, t, -q);
                if (w.A[i][t] != 0) dirty = true;
            }
            for (std::size_t j = t + 1; j < w.n; ++j) {
                if (w.A[t][j] == 0) continue;
                std::int64_t q = w.A[t][j] / w.A[t][t];
                w.add_col(j, t, -q);
                if (w.A[t][j] != 0) dirty = true;
            }
            if (dirty) {
                pick_pivot();
                continue;
            }
            bool divisible = true;
            for (std::size_t i = t + 1; i < w.m && divisible; ++i)
                for (std::size_t j = t + 1; j < w.n; ++j)
                    if (w.A[i][j] % w.A[t][t] != 0) {
                        w.add_row(t, i, 1);
                        divisible = false;
                        break;
                    }
            if (divisible) break;
        }
        if (w.A[t][t] < 0) w.negate_row(t);
    }
    return SmithForm{std::move(w.U), std::move(w.V), std::move(w.A)};
}

}  // namespace fusion
