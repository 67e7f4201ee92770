#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace fusion::detail {

// Bounded nonnegative integer variables with
//   linear constraints   sum_v w_v x_v = target  (real weights, tolerance)
//   quadratic constraints sum_t c_t * A_t * B_t = 0 (operands: variable or the constant 1)
class Csp {
public:
    static constexpr int kOne = -1;

    int add_var(std::int64_t upper_bound);
    int add_linear(const std::vector<std::pair<int, double>>& terms, double target, double priority, int tag);
    void add_quadratic(std::int64_t constant, const std::vector<std::pair<std::int64_t, std::pair<int, int>>>& terms,
                       int tag);

    struct Conflict {
        bool linear = true;
        int tag = -1;
    };

    // Calls on_solution for every complete assignment; returns false on cap exhaustion.
    // Throws nothing; `nodes` counts branch attempts.
    bool solve(std::uint64_t cap, const std::function<void(const std::vector<std::int64_t>&)>& on_solution);

    std::uint64_t nodes() const { return nodes_; }
    bool root_failed() const { return root_failed_; }
    const Conflict& first_conflict() const { return first_conflict_; }
    std::size_t var_count() const { return ub_.size(); }

private:
    struct Linear {
        std::vector<std::pair<int, double>> terms;
        double target;
        double residual;
        int unknown;
        double priority;
        int tag;
        double tol;
    };
    struct Quadratic {
        std::int64_t constant;
        std::vector<std::pair<std::int64_t, std::pair<int, int>>> terms;
        int unknown_occ;
        int tag;
    };

    bool assign_and_propagate(std::vector<std::pair<int, std::int64_t>> queue);
    bool check_linear(int c, std::vector<std::pair<int, std::int64_t>>& queue);
    bool check_quadratic(int q, std::vector<std::pair<int, std::int64_t>>& queue);
    void undo_to(std::size_t mark);
    void search(const std::function<void(const std::vector<std::int64_t>&)>& on_solution);
    void note_conflict(bool linear, int tag);

    std::vector<std::int64_t> ub_;
    std::vector<std::int64_t> value_;
    std::vector<std::vector<std::pair<int, double>>> lin_of_;
    std::vector<std::vector<std::pair<int, int>>> quad_of_;
    std::vector<Linear> lin_;
    std::vector<Quadratic> quad_;
    std::vector<int> trail_;
    std::uint64_t nodes_ = 0;
    std::uint64_t cap_ = 0;
    bool capped_ = false;
    bool at_root_ = true;
    bool root_failed_ = false;
    bool have_conflict_ = false;
    Conflict first_conflict_;
};

}  // namespace fusion::detail
