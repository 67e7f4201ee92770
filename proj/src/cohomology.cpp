#include "fusion/cohomology.hpp"

#include <map>
#include <numeric>
#include <sstream>
#include <unordered_set>

#include "fusion/error.hpp"

namespace fusion {

namespace {

IntMat reduced(const FiniteAbelianGroup& A, IntMat m) {
    for (std::size_t i = 0; i < m.size(); ++i)
        for (auto& x : m[i]) x = mod_floor(x, A.orders()[i]);
    return m;
}

IntMat mat_mul_mod(const FiniteAbelianGroup& A, const IntMat& a, const IntMat& b) {
    return reduced(A, multiply(a, b));
}

std::vector<std::int64_t> prime_factors(std::int64_t n) {
    std::vector<std::int64_t> ps;
    for (std::int64_t p = 2; p * p <= n; ++p)
        if (n % p == 0) {
            ps.push_back(p);
            while (n % p == 0) n /= p;
        }
    if (n > 1) ps.push_back(n);
    return ps;
}

struct Int128Hash {
    std::size_t operator()(__int128 v) const {
        auto lo = static_cast<std::uint64_t>(v);
        auto hi = static_cast<std::uint64_t>(static_cast<unsigned __int128>(v) >> 64);
        return std::hash<std::uint64_t>()(lo ^ (hi * 0x9e3779b97f4a7c15ULL));
    }
};

}  // namespace

GroupAction trivial_action(const FiniteAbelianGroup& coeffs, std::int64_t M) {
    return GroupAction{M, identity_matrix(coeffs.factor_count())};
}

GroupAction parse_action(const std::string& spec, const FiniteAbelianGroup& coeffs, std::int64_t M) {
    const std::size_t r = coeffs.factor_count();
    GroupAction act = trivial_action(coeffs, M);
    if (spec == "trivial" || spec.empty()) return act;
    if (spec == "swap") {
        if (r != 2 || coeffs.orders()[0] != coeffs.orders()[1])
            throw Error(ErrorKind::MalformedInput, "swap needs two factors of equal order");
        act.matrix = {{0, 1}, {1, 0}};
        validate_action(coeffs, act);
        return act;
    }
    if (spec.rfind("inv", 0) == 0 && spec.size() > 3 && spec.find_first_not_of("0123456789", 3) == std::string::npos) {
        for (char c : spec.substr(3)) {
            std::size_t f = static_cast<std::size_t>(c - '1');
            if (c == '0' || f >= r) throw Error(ErrorKind::MalformedInput, "no factor " + std::string(1, c));
            act.matrix[f][f] = -1;
        }
        validate_action(coeffs, act);
        act.matrix = reduced(coeffs, act.matrix);
        return act;
    }
    act.matrix = zero_matrix(r, r);
    std::stringstream ss(spec);
    std::string image;
    std::size_t j = 0;
    while (std::getline(ss, image, ',')) {
        if (j >= r) throw Error(ErrorKind::MalformedInput, "too many generator images in action '" + spec + "'");
        std::stringstream is(image);
        std::string coord;
        std::size_t i = 0;
        while (std::getline(is, coord, ':')) {
            if (i >= r) throw Error(ErrorKind::MalformedInput, "image has too many coordinates: '" + image + "'");
            try {
                std::size_t used = 0;
                act.matrix[i][j] = std::stoll(coord, &used);
                if (used != coord.size()) throw std::invalid_argument(coord);
            } catch (const std::exception&) {
                throw Error(ErrorKind::MalformedInput, "bad coordinate '" + coord + "' in action");
            }
            ++i;
        }
        if (i != r) throw Error(ErrorKind::MalformedInput, "image '" + image + "' has wrong length");
        ++j;
    }
    if (j != r) throw Error(ErrorKind::MalformedInput, "action '" + spec + "' needs one image per generator");
    validate_action(coeffs, act);
    act.matrix = reduced(coeffs, act.matrix);
    return act;
}

void validate_action(const FiniteAbelianGroup& A, const GroupAction& act) {
    const std::size_t r = A.factor_count();
    if (act.M < 1) throw Error(ErrorKind::MalformedInput, "acting group order must be positive");
    if (act.matrix.size() != r) throw Error(ErrorKind::MalformedInput, "action matrix has wrong size");
    for (const auto& row : act.matrix)
        if (row.size() != r) throw Error(ErrorKind::MalformedInput, "action matrix has wrong size");
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j)
            if (mod_floor(act.matrix[i][j] * A.orders()[j], A.orders()[i]) != 0)
                throw Error(ErrorKind::MalformedInput, "action matrix is not a homomorphism of the coefficients");
    IntMat p = reduced(A, identity_matrix(r));
    const IntMat id = p;
    const IntMat g = reduced(A, act.matrix);
    for (std::int64_t k = 0; k < act.M; ++k) p = mat_mul_mod(A, p, g);
    if (p != id) throw Error(ErrorKind::MalformedInput, "action order does not divide M");
}

std::int64_t CohomologyGroup::order() const {
    std::int64_t o = 1;
    for (auto f : factors) o *= f;
    return o;
}

std::string CohomologyGroup::type_string() const { return FiniteAbelianGroup(factors).type_string(); }

IntMat action_difference(const FiniteAbelianGroup& A, const GroupAction& act) {
    IntMat m = act.matrix;
    for (std::size_t i = 0; i < m.size(); ++i) m[i][i] -= 1;
    return reduced(A, m);
}

IntMat action_norm(const FiniteAbelianGroup& A, const GroupAction& act) {
    const std::size_t r = A.factor_count();
    IntMat sum = zero_matrix(r, r);
    IntMat p = reduced(A, identity_matrix(r));
    const IntMat g = reduced(A, act.matrix);
    for (std::int64_t k = 0; k < act.M; ++k) {
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < r; ++j) sum[i][j] += p[i][j];
        sum = reduced(A, sum);
        p = mat_mul_mod(A, p, g);
    }
    return sum;
}

bool is_zero_endomorphism(const FiniteAbelianGroup& A, const IntMat& m) {
    auto z = reduced(A, m);
    for (const auto& row : z)
        for (auto x : row)
            if (x != 0) return false;
    return true;
}

CohomologyGroup subquotient(const FiniteAbelianGroup& A, const IntMat& phi, const IntMat& psi) {
    const std::size_t r = A.factor_count();
    if (r == 0) return {};
    // K = { x : phi x in D Z^r } from the kernel of [phi | D]
    IntMat block = zero_matrix(r, 2 * r);
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < r; ++j) block[i][j] = phi[i][j];
        block[i][r + i] = A.orders()[i];
    }
    auto s1 = smith_normal_form(block);
    const std::size_t rho = s1.rank();
    IntMat lgen = zero_matrix(r, 2 * r - rho);
    for (std::size_t c = rho; c < 2 * r; ++c)
        for (std::size_t i = 0; i < r; ++i) lgen[i][c - rho] = s1.V[i][c];
    if (2 * r - rho != r) throw Error(ErrorKind::InconsistentComponents, "kernel lattice has unexpected rank");
    // S = im psi + D Z^r, expressed in the basis of K
    IntMat sgen = zero_matrix(r, 2 * r);
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < r; ++j) sgen[i][j] = psi[i][j];
        sgen[i][r + i] = A.orders()[i];
    }
    auto s2 = smith_normal_form(lgen);
    IntMat t = multiply(s2.U, sgen);
    for (std::size_t i = 0; i < r; ++i) {
        std::int64_t sigma = s2.D[i][i];
        for (auto& x : t[i]) {
            if (sigma == 0 || x % sigma != 0)
                throw Error(ErrorKind::InconsistentComponents, "image is not contained in the kernel");
            x /= sigma;
        }
    }
    IntMat c = multiply(s2.V, t);
    auto s3 = smith_normal_form(c);
    CohomologyGroup out;
    if (s3.rank() != r) throw Error(ErrorKind::InconsistentComponents, "subquotient is infinite");
    for (auto d : s3.diagonal())
        if (d > 1) out.factors.push_back(d);
    return out;
}

CohomologyGroup h_cyclic(int degree, std::int64_t M, const FiniteAbelianGroup& coeffs, const GroupAction& action_in) {
    if (degree < 0) throw Error(ErrorKind::MalformedInput, "degree must be nonnegative");
    GroupAction action = action_in;
    action.M = M;
    validate_action(coeffs, action);
    const std::size_t r = coeffs.factor_count();
    auto diff = action_difference(coeffs, action);
    if (degree == 0) return subquotient(coeffs, diff, zero_matrix(r, r));
    auto norm = action_norm(coeffs, action);
    if (degree % 2 == 1) return subquotient(coeffs, norm, diff);
    return subquotient(coeffs, diff, norm);
}

CohomologyGroup h3_roots_of_unity(std::int64_t M) {
    if (M < 1) throw Error(ErrorKind::MalformedInput, "M must be positive");
    // Q/Z truncated at denominator lcm(M, factor orders) = M; trivial action.
    FiniteAbelianGroup qz({M});
    return h_cyclic(3, M, qz, trivial_action(qz, M));
}

CohomologyGroup brute_force_h2(std::int64_t M, const FiniteAbelianGroup& A, const GroupAction& action_in) {
    if (M < 1 || M > 6) throw Error(ErrorKind::BoundsExceeded, "brute force needs 1 <= M <= 6");
    if (A.order() > 9) throw Error(ErrorKind::BoundsExceeded, "brute force needs |A| <= 9");
    GroupAction action = action_in;
    action.M = M;
    validate_action(A, action);
    const auto elems = A.elements();
    const int n = static_cast<int>(elems.size());
    const int m = static_cast<int>(M);
    std::vector<std::vector<int>> add(n, std::vector<int>(n)), act(m, std::vector<int>(n));
    std::vector<int> neg(n);
    for (int a = 0; a < n; ++a) {
        neg[a] = static_cast<int>(A.index_of(A.negate(elems[a])));
        for (int b = 0; b < n; ++b) add[a][b] = static_cast<int>(A.index_of(A.add(elems[a], elems[b])));
    }
    IntMat p = identity_matrix(A.factor_count());
    for (int g = 0; g < m; ++g) {
        for (int a = 0; a < n; ++a) {
            std::vector<std::int64_t> img(A.factor_count(), 0);
            for (std::size_t i = 0; i < img.size(); ++i)
                for (std::size_t j = 0; j < img.size(); ++j) img[i] += p[i][j] * elems[a][j];
            act[g][a] = static_cast<int>(A.index_of(img));
        }
        p = mat_mul_mod(A, p, action.matrix);
    }
    auto sub = [&](int a, int b) { return add[a][neg[b]]; };
    auto encode = [&](const std::vector<int>& f) {
        __int128 code = 0;
        for (int v : f) code = code * n + v;
        return code;
    };

    std::unordered_set<__int128, Int128Hash> boundaries;
    {
        std::vector<int> phi(m, 0), f(m * m);
        while (true) {
            for (int g = 0; g < m; ++g)
                for (int h = 0; h < m; ++h)
                    f[g * m + h] = add[sub(act[g][phi[h]], phi[(g + h) % m])][phi[g]];
            boundaries.insert(encode(f));
            int pos = 0;
            while (pos < m && ++phi[pos] == n) phi[pos++] = 0;
            if (pos == m) break;
        }
    }

    std::vector<std::vector<int>> cocycles;
    {
        std::vector<int> digits(m + 1, 0), f(m * m);
        while (true) {
            const int f00 = digits[m];
            bool ok = digits[0] == f00;  // f(0,k) = f(0,0) is forced
            for (int g = 0; g < m && ok; ++g) {
                f[g * m] = act[g][f00];
                int cur = f[g * m];
                for (int h = 0; h < m; ++h) {
                    int next = sub(add[cur][digits[(g + h) % m]], act[g][digits[h]]);
                    if (h + 1 < m)
                        f[g * m + h + 1] = next;
                    else if (next != f[g * m])
                        ok = false;
                    cur = next;
                }
            }
            for (int g = 0; g < m && ok; ++g)
                for (int h = 0; h < m && ok; ++h)
                    for (int k = 0; k < m && ok; ++k) {
                        int lhs = add[act[g][f[h * m + k]]][f[g * m + (h + k) % m]];
                        int rhs = add[f[((g + h) % m) * m + k]][f[g * m + h]];
                        ok = lhs == rhs;
                    }
            if (ok) cocycles.push_back(f);
            int pos = 0;
            while (pos <= m && ++digits[pos] == n) digits[pos++] = 0;
            if (pos > m) break;
        }
    }
    const std::int64_t nb = static_cast<std::int64_t>(boundaries.size());
    const std::int64_t h_order = static_cast<std::int64_t>(cocycles.size()) / nb;
    if (h_order * nb != static_cast<std::int64_t>(cocycles.size()))
        throw Error(ErrorKind::InconsistentComponents, "coboundaries do not divide cocycles");

    // order of each class, then the group type from p-power torsion counts
    std::vector<std::int64_t> ord;
    ord.reserve(cocycles.size());
    for (const auto& f : cocycles) {
        std::int64_t k = 1;
        std::vector<int> acc = f;
        while (!boundaries.count(encode(acc))) {
            for (int t = 0; t < m * m; ++t) acc[t] = add[acc[t]][f[t]];
            ++k;
        }
        ord.push_back(k);
    }
    std::vector<std::int64_t> orders;
    for (auto pr : prime_factors(h_order)) {
        std::vector<int> ranks{0};
        std::int64_t pk = 1;
        while (true) {
            pk *= pr;
            std::int64_t cnt = 0;
            for (auto o : ord)
                if (pk % o == 0) ++cnt;
            cnt /= nb;
            int e = 0;
            for (std::int64_t c = cnt; c > 1; c /= pr) ++e;
            if (e == ranks.back()) break;
            ranks.push_back(e);
        }
        // number of cyclic factors of order >= p^k is ranks[k] - ranks[k-1]
        for (std::size_t k = 1; k < ranks.size(); ++k) {
            int at_least_k = ranks[k] - ranks[k - 1];
            int at_least_next = k + 1 < ranks.size() ? ranks[k + 1] - ranks[k] : 0;
            std::int64_t q = 1;
            for (std::size_t t = 0; t < k; ++t) q *= pr;
            for (int c = 0; c < at_least_k - at_least_next; ++c) orders.push_back(q);
        }
    }
    CohomologyGroup out;
    out.factors = FiniteAbelianGroup(orders).invariant_factors();
    return out;
}

}  // namespace fusion
