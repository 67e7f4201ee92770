#include "fusion/audit.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <map>
#include <sstream>
#include <tuple>

#include "fusion/error.hpp"
#include "fusion/ring_ops.hpp"

namespace fusion {

namespace {

std::string fmt_double(double x, int prec = 6) {
    std::ostringstream os;
    os.precision(prec);
    os << std::fixed << x;
    return os.str();
}

// (rounded dim, simples with that dim, self-dual simples with that dim)
std::vector<std::tuple<std::int64_t, int, int>> self_dual_profile(const FusionRing& ring) {
    const auto d = fp_dims(ring).dims;
    std::map<std::int64_t, std::pair<int, int>> m;
    for (int i = 0; i < ring.rank(); ++i) {
        auto& e = m[std::llround(d[i] * 1e5)];
        ++e.first;
        if (ring.dual(i) == i) ++e.second;
    }
    std::vector<std::tuple<std::int64_t, int, int>> out;
    for (const auto& [k, v] : m) out.emplace_back(k, v.first, v.second);
    return out;
}

std::string profile_string(const std::vector<std::tuple<std::int64_t, int, int>>& p) {
    std::string s;
    for (const auto& [d, n, sd] : p) {
        if (!s.empty()) s += ", ";
        s += fmt_double(d / 1e5, 5) + ":" + std::to_string(sd) + "/" + std::to_string(n);
    }
    return s;
}

}  // namespace

bool AuditReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const AuditCheck& c) { return c.passed; });
}

std::vector<std::string> AuditReport::failed_checks() const {
    std::vector<std::string> out;
    for (const auto& c : checks)
        if (!c.passed) out.push_back(c.name);
    return out;
}

AuditReport audit_row(const TheoremRowSpec& spec, int k_horizon) {
    const TheoremRow row = theorem_row(spec);
    const FusionRing& ring = row.ring;
    const int x = row.generator;
    AuditReport r;
    r.spec = row.spec;
    r.name = row.name;
    r.rank = ring.rank();
    r.generator = ring.label(x);
    r.adjoint_name = row.adjoint_name;
    r.steps = row.steps;
    r.k_horizon = k_horizon;
    r.expected_grading = row.expected_grading.type_string();

    const double tol = acceptance_tolerance();
    r.generator_dim = fp_dims(ring).dims[x];
    r.checks.push_back({"generator_dim", r.generator_dim < 2 - tol, "FPdim " + fmt_double(r.generator_dim)});

    r.checks.push_back({"generates", is_generator(ring, x), "generator " + r.generator});

    const auto kn = is_k_normal(ring, x, k_horizon);
    r.k_equal = kn.equal;
    r.K = kn.K;
    r.checks.push_back({"k_normal", kn.K && *kn.K <= 2,
                        (kn.K ? "K=" + std::to_string(*kn.K) : std::string("K>") + std::to_string(k_horizon)) +
                            " (horizon " + std::to_string(k_horizon) + ")"});

    const auto ug = universal_grading(ring);
    r.grading = ug.group.type_string();
    r.checks.push_back({"grading", ug.group.isomorphic_to(row.expected_grading),
                        r.grading + " vs expected " + r.expected_grading});

    const auto ad = adjoint_subring(ring);
    const FusionRing adring = restrict_ring(ring, ad);
    r.checks.push_back({"adjoint", are_isomorphic(adring, row.expected_adjoint),
                        "rank " + std::to_string(adring.rank()) + " vs " + row.adjoint_name + " rank " +
                            std::to_string(row.expected_adjoint.rank())});

    auto xx = multiply(ring, ObjectVector::simple(ring.rank(), x), ObjectVector::simple(ring.rank(), ring.dual(x)));
    auto from_gen = subring_generated(ring, xx.support());
    r.checks.push_back({"adjoint_from_generator", from_gen == ad,
                        "<X (x) X*> has rank " + std::to_string(from_gen.size())});
    return r;
}

std::vector<AuditReport> audit_all(int max_M, int k_horizon) {
    if (max_M < 1) throw Error(ErrorKind::MalformedInput, "max-M must be positive");
    std::vector<std::future<AuditReport>> jobs;
    for (int row = 1; row <= row_count(); ++row)
        for (int M = 1; M <= max_M; ++M)
            jobs.push_back(std::async(std::launch::async, [=] { return audit_row({row, 0, M, ""}, k_horizon); }));
    std::vector<AuditReport> out;
    for (auto& j : jobs) out.push_back(j.get());
    return out;
}

std::string audit_table(const std::vector<AuditReport>& reports) {
    std::ostringstream os;
    os << "row  N  M  rank  generator      FPdim     K    grading           adjoint  result\n";
    for (const auto& r : reports) {
        char buf[256];
        std::snprintf(buf, sizeof buf, "%-4d %-2d %-2d %-5d %-14s %-9.5f %-4s %-17s %-8s %s", r.spec.row, r.spec.N,
                      r.spec.M, r.rank, r.generator.c_str(), r.generator_dim,
                      r.K ? std::to_string(*r.K).c_str() : "-", r.grading.c_str(), r.adjoint_name.c_str(),
                      r.passed() ? "PASS" : "FAIL");
        os << buf;
        for (const auto& f : r.failed_checks()) os << " " << f;
        os << "\n";
    }
    return os.str();
}

SeparationVerdict separation_check(const FusionRing& a, const FusionRing& b) {
    SeparationVerdict v;
    if (a.rank() != b.rank()) {
        v.invariant = "rank";
        v.left = std::to_string(a.rank());
        v.right = std::to_string(b.rank());
        return v;
    }
    const auto ia = invertibles(a), ib = invertibles(b);
    const std::string ta = ia.abelian ? ia.group.type_string() : "non-abelian of order " + std::to_string(ia.elements.size());
    const std::string tb = ib.abelian ? ib.group.type_string() : "non-abelian of order " + std::to_string(ib.elements.size());
    if (ta != tb) {
        v.invariant = "invertibles";
        v.left = ta;
        v.right = tb;
        return v;
    }
    const auto pa = self_dual_profile(a), pb = self_dual_profile(b);
    if (pa != pb) {
        v.invariant = "self_dual_counts";
        v.left = profile_string(pa);
        v.right = profile_string(pb);
        return v;
    }
    if (find_isomorphisms(a, b, 1).empty()) {
        v.invariant = "fusion_rules";
        v.left = v.right = "no isomorphism";
        return v;
    }
    v.isomorphic = true;
    v.left = v.right = ta;
    return v;
}

SeparationVerdict separation_check(const TheoremRowSpec& a, const TheoremRowSpec& b) {
    const TheoremRow ra = theorem_row(a), rb = theorem_row(b);
    if (!ra.expected_grading.isomorphic_to(rb.expected_grading))
        throw Error(ErrorKind::ConstraintViolation, "grading groups differ: " + ra.expected_grading.type_string() +
                                                        " vs " + rb.expected_grading.type_string());
    return separation_check(ra.ring, rb.ring);
}

}  // namespace fusion
