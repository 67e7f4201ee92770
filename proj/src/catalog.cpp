#include "fusion/catalog.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <set>

#include "json.hpp"

#include "fusion/error.hpp"
#include "fusion/solver.hpp"

namespace fusion {

namespace detail {
const std::map<std::string, std::string>& catalog_fixture_texts();
}

namespace {

using nlohmann::json;

double qint(int k, int h) { return std::sin(k * std::numbers::pi / h) / std::sin(std::numbers::pi / h); }

std::vector<double> distinct_sorted(std::vector<double> v, double tol = 1e-6) {
    std::sort(v.begin(), v.end());
    std::vector<double> out;
    for (double x : v)
        if (out.empty() || x - out.back() > tol) out.push_back(x);
    return out;
}

std::vector<double> formula_dims(const std::string& name, const std::string& family, int size) {
    std::vector<double> d;
    const double r2 = std::numbers::sqrt2;
    if (family == "adA") {
        const int N = size, h = N + 1;
        if (name == "A_even") {
            for (int n = 1; n <= (N + 1) / 2; ++n) d.push_back(qint(2 * n - 1, h));
        } else if (name == "A_odd") {
            for (int n = 1; n <= N / 2; ++n) d.push_back(qint(2 * n, h));
        } else if (name == "Dh_even") {
            for (int n = 1; 4 * n <= N + 1; ++n) d.push_back(r2 * qint(2 * n - 1, h));
        } else if (name == "Dh_odd") {
            for (int n = 1; 4 * n < N + 1; ++n) d.push_back(r2 * qint(2 * n, h));
            d.push_back(qint((N + 1) / 2, h) / r2);
        }
    } else if (family == "adD") {
        const int N = size / 2, h = 4 * N - 2;
        if (name == "D_even") {
            for (int n = 1; n < N; ++n) d.push_back(qint(2 * n - 1, h));
            d.push_back(qint(2 * N - 1, h) / 2);
        } else if (name == "D_odd") {
            for (int n = 1; n < N; ++n) d.push_back(qint(2 * n, h));
        }
    }
    if (d.empty()) throw Error(ErrorKind::MalformedInput, "unknown dimension formula '" + name + "' for " + family);
    return distinct_sorted(d);
}

std::string substitute(std::string s, int size) {
    auto rep = [&](const std::string& key, const std::string& val) {
        for (std::size_t p; (p = s.find(key)) != std::string::npos;) s.replace(p, key.size(), val);
    };
    rep("{2N}", std::to_string(size));
    rep("{H}", std::to_string((size + 1) / 2 + 1));
    rep("{N}", std::to_string(size));
    return s;
}

int support_size(const std::string& key, int size) {
    if (key == "N" || key == "2N") return size;
    if (key == "H") return (size + 1) / 2 + 1;
    throw Error(ErrorKind::MalformedInput, "unknown support size '" + key + "'");
}

bool case_matches(const json& when, int size) {
    if (when.contains("eq")) {
        for (int v : when["eq"])
            if (v == size) return true;
        return false;
    }
    if (when.contains("mod")) {
        int m = when["mod"];
        for (int r : when["rem"])
            if (size % m == r) return true;
        return false;
    }
    return true;
}

void add_edge(IntMat& a, int i, int j) { a[i][j] = a[j][i] = 1; }

IntMat graph_adjacency(const std::string& g, int size) {
    int n = g == "E6" ? 6 : g == "E7" ? 7 : g == "E8" ? 8 : size;
    if (n < 1) throw Error(ErrorKind::MalformedInput, "graph " + g + " needs a size");
    IntMat a = zero_matrix(n, n);
    if (g == "A") {
        for (int i = 0; i + 1 < n; ++i) add_edge(a, i, i + 1);
    } else if (g == "D") {
        if (n < 3) throw Error(ErrorKind::MalformedInput, "D graph needs at least 3 nodes");
        for (int i = 0; i + 1 < n - 2; ++i) add_edge(a, i, i + 1);
        add_edge(a, n - 3, n - 2);
        add_edge(a, n - 3, n - 1);
    } else if (g == "E7") {
        for (int i = 0; i < 5; ++i) add_edge(a, i, i + 1);
        add_edge(a, 2, 6);
    } else if (g == "E6" || g == "E8") {
        a = dynkin_adjacency({g == "E6" ? AdeFamily::E6 : AdeFamily::E8, 0});
    } else {
        throw Error(ErrorKind::MalformedInput, "unknown graph '" + g + "'");
    }
    return a;
}

std::vector<int> bipartition(const IntMat& a) {
    const int n = static_cast<int>(a.size());
    std::vector<int> colour(n, -1);
    colour[0] = 0;
    std::vector<int> stack{0};
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w = 0; w < n; ++w)
            if (a[v][w] && colour[w] < 0) {
                colour[w] = 1 - colour[v];
                stack.push_back(w);
            }
    }
    return colour;
}

double class_weight(const std::vector<double>& v, const std::vector<int>& colour, int parity) {
    double s = 0;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (colour[i] == parity) s += v[i] * v[i];
    return s;
}

DimSupport own_graph(const BPCatalogEntry& e) {
    if (e.family == "adA") return {"A", e.size, 0};
    if (e.family == "adD") return {"D", e.size, 0};
    if (e.family == "adE6") return {"E6", 0, 0};
    return {"E8", 0, 0};
}

BimoduleRecord parse_bimodule(const json& j, const std::string& family, int size) {
    BimoduleRecord b;
    b.id = substitute(j.at("id"), size);
    b.order = j.at("order");
    b.action = j.value("action", "trivial");
    if (j.contains("twist_of")) b.twist_of = substitute(j["twist_of"], size);
    b.excluded = j.value("excluded", "");
    if (j.contains("dims")) {
        const auto& d = j["dims"];
        if (d.is_string())
            b.dims = formula_dims(d, family, size);
        else
            b.dims = distinct_sorted(d.get<std::vector<double>>());
    }
    if (j.contains("support")) {
        const auto& s = j["support"];
        DimSupport ds;
        ds.graph = s.at("graph");
        ds.size = s.contains("size") ? support_size(s["size"], size) : 0;
        ds.parity = s.at("parity");
        b.support = ds;
    }
    return b;
}

}  // namespace

const BimoduleRecord& BPCatalogEntry::bimodule(const std::string& id) const {
    for (const auto& b : bimodules)
        if (b.id == id) return b;
    throw Error(ErrorKind::MalformedInput, "no bimodule '" + id + "' over " + family);
}

std::vector<std::string> catalog_families() {
    std::vector<std::string> out;
    for (const auto& [k, v] : detail::catalog_fixture_texts()) out.push_back(k);
    return out;
}

const std::string& catalog_fixture(const std::string& family) {
    const auto& m = detail::catalog_fixture_texts();
    auto it = m.find(family);
    if (it == m.end()) throw Error(ErrorKind::UnknownFamily, "unknown family '" + family + "'");
    return it->second;
}

BPCatalogEntry bp_catalog(const std::string& family, int size) {
    const json doc = json::parse(catalog_fixture(family));
    if (family == "adA" && size < 2) throw Error(ErrorKind::MalformedInput, "adA needs N >= 2");
    if (family == "adD" && (size < 4 || size % 2)) throw Error(ErrorKind::MalformedInput, "adD needs an even size >= 4");
    if (family == "adE6" || family == "adE8") size = 0;
    for (const auto& c : doc.at("cases")) {
        if (!case_matches(c.at("when"), size)) continue;
        BPCatalogEntry e;
        e.family = family;
        e.size = size;
        e.version = doc.value("version", 0);
        e.anchor = c.at("anchor");
        e.brauer_picard = c.at("brauer_picard");
        e.exponent = c.at("exponent");
        e.inv_center = FiniteAbelianGroup(c.at("inv_center").get<std::vector<std::int64_t>>());
        for (const auto& b : c.at("bimodules")) e.bimodules.push_back(parse_bimodule(b, family, size));
        for (auto& b : e.bimodules)
            if (!b.twist_of.empty()) {
                const auto& base = e.bimodule(b.twist_of);
                b.dims = base.dims;
                b.support = base.support;
                if (b.excluded.empty()) b.excluded = base.excluded;
            }
        for (const auto& h : c.at("homs")) {
            HomRecord r;
            r.bimodule = substitute(h.at("bimodule"), size);
            r.h2_quotient = h.value("h2_quotient", "none");
            for (const auto& s : h.value("covers", std::vector<std::string>{})) r.covers.push_back(substitute(s, size));
            e.bimodule(r.bimodule);
            e.homs.push_back(r);
        }
        return e;
    }
    throw Error(ErrorKind::UnknownFamily, "no catalog case for " + family + " size " + std::to_string(size));
}

BPCatalogEntry bp_catalog(const AdeSpec& spec) {
    switch (spec.family) {
        case AdeFamily::AdA: return bp_catalog("adA", spec.size);
        case AdeFamily::AdD: return bp_catalog("adD", spec.size);
        case AdeFamily::AdE6: return bp_catalog("adE6");
        case AdeFamily::AdE8: return bp_catalog("adE8");
        default: throw Error(ErrorKind::UnknownFamily, ade_name(spec) + " is not an adjoint family");
    }
}

std::vector<std::string> admissible_generator_bimodules(const BPCatalogEntry& entry) {
    const double tol = 1e-6;
    std::vector<std::string> out;
    for (const auto& b : entry.bimodules) {
        if (!b.excluded.empty()) continue;
        bool small = std::any_of(b.dims.begin(), b.dims.end(), [&](double d) { return d > 1 + tol && d < 2 - tol; });
        if (small) out.push_back(b.id);
    }
    return out;
}

std::vector<double> computed_bimodule_dims(const BPCatalogEntry& entry, const std::string& id) {
    const auto& b = entry.bimodule(id);
    if (!b.support) throw Error(ErrorKind::MalformedInput, "bimodule '" + id + "' has no support graph");
    const auto own = own_graph(entry);
    const IntMat ca = graph_adjacency(own.graph, own.size);
    const double target = class_weight(perron_vector(ca, 0).first, bipartition(ca), 0);
    const IntMat ga = graph_adjacency(b.support->graph, b.support->size);
    const auto v = perron_vector(ga, 0).first;
    const auto colour = bipartition(ga);
    const double scale = std::sqrt(target / class_weight(v, colour, b.support->parity));
    std::vector<double> out;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (colour[i] == b.support->parity) out.push_back(v[i] * scale);
    return distinct_sorted(out);
}

std::int64_t negation_orbits(const CohomologyGroup& group) {
    FiniteAbelianGroup g(group.factors);
    std::set<std::vector<std::int64_t>> seen;
    std::int64_t orbits = 0;
    for (const auto& x : g.elements()) {
        if (seen.count(x)) continue;
        ++orbits;
        seen.insert(x);
        seen.insert(g.negate(x));
    }
    return orbits;
}

std::vector<ExtensionRecord> extension_count(const BPCatalogEntry& entry, std::int64_t M) {
    if (M < 1) throw Error(ErrorKind::MalformedInput, "M must be positive");
    std::vector<ExtensionRecord> out;
    for (const auto& h : entry.homs) {
        const auto& b = entry.bimodule(h.bimodule);
        ExtensionRecord r;
        r.hom = "1 -> " + b.id;
        r.bimodule = b.id;
        r.order = b.order;
        r.constraint = std::to_string(b.order) + " | M";
        r.applies = M % b.order == 0;
        r.h2_quotient = h.h2_quotient;
        if (r.applies) {
            auto act = parse_action(b.action, entry.inv_center, M);
            r.h2 = h_cyclic(2, M, entry.inv_center, act);
            r.count = h.h2_quotient == "negation" ? negation_orbits(r.h2) : r.h2.order();
        }
        out.push_back(r);
    }
    return out;
}

std::vector<ExtensionRecord> extension_count(const std::string& family, int size, std::int64_t M) {
    return extension_count(bp_catalog(family, size), M);
}

}  // namespace fusion
