#include "fusion/json_io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "fusion/error.hpp"

namespace fusion {

namespace {

[[noreturn]] void bad(const std::string& msg) { throw Error(ErrorKind::MalformedInput, msg); }

const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) bad(std::string("missing field '") + key + "'");
    return j.at(key);
}

template <class T>
T as(const Json& j, const std::string& what) {
    try {
        return j.get<T>();
    } catch (const nlohmann::json::exception&) {
        bad("bad value for " + what);
    }
}

std::map<std::string, int> label_index(const std::vector<std::string>& labels) {
    std::map<std::string, int> m;
    for (int i = 0; i < static_cast<int>(labels.size()); ++i)
        if (!m.emplace(labels[i], i).second) bad("duplicate label '" + labels[i] + "'");
    return m;
}

int lookup(const std::map<std::string, int>& idx, const Json& j) {
    if (!j.is_string()) bad("label must be a string");
    auto it = idx.find(j.get<std::string>());
    if (it == idx.end()) bad("unknown label '" + j.get<std::string>() + "'");
    return it->second;
}

struct Header {
    std::vector<std::string> labels;
    std::map<std::string, int> idx;
    int unit = 0;
    std::vector<std::optional<int>> dual;
    std::optional<Grading> grading;
};

Header read_header(const Json& j, bool require_dual) {
    Header h;
    h.labels = as<std::vector<std::string>>(field(j, "labels"), "labels");
    if (j.contains("rank") && as<int>(j["rank"], "rank") != static_cast<int>(h.labels.size()))
        bad("rank does not match the number of labels");
    h.idx = label_index(h.labels);
    h.unit = lookup(h.idx, field(j, "unit"));
    h.dual.assign(h.labels.size(), std::nullopt);
    if (j.contains("dual")) {
        if (!j["dual"].is_array()) bad("dual must be an array of pairs");
        for (const auto& p : j["dual"]) {
            if (!p.is_array() || p.size() != 2) bad("dual entries must be label pairs");
            int a = lookup(h.idx, p[0]), b = lookup(h.idx, p[1]);
            for (auto [x, y] : {std::pair{a, b}, std::pair{b, a}}) {
                if (h.dual[x] && *h.dual[x] != y) bad("conflicting dual for '" + h.labels[x] + "'");
                h.dual[x] = y;
            }
        }
    } else if (require_dual) {
        bad("missing field 'dual'");
    }
    if (require_dual)
        for (std::size_t i = 0; i < h.dual.size(); ++i)
            if (!h.dual[i]) bad("no dual given for '" + h.labels[i] + "'");
    if (j.contains("grading") && !j["grading"].is_null()) h.grading = grading_from_json(j["grading"], h.labels);
    return h;
}

Json header_json(const std::vector<std::string>& labels, int unit, const std::vector<std::optional<int>>& dual,
                 const std::optional<Grading>& grading) {
    Json j;
    j["rank"] = labels.size();
    j["labels"] = labels;
    j["unit"] = labels[unit];
    Json d = Json::array();
    for (std::size_t i = 0; i < dual.size(); ++i)
        if (dual[i]) d.push_back({labels[i], labels[*dual[i]]});
    j["dual"] = d;
    if (grading) j["grading"] = grading_to_json(*grading, labels);
    return j;
}

std::string read_stream(std::istream& in) {
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

Json grading_to_json(const Grading& grading, const std::vector<std::string>& labels) {
    Json j;
    j["orders"] = grading.group.orders();
    Json deg = Json::array();
    for (std::size_t i = 0; i < labels.size(); ++i) deg.push_back({labels[i], grading.deg.at(i)});
    j["deg"] = deg;
    return j;
}

Grading grading_from_json(const Json& j, const std::vector<std::string>& labels) {
    auto orders = as<std::vector<std::int64_t>>(field(j, "orders"), "grading orders");
    for (auto o : orders)
        if (o < 1) bad("grading orders must be positive");
    Grading g{FiniteAbelianGroup(orders), {}};
    const auto idx = label_index(labels);
    std::vector<std::optional<std::vector<std::int64_t>>> deg(labels.size());
    const auto& dj = field(j, "deg");
    if (!dj.is_array()) bad("grading deg must be an array");
    for (const auto& e : dj) {
        if (!e.is_array() || e.size() != 2) bad("grading deg entries must be [label, [int...]]");
        int i = lookup(idx, e[0]);
        auto v = as<std::vector<std::int64_t>>(e[1], "degree");
        if (v.size() != orders.size()) bad("degree of '" + labels[i] + "' has wrong length");
        if (deg[i]) bad("degree of '" + labels[i] + "' given twice");
        deg[i] = g.group.reduce(v);
    }
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (!deg[i]) bad("no degree for '" + labels[i] + "'");
        g.deg.push_back(*deg[i]);
    }
    return g;
}

Json ring_to_json(const FusionRing& ring) {
    std::vector<std::optional<int>> dual(ring.duals().begin(), ring.duals().end());
    Json j = header_json(ring.labels(), ring.unit(), dual, std::nullopt);
    Json t = Json::array();
    for (const auto& e : ring.entries()) t.push_back({ring.label(e.i), ring.label(e.j), ring.label(e.k), e.n});
    j["tensor"] = t;
    if (ring.grading()) j["grading"] = grading_to_json(*ring.grading(), ring.labels());
    return j;
}

FusionRing ring_from_json(const Json& j) {
    Header h = read_header(j, true);
    std::vector<Entry> entries;
    const auto& t = field(j, "tensor");
    if (!t.is_array()) bad("tensor must be an array");
    for (const auto& q : t) {
        if (!q.is_array() || q.size() != 4) bad("tensor entries must be [i, j, k, n]");
        entries.push_back({lookup(h.idx, q[0]), lookup(h.idx, q[1]), lookup(h.idx, q[2]), as<std::int64_t>(q[3], "multiplicity")});
    }
    std::vector<int> dual;
    for (const auto& d : h.dual) dual.push_back(*d);
    return FusionRing(h.labels, h.unit, dual, entries, h.grading);
}

Json partial_to_json(const PartialRing& p) {
    Json j = header_json(p.labels, p.unit, p.dual.empty() ? std::vector<std::optional<int>>(p.labels.size()) : p.dual,
                         p.grading);
    Json dims = Json::array();
    for (int i = 0; i < p.rank(); ++i) dims.push_back({p.labels[i], p.dims.at(i)});
    j["dims"] = dims;
    Json known = Json::array();
    for (const auto& [key, n] : p.known) {
        auto [a, b, c] = key;
        known.push_back({p.labels[a], p.labels[b], p.labels[c], n});
    }
    j["known"] = known;
    return j;
}

PartialRing partial_from_json(const Json& j) {
    Header h = read_header(j, false);
    if (!h.grading) bad("partial ring needs a grading");
    PartialRing p;
    p.labels = h.labels;
    p.unit = h.unit;
    p.grading = *h.grading;
    bool any_dual = false;
    for (const auto& d : h.dual) any_dual = any_dual || d.has_value();
    if (any_dual) p.dual = h.dual;
    std::vector<std::optional<double>> dims(h.labels.size());
    const auto& dj = field(j, "dims");
    if (!dj.is_array()) bad("dims must be an array");
    for (const auto& e : dj) {
        if (!e.is_array() || e.size() != 2) bad("dims entries must be [label, float]");
        int i = lookup(h.idx, e[0]);
        double d = as<double>(e[1], "dimension");
        if (!(d >= 1.0 - 1e-9)) bad("dimension of '" + h.labels[i] + "' must be >= 1");
        dims[i] = d;
    }
    for (std::size_t i = 0; i < dims.size(); ++i) {
        if (!dims[i]) bad("no dimension for '" + h.labels[i] + "'");
        p.dims.push_back(*dims[i]);
    }
    if (j.contains("known")) {
        if (!j["known"].is_array()) bad("known must be an array");
        for (const auto& q : j["known"]) {
            if (!q.is_array() || q.size() != 4) bad("known entries must be [i, j, k, n]");
            auto n = as<std::int64_t>(q[3], "multiplicity");
            if (n < 0) bad("negative known multiplicity");
            p.set_known(lookup(h.idx, q[0]), lookup(h.idx, q[1]), lookup(h.idx, q[2]), n);
        }
    }
    return p;
}

Json group_to_json(const FiniteAbelianGroup& g) {
    return Json{{"type", g.type_string()}, {"invariant_factors", g.invariant_factors()}, {"order", g.order()}};
}

Json cohomology_to_json(const CohomologyGroup& g) {
    return Json{{"type", g.type_string()}, {"factors", g.factors}, {"order", g.order()}};
}

Json theorem_row_to_json(const TheoremRow& row) {
    Json prov;
    prov["row"] = row.spec.row;
    prov["N"] = row.spec.N;
    prov["M"] = row.spec.M;
    if (!row.spec.variant.empty()) prov["variant"] = row.spec.variant;
    prov["name"] = row.name;
    prov["steps"] = row.steps;
    prov["generator"] = row.ring.label(row.generator);
    prov["grading_group"] = row.expected_grading.type_string();
    prov["adjoint"] = row.adjoint_name;
    return Json{{"provenance", prov}, {"ring", ring_to_json(row.ring)}};
}

Json audit_to_json(const AuditReport& r) {
    Json j;
    j["row"] = r.spec.row;
    j["N"] = r.spec.N;
    j["M"] = r.spec.M;
    j["name"] = r.name;
    j["rank"] = r.rank;
    j["generator"] = r.generator;
    j["generator_dim"] = r.generator_dim;
    j["k_horizon"] = r.k_horizon;
    j["k_equal"] = r.k_equal;
    j["K"] = r.K ? Json(*r.K) : Json(nullptr);
    j["grading"] = r.grading;
    j["expected_grading"] = r.expected_grading;
    j["adjoint"] = r.adjoint_name;
    Json checks = Json::array();
    for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    j["checks"] = checks;
    j["passed"] = r.passed();
    return j;
}

Json separation_to_json(const SeparationVerdict& v) {
    Json j;
    j["verdict"] = v.isomorphic ? "ring-isomorphic" : "ring-distinguishable";
    if (!v.isomorphic) j["invariant"] = v.invariant;
    j["left"] = v.left;
    j["right"] = v.right;
    return j;
}

Json catalog_to_json(const BPCatalogEntry& e) {
    Json j;
    j["family"] = e.family;
    j["size"] = e.size;
    j["anchor"] = e.anchor;
    j["version"] = e.version;
    j["brauer_picard"] = e.brauer_picard;
    j["exponent"] = e.exponent;
    j["inv_center"] = group_to_json(e.inv_center);
    Json bs = Json::array();
    for (const auto& b : e.bimodules) {
        Json x{{"id", b.id}, {"order", b.order}, {"dims", b.dims}, {"action", b.action}};
        if (!b.twist_of.empty()) x["twist_of"] = b.twist_of;
        if (!b.excluded.empty()) x["excluded"] = b.excluded;
        bs.push_back(x);
    }
    j["bimodules"] = bs;
    Json hs = Json::array();
    for (const auto& h : e.homs) hs.push_back({{"bimodule", h.bimodule}, {"h2_quotient", h.h2_quotient}});
    j["homs"] = hs;
    return j;
}

Json extension_to_json(const ExtensionRecord& r) {
    return Json{{"hom", r.hom},         {"constraint", r.constraint},     {"applies", r.applies},
                {"h2", r.h2.type_string()}, {"h2_quotient", r.h2_quotient}, {"count", r.count}};
}

Json parse_json_text(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        bad(std::string("invalid JSON: ") + e.what());
    }
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) bad("cannot read '" + path + "'");
    return parse_json_text(read_stream(in));
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) bad("cannot write '" + path + "'");
    out << text;
}

}  // namespace fusion
