#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "fusion/audit.hpp"
#include "fusion/catalog.hpp"
#include "fusion/cohomology.hpp"
#include "fusion/constructions.hpp"
#include "fusion/error.hpp"
#include "fusion/json_io.hpp"
#include "fusion/ring_ops.hpp"
#include "fusion/solver.hpp"

using namespace fusion;

namespace {

int fail(const std::string& kind, const std::string& message, int code) {
    Json j{{"error", kind}, {"message", message}};
    std::cerr << j.dump() << "\n";
    return code;
}

int exit_code_for(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::MalformedInput:
        case ErrorKind::UnknownFamily:
        case ErrorKind::BoundsExceeded:
            return 2;
        default:
            return 1;
    }
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) out.push_back(item);
    return out;
}

std::int64_t to_int(const std::string& s, const std::string& what) {
    try {
        std::size_t used = 0;
        auto v = std::stoll(s, &used);
        if (used == s.size()) return v;
    } catch (const std::exception&) {
    }
    throw Error(ErrorKind::MalformedInput, "bad integer '" + s + "' for " + what);
}

std::vector<std::int64_t> int_list(const std::string& s, const std::string& what) {
    std::vector<std::int64_t> out;
    for (const auto& p : split(s, ',')) out.push_back(to_int(p, what));
    if (out.empty()) throw Error(ErrorKind::MalformedInput, what + " is empty");
    return out;
}

int object_index(const FusionRing& ring, const std::string& label) {
    auto i = ring.find(label);
    if (!i) throw Error(ErrorKind::MalformedInput, "no simple labelled '" + label + "'");
    return *i;
}

FusionRing load_ring(const std::string& path) { return ring_from_json(read_json_file(path)); }

void emit(const Json& j, const std::string& out) {
    std::string text = j.dump(2) + "\n";
    if (out.empty())
        std::cout << text;
    else
        write_text_file(out, text);
}

// "R" or "R:N=n:M=m:variant=v"
TheoremRowSpec row_token(const std::string& token, int M) {
    auto parts = split(token, ':');
    if (parts.empty()) throw Error(ErrorKind::MalformedInput, "empty row spec");
    TheoremRowSpec s;
    s.row = static_cast<int>(to_int(parts[0], "row"));
    s.M = M;
    for (std::size_t i = 1; i < parts.size(); ++i) {
        auto kv = split(parts[i], '=');
        if (kv.size() != 2) throw Error(ErrorKind::MalformedInput, "bad row option '" + parts[i] + "'");
        if (kv[0] == "N")
            s.N = static_cast<int>(to_int(kv[1], "N"));
        else if (kv[0] == "M")
            s.M = static_cast<int>(to_int(kv[1], "M"));
        else if (kv[0] == "variant")
            s.variant = kv[1];
        else
            throw Error(ErrorKind::MalformedInput, "unknown row option '" + kv[0] + "'");
    }
    return s;
}

std::string knormal_line(const KNormalReport& r) {
    std::string s = r.K ? "K=" + std::to_string(*r.K) : "K>" + std::to_string(r.k_max);
    s += " (horizon " + std::to_string(r.k_max) + ")";
    std::vector<int> failing;
    for (int k = 1; k <= r.k_max; ++k)
        if (!r.equal[k - 1]) failing.push_back(k);
    if (failing.empty()) {
        s += "; normal";
    } else {
        s += "; k=";
        for (std::size_t i = 0; i < failing.size(); ++i) s += (i ? "," : "") + std::to_string(failing[i]);
        s += failing.size() == 1 ? " fails" : " fail";
    }
    return s;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Fusion ring toolkit: constructions, completion, cohomology and classification audit"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "Machine-readable output where available");

    std::string ring_path, out_path, object, dot_path, family, orders, grading_path, subgroup, coeffs, action;
    std::string path_b;
    int kmax = 8, size = 0, row = 1, N = 0, M = 1, deg = 2, max_M = 2;
    std::uint64_t cap = 10'000'000;
    bool all = false, brute = false;
    std::string variant;
    std::vector<std::string> row_tokens;

    auto* verify = app.add_subcommand("verify", "Check fusion ring axioms");
    verify->add_option("ring", ring_path)->required();
    auto* dims = app.add_subcommand("dims", "Frobenius-Perron dimensions");
    dims->add_option("ring", ring_path)->required();
    auto* invs = app.add_subcommand("invertibles", "Group of invertible simples");
    invs->add_option("ring", ring_path)->required();
    auto* grading = app.add_subcommand("grading", "Universal grading");
    grading->add_option("ring", ring_path)->required();
    auto* knormal = app.add_subcommand("knormal", "K-normality of an object");
    knormal->add_option("ring", ring_path)->required();
    knormal->add_option("--object", object)->required();
    knormal->add_option("--kmax", kmax)->check(CLI::PositiveNumber);
    auto* graph = app.add_subcommand("graph", "Fusion digraph of an object");
    graph->add_option("ring", ring_path)->required();
    graph->add_option("--object", object)->required();
    graph->add_option("--dot", dot_path, "Output file, - for stdout")->required();

    auto* build = app.add_subcommand("build", "Construct rings");
    build->require_subcommand(1);
    auto* b_ade = build->add_subcommand("ade", "ADE fusion ring");
    b_ade->add_option("--family", family)->required();
    b_ade->add_option("--size", size);
    b_ade->add_option("--out", out_path);
    auto* b_pointed = build->add_subcommand("pointed", "Pointed ring of a finite abelian group");
    b_pointed->add_option("--orders", orders)->required();
    b_pointed->add_option("--out", out_path);
    auto* b_row = build->add_subcommand("row", "Classification table row");
    b_row->add_option("--id", row)->required();
    b_row->add_option("--M", M)->required();
    b_row->add_option("--N", N);
    b_row->add_option("--variant", variant);
    b_row->add_option("--out", out_path);

    std::string instance;
    auto* b_inst = build->add_subcommand("instance", "Partial ring for E4 or E16,6");
    b_inst->add_option("--name", instance)->required()->check(CLI::IsMember({"e4", "e16_6"}));
    b_inst->add_option("--out", out_path);

    auto* product = app.add_subcommand("product", "Deligne product");
    product->add_option("a", ring_path)->required();
    product->add_option("b", path_b)->required();
    product->add_option("--out", out_path);
    auto* oneone = app.add_subcommand("oneone", "Subring generated by the (1,1)-graded piece");
    oneone->add_option("ring", ring_path)->required();
    oneone->add_option("--grading", grading_path)->required();
    oneone->add_option("--out", out_path);
    auto* deq = app.add_subcommand("deq", "Orbit ring by a fixed-point-free central subgroup");
    deq->add_option("ring", ring_path)->required();
    deq->add_option("--subgroup", subgroup)->required();
    deq->add_option("--out", out_path);
    auto* solve = app.add_subcommand("solve", "Complete a partial fusion ring");
    solve->add_option("partial", ring_path)->required();
    solve->add_option("--cap", cap);
    solve->add_option("--out", out_path);

    auto* cohom = app.add_subcommand("cohom", "Cohomology of Z_M with finite abelian coefficients");
    cohom->add_option("--deg", deg)->required()->check(CLI::Range(1, 3));
    cohom->add_option("--M", M)->required();
    cohom->add_option("--coeffs", coeffs);
    cohom->add_option("--action", action);
    cohom->add_flag("--brute", brute, "Also run the cocycle enumeration (degree 2, small inputs)");

    auto* audit = app.add_subcommand("audit", "Audit classification table rows");
    audit->add_option("--row", row);
    audit->add_option("--M", M);
    audit->add_option("--N", N);
    audit->add_flag("--all", all);
    audit->add_option("--max-M", max_M);
    audit->add_option("--kmax", kmax)->check(CLI::PositiveNumber);

    auto* separate = app.add_subcommand("separate", "Compare two table rows at matched parameters");
    separate->add_option("rows", row_tokens, "Row specs: R or R:N=n:M=m")->expected(2)->required();
    separate->add_option("--M", M)->required();

    auto* catalog = app.add_subcommand("catalog", "Bimodule catalog entry and extension counts");
    catalog->add_option("--family", family)->required();
    catalog->add_option("--size", size);
    catalog->add_option("--M", M);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        return fail("malformed-input", e.what(), 2);
    }

    try {
        if (*verify) {
            auto ring = load_ring(ring_path);
            auto rep = verify_axioms(ring);
            if (as_json) {
                Json v = Json::array();
                for (const auto& x : rep.violations) v.push_back({{"identity", x.identity}, {"indices", x.indices}, {"detail", x.detail}});
                emit(Json{{"pass", rep.pass}, {"violations", v}}, "");
            } else {
                std::cout << (rep.pass ? "PASS" : "FAIL") << " rank " << ring.rank() << "\n";
                for (const auto& x : rep.violations) std::cout << x.identity << ": " << x.detail << "\n";
            }
            return rep.pass ? 0 : 1;
        }
        if (*dims) {
            auto ring = load_ring(ring_path);
            auto d = fp_dims(ring);
            const double tol = acceptance_tolerance();
            if (as_json) {
                Json j = Json::array();
                for (int i = 0; i < ring.rank(); ++i) j.push_back({ring.label(i), d.dims[i]});
                emit(Json{{"dims", j}, {"global_dimension", global_dimension(ring, d)}, {"residual", d.residual}}, "");
            } else {
                for (int i = 0; i < ring.rank(); ++i) std::printf("%s %.9f\n", ring.label(i).c_str(), d.dims[i]);
                std::printf("global %.9f residual %.3g\n", global_dimension(ring, d), d.residual);
            }
            return d.residual <= tol ? 0 : 1;
        }
        if (*invs) {
            auto ring = load_ring(ring_path);
            auto r = invertibles(ring);
            std::vector<std::string> labels;
            for (int i : r.elements) labels.push_back(ring.label(i));
            std::string type = r.abelian ? r.group.type_string() : "non-abelian";
            if (as_json)
                emit(Json{{"type", type}, {"order", r.elements.size()}, {"elements", labels}}, "");
            else {
                std::cout << type << "\n";
                for (std::size_t i = 0; i < labels.size(); ++i) std::cout << (i ? " " : "") << labels[i];
                std::cout << "\n";
            }
            return 0;
        }
        if (*grading) {
            auto ring = load_ring(ring_path);
            auto g = universal_grading(ring);
            if (as_json) {
                emit(Json{{"type", g.group.type_string()}, {"grading", grading_to_json(g.as_grading(), ring.labels())}}, "");
            } else {
                std::cout << g.group.type_string() << "\n";
                for (int i = 0; i < ring.rank(); ++i) {
                    std::cout << ring.label(i);
                    for (auto c : g.deg[i]) std::cout << " " << c;
                    std::cout << "\n";
                }
            }
            return 0;
        }
        if (*knormal) {
            auto ring = load_ring(ring_path);
            auto r = is_k_normal(ring, object_index(ring, object), kmax);
            if (as_json)
                emit(Json{{"K", r.K ? Json(*r.K) : Json(nullptr)}, {"horizon", r.k_max}, {"equal", r.equal}}, "");
            else
                std::cout << knormal_line(r) << "\n";
            return 0;
        }
        if (*graph) {
            auto ring = load_ring(ring_path);
            auto g = fusion_graph(ring, object_index(ring, object));
            if (dot_path == "-") {
                std::cout << to_dot(g);
            } else {
                write_text_file(dot_path, to_dot(g));
                std::cout << g.nodes << " nodes, " << g.edges.size() << " edges\n";
            }
            return 0;
        }
        if (*b_ade) {
            AdeSpec s{parse_ade_family(family), size};
            emit(ring_to_json(ade_ring(s)), out_path);
            return 0;
        }
        if (*b_pointed) {
            auto o = int_list(orders, "orders");
            for (auto x : o)
                if (x < 1) throw Error(ErrorKind::MalformedInput, "orders must be positive");
            emit(ring_to_json(pointed_ring(FiniteAbelianGroup(o))), out_path);
            return 0;
        }
        if (*b_row) {
            emit(theorem_row_to_json(theorem_row({row, N, M, variant})), out_path);
            return 0;
        }
        if (*b_inst) {
            emit(partial_to_json(instance == "e4" ? e4_instance() : e16_6_instance()), out_path);
            return 0;
        }
        if (*product) {
            emit(ring_to_json(deligne_product(load_ring(ring_path), load_ring(path_b))), out_path);
            return 0;
        }
        if (*oneone) {
            auto ring = load_ring(ring_path);
            auto g = grading_from_json(read_json_file(grading_path), ring.labels());
            emit(ring_to_json(one_one_subring(ring, g)), out_path);
            return 0;
        }
        if (*deq) {
            auto ring = load_ring(ring_path);
            std::vector<int> h;
            for (const auto& l : split(subgroup, ',')) h.push_back(object_index(ring, l));
            emit(ring_to_json(dequiv_free(ring, h)), out_path);
            return 0;
        }
        if (*solve) {
            auto p = partial_from_json(read_json_file(ring_path));
            auto res = complete_partial_ring(p, SolveOptions{cap});
            Json arr = Json::array();
            for (const auto& r : res.raw) arr.push_back(ring_to_json(r));
            emit(arr, out_path);
            if (!out_path.empty())
                std::cout << res.raw.size() << " raw solutions, " << res.classes.size() << " isomorphism classes, "
                          << res.nodes << " nodes\n";
            return 0;
        }
        if (*cohom) {
            FiniteAbelianGroup A(coeffs.empty() ? std::vector<std::int64_t>{} : int_list(coeffs, "coeffs"));
            for (auto o : A.orders())
                if (o < 1) throw Error(ErrorKind::MalformedInput, "coefficient orders must be positive");
            if (M < 1) throw Error(ErrorKind::MalformedInput, "M must be positive");
            CohomologyGroup h;
            if (deg == 3 && coeffs.empty())
                h = h3_roots_of_unity(M);
            else
                h = h_cyclic(deg, M, A, parse_action(action, A, M));
            std::optional<CohomologyGroup> b;
            if (brute) {
                if (deg != 2) throw Error(ErrorKind::MalformedInput, "--brute needs --deg 2");
                b = brute_force_h2(M, A, parse_action(action, A, M));
            }
            if (as_json) {
                Json j = cohomology_to_json(h);
                if (b) j["brute_force"] = cohomology_to_json(*b);
                emit(j, "");
            } else {
                std::cout << h.type_string() << "\n";
                if (b) std::cout << "brute force: " << b->type_string() << "\n";
            }
            return b && !(*b == h) ? 1 : 0;
        }
        if (*audit) {
            std::vector<AuditReport> reps;
            if (all)
                reps = audit_all(max_M, kmax);
            else
                reps.push_back(audit_row({row, N, M, ""}, kmax));
            bool ok = true;
            for (const auto& r : reps) ok = ok && r.passed();
            if (as_json) {
                Json arr = Json::array();
                for (const auto& r : reps) arr.push_back(audit_to_json(r));
                emit(arr, "");
            } else {
                std::cout << audit_table(reps);
                for (const auto& r : reps)
                    for (const auto& c : r.checks)
                        if (!c.passed)
                            std::cout << "row " << r.spec.row << " M=" << r.spec.M << " " << c.name << ": " << c.detail << "\n";
            }
            return ok ? 0 : 1;
        }
        if (*separate) {
            auto v = separation_check(row_token(row_tokens[0], M), row_token(row_tokens[1], M));
            if (as_json)
                emit(separation_to_json(v), "");
            else if (v.isomorphic)
                std::cout << "ring-isomorphic (invertibles " << v.left << ")\n";
            else
                std::cout << "ring-distinguishable via " << v.invariant << ": " << v.left << " vs " << v.right << "\n";
            return 0;
        }
        if (*catalog) {
            auto e = bp_catalog(family, size);
            Json j = catalog_to_json(e);
            j["admissible"] = admissible_generator_bimodules(e);
            Json ext = Json::array();
            for (const auto& r : extension_count(e, M)) ext.push_back(extension_to_json(r));
            j["extensions"] = ext;
            j["M"] = M;
            emit(j, "");
            return 0;
        }
    } catch (const Error& e) {
        return fail(error_kind_name(e.kind()), e.what(), exit_code_for(e.kind()));
    } catch (const std::exception& e) {
        return fail("internal", e.what(), 1);
    }
    return 0;
}
