#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "elementum/errors.hpp"
#include "elementum/gallai.hpp"
#include "elementum/galvin.hpp"
#include "elementum/generators.hpp"
#include "elementum/io.hpp"
#include "elementum/list_coloring.hpp"
#include "elementum/oracle.hpp"

using namespace elementum;
namespace eio = elementum::io;
using eio::json;

namespace {

std::uint64_t resolve_seed(bool given, std::uint64_t value) {
    if (given) return value;
    if (const char* env = std::getenv("ELEMENTUM_SEED")) {
        char* end = nullptr;
        const unsigned long long parsed = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && *env != '\0') return parsed;
        throw input_error("ELEMENTUM_SEED is not an unsigned integer");
    }
    throw input_error("this command is seeded: pass --seed or set ELEMENTUM_SEED");
}

void emit(const json& doc) { std::cout << eio::dump(doc); }

int cmd_recognize(const std::string& path, bool dot) {
    SimpleGraph g = eio::graph_from_json(eio::load_file(path));
    ElementaryResult r = is_elementary(g);
    if (dot) {
        std::cout << eio::graph_to_dot(g);
        return r.elementary ? 0 : 1;
    }
    if (r.elementary) {
        emit(eio::bicoloring_to_json(r.bicoloring));
        return 0;
    }
    emit(eio::odd_cycle_to_json(r.odd_gallai_cycle));
    return 1;
}

json stats_to_json(const EngineStats& stats) {
    json events = json::array();
    for (const auto& e : stats.events)
        events.push_back(json{{"level", e.level},
                              {"x1", e.x1},
                              {"y1", e.y1},
                              {"forbidden_x", e.forbidden_x},
                              {"forbidden_y", e.forbidden_y}});
    return json{{"recolor_rounds", stats.recolor_rounds},
                {"fallback_invocations", stats.fallback_invocations},
                {"cycle_breaks", stats.cycle_breaks},
                {"events", events}};
}

int cmd_color(const std::string& pres_path, const std::string& lists_path, bool log_retries) {
    ElementaryPresentation p = eio::presentation_from_json(eio::load_file(pres_path));
    Realization r = realize(p);
    ListAssignment lists =
        eio::assemble_lists(eio::lists_map_from_json(eio::load_file(lists_path)), r.graph.size());
    EngineResult result = list_color_elementary(p, lists);
    if (result.certificate) {
        json doc = eio::certificate_to_json(*result.certificate);
        if (log_retries) doc["retries"] = stats_to_json(result.stats);
        emit(doc);
        return 3;
    }
    json doc = eio::coloring_to_json(*result.coloring);
    if (log_retries) doc["retries"] = stats_to_json(result.stats);
    emit(doc);
    return 0;
}

int cmd_edge_color(const std::string& bm_path, const std::string& lists_path) {
    BipartiteMultigraph b = eio::multigraph_from_json(eio::load_file(bm_path));
    const int m = static_cast<int>(b.edges.size());
    ListAssignment lists =
        eio::assemble_lists(eio::lists_map_from_json(eio::load_file(lists_path)), m);
    std::vector<int> colors = list_edge_color(b, lists.lists);
    emit(eio::coloring_to_json(colors));
    return 0;
}

int cmd_oracle_chromatic(const std::string& path) {
    SimpleGraph g = eio::graph_from_json(eio::load_file(path));
    emit(json{{"chromatic_number", chromatic_number_exact(g)}});
    return 0;
}

int cmd_oracle_list(const std::string& graph_path, const std::string& lists_path) {
    SimpleGraph g = eio::graph_from_json(eio::load_file(graph_path));
    ListAssignment lists =
        eio::assemble_lists(eio::lists_map_from_json(eio::load_file(lists_path)), g.size());
    auto coloring = is_list_colorable_exact(g, lists);
    if (coloring) {
        json doc = eio::coloring_to_json(*coloring);
        doc["colorable"] = true;
        emit(doc);
        return 0;
    }
    json doc = json{{"colorable", false}};
    if (auto violation = find_list_violation(g, lists))
        doc["certificate"] = json{{"kind", "lemma2-violation"},
                                  {"clique", violation->clique},
                                  {"merged_list_size", violation->merged_list_size}};
    emit(doc);
    return 1;
}

int cmd_oracle_choosability(const std::string& path, int k, int universe, const std::string& mode,
                            long long trials, bool seed_given, std::uint64_t seed, int jobs) {
    SimpleGraph g = eio::graph_from_json(eio::load_file(path));
    ChoosabilityVerdict verdict;
    if (mode == "exhaustive") {
        verdict = choosability_check(g, k, universe, ChoosabilityMode::exhaustive);
    } else if (mode == "sampled") {
        verdict = choosability_check(g, k, universe, ChoosabilityMode::sampled, trials,
                                     resolve_seed(seed_given, seed), jobs);
    } else {
        throw input_error("mode must be 'exhaustive' or 'sampled'");
    }
    json doc{{"mode", mode},
             {"k", verdict.k},
             {"universe_size", verdict.universe_size},
             {"trials", verdict.trials},
             {"result", verdict.holds ? "holds" : "counterexample"}};
    if (mode == "sampled") doc["seed"] = verdict.seed;
    if (verdict.counterexample) doc["counterexample"] = eio::lists_to_json(*verdict.counterexample);
    emit(doc);
    return verdict.holds ? 0 : 1;
}

// graph documents, presentations (their realization), and bipartite
// multigraphs (their line graph) all present a vertex-coloured view
SimpleGraph graph_like(const json& doc) {
    if (doc.contains("augments")) {
        ElementaryPresentation p = eio::presentation_from_json(doc);
        return realize(p).graph;
    }
    if (doc.contains("left")) return line_graph(eio::multigraph_from_json(doc)).graph;
    return eio::graph_from_json(doc);
}

int cmd_verify(const std::vector<std::string>& files) {
    const json first = eio::load_file(files[0]);
    if (files.size() == 1) {
        graph_like(first); // validation happens on parse
        emit(json{{"valid", true}});
        return 0;
    }
    SimpleGraph g = graph_like(first);
    const json second = eio::load_file(files[1]);
    if (files.size() == 2 && second.contains("pink")) {
        EdgeBicoloring b;
        b.edges = g.edges();
        b.tag.assign(b.edges.size(), EdgeTag::pink);
        std::map<std::pair<int, int>, int> index;
        for (int e = 0; e < static_cast<int>(b.edges.size()); ++e) index[b.edges[e]] = e;
        int seen = 0;
        for (const char* key : {"pink", "green"}) {
            if (!second.contains(key) || !second[key].is_array())
                throw input_error("bicoloring document needs arrays \"pink\" and \"green\"");
            for (const auto& item : second[key]) {
                if (!item.is_array() || item.size() != 2)
                    throw input_error("bicoloring entries must be edge pairs");
                int u = item[0].get<int>(), v = item[1].get<int>();
                auto it = index.find({std::min(u, v), std::max(u, v)});
                if (it == index.end()) throw input_error("bicoloring mentions a non-edge");
                b.tag[it->second] = key[0] == 'p' ? EdgeTag::pink : EdgeTag::green;
                ++seen;
            }
        }
        if (seen != static_cast<int>(b.edges.size()))
            throw input_error("bicoloring must tag every edge exactly once");
        const bool ok = verify_bicoloring(g, b);
        emit(json{{"valid", ok}});
        return ok ? 0 : 1;
    }
    if (files.size() == 2) {
        // a bare coloring: check properness only
        Coloring c = eio::coloring_from_json(second);
        if (static_cast<int>(c.size()) != g.size())
            throw input_error("coloring does not cover the graph");
        bool ok = true;
        for (auto [u, v] : g.edges())
            if (c[u] == c[v]) ok = false;
        emit(json{{"valid", ok}});
        return ok ? 0 : 1;
    }
    ListAssignment lists = eio::assemble_lists(eio::lists_map_from_json(second), g.size());
    Coloring c = eio::coloring_from_json(eio::load_file(files[2]));
    if (static_cast<int>(c.size()) != g.size())
        throw input_error("coloring does not cover the graph");
    const bool ok = verify_coloring(g, lists, c);
    emit(json{{"valid", ok}});
    return ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"elementary graphs: recognition, construction, and list coloring"};
    app.require_subcommand(1);

    auto* recognize = app.add_subcommand("recognize", "decide whether a graph is elementary");
    std::string rec_file;
    bool rec_dot = false;
    recognize->add_option("graph", rec_file, "graph document")->required();
    recognize->add_flag("--dot", rec_dot, "emit the graph in DOT instead of a document");

    auto* color = app.add_subcommand("color", "list-color a realized presentation");
    std::string col_pres, col_lists;
    bool col_log = false;
    color->add_option("presentation", col_pres, "presentation document")->required();
    color->add_option("lists", col_lists, "vertex list assignment")->required();
    color->add_flag("--log-retries", col_log, "attach recolor-loop statistics");

    auto* edge_color = app.add_subcommand("edge-color", "list-edge-color a bipartite multigraph");
    std::string ec_bm, ec_lists;
    edge_color->add_option("multigraph", ec_bm, "bipartite multigraph document")->required();
    edge_color->add_option("lists", ec_lists, "edge list assignment")->required();

    auto* generate = app.add_subcommand("generate", "emit seeded test structures");
    generate->require_subcommand(1);
    std::uint64_t seed = 0;
    bool gen_dot = false;

    auto* gen_bm = generate->add_subcommand("multigraph", "random bipartite multigraph");
    int g_left = 2, g_right = 2, g_m = 4, g_cap = 2;
    gen_bm->add_option("--left", g_left, "left vertices");
    gen_bm->add_option("--right", g_right, "right vertices");
    gen_bm->add_option("--edges", g_m, "edge count");
    gen_bm->add_option("--max-multiplicity", g_cap, "per-pair cap");
    auto* gen_bm_seed = gen_bm->add_option("--seed", seed, "random seed");

    auto* gen_pres = generate->add_subcommand("presentation", "random elementary presentation");
    int p_left = 2, p_right = 2, p_m = 4, p_cap = 2, p_h = 1;
    std::string p_shape = "matching";
    gen_pres->add_option("--left", p_left, "left vertices");
    gen_pres->add_option("--right", p_right, "right vertices");
    gen_pres->add_option("--edges", p_m, "edge count");
    gen_pres->add_option("--max-multiplicity", p_cap, "per-pair cap");
    gen_pres->add_option("--augments", p_h, "number of augments");
    gen_pres->add_option("--shape", p_shape, "matching | general");
    auto* gen_pres_seed = gen_pres->add_option("--seed", seed, "random seed");
    gen_pres->add_flag("--dot", gen_dot, "emit the realization in DOT");

    auto* gen_pec = generate->add_subcommand("peculiar", "peculiar graph from part sizes");
    std::vector<int> pec_a{1, 1, 1}, pec_b{1, 1, 1}, pec_q{1, 1, 1};
    std::vector<std::string> pec_removed;
    gen_pec->add_option("--a", pec_a, "sizes of A1 A2 A3")->expected(3);
    gen_pec->add_option("--b", pec_b, "sizes of B1 B2 B3")->expected(3);
    gen_pec->add_option("--q", pec_q, "sizes of Q1 Q2 Q3")->expected(3);
    gen_pec->add_option("--remove", pec_removed,
                        "removed pair i,ai,bj (A_i index, B_{i+1} index); repeatable");
    gen_pec->add_flag("--dot", gen_dot, "emit DOT");

    auto* gen_named = generate->add_subcommand("named", "fixture graph by name");
    std::string named;
    gen_named->add_option("name", named, "claw | c5 | c7 | c7_complement | p3 | k<n>")->required();
    gen_named->add_flag("--dot", gen_dot, "emit DOT");

    auto* oracle = app.add_subcommand("oracle", "brute-force ground truth");
    oracle->require_subcommand(1);

    auto* o_chrom = oracle->add_subcommand("chromatic", "exact chromatic number");
    std::string oc_file;
    o_chrom->add_option("graph", oc_file, "graph document")->required();

    auto* o_list = oracle->add_subcommand("list", "exact list colorability");
    std::string ol_graph, ol_lists;
    o_list->add_option("graph", ol_graph, "graph document")->required();
    o_list->add_option("lists", ol_lists, "vertex list assignment")->required();

    auto* o_choose = oracle->add_subcommand("choosability", "bounded-universe choosability");
    std::string och_graph, och_mode = "exhaustive";
    int och_k = 2, och_universe = 4, och_jobs = 1;
    long long och_trials = 1000;
    o_choose->add_option("graph", och_graph, "graph document")->required();
    o_choose->add_option("--k", och_k, "list size");
    o_choose->add_option("--universe", och_universe, "colors drawn from 0..universe-1");
    o_choose->add_option("--mode", och_mode, "exhaustive | sampled");
    o_choose->add_option("--trials", och_trials, "sampled trials");
    auto* och_seed = o_choose->add_option("--seed", seed, "random seed (sampled mode)");
    o_choose->add_option("--jobs", och_jobs, "parallel workers for sampled trials");

    auto* verify = app.add_subcommand("verify", "re-validate emitted documents");
    std::vector<std::string> verify_files;
    verify->add_option("files", verify_files, "structure [lists] [coloring] or structure bicoloring")
        ->required()
        ->expected(1, 3);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (recognize->parsed()) return cmd_recognize(rec_file, rec_dot);
        if (color->parsed()) return cmd_color(col_pres, col_lists, col_log);
        if (edge_color->parsed()) return cmd_edge_color(ec_bm, ec_lists);
        if (generate->parsed()) {
            if (gen_bm->parsed()) {
                auto b = random_bipartite_multigraph(g_left, g_right, g_m, g_cap,
                                                     resolve_seed(gen_bm_seed->count() > 0, seed));
                emit(eio::multigraph_to_json(b));
                return 0;
            }
            if (gen_pres->parsed()) {
                const std::uint64_t s = resolve_seed(gen_pres_seed->count() > 0, seed);
                auto b = random_bipartite_multigraph(p_left, p_right, p_m, p_cap, s);
                AugmentShape shape;
                if (p_shape == "matching") shape = AugmentShape::matching;
                else if (p_shape == "general") shape = AugmentShape::general;
                else throw input_error("shape must be 'matching' or 'general'");
                auto p = random_presentation(b, p_h, s + 1, shape);
                if (gen_dot) std::cout << eio::graph_to_dot(realize(p).graph);
                else emit(eio::presentation_to_json(p));
                return 0;
            }
            if (gen_pec->parsed()) {
                PeculiarSpec spec;
                for (int i = 0; i < 3; ++i) {
                    spec.a_sizes[i] = pec_a[i];
                    spec.b_sizes[i] = pec_b[i];
                    spec.q_sizes[i] = pec_q[i];
                }
                if (pec_removed.empty()) pec_removed = {"0,0,0", "1,0,0", "2,0,0"};
                for (const auto& triple : pec_removed) {
                    int side, ai, bj;
                    if (std::sscanf(triple.c_str(), "%d,%d,%d", &side, &ai, &bj) != 3 ||
                        side < 0 || side > 2)
                        throw input_error("--remove wants i,ai,bj with i in 0..2");
                    spec.removed[side].emplace_back(ai, bj);
                }
                auto pg = peculiar_graph(spec);
                if (gen_dot) std::cout << eio::graph_to_dot(pg.graph);
                else emit(eio::graph_to_json(pg.graph));
                return 0;
            }
            SimpleGraph g = named_graph(named);
            if (gen_dot) std::cout << eio::graph_to_dot(g);
            else emit(eio::graph_to_json(g));
            return 0;
        }
        if (oracle->parsed()) {
            if (o_chrom->parsed()) return cmd_oracle_chromatic(oc_file);
            if (o_list->parsed()) return cmd_oracle_list(ol_graph, ol_lists);
            return cmd_oracle_choosability(och_graph, och_k, och_universe, och_mode, och_trials,
                                           och_seed->count() > 0, seed, och_jobs);
        }
        return cmd_verify(verify_files);
    } catch (const input_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const certificate_error& e) {
        emit(json{{"certificate", {{"kind", e.kind}, {"message", e.what()}}}});
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
}
