#include "elementum/io.hpp"

#include <fstream>
#include <sstream>

#include "elementum/errors.hpp"

namespace elementum::io {

namespace {

int as_int(const json& v, const char* what) {
    if (!v.is_number_integer()) throw input_error(std::string(what) + " must be an integer");
    return v.get<int>();
}

std::pair<int, int> as_pair(const json& v, const char* what) {
    if (!v.is_array() || v.size() != 2)
        throw input_error(std::string(what) + " must be a pair [a, b]");
    return {as_int(v[0], what), as_int(v[1], what)};
}

std::vector<int> as_int_list(const json& v, const char* what) {
    if (!v.is_array()) throw input_error(std::string(what) + " must be an array");
    std::vector<int> out;
    for (const auto& item : v) out.push_back(as_int(item, what));
    return out;
}

int key_to_index(const std::string& key) {
    if (key.empty() || key.find_first_not_of("0123456789") != std::string::npos)
        throw input_error("object key '" + key + "' is not a vertex index");
    return std::stoi(key);
}

} // namespace

json parse_text(const std::string& text) {
    json doc = json::parse(text, nullptr, false);
    if (doc.is_discarded()) throw input_error("malformed document");
    return doc;
}

json load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_text(buf.str());
}

std::string dump(const json& doc) { return doc.dump(2) + "\n"; }

json graph_to_json(const SimpleGraph& g) {
    json edges = json::array();
    for (auto [u, v] : g.edges()) edges.push_back({u, v});
    return json{{"n", g.size()}, {"edges", edges}};
}

SimpleGraph graph_from_json(const json& doc) {
    if (!doc.is_object() || !doc.contains("n") || !doc.contains("edges"))
        throw input_error("graph document needs fields \"n\" and \"edges\"");
    const int n = as_int(doc["n"], "n");
    if (n < 0) throw input_error("n must be nonnegative");
    std::vector<std::pair<int, int>> edges;
    if (!doc["edges"].is_array()) throw input_error("edges must be an array");
    for (const auto& e : doc["edges"]) edges.push_back(as_pair(e, "edge"));
    return SimpleGraph::from_edges(n, edges);
}

json multigraph_to_json(const BipartiteMultigraph& b) {
    json edges = json::array();
    for (auto [l, r] : b.edges) edges.push_back({l, r});
    return json{{"left", b.left}, {"right", b.right}, {"edges", edges}};
}

BipartiteMultigraph multigraph_from_json(const json& doc) {
    if (!doc.is_object() || !doc.contains("left") || !doc.contains("right") ||
        !doc.contains("edges"))
        throw input_error("multigraph document needs fields \"left\", \"right\", \"edges\"");
    BipartiteMultigraph b;
    b.left = as_int(doc["left"], "left");
    b.right = as_int(doc["right"], "right");
    if (!doc["edges"].is_array()) throw input_error("edges must be an array");
    for (const auto& e : doc["edges"]) b.edges.push_back(as_pair(e, "edge"));
    b.validate();
    return b;
}

json presentation_to_json(const ElementaryPresentation& p) {
    json augments = json::array();
    for (size_t i = 0; i < p.augments.size(); ++i) {
        const auto& a = p.augments[i];
        json cross = json::array();
        for (auto [x, y] : a.cross_edges) cross.push_back({x, y});
        augments.push_back(json{{"flat_edge", {p.flat_edges[i].x_edge, p.flat_edges[i].y_edge}},
                                {"x_size", a.x_size},
                                {"y_size", a.y_size},
                                {"cross_edges", cross}});
    }
    return json{{"b", multigraph_to_json(p.b)}, {"augments", augments}};
}

ElementaryPresentation presentation_from_json(const json& doc) {
    if (!doc.is_object() || !doc.contains("b") || !doc.contains("augments"))
        throw input_error("presentation document needs fields \"b\" and \"augments\"");
    ElementaryPresentation p;
    p.b = multigraph_from_json(doc["b"]);
    if (!doc["augments"].is_array()) throw input_error("augments must be an array");
    for (const auto& item : doc["augments"]) {
        if (!item.is_object() || !item.contains("flat_edge") || !item.contains("x_size") ||
            !item.contains("y_size") || !item.contains("cross_edges"))
            throw input_error("augment needs \"flat_edge\", \"x_size\", \"y_size\", \"cross_edges\"");
        auto [ex, ey] = as_pair(item["flat_edge"], "flat_edge");
        p.flat_edges.push_back({ex, ey});
        CobipartiteAugment a;
        a.x_size = as_int(item["x_size"], "x_size");
        a.y_size = as_int(item["y_size"], "y_size");
        if (!item["cross_edges"].is_array()) throw input_error("cross_edges must be an array");
        for (const auto& e : item["cross_edges"]) a.cross_edges.push_back(as_pair(e, "cross edge"));
        p.augments.push_back(std::move(a));
    }
    p.validate();
    return p;
}

json lists_to_json(const ListAssignment& l) {
    json by_vertex = json::object();
    for (size_t v = 0; v < l.lists.size(); ++v) by_vertex[std::to_string(v)] = l.lists[v];
    return json{{"lists", by_vertex}};
}

std::map<int, std::vector<int>> lists_map_from_json(const json& doc) {
    if (!doc.is_object() || !doc.contains("lists") || !doc["lists"].is_object())
        throw input_error("list document needs an object field \"lists\"");
    std::map<int, std::vector<int>> out;
    for (const auto& [key, value] : doc["lists"].items())
        out[key_to_index(key)] = as_int_list(value, "list");
    return out;
}

ListAssignment assemble_lists(const std::map<int, std::vector<int>>& by_vertex, int n) {
    ListAssignment l;
    l.lists.resize(n);
    for (const auto& [v, list] : by_vertex) {
        if (v < 0 || v >= n)
            throw input_error("list index " + std::to_string(v) + " out of range (n = " +
                              std::to_string(n) + ")");
        l.lists[v] = list;
    }
    for (int v = 0; v < n; ++v)
        if (l.lists[v].empty() && !by_vertex.count(v))
            throw input_error("missing list for vertex " + std::to_string(v));
    return l;
}

json coloring_to_json(const Coloring& c) {
    json by_vertex = json::object();
    for (size_t v = 0; v < c.size(); ++v) by_vertex[std::to_string(v)] = c[v];
    return json{{"colors", by_vertex}};
}

Coloring coloring_from_json(const json& doc) {
    if (!doc.is_object() || !doc.contains("colors") || !doc["colors"].is_object())
        throw input_error("coloring document needs an object field \"colors\"");
    std::map<int, int> by_vertex;
    for (const auto& [key, value] : doc["colors"].items())
        by_vertex[key_to_index(key)] = as_int(value, "color");
    const int n = by_vertex.empty() ? 0 : by_vertex.rbegin()->first + 1;
    Coloring c(n, -1);
    for (auto [v, col] : by_vertex) c[v] = col;
    for (int v = 0; v < n; ++v)
        if (c[v] < 0) throw input_error("missing color for vertex " + std::to_string(v));
    return c;
}

json bicoloring_to_json(const EdgeBicoloring& b) {
    json pink = json::array();
    json green = json::array();
    for (size_t e = 0; e < b.edges.size(); ++e) {
        json pair = {b.edges[e].first, b.edges[e].second};
        (b.tag[e] == EdgeTag::pink ? pink : green).push_back(pair);
    }
    return json{{"pink", pink}, {"green", green}};
}

json odd_cycle_to_json(const std::vector<std::pair<int, int>>& cycle) {
    json edges = json::array();
    for (auto [u, v] : cycle) edges.push_back({u, v});
    return json{{"odd_gallai_cycle", edges}};
}

json certificate_to_json(const EngineCertificate& c) {
    json body = json::object();
    body["kind"] = c.kind;
    body["message"] = c.message;
    if (c.blocking) {
        body["clique"] = c.blocking->clique;
        body["merged_list_size"] = c.blocking->merged_list_size;
        if (c.blocking->x1 >= 0) {
            body["x1"] = c.blocking->x1;
            body["y1"] = c.blocking->y1;
            body["overlap"] = c.blocking->overlap;
            body["x_free"] = c.blocking->x_free;
            body["y_free"] = c.blocking->y_free;
            body["forbidden_x"] = c.blocking->forbidden_x;
            body["forbidden_y"] = c.blocking->forbidden_y;
        }
    }
    return json{{"certificate", body}};
}

std::string graph_to_dot(const SimpleGraph& g) {
    std::ostringstream out;
    out << "graph G {\n";
    for (int v = 0; v < g.size(); ++v) out << "  " << v << ";\n";
    for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
    return out.str();
}

} // namespace elementum::io
