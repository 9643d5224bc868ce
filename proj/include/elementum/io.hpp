#pragma once

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "elementum/augmentation.hpp"
#include "elementum/gallai.hpp"
#include "elementum/graph_core.hpp"
#include "elementum/list_coloring.hpp"

namespace elementum::io {

using nlohmann::json;

// parse errors surface as input_error so the CLI can map them to exit 2
json parse_text(const std::string& text);
json load_file(const std::string& path);
std::string dump(const json& doc); // canonical: two-space indent, sorted keys, trailing newline

json graph_to_json(const SimpleGraph& g);
SimpleGraph graph_from_json(const json& doc);

json multigraph_to_json(const BipartiteMultigraph& b);
BipartiteMultigraph multigraph_from_json(const json& doc);

json presentation_to_json(const ElementaryPresentation& p);
ElementaryPresentation presentation_from_json(const json& doc);

json lists_to_json(const ListAssignment& l);
std::map<int, std::vector<int>> lists_map_from_json(const json& doc);
ListAssignment assemble_lists(const std::map<int, std::vector<int>>& by_vertex, int n);

json coloring_to_json(const Coloring& c);
Coloring coloring_from_json(const json& doc);

json bicoloring_to_json(const EdgeBicoloring& b);
json odd_cycle_to_json(const std::vector<std::pair<int, int>>& cycle);
json certificate_to_json(const EngineCertificate& c);

std::string graph_to_dot(const SimpleGraph& g);

} // namespace elementum::io
