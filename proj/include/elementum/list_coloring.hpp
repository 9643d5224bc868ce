#pragma once

// Constructive list colouring of realized elementary presentations from lists
// of clique-number size.  The driver peels the last cobipartite gadget,
// colours the rest recursively, and fills the gadget back in; when restricted
// lists block the gadget, the root multigraph is rebuilt (build_gstar) and the
// remainder recoloured so the blocking pattern cannot survive.

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "elementum/augmentation.hpp"
#include "elementum/graph_core.hpp"

namespace elementum {

// One colour set per vertex; colours are opaque nonnegative integers.
struct ListAssignment {
    std::vector<std::vector<int>> lists;
};

// Colour per vertex, -1 meaning uncoloured.
using Coloring = std::vector<int>;

// True iff c is proper and every vertex holds a colour from its list.
// The colouring must be total.
bool verify_coloring(const SimpleGraph& g, const ListAssignment& l, const Coloring& c);

struct CliqueListViolation {
    std::vector<int> clique;
    int merged_list_size = 0;
};

// q must induce a clique.  A violation (merged lists smaller than the clique)
// certifies that no list colouring exists.
std::optional<CliqueListViolation> clique_list_check(const SimpleGraph& g,
                                                     const ListAssignment& l,
                                                     const std::vector<int>& q);

// x_set and y_set must induce disjoint cliques.  Returns (clique number of
// the induced cobipartite graph, maximum matching of its complement cross
// pairs); the two are tied by |X| + |Y| = clique number + matching.
std::pair<int, int> cobipartite_clique_number(const std::vector<int>& x_set,
                                              const std::vector<int>& y_set,
                                              const SimpleGraph& g);

// Remove from each gadget list the colours its outside clique neighbourhood
// already uses.  c must colour all of n_x and n_y.
std::map<int, std::vector<int>> restrict_lists(const ListAssignment& l, const Coloring& c,
                                               const std::vector<int>& x_set,
                                               const std::vector<int>& y_set,
                                               const std::vector<int>& n_x,
                                               const std::vector<int>& n_y);

struct TightenResult {
    SimpleGraph graph;                          // supergraph of g
    std::vector<std::pair<int, int>> matching;  // the kept cross non-edges
};

// Add cross edges between X and Y until the remaining cross non-edges form a
// matching covering Y.  Fails exactly when no such matching exists.  Added
// edges only merge previously non-adjacent pairs, so any proper colouring of
// the result is proper on g.
std::optional<TightenResult> tighten_to_matching(const std::vector<int>& x_set,
                                                 const std::vector<int>& y_set,
                                                 const SimpleGraph& g);

// Colours X u Y when the cross non-edges form exactly a Y-covering matching,
// |X| >= |Y|, and lists have sizes >= |X| on X and >= |Y| on Y.  Backtracking
// is deterministic (most constrained vertex first, lowest colour first); with
// the preconditions met a colouring always exists, so exhaustion is certified
// as an internal failure.
std::map<int, int> color_matching_cobipartite(const SimpleGraph& h_graph,
                                              const std::vector<int>& x_set,
                                              const std::vector<int>& y_set,
                                              const std::map<int, std::vector<int>>& lists);

// Lexicographically least cross edge (x, y) lying in every maximum clique of
// the cobipartite graph induced on X u Y; nullopt when no such pair exists.
std::optional<std::pair<int, int>> choose_blocking_pair(
    const std::vector<int>& x_set, const std::vector<int>& y_set, const SimpleGraph& g,
    const std::map<int, std::vector<int>>& restricted);

// Snapshot of why the gadget could not be coloured from restricted lists.
struct BlockingCertificate {
    std::vector<int> clique;          // violating clique, maximalised
    int merged_list_size = 0;         // restricted lists merged over the clique
    int x1 = -1;                      // blocking pair, -1 when none exists
    int y1 = -1;
    int overlap = 0;                  // |L(x1) n L(y1)|
    int x_free = 0;                   // restricted list sizes of the pair
    int y_free = 0;
    std::vector<int> forbidden_x;     // L(x1) colours used on N_X
    std::vector<int> forbidden_y;     // L(y1) colours used on N_Y
};

struct EngineCertificate {
    std::string kind; // "theorem-counterexample" or "internal"
    std::string message;
    std::optional<BlockingCertificate> blocking;
};

struct RetryRecord {
    int level = 0;
    int x1 = -1;
    int y1 = -1;
    std::vector<int> forbidden_x;
    std::vector<int> forbidden_y;
};

struct EngineStats {
    int recolor_rounds = 0;
    int fallback_invocations = 0;
    int cycle_breaks = 0;
    std::vector<RetryRecord> events;
};

struct EngineResult {
    std::optional<Coloring> coloring;
    std::optional<EngineCertificate> certificate;
    EngineStats stats;
};

// Every list must have at least clique-number-of-the-realization colours.
// On success the colouring is verified before being returned; failure of the
// recolouring loop and its exhaustive fallback yields a certificate instead
// of a wrong answer.
EngineResult list_color_elementary(const ElementaryPresentation& p, const ListAssignment& l);

} // namespace elementum
