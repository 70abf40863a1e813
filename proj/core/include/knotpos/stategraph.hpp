#pragma once

#include <nlohmann/json.hpp>

#include <optional>
#include <string>
#include <vector>

#include "knotpos/diagram.hpp"
#include "knotpos/laurent.hpp"

namespace knotpos {

// Vertices are A-circles, one edge per crossing.
struct StateGraph {
    int vertices = 0;
    std::vector<std::pair<int, int>> edges; // indexed by crossing
    std::vector<int> circle_of_edge;        // diagram edge -> A-circle
    bool from_positive = true;
};

struct ReducedEdge {
    int u = 0, v = 0; // u < v
    int multiplicity = 0;
    bool cut = false;
    std::vector<int> crossings;
};

struct ReducedGraph {
    int vertices = 0;
    std::vector<ReducedEdge> edges;
    int self_loops = 0; // crossings with both sides on one circle
};

StateGraph a_state_graph(const Diagram& d);
ReducedGraph reduce_graph(const StateGraph& g);
bool is_connected(const ReducedGraph& g);
// E - V + 1; throws DiagramError for disconnected input.
int betti(const ReducedGraph& g);
// every cycle even, i.e. bipartite
bool cycles_even(const ReducedGraph& g);

enum class Family { Balanced, OddlyBalanced, Burdened, OddlyBurdened, Unclassified };
std::string family_name(Family f);

struct Classification {
    Family family = Family::Unclassified;
    int type = -1;
    int m = 0;
    int k = 0;                 // type 1
    int k1 = 0, k2 = 0, x = 0; // type 2
    int cycle_edges = 0;
    std::string diagnostic;

    bool odd() const { return family == Family::OddlyBalanced || family == Family::OddlyBurdened; }
    bool classified() const { return family != Family::Unclassified; }
};

Classification classify(const Diagram& d);
Classification classify(const ReducedGraph& g);

// (-1)^(n-1) (s - 1 - #pairs of Seifert circles sharing a crossing)
int second_coeff_predicted(const Diagram& d);

// 4 min deg V - c + k - 2 (type 1) or 4 min deg V - c + (k1 + k2 - x - 4) (type 2)
int burdening_number_formula(const Classification& cls, const DiagramStats& st, const Rational& min_v);

// k/2, (k1 k2 - x^2)/4 or (k1 k2 - x^2 + 1)/4
Rational predicted_lead_conway(const Classification& cls);

// n + 2m, or n + 2(m + 1) for the odd families
int b_circle_bound(const Classification& cls, int n);

struct ClaspWitness {
    int v1, v2, v3;
    bool operator==(const ClaspWitness&) const = default;
};
std::optional<ClaspWitness> claspable(const Diagram& d);
// Throws DiagramError if the witness is invalid or no clasp realizes the predicted graph.
Diagram clasp_move(const Diagram& d, const ClaspWitness& w);

// Multigraph isomorphism on (vertex count, edge multiset).
bool multigraph_isomorphic(int n, const std::vector<std::pair<int, int>>& a, const std::vector<std::pair<int, int>>& b);

std::string to_dot(const ReducedGraph& g);
nlohmann::json to_json(const ReducedGraph& g);
nlohmann::json to_json(const Classification& c);

} // namespace knotpos
