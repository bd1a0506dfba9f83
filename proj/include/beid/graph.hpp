#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace beid {

// Simple undirected graph on vertices 1..n. Adjacency is kept as one bitmask
// row per vertex (bit u of adj[v] set iff {u,v} is an edge), so n is capped
// at 62 which comfortably covers the intended desk scale.
struct Graph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;  // sorted, each (i, j) with i < j
    std::vector<std::uint64_t> adj;          // size n + 1, index 0 unused

    static constexpr int kMaxVertices = 62;

    // Validates and canonicalizes the edge list (throws ParseError on loops,
    // duplicates, or out-of-range endpoints).
    static Graph with_edges(int n, std::vector<std::pair<int, int>> es);

    bool has_edge(int u, int v) const { return (adj[u] >> v) & 1u; }
    int edge_count() const { return static_cast<int>(edges.size()); }
    int degree(int v) const;
    std::vector<int> neighbors(int v) const;  // ascending

    bool operator==(const Graph& other) const { return n == other.n && edges == other.edges; }
};

// Assignment of positions 1..n to vertices 1..n; pos[v] is the position of v.
struct Labeling {
    std::vector<int> pos;  // size n + 1, index 0 unused

    static Labeling identity(int n);
    // From the position list for vertices 1, 2, ..., n; validated.
    static Labeling from_positions(const std::vector<int>& positions);

    int n() const { return static_cast<int>(pos.size()) - 1; }
    int operator()(int v) const { return pos[v]; }
    bool is_permutation() const;
    std::vector<int> to_vector() const { return std::vector<int>(pos.begin() + 1, pos.end()); }
};

// Facets (maximal cliques) of the clique complex, each sorted ascending, the
// list sorted lexicographically.
struct FacetComplex {
    std::vector<std::vector<int>> facets;
};

// Relabels: vertex v of g becomes vertex lab(v) of the result.
Graph apply_labeling(const Graph& g, const Labeling& lab);

// ---- parsing / serialization ------------------------------------------------

// Auto-detects edge-list vs graph6 by the first non-whitespace byte.
Graph parse_graph(std::string_view text);
Graph parse_edge_list(std::string_view text);
Graph parse_graph6(std::string_view text);
std::string to_edge_list(const Graph& g);
std::string to_graph6(const Graph& g);

// ---- predicates and constructions -------------------------------------------

struct ChordalityResult {
    bool chordal = false;
    std::vector<int> elimination_order;  // perfect elimination ordering when chordal
    std::vector<int> induced_cycle;      // an induced cycle of length >= 4 otherwise
};

// Maximum cardinality search plus perfect-elimination verification; on failure
// extracts an induced long cycle as the negative witness.
ChordalityResult is_chordal(const Graph& g);

// Rechecks a claimed perfect elimination ordering by simulating the elimination.
bool verify_elimination_order(const Graph& g, const std::vector<int>& order);

// A claw certificate (center, a, b, c): center adjacent to the pairwise
// nonadjacent a < b < c.
std::optional<std::array<int, 4>> find_claw(const Graph& g);

inline constexpr int kUnreachable = -1;

// All-pairs distances via BFS; kUnreachable for disconnected pairs.
std::vector<std::vector<int>> distances(const Graph& g);

// All shortest u-v paths (each as a vertex sequence from u to v).
std::vector<std::vector<int>> all_geodesics(const Graph& g, int u, int v,
                                            const std::vector<std::vector<int>>& dist);

// Every vertex lies within distance one of every diametral geodesic, checked
// per connected component and conjoined.
bool is_narrow(const Graph& g);

// Maximal cliques via pivoted Bron-Kerbosch; isolated vertices give singletons.
FacetComplex clique_facets(const Graph& g);

// Vertices contained in exactly one facet.
std::vector<int> free_vertices(const Graph& g);

// Three pairwise nonadjacent vertices, if any.
std::optional<std::array<int, 3>> independence_triangle(const Graph& g);

// Apex n+1 joined to every vertex.
Graph cone(const Graph& g);

// Identifies v' of g2 with v of g1 (both must be free); g1 keeps its labels,
// surviving g2 vertices are relabeled n1+1.. in ascending order.
Graph glue_at_free_vertices(const Graph& g1, int v, const Graph& g2, int v_prime);

std::vector<std::vector<int>> connected_components(const Graph& g);

}  // namespace beid
