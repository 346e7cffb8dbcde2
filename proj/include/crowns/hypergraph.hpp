#ifndef CROWNS_HYPERGRAPH_HPP
#define CROWNS_HYPERGRAPH_HPP

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "crowns/errors.hpp"

namespace crowns {

// Dense 0-based vertex id; valid ids are < n for the containing graph.
using Vertex = int;

// An r-set of vertices in canonical form: strictly increasing ids.
// Two edges are equal iff their sequences are equal.
struct Edge {
    std::vector<Vertex> vs;

    int size() const { return static_cast<int>(vs.size()); }
    bool contains(Vertex v) const;

    bool operator==(const Edge&) const = default;
    auto operator<=>(const Edge&) const = default;
};

// Number of shared vertices of two canonical edges (merge walk).
int intersection_size(const Edge& a, const Edge& b);
bool disjoint(const Edge& a, const Edge& b);

// A linear r-uniform hypergraph on a fixed vertex set {0, ..., n-1}:
// every pair of distinct vertices lies in at most one edge. Edges are kept
// in insertion order; pair coverage, incidence lists and degrees are
// maintained incrementally so that linearity checks are O(1) per pair.
//
// After construction the graph is treated as immutable by every analysis
// operation; values are safe to share across concurrent readers.
class LinearRGraph {
   public:
    // Empty graph; n >= 0 vertices, uniformity r >= 2.
    LinearRGraph(int n, int r);

    int n() const { return n_; }
    int r() const { return r_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(int idx) const { return edges_[idx]; }

    // Appends the edge with the given vertex set (any order; canonicalized
    // here). Throws ArityError, VertexRangeError, DuplicateEdgeError or
    // LinearityError; the graph is unchanged on failure.
    void add_edge(std::span<const Vertex> vertices);
    void add_edge(std::initializer_list<Vertex> vertices);

    int degree(Vertex v) const;
    const std::vector<int>& degrees() const { return degree_; }

    // Indices of the edges containing v, in insertion order.
    const std::vector<int>& incident_edges(Vertex v) const;

    // Degrees of e's vertices sorted non-increasingly, ties broken by
    // ascending vertex id; pairs are (degree, vertex).
    std::vector<std::pair<int, Vertex>> edge_degrees_desc(const Edge& e) const;

    // |{v : degree(v) >= threshold}|.
    int s_count(int threshold) const;

    // Index of the edge covering the pair {a, b}, or -1.
    int pair_edge(Vertex a, Vertex b) const;

    // Index of this exact edge, or -1.
    int find_edge(const Edge& e) const;
    bool has_edge(const Edge& e) const { return find_edge(e) >= 0; }

    bool has_isolated_vertex() const;
    // Smallest isolated vertex id, or -1 if none.
    Vertex first_isolated_vertex() const;

    // Equality up to edge order (compares lexicographically sorted edge
    // sequences; vertex labels are significant).
    bool operator==(const LinearRGraph& other) const;

   private:
    void check_vertex(Vertex v) const;
    std::size_t pair_index(Vertex a, Vertex b) const;

    int n_;
    int r_;
    std::vector<Edge> edges_;
    std::vector<int> degree_;
    std::vector<std::vector<int>> incident_;
    std::vector<int> pair_cover_;  // flat n*n map, index i*n+j (i<j), -1 = free
};

// Text format, bit-exact on output:
//   line 1:        "r n m"            (ASCII decimal, single spaces, LF)
//   lines 2..m+1:  r vertex ids, strictly ascending, space-separated
// Lines starting with '#' are comments and are ignored on input.
LinearRGraph parse_graph(std::string_view text);
std::string serialize_graph(const LinearRGraph& g);

}  // namespace crowns

#endif  // CROWNS_HYPERGRAPH_HPP
