#ifndef CROWNS_CROWN_HPP
#define CROWNS_CROWN_HPP

#include <optional>
#include <span>
#include <vector>

#include "crowns/hypergraph.hpp"

namespace crowns {

// A witness that `base` is the base edge of a k-crown: k pairwise disjoint
// spoke edges, spoke i meeting base exactly in attachments[i].
struct CrownEmbedding {
    Edge base;
    std::vector<Vertex> attachments;
    std::vector<Edge> spokes;

    int k() const { return static_cast<int>(spokes.size()); }

    // Re-checks every structural invariant against g: attachments are
    // distinct vertices of base, spokes are edges of g distinct from base,
    // spoke i meets base exactly in attachments[i], spokes pairwise disjoint.
    bool valid_in(const LinearRGraph& g) const;
};

// A witness for the degree condition on an edge: the vertex at (1-based)
// position `index` of the non-increasing degree order of `edge` has degree
// at most bound_value = (k - index)(r - 1) + 1.
struct DegreeCertificate {
    Edge edge;
    int index;
    Vertex vertex;
    int bound_value;
};

struct GreedyCrownResult {
    std::optional<CrownEmbedding> embedding;
    // 1-based position of the first attachment with no admissible spoke;
    // 0 on success.
    int stuck_index = 0;
};

// Greedy spoke selection along the given attachment order: step i takes the
// lowest-index edge through attachments[i] that is distinct from base and
// disjoint from the spokes already chosen (linearity guarantees it meets
// base only at attachments[i]). Succeeds whenever
// degree(attachments[i]) >= (i-1)(r-1) + 2 for every i.
GreedyCrownResult greedy_crown(const LinearRGraph& g, const Edge& base,
                               std::span<const Vertex> attachments);

// Complete backtracking over k attachment vertices of base (ascending id)
// and candidate spokes (ascending edge index). Returns the lexicographically
// first embedding, or nullopt iff base is not the base of any k-crown.
std::optional<CrownEmbedding> exact_crown_with_base(const LinearRGraph& g,
                                                    const Edge& base, int k);

// Largest t such that e is the base of a t-crown; 0 if no edge meets e.
int k_of_edge(const LinearRGraph& g, const Edge& e);

// k_of_edge for every edge, indexed like g.edges().
std::vector<int> k_map(const LinearRGraph& g);

struct CrownFreeResult {
    bool free;
    std::optional<CrownEmbedding> witness;  // present iff !free
};

// True iff no edge of g is the base of a k-crown.
CrownFreeResult is_crown_free(const LinearRGraph& g, int k);

// Smallest i in [k] with degree(u_i) <= (k-i)(r-1)+1 under the
// non-increasing degree order of e (ties by vertex id), or nullopt. When no
// certificate exists, the reversed assignment v_i = u_{k-i+1} satisfies the
// greedy precondition, so greedy_crown succeeds on it.
std::optional<DegreeCertificate> degree_certificate(const LinearRGraph& g,
                                                    const Edge& e, int k);

}  // namespace crowns

#endif  // CROWNS_CROWN_HPP
