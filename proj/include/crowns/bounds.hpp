#ifndef CROWNS_BOUNDS_HPP
#define CROWNS_BOUNDS_HPP

#include <optional>
#include <string>
#include <vector>

#include "crowns/crown.hpp"
#include "crowns/hypergraph.hpp"
#include "crowns/rational.hpp"

namespace crowns {

// Degree threshold defining s: vertices of degree >= (k-1)(r-1)+2 are the
// high-degree vertices excluded from the indicator count.
int s_threshold(int r, int k);

// Indicator cutoff: I(v) = 1 iff degree(v) <= (k-1)(r-1)+1.
int indicator_cutoff(int r, int k);

// Main upper bound ((k-1)(r-1)+1)(n-s)/r on the edge count of a k-crown-free
// linear r-graph. Valid for every k in [1, r].
Rational main_upper(long long n, int r, int k, long long s);

// Bounds forbidding {k-crown with k=r, plus the auxiliary configuration}:
// upper r(r-2)(n-s)/(r-1), lower r(r-1)*floor((n-r)/(r-1)^2).
Rational zbw_upper(long long n, int r, long long s);
long long zbw_lower(long long n, int r);

struct GrsBounds {
    long long lower;
    long long upper;
};
// 3-uniform crown bounds: lower 6*floor((n-3)/4)+eps with eps in {0,1,3} by
// (n-3) mod 4, upper 2n.
GrsBounds grs_bounds(long long n);

// 3-uniform crown refinement 3(n-s)/2, s counting vertices of degree >= 6.
Rational twz_upper(long long n, long long s);

// 3-crown bound (2r-1)n/r for r-graphs.
Rational av_upper(long long n, int r);

struct Ineq3Result {
    Rational lhs;   // (r-i+1) / ((k-i)(r-1)+1)
    Rational rhs;   // r / ((k-1)(r-1)+1)
    bool holds;     // lhs >= rhs; true for all 1 <= i <= k <= r, r >= 3
};
Ineq3Result ineq3_check(int r, int k, int i);

struct DoubleCountResult {
    Rational lhs;    // sum over edges of sum over vertices of I(v)/d(v)
    long long rhs;   // n - s
    bool equal;      // an identity: true for every graph without isolated vertices
};
// Requires no isolated vertices; k fixes the indicator threshold.
DoubleCountResult double_count_identity(const LinearRGraph& g, int k);

struct WeightedCheckResult {
    Rational lhs;             // sum over edges of 1/(k(e)(r-1)+1)
    Rational rhs;             // (n-s)/r
    bool holds;               // lhs <= rhs
    std::vector<int> edge_k;  // k(e) per edge index
};
// Weighted per-edge refinement. Requires g to be k-crown-free (throws
// NotApplicableError carrying a witness otherwise) and isolated-vertex-free.
WeightedCheckResult weighted_check(const LinearRGraph& g, int k);

// floor(n/r): tight bound for graphs with no two intersecting edges.
long long p2_bound(long long n, int r);

struct StarVerdict {
    Vertex v;
    int degree;
    bool is_star_center;  // all edges of v's component contain v
};

struct P3ClaimReport {
    long long n = 0;
    long long edge_count = 0;
    long long s = 0;  // vertices of degree >= r+1
    std::vector<StarVerdict> high_degree_vertices;
    bool stars_ok = false;   // every high-degree vertex centers a star component
    bool bound_ok = false;   // edge_count <= n - s
    bool strict_ok = false;  // edge_count <= n - s - 1 whenever s > 0
    bool pass = false;
};
// Verifies the structure of 3-path-free graphs: requires is_crown_free(g, 2)
// (throws NotApplicableError with the witness path otherwise).
P3ClaimReport p3_claim_check(const LinearRGraph& g);

// One row of bound values for parameters (n, r, k, s). Comparison bounds are
// present only where their theorems apply: zbw for k == r, twz and grs for
// (r, k) == (3, 3), av for k == 3. edge_count and satisfied are filled when
// the report is built from a graph.
struct BoundReport {
    long long n = 0;
    int r = 0;
    int k = 0;
    long long s = 0;
    Rational main;
    std::optional<Rational> zbw;
    std::optional<Rational> twz;
    std::optional<Rational> av;
    std::optional<GrsBounds> grs;
    std::optional<long long> edge_count;
    std::optional<bool> satisfied;
};

BoundReport bound_report(long long n, int r, int k, long long s);
BoundReport bound_report_for_graph(const LinearRGraph& g, int k);

// CSV with header "n,r,k,s,main_upper,zbw_upper,twz_upper,av_upper,
// grs_lower,grs_upper"; rationals rendered "p/q", non-applicable cells empty.
std::string bound_csv_header();
std::string bound_csv_row(const BoundReport& report);

}  // namespace crowns

#endif  // CROWNS_BOUNDS_HPP
