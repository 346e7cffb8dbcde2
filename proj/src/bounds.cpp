#include "crowns/bounds.hpp"

#include <algorithm>

namespace crowns {

int s_threshold(int r, int k) { return (k - 1) * (r - 1) + 2; }

int indicator_cutoff(int r, int k) { return (k - 1) * (r - 1) + 1; }

namespace {

void check_rk(int r, int k) {
    if (r < 2) throw InvalidParameterError("uniformity r must be >= 2");
    if (k < 1 || k > r) throw InvalidParameterError("k must be in [1, r]");
}

}  // namespace

Rational main_upper(long long n, int r, int k, long long s) {
    check_rk(r, k);
    if (n < 0 || s < 0 || s > n)
        throw InvalidParameterError("main_upper: need 0 <= s <= n");
    long long coeff = static_cast<long long>(k - 1) * (r - 1) + 1;
    return Rational(coeff) * Rational(n - s, r);
}

Rational zbw_upper(long long n, int r, long long s) {
    if (r < 3) throw InvalidParameterError("zbw_upper: r must be >= 3");
    if (n < r) throw InvalidParameterError("zbw_upper: n must be >= r");
    if (s < 0 || s > n) throw InvalidParameterError("zbw_upper: need 0 <= s <= n");
    return Rational(static_cast<long long>(r) * (r - 2)) * Rational(n - s, r - 1);
}

long long zbw_lower(long long n, int r) {
    if (r < 3) throw InvalidParameterError("zbw_lower: r must be >= 3");
    if (n < r) throw InvalidParameterError("zbw_lower: n must be >= r");
    long long d = static_cast<long long>(r - 1) * (r - 1);
    return static_cast<long long>(r) * (r - 1) * ((n - r) / d);
}

GrsBounds grs_bounds(long long n) {
    if (n < 3) throw InvalidParameterError("grs_bounds: n must be >= 3");
    long long rem = (n - 3) % 4;
    long long eps = rem <= 1 ? 0 : (rem == 2 ? 1 : 3);
    return {6 * ((n - 3) / 4) + eps, 2 * n};
}

Rational twz_upper(long long n, long long s) {
    if (n < 0 || s < 0 || s > n) throw InvalidParameterError("twz_upper: need 0 <= s <= n");
    return Rational(3 * (n - s), 2);
}

Rational av_upper(long long n, int r) {
    if (r < 3) throw InvalidParameterError("av_upper: r must be >= 3");
    if (n < 0) throw InvalidParameterError("av_upper: n must be >= 0");
    return Rational((2LL * r - 1) * n, r);
}

Ineq3Result ineq3_check(int r, int k, int i) {
    if (r < 3) throw InvalidParameterError("ineq3_check: r must be >= 3");
    check_rk(r, k);
    if (i < 1 || i > k) throw InvalidParameterError("ineq3_check: i must be in [1, k]");
    Rational lhs(r - i + 1, static_cast<long long>(k - i) * (r - 1) + 1);
    Rational rhs(r, static_cast<long long>(k - 1) * (r - 1) + 1);
    return {lhs, rhs, lhs >= rhs};
}

DoubleCountResult double_count_identity(const LinearRGraph& g, int k) {
    check_rk(g.r(), k);
    if (Vertex v = g.first_isolated_vertex(); v >= 0)
        throw IsolatedVertexError(v, "double_count_identity: vertex " +
                                         std::to_string(v) + " is isolated");
    int cutoff = indicator_cutoff(g.r(), k);
    Rational lhs;
    for (const Edge& e : g.edges())
        for (Vertex v : e.vs)
            if (g.degree(v) <= cutoff) lhs += Rational(1, g.degree(v));
    long long rhs = g.n() - g.s_count(s_threshold(g.r(), k));
    return {lhs, rhs, lhs == Rational(rhs)};
}

WeightedCheckResult weighted_check(const LinearRGraph& g, int k) {
    check_rk(g.r(), k);
    auto cf = is_crown_free(g, k);
    if (!cf.free)
        throw NotApplicableError("weighted_check: graph contains a " +
                                 std::to_string(k) + "-crown with base edge " +
                                 std::to_string(g.find_edge(cf.witness->base)));
    if (Vertex v = g.first_isolated_vertex(); v >= 0)
        throw IsolatedVertexError(
            v, "weighted_check: vertex " + std::to_string(v) + " is isolated");
    WeightedCheckResult out;
    out.edge_k = k_map(g);
    for (int ke : out.edge_k)
        out.lhs += Rational(1, static_cast<long long>(ke) * (g.r() - 1) + 1);
    out.rhs = Rational(g.n() - g.s_count(s_threshold(g.r(), k)), g.r());
    out.holds = out.lhs <= out.rhs;
    return out;
}

long long p2_bound(long long n, int r) {
    if (r < 2) throw InvalidParameterError("p2_bound: r must be >= 2");
    if (n < 0) throw InvalidParameterError("p2_bound: n must be >= 0");
    return n / r;
}

P3ClaimReport p3_claim_check(const LinearRGraph& g) {
    auto cf = is_crown_free(g, std::min(2, g.r()));
    if (g.r() >= 2 && !cf.free)
        throw NotApplicableError("p3_claim_check: graph contains a 3-edge linear path");

    P3ClaimReport report;
    report.n = g.n();
    report.edge_count = g.edge_count();
    int threshold = g.r() + 1;

    // Component of each vertex via union over edges.
    std::vector<int> comp(g.n(), -1);
    int n_comp = 0;
    for (Vertex v = 0; v < g.n(); ++v) {
        if (comp[v] >= 0 || g.degree(v) == 0) continue;
        int id = n_comp++;
        std::vector<Vertex> stack{v};
        comp[v] = id;
        while (!stack.empty()) {
            Vertex u = stack.back();
            stack.pop_back();
            for (int ei : g.incident_edges(u))
                for (Vertex w : g.edge(ei).vs)
                    if (comp[w] < 0) {
                        comp[w] = id;
                        stack.push_back(w);
                    }
        }
    }

    report.stars_ok = true;
    for (Vertex v = 0; v < g.n(); ++v) {
        if (g.degree(v) < threshold) continue;
        ++report.s;
        // Star component: every edge of the component contains v.
        bool star = true;
        for (const Edge& e : g.edges())
            if (comp[e.vs[0]] == comp[v] && !e.contains(v)) {
                star = false;
                break;
            }
        report.high_degree_vertices.push_back({v, g.degree(v), star});
        if (!star) report.stars_ok = false;
    }

    report.bound_ok = report.edge_count <= report.n - report.s;
    report.strict_ok =
        report.s == 0 || report.edge_count <= report.n - report.s - 1;
    report.pass = report.stars_ok && report.bound_ok && report.strict_ok;
    return report;
}

BoundReport bound_report(long long n, int r, int k, long long s) {
    check_rk(r, k);
    BoundReport rep;
    rep.n = n;
    rep.r = r;
    rep.k = k;
    rep.s = s;
    rep.main = main_upper(n, r, k, s);
    if (k == r && r >= 3 && n >= r) rep.zbw = zbw_upper(n, r, s);
    if (r == 3 && k == 3) rep.twz = twz_upper(n, s);
    if (k == 3 && r >= 3) rep.av = av_upper(n, r);
    if (r == 3 && k == 3 && n >= 3) rep.grs = grs_bounds(n);
    return rep;
}

BoundReport bound_report_for_graph(const LinearRGraph& g, int k) {
    long long s = g.s_count(s_threshold(g.r(), k));
    BoundReport rep = bound_report(g.n(), g.r(), k, s);
    rep.edge_count = g.edge_count();
    rep.satisfied = *rep.edge_count <= rep.main.floor();
    return rep;
}

std::string bound_csv_header() {
    return "n,r,k,s,main_upper,zbw_upper,twz_upper,av_upper,grs_lower,grs_upper";
}

std::string bound_csv_row(const BoundReport& rep) {
    std::string row = std::to_string(rep.n) + "," + std::to_string(rep.r) + "," +
                      std::to_string(rep.k) + "," + std::to_string(rep.s) + ",";
    row += rep.main.str();
    row += ",";
    if (rep.zbw) row += rep.zbw->str();
    row += ",";
    if (rep.twz) row += rep.twz->str();
    row += ",";
    if (rep.av) row += rep.av->str();
    row += ",";
    if (rep.grs) row += std::to_string(rep.grs->lower);
    row += ",";
    if (rep.grs) row += std::to_string(rep.grs->upper);
    return row;
}

}  // namespace crowns
