#include "crowns/crown.hpp"

#include <algorithm>

namespace crowns {

bool CrownEmbedding::valid_in(const LinearRGraph& g) const {
    if (!g.has_edge(base)) return false;
    if (attachments.size() != spokes.size()) return false;
    if (spokes.empty()) return false;
    std::vector<Vertex> seen = attachments;
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) return false;
    for (std::size_t i = 0; i < spokes.size(); ++i) {
        const Edge& s = spokes[i];
        if (!g.has_edge(s) || s == base) return false;
        if (!base.contains(attachments[i]) || !s.contains(attachments[i])) return false;
        if (intersection_size(s, base) != 1) return false;
        for (std::size_t j = i + 1; j < spokes.size(); ++j)
            if (!disjoint(s, spokes[j])) return false;
    }
    return true;
}

GreedyCrownResult greedy_crown(const LinearRGraph& g, const Edge& base,
                               std::span<const Vertex> attachments) {
    int base_idx = g.find_edge(base);
    if (base_idx < 0) throw InvalidParameterError("greedy_crown: base not in graph");
    int k = static_cast<int>(attachments.size());
    if (k < 1 || k > g.r())
        throw InvalidParameterError("greedy_crown: k must be in [1, r]");
    {
        std::vector<Vertex> check(attachments.begin(), attachments.end());
        std::sort(check.begin(), check.end());
        if (std::adjacent_find(check.begin(), check.end()) != check.end())
            throw InvalidParameterError("greedy_crown: attachments not distinct");
        for (Vertex v : check)
            if (!base.contains(v))
                throw InvalidParameterError("greedy_crown: attachment " +
                                            std::to_string(v) + " not in base");
    }

    CrownEmbedding emb;
    emb.base = base;
    std::vector<int> spoke_idx;
    for (int i = 0; i < k; ++i) {
        Vertex v = attachments[i];
        int chosen = -1;
        for (int cand : g.incident_edges(v)) {
            if (cand == base_idx) continue;
            bool clash = false;
            for (int s : spoke_idx)
                if (!disjoint(g.edge(cand), g.edge(s))) {
                    clash = true;
                    break;
                }
            if (!clash) {
                chosen = cand;
                break;
            }
        }
        if (chosen < 0) return {std::nullopt, i + 1};
        spoke_idx.push_back(chosen);
        emb.attachments.push_back(v);
        emb.spokes.push_back(g.edge(chosen));
    }
    return {std::move(emb), 0};
}

namespace {

// Backtracks over attachment positions in ascending vertex order; for each,
// spokes in ascending edge index. First success is the lexicographically
// least embedding.
struct ExactSearcher {
    const LinearRGraph& g;
    const Edge& base;
    int base_idx;
    int k;
    std::vector<Vertex> attachments;
    std::vector<int> spokes;

    bool extend(std::size_t from) {
        if (static_cast<int>(spokes.size()) == k) return true;
        int remaining = k - static_cast<int>(spokes.size());
        for (std::size_t pos = from;
             pos + remaining <= base.vs.size(); ++pos) {
            Vertex v = base.vs[pos];
            for (int cand : g.incident_edges(v)) {
                if (cand == base_idx) continue;
                bool clash = false;
                for (int s : spokes)
                    if (!disjoint(g.edge(cand), g.edge(s))) {
                        clash = true;
                        break;
                    }
                if (clash) continue;
                attachments.push_back(v);
                spokes.push_back(cand);
                if (extend(pos + 1)) return true;
                attachments.pop_back();
                spokes.pop_back();
            }
        }
        return false;
    }
};

}  // namespace

std::optional<CrownEmbedding> exact_crown_with_base(const LinearRGraph& g,
                                                    const Edge& base, int k) {
    int base_idx = g.find_edge(base);
    if (base_idx < 0)
        throw InvalidParameterError("exact_crown_with_base: base not in graph");
    if (k < 1 || k > g.r())
        throw InvalidParameterError("exact_crown_with_base: k must be in [1, r]");
    ExactSearcher searcher{g, base, base_idx, k, {}, {}};
    if (!searcher.extend(0)) return std::nullopt;
    CrownEmbedding emb;
    emb.base = base;
    emb.attachments = std::move(searcher.attachments);
    for (int s : searcher.spokes) emb.spokes.push_back(g.edge(s));
    return emb;
}

int k_of_edge(const LinearRGraph& g, const Edge& e) {
    if (g.find_edge(e) < 0) throw InvalidParameterError("k_of_edge: edge not in graph");
    // A t-crown needs t base vertices of degree >= 2; cap the search there.
    int cap = 0;
    for (Vertex v : e.vs)
        if (g.degree(v) >= 2) ++cap;
    for (int t = std::min(cap, g.r()); t >= 1; --t)
        if (exact_crown_with_base(g, e, t)) return t;
    return 0;
}

std::vector<int> k_map(const LinearRGraph& g) {
    std::vector<int> out;
    out.reserve(g.edge_count());
    for (const Edge& e : g.edges()) out.push_back(k_of_edge(g, e));
    return out;
}

CrownFreeResult is_crown_free(const LinearRGraph& g, int k) {
    if (k < 1 || k > g.r())
        throw InvalidParameterError("is_crown_free: k must be in [1, r]");
    for (const Edge& e : g.edges()) {
        auto emb = exact_crown_with_base(g, e, k);
        if (emb) return {false, std::move(emb)};
    }
    return {true, std::nullopt};
}

std::optional<DegreeCertificate> degree_certificate(const LinearRGraph& g,
                                                    const Edge& e, int k) {
    if (g.find_edge(e) < 0)
        throw InvalidParameterError("degree_certificate: edge not in graph");
    if (k < 1 || k > g.r())
        throw InvalidParameterError("degree_certificate: k must be in [1, r]");
    auto ordered = g.edge_degrees_desc(e);
    int r = g.r();
    for (int i = 1; i <= k; ++i) {
        int bound = (k - i) * (r - 1) + 1;
        if (ordered[i - 1].first <= bound)
            return DegreeCertificate{e, i, ordered[i - 1].second, bound};
    }
    return std::nullopt;
}

}  // namespace crowns
