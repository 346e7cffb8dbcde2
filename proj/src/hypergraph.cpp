#include "crowns/hypergraph.hpp"

#include <algorithm>
#include <sstream>

namespace crowns {

bool Edge::contains(Vertex v) const {
    return std::binary_search(vs.begin(), vs.end(), v);
}

int intersection_size(const Edge& a, const Edge& b) {
    int count = 0;
    auto ia = a.vs.begin();
    auto ib = b.vs.begin();
    while (ia != a.vs.end() && ib != b.vs.end()) {
        if (*ia < *ib) {
            ++ia;
        } else if (*ib < *ia) {
            ++ib;
        } else {
            ++count;
            ++ia;
            ++ib;
        }
    }
    return count;
}

bool disjoint(const Edge& a, const Edge& b) { return intersection_size(a, b) == 0; }

LinearRGraph::LinearRGraph(int n, int r) : n_(n), r_(r) {
    if (n < 0) throw InvalidParameterError("LinearRGraph: negative vertex count");
    if (r < 2) throw InvalidParameterError("LinearRGraph: uniformity must be >= 2");
    degree_.assign(n, 0);
    incident_.assign(n, {});
    pair_cover_.assign(static_cast<std::size_t>(n) * n, -1);
}

void LinearRGraph::check_vertex(Vertex v) const {
    if (v < 0 || v >= n_)
        throw VertexRangeError("vertex " + std::to_string(v) + " outside [0, " +
                               std::to_string(n_) + ")");
}

std::size_t LinearRGraph::pair_index(Vertex a, Vertex b) const {
    if (a > b) std::swap(a, b);
    return static_cast<std::size_t>(a) * n_ + b;
}

void LinearRGraph::add_edge(std::span<const Vertex> vertices) {
    Edge e;
    e.vs.assign(vertices.begin(), vertices.end());
    std::sort(e.vs.begin(), e.vs.end());
    for (std::size_t i = 1; i < e.vs.size(); ++i)
        if (e.vs[i] == e.vs[i - 1])
            throw ArityError("edge repeats vertex " + std::to_string(e.vs[i]));
    if (e.size() != r_)
        throw ArityError("edge has " + std::to_string(e.size()) +
                         " distinct vertices, expected " + std::to_string(r_));
    for (Vertex v : e.vs) check_vertex(v);
    if (has_edge(e)) throw DuplicateEdgeError("edge already present");
    for (std::size_t i = 0; i < e.vs.size(); ++i) {
        for (std::size_t j = i + 1; j < e.vs.size(); ++j) {
            int covering = pair_cover_[pair_index(e.vs[i], e.vs[j])];
            if (covering >= 0)
                throw LinearityError(
                    e.vs[i], e.vs[j], covering,
                    "pair {" + std::to_string(e.vs[i]) + "," +
                        std::to_string(e.vs[j]) + "} already covered by edge " +
                        std::to_string(covering));
        }
    }
    int idx = edge_count();
    for (std::size_t i = 0; i < e.vs.size(); ++i) {
        for (std::size_t j = i + 1; j < e.vs.size(); ++j)
            pair_cover_[pair_index(e.vs[i], e.vs[j])] = idx;
        degree_[e.vs[i]]++;
        incident_[e.vs[i]].push_back(idx);
    }
    edges_.push_back(std::move(e));
}

void LinearRGraph::add_edge(std::initializer_list<Vertex> vertices) {
    add_edge(std::span<const Vertex>(vertices.begin(), vertices.size()));
}

int LinearRGraph::degree(Vertex v) const {
    check_vertex(v);
    return degree_[v];
}

const std::vector<int>& LinearRGraph::incident_edges(Vertex v) const {
    check_vertex(v);
    return incident_[v];
}

std::vector<std::pair<int, Vertex>> LinearRGraph::edge_degrees_desc(const Edge& e) const {
    if (find_edge(e) < 0) throw InvalidParameterError("edge not in graph");
    std::vector<std::pair<int, Vertex>> out;
    out.reserve(e.vs.size());
    for (Vertex v : e.vs) out.emplace_back(degree_[v], v);
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first > b.first;
        return a.second < b.second;
    });
    return out;
}

int LinearRGraph::s_count(int threshold) const {
    if (threshold < 0) throw InvalidParameterError("s_count: negative threshold");
    int count = 0;
    for (int d : degree_)
        if (d >= threshold) ++count;
    return count;
}

int LinearRGraph::pair_edge(Vertex a, Vertex b) const {
    check_vertex(a);
    check_vertex(b);
    if (a == b) throw InvalidParameterError("pair_edge: identical vertices");
    return pair_cover_[pair_index(a, b)];
}

int LinearRGraph::find_edge(const Edge& e) const {
    if (e.size() < 2) return -1;
    // Any edge equal to e covers the pair of e's two smallest vertices.
    if (e.vs[0] < 0 || e.vs[0] >= n_ || e.vs[1] < 0 || e.vs[1] >= n_) return -1;
    int idx = pair_cover_[pair_index(e.vs[0], e.vs[1])];
    if (idx >= 0 && edges_[idx] == e) return idx;
    return -1;
}

bool LinearRGraph::has_isolated_vertex() const { return first_isolated_vertex() >= 0; }

Vertex LinearRGraph::first_isolated_vertex() const {
    for (Vertex v = 0; v < n_; ++v)
        if (degree_[v] == 0) return v;
    return -1;
}

bool LinearRGraph::operator==(const LinearRGraph& other) const {
    if (n_ != other.n_ || r_ != other.r_ || edges_.size() != other.edges_.size())
        return false;
    std::vector<Edge> a = edges_;
    std::vector<Edge> b = other.edges_;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
}

namespace {

std::vector<long long> parse_int_line(const std::string& line, int line_no) {
    std::vector<long long> out;
    std::istringstream iss(line);
    std::string token;
    while (iss >> token) {
        try {
            std::size_t pos = 0;
            long long value = std::stoll(token, &pos);
            if (pos != token.size()) throw std::invalid_argument(token);
            out.push_back(value);
        } catch (const std::exception&) {
            throw ParseError(line_no, "line " + std::to_string(line_no) +
                                          ": invalid integer '" + token + "'");
        }
    }
    return out;
}

}  // namespace

LinearRGraph parse_graph(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    int line_no = 0;
    auto next_content_line = [&](bool required) -> bool {
        while (std::getline(in, line)) {
            ++line_no;
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (!line.empty() && line[0] == '#') continue;
            return true;
        }
        if (required) throw ParseError(line_no, "unexpected end of input");
        return false;
    };

    next_content_line(true);
    auto header = parse_int_line(line, line_no);
    if (header.size() != 3)
        throw ParseError(line_no, "line " + std::to_string(line_no) +
                                      ": header must be 'r n m'");
    long long r = header[0], n = header[1], m = header[2];
    if (r < 2 || r > 1'000'000)
        throw ParseError(line_no, "line " + std::to_string(line_no) +
                                      ": uniformity r out of range");
    if (n < 0 || m < 0)
        throw ParseError(line_no, "line " + std::to_string(line_no) +
                                      ": negative vertex or edge count");

    LinearRGraph g(static_cast<int>(n), static_cast<int>(r));
    for (long long i = 0; i < m; ++i) {
        next_content_line(true);
        auto ids = parse_int_line(line, line_no);
        if (ids.size() != static_cast<std::size_t>(r))
            throw ParseError(line_no, "line " + std::to_string(line_no) + ": expected " +
                                          std::to_string(r) + " vertex ids, found " +
                                          std::to_string(ids.size()));
        std::vector<Vertex> vs;
        vs.reserve(ids.size());
        for (long long id : ids) {
            if (id < 0 || id >= n)
                throw ParseError(line_no, "line " + std::to_string(line_no) +
                                              ": vertex " + std::to_string(id) +
                                              " outside [0, " + std::to_string(n) + ")");
            vs.push_back(static_cast<Vertex>(id));
        }
        for (std::size_t j = 1; j < vs.size(); ++j)
            if (vs[j] <= vs[j - 1])
                throw ParseError(line_no, "line " + std::to_string(line_no) +
                                              ": vertex ids must be strictly ascending");
        try {
            g.add_edge(vs);
        } catch (const LinearityError& e) {
            throw ParseError(line_no, std::string(e.what()) + ", line " +
                                          std::to_string(line_no));
        } catch (const Error& e) {
            throw ParseError(line_no, std::string(e.what()) + ", line " +
                                          std::to_string(line_no));
        }
    }
    if (next_content_line(false))
        throw ParseError(line_no,
                         "line " + std::to_string(line_no) + ": trailing content");
    return g;
}

std::string serialize_graph(const LinearRGraph& g) {
    std::string out = std::to_string(g.r()) + " " + std::to_string(g.n()) + " " +
                      std::to_string(g.edge_count()) + "\n";
    for (const Edge& e : g.edges()) {
        for (std::size_t i = 0; i < e.vs.size(); ++i) {
            if (i) out += ' ';
            out += std::to_string(e.vs[i]);
        }
        out += '\n';
    }
    return out;
}

}  // namespace crowns
