#ifndef CROWNS_ERRORS_HPP
#define CROWNS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace crowns {

// Base class for everything thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad argument to a constructor or operation (r < 2, k out of range, ...).
struct InvalidParameterError : Error {
    using Error::Error;
};

// add_edge: wrong number of (distinct) vertices for the graph's uniformity.
struct ArityError : InvalidParameterError {
    using InvalidParameterError::InvalidParameterError;
};

// add_edge: vertex id outside [0, n).
struct VertexRangeError : InvalidParameterError {
    using InvalidParameterError::InvalidParameterError;
};

// add_edge: edge already present.
struct DuplicateEdgeError : Error {
    using Error::Error;
};

// add_edge: some pair of vertices would be covered by two edges.
struct LinearityError : Error {
    LinearityError(int u, int v, int covering_edge, const std::string& what)
        : Error(what), u(u), v(v), covering_edge(covering_edge) {}
    int u;
    int v;
    int covering_edge;  // index of the edge already covering {u, v}
};

// parse_graph: malformed input; line is 1-based and counts comment lines.
struct ParseError : Error {
    ParseError(int line, const std::string& what) : Error(what), line(line) {}
    int line;
};

// An operation whose statement requires every vertex to have degree >= 1.
struct IsolatedVertexError : Error {
    IsolatedVertexError(int vertex, const std::string& what)
        : Error(what), vertex(vertex) {}
    int vertex;
};

// A check was invoked on input outside its hypothesis (e.g. the weighted
// refinement on a graph that is not crown-free).
struct NotApplicableError : Error {
    using Error::Error;
};

// Exact arithmetic left the representable range.
struct OverflowError : Error {
    using Error::Error;
};

}  // namespace crowns

#endif  // CROWNS_ERRORS_HPP
