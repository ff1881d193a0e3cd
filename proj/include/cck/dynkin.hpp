#ifndef CCK_DYNKIN_HPP
#define CCK_DYNKIN_HPP

#include <string>
#include <vector>

#include "cck/exchange.hpp"

namespace cck {

// "A5", "B3", "E6", products "A2xA3" (case-insensitive separator x).
DynkinType parseDynkinType(const std::string& text);

struct Orientation {
    enum class Kind { Linear, Bipartite, Arrows } kind = Kind::Linear;
    // Explicit arrows, 0-based, only for Kind::Arrows.
    std::vector<std::pair<int, int>> arrows;
};

// "linear", "bipartite", or an arrow list like "2>1,3>2,3>4" (1-based).
Orientation parseOrientation(const std::string& text);

// Valued edge {u,v} of the diagram with |b_uv| = a, |b_vu| = b when
// oriented u -> v.
struct DiagramEdge {
    int u, v;
    long long a, b;
};

// Edges of the tree diagram, vertices 0..rank-1, path-first numbering.
std::vector<DiagramEdge> diagramEdges(const DynkinType& type);

// Exchange matrix of the given type and orientation.
ExchangeMatrix dynkinMatrix(const DynkinType& type, const Orientation& orientation = {});

// All 2^edges orientations of the diagram (explicit-arrow form).
std::vector<ExchangeMatrix> allOrientations(const DynkinType& type);

}  // namespace cck

#endif
