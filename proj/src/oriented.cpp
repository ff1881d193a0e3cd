#include "cck/oriented.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "cck/errors.hpp"

namespace cck {

OrientedExchangeGraph orient(const ExchangeGraph& g) {
    OrientedExchangeGraph og;
    og.graph = &g;
    const size_t n = g.nodes.size();
    std::vector<int> inDeg(n, 0), outDeg(n, 0);
    for (const auto& e : g.edges) {
        ++outDeg[e.arrowFrom];
        ++inDeg[e.arrowTo];
    }
    for (size_t v = 0; v < n; ++v) {
        if (inDeg[v] == 0) {
            if (og.source != -1) throw EngineBug("oriented exchange graph has two sources");
            og.source = static_cast<int>(v);
        }
        if (outDeg[v] == 0) {
            if (og.sink != -1) throw EngineBug("oriented exchange graph has two sinks");
            og.sink = static_cast<int>(v);
        }
    }
    if (og.source == -1 || og.sink == -1) throw EngineBug("oriented exchange graph lacks a source or sink");
    if (og.sink != 0) throw EngineBug("initial cluster is not the unique sink");

    // Acyclicity via Kahn.
    std::vector<int> deg = inDeg;
    std::deque<int> q;
    for (size_t v = 0; v < n; ++v)
        if (deg[v] == 0) q.push_back(static_cast<int>(v));
    std::vector<std::vector<int>> outEdges(n);
    for (const auto& e : g.edges) outEdges[e.arrowFrom].push_back(e.arrowTo);
    size_t seen = 0;
    while (!q.empty()) {
        int v = q.front();
        q.pop_front();
        ++seen;
        for (int w : outEdges[v])
            if (--deg[w] == 0) q.push_back(w);
    }
    if (seen != n) throw EngineBug("oriented exchange graph has a cycle");

    og.positive.assign(n, 1);
    for (size_t v = 0; v < n; ++v)
        for (VarId x : g.nodes[v].vars)
            if (g.isInitialVar(x)) {
                og.positive[v] = 0;
                break;
            }
    return og;
}

TauTiltStats tauTiltH(const ClusterComplexBundle& bundle) {
    const auto& g = bundle.graph;
    OrientedExchangeGraph og = orient(g);
    const int n = g.rank();

    TauTiltStats out;
    out.inDegreeCounts.assign(n + 1, 0);
    std::vector<int> restricted(g.nodes.size(), 0);
    for (const auto& e : g.edges)
        if (og.positive[e.arrowFrom] && og.positive[e.arrowTo]) ++restricted[e.arrowTo];
    for (size_t v = 0; v < g.nodes.size(); ++v) {
        if (!og.positive[v]) continue;
        ++out.positiveNodes;
        if (restricted[v] > n) throw EngineBug("restricted in-degree exceeds the rank");
        ++out.inDegreeCounts[restricted[v]];
    }
    out.hOfPositive = hVector(bundle.positive.faceVector(), n);
    out.match = out.inDegreeCounts == out.hOfPositive;
    return out;
}

std::string toDot(const OrientedExchangeGraph& og) {
    const auto& g = *og.graph;
    std::ostringstream os;
    os << "digraph exchange {\n";
    for (size_t v = 0; v < g.nodes.size(); ++v) {
        os << "  n" << v << " [label=\"" << v << "\"";
        if (og.positive[v]) os << ", style=filled, fillcolor=lightblue";
        os << "];\n";
    }
    for (const auto& e : g.edges) os << "  n" << e.arrowFrom << " -> n" << e.arrowTo << ";\n";
    os << "}\n";
    return os.str();
}

}  // namespace cck
