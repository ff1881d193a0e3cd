#include "cck/dynkin.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "cck/errors.hpp"

namespace cck {

DynkinType parseDynkinType(const std::string& text) {
    std::vector<DynkinComponent> comps;
    size_t i = 0;
    auto skipSpace = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    while (true) {
        skipSpace();
        if (i >= text.size()) throw InvalidInput("empty Dynkin type in '" + text + "'");
        char fam = static_cast<char>(std::toupper(static_cast<unsigned char>(text[i++])));
        if (std::string("ABCDEFG").find(fam) == std::string::npos)
            throw InvalidInput(std::string("unknown Dynkin family '") + fam + "'");
        skipSpace();
        size_t start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (start == i) throw InvalidInput("missing rank in '" + text + "'");
        int rank = std::stoi(text.substr(start, i - start));
        DynkinComponent c{static_cast<DynkinFamily>(fam), rank};
        bool ok = rank >= 1;
        switch (c.family) {
            case DynkinFamily::A: break;
            case DynkinFamily::B:
            case DynkinFamily::C: ok = ok && rank >= 2; break;
            case DynkinFamily::D: ok = ok && rank >= 2; break;
            case DynkinFamily::E: ok = ok && rank >= 6 && rank <= 8; break;
            case DynkinFamily::F: ok = ok && rank == 4; break;
            case DynkinFamily::G: ok = ok && rank == 2; break;
        }
        if (!ok) throw InvalidInput("rank out of range for component in '" + text + "'");
        comps.push_back(c);
        skipSpace();
        if (i >= text.size()) break;
        if (std::tolower(static_cast<unsigned char>(text[i])) != 'x')
            throw InvalidInput("expected 'x' between components in '" + text + "'");
        ++i;
    }
    return DynkinType(std::move(comps));
}

Orientation parseOrientation(const std::string& text) {
    Orientation o;
    if (text.empty() || text == "linear") {
        o.kind = Orientation::Kind::Linear;
        return o;
    }
    if (text == "bipartite") {
        o.kind = Orientation::Kind::Bipartite;
        return o;
    }
    o.kind = Orientation::Kind::Arrows;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto pos = item.find('>');
        if (pos == std::string::npos) throw InvalidInput("bad arrow '" + item + "' (use \"u>v\")");
        try {
            int u = std::stoi(item.substr(0, pos));
            int v = std::stoi(item.substr(pos + 1));
            if (u < 1 || v < 1) throw InvalidInput("arrow vertices are 1-based");
            o.arrows.push_back({u - 1, v - 1});
        } catch (const std::logic_error&) {
            throw InvalidInput("bad arrow '" + item + "'");
        }
    }
    if (o.arrows.empty()) throw InvalidInput("empty orientation '" + text + "'");
    return o;
}

std::vector<DiagramEdge> diagramEdges(const DynkinType& type) {
    std::vector<DiagramEdge> edges;
    int off = 0;
    for (const auto& c : type.components) {
        const int n = c.rank;
        auto path = [&](int upto) {
            for (int i = 0; i + 1 < upto; ++i) edges.push_back({off + i, off + i + 1, 1, 1});
        };
        switch (c.family) {
            case DynkinFamily::A: path(n); break;
            case DynkinFamily::B:
                path(n - 1);
                edges.push_back({off + n - 2, off + n - 1, 2, 1});
                break;
            case DynkinFamily::C:
                path(n - 1);
                edges.push_back({off + n - 2, off + n - 1, 1, 2});
                break;
            case DynkinFamily::D:
                path(n - 2);
                edges.push_back({off + n - 3, off + n - 2, 1, 1});
                edges.push_back({off + n - 3, off + n - 1, 1, 1});
                break;
            case DynkinFamily::E:
                path(n - 1);
                edges.push_back({off + 2, off + n - 1, 1, 1});
                break;
            case DynkinFamily::F:
                edges.push_back({off + 0, off + 1, 1, 1});
                edges.push_back({off + 1, off + 2, 1, 2});
                edges.push_back({off + 2, off + 3, 1, 1});
                break;
            case DynkinFamily::G: edges.push_back({off + 0, off + 1, 1, 3}); break;
        }
        off += n;
    }
    return edges;
}

namespace {

IntMat matrixFromOriented(int n, const std::vector<DiagramEdge>& edges, const std::vector<bool>& forward) {
    IntMat m(n, n);
    for (size_t e = 0; e < edges.size(); ++e) {
        const auto& ed = edges[e];
        if (forward[e]) {
            m(ed.u, ed.v) = ed.a;
            m(ed.v, ed.u) = -ed.b;
        } else {
            m(ed.u, ed.v) = -ed.a;
            m(ed.v, ed.u) = ed.b;
        }
    }
    return m;
}

}  // namespace

ExchangeMatrix dynkinMatrix(const DynkinType& type, const Orientation& orientation) {
    const int n = type.rank();
    auto edges = diagramEdges(type);
    std::vector<bool> forward(edges.size(), true);
    switch (orientation.kind) {
        case Orientation::Kind::Linear: break;
        case Orientation::Kind::Bipartite: {
            // 2-color each tree component; arrows run color0 -> color1.
            std::vector<int> color(n, -1);
            std::vector<std::vector<std::pair<int, int>>> adj(n);
            for (size_t e = 0; e < edges.size(); ++e) {
                adj[edges[e].u].push_back({edges[e].v, static_cast<int>(e)});
                adj[edges[e].v].push_back({edges[e].u, static_cast<int>(e)});
            }
            for (int r = 0; r < n; ++r) {
                if (color[r] != -1) continue;
                color[r] = 0;
                std::vector<int> stack{r};
                while (!stack.empty()) {
                    int u = stack.back();
                    stack.pop_back();
                    for (auto [v, e] : adj[u])
                        if (color[v] == -1) {
                            color[v] = 1 - color[u];
                            stack.push_back(v);
                        }
                }
            }
            for (size_t e = 0; e < edges.size(); ++e) forward[e] = color[edges[e].u] == 0;
            break;
        }
        case Orientation::Kind::Arrows: {
            std::vector<bool> seen(edges.size(), false);
            for (auto [u, v] : orientation.arrows) {
                bool found = false;
                for (size_t e = 0; e < edges.size(); ++e) {
                    if (edges[e].u == u && edges[e].v == v) {
                        forward[e] = true;
                        seen[e] = found = true;
                    } else if (edges[e].u == v && edges[e].v == u) {
                        forward[e] = false;
                        seen[e] = found = true;
                    }
                    if (found) break;
                }
                if (!found)
                    throw InvalidInput("arrow " + std::to_string(u + 1) + ">" + std::to_string(v + 1) +
                                       " is not an edge of " + type.toString());
            }
            for (size_t e = 0; e < edges.size(); ++e)
                if (!seen[e])
                    throw InvalidInput("orientation misses edge " + std::to_string(edges[e].u + 1) + "-" +
                                       std::to_string(edges[e].v + 1));
            break;
        }
    }
    return ExchangeMatrix(matrixFromOriented(n, edges, forward));
}

std::vector<ExchangeMatrix> allOrientations(const DynkinType& type) {
    const int n = type.rank();
    auto edges = diagramEdges(type);
    std::vector<ExchangeMatrix> out;
    for (unsigned mask = 0; mask < (1u << edges.size()); ++mask) {
        std::vector<bool> fwd(edges.size());
        for (size_t e = 0; e < edges.size(); ++e) fwd[e] = (mask >> e) & 1u;
        out.push_back(ExchangeMatrix(matrixFromOriented(n, edges, fwd)));
    }
    return out;
}

}  // namespace cck
