#include "cck/facevec.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include <nlohmann/json.hpp>

#include "cck/dynkin.hpp"
#include "cck/errors.hpp"

namespace cck {

ClusterComplexBundle buildComplexes(const ExchangeMatrix& b, const EnumerateOptions& opts) {
    ClusterComplexBundle out;
    out.graph = enumerateGraph(b, opts);
    out.initials = out.graph.initialVars;

    std::vector<Face> clusters;
    clusters.reserve(out.graph.nodes.size());
    for (size_t t = 0; t < out.graph.nodes.size(); ++t) {
        auto key = out.graph.key(static_cast<int>(t));
        clusters.push_back(Face(key.begin(), key.end()));
    }
    // Clusters are distinct sets of equal size: they are the facets.
    SimplicialComplex full;
    {
        std::vector<Face> sorted = clusters;
        std::sort(sorted.begin(), sorted.end());
        full = SimplicialComplex::fromFacets(std::move(sorted));
    }
    if (full.facets().size() != clusters.size()) throw EngineBug("cluster facets collapsed unexpectedly");
    out.full = std::move(full);

    std::vector<Face> positiveParts;
    positiveParts.reserve(clusters.size());
    for (const auto& cl : clusters) {
        Face p;
        for (Vertex v : cl)
            if (!out.graph.isInitialVar(static_cast<VarId>(v))) p.push_back(v);
        positiveParts.push_back(std::move(p));
    }
    out.positive = SimplicialComplex::fromFacets(std::move(positiveParts));
    if (!out.positive.isPure() || out.positive.dim() != b.rank() - 1)
        throw EngineBug("positive complex is not pure of dimension n-1");
    return out;
}

namespace {

long long exactQuotient(long long num, long long den) {
    if (den == 0 || num % den != 0) throw EngineBug("formula produced a non-integer");
    return num / den;
}

FaceVector componentPositive(const DynkinComponent& c) {
    const int n = c.rank;
    FaceVector f = FaceVector::ofComplex();
    switch (c.family) {
        case DynkinFamily::A:
            for (int k = 0; k < n; ++k)
                f.set(k, exactQuotient(binomial(n, k + 1) * binomial(n + k + 1, k + 1), k + 2));
            break;
        case DynkinFamily::B:
        case DynkinFamily::C:
            for (int k = 0; k < n; ++k) f.set(k, binomial(n, k + 1) * binomial(n + k, k + 1));
            break;
        case DynkinFamily::D:
            for (int k = 0; k < n; ++k) {
                long long v = binomial(n, k + 1) * binomial(n + k - 1, k + 1) +
                              binomial(n - 1, k) * binomial(n + k - 2, k) -
                              exactQuotient(binomial(n - 1, k) * binomial(n + k - 1, k + 1), n - 1);
                f.set(k, v);
            }
            break;
        case DynkinFamily::E: {
            static const std::vector<std::vector<long long>> e = {
                {1, 36, 300, 1035, 1720, 1368, 418},
                {1, 63, 777, 3927, 9933, 13299, 9009, 2431},
                {1, 120, 2135, 15120, 54327, 108360, 121555, 71760, 17342}};
            return FaceVector(e[n - 6]);
        }
        case DynkinFamily::F: return FaceVector({1, 24, 101, 144, 66});
        case DynkinFamily::G: return FaceVector({1, 6, 5});
    }
    return f;
}

FaceVector componentFull(const DynkinComponent& c) {
    const int n = c.rank;
    FaceVector f = FaceVector::ofComplex();
    switch (c.family) {
        case DynkinFamily::A:
            for (int k = 0; k < n; ++k)
                f.set(k, exactQuotient(binomial(n, k + 1) * binomial(n + k + 3, k + 1), k + 2));
            break;
        case DynkinFamily::B:
        case DynkinFamily::C:
            for (int k = 0; k < n; ++k) f.set(k, binomial(n, k + 1) * binomial(n + k + 1, k + 1));
            break;
        case DynkinFamily::D:
            for (int k = 0; k < n; ++k)
                f.set(k, binomial(n, k + 1) * (binomial(n + k + 1, k + 1) - binomial(n + k - 1, k)));
            break;
        default:
            throw InvalidInput("no closed form for the full complex of type " +
                               std::string(1, static_cast<char>(c.family)) + std::to_string(n) +
                               "; enumerate instead");
    }
    return f;
}

FaceVector convolveComponents(const DynkinType& type, FaceVector (*comp)(const DynkinComponent&)) {
    FaceVector f = FaceVector::ofComplex();
    for (const auto& c : type.components) f = FaceVector::joinConvolve(f, comp(c));
    return f;
}

}  // namespace

FaceVector formulaPositive(const DynkinType& type) { return convolveComponents(type, componentPositive); }

FaceVector formulaFull(const DynkinType& type) { return convolveComponents(type, componentFull); }

FaceVector positiveFaceVectorWithin(const std::vector<Face>& faces, const std::vector<VarId>& cluster) {
    std::vector<Vertex> avoid(cluster.begin(), cluster.end());
    std::sort(avoid.begin(), avoid.end());
    FaceVector f;
    for (const auto& face : faces) {
        bool hits = false;
        for (Vertex v : face)
            if (std::binary_search(avoid.begin(), avoid.end(), v)) {
                hits = true;
                break;
            }
        if (!hits) f.set(static_cast<long long>(face.size()) - 1, f.at(static_cast<long long>(face.size()) - 1) + 1);
    }
    return f;
}

namespace {

// Path of actual matrices from b to the first representative whose Cartan
// companion is of finite tree type (BFS up to simultaneous permutation).
struct MutationPath {
    std::vector<IntMat> mats;        // mats[0] = b, mats.back() = tree type
    std::vector<int> directions;     // directions[i] mutates mats[i] -> mats[i+1]
    DynkinType type;                 // of the tree representative
};

MutationPath pathToTreeType(const IntMat& b, long long cap) {
    const int n = b.rows();
    struct Item {
        IntMat mat;
        int parent;
        int dir;
    };
    std::vector<Item> items{{b, -1, -1}};
    std::unordered_set<IntMat, IntMatHash> visited{canonicalPermForm(b)};
    size_t head = 0;
    while (head < items.size()) {
        const IntMat cur = items[head].mat;
        if (auto type = classifyDynkin(cartanCompanion(cur))) {
            MutationPath path;
            path.type = *type;
            int at = static_cast<int>(head);
            while (at != -1) {
                path.mats.push_back(items[at].mat);
                if (items[at].dir >= 0) path.directions.push_back(items[at].dir);
                at = items[at].parent;
            }
            std::reverse(path.mats.begin(), path.mats.end());
            std::reverse(path.directions.begin(), path.directions.end());
            return path;
        }
        for (int k = 0; k < n; ++k) {
            IntMat next = matrixMutate(cur, k);
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j)
                    if (std::abs(next(i, j) * next(j, i)) >= 4)
                        throw NotFiniteType("matrix is not of finite type (2-finiteness guard)");
            if (visited.insert(canonicalPermForm(next)).second) {
                if (static_cast<long long>(items.size()) >= cap)
                    throw CapExhausted("tree-type search exhausted its cap");
                items.push_back({std::move(next), static_cast<int>(head), k});
            }
        }
        ++head;
    }
    throw NotFiniteType("mutation class has no tree-type representative");
}

class RecursiveSolver {
public:
    explicit RecursiveSolver(long long cap) : cap_(cap) {}

    FaceVector solve(const IntMat& b) {
        if (b.rows() == 0) return FaceVector::ofComplex();
        IntMat canon = canonicalPermForm(b);
        auto it = cache_.find(canon);
        if (it != cache_.end()) return it->second;

        MutationPath path = pathToTreeType(b, cap_);
        // Base value at the tree end, then walk the path backwards applying
        // f+(M_t) = f+(M_{t+1}) + [f+(sub of M_{t+1})]_1 - [f+(sub of M_t)]_1.
        FaceVector f = formulaPositive(path.type);
        for (int t = static_cast<int>(path.directions.size()) - 1; t >= 0; --t) {
            int k = path.directions[t];
            FaceVector subNext = solve(path.mats[t + 1].withoutRowCol(k));
            FaceVector subCur = solve(path.mats[t].withoutRowCol(k));
            f = f + subNext.shifted(1) - subCur.shifted(1);
        }
        cache_.emplace(std::move(canon), f);
        return f;
    }

private:
    long long cap_;
    std::unordered_map<IntMat, FaceVector, IntMatHash> cache_;
};

}  // namespace

FaceVector positiveFaceVector(const IntMat& b, FaceVectorStrategy strategy, long long cap) {
    switch (strategy) {
        case FaceVectorStrategy::Enumerate: {
            auto bundle = buildComplexes(ExchangeMatrix(b), {.cap = cap});
            return bundle.positive.faceVector();
        }
        case FaceVectorStrategy::Recurse: {
            RecursiveSolver solver(cap);
            return solver.solve(b);
        }
        case FaceVectorStrategy::Auto: {
            RecursiveSolver solver(cap);
            FaceVector f = solver.solve(b);
            if (b.rows() <= 6) {
                FaceVector g = positiveFaceVector(b, FaceVectorStrategy::Enumerate, cap);
                if (!(f == g))
                    throw CrossCheckMismatch("positive face vector: recursion " + f.toString() +
                                             " vs enumeration " + g.toString());
            }
            return f;
        }
    }
    throw InvalidInput("unknown strategy");
}

MutationDifference mutationDifference(const IntMat& b, int k, long long cap) {
    MutationDifference out;
    IntMat bp = matrixMutate(b, k);
    out.lhs = positiveFaceVector(b, FaceVectorStrategy::Enumerate, cap) -
              positiveFaceVector(bp, FaceVectorStrategy::Enumerate, cap);
    RecursiveSolver solver(cap);
    out.rhs = solver.solve(bp.withoutRowCol(k)).shifted(1) - solver.solve(b.withoutRowCol(k)).shifted(1);
    out.equal = out.lhs == out.rhs;
    if (!out.equal)
        throw EngineBug("mutation-difference identity failed: " + out.lhs.toString() + " vs " +
                        out.rhs.toString());
    return out;
}

std::string Report::toText() const {
    std::ostringstream os;
    for (const auto& l : lines) os << l << "\n";
    os << (ok ? "PASS" : "FAIL") << " (" << checks << " checks)\n";
    return os.str();
}

std::string Report::toJsonText() const {
    nlohmann::json j{{"ok", ok}, {"checks", checks}, {"lines", lines}};
    return j.dump();
}

Report checkSinkSourceInvariance(const IntMat& b, long long cap) {
    Report rpt;
    auto bundle = buildComplexes(ExchangeMatrix(b), {.cap = cap});
    auto faces = bundle.full.allFaces();
    const int n = b.rows();
    for (size_t t = 0; t < bundle.graph.nodes.size(); ++t) {
        const auto& node = bundle.graph.nodes[t];
        for (int k = 0; k < n; ++k) {
            auto ss = isSinkOrSource(node.b, k);
            if (ss.kind == SinkSourceResult::Kind::Neither) continue;
            std::vector<VarId> mutated = node.vars;
            // The neighbour cluster differs only in position k; find it via
            // the incident edge exchanging vars[k].
            for (int e : bundle.graph.incident[static_cast<int>(t)]) {
                const auto& edge = bundle.graph.edges[e];
                VarId out = edge.a == static_cast<int>(t) ? edge.xa : edge.xb;
                VarId in = edge.a == static_cast<int>(t) ? edge.xb : edge.xa;
                if (out == node.vars[k]) {
                    mutated[k] = in;
                    break;
                }
            }
            FaceVector f0 = positiveFaceVectorWithin(faces, node.vars);
            FaceVector f1 = positiveFaceVectorWithin(faces, mutated);
            ++rpt.checks;
            if (!(f0 == f1)) {
                rpt.ok = false;
                rpt.lines.push_back("violation at node " + std::to_string(t) + " direction " +
                                    std::to_string(k + 1) + ": " + f0.toString() + " vs " + f1.toString());
            }
            auto h0 = hVector(f0, n), h1 = hVector(f1, n);
            if (h0 != h1) {
                rpt.ok = false;
                rpt.lines.push_back("h-vector violation at node " + std::to_string(t));
            }
        }
    }
    rpt.lines.push_back("sink/source invariance: " + std::to_string(rpt.checks) + " directed checks");
    return rpt;
}

Report checkOrientationIndependence(const DynkinType& type, long long cap) {
    Report rpt;
    FaceVector expected = formulaPositive(type);
    for (const auto& b : allOrientations(type)) {
        FaceVector f = positiveFaceVector(b.mat(), FaceVectorStrategy::Enumerate, cap);
        ++rpt.checks;
        if (!(f == expected)) {
            rpt.ok = false;
            rpt.lines.push_back("orientation with matrix " + b.mat().toString() + " gives " + f.toString() +
                                " instead of " + expected.toString());
        }
    }
    rpt.lines.push_back("orientation independence of " + type.toString() + ": " +
                        std::to_string(rpt.checks) + " orientations, f+ = " + expected.toString());
    return rpt;
}

}  // namespace cck
