#include "cck/arcs.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "cck/dynkin.hpp"
#include "cck/errors.hpp"

namespace cck {

Diagonal::Diagonal(int m_, int a, int b) : m(m_) {
    i = std::min(a, b);
    j = std::max(a, b);
    if (i < 1 || j > m || i == j) throw InvalidInput("bad diagonal endpoints");
    if (j - i < 2 || (i == 1 && j == m)) throw InvalidInput("diagonal endpoints are adjacent");
}

Diagonal Diagonal::rotated() const {
    int h = m / 2;
    int a = (i - 1 + h) % m + 1;
    int b = (j - 1 + h) % m + 1;
    return Diagonal(m, a, b);
}

bool crosses(const Diagonal& a, const Diagonal& b) {
    return (a.i < b.i && b.i < a.j && a.j < b.j) || (b.i < a.i && a.i < b.j && b.j < a.j);
}

std::string ArcObject::toString() const {
    std::string s = std::to_string(rep.i) + "-" + std::to_string(rep.j);
    if (diameterLabel) s += "@" + std::to_string(diameterLabel);
    return s;
}

namespace {

ArcObject makeObject(ArcModel model, Diagonal d, int label = 0) {
    ArcObject o;
    if (model == ArcModel::A) {
        o.rep = d;
        return o;
    }
    Diagonal r = d.rotated();
    o.rep = std::min(d, r);
    if (model == ArcModel::D && d.isDiameter()) {
        if (label != 1 && label != 2) throw InvalidInput("type D diameter needs label 1 or 2");
        o.diameterLabel = label;
    } else if (label != 0) {
        throw InvalidInput("diameter label on a non-diameter");
    }
    return o;
}

bool orbitsCross(const ArcObject& a, const ArcObject& b) {
    Diagonal ar = a.rep.rotated(), br = b.rep.rotated();
    return crosses(a.rep, b.rep) || crosses(a.rep, br) || crosses(ar, b.rep) || crosses(ar, br);
}

}  // namespace

bool compatible(ArcModel model, const ArcObject& a, const ArcObject& b) {
    if (a.rep.m != b.rep.m) throw InvalidInput("arc objects from different polygons");
    switch (model) {
        case ArcModel::A: return !crosses(a.rep, b.rep);
        case ArcModel::BC: return !orbitsCross(a, b);
        case ArcModel::D: {
            bool da = a.rep.isDiameter(), db = b.rep.isDiameter();
            if (da && db) {
                if (a.rep == b.rep) return a.diameterLabel != b.diameterLabel;
                return a.diameterLabel == b.diameterLabel;
            }
            return !orbitsCross(a, b);
        }
    }
    return false;
}

std::vector<ArcObject> allArcObjects(ArcModel model, int n) {
    int m = 0;
    switch (model) {
        case ArcModel::A: m = n + 3; break;
        case ArcModel::BC: m = 2 * n + 2; break;
        case ArcModel::D: m = 2 * n; break;
    }
    std::set<ArcObject> out;
    for (int i = 1; i <= m; ++i)
        for (int j = i + 2; j <= m; ++j) {
            if (i == 1 && j == m) continue;
            Diagonal d(m, i, j);
            if (model == ArcModel::D && d.isDiameter()) {
                out.insert(makeObject(model, d, 1));
                out.insert(makeObject(model, d, 2));
            } else {
                out.insert(makeObject(model, d));
            }
        }
    return {out.begin(), out.end()};
}

int Triangulation::polygonSize() const {
    switch (model) {
        case ArcModel::A: return n + 3;
        case ArcModel::BC: return 2 * n + 2;
        case ArcModel::D: return 2 * n;
    }
    return 0;
}

std::string Triangulation::toText() const {
    std::ostringstream os;
    os << "m=" << polygonSize() << "; type=";
    switch (model) {
        case ArcModel::A: os << "A"; break;
        case ArcModel::BC: os << (cVariant ? "BC(C)" : "BC"); break;
        case ArcModel::D: os << "D"; break;
    }
    os << "; diag";
    for (const auto& a : arcs) os << " " << a.toString();
    return os.str();
}

Triangulation initialTriangulation(ArcModel model, int n, bool cVariant) {
    Triangulation t;
    t.model = model;
    t.n = n;
    t.cVariant = cVariant;
    const int m = t.polygonSize();
    switch (model) {
        case ArcModel::A:
            if (n < 1) throw InvalidInput("type A needs n >= 1");
            for (int i = 1; i <= n; ++i) t.arcs.push_back(makeObject(model, Diagonal(m, 1, i + 2)));
            break;
        case ArcModel::BC:
            if (n < 2) throw InvalidInput("type BC needs n >= 2");
            for (int i = 1; i <= n; ++i) t.arcs.push_back(makeObject(model, Diagonal(m, 2, 3 + i)));
            break;
        case ArcModel::D:
            if (n < 3) throw InvalidInput("type D needs n >= 3");
            for (int i = 1; i <= n - 2; ++i) t.arcs.push_back(makeObject(model, Diagonal(m, 2, 3 + i)));
            t.arcs.push_back(makeObject(model, Diagonal(m, 2, n + 2), 1));
            t.arcs.push_back(makeObject(model, Diagonal(m, 2, n + 2), 2));
            break;
    }
    validateTriangulation(t);
    return t;
}

void validateTriangulation(const Triangulation& t) {
    if (static_cast<int>(t.arcs.size()) != t.n)
        throw InvalidInput("labeled maximal compatible set must have n elements");
    for (size_t i = 0; i < t.arcs.size(); ++i)
        for (size_t j = i + 1; j < t.arcs.size(); ++j) {
            if (t.arcs[i] == t.arcs[j]) throw InvalidInput("repeated arc in triangulation");
            if (!compatible(t.model, t.arcs[i], t.arcs[j]))
                throw InvalidInput("incompatible arcs " + t.arcs[i].toString() + ", " + t.arcs[j].toString());
        }
    for (const auto& cand : allArcObjects(t.model, t.n)) {
        if (std::find(t.arcs.begin(), t.arcs.end(), cand) != t.arcs.end()) continue;
        bool fits = true;
        for (const auto& a : t.arcs) fits = fits && compatible(t.model, cand, a);
        if (fits) throw InvalidInput("compatible set is not maximal: " + cand.toString() + " extends it");
    }
}

Triangulation flip(const Triangulation& t, int k) {
    if (k < 0 || k >= t.n) throw InvalidInput("flip direction out of range");
    std::vector<ArcObject> rest;
    for (int i = 0; i < t.n; ++i)
        if (i != k) rest.push_back(t.arcs[i]);
    std::optional<ArcObject> replacement;
    for (const auto& cand : allArcObjects(t.model, t.n)) {
        if (cand == t.arcs[k]) continue;
        if (std::find(rest.begin(), rest.end(), cand) != rest.end()) continue;
        bool fits = true;
        for (const auto& a : rest) fits = fits && compatible(t.model, cand, a);
        if (!fits) continue;
        if (replacement) throw EngineBug("flip completion is not unique");
        replacement = cand;
    }
    if (!replacement) throw EngineBug("flip has no completion");
    Triangulation out = t;
    out.arcs[k] = *replacement;
    validateTriangulation(out);
    return out;
}

namespace {

using Side = std::pair<int, int>;

Side mkSide(int a, int b) { return {std::min(a, b), std::max(a, b)}; }

struct SideTable {
    int m = 0;
    // normalized vertex pair -> label positions (empty for boundary)
    std::map<Side, std::vector<int>> labeled;

    // Boundary edges of the original m-gon stay boundary edges in every
    // sub-region.
    bool isBoundary(const Side& s) const {
        return s.second - s.first == 1 || (s.first == 1 && s.second == m);
    }
    const std::vector<int>* labelsOf(const Side& s) const {
        auto it = labeled.find(s);
        return it == labeled.end() ? nullptr : &it->second;
    }
    bool present(const Side& s) const { return isBoundary(s) || labelsOf(s) != nullptr; }
};

// Adds the contributions of all triangles of the triangulated region
// spanned by `verts` (listed in clockwise order). w(q) weights the entry
// b[p][q].
void addTrianglesOfRegion(IntMat& b, const std::vector<int>& verts, const SideTable& sides,
                          const std::function<long long(int)>& weight) {
    const int len = static_cast<int>(verts.size());
    auto contribute = [&](const Side& p, const Side& q) {
        const auto* lp = sides.labelsOf(p);
        const auto* lq = sides.labelsOf(q);
        if (!lp || !lq) return;
        for (int pp : *lp)
            for (int qq : *lq) {
                b(pp, qq) += weight(qq);
                b(qq, pp) -= weight(pp);
            }
    };
    for (int ia = 0; ia < len; ++ia)
        for (int ib = ia + 1; ib < len; ++ib)
            for (int ic = ib + 1; ic < len; ++ic) {
                Side s0 = mkSide(verts[ia], verts[ib]);
                Side s1 = mkSide(verts[ib], verts[ic]);
                Side s2 = mkSide(verts[ic], verts[ia]);
                if (!sides.present(s0) || !sides.present(s1) || !sides.present(s2)) continue;
                contribute(s0, s1);
                contribute(s1, s2);
                contribute(s2, s0);
            }
}

IntMat matrixModelA(const Triangulation& t) {
    const int m = t.polygonSize();
    SideTable sides;
    sides.m = m;
    for (int p = 0; p < t.n; ++p) sides.labeled[mkSide(t.arcs[p].rep.i, t.arcs[p].rep.j)] = {p};
    std::vector<int> verts(m);
    for (int v = 0; v < m; ++v) verts[v] = v + 1;
    IntMat b(t.n, t.n);
    addTrianglesOfRegion(b, verts, sides, [](int) { return 1LL; });
    return b;
}

// Half-polygon construction shared by BC and the type D twin case. `range`
// runs from one diameter endpoint to the other, clockwise.
IntMat matrixFromHalf(const Triangulation& t, const std::vector<int>& range,
                      const std::map<Side, std::vector<int>>& labels,
                      const std::function<long long(int)>& weight) {
    SideTable sides;
    sides.m = t.polygonSize();
    std::set<int> inRange(range.begin(), range.end());
    for (const auto& [side, labs] : labels)
        if (inRange.count(side.first) && inRange.count(side.second)) sides.labeled[side] = labs;
    IntMat b(t.n, t.n);
    addTrianglesOfRegion(b, range, sides, weight);
    return b;
}

std::vector<int> halfRange(int m, int from, int to) {
    std::vector<int> out{from};
    int v = from;
    while (v != to) {
        v = v % m + 1;
        out.push_back(v);
    }
    return out;
}

IntMat matrixModelBC(const Triangulation& t) {
    const int m = t.polygonSize();
    int diaPos = -1;
    std::map<Side, std::vector<int>> labels;
    for (int p = 0; p < t.n; ++p) {
        const Diagonal& d = t.arcs[p].rep;
        labels[mkSide(d.i, d.j)].push_back(p);
        if (d.isDiameter()) {
            if (diaPos != -1) throw EngineBug("BC triangulation with two diameters");
            diaPos = p;
        } else {
            Diagonal r = d.rotated();
            labels[mkSide(r.i, r.j)].push_back(p);
        }
    }
    if (diaPos == -1) throw EngineBug("BC triangulation without a diameter");
    const Diagonal& dia = t.arcs[diaPos].rep;
    auto weight = [diaPos](int q) { return q == diaPos ? 2LL : 1LL; };
    IntMat b = matrixFromHalf(t, halfRange(m, dia.i, dia.j), labels, weight);
    IntMat other = matrixFromHalf(t, halfRange(m, dia.j, dia.i), labels, weight);
    if (b != other) throw EngineBug("BC matrix differs between the two half-polygons");
    return t.cVariant ? b.transposed().negated() : b;
}

IntMat matrixModelD(const Triangulation& t) {
    const int m = t.polygonSize();
    std::vector<int> diameterPositions;
    for (int p = 0; p < t.n; ++p)
        if (t.arcs[p].rep.isDiameter()) diameterPositions.push_back(p);
    if (diameterPositions.size() < 2) throw EngineBug("D triangulation with fewer than two labeled diameters");

    bool twin = diameterPositions.size() == 2 &&
                t.arcs[diameterPositions[0]].rep == t.arcs[diameterPositions[1]].rep;
    auto unit = [](int) { return 1LL; };

    if (twin) {
        std::map<Side, std::vector<int>> labels;
        for (int p = 0; p < t.n; ++p) {
            const Diagonal& d = t.arcs[p].rep;
            labels[mkSide(d.i, d.j)].push_back(p);
            if (!d.isDiameter()) {
                Diagonal r = d.rotated();
                labels[mkSide(r.i, r.j)].push_back(p);
            }
        }
        const Diagonal& dia = t.arcs[diameterPositions[0]].rep;
        IntMat b = matrixFromHalf(t, halfRange(m, dia.i, dia.j), labels, unit);
        IntMat other = matrixFromHalf(t, halfRange(m, dia.j, dia.i), labels, unit);
        if (b != other) throw EngineBug("D matrix differs between the two half-polygons");
        return b;
    }

    // Fan of same-label diameters: work in the once-punctured polygon. The
    // diameters become radii; each sector between consecutive radii is a
    // plane region topped off by the unique spanning arc (or boundary
    // edge), which also closes the triangle at the puncture.
    std::vector<int> radius;  // endpoint values, sorted
    std::map<int, int> radLabel;
    for (int p : diameterPositions) {
        const Diagonal& d = t.arcs[p].rep;
        radius.push_back(d.i);
        radius.push_back(d.j);
        radLabel[d.i] = p;
        radLabel[d.j] = p;
    }
    std::sort(radius.begin(), radius.end());
    const int k = static_cast<int>(diameterPositions.size());
    for (int r = 0; r < k; ++r)
        if (radius[r + k] != radius[r] + m / 2) throw EngineBug("fan radii are not rotation-paired");

    IntMat b(t.n, t.n);
    int chordsPlaced = 0;
    for (int r = 0; r < k; ++r) {
        const int u = radius[r], v = radius[r + 1];
        std::map<Side, std::vector<int>> labels;
        for (int p = 0; p < t.n; ++p) {
            const auto& obj = t.arcs[p];
            if (obj.rep.isDiameter()) continue;
            for (const Diagonal& d : {obj.rep, obj.rep.rotated()})
                if (u <= d.i && d.j <= v) {
                    labels[mkSide(d.i, d.j)].push_back(p);
                    ++chordsPlaced;
                }
        }
        SideTable sides;
        sides.m = m;
        sides.labeled = labels;
        std::vector<int> verts;
        for (int x = u; x <= v; ++x) verts.push_back(x);
        addTrianglesOfRegion(b, verts, sides, unit);

        // Puncture triangle: clockwise boundary (ceiling, rho_v, rho_u).
        Side ceiling = mkSide(u, v);
        const std::vector<int>* ceilLabels = nullptr;
        if (v - u >= 2) {
            auto it = labels.find(ceiling);
            if (it == labels.end()) throw EngineBug("fan sector lacks its spanning arc");
            ceilLabels = &it->second;
        }
        int rv = radLabel[v], ru = radLabel[u];
        if (ceilLabels) {
            for (int c : *ceilLabels) {
                b(c, rv) += 1;
                b(rv, c) -= 1;
                b(ru, c) += 1;
                b(c, ru) -= 1;
            }
        }
        b(rv, ru) += 1;
        b(ru, rv) -= 1;
    }
    if (chordsPlaced != t.n - k) throw EngineBug("fan sectors missed an arc");
    return b;
}

}  // namespace

IntMat matrixOfTriangulation(const Triangulation& t) {
    validateTriangulation(t);
    switch (t.model) {
        case ArcModel::A: return matrixModelA(t);
        case ArcModel::BC: return matrixModelBC(t);
        case ArcModel::D: return matrixModelD(t);
    }
    throw InvalidInput("unknown model");
}

ArcComplexResult arcComplex(ArcModel model, int n) {
    ArcComplexResult out;
    out.objects = allArcObjects(model, n);
    const int N = static_cast<int>(out.objects.size());
    std::vector<std::vector<bool>> compat(N, std::vector<bool>(N, false));
    for (int i = 0; i < N; ++i)
        for (int j = i + 1; j < N; ++j)
            compat[i][j] = compat[j][i] = compatible(model, out.objects[i], out.objects[j]);

    std::vector<Face> facets;
    std::vector<int> chosen;
    std::vector<char> cand(N, 1);
    // Maximal compatible sets, built in increasing vertex order; a branch is
    // recorded exactly when nothing at all is compatible with it.
    auto recurse = [&](auto&& self, int minIdx) -> void {
        bool extendable = false;
        for (int i = 0; i < N && !extendable; ++i) extendable = cand[i] && true;
        if (!extendable) {
            facets.push_back(Face(chosen.begin(), chosen.end()));
            return;
        }
        for (int i = minIdx; i < N; ++i) {
            if (!cand[i]) continue;
            std::vector<char> saved = cand;
            for (int j = 0; j < N; ++j) cand[j] = cand[j] && compat[i][j];
            chosen.push_back(i);
            self(self, i + 1);
            chosen.pop_back();
            cand = saved;
        }
    };
    recurse(recurse, 0);
    out.complex = SimplicialComplex::fromFacets(std::move(facets));
    return out;
}

Report verifyModelIso(ArcModel model, int n, long long cap, bool cVariant) {
    Report rpt;
    Triangulation t0 = initialTriangulation(model, n, cVariant);
    IntMat b0 = matrixOfTriangulation(t0);
    auto graph = enumerateGraph(ExchangeMatrix(b0), {.cap = cap});

    std::map<ArcObject, VarId> objToVar;
    std::map<VarId, ArcObject> varToObj;
    auto bind = [&](const ArcObject& o, VarId v) {
        auto it = objToVar.find(o);
        if (it != objToVar.end()) {
            if (it->second != v) throw CrossCheckMismatch("arc " + o.toString() + " bound to two variables");
            return;
        }
        if (varToObj.count(v)) throw CrossCheckMismatch("variable bound to two arcs");
        objToVar[o] = v;
        varToObj[v] = o;
    };

    struct State {
        Triangulation t;
        std::vector<VarId> vars;
        int node;
    };
    auto keyOf = [](const Triangulation& t) {
        std::vector<ArcObject> k = t.arcs;
        std::sort(k.begin(), k.end());
        return k;
    };
    for (int i = 0; i < n; ++i) bind(t0.arcs[i], graph.nodes[0].vars[i]);
    std::vector<State> queue{{t0, graph.nodes[0].vars, 0}};
    std::set<std::vector<ArcObject>> visited{keyOf(t0)};
    size_t head = 0;
    long long commutationChecks = 0;
    while (head < queue.size()) {
        State st = queue[head++];
        IntMat bt = matrixOfTriangulation(st.t);
        for (int k = 0; k < n; ++k) {
            Triangulation t2 = flip(st.t, k);
            ++commutationChecks;
            if (matrixOfTriangulation(t2) != matrixMutate(bt, k)) {
                rpt.ok = false;
                rpt.lines.push_back("flip/mutation commutation failed at " + st.t.toText() + " direction " +
                                    std::to_string(k + 1));
                continue;
            }
            // Mutation side: the edge at this node exchanging vars[k].
            VarId newVar = -1;
            for (int e : graph.incident[st.node]) {
                const auto& edge = graph.edges[e];
                VarId out = edge.a == st.node ? edge.xa : edge.xb;
                VarId in = edge.a == st.node ? edge.xb : edge.xa;
                if (out == st.vars[k]) {
                    newVar = in;
                    break;
                }
            }
            if (newVar < 0) throw EngineBug("no edge exchanges the labeled variable");
            bind(t2.arcs[k], newVar);
            auto key = keyOf(t2);
            if (visited.insert(key).second) {
                std::vector<VarId> vars = st.vars;
                vars[k] = newVar;
                std::vector<VarId> nodeKey = vars;
                std::sort(nodeKey.begin(), nodeKey.end());
                int node = -1;
                for (int e : graph.incident[st.node]) {
                    const auto& edge = graph.edges[e];
                    int other = edge.a == st.node ? edge.b : edge.a;
                    if (graph.key(other) == nodeKey) {
                        node = other;
                        break;
                    }
                }
                if (node < 0) throw EngineBug("mutated cluster is not a neighbour in the graph");
                queue.push_back({std::move(t2), std::move(vars), node});
            }
        }
    }
    rpt.checks = commutationChecks;

    auto arcs = arcComplex(model, n);
    if (objToVar.size() != arcs.objects.size() || objToVar.size() != graph.registry->size()) {
        rpt.ok = false;
        rpt.lines.push_back("vertex counts disagree: " + std::to_string(arcs.objects.size()) + " arcs vs " +
                            std::to_string(graph.registry->size()) + " cluster variables (" +
                            std::to_string(objToVar.size()) + " bound)");
    }
    if (visited.size() != graph.nodes.size()) {
        rpt.ok = false;
        rpt.lines.push_back("facet counts disagree: " + std::to_string(visited.size()) + " triangulations vs " +
                            std::to_string(graph.nodes.size()) + " clusters");
    }
    if (rpt.ok) {
        // The bijection must carry maximal compatible sets onto clusters.
        std::set<std::vector<VarId>> clusterKeys;
        for (size_t v = 0; v < graph.nodes.size(); ++v) clusterKeys.insert(graph.key(static_cast<int>(v)));
        std::set<std::vector<VarId>> mappedKeys;
        for (const auto& facet : arcs.complex.facets()) {
            std::vector<VarId> mapped;
            for (Vertex idx : facet) mapped.push_back(objToVar.at(arcs.objects[idx]));
            std::sort(mapped.begin(), mapped.end());
            mappedKeys.insert(std::move(mapped));
        }
        if (mappedKeys != clusterKeys) {
            rpt.ok = false;
            rpt.lines.push_back("mapped arc facets do not match the cluster set");
        }
    }
    rpt.lines.push_back("model iso: " + std::to_string(arcs.objects.size()) + " vertices, " +
                        std::to_string(arcs.complex.facets().size()) + " facets, " +
                        std::to_string(commutationChecks) + " flip/mutation checks");
    return rpt;
}

namespace {

bool permEquivAny(const IntMat& b, const std::vector<IntMat>& refs) {
    for (const auto& r : refs)
        if (permutationEquivalent(b, r)) return true;
    return false;
}

std::vector<VarId> nonLinkedTo(const SimplicialComplex& full, const std::vector<VarId>& base) {
    std::vector<VarId> out;
    for (Vertex v : full.vertices()) {
        bool linked = false;
        for (VarId u : base) {
            if (static_cast<VarId>(v) == u) {
                linked = true;
                break;
            }
            Face f{std::min<Vertex>(v, u), std::max<Vertex>(v, u)};
            if (full.containsFace(f)) {
                linked = true;
                break;
            }
        }
        if (!linked) out.push_back(static_cast<VarId>(v));
    }
    return out;
}

SimplicialComplex referenceComplex(const DynkinType& type, long long cap) {
    if (type.rank() == 0) return SimplicialComplex();
    auto bundle = buildComplexes(dynkinMatrix(type), {.cap = cap});
    return bundle.full;
}

void requireEq(Report& rpt, bool cond, const std::string& what) {
    ++rpt.checks;
    if (!cond) {
        rpt.ok = false;
        rpt.lines.push_back("FAILED: " + what);
    }
}

}  // namespace

Report verifyStructureA(const ExchangeMatrix& b, long long cap) {
    Report rpt;
    const int n = b.rank();
    if (!permEquivAny(b.mat(), {dynkinMatrix(DynkinType({{DynkinFamily::A, n}})).mat()})) {
        rpt.ok = false;
        rpt.lines.push_back("hypothesis violation: not a linearly oriented A" + std::to_string(n) + " quiver");
        return rpt;
    }
    auto bundle = buildComplexes(b, {.cap = cap});
    auto nonLinked = nonLinkedTo(bundle.full, bundle.initials);
    requireEq(rpt, nonLinked.size() == 1, "unique vertex non-linked to the initial cluster");
    if (nonLinked.size() != 1) return rpt;
    Vertex x = nonLinked[0];

    requireEq(rpt, bundle.positive == bundle.full.star(x), "positive complex equals st(x)");
    SimplicialComplex ref =
        n >= 2 ? referenceComplex(DynkinType({{DynkinFamily::A, n - 1}}), cap) : SimplicialComplex();
    SimplicialComplex lk = bundle.full.link(x);
    requireEq(rpt, n == 1 ? lk.dim() == -1 : lk.isIsomorphic(ref),
              "lk(x) isomorphic to the full A(n-1) complex");
    FaceVector fref = ref.empty() ? FaceVector::ofComplex() : ref.faceVector();
    requireEq(rpt, bundle.positive.faceVector() == fref + fref.shifted(1),
              "f+ = f(A(n-1)) + [f(A(n-1))]_1");
    rpt.lines.push_back("structure A" + std::to_string(n) + ": cone over the full A" + std::to_string(n - 1) +
                        " complex, f+ = " + bundle.positive.faceVector().toString());
    return rpt;
}

Report verifyStructureBC(const ExchangeMatrix& b, long long cap) {
    Report rpt;
    const int n = b.rank();
    std::vector<IntMat> refs;
    for (auto fam : {DynkinFamily::B, DynkinFamily::C}) {
        IntMat r = dynkinMatrix(DynkinType({{fam, n}})).mat();
        refs.push_back(r);
        refs.push_back(r.negated());
    }
    if (!permEquivAny(b.mat(), refs)) {
        rpt.ok = false;
        rpt.lines.push_back("hypothesis violation: not a linearly oriented B" + std::to_string(n) + "/C" +
                            std::to_string(n) + " quiver");
        return rpt;
    }
    auto bundle = buildComplexes(b, {.cap = cap});
    auto iPrime = nonLinkedTo(bundle.full, bundle.initials);
    requireEq(rpt, static_cast<int>(iPrime.size()) == n, "exactly n vertices non-linked to I");
    if (static_cast<int>(iPrime.size()) != n) return rpt;

    std::vector<Vertex> I(bundle.initials.begin(), bundle.initials.end());
    std::vector<Vertex> Ip(iPrime.begin(), iPrime.end());
    auto stI = bundle.full.starSet(I);
    auto stIp = bundle.full.starSet(Ip);
    requireEq(rpt, bundle.positive == stIp, "positive complex equals st(I')");
    requireEq(rpt, bundle.positive.isIsomorphic(stI), "positive complex isomorphic to st(I)");
    requireEq(rpt, bundle.full == SimplicialComplex::unionOf(stI, stIp), "whole complex = st(I) u st(I')");
    auto lkI = bundle.full.linkSet(I);
    auto lkIp = bundle.full.linkSet(Ip);
    requireEq(rpt, lkI == lkIp, "lk(I) = lk(I')");
    requireEq(rpt, lkI == SimplicialComplex::intersectionOf(stI, stIp), "lk(I) = st(I) n st(I')");
    SimplicialComplex ref = referenceComplex(DynkinType({{DynkinFamily::B, n - 1}}), cap);
    requireEq(rpt, lkI.isIsomorphic(ref), "lk(I) isomorphic to the full B(n-1) complex");

    FaceVector fn = formulaFull(DynkinType({{DynkinFamily::B, n}}));
    FaceVector fn1 = n >= 2 ? formulaFull(DynkinType({{DynkinFamily::B, n - 1}})) : FaceVector::ofComplex();
    FaceVector half;
    FaceVector sum = fn + fn1;
    for (int k = -1; k <= sum.maxDim(); ++k) {
        if (sum.at(k) % 2 != 0) throw EngineBug("B face identity: odd sum");
        half.set(k, sum.at(k) / 2);
    }
    requireEq(rpt, bundle.positive.faceVector() == half, "f+ = (f(B_n) + f(B_{n-1})) / 2");
    rpt.lines.push_back("structure B/C" + std::to_string(n) +
                        ": f+ = " + bundle.positive.faceVector().toString());
    return rpt;
}

Report verifyStructureD(const ExchangeMatrix& b, long long cap) {
    Report rpt;
    const int n = b.rank();
    IntMat linear = dynkinMatrix(DynkinType({{DynkinFamily::D, n}})).mat();
    if (!permEquivAny(b.mat(), {linear, linear.negated()})) {
        rpt.ok = false;
        rpt.lines.push_back("hypothesis violation: not a linearly oriented D" + std::to_string(n) + " quiver");
        return rpt;
    }
    // Fork directions: the two leaves hanging off the branch vertex, both
    // oriented the same way.
    const IntMat& m = b.mat();
    std::vector<int> deg(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (j != i && m(i, j) != 0) ++deg[i];
    int center = -1;
    for (int i = 0; i < n; ++i)
        if (deg[i] == (n == 3 ? 2 : 3)) center = i;
    if (center < 0) throw EngineBug("D hypothesis matched but no branch vertex found");
    std::vector<int> outLeaves, inLeaves;
    for (int j = 0; j < n; ++j) {
        if (j == center || deg[j] != 1 || m(center, j) == 0) continue;
        (m(center, j) > 0 ? outLeaves : inLeaves).push_back(j);
    }
    std::vector<int> fork = outLeaves.size() == 2 ? outLeaves : inLeaves;
    if (fork.size() != 2) {
        rpt.ok = false;
        rpt.lines.push_back("hypothesis violation: fork arrows are not uniformly oriented");
        return rpt;
    }

    auto bundle = buildComplexes(b, {.cap = cap});
    auto iPrime = nonLinkedTo(bundle.full, bundle.initials);
    requireEq(rpt, static_cast<int>(iPrime.size()) == n - 2, "exactly n-2 vertices non-linked to I");
    if (static_cast<int>(iPrime.size()) != n - 2) return rpt;

    std::vector<Vertex> Ip(iPrime.begin(), iPrime.end());
    auto stIp = bundle.full.starSet(Ip);
    // x*: the unique variable outside st(I') and outside I.
    std::vector<Vertex> outside;
    for (Vertex v : bundle.full.vertices()) {
        bool inStar = std::binary_search(stIp.vertices().begin(), stIp.vertices().end(), v);
        bool isInit = bundle.graph.isInitialVar(static_cast<VarId>(v));
        if (!inStar && !isInit) outside.push_back(v);
    }
    requireEq(rpt, outside.size() == 1, "unique cluster variable x* outside st(I') and I");
    if (outside.size() != 1) return rpt;
    Vertex xstar = outside[0];

    auto lkCapSt = SimplicialComplex::intersectionOf(bundle.full.link(xstar), stIp);
    auto coneX = lkCapSt.cone(xstar);
    requireEq(rpt, bundle.positive == SimplicialComplex::unionOf(coneX, stIp),
              "positive complex = join({x*}, lk(x*) n st(I')) u st(I')");
    requireEq(rpt, SimplicialComplex::intersectionOf(coneX, stIp) == lkCapSt,
              "the cone glues along lk(x*) n st(I')");

    // lk n st is an edge joined with the full A(n-3) complex.
    SimplicialComplex refA = referenceComplex(n >= 4 ? DynkinType({{DynkinFamily::A, n - 3}}) : DynkinType(),
                                              cap);
    SimplicialComplex edge = SimplicialComplex::fromFacets({{-1, -2}});
    requireEq(rpt, lkCapSt.isIsomorphic(SimplicialComplex::join(edge, refA)),
              "lk(x*) n st(I') isomorphic to join(edge, full A(n-3) complex)");

    // Gluing target on the initial side.
    std::vector<Vertex> varsFork;
    std::vector<Vertex> iMinusFork;
    {
        const auto& initVars = bundle.graph.nodes[0].vars;
        for (int j = 0; j < n; ++j) {
            if (j == fork[0] || j == fork[1])
                varsFork.push_back(initVars[j]);
            else
                iMinusFork.push_back(initVars[j]);
        }
    }
    auto stIMinusFork = bundle.full.starSet(iMinusFork);
    requireEq(rpt, stIp.isIsomorphic(stIMinusFork), "st(I') isomorphic to st(I - fork)");
    std::vector<Vertex> glueVerts;
    for (Vertex v : stIMinusFork.vertices()) {
        if (std::find(iMinusFork.begin(), iMinusFork.end(), v) != iMinusFork.end()) continue;
        Face f1{std::min(v, varsFork[0]), std::max(v, varsFork[0])};
        Face f2{std::min(v, varsFork[1]), std::max(v, varsFork[1])};
        if (v != varsFork[0] && v != varsFork[1] && (!bundle.full.containsFace(f1) || !bundle.full.containsFace(f2)))
            continue;
        glueVerts.push_back(v);
    }
    auto glue = bundle.full.fullSubcomplex(glueVerts);
    requireEq(rpt, lkCapSt.isIsomorphic(glue), "lk(x*) n st(I') isomorphic to the gluing subcomplex");

    requireEq(rpt, bundle.positive.faceVector().at(0) == static_cast<long long>(n) * n - n,
              "f+_0 = n^2 - n");
    rpt.lines.push_back("structure D" + std::to_string(n) + ": x* = variable " + std::to_string(xstar) +
                        ", f+ = " + bundle.positive.faceVector().toString());
    return rpt;
}

}  // namespace cck
