#include <doctest.h>

#include "cck/arcs.hpp"
#include "cck/dynkin.hpp"
#include "cck/errors.hpp"

using namespace cck;

namespace {

IntMat rows(const std::vector<std::vector<long long>>& r) { return IntMat::fromRows(r); }

Triangulation make(ArcModel model, int n, const std::vector<std::pair<int, int>>& pairs,
                   const std::vector<int>& labels = {}) {
    Triangulation t;
    t.model = model;
    t.n = n;
    const int m = [&] {
        switch (model) {
            case ArcModel::A: return n + 3;
            case ArcModel::BC: return 2 * n + 2;
            case ArcModel::D: return 2 * n;
        }
        return 0;
    }();
    for (size_t i = 0; i < pairs.size(); ++i) {
        Diagonal d(m, pairs[i].first, pairs[i].second);
        ArcObject o;
        o.rep = model == ArcModel::A ? d : std::min(d, d.rotated());
        o.diameterLabel = i < labels.size() ? labels[i] : 0;
        t.arcs.push_back(o);
    }
    validateTriangulation(t);
    return t;
}

}  // namespace

TEST_CASE("diagonal crossing and compatibility") {
    Diagonal d13(6, 1, 3), d24(6, 2, 4), d14(6, 1, 4), d25(6, 2, 5);
    CHECK(crosses(d13, d24));
    CHECK(!crosses(d13, d14));  // shared endpoint
    CHECK(crosses(d14, d25));
    CHECK(!crosses(d13, Diagonal(6, 4, 6)));
    CHECK_THROWS_AS(Diagonal(6, 1, 2), InvalidInput);
    CHECK_THROWS_AS(Diagonal(6, 1, 6), InvalidInput);
}

TEST_CASE("type D compatibility cases") {
    const int n = 3;  // hexagon
    ArcObject d25a{Diagonal(6, 2, 5), 1}, d25b{Diagonal(6, 2, 5), 2};
    ArcObject d14a{Diagonal(6, 1, 4), 1}, d14b{Diagonal(6, 1, 4), 2};
    CHECK(compatible(ArcModel::D, d25a, d25b));   // same diameter, different labels
    CHECK(compatible(ArcModel::D, d25a, d14a));   // distinct diameters, same label
    CHECK(!compatible(ArcModel::D, d25a, d14b));  // distinct diameters, different labels
    ArcObject orbit{std::min(Diagonal(6, 1, 3), Diagonal(6, 1, 3).rotated()), 0};
    CHECK(!compatible(ArcModel::D, orbit, d25a));  // (1,3) crosses (2,5)
    CHECK(compatible(ArcModel::D, orbit, d14a));   // shares endpoints only
    (void)n;
}

TEST_CASE("hexagon triangulation of Figure-3 shape gives the 3-cycle matrix") {
    auto t = make(ArcModel::A, 3, {{3, 5}, {1, 3}, {1, 5}});
    CHECK(matrixOfTriangulation(t) == rows({{0, -1, 1}, {1, 0, -1}, {-1, 1, 0}}));
}

TEST_CASE("octagon orbit set with a long diagonal: the +-2 matrix") {
    auto t = make(ArcModel::BC, 3, {{3, 5}, {1, 3}, {1, 5}});
    CHECK(matrixOfTriangulation(t) == rows({{0, -1, 2}, {1, 0, -2}, {-1, 1, 0}}));
    // C variant: transpose of the negation.
    Triangulation c = t;
    c.cVariant = true;
    CHECK(matrixOfTriangulation(c) == rows({{0, -1, 1}, {1, 0, -1}, {-2, 2, 0}}));
}

TEST_CASE("the fan initial octagon set gives the tree B3 matrix") {
    auto t = initialTriangulation(ArcModel::BC, 3);
    CHECK(matrixOfTriangulation(t) == rows({{0, -1, 0}, {1, 0, -2}, {0, 1, 0}}));
}

TEST_CASE("octagon D4 set with two same-label diameters: the Figure-10 matrix") {
    auto t = make(ArcModel::D, 4, {{3, 5}, {1, 3}, {1, 5}, {3, 7}}, {0, 0, 1, 1});
    CHECK(matrixOfTriangulation(t) ==
          rows({{0, 0, 1, -1}, {0, 0, -1, 1}, {-1, 1, 0, 0}, {1, -1, 0, 0}}));
}

TEST_CASE("hexagon D3 twin set gives the fork matrix") {
    auto t = initialTriangulation(ArcModel::D, 3);
    CHECK(matrixOfTriangulation(t) == rows({{0, -1, -1}, {1, 0, 0}, {1, 0, 0}}));
}

TEST_CASE("flips are involutions and commute with mutation") {
    for (auto [model, n] : std::vector<std::pair<ArcModel, int>>{
             {ArcModel::A, 3}, {ArcModel::A, 4}, {ArcModel::BC, 3}, {ArcModel::D, 3}, {ArcModel::D, 4}}) {
        Triangulation t = initialTriangulation(model, n);
        IntMat bt = matrixOfTriangulation(t);
        for (int k = 0; k < n; ++k) {
            Triangulation t2 = flip(t, k);
            CHECK(flip(t2, k).arcs == t.arcs);
            CHECK(matrixOfTriangulation(t2) == matrixMutate(bt, k));
        }
    }
}

TEST_CASE("hexagon flip at the long diagonal of the fan") {
    // Fan from vertex 1; flipping the middle diagonal (1,4) inside the
    // quadrilateral 3,4,5,1 yields (3,5).
    auto t = initialTriangulation(ArcModel::A, 3);
    auto t2 = flip(t, 1);
    CHECK(t2.arcs[1].rep == Diagonal(6, 3, 5));
}

TEST_CASE("BC flip at the diameter stays a diameter") {
    auto t = initialTriangulation(ArcModel::BC, 3);
    auto t2 = flip(t, 2);
    CHECK(t2.arcs[2].rep.isDiameter());
    CHECK(t2.arcs[2].rep != t.arcs[2].rep);
}

TEST_CASE("arc complex counts: type A hexagon") {
    auto res = arcComplex(ArcModel::A, 3);
    CHECK(res.objects.size() == 9);
    CHECK(res.complex.facets().size() == 14);
    CHECK(res.complex.faceVector() == FaceVector({1, 9, 21, 14}));
}

TEST_CASE("arc complex counts: type BC octagon") {
    auto res = arcComplex(ArcModel::BC, 3);
    CHECK(res.objects.size() == 12);
    CHECK(res.complex.faceVector() == formulaFull(parseDynkinType("B3")));
}

TEST_CASE("arc complex counts: type D hexagon has 9 orbit classes") {
    auto res = arcComplex(ArcModel::D, 3);
    CHECK(res.objects.size() == 9);
    CHECK(res.complex.facets().size() == 14);
    // Facets with three same-label diameters exist (the central fans).
    int fanFacets = 0;
    for (const auto& f : res.complex.facets()) {
        int diams = 0;
        for (Vertex v : f) diams += res.objects[v].diameterLabel != 0;
        if (diams == 3) ++fanFacets;
    }
    CHECK(fanFacets == 2);
}

TEST_CASE("model isomorphism walks: A, BC, D") {
    for (auto [model, n] : std::vector<std::pair<ArcModel, int>>{
             {ArcModel::A, 2}, {ArcModel::A, 3}, {ArcModel::BC, 2}, {ArcModel::BC, 3}, {ArcModel::D, 3}}) {
        auto rpt = verifyModelIso(model, n);
        INFO(rpt.toText());
        CHECK(rpt.ok);
    }
    // The transpose-negated variant realizes the C seeds on the same orbits.
    auto rpt = verifyModelIso(ArcModel::BC, 3, kDefaultNodeCap, true);
    INFO(rpt.toText());
    CHECK(rpt.ok);
}

TEST_CASE("positive-complex structure, type A") {
    auto rpt = verifyStructureA(dynkinMatrix(parseDynkinType("A3")));
    INFO(rpt.toText());
    CHECK(rpt.ok);
    // Hypothesis violation is reported, not thrown.
    auto bad = verifyStructureA(ExchangeMatrix(rows({{0, 1, -1}, {-1, 0, 1}, {1, -1, 0}})));
    CHECK(!bad.ok);
}

TEST_CASE("positive-complex structure, type B") {
    auto rpt = verifyStructureBC(dynkinMatrix(parseDynkinType("B3")));
    INFO(rpt.toText());
    CHECK(rpt.ok);
}

TEST_CASE("positive-complex structure, type D3, with the predicted extra vertex") {
    ExchangeMatrix b(rows({{0, -1, -1}, {1, 0, 0}, {1, 0, 0}}));
    auto rpt = verifyStructureD(b);
    INFO(rpt.toText());
    CHECK(rpt.ok);
}

TEST_CASE("type D3: x* is the orbit {(3,5),(2,6)} of the twin-fan seed") {
    // Lockstep the initial D3 triangulation against its own seed and read
    // off which orbit corresponds to the unique vertex outside st(I') u I.
    Triangulation t0 = initialTriangulation(ArcModel::D, 3);
    IntMat b0 = matrixOfTriangulation(t0);
    auto bundle = buildComplexes(ExchangeMatrix(b0));

    // Identify x* combinatorially on the arc side: the orbit crossing the
    // one non-linked orbit's companions... directly: objects not compatible
    // with any of I' and not in T0.
    auto res = arcComplex(ArcModel::D, 3);
    // I' on the arc side: objects crossing every arc of T0.
    std::vector<ArcObject> iPrime;
    for (const auto& o : res.objects) {
        bool linked = false;
        for (const auto& a : t0.arcs)
            if (o == a || compatible(ArcModel::D, o, a)) {
                linked = true;
                break;
            }
        if (!linked) iPrime.push_back(o);
    }
    REQUIRE(iPrime.size() == 1);
    // x*: outside T0, outside I', and not compatible with every member of
    // x*: the unique object outside st(I-prime) and T0.
    std::vector<ArcObject> outside;
    for (const auto& o : res.objects) {
        if (std::find(t0.arcs.begin(), t0.arcs.end(), o) != t0.arcs.end()) continue;
        bool inStar = false;
        for (const auto& ip : iPrime)
            if (o == ip || compatible(ArcModel::D, o, ip)) {
                inStar = true;
                break;
            }
        if (!inStar) outside.push_back(o);
    }
    REQUIRE(outside.size() == 1);
    CHECK(outside[0].rep == Diagonal(6, 2, 6));  // orbit {(2,6),(5,3)} = {(v2,v3),(v1,v4)}
    CHECK(outside[0].diameterLabel == 0);
    (void)bundle;
}

TEST_CASE("non-linked vertex counts across tree orientations") {
    // Exactly 1 for type A seeds, n for B/C, n-2 for D, for every
    // orientation of the diagram.
    auto countNonLinked = [](const ExchangeMatrix& b) {
        auto bundle = buildComplexes(b);
        int count = 0;
        for (Vertex v : bundle.full.vertices()) {
            bool linked = false;
            for (VarId u : bundle.initials) {
                if (static_cast<VarId>(v) == u ||
                    bundle.full.containsFace({std::min<Vertex>(v, u), std::max<Vertex>(v, u)})) {
                    linked = true;
                    break;
                }
            }
            if (!linked) ++count;
        }
        return count;
    };
    for (const auto& b : allOrientations(parseDynkinType("A4"))) CHECK(countNonLinked(b) == 1);
    for (const auto& b : allOrientations(parseDynkinType("B3"))) CHECK(countNonLinked(b) == 3);
    for (const auto& b : allOrientations(parseDynkinType("D4"))) CHECK(countNonLinked(b) == 2);
}

TEST_CASE("triangulation text format") {
    auto t = initialTriangulation(ArcModel::D, 3);
    std::string text = t.toText();
    CHECK(text.find("m=6") != std::string::npos);
    CHECK(text.find("type=D") != std::string::npos);
    CHECK(text.find("@1") != std::string::npos);
    CHECK(text.find("@2") != std::string::npos);
}
