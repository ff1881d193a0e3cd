#ifndef CCK_ARCS_HPP
#define CCK_ARCS_HPP

#include <optional>
#include <string>
#include <vector>

#include "cck/facevec.hpp"

namespace cck {

enum class ArcModel { A, BC, D };

// Polygon chord, vertices 1..m clockwise, normalized i < j, endpoints
// non-adjacent.
struct Diagonal {
    int m = 0;
    int i = 0, j = 0;
    Diagonal() = default;
    Diagonal(int m, int a, int b);
    bool isDiameter() const { return j - i == m / 2; }
    Diagonal rotated() const;  // image under the half-turn
    auto operator<=>(const Diagonal&) const = default;
};

bool crosses(const Diagonal& a, const Diagonal& b);

// Vertex object of an arc complex: a plain diagonal (model A), a rotation
// orbit (BC and D non-diameters), or a labeled diameter (D).
struct ArcObject {
    Diagonal rep;            // canonical representative (lexicographically least in its orbit)
    int diameterLabel = 0;   // 0: none; 1 or 2: type D diameter label
    auto operator<=>(const ArcObject&) const = default;
    std::string toString() const;  // "2-5", "2-5@1"
};

bool compatible(ArcModel model, const ArcObject& a, const ArcObject& b);
std::vector<ArcObject> allArcObjects(ArcModel model, int n);

struct Triangulation {
    ArcModel model = ArcModel::A;
    int n = 0;  // rank; polygon size n+3 (A), 2n+2 (BC), 2n (D)
    bool cVariant = false;  // BC only: produce the C_n matrix
    std::vector<ArcObject> arcs;  // labeled: position = direction index

    int polygonSize() const;
    std::string toText() const;  // "m=8; type=BC; diag 2-4 2-5 2-6"
};

// Fan-style initial triangulations (linear tree quivers).
Triangulation initialTriangulation(ArcModel model, int n, bool cVariant = false);

// Validates pairwise compatibility and maximality.
void validateTriangulation(const Triangulation& t);

Triangulation flip(const Triangulation& t, int k);

// B_T. For BC the cVariant flag selects the transpose-negated matrix.
IntMat matrixOfTriangulation(const Triangulation& t);

struct ArcComplexResult {
    std::vector<ArcObject> objects;  // vertex table; vertex id = index
    SimplicialComplex complex;       // facets = maximal compatible sets
};

ArcComplexResult arcComplex(ArcModel model, int n);

// Walks the flip pattern and the seed mutation pattern in lockstep from
// matched initial data, checking B_{flip} = mu(B_T) at every step and that
// the induced vertex bijection is a complex isomorphism. cVariant runs the
// BC model with the transpose-negated matrices.
Report verifyModelIso(ArcModel model, int n, long long cap = kDefaultNodeCap, bool cVariant = false);

// Structure of positive complexes for linearly oriented seeds.
Report verifyStructureA(const ExchangeMatrix& b, long long cap = kDefaultNodeCap);
Report verifyStructureBC(const ExchangeMatrix& b, long long cap = kDefaultNodeCap);
Report verifyStructureD(const ExchangeMatrix& b, long long cap = kDefaultNodeCap);

}  // namespace cck

#endif
