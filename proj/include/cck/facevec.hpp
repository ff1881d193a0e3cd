#ifndef CCK_FACEVEC_HPP
#define CCK_FACEVEC_HPP

#include <string>
#include <vector>

#include "cck/exchange_graph.hpp"
#include "cck/simplicial.hpp"

namespace cck {

// Exchange graph plus the two complexes it spans: facets of `full` are the
// clusters, `positive` is the full subcomplex on non-initial variables.
struct ClusterComplexBundle {
    ExchangeGraph graph;
    SimplicialComplex full;
    SimplicialComplex positive;
    std::vector<VarId> initials;  // sorted
};

ClusterComplexBundle buildComplexes(const ExchangeMatrix& b, const EnumerateOptions& opts = {});

// Closed forms for positive cluster complexes: binomial lists for the
// classical families, the literal vectors for E6..G2; disconnected types
// convolve componentwise.
FaceVector formulaPositive(const DynkinType& type);
// Closed forms for the full cluster complexes of the classical families.
// Throws InvalidInput for exceptional components (no closed form here;
// use enumeration).
FaceVector formulaFull(const DynkinType& type);

enum class FaceVectorStrategy { Enumerate, Recurse, Auto };

// f(positive complex) for the seed with initial matrix b. `Recurse` walks
// a matrix mutation path to a tree-type representative and telescopes the
// mutation-difference corrections; `Auto` additionally cross-checks
// against direct enumeration when the rank is small.
FaceVector positiveFaceVector(const IntMat& b, FaceVectorStrategy strategy = FaceVectorStrategy::Auto,
                              long long cap = kDefaultNodeCap);

struct MutationDifference {
    FaceVector lhs;  // f+(B) - f+(mu_k B), by direct construction
    FaceVector rhs;  // [f+(sub of mu_k B)]_1 - [f+(sub of B)]_1, recursive
    bool equal = false;
};

MutationDifference mutationDifference(const IntMat& b, int k, long long cap = kDefaultNodeCap);

struct Report {
    bool ok = true;
    long long checks = 0;
    std::vector<std::string> lines;
    std::string toText() const;
    std::string toJsonText() const;
};

// Every sink/source edge of the exchange graph of b: both endpoint seeds
// produce the same positive face vector (and h-vector).
Report checkSinkSourceInvariance(const IntMat& b, long long cap = kDefaultNodeCap);
// All orientations of the tree diagram share the positive face vector.
Report checkOrientationIndependence(const DynkinType& type, long long cap = kDefaultNodeCap);

// Positive face vector of a seed t inside an already-enumerated complex:
// faces of `faces` avoiding the cluster of t.
FaceVector positiveFaceVectorWithin(const std::vector<Face>& faces, const std::vector<VarId>& cluster);

}  // namespace cck

#endif
