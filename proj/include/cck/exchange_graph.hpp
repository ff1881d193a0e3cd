#ifndef CCK_EXCHANGE_GRAPH_HPP
#define CCK_EXCHANGE_GRAPH_HPP

#include <memory>
#include <string>
#include <vector>

#include "cck/seeds.hpp"

namespace cck {

constexpr long long kDefaultNodeCap = 100000;  // E8 needs ~25,080 nodes

struct FiniteTypeResult {
    enum class Status { Finite, NotFinite, CapExhausted } status;
    DynkinType type;       // valid when Finite
    long long visited = 0;
};

// BFS over the matrix mutation class up to simultaneous permutation.
// Aborts NotFinite as soon as some |b_ij * b_ji| >= 4 shows up (the
// 2-finiteness guard); Finite as soon as a tree-type representative is
// found. The guard can be disabled to probe cap behaviour.
FiniteTypeResult isFiniteType(const IntMat& b, long long cap = kDefaultNodeCap, bool useGuard = true);

struct GraphNode {
    std::vector<VarId> vars;  // representative labeling
    IntMat b, c, g;
};

struct GraphEdge {
    int a = 0, b = 0;       // node ids, a < b
    VarId xa = 0, xb = 0;   // variable of a missing from b, and vice versa
    int arrowFrom = 0;      // oriented tail (see oriented.hpp)
    int arrowTo = 0;
};

struct EnumerateOptions {
    long long cap = kDefaultNodeCap;
    // Auto: Laurent+g cross-check for rank <= 6, g-vectors alone above.
    enum class Identity { Auto, Laurent, GVector, Both } identity = Identity::Auto;
    int threads = 1;
    // Assert that seeds sharing a dedup key carry permutation-equal
    // matrices (slow; the variable multiset alone is the production key).
    bool checkKeyMatrices = false;
};

class ExchangeGraph {
public:
    std::vector<GraphNode> nodes;
    std::vector<GraphEdge> edges;
    std::vector<std::vector<int>> incident;  // node -> edge ids, n of them
    std::vector<VarId> initialVars;          // sorted
    std::shared_ptr<VariableRegistry> registry;

    int rank() const { return nodes.empty() ? 0 : nodes[0].b.rows(); }
    bool isInitialVar(VarId v) const;
    // Sorted cluster of a node (the non-labeled dedup key).
    std::vector<VarId> key(int node) const;
    std::string toJsonText() const;
};

// Non-labeled dedup key of a labeled seed: the sorted variable multiset.
std::vector<VarId> dedupKey(const LabeledSeed& s);

ExchangeGraph enumerateGraph(const ExchangeMatrix& b, const EnumerateOptions& opts = {});

}  // namespace cck

#endif
