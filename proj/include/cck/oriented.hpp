#ifndef CCK_ORIENTED_HPP
#define CCK_ORIENTED_HPP

#include <string>
#include <vector>

#include "cck/facevec.hpp"

namespace cck {

// Exchange graph with every edge directed by the sign of the exchanged
// c-column: arrows run along red columns, toward the initial cluster, so
// restricted in-degrees reproduce the h-vector of the positive complex.
struct OrientedExchangeGraph {
    const ExchangeGraph* graph = nullptr;
    std::vector<char> positive;  // node -> cluster avoids all initial variables
    int source = -1;             // unique source (the anti-initial cluster)
    int sink = -1;               // unique sink (the initial cluster)
};

OrientedExchangeGraph orient(const ExchangeGraph& g);

struct TauTiltStats {
    std::vector<long long> inDegreeCounts;  // h_i candidates, i = 0..n
    std::vector<long long> hOfPositive;
    bool match = false;
    long long positiveNodes = 0;
};

// In-degree distribution over the induced subgraph on positive nodes,
// cross-checked against h(face vector of the positive complex).
TauTiltStats tauTiltH(const ClusterComplexBundle& bundle);

std::string toDot(const OrientedExchangeGraph& og);

}  // namespace cck

#endif
