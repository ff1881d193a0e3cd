#ifndef CCK_SEEDS_HPP
#define CCK_SEEDS_HPP

#include <memory>
#include <vector>

#include "cck/exchange.hpp"
#include "cck/laurent.hpp"

namespace cck {

// Labeled seed with principal-coefficient tracking. C starts as the
// identity; G holds the g-vectors of the current cluster as columns.
struct LabeledSeed {
    std::vector<VarId> vars;
    IntMat b;
    IntMat c;
    IntMat g;
};

// Mutation of the bottom block of the stacked 2n x n matrix.
IntMat cMatrixMutate(const IntMat& c, const IntMat& b, int k);

// Sign of column k (throws EngineBug when the column is not sign-coherent
// or vanishes).
int cColumnSign(const IntMat& c, int k);

// g'_k = -g_k + sum_i [-eps b_ik]_+ g_i with eps the tropical sign of
// c-column k; other columns unchanged.
IntMat gMatrixMutate(const IntMat& g, const IntMat& b, const IntMat& c, int k);

LabeledSeed initialSeed(const ExchangeMatrix& b, VariableRegistry& reg);

// Full seed mutation. Registry provides variable identity; polynomials are
// consulted only in Laurent/Both modes.
LabeledSeed mutateSeed(const LabeledSeed& s, int k, VariableRegistry& reg);

}  // namespace cck

#endif
