#include "cck/seeds.hpp"

#include <algorithm>

#include "cck/errors.hpp"

namespace cck {

IntMat cMatrixMutate(const IntMat& c, const IntMat& b, int k) {
    IntMat stacked = b.stackedOn(c);
    return matrixMutate(stacked, k).bottomRows(c.rows());
}

int cColumnSign(const IntMat& c, int k) {
    bool pos = false, neg = false;
    for (int i = 0; i < c.rows(); ++i) {
        if (c(i, k) > 0) pos = true;
        if (c(i, k) < 0) neg = true;
    }
    if (pos && neg) throw EngineBug("c-vector column is not sign-coherent");
    if (!pos && !neg) throw EngineBug("c-vector column vanished");
    return pos ? 1 : -1;
}

IntMat gMatrixMutate(const IntMat& g, const IntMat& b, const IntMat& c, int k) {
    const int n = g.rows();
    int eps = cColumnSign(c, k);
    IntMat out = g;
    for (int i = 0; i < n; ++i) out(i, k) = -g(i, k);
    for (int i = 0; i < n; ++i) {
        long long coef = std::max(-eps * b(i, k), 0LL);
        if (coef == 0) continue;
        for (int r = 0; r < n; ++r) out(r, k) += coef * g(r, i);
    }
    return out;
}

LabeledSeed initialSeed(const ExchangeMatrix& b, VariableRegistry& reg) {
    const int n = b.rank();
    LabeledSeed s;
    s.b = b.mat();
    s.c = IntMat::identity(n);
    s.g = IntMat::identity(n);
    for (int i = 0; i < n; ++i) {
        std::optional<Laurent> poly;
        std::optional<GVec> gv;
        if (reg.mode() != VariableIdentity::GVector) poly = Laurent::variable(n, i);
        if (reg.mode() != VariableIdentity::Laurent) gv = s.g.column(i);
        s.vars.push_back(reg.intern(std::move(poly), std::move(gv)));
    }
    return s;
}

LabeledSeed mutateSeed(const LabeledSeed& s, int k, VariableRegistry& reg) {
    const int n = s.b.rows();
    LabeledSeed out;
    out.b = matrixMutate(s.b, k);
    out.g = gMatrixMutate(s.g, s.b, s.c, k);
    out.c = cMatrixMutate(s.c, s.b, k);
    out.vars = s.vars;

    std::optional<Laurent> poly;
    std::optional<GVec> gv;
    if (reg.mode() != VariableIdentity::GVector) {
        std::vector<Laurent> cluster;
        cluster.reserve(n);
        for (VarId v : s.vars) cluster.push_back(*reg.poly(v));
        poly = variableMutate(cluster, s.b, k);
    }
    if (reg.mode() != VariableIdentity::Laurent) gv = out.g.column(k);
    out.vars[k] = reg.intern(std::move(poly), std::move(gv));

    for (int i = 0; i < n; ++i)
        if (i != k && out.vars[i] == out.vars[k])
            throw EngineBug("mutation produced a repeated cluster variable");
    return out;
}

}  // namespace cck
