#include "cck/exchange_graph.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <thread>
#include <unordered_map>
#include <unordered_set>

#include <nlohmann/json.hpp>

#include "cck/errors.hpp"

namespace cck {

FiniteTypeResult isFiniteType(const IntMat& b, long long cap, bool useGuard) {
    if (cap < 1) throw InvalidInput("cap must be >= 1");
    const int n = b.rows();
    auto guardFires = [&](const IntMat& m) {
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (std::abs(m(i, j) * m(j, i)) >= 4) return true;
        return false;
    };
    std::unordered_set<IntMat, IntMatHash> visited;
    std::deque<IntMat> queue;
    IntMat start = canonicalPermForm(b);
    visited.insert(start);
    queue.push_back(start);
    long long seen = 1;
    while (!queue.empty()) {
        IntMat cur = queue.front();
        queue.pop_front();
        if (useGuard && guardFires(cur)) return {FiniteTypeResult::Status::NotFinite, {}, seen};
        if (auto type = classifyDynkin(cartanCompanion(cur)))
            return {FiniteTypeResult::Status::Finite, *type, seen};
        for (int k = 0; k < n; ++k) {
            IntMat next = canonicalPermForm(matrixMutate(cur, k));
            if (visited.insert(next).second) {
                if (++seen > cap) return {FiniteTypeResult::Status::CapExhausted, {}, seen};
                queue.push_back(next);
            }
        }
    }
    // Mutation class exhausted with no tree representative: only reachable
    // with the guard disabled.
    return {FiniteTypeResult::Status::NotFinite, {}, seen};
}

std::vector<VarId> dedupKey(const LabeledSeed& s) {
    std::vector<VarId> key = s.vars;
    std::sort(key.begin(), key.end());
    return key;
}

bool ExchangeGraph::isInitialVar(VarId v) const {
    return std::binary_search(initialVars.begin(), initialVars.end(), v);
}

std::vector<VarId> ExchangeGraph::key(int node) const {
    std::vector<VarId> key = nodes[node].vars;
    std::sort(key.begin(), key.end());
    return key;
}

namespace {

struct KeyHash {
    std::size_t operator()(const std::vector<VarId>& k) const {
        std::size_t h = k.size();
        for (VarId v : k) h = hashCombine(h, static_cast<std::size_t>(v));
        return h;
    }
};

// Output of one mutation step, before interning, so parallel expansion
// never writes to the registry and node/variable numbering stays
// deterministic at any thread count.
struct Candidate {
    IntMat b, c, g;
    std::optional<Laurent> poly;
    std::optional<GVec> gv;
    bool green = false;  // sign of c-column k at the source seed
};

Candidate expand(const GraphNode& node, int k, const VariableRegistry& reg) {
    Candidate cand;
    cand.green = cColumnSign(node.c, k) > 0;
    cand.b = matrixMutate(node.b, k);
    cand.g = gMatrixMutate(node.g, node.b, node.c, k);
    cand.c = cMatrixMutate(node.c, node.b, k);
    if (reg.mode() != VariableIdentity::GVector) {
        std::vector<Laurent> cluster;
        cluster.reserve(node.vars.size());
        for (VarId v : node.vars) cluster.push_back(*reg.poly(v));
        cand.poly = variableMutate(cluster, node.b, k);
    }
    if (reg.mode() != VariableIdentity::Laurent) cand.gv = cand.g.column(k);
    return cand;
}

}  // namespace

ExchangeGraph enumerateGraph(const ExchangeMatrix& b, const EnumerateOptions& opts) {
    if (opts.cap < 1) throw InvalidInput("cap must be >= 1");
    const int n = b.rank();

    VariableIdentity mode;
    switch (opts.identity) {
        case EnumerateOptions::Identity::Laurent: mode = VariableIdentity::Laurent; break;
        case EnumerateOptions::Identity::GVector: mode = VariableIdentity::GVector; break;
        case EnumerateOptions::Identity::Both: mode = VariableIdentity::Both; break;
        case EnumerateOptions::Identity::Auto:
            mode = n <= 6 ? VariableIdentity::Both : VariableIdentity::GVector;
            break;
    }

    ExchangeGraph g;
    g.registry = std::make_shared<VariableRegistry>(mode);
    LabeledSeed init = initialSeed(b, *g.registry);
    g.initialVars = dedupKey(init);

    std::unordered_map<std::vector<VarId>, int, KeyHash> byKey;
    byKey.emplace(g.initialVars, 0);
    g.nodes.push_back({init.vars, init.b, init.c, init.g});

    std::unordered_map<long long, int> edgeSeen;  // packed (min,max) -> edge id
    auto addEdge = [&](int from, int to, VarId outVar, VarId inVar, bool green) {
        int lo = std::min(from, to), hi = std::max(from, to);
        long long packed = static_cast<long long>(lo) * (opts.cap + 1) + hi;
        auto it = edgeSeen.find(packed);
        if (it != edgeSeen.end()) {
            // Rediscovered from the other side; orientation must agree (the
            // exchanged c-column flips sign across the edge).
            const GraphEdge& e = g.edges[it->second];
            if ((green ? to : from) != e.arrowFrom)
                throw EngineBug("edge orientation disagrees between its two sides");
            return;
        }
        GraphEdge e;
        e.a = lo;
        e.b = hi;
        e.xa = lo == from ? outVar : inVar;
        e.xb = lo == from ? inVar : outVar;
        // Green column at the source: the Hasse arrow runs from the new
        // seed into the source, toward the initial cluster.
        e.arrowFrom = green ? to : from;
        e.arrowTo = green ? from : to;
        edgeSeen.emplace(packed, static_cast<int>(g.edges.size()));
        g.edges.push_back(e);
    };

    // Level-synchronous BFS. Candidates are computed (possibly in
    // parallel) from read-only state, then merged in (node, direction)
    // order, so the resulting numbering is deterministic.
    std::vector<int> level{0};
    while (!level.empty()) {
        const size_t total = level.size() * n;
        std::vector<Candidate> cands(total);
        auto work = [&](size_t lo, size_t hi) {
            for (size_t t = lo; t < hi; ++t)
                cands[t] = expand(g.nodes[level[t / n]], static_cast<int>(t % n), *g.registry);
        };
        if (opts.threads <= 1 || total < 64) {
            work(0, total);
        } else {
            std::vector<std::thread> pool;
            std::exception_ptr err;
            std::mutex errMu;
            size_t chunk = (total + opts.threads - 1) / opts.threads;
            for (int t = 0; t < opts.threads; ++t) {
                size_t lo = t * chunk, hi = std::min(total, lo + chunk);
                if (lo >= hi) break;
                pool.emplace_back([&, lo, hi] {
                    try {
                        work(lo, hi);
                    } catch (...) {
                        std::lock_guard<std::mutex> lock(errMu);
                        if (!err) err = std::current_exception();
                    }
                });
            }
            for (auto& th : pool) th.join();
            if (err) std::rethrow_exception(err);
        }

        std::vector<int> nextLevel;
        for (size_t t = 0; t < total; ++t) {
            int from = level[t / n];
            int k = static_cast<int>(t % n);
            Candidate& cand = cands[t];
            VarId outVar = g.nodes[from].vars[k];
            VarId inVar = g.registry->intern(std::move(cand.poly), std::move(cand.gv));

            std::vector<VarId> vars = g.nodes[from].vars;
            vars[k] = inVar;
            for (int i = 0; i < n; ++i)
                if (i != k && vars[i] == inVar) throw EngineBug("mutation produced a repeated cluster variable");
            // Mutating away an initial variable must yield a non-initial
            // one (this is what makes positive complexes pure).
            if (g.isInitialVar(outVar) && g.isInitialVar(inVar))
                throw EngineBug("initial variable exchanged into another initial variable");
            if (inVar == outVar) throw EngineBug("mutation fixed a cluster variable");

            std::vector<VarId> key = vars;
            std::sort(key.begin(), key.end());
            auto [it, isNew] = byKey.try_emplace(std::move(key), static_cast<int>(g.nodes.size()));
            if (!isNew && opts.checkKeyMatrices &&
                !permutationEquivalent(cand.b, g.nodes[it->second].b))
                throw EngineBug("equal dedup keys with permutation-inequivalent matrices");
            if (isNew) {
                if (static_cast<long long>(g.nodes.size()) >= opts.cap)
                    throw CapExhausted("node cap " + std::to_string(opts.cap) +
                                       " exhausted; no partial graph returned");
                g.nodes.push_back({std::move(vars), std::move(cand.b), std::move(cand.c), std::move(cand.g)});
                nextLevel.push_back(it->second);
            }
            addEdge(from, it->second, outVar, inVar, cand.green);
        }
        level = std::move(nextLevel);
    }

    g.incident.assign(g.nodes.size(), {});
    for (size_t e = 0; e < g.edges.size(); ++e) {
        if (g.edges[e].a == g.edges[e].b) throw EngineBug("self-loop in exchange graph");
        g.incident[g.edges[e].a].push_back(static_cast<int>(e));
        g.incident[g.edges[e].b].push_back(static_cast<int>(e));
    }
    for (size_t v = 0; v < g.nodes.size(); ++v)
        if (static_cast<int>(g.incident[v].size()) != n)
            throw EngineBug("exchange graph is not " + std::to_string(n) + "-regular");
    return g;
}

std::string ExchangeGraph::toJsonText() const {
    nlohmann::json j;
    j["rank"] = rank();
    j["initial"] = 0;
    auto nodesJ = nlohmann::json::array();
    for (const auto& node : nodes) {
        nlohmann::json rows = nlohmann::json::array();
        for (int i = 0; i < node.b.rows(); ++i) {
            nlohmann::json row = nlohmann::json::array();
            for (int jj = 0; jj < node.b.cols(); ++jj) row.push_back(node.b(i, jj));
            rows.push_back(row);
        }
        nodesJ.push_back({{"id", nodesJ.size()}, {"vars", node.vars}, {"b", rows}});
    }
    j["nodes"] = nodesJ;
    auto edgesJ = nlohmann::json::array();
    for (const auto& e : edges)
        edgesJ.push_back({{"from", e.a}, {"to", e.b}, {"exchanged", {e.xa, e.xb}}, {"arrow_from", e.arrowFrom}});
    j["edges"] = edgesJ;
    auto varsJ = nlohmann::json::array();
    for (VarId v = 0; v < static_cast<VarId>(registry->size()); ++v) {
        nlohmann::json entry{{"id", v}};
        if (registry->poly(v)) entry["laurent"] = registry->poly(v)->toString();
        if (registry->gvec(v)) entry["g"] = *registry->gvec(v);
        varsJ.push_back(entry);
    }
    j["variables"] = varsJ;
    return j.dump();
}

}  // namespace cck
