#include "cck/exchange.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cck/errors.hpp"

namespace cck {

namespace {

long long llgcd(long long a, long long b) {
    while (b) {
        long long t = a % b;
        a = b;
        b = t;
    }
    return a < 0 ? -a : a;
}

}  // namespace

std::optional<SkewSymmetrizer> findSkewSymmetrizer(const IntMat& b) {
    const int n = b.rows();
    if (n != b.cols()) return std::nullopt;
    for (int i = 0; i < n; ++i) {
        if (b(i, i) != 0) return std::nullopt;
        for (int j = 0; j < n; ++j) {
            // b_ij and b_ji must vanish together and carry opposite signs.
            if ((b(i, j) == 0) != (b(j, i) == 0)) return std::nullopt;
            if (b(i, j) > 0 && b(j, i) > 0) return std::nullopt;
            if (b(i, j) < 0 && b(j, i) < 0) return std::nullopt;
        }
    }

    // Solve d_i b_ij = -d_j b_ji per connected component with exact
    // rationals d_i = num_i / den_i, root value 1.
    std::vector<long long> num(n, 0), den(n, 1);
    std::vector<int> comp(n, -1);
    for (int root = 0; root < n; ++root) {
        if (comp[root] != -1) continue;
        comp[root] = root;
        num[root] = 1;
        std::vector<int> stack{root}, members{root};
        while (!stack.empty()) {
            int i = stack.back();
            stack.pop_back();
            for (int j = 0; j < n; ++j) {
                if (b(i, j) == 0) continue;
                // d_j = d_i * b_ij / (-b_ji)
                long long pn = num[i] * b(i, j);
                long long pd = den[i] * (-b(j, i));
                if (pd < 0) {
                    pn = -pn;
                    pd = -pd;
                }
                if (pn <= 0) return std::nullopt;
                long long g = llgcd(pn, pd);
                pn /= g;
                pd /= g;
                if (comp[j] == -1) {
                    comp[j] = root;
                    num[j] = pn;
                    den[j] = pd;
                    stack.push_back(j);
                    members.push_back(j);
                } else if (num[j] != pn || den[j] != pd) {
                    return std::nullopt;
                }
            }
        }
        // Scale the component to the least positive integer vector.
        long long lcm = 1;
        for (int i : members) lcm = lcm / llgcd(lcm, den[i]) * den[i];
        long long g = 0;
        for (int i : members) {
            num[i] = num[i] * (lcm / den[i]);
            den[i] = 1;
            g = llgcd(g, num[i]);
        }
        for (int i : members) num[i] /= g;
    }

    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (num[i] * b(i, j) != -num[j] * b(j, i)) return std::nullopt;
    return SkewSymmetrizer{std::move(num)};
}

ExchangeMatrix::ExchangeMatrix(IntMat b) : b_(std::move(b)) {
    if (b_.rows() != b_.cols() || b_.rows() == 0) throw InvalidInput("exchange matrix must be square and nonempty");
    auto d = findSkewSymmetrizer(b_);
    if (!d) throw InvalidInput("matrix is not skew-symmetrizable");
    d_ = *d;
}

ExchangeMatrix ExchangeMatrix::fromJsonText(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw InvalidInput(std::string("bad matrix JSON: ") + e.what());
    }
    if (!j.contains("n") || !j.contains("b")) throw InvalidInput("matrix JSON needs fields n and b");
    int n = j["n"].get<int>();
    std::vector<std::vector<long long>> rows = j["b"].get<std::vector<std::vector<long long>>>();
    if (static_cast<int>(rows.size()) != n) throw InvalidInput("matrix JSON: n disagrees with row count");
    return ExchangeMatrix(IntMat::fromRows(rows));
}

std::string ExchangeMatrix::toJsonText() const {
    nlohmann::json rows = nlohmann::json::array();
    for (int i = 0; i < rank(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int j = 0; j < rank(); ++j) row.push_back(b_(i, j));
        rows.push_back(row);
    }
    nlohmann::json out{{"n", rank()}, {"b", rows}};
    return out.dump();
}

IntMat matrixMutate(const IntMat& b, int k) {
    const int rows = b.rows(), cols = b.cols();
    if (k < 0 || k >= cols) throw InvalidInput("mutation direction out of range");
    IntMat out(rows, cols);
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) {
            if (i == k || j == k) {
                out(i, j) = -b(i, j);
            } else {
                long long bik = b(i, k), bkj = b(k, j);
                out(i, j) = b(i, j) + std::max(bik, 0LL) * bkj + bik * std::max(-bkj, 0LL);
            }
        }
    }
    return out;
}

ValuedQuiver ValuedQuiver::of(const ExchangeMatrix& b) {
    ValuedQuiver q;
    q.n = b.rank();
    q.d = b.symmetrizer().d;
    const IntMat& m = b.mat();
    for (int i = 0; i < q.n; ++i)
        for (int j = 0; j < q.n; ++j)
            if (m(i, j) > 0) q.arrows.push_back({i, j, m(i, j), -m(j, i)});
    return q;
}

IntMat ValuedQuiver::matrixOf() const {
    IntMat m(n, n);
    for (const auto& a : arrows) {
        m(a.from, a.to) = a.v1;
        m(a.to, a.from) = -a.v2;
    }
    return m;
}

std::string ValuedQuiver::toText() const {
    std::ostringstream os;
    for (const auto& a : arrows)
        os << (a.from + 1) << " -> " << (a.to + 1) << " (" << a.v1 << "," << a.v2 << ")\n";
    os << "d: [";
    for (size_t i = 0; i < d.size(); ++i) os << (i ? "," : "") << d[i];
    os << "]\n";
    return os.str();
}

ValuedQuiver quiverMutate(const ValuedQuiver& q, int k) {
    return ValuedQuiver::of(ExchangeMatrix(matrixMutate(q.matrixOf(), k)));
}

IntMat quiverMutateThreeStep(const IntMat& b, int k) {
    const int n = b.rows();
    if (b != b.transposed().negated()) throw InvalidInput("three-step rule needs a skew-symmetric matrix");
    // Arrow multiplicities: m(i,j) = [b_ij]_+.
    IntMat m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = std::max(b(i, j), 0LL);
    IntMat out = m;
    // (1) for each path i -> k -> j add an arrow i -> j
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != k && j != k) out(i, j) += m(i, k) * m(k, j);
    // (2) reverse all arrows at k
    for (int i = 0; i < n; ++i) {
        if (i == k) continue;
        std::swap(out(i, k), out(k, i));
    }
    // (3) cancel 2-cycles
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            long long c = std::min(out(i, j), out(j, i));
            out(i, j) -= c;
            out(j, i) -= c;
        }
    IntMat res(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) res(i, j) = out(i, j) - out(j, i);
    return res;
}

IntMat cartanCompanion(const IntMat& b) {
    const int n = b.rows();
    IntMat a(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a(i, j) = (i == j) ? 2 : -std::abs(b(i, j));
    return a;
}

DynkinType::DynkinType(std::vector<DynkinComponent> comps) {
    for (DynkinComponent c : comps) {
        if (c.rank <= 0) throw InvalidInput("Dynkin component rank must be positive");
        if (c.family == DynkinFamily::D && c.rank == 2) {
            // D2 is A1 x A1 by convention.
            components.push_back({DynkinFamily::A, 1});
            components.push_back({DynkinFamily::A, 1});
            continue;
        }
        if (c.family == DynkinFamily::C && c.rank == 2) c.family = DynkinFamily::B;  // B2 = C2
        if ((c.family == DynkinFamily::B || c.family == DynkinFamily::C) && c.rank == 1)
            c.family = DynkinFamily::A;
        components.push_back(c);
    }
    std::sort(components.begin(), components.end());
}

int DynkinType::rank() const {
    int r = 0;
    for (const auto& c : components) r += c.rank;
    return r;
}

std::string DynkinType::toString() const {
    std::ostringstream os;
    for (size_t i = 0; i < components.size(); ++i) {
        if (i) os << " x ";
        os << static_cast<char>(components[i].family) << components[i].rank;
    }
    return components.empty() ? "(empty)" : os.str();
}

namespace {

std::optional<DynkinComponent> classifyComponent(const IntMat& a, const std::vector<int>& verts) {
    const int n = static_cast<int>(verts.size());
    if (n == 1) return DynkinComponent{DynkinFamily::A, 1};
    std::vector<int> idx(a.rows(), -1);
    for (int i = 0; i < n; ++i) idx[verts[i]] = i;

    // Local adjacency with |a_ij * a_ji| edge products.
    std::vector<std::vector<int>> adj(n);
    int edges = 0;
    long long maxProd = 1;
    std::vector<std::pair<int, int>> heavy;  // edges with product > 1
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            long long p = a(verts[u], verts[v]) * a(verts[v], verts[u]);
            if (p == 0) continue;
            adj[u].push_back(v);
            adj[v].push_back(u);
            ++edges;
            if (p > 1) heavy.push_back({u, v});
            maxProd = std::max(maxProd, p);
        }
    if (edges != n - 1) return std::nullopt;  // cycles are never finite

    auto degree = [&](int u) { return static_cast<int>(adj[u].size()); };
    int maxDeg = 0, trivalent = -1, nTrivalent = 0;
    for (int u = 0; u < n; ++u) {
        maxDeg = std::max(maxDeg, degree(u));
        if (degree(u) >= 3) {
            trivalent = u;
            ++nTrivalent;
        }
    }
    if (maxDeg > 3 || nTrivalent > 1) return std::nullopt;

    if (maxProd == 1) {
        if (nTrivalent == 0) return DynkinComponent{DynkinFamily::A, n};
        // Branch lengths from the trivalent vertex, sorted.
        std::vector<int> lens;
        for (int s : adj[trivalent]) {
            int len = 1, prev = trivalent, cur = s;
            while (degree(cur) == 2) {
                int nxt = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
                prev = cur;
                cur = nxt;
                ++len;
            }
            if (degree(cur) != 1) return std::nullopt;
            lens.push_back(len);
        }
        std::sort(lens.begin(), lens.end());
        if (lens[0] == 1 && lens[1] == 1) return DynkinComponent{DynkinFamily::D, n};
        if (lens[0] == 1 && lens[1] == 2 && lens[2] >= 2 && lens[2] <= 4)
            return DynkinComponent{DynkinFamily::E, n};
        return std::nullopt;
    }

    if (heavy.size() != 1 || nTrivalent != 0) return std::nullopt;
    auto [hu, hv] = heavy[0];
    long long p = a(verts[hu], verts[hv]) * a(verts[hv], verts[hu]);
    if (p == 3) return n == 2 ? std::optional(DynkinComponent{DynkinFamily::G, 2}) : std::nullopt;
    if (p != 2) return std::nullopt;
    bool endEdge = degree(hu) == 1 || degree(hv) == 1;
    if (!endEdge) {
        // The product-2 edge sits between the two middle vertices of a
        // 4-chain exactly for F4.
        if (n == 4 && degree(hu) == 2 && degree(hv) == 2) return DynkinComponent{DynkinFamily::F, 4};
        return std::nullopt;
    }
    if (n == 2) return DynkinComponent{DynkinFamily::B, 2};  // B2 = C2
    // B vs C by the symmetrizer of the Cartan matrix restricted to the
    // component: B has a single short vertex (one d-entry = 2), C the
    // transpose shape.
    IntMat sub(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) sub(i, j) = i == j ? 0 : a(verts[i], verts[j]);
    // Reuse the skew-symmetrizer solver on a sign-adjusted copy: for the
    // symmetric problem d_i a_ij = d_j a_ji flip one side's sign.
    IntMat skew = sub;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i < j) skew(i, j) = -skew(i, j);
    auto d = findSkewSymmetrizer(skew);
    if (!d) return std::nullopt;
    int twos = 0;
    long long dmax = *std::max_element(d->d.begin(), d->d.end());
    for (long long x : d->d)
        if (x == dmax) ++twos;
    if (dmax != 2) return std::nullopt;
    return DynkinComponent{twos == 1 ? DynkinFamily::B : DynkinFamily::C, n};
}

}  // namespace

std::optional<DynkinType> classifyDynkin(const IntMat& a) {
    const int n = a.rows();
    if (n == 0 || n != a.cols()) return std::nullopt;
    for (int i = 0; i < n; ++i)
        if (a(i, i) != 2) return std::nullopt;
    std::vector<int> comp(n, -1);
    std::vector<DynkinComponent> out;
    for (int root = 0; root < n; ++root) {
        if (comp[root] != -1) continue;
        std::vector<int> verts, stack{root};
        comp[root] = root;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            verts.push_back(u);
            for (int v = 0; v < n; ++v)
                if (v != u && a(u, v) != 0 && comp[v] == -1) {
                    comp[v] = root;
                    stack.push_back(v);
                }
        }
        std::sort(verts.begin(), verts.end());
        auto c = classifyComponent(a, verts);
        if (!c) return std::nullopt;
        out.push_back(*c);
    }
    return DynkinType(std::move(out));
}

SinkSourceResult isSinkOrSource(const IntMat& b, int k) {
    bool allGe = true, allLe = true;
    for (int j = 0; j < b.rows(); ++j) {
        if (b(j, k) > 0) allLe = false;
        if (b(j, k) < 0) allGe = false;
    }
    if (allGe && allLe) return {SinkSourceResult::Kind::Sink, true};
    if (allGe) return {SinkSourceResult::Kind::Sink, false};
    if (allLe) return {SinkSourceResult::Kind::Source, false};
    return {SinkSourceResult::Kind::Neither, false};
}

namespace {

// Compare this->permuted(perm-prefix) against best on the top-left t x t
// block; -1 smaller, 0 equal, +1 larger.
int comparePrefix(const IntMat& m, const std::vector<int>& perm, int t, const IntMat& best) {
    for (int i = 0; i < t; ++i) {
        // Only the last row/column are new relative to t-1; compare all for
        // simplicity (matrices are tiny).
        for (int j = 0; j < t; ++j) {
            long long a = m(perm[i], perm[j]);
            long long b = best(i, j);
            if (a != b) return a < b ? -1 : 1;
        }
    }
    return 0;
}

void searchCanonical(const IntMat& m, std::vector<int>& perm, std::vector<bool>& used, int t, IntMat& best,
                     bool& haveBest) {
    const int n = m.rows();
    if (t == n) {
        IntMat cand = m.permuted(perm);
        if (!haveBest) {
            best = cand;
            haveBest = true;
        } else {
            for (size_t i = 0; i < static_cast<size_t>(n) * n; ++i) {
                long long a = cand(static_cast<int>(i) / n, static_cast<int>(i) % n);
                long long b = best(static_cast<int>(i) / n, static_cast<int>(i) % n);
                if (a != b) {
                    if (a < b) best = cand;
                    return;
                }
            }
        }
        return;
    }
    for (int v = 0; v < n; ++v) {
        if (used[v]) continue;
        perm[t] = v;
        used[v] = true;
        int cmp = haveBest ? comparePrefix(m, perm, t + 1, best) : -1;
        if (cmp <= 0) searchCanonical(m, perm, used, t + 1, best, haveBest);
        used[v] = false;
    }
}

}  // namespace

IntMat canonicalPermForm(const IntMat& b) {
    const int n = b.rows();
    if (n != b.cols()) throw InvalidInput("canonical form needs a square matrix");
    if (n > 12) throw InvalidInput("canonical form guarded to n <= 12");
    std::vector<int> perm(n);
    std::vector<bool> used(n, false);
    IntMat best;
    bool haveBest = false;
    searchCanonical(b, perm, used, 0, best, haveBest);
    return best;
}

std::size_t permInvariantHash(const IntMat& b) {
    const int n = b.rows();
    std::vector<std::size_t> rowSigs;
    for (int i = 0; i < n; ++i) {
        std::vector<long long> paired;
        for (int j = 0; j < n; ++j)
            if (j != i) paired.push_back(b(i, j) * 4096 + b(j, i));
        std::sort(paired.begin(), paired.end());
        std::size_t h = 1469598103934665603ULL;
        for (long long x : paired) h = hashCombine(h, static_cast<std::size_t>(x));
        rowSigs.push_back(h);
    }
    std::sort(rowSigs.begin(), rowSigs.end());
    std::size_t h = static_cast<std::size_t>(n);
    for (auto s : rowSigs) h = hashCombine(h, s);
    return h;
}

bool permutationEquivalent(const IntMat& a, const IntMat& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    if (permInvariantHash(a) != permInvariantHash(b)) return false;
    return canonicalPermForm(a) == canonicalPermForm(b);
}

}  // namespace cck
