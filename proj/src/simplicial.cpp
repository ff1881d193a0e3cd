#include "cck/simplicial.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <unordered_set>

#include <nlohmann/json.hpp>

#include "cck/errors.hpp"

namespace cck {

long long binomial(long long a, long long b) {
    if (b < 0 || a < 0 || a < b) return 0;
    b = std::min(b, a - b);
    long long r = 1;
    for (long long i = 1; i <= b; ++i) {
        r = r * (a - b + i);
        if (r % i != 0) throw EngineBug("binomial: inexact intermediate");
        r /= i;
    }
    return r;
}

FaceVector::FaceVector(std::vector<long long> entries) : v_(std::move(entries)) { trim(); }

void FaceVector::trim() {
    while (!v_.empty() && v_.back() == 0) v_.pop_back();
}

long long FaceVector::at(long long k) const {
    long long idx = k + 1;
    if (idx < 0 || idx >= static_cast<long long>(v_.size())) return 0;
    return v_[idx];
}

void FaceVector::set(long long k, long long val) {
    long long idx = k + 1;
    if (idx < 0) throw InvalidInput("face vector index below -1");
    if (idx >= static_cast<long long>(v_.size())) v_.resize(idx + 1, 0);
    v_[idx] = val;
    trim();
}

FaceVector FaceVector::shifted(int k) const {
    FaceVector out;
    out.v_.assign(v_.size() + k, 0);
    for (size_t i = 0; i < v_.size(); ++i) out.v_[i + k] = v_[i];
    out.trim();
    return out;
}

FaceVector FaceVector::operator+(const FaceVector& o) const {
    FaceVector out;
    out.v_.assign(std::max(v_.size(), o.v_.size()), 0);
    for (size_t i = 0; i < out.v_.size(); ++i)
        out.v_[i] = (i < v_.size() ? v_[i] : 0) + (i < o.v_.size() ? o.v_[i] : 0);
    out.trim();
    return out;
}

FaceVector FaceVector::operator-(const FaceVector& o) const {
    FaceVector out;
    out.v_.assign(std::max(v_.size(), o.v_.size()), 0);
    for (size_t i = 0; i < out.v_.size(); ++i)
        out.v_[i] = (i < v_.size() ? v_[i] : 0) - (i < o.v_.size() ? o.v_[i] : 0);
    out.trim();
    return out;
}

bool FaceVector::operator==(const FaceVector& o) const { return v_ == o.v_; }

FaceVector FaceVector::joinConvolve(const FaceVector& a, const FaceVector& b) {
    // The join of an i-face and a j-face has dimension i+j+1, so with
    // slots offset by one (slot s = dimension s-1) the slots add up.
    FaceVector out;
    out.v_.assign(a.v_.size() + b.v_.size(), 0);
    for (size_t i = 0; i < a.v_.size(); ++i)
        for (size_t j = 0; j < b.v_.size(); ++j) out.v_[i + j] += a.v_[i] * b.v_[j];
    out.trim();
    return out;
}

std::string FaceVector::toString() const {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < v_.size(); ++i) os << (i ? ", " : "") << v_[i];
    os << ")";
    return os.str();
}

std::vector<long long> hVector(const FaceVector& f, int n) {
    // sum_{i=0..n} f_{i-1} (x-1)^{n-i} as coefficients of x^n .. x^0.
    std::vector<long long> coef(n + 1, 0);
    for (int i = 0; i <= n; ++i) {
        long long fi = f.at(i - 1);
        if (fi == 0) continue;
        int d = n - i;
        for (int t = 0; t <= d; ++t) {
            // (x-1)^d = sum_t C(d,t) x^{d-t} (-1)^t; x^{d-t} = x^{n-(i+t)}
            long long c = binomial(d, t) * ((t % 2) ? -1 : 1);
            coef[i + t] += fi * c;  // coefficient of x^{n-(i+t)} is h_{i+t}
        }
    }
    return coef;
}

std::string vectorToString(const std::vector<long long>& v) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
    os << ")";
    return os.str();
}

SimplicialComplex SimplicialComplex::fromFacets(std::vector<Face> faces) {
    for (auto& f : faces) std::sort(f.begin(), f.end());
    std::sort(faces.begin(), faces.end());
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
    // Drop faces strictly contained in another face (duplicates are gone,
    // so only strictly larger faces can dominate).
    std::vector<Face> maximal;
    for (size_t i = 0; i < faces.size(); ++i) {
        bool dominated = false;
        for (size_t j = 0; j < faces.size() && !dominated; ++j)
            if (faces[j].size() > faces[i].size())
                dominated = std::includes(faces[j].begin(), faces[j].end(), faces[i].begin(), faces[i].end());
        if (!dominated) maximal.push_back(faces[i]);
    }
    SimplicialComplex k;
    k.facets_ = std::move(maximal);
    std::vector<Vertex> verts;
    for (const auto& f : k.facets_) verts.insert(verts.end(), f.begin(), f.end());
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    k.vertices_ = std::move(verts);
    return k;
}

int SimplicialComplex::dim() const {
    int d = -1;
    for (const auto& f : facets_) d = std::max<int>(d, static_cast<int>(f.size()) - 1);
    return d;
}

bool SimplicialComplex::isPure() const {
    for (const auto& f : facets_)
        if (f.size() != facets_[0].size()) return false;
    return true;
}

namespace {

struct FaceHash {
    std::size_t operator()(const Face& f) const {
        std::size_t h = f.size();
        for (Vertex v : f) h = hashCombine(h, static_cast<std::size_t>(v));
        return h;
    }
};

}  // namespace

FaceVector SimplicialComplex::faceVector() const {
    FaceVector f = FaceVector::ofComplex();
    const int d = dim();
    // Per-dimension counting keeps the footprint at one dimension's worth
    // of faces at a time (E8-scale facet lists fit comfortably).
    for (int dd = 0; dd <= d; ++dd) {
        const size_t sz = dd + 1;
        std::unordered_set<Face, FaceHash> seen;
        size_t expect = 0;
        for (const auto& fac : facets_)
            if (fac.size() >= sz) expect += static_cast<size_t>(binomial(fac.size(), sz));
        seen.reserve(expect);
        Face sub(sz);
        for (const auto& fac : facets_) {
            if (fac.size() < sz) continue;
            std::vector<int> idx(sz);
            for (size_t i = 0; i < sz; ++i) idx[i] = static_cast<int>(i);
            while (true) {
                for (size_t i = 0; i < sz; ++i) sub[i] = fac[idx[i]];
                seen.insert(sub);
                int i = static_cast<int>(sz) - 1;
                while (i >= 0 && idx[i] == static_cast<int>(fac.size() - sz + i)) --i;
                if (i < 0) break;
                ++idx[i];
                for (size_t j = i + 1; j < sz; ++j) idx[j] = idx[j - 1] + 1;
            }
        }
        f.set(dd, static_cast<long long>(seen.size()));
    }
    return f;
}

std::vector<Face> SimplicialComplex::allFaces() const {
    std::unordered_set<Face, FaceHash> seen;
    seen.insert(Face{});
    for (const auto& fac : facets_) {
        const size_t m = fac.size();
        if (m > 25) throw InvalidInput("allFaces: facet too large");
        for (unsigned long long mask = 1; mask < (1ull << m); ++mask) {
            Face sub;
            for (size_t i = 0; i < m; ++i)
                if ((mask >> i) & 1ull) sub.push_back(fac[i]);
            seen.insert(std::move(sub));
        }
    }
    std::vector<Face> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end(), [](const Face& a, const Face& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return out;
}

bool SimplicialComplex::containsFace(const Face& face) const {
    for (const auto& f : facets_)
        if (std::includes(f.begin(), f.end(), face.begin(), face.end())) return true;
    return false;
}

SimplicialComplex SimplicialComplex::star(Vertex v) const { return starSet({v}); }

SimplicialComplex SimplicialComplex::starSet(const std::vector<Vertex>& vs) const {
    for (Vertex v : vs)
        if (!std::binary_search(vertices_.begin(), vertices_.end(), v))
            throw InvalidInput("star: unknown vertex " + std::to_string(v));
    std::vector<Face> keep;
    for (const auto& f : facets_)
        for (Vertex v : vs)
            if (std::binary_search(f.begin(), f.end(), v)) {
                keep.push_back(f);
                break;
            }
    return fromFacets(std::move(keep));
}

SimplicialComplex SimplicialComplex::link(Vertex v) const { return linkSet({v}); }

SimplicialComplex SimplicialComplex::linkSet(const std::vector<Vertex>& vs) const {
    for (Vertex v : vs)
        if (!std::binary_search(vertices_.begin(), vertices_.end(), v))
            throw InvalidInput("link: unknown vertex " + std::to_string(v));
    std::vector<Face> keep;
    for (const auto& f : facets_) {
        bool touches = false;
        for (Vertex v : vs)
            if (std::binary_search(f.begin(), f.end(), v)) {
                touches = true;
                break;
            }
        if (!touches) continue;
        Face rest;
        for (Vertex x : f)
            if (std::find(vs.begin(), vs.end(), x) == vs.end()) rest.push_back(x);
        keep.push_back(std::move(rest));
    }
    return fromFacets(std::move(keep));
}

SimplicialComplex SimplicialComplex::cone(Vertex apex) const {
    if (std::binary_search(vertices_.begin(), vertices_.end(), apex))
        throw InvalidInput("cone: apex id collides with a vertex");
    std::vector<Face> out;
    if (facets_.empty()) out.push_back({apex});
    for (const auto& f : facets_) {
        Face g = f;
        g.push_back(apex);
        out.push_back(std::move(g));
    }
    return fromFacets(std::move(out));
}

SimplicialComplex SimplicialComplex::join(const SimplicialComplex& a, const SimplicialComplex& b) {
    for (Vertex v : a.vertices_)
        if (std::binary_search(b.vertices_.begin(), b.vertices_.end(), v))
            throw InvalidInput("join: vertex sets overlap");
    if (a.empty()) return b;
    if (b.empty()) return a;
    std::vector<Face> out;
    for (const auto& f : a.facets_)
        for (const auto& g : b.facets_) {
            Face h = f;
            h.insert(h.end(), g.begin(), g.end());
            out.push_back(std::move(h));
        }
    return fromFacets(std::move(out));
}

SimplicialComplex SimplicialComplex::unionOf(const SimplicialComplex& a, const SimplicialComplex& b) {
    std::vector<Face> out = a.facets_;
    out.insert(out.end(), b.facets_.begin(), b.facets_.end());
    return fromFacets(std::move(out));
}

SimplicialComplex SimplicialComplex::intersectionOf(const SimplicialComplex& a, const SimplicialComplex& b) {
    std::vector<Face> out;
    for (const auto& f : a.facets_)
        for (const auto& g : b.facets_) {
            Face h;
            std::set_intersection(f.begin(), f.end(), g.begin(), g.end(), std::back_inserter(h));
            out.push_back(std::move(h));
        }
    return fromFacets(std::move(out));
}

SimplicialComplex SimplicialComplex::fullSubcomplex(const std::vector<Vertex>& verts) const {
    std::vector<Vertex> sorted = verts;
    std::sort(sorted.begin(), sorted.end());
    std::vector<Face> out;
    for (const auto& f : facets_) {
        Face g;
        for (Vertex v : f)
            if (std::binary_search(sorted.begin(), sorted.end(), v)) g.push_back(v);
        out.push_back(std::move(g));
    }
    return fromFacets(std::move(out));
}

namespace {

struct IsoState {
    const SimplicialComplex *k, *l;
    std::vector<Vertex> kv, lv;
    std::map<Vertex, int> kIdx, lIdx;
    std::vector<std::vector<bool>> kAdj, lAdj;
    std::vector<int> mapKtoL;
    std::vector<bool> usedL;
};

std::vector<std::vector<bool>> skeleton(const SimplicialComplex& c, const std::map<Vertex, int>& idx) {
    std::vector<std::vector<bool>> adj(idx.size(), std::vector<bool>(idx.size(), false));
    for (const auto& f : c.facets())
        for (size_t i = 0; i < f.size(); ++i)
            for (size_t j = i + 1; j < f.size(); ++j) {
                int a = idx.at(f[i]), b = idx.at(f[j]);
                adj[a][b] = adj[b][a] = true;
            }
    return adj;
}

// Multiset of facet sizes through each vertex plus skeleton degree.
std::vector<long long> vertexSignature(const SimplicialComplex& c, Vertex v) {
    std::vector<long long> sizes;
    for (const auto& f : c.facets())
        if (std::binary_search(f.begin(), f.end(), v)) sizes.push_back(static_cast<long long>(f.size()));
    std::sort(sizes.begin(), sizes.end());
    return sizes;
}

bool isoSearch(IsoState& st, size_t pos, const std::vector<std::vector<long long>>& sigK,
               const std::vector<std::vector<long long>>& sigL) {
    if (pos == st.kv.size()) {
        // Full map built; facet sets must correspond exactly.
        std::vector<Face> mapped;
        for (const auto& f : st.k->facets()) {
            Face g;
            for (Vertex v : f) g.push_back(st.lv[st.mapKtoL[st.kIdx[v]]]);
            std::sort(g.begin(), g.end());
            mapped.push_back(std::move(g));
        }
        std::sort(mapped.begin(), mapped.end());
        return mapped == st.l->facets();
    }
    for (size_t cand = 0; cand < st.lv.size(); ++cand) {
        if (st.usedL[cand] || sigK[pos] != sigL[cand]) continue;
        bool ok = true;
        for (size_t prev = 0; prev < pos && ok; ++prev)
            ok = st.kAdj[pos][prev] == st.lAdj[cand][st.mapKtoL[prev]];
        if (!ok) continue;
        st.mapKtoL[pos] = static_cast<int>(cand);
        st.usedL[cand] = true;
        if (isoSearch(st, pos + 1, sigK, sigL)) return true;
        st.usedL[cand] = false;
    }
    return false;
}

}  // namespace

bool SimplicialComplex::isIsomorphic(const SimplicialComplex& o, int maxVertices) const {
    if (vertices_.size() != o.vertices_.size() || facets_.size() != o.facets_.size()) return false;
    if (static_cast<int>(vertices_.size()) > maxVertices)
        throw InvalidInput("isIsomorphic: vertex count exceeds guard");
    std::vector<long long> sa, sb;
    for (const auto& f : facets_) sa.push_back(static_cast<long long>(f.size()));
    for (const auto& f : o.facets_) sb.push_back(static_cast<long long>(f.size()));
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;

    IsoState st;
    st.k = this;
    st.l = &o;
    st.kv = vertices_;
    st.lv = o.vertices_;
    for (size_t i = 0; i < st.kv.size(); ++i) st.kIdx[st.kv[i]] = static_cast<int>(i);
    for (size_t i = 0; i < st.lv.size(); ++i) st.lIdx[st.lv[i]] = static_cast<int>(i);
    st.kAdj = skeleton(*this, st.kIdx);
    st.lAdj = skeleton(o, st.lIdx);
    st.mapKtoL.assign(st.kv.size(), -1);
    st.usedL.assign(st.lv.size(), false);

    std::vector<std::vector<long long>> sigK, sigL;
    for (Vertex v : st.kv) sigK.push_back(vertexSignature(*this, v));
    for (Vertex v : st.lv) sigL.push_back(vertexSignature(o, v));
    {
        auto a = sigK;
        auto b = sigL;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b) return false;
    }
    return isoSearch(st, 0, sigK, sigL);
}

std::string SimplicialComplex::toFacetText() const {
    std::ostringstream os;
    for (const auto& f : facets_) {
        for (size_t i = 0; i < f.size(); ++i) os << (i ? "," : "") << f[i];
        os << "\n";
    }
    return os.str();
}

SimplicialComplex SimplicialComplex::fromFacetText(const std::string& text) {
    std::vector<Face> faces;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        Face f;
        std::istringstream ls(line);
        std::string item;
        while (std::getline(ls, item, ',')) {
            try {
                f.push_back(std::stoll(item));
            } catch (const std::logic_error&) {
                throw InvalidInput("bad facet line '" + line + "'");
            }
        }
        faces.push_back(std::move(f));
    }
    return fromFacets(std::move(faces));
}

std::string SimplicialComplex::toJsonText() const {
    nlohmann::json j{{"vertices", vertices_}, {"facets", facets_}};
    return j.dump();
}

SimplicialComplex SimplicialComplex::fromJsonText(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw InvalidInput(std::string("bad complex JSON: ") + e.what());
    }
    if (!j.contains("facets")) throw InvalidInput("complex JSON needs a facets field");
    return fromFacets(j["facets"].get<std::vector<Face>>());
}

}  // namespace cck
