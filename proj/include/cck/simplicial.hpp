#ifndef CCK_SIMPLICIAL_HPP
#define CCK_SIMPLICIAL_HPP

#include <functional>
#include <string>
#include <vector>

#include "cck/intmat.hpp"

namespace cck {

// C(a,b) with C(a,b) = 0 for b < 0 or a < b (the out-of-range convention
// several face-vector formulas rely on).
long long binomial(long long a, long long b);

// Face counts indexed from dimension -1; missing entries are zero.
class FaceVector {
public:
    FaceVector() = default;
    // entries[0] is f_{-1}.
    explicit FaceVector(std::vector<long long> entries);
    static FaceVector ofComplex() { return FaceVector({1}); }

    // k >= -1; zero outside the stored range.
    long long at(long long k) const;
    void set(long long k, long long v);
    int maxDim() const { return static_cast<int>(v_.size()) - 2; }

    // [v]_k: shift right by k slots, zero-filled.
    FaceVector shifted(int k) const;
    FaceVector operator+(const FaceVector& o) const;
    FaceVector operator-(const FaceVector& o) const;
    bool operator==(const FaceVector& o) const;

    // f(join(K,L)) from f(K), f(L): the convolution over i + j = k.
    static FaceVector joinConvolve(const FaceVector& a, const FaceVector& b);

    std::string toString() const;  // "(1, 6, 10, 5)"
    const std::vector<long long>& raw() const { return v_; }

private:
    void trim();
    std::vector<long long> v_;  // v_[k+1] = f_k
};

// h-vector (h_0..h_n) from sum f_{i-1} (x-1)^{n-i} = sum h_i x^{n-i}.
std::vector<long long> hVector(const FaceVector& f, int n);
std::string vectorToString(const std::vector<long long>& v);

using Vertex = long long;
using Face = std::vector<Vertex>;  // sorted

// Finite simplicial complex given by its facets.
class SimplicialComplex {
public:
    SimplicialComplex() = default;

    // Sorts faces, drops duplicates and dominated faces.
    static SimplicialComplex fromFacets(std::vector<Face> faces);

    const std::vector<Face>& facets() const { return facets_; }
    const std::vector<Vertex>& vertices() const { return vertices_; }
    int dim() const;
    bool isPure() const;
    bool empty() const { return facets_.empty(); }

    FaceVector faceVector() const;
    // All faces of every dimension (small complexes only).
    std::vector<Face> allFaces() const;
    bool containsFace(const Face& face) const;

    SimplicialComplex star(Vertex v) const;
    SimplicialComplex link(Vertex v) const;
    SimplicialComplex starSet(const std::vector<Vertex>& vs) const;
    SimplicialComplex linkSet(const std::vector<Vertex>& vs) const;
    SimplicialComplex cone(Vertex apex) const;
    static SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b);
    static SimplicialComplex unionOf(const SimplicialComplex& a, const SimplicialComplex& b);
    static SimplicialComplex intersectionOf(const SimplicialComplex& a, const SimplicialComplex& b);
    SimplicialComplex fullSubcomplex(const std::vector<Vertex>& verts) const;

    bool operator==(const SimplicialComplex& o) const { return facets_ == o.facets_; }
    // Backtracking isomorphism test; guarded to |V| <= maxVertices.
    bool isIsomorphic(const SimplicialComplex& o, int maxVertices = 40) const;

    std::string toFacetText() const;  // one facet per line, ids comma-separated
    static SimplicialComplex fromFacetText(const std::string& text);
    std::string toJsonText() const;  // {"vertices": [...], "facets": [[...], ...]}
    static SimplicialComplex fromJsonText(const std::string& text);

private:
    std::vector<Face> facets_;    // sorted faces, sorted lexicographically
    std::vector<Vertex> vertices_;
};

}  // namespace cck

#endif
