#ifndef CCK_LAURENT_HPP
#define CCK_LAURENT_HPP

#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "cck/intmat.hpp"

namespace cck {

using BigInt = boost::multiprecision::cpp_int;
using Expo = std::vector<int>;  // exponent vector, possibly negative entries

// Graded lex: compare total degree first, ties lexicographically.
bool gradedLexLess(const Expo& a, const Expo& b);

// Exact multivariate Laurent polynomial over arbitrary-precision
// integers. Terms are kept in descending graded-lex order with nonzero
// coefficients; equality is structural.
class Laurent {
public:
    struct Term {
        Expo e;
        BigInt c;
        bool operator==(const Term&) const = default;
    };

    Laurent() = default;
    static Laurent zero(int n) { return Laurent(n, {}); }
    static Laurent constant(int n, BigInt c);
    static Laurent one(int n) { return constant(n, 1); }
    static Laurent variable(int n, int i, int power = 1);
    static Laurent monomial(Expo e, BigInt c);

    int vars() const { return n_; }
    bool isZero() const { return terms_.empty(); }
    size_t termCount() const { return terms_.size(); }
    const std::vector<Term>& terms() const { return terms_; }
    const Term& lead() const { return terms_.front(); }

    Laurent operator+(const Laurent& o) const;
    Laurent operator-(const Laurent& o) const;
    Laurent operator*(const Laurent& o) const;
    Laurent pow(long long k) const;  // k >= 0

    bool operator==(const Laurent&) const = default;
    std::size_t hash() const;

    std::string toString() const;
    static Laurent parse(const std::string& text, int n);

private:
    Laurent(int n, std::vector<Term> terms) : n_(n), terms_(std::move(terms)) {}
    int n_ = 0;
    std::vector<Term> terms_;

    friend Laurent exactDiv(const Laurent& p, const Laurent& q);
};

// Exact division in the Laurent ring; throws EngineBug when q does not
// divide p (the mutation engine relies on the Laurent phenomenon).
Laurent exactDiv(const Laurent& p, const Laurent& q);

// Exchange relation for a cluster: ( prod x_i^{[b_ik]_+} + prod
// x_i^{[-b_ik]_+} ) / x_k, dividing by the full polynomial x_k.
Laurent variableMutate(const std::vector<Laurent>& clusterVars, const IntMat& b, int k);

struct LaurentHash {
    std::size_t operator()(const Laurent& p) const { return p.hash(); }
};

using VarId = std::int32_t;
using GVec = std::vector<long long>;

struct GVecHash {
    std::size_t operator()(const GVec& g) const {
        std::size_t h = g.size();
        for (long long x : g) h = hashCombine(h, static_cast<std::size_t>(x));
        return h;
    }
};

enum class VariableIdentity { Laurent, GVector, Both };

// Interning store for cluster variables. Identity is by canonical Laurent
// polynomial, by g-vector (fast mode), or both with a bijection assertion.
// insert-or-get is safe under concurrent use; ids are deterministic when
// interning happens in a deterministic order. References returned by
// poly()/gvec() stay valid only while no intern() runs concurrently.
class VariableRegistry {
public:
    explicit VariableRegistry(VariableIdentity mode) : mode_(mode) {}

    VariableIdentity mode() const { return mode_; }
    VarId intern(std::optional<Laurent> poly, std::optional<GVec> g);
    VarId internLaurent(Laurent p) { return intern(std::move(p), std::nullopt); }

    size_t size() const;
    const std::optional<Laurent>& poly(VarId id) const { return entries_[id].poly; }
    const std::optional<GVec>& gvec(VarId id) const { return entries_[id].g; }
    std::string name(VarId id) const;  // Laurent string, or g-vector text

private:
    struct Entry {
        std::optional<Laurent> poly;
        std::optional<GVec> g;
    };
    VariableIdentity mode_;
    mutable std::mutex mu_;
    std::vector<Entry> entries_;
    std::unordered_map<Laurent, VarId, LaurentHash> byPoly_;
    std::unordered_map<GVec, VarId, GVecHash> byG_;
};

}  // namespace cck

#endif
