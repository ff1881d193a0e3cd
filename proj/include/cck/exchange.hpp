#ifndef CCK_EXCHANGE_HPP
#define CCK_EXCHANGE_HPP

#include <optional>
#include <string>
#include <vector>

#include "cck/intmat.hpp"

namespace cck {

// Positive diagonal d with d_i * b_ij = -d_j * b_ji; stored in the
// componentwise-minimal positive integer form.
struct SkewSymmetrizer {
    std::vector<long long> d;
    bool operator==(const SkewSymmetrizer&) const = default;
};

std::optional<SkewSymmetrizer> findSkewSymmetrizer(const IntMat& b);

// Skew-symmetrizable integer matrix, validated at construction.
class ExchangeMatrix {
public:
    explicit ExchangeMatrix(IntMat b);
    static ExchangeMatrix fromJsonText(const std::string& text);

    const IntMat& mat() const { return b_; }
    int rank() const { return b_.rows(); }
    const SkewSymmetrizer& symmetrizer() const { return d_; }
    std::string toJsonText() const;

private:
    IntMat b_;
    SkewSymmetrizer d_;
};

// Matrix mutation in direction k (0-based). Works on square matrices and
// on stacked (rows > cols) principal-coefficient matrices.
IntMat matrixMutate(const IntMat& b, int k);

struct ValuedArrow {
    int from = 0;
    int to = 0;
    long long v1 = 0;  //  b_{from,to}
    long long v2 = 0;  // -b_{to,from}
    bool operator==(const ValuedArrow&) const = default;
};

struct ValuedQuiver {
    int n = 0;
    std::vector<ValuedArrow> arrows;  // sorted by (from, to)
    std::vector<long long> d;

    static ValuedQuiver of(const ExchangeMatrix& b);
    IntMat matrixOf() const;
    std::string toText() const;  // "i -> j (a,b)" lines plus "d: [..]"
    bool operator==(const ValuedQuiver&) const = default;
};

ValuedQuiver quiverMutate(const ValuedQuiver& q, int k);

// The three-step combinatorial rule for skew-symmetric quivers, kept as an
// independent route for cross-checking against matrixMutate.
IntMat quiverMutateThreeStep(const IntMat& skewSymmetric, int k);

IntMat cartanCompanion(const IntMat& b);

enum class DynkinFamily : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

struct DynkinComponent {
    DynkinFamily family;
    int rank;
    auto operator<=>(const DynkinComponent&) const = default;
};

struct DynkinType {
    std::vector<DynkinComponent> components;  // kept sorted

    DynkinType() = default;
    explicit DynkinType(std::vector<DynkinComponent> comps);
    int rank() const;
    std::string toString() const;  // e.g. "A3", "A2 x B3"
    bool operator==(const DynkinType&) const = default;
};

// Classifies a (generalized) Cartan matrix against the finite list,
// ignoring orientation. nullopt when not of finite type.
std::optional<DynkinType> classifyDynkin(const IntMat& cartan);

struct SinkSourceResult {
    enum class Kind { Sink, Source, Neither } kind;
    bool both = false;  // isolated vertex: vacuously sink and source
};

SinkSourceResult isSinkOrSource(const IntMat& b, int k);

// Lexicographically minimal matrix over simultaneous row/column
// permutations. Exact; guarded for n <= 12.
IntMat canonicalPermForm(const IntMat& b);
bool permutationEquivalent(const IntMat& a, const IntMat& b);
// Permutation-invariant hash, cheap prefilter for permutationEquivalent.
std::size_t permInvariantHash(const IntMat& b);

}  // namespace cck

#endif
