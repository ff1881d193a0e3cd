#ifndef CCK_INTMAT_HPP
#define CCK_INTMAT_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace cck {

// Dense integer matrix, row-major. Small: ranks here are <= 10, and the
// stacked principal-coefficient matrices are 2n x n.
class IntMat {
public:
    IntMat() = default;
    IntMat(int rows, int cols) : rows_(rows), cols_(cols), v_(static_cast<size_t>(rows) * cols, 0) {}
    IntMat(int rows, int cols, std::vector<long long> entries);

    static IntMat identity(int n);
    static IntMat fromRows(const std::vector<std::vector<long long>>& rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    long long operator()(int i, int j) const { return v_[static_cast<size_t>(i) * cols_ + j]; }
    long long& operator()(int i, int j) { return v_[static_cast<size_t>(i) * cols_ + j]; }

    bool operator==(const IntMat&) const = default;

    IntMat transposed() const;
    IntMat negated() const;
    IntMat topRows(int r) const;
    IntMat bottomRows(int r) const;
    IntMat stackedOn(const IntMat& below) const;

    // Square only: remove row and column k.
    IntMat withoutRowCol(int k) const;
    // Square only: out(i,j) = in(perm[i], perm[j]).
    IntMat permuted(const std::vector<int>& perm) const;

    std::vector<long long> column(int j) const;
    std::size_t hash() const;
    std::string toString() const;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<long long> v_;
};

struct IntMatHash {
    std::size_t operator()(const IntMat& m) const { return m.hash(); }
};

inline std::size_t hashCombine(std::size_t seed, std::size_t v) {
    return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace cck

#endif
