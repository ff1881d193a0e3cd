#include "cck/intmat.hpp"

#include <sstream>

#include "cck/errors.hpp"

namespace cck {

IntMat::IntMat(int rows, int cols, std::vector<long long> entries)
    : rows_(rows), cols_(cols), v_(std::move(entries)) {
    if (v_.size() != static_cast<size_t>(rows) * cols) throw InvalidInput("matrix entry count mismatch");
}

IntMat IntMat::identity(int n) {
    IntMat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMat IntMat::fromRows(const std::vector<std::vector<long long>>& rows) {
    if (rows.empty()) return IntMat(0, 0);
    IntMat m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
    for (int i = 0; i < m.rows(); ++i) {
        if (rows[i].size() != static_cast<size_t>(m.cols())) throw InvalidInput("ragged matrix rows");
        for (int j = 0; j < m.cols(); ++j) m(i, j) = rows[i][j];
    }
    return m;
}

IntMat IntMat::transposed() const {
    IntMat t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

IntMat IntMat::negated() const {
    IntMat t = *this;
    for (auto& x : t.v_) x = -x;
    return t;
}

IntMat IntMat::topRows(int r) const {
    IntMat t(r, cols_);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < cols_; ++j) t(i, j) = (*this)(i, j);
    return t;
}

IntMat IntMat::bottomRows(int r) const {
    IntMat t(r, cols_);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < cols_; ++j) t(i, j) = (*this)(rows_ - r + i, j);
    return t;
}

IntMat IntMat::stackedOn(const IntMat& below) const {
    if (cols_ != below.cols_) throw InvalidInput("stack: column mismatch");
    IntMat t(rows_ + below.rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t(i, j) = (*this)(i, j);
    for (int i = 0; i < below.rows_; ++i)
        for (int j = 0; j < cols_; ++j) t(rows_ + i, j) = below(i, j);
    return t;
}

IntMat IntMat::withoutRowCol(int k) const {
    IntMat t(rows_ - 1, cols_ - 1);
    for (int i = 0, ti = 0; i < rows_; ++i) {
        if (i == k) continue;
        for (int j = 0, tj = 0; j < cols_; ++j) {
            if (j == k) continue;
            t(ti, tj) = (*this)(i, j);
            ++tj;
        }
        ++ti;
    }
    return t;
}

IntMat IntMat::permuted(const std::vector<int>& perm) const {
    IntMat t(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t(i, j) = (*this)(perm[i], perm[j]);
    return t;
}

std::vector<long long> IntMat::column(int j) const {
    std::vector<long long> c(rows_);
    for (int i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
}

std::size_t IntMat::hash() const {
    std::size_t h = static_cast<std::size_t>(rows_) * 1000003u + cols_;
    for (long long x : v_) h = hashCombine(h, static_cast<std::size_t>(x) * 0x9ddfea08eb382d69ULL + 1);
    return h;
}

std::string IntMat::toString() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < rows_; ++i) {
        os << (i ? ",[" : "[");
        for (int j = 0; j < cols_; ++j) os << (j ? "," : "") << (*this)(i, j);
        os << "]";
    }
    os << "]";
    return os.str();
}

}  // namespace cck
